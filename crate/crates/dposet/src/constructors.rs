//! The polytopes of posets, double posets and graphs, with vertex and facet
//! descriptions taken from their combinatorics.

use std::fmt;

use num_traits::{One, Zero};

use crate::antiblocking;
use crate::geometry::{hull, linalg, q, AffineLattice, Inequality, QPolytope};
use crate::poset::{bit, bits, AltChain, DoublePoset, Graph, Poset, Set, Sign};
use crate::{Error, Result, Q};

/// What a vertex stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexTag {
    /// Indicator vector of a filter on the given side.
    Filter(Sign, Set),
    /// Indicator vector of an antichain (or stable set) on the given side.
    Antichain(Sign, Set),
    /// `1_A - 1_B` for sets of the plus and minus side.
    Difference(Set, Set),
    /// Alternating-sign vector of a chain.
    Chain(Set),
    /// A vertex with no combinatorial label.
    Point,
}

/// What a facet inequality stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FacetTag {
    /// `f(a) <= f(b)` for a cover `a < b`.
    Cover(usize, usize),
    /// `0 <= f(b)` for a minimal element.
    Lower(usize),
    /// `f(a) <= 1` for a maximal element.
    Upper(usize),
    /// `0 <= g(a)`.
    NonNegative(usize),
    /// Sum over a chain (or clique) of the given side.
    Chain(Sign, Set),
    /// `l_C(f) - sgn(C) t <= 1`, or `l_C(f) <= 1` on the reduced polytope.
    Alternating(AltChain),
    /// `0 <= h(F)` (`false`) or `h(F) <= 1` (`true`) for a filter `F`.
    FilterSum(Set, bool),
    /// An inequality computed by double description.
    Computed,
}

/// A polytope together with the combinatorial meaning of its vertices and
/// facets.
#[derive(Clone, Debug)]
pub struct LabeledPolytope {
    pub poly: QPolytope,
    pub vertex_tags: Vec<VertexTag>,
    /// Parallel to `poly.inequalities` when present.
    pub facet_tags: Vec<FacetTag>,
}

impl LabeledPolytope {
    fn new(poly: QPolytope, vertex_tags: Vec<VertexTag>, facet_tags: Vec<FacetTag>) -> LabeledPolytope {
        LabeledPolytope { poly, vertex_tags, facet_tags }
    }

    /// Drops inequalities that are not facets, keeping the tags aligned.
    fn prune(mut self) -> Result<LabeledPolytope> {
        let keep = self.poly.facet_indices()?;
        let ineqs = self.poly.inequalities()?;
        let kept: Vec<Inequality> = keep.iter().map(|&i| ineqs[i].clone()).collect();
        self.facet_tags = keep.iter().map(|&i| self.facet_tags[i].clone()).collect();
        self.poly.inequalities = Some(kept);
        Ok(self)
    }

    /// Index of the vertex with the given tag.
    pub fn vertex_index(&self, tag: &VertexTag) -> Option<usize> {
        self.vertex_tags.iter().position(|t| t == tag)
    }
}

fn fmt_set(labels: &[String], s: Set) -> String {
    let names: Vec<&str> = bits(s).map(|i| labels[i].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

impl VertexTag {
    pub fn describe(&self, labels: &[String]) -> String {
        match self {
            VertexTag::Filter(s, f) => format!("filter{} {}", s.symbol(), fmt_set(labels, *f)),
            VertexTag::Antichain(s, a) => format!("antichain{} {}", s.symbol(), fmt_set(labels, *a)),
            VertexTag::Difference(a, b) => format!("{} - {}", fmt_set(labels, *a), fmt_set(labels, *b)),
            VertexTag::Chain(c) => format!("chain {}", fmt_set(labels, *c)),
            VertexTag::Point => "point".into(),
        }
    }
}

impl FacetTag {
    pub fn describe(&self, labels: &[String]) -> String {
        match self {
            FacetTag::Cover(a, b) => format!("cover {} < {}", labels[*a], labels[*b]),
            FacetTag::Lower(b) => format!("lower {}", labels[*b]),
            FacetTag::Upper(a) => format!("upper {}", labels[*a]),
            FacetTag::NonNegative(a) => format!("nonnegative {}", labels[*a]),
            FacetTag::Chain(s, c) => format!("chain{} {}", s.symbol(), fmt_set(labels, *c)),
            FacetTag::Alternating(c) => format!("alternating {}", c.display(labels)),
            FacetTag::FilterSum(f, upper) => format!("filter {} {}", fmt_set(labels, *f), if *upper { "<= 1" } else { ">= 0" }),
            FacetTag::Computed => "computed".into(),
        }
    }
}

impl fmt::Display for VertexTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// `scale * 1_S` in `n` coordinates, optionally followed by a height.
fn indicator(n: usize, s: Set, scale: i64, height: Option<i64>) -> Vec<Q> {
    let mut v: Vec<Q> = (0..n).map(|i| if s & bit(i) != 0 { q(scale) } else { Q::zero() }).collect();
    if let Some(h) = height {
        v.push(q(h));
    }
    v
}

fn set_functional(n: usize, s: Set, sign: i64, height: Option<i64>) -> Vec<Q> {
    indicator(n, s, sign, height)
}

/// The order polytope: indicator vectors of filters, cut out by cover,
/// minimum and maximum inequalities.
pub fn order_polytope(p: &Poset) -> Result<LabeledPolytope> {
    let n = p.n();
    let filters = p.filters()?;
    let verts = filters.iter().map(|&f| indicator(n, f, 1, None)).collect();
    let vtags = filters.iter().map(|&f| VertexTag::Filter(Sign::Plus, f)).collect();
    let mut ineqs = Vec::new();
    let mut ftags = Vec::new();
    for (a, b) in p.covers() {
        let mut v = vec![Q::zero(); n];
        v[a] = Q::one();
        v[b] = -Q::one();
        ineqs.push(Inequality::new(v, Q::zero()));
        ftags.push(FacetTag::Cover(a, b));
    }
    for b in bits(p.min_of(p.ground())) {
        ineqs.push(Inequality::new(indicator(n, bit(b), -1, None), Q::zero()));
        ftags.push(FacetTag::Lower(b));
    }
    for a in bits(p.max_of(p.ground())) {
        ineqs.push(Inequality::new(indicator(n, bit(a), 1, None), Q::one()));
        ftags.push(FacetTag::Upper(a));
    }
    Ok(LabeledPolytope::new(QPolytope::new(n, Some(verts), Some(ineqs)), vtags, ftags))
}

/// The chain polytope: indicator vectors of antichains, cut out by
/// nonnegativity and maximal chain sums.
pub fn chain_polytope(p: &Poset) -> Result<LabeledPolytope> {
    let n = p.n();
    let anti = p.antichains()?;
    let verts = anti.iter().map(|&a| indicator(n, a, 1, None)).collect();
    let vtags = anti.iter().map(|&a| VertexTag::Antichain(Sign::Plus, a)).collect();
    let mut ineqs = Vec::new();
    let mut ftags = Vec::new();
    for a in 0..n {
        ineqs.push(Inequality::new(indicator(n, bit(a), -1, None), Q::zero()));
        ftags.push(FacetTag::NonNegative(a));
    }
    for c in p.maximal_chains()? {
        if c != 0 {
            ineqs.push(Inequality::new(indicator(n, c, 1, None), Q::one()));
            ftags.push(FacetTag::Chain(Sign::Plus, c));
        }
    }
    Ok(LabeledPolytope::new(QPolytope::new(n, Some(verts), Some(ineqs)), vtags, ftags))
}

/// The double order polytope, in `R^P x R` with lattice `2Z^P x (2Z+1)`.
/// Facets come from alternating chains and are only available when the
/// double poset is compatible; otherwise the facet description is `None`.
pub fn double_order_polytope(dp: &DoublePoset) -> Result<LabeledPolytope> {
    let n = dp.n();
    let mut verts = Vec::new();
    let mut vtags = Vec::new();
    for (sign, scale) in [(Sign::Plus, 2), (Sign::Minus, -2)] {
        for f in dp.side(sign).filters()? {
            verts.push(indicator(n, f, scale, Some(scale / 2)));
            vtags.push(VertexTag::Filter(sign, f));
        }
    }
    let (ineqs, ftags) = if dp.is_compatible() {
        let mut ineqs = Vec::new();
        let mut ftags = Vec::new();
        for c in dp.alternating_chains() {
            let mut v: Vec<Q> = c.functional(n).into_iter().map(q).collect();
            v.push(q(-c.last_sign().as_i64()));
            ineqs.push(Inequality::new(v, Q::one()));
            ftags.push(FacetTag::Alternating(c));
        }
        (Some(ineqs), ftags)
    } else {
        (None, Vec::new())
    };
    let poly = QPolytope::new(n + 1, Some(verts), ineqs).with_lattice(AffineLattice::doubled(n));
    Ok(LabeledPolytope::new(poly, vtags, ftags))
}

/// Like [`double_order_polytope`] but failing with `NotCompatible` when no
/// facet description exists.
pub fn double_order_polytope_h(dp: &DoublePoset) -> Result<LabeledPolytope> {
    if !dp.is_compatible() {
        return Err(Error::NotCompatible("double order polytope facets need a compatible double poset".into()));
    }
    double_order_polytope(dp)
}

/// The double chain polytope, in `R^P x R` with lattice `2Z^P x (2Z+1)`.
/// Every chain, the empty one included, gives an inequality; non-facets are
/// pruned.
pub fn double_chain_polytope(dp: &DoublePoset) -> Result<LabeledPolytope> {
    let n = dp.n();
    let mut verts = Vec::new();
    let mut vtags = Vec::new();
    let mut ineqs = Vec::new();
    let mut ftags = Vec::new();
    for (sign, scale) in [(Sign::Plus, 2), (Sign::Minus, -2)] {
        let side = dp.side(sign);
        for a in side.antichains()? {
            verts.push(indicator(n, a, scale, Some(scale / 2)));
            vtags.push(VertexTag::Antichain(sign, a));
        }
        let s = scale / 2;
        for c in side.chains()? {
            ineqs.push(Inequality::new(set_functional(n, c, s, Some(-s)), Q::one()));
            ftags.push(FacetTag::Chain(sign, c));
        }
    }
    let poly = QPolytope::new(n + 1, Some(verts), Some(ineqs)).with_lattice(AffineLattice::doubled(n));
    LabeledPolytope::new(poly, vtags, ftags).prune()
}

/// Keeps the candidate points that satisfy every inequality and are tight on
/// a full-rank set of them, i.e. the vertices of the inequality system among
/// the candidates.
fn vertices_among(cands: Vec<(Vec<Q>, VertexTag)>, ineqs: &[Inequality], d: usize) -> (Vec<Vec<Q>>, Vec<VertexTag>) {
    let mut verts: Vec<Vec<Q>> = Vec::new();
    let mut tags = Vec::new();
    for (v, t) in cands {
        if verts.contains(&v) || !ineqs.iter().all(|h| h.satisfied(&v)) {
            continue;
        }
        let tight: Vec<Vec<Q>> = ineqs.iter().filter(|h| h.tight(&v)).map(|h| h.normal.clone()).collect();
        if linalg::rank(&tight) == d {
            verts.push(v);
            tags.push(t);
        }
    }
    (verts, tags)
}

/// The reduced double order polytope `O(P+) - O(P-)`. Vertices are the
/// differences `1_F+ - 1_F-` with `min F+ ∩ min F- = ∅` and
/// `max(P \ F+) ∩ max(P \ F-) = ∅`; facets come from proper alternating
/// chains.
pub fn reduced_order_polytope(dp: &DoublePoset) -> Result<LabeledPolytope> {
    if !dp.is_compatible() {
        return Err(Error::NotCompatible("reduced double order polytope needs a compatible double poset".into()));
    }
    let n = dp.n();
    let (pp, pm) = (dp.plus(), dp.minus());
    let full = pp.ground();
    let fm = pm.filters()?;
    let mut verts = Vec::new();
    let mut vtags = Vec::new();
    for fp in pp.filters()? {
        for &g in &fm {
            if pp.min_of(fp) & pm.min_of(g) == 0 && pp.max_of(full & !fp) & pm.max_of(full & !g) == 0 {
                let v: Vec<Q> = (0..n).map(|i| q((fp >> i & 1) as i64 - (g >> i & 1) as i64)).collect();
                verts.push(v);
                vtags.push(VertexTag::Difference(fp, g));
            }
        }
    }
    let mut ineqs = Vec::new();
    let mut ftags = Vec::new();
    for c in dp.alternating_chains() {
        if c.proper() {
            ineqs.push(Inequality::new(c.functional(n).into_iter().map(q).collect(), Q::one()));
            ftags.push(FacetTag::Alternating(c));
        }
    }
    LabeledPolytope::new(QPolytope::new(n, Some(verts), Some(ineqs)), vtags, ftags).prune()
}

/// The reduced double chain polytope `C(P+) - C(P-)`: facets
/// `±<1_C, x> <= 1` for nonempty chains of either side (the vertices of the
/// anti-blocking duals), vertices among the differences of antichain
/// indicators.
pub fn reduced_chain_polytope(dp: &DoublePoset) -> Result<LabeledPolytope> {
    let n = dp.n();
    let (pp, pm) = (dp.plus(), dp.minus());
    let mut ineqs = Vec::new();
    let mut ftags = Vec::new();
    for (sign, side) in [(Sign::Plus, pp), (Sign::Minus, pm)] {
        for c in side.nonempty_chains()? {
            ineqs.push(Inequality::new(indicator(n, c, sign.as_i64(), None), Q::one()));
            ftags.push(FacetTag::Chain(sign, c));
        }
    }
    let am = pm.antichains()?;
    let mut cands = Vec::new();
    for a in pp.antichains()? {
        for &b in &am {
            if a & b == 0 {
                let v: Vec<Q> = (0..n).map(|i| q((a >> i & 1) as i64 - (b >> i & 1) as i64)).collect();
                cands.push((v, VertexTag::Difference(a, b)));
            }
        }
    }
    let (verts, vtags) = vertices_among(cands, &ineqs, n);
    LabeledPolytope::new(QPolytope::new(n, Some(verts), Some(ineqs)), vtags, ftags).prune()
}

/// Both reduced polytopes.
pub fn reduced_polytopes(dp: &DoublePoset) -> Result<(LabeledPolytope, LabeledPolytope)> {
    Ok((reduced_order_polytope(dp)?, reduced_chain_polytope(dp)?))
}

/// The stable set polytope. Clique inequalities describe it exactly for
/// perfect graphs; for other graphs the facet description is left empty.
pub fn stable_set_polytope(g: &Graph) -> Result<LabeledPolytope> {
    let n = g.n();
    let stable = g.stable_sets()?;
    let verts = stable.iter().map(|&s| indicator(n, s, 1, None)).collect();
    let vtags = stable.iter().map(|&s| VertexTag::Antichain(Sign::Plus, s)).collect();
    if !g.is_perfect()? {
        return Ok(LabeledPolytope::new(QPolytope::new(n, Some(verts), None), vtags, Vec::new()));
    }
    let mut ineqs = Vec::new();
    let mut ftags = Vec::new();
    for a in 0..n {
        ineqs.push(Inequality::new(indicator(n, bit(a), -1, None), Q::zero()));
        ftags.push(FacetTag::NonNegative(a));
    }
    for k in g.maximal_cliques()? {
        if k.count_ones() > 0 {
            ineqs.push(Inequality::new(indicator(n, k, 1, None), Q::one()));
            ftags.push(FacetTag::Chain(Sign::Plus, k));
        }
    }
    LabeledPolytope::new(QPolytope::new(n, Some(verts), Some(ineqs)), vtags, ftags).prune()
}

/// The Hansen polytope `K(2 P_G, -2 P_G)` with lattice `2Z^V x (2Z+1)`.
/// For perfect graphs its facets are `±(<1_K, x> - t) <= 1` over cliques.
pub fn hansen(g: &Graph) -> Result<LabeledPolytope> {
    double_stable_set_polytope(g, g)
}

/// `K(2 P_G+, -2 P_G-)` for two graphs on the same nodes.
pub fn double_stable_set_polytope(gp: &Graph, gm: &Graph) -> Result<LabeledPolytope> {
    let n = gp.n();
    if gm.n() != n {
        return Err(Error::DimensionMismatch { expected: n, got: gm.n() });
    }
    let mut verts = Vec::new();
    let mut vtags = Vec::new();
    for (sign, g, scale) in [(Sign::Plus, gp, 2), (Sign::Minus, gm, -2)] {
        for s in g.stable_sets()? {
            verts.push(indicator(n, s, scale, Some(scale / 2)));
            vtags.push(VertexTag::Antichain(sign, s));
        }
    }
    let lattice = AffineLattice::doubled(n);
    if !(gp.is_perfect()? && gm.is_perfect()?) {
        let poly = QPolytope::new(n + 1, Some(verts), None).with_lattice(lattice).ensure_inequalities()?;
        let k = poly.inequalities()?.len();
        return Ok(LabeledPolytope::new(poly, vtags, vec![FacetTag::Computed; k]));
    }
    let mut ineqs = Vec::new();
    let mut ftags = Vec::new();
    for (sign, g) in [(Sign::Plus, gp), (Sign::Minus, gm)] {
        let s = sign.as_i64();
        for k in g.cliques()? {
            ineqs.push(Inequality::new(set_functional(n, k, s, Some(-s)), Q::one()));
            ftags.push(FacetTag::Chain(sign, k));
        }
    }
    let poly = QPolytope::new(n + 1, Some(verts), Some(ineqs)).with_lattice(lattice);
    LabeledPolytope::new(poly, vtags, ftags).prune()
}

/// Coefficients of `l'_C(f) = sum_i (-1)^(k-i) f(a_i)` for a chain
/// `a_0 < ... < a_k`: the top element gets `+1`, signs alternate downwards.
pub fn valuation_vector(p: &Poset, c: Set) -> Vec<Q> {
    let mut elems: Vec<usize> = bits(c).collect();
    elems.sort_by_key(|&a| std::cmp::Reverse(p.down(a).count_ones()));
    let mut v = vec![Q::zero(); p.n()];
    for (j, a) in elems.into_iter().enumerate() {
        v[a] = if j % 2 == 0 { Q::one() } else { -Q::one() };
    }
    v
}

/// The valuation polytope: alternating chain vectors, cut out by
/// `0 <= h(F) <= 1` over nonempty filters.
pub fn valuation_polytope(p: &Poset) -> Result<LabeledPolytope> {
    let n = p.n();
    let mut ineqs = Vec::new();
    let mut ftags = Vec::new();
    for f in p.filters()? {
        if f == 0 {
            continue;
        }
        ineqs.push(Inequality::new(indicator(n, f, -1, None), Q::zero()));
        ftags.push(FacetTag::FilterSum(f, false));
        ineqs.push(Inequality::new(indicator(n, f, 1, None), Q::one()));
        ftags.push(FacetTag::FilterSum(f, true));
    }
    let cands = p.chains()?.into_iter().map(|c| (valuation_vector(p, c), VertexTag::Chain(c))).collect();
    let (verts, vtags) = vertices_among(cands, &ineqs, n);
    LabeledPolytope::new(QPolytope::new(n, Some(verts), Some(ineqs)), vtags, ftags).prune()
}

/// `conv(P ∪ -Q)`. When both are anti-blocking its vertices are the nonzero
/// vertices of `P` and `-Q`; otherwise extreme points are computed.
pub fn gamma(p: &QPolytope, qp: &QPolytope) -> Result<LabeledPolytope> {
    let d = p.ambient_dim;
    if qp.ambient_dim != d {
        return Err(Error::DimensionMismatch { expected: d, got: qp.ambient_dim });
    }
    let neg: Vec<Vec<Q>> = qp.vertices()?.iter().map(|v| v.iter().map(|x| -x).collect()).collect();
    let union: Vec<Vec<Q>> = p.vertices()?.iter().cloned().chain(neg).collect();
    let verts = if antiblocking::is_antiblocking(p)? && antiblocking::is_antiblocking(qp)? {
        let zero = vec![Q::zero(); d];
        let mut v: Vec<Vec<Q>> = Vec::new();
        for x in union {
            if x != zero && !v.contains(&x) {
                v.push(x);
            }
        }
        v
    } else {
        hull::extreme_points(&union)?
    };
    let poly = QPolytope::new(d, Some(verts), None).ensure_inequalities()?;
    let (nv, nf) = (poly.vertices()?.len(), poly.inequalities()?.len());
    Ok(LabeledPolytope::new(poly, vec![VertexTag::Point; nv], vec![FacetTag::Computed; nf]))
}

/// The twisted prism `K(P, -P) = conv(P x {1} ∪ -P x {-1})`.
pub fn twisted_prism(p: &QPolytope) -> Result<LabeledPolytope> {
    let d = p.ambient_dim;
    let mut verts = Vec::new();
    for v in p.vertices()? {
        let mut a = v.clone();
        a.push(Q::one());
        verts.push(a);
    }
    for v in p.vertices()? {
        let mut b: Vec<Q> = v.iter().map(|x| -x).collect();
        b.push(-Q::one());
        verts.push(b);
    }
    let poly = QPolytope::new(d + 1, Some(verts), None).ensure_inequalities()?;
    let (nv, nf) = (poly.vertices()?.len(), poly.inequalities()?.len());
    Ok(LabeledPolytope::new(poly, vec![VertexTag::Point; nv], vec![FacetTag::Computed; nf]))
}

/// `-P`.
pub fn negate(p: &QPolytope) -> QPolytope {
    let vertices = p.vertices.as_ref().map(|vs| vs.iter().map(|v| v.iter().map(|x| -x).collect()).collect());
    let inequalities = p
        .inequalities
        .as_ref()
        .map(|hs| hs.iter().map(|h| Inequality::new(h.normal.iter().map(|x| -x).collect(), h.rhs.clone())).collect());
    QPolytope::new(p.ambient_dim, vertices, inequalities)
}

/// Outcome of the sublattice face test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceTest {
    pub is_face: bool,
    /// Dimension of the face, `-1` for the empty face.
    pub dim: Option<isize>,
}

/// Whether `L` is an embedded sublattice of the filter lattice `all`:
/// `F ∪ F', F ∩ F' ∈ L` iff `F, F' ∈ L`.
pub fn is_embedded_sublattice(all: &[Set], l: &[Set]) -> bool {
    let inl = |f: Set| l.contains(&f);
    if !l.iter().all(|f| all.contains(f)) {
        return false;
    }
    for (i, &f) in all.iter().enumerate() {
        for &g in &all[i..] {
            if (inl(f | g) && inl(f & g)) != (inl(f) && inl(g)) {
                return false;
            }
        }
    }
    true
}

/// The cooperating condition in its local form: for `F+ ∈ L+`, `F- ∈ L-`,
/// removing any `A ⊆ min F+ ∩ min F-` and adding any
/// `B ⊆ max(P \ F+) ∩ max(P \ F-)` stays inside `L` on both sides.
pub fn is_cooperating(dp: &DoublePoset, lp: &[Set], lm: &[Set]) -> bool {
    let (pp, pm) = (dp.plus(), dp.minus());
    let full = pp.ground();
    for &fp in lp {
        for &fm in lm {
            let amin = pp.min_of(fp) & pm.min_of(fm);
            let bmax = pp.max_of(full & !fp) & pm.max_of(full & !fm);
            for (base, add) in [(amin, false), (bmax, true)] {
                let mut sub = base;
                loop {
                    let (np, nm) = if add { (fp | sub, fm | sub) } else { (fp & !sub, fm & !sub) };
                    if !lp.contains(&np) || !lm.contains(&nm) {
                        return false;
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & base;
                }
            }
        }
    }
    true
}

/// The cooperating condition as a statement about pairs of nested filters:
/// whenever `F+' \ F+ = F-' \ F-`, `{F+, F-} ⊆ L` iff `{F+', F-'} ⊆ L`.
pub fn is_cooperating_pairs(dp: &DoublePoset, lp: &[Set], lm: &[Set]) -> Result<bool> {
    let bp = dp.plus().filters()?;
    let bm = dp.minus().filters()?;
    for &a in &bp {
        for &a2 in &bp {
            if a & !a2 != 0 {
                continue;
            }
            let d = a2 & !a;
            for &b in &bm {
                let b2 = b | d;
                if b & d != 0 || !bm.contains(&b2) {
                    continue;
                }
                let lower = lp.contains(&a) && lm.contains(&b);
                let upper = lp.contains(&a2) && lm.contains(&b2);
                if lower != upper {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Chains (under inclusion) of a family of filters, as `(length, union of
/// minimal-element sets)`.
fn filter_chains(p: &Poset, l: &[Set]) -> Vec<(usize, Set)> {
    let mut sorted = l.to_vec();
    sorted.sort_by_key(|f| f.count_ones());
    let mut out = vec![(0usize, 0 as Set)];
    fn grow(p: &Poset, sorted: &[Set], start: usize, top: Option<Set>, len: usize, mins: Set, out: &mut Vec<(usize, Set)>) {
        for i in start..sorted.len() {
            let f = sorted[i];
            if let Some(t) = top {
                if t & !f != 0 || t == f {
                    continue;
                }
            }
            let m = mins | p.min_of(f);
            out.push((len + 1, m));
            grow(p, sorted, i + 1, Some(f), len + 1, m, out);
        }
    }
    grow(p, &sorted, 0, None, 0, 0, &mut out);
    out
}

/// Largest `|C+| + |C-|` over non-interfering pairs of chains inside `L`.
pub fn non_interfering_length(dp: &DoublePoset, lp: &[Set], lm: &[Set]) -> usize {
    let cp = filter_chains(dp.plus(), lp);
    let cm = filter_chains(dp.minus(), lm);
    let mut best = 0;
    for &(a, ma) in &cp {
        for &(b, mb) in &cm {
            if ma & mb == 0 {
                best = best.max(a + b);
            }
        }
    }
    best
}

/// Decides whether the tagged vertices of `L = L+ ⊎ L-` span a face of the
/// double order polytope, and its dimension, from the lattice conditions
/// alone.
pub fn sublattice_face_test(dp: &DoublePoset, lp: &[Set], lm: &[Set]) -> Result<FaceTest> {
    if !dp.is_compatible() {
        return Err(Error::NotCompatible("face test needs a compatible double poset".into()));
    }
    let bp = dp.plus().filters()?;
    let bm = dp.minus().filters()?;
    for f in lp {
        if !bp.contains(f) {
            return Err(Error::InvalidInput(format!("{} is not a filter of the plus order", dp.plus().fmt_set(*f))));
        }
    }
    for f in lm {
        if !bm.contains(f) {
            return Err(Error::InvalidInput(format!("{} is not a filter of the minus order", dp.minus().fmt_set(*f))));
        }
    }
    let ok = is_embedded_sublattice(&bp, lp) && is_embedded_sublattice(&bm, lm) && is_cooperating(dp, lp, lm);
    if !ok {
        return Ok(FaceTest { is_face: false, dim: None });
    }
    Ok(FaceTest { is_face: true, dim: Some(non_interfering_length(dp, lp, lm) as isize - 1) })
}

/// Polytope selectors understood by [`build`].
pub const POLYTOPES: &[&str] =
    &["order", "chain", "tord", "tchain", "dord", "dchain", "hansen", "valuation", "gamma", "twisted-prism"];

/// Builds a polytope by name. Single-poset constructions use the plus order;
/// `hansen` uses its comparability graph.
pub fn build(name: &str, dp: &DoublePoset) -> Result<LabeledPolytope> {
    let p = dp.plus();
    match name {
        "order" => order_polytope(p),
        "chain" => chain_polytope(p),
        "tord" => double_order_polytope(dp),
        "tchain" => double_chain_polytope(dp),
        "dord" => reduced_order_polytope(dp),
        "dchain" => reduced_chain_polytope(dp),
        "hansen" => hansen(&p.comparability_graph()),
        "valuation" => valuation_polytope(p),
        "gamma" => {
            let o = order_polytope(p)?.poly;
            gamma(&o, &o)
        }
        "twisted-prism" => twisted_prism(&valuation_polytope(p)?.poly),
        _ => Err(Error::InvalidInput(format!("unknown polytope '{name}' (expected one of {})", POLYTOPES.join(", ")))),
    }
}

//! Transfer maps between order and chain polytopes, the double transfer map,
//! the non-interfering complex and the canonical triangulations it gives.

use fixedbitset::FixedBitSet;
use num_traits::{One, Zero};
use rand::Rng;

use crate::constructors::{chain_polytope, double_chain_polytope, double_order_polytope_h, order_polytope, LabeledPolytope, VertexTag};
use crate::geometry::triangulation::{self, Simplex};
use crate::geometry::{lattice, q, QPolytope};
use crate::poset::{bit, bits, Compatibility, DoublePoset, Poset, Set, Sign};
use crate::{Error, Result, Q};

fn check_len(p: &Poset, v: &[Q]) -> Result<()> {
    if v.len() != p.n() {
        return Err(Error::DimensionMismatch { expected: p.n(), got: v.len() });
    }
    Ok(())
}

/// `(Φf)(b) = min{f(b) - f(a) : a covered by b}`, where a minimal `b` is
/// covered by a virtual bottom with `f = 0`.
pub fn transfer(p: &Poset, f: &[Q]) -> Result<Vec<Q>> {
    check_len(p, f)?;
    let mut below: Vec<Vec<usize>> = vec![Vec::new(); p.n()];
    for (a, b) in p.covers() {
        below[b].push(a);
    }
    Ok((0..p.n())
        .map(|b| {
            let lows = below[b].iter().map(|&a| &f[b] - &f[a]);
            if below[b].is_empty() {
                f[b].clone()
            } else {
                lows.min().expect("nonempty")
            }
        })
        .collect())
}

/// `(Φ^{-1}g)(b) = max{g(a_0) + ... + g(a_k) : a_0 < ... < a_k <= b}`, the
/// empty chain included, so negative entries never contribute.
pub fn inverse_transfer(p: &Poset, g: &[Q]) -> Result<Vec<Q>> {
    check_len(p, g)?;
    let best = best_chain_ends(p, g);
    Ok((0..p.n()).map(|b| bits(p.down(b)).map(|a| best[a].clone()).fold(Q::zero(), |m, x| if x > m { x } else { m })).collect())
}

/// For each `a`, the largest sum of `g` over a chain ending exactly in `a`.
fn best_chain_ends(p: &Poset, g: &[Q]) -> Vec<Q> {
    let mut best = vec![Q::zero(); p.n()];
    for a in p.linear_extension() {
        best[a] = &g[a] + below_best(p, &best, a);
    }
    best
}

/// `max(0, max{best[c] : c < a})`.
fn below_best(p: &Poset, best: &[Q], a: usize) -> Q {
    bits(p.down(a) & !bit(a)).map(|c| &best[c]).fold(Q::zero(), |m, x| if *x > m { x.clone() } else { m })
}

/// `Ψ(g) = Φ^{-1}_{P+}(g) - Φ^{-1}_{P-}(-g)`.
pub fn psi(dp: &DoublePoset, g: &[Q]) -> Result<Vec<Q>> {
    let neg: Vec<Q> = g.iter().map(|x| -x).collect();
    let a = inverse_transfer(dp.plus(), g)?;
    let b = inverse_transfer(dp.minus(), &neg)?;
    Ok(a.iter().zip(&b).map(|(x, y)| x - y).collect())
}

/// `Ψ^{-1}` along the common linear extension found by the compatibility
/// test.
pub fn psi_inverse(dp: &DoublePoset, f: &[Q]) -> Result<Vec<Q>> {
    match dp.compatibility() {
        Compatibility::Compatible(order) => psi_inverse_along(dp, &order, f),
        Compatibility::Cycle(_) => Err(Error::NotCompatible("the double transfer map is only invertible for compatible double posets".into())),
    }
}

/// `Ψ^{-1}` along a given common linear extension: with `R` and `S` the best
/// chain sums strictly below `b` on either side, `g(b) = f(b) - R + S`.
pub fn psi_inverse_along(dp: &DoublePoset, order: &[usize], f: &[Q]) -> Result<Vec<Q>> {
    let n = dp.n();
    check_len(dp.plus(), f)?;
    let mut pos = vec![usize::MAX; n];
    for (i, &a) in order.iter().enumerate() {
        pos[a] = i;
    }
    let respects = |p: &Poset| p.relations().iter().all(|&(a, b)| a == b || pos[a] < pos[b]);
    if order.len() != n || pos.contains(&usize::MAX) || !respects(dp.plus()) || !respects(dp.minus()) {
        return Err(Error::NotCompatible("order is not a common linear extension".into()));
    }
    let mut g = vec![Q::zero(); n];
    let mut bp = vec![Q::zero(); n];
    let mut bm = vec![Q::zero(); n];
    for &b in order {
        let r = below_best(dp.plus(), &bp, b);
        let s = below_best(dp.minus(), &bm, b);
        g[b] = &f[b] - &r + &s;
        bp[b] = &g[b] + r;
        bm[b] = -&g[b] + s;
    }
    Ok(g)
}

/// A second common linear extension, preferring the largest available
/// index, used to check that `Ψ^{-1}` does not depend on the choice.
pub fn alternative_common_extension(dp: &DoublePoset) -> Option<Vec<usize>> {
    let n = dp.n();
    let below = |a: usize| (dp.plus().down(a) | dp.minus().down(a)) & !bit(a);
    let mut placed: Set = 0;
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let a = (0..n).rev().find(|&a| placed & bit(a) == 0 && below(a) & !placed == 0)?;
        placed |= bit(a);
        out.push(a);
    }
    Some(out)
}

/// The non-interfering complex: vertices are filters of either side, faces
/// are pairs of chains of filters with `min F+ ∩ min F- = ∅` across sides.
#[derive(Clone, Debug)]
pub struct NonInterferingComplex {
    /// Plus filters first, then minus filters, each in enumeration order.
    pub vertices: Vec<(Sign, Set)>,
    /// Maximal faces as sorted vertex indices, sorted.
    pub maximal_faces: Vec<Simplex>,
}

fn adjacency(n: usize, rel: impl Fn(usize, usize) -> bool) -> Vec<FixedBitSet> {
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for i in 0..n {
        for j in 0..n {
            if i != j && rel(i, j) {
                adj[i].insert(j);
            }
        }
    }
    adj
}

/// Maximal cliques by Bron-Kerbosch with pivoting, each sorted.
pub fn maximal_cliques(adj: &[FixedBitSet]) -> Vec<Vec<usize>> {
    fn go(adj: &[FixedBitSet], r: &mut Vec<usize>, mut p: FixedBitSet, mut x: FixedBitSet, out: &mut Vec<Vec<usize>>) {
        if p.is_clear() && x.is_clear() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return;
        }
        let pivot = p.ones().chain(x.ones()).max_by_key(|&u| adj[u].intersection(&p).count()).expect("nonempty");
        let cands: Vec<usize> = p.ones().filter(|&v| !adj[pivot].contains(v)).collect();
        for v in cands {
            r.push(v);
            let mut p2 = p.clone();
            p2.intersect_with(&adj[v]);
            let mut x2 = x.clone();
            x2.intersect_with(&adj[v]);
            go(adj, r, p2, x2, out);
            r.pop();
            p.set(v, false);
            x.insert(v);
        }
    }
    let n = adj.len();
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    let mut out = Vec::new();
    go(adj, &mut Vec::new(), all, FixedBitSet::with_capacity(n), &mut out);
    out.sort();
    out
}

impl NonInterferingComplex {
    pub fn new(dp: &DoublePoset) -> Result<NonInterferingComplex> {
        let mut vertices = Vec::new();
        for s in [Sign::Plus, Sign::Minus] {
            vertices.extend(dp.side(s).filters()?.into_iter().map(|f| (s, f)));
        }
        let mins: Vec<Set> = vertices.iter().map(|&(s, f)| dp.side(s).min_of(f)).collect();
        let adj = adjacency(vertices.len(), |i, j| {
            let ((si, fi), (sj, fj)) = (vertices[i], vertices[j]);
            if si == sj {
                fi & fj == fi || fi & fj == fj
            } else {
                mins[i] & mins[j] == 0
            }
        });
        Ok(NonInterferingComplex { vertices, maximal_faces: maximal_cliques(&adj) })
    }

    /// Whether a set of vertex indices is a face, by the definition.
    pub fn is_face(&self, dp: &DoublePoset, face: &[usize]) -> bool {
        face.iter().all(|&i| {
            face.iter().all(|&j| {
                let ((si, fi), (sj, fj)) = (self.vertices[i], self.vertices[j]);
                if si == sj {
                    fi & fj == fi || fi & fj == fj
                } else {
                    dp.side(si).min_of(fi) & dp.side(sj).min_of(fj) == 0
                }
            })
        })
    }

    /// Flagness, checked from the maximal faces alone: the clique complex of
    /// their 1-skeleton has exactly the same maximal faces.
    pub fn is_flag(&self) -> bool {
        let n = self.vertices.len();
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for f in &self.maximal_faces {
            for &i in f {
                for &j in f {
                    if i != j {
                        adj[i].insert(j);
                    }
                }
            }
        }
        maximal_cliques(&adj) == self.maximal_faces
    }
}

/// `sum over S ⊆ P of e(P+|_S) e(P-|_{P \ S})`, the number of maximal faces
/// predicted by the canonical subdivision of the double chain polytope.
pub fn predicted_cell_count(dp: &DoublePoset) -> u128 {
    let full = dp.plus().ground();
    let mut total = 0u128;
    for s in 0..=full {
        if s & !full != 0 {
            continue;
        }
        total += dp.plus().restrict(s).linear_extension_count() * dp.minus().restrict(full & !s).linear_extension_count();
    }
    total
}

/// Which double poset polytope to triangulate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    TChain,
    TOrd,
}

impl std::str::FromStr for Which {
    type Err = Error;
    fn from_str(s: &str) -> Result<Which> {
        match s {
            "tchain" => Ok(Which::TChain),
            "tord" => Ok(Which::TOrd),
            _ => Err(Error::InvalidInput(format!("expected tchain or tord, got '{s}'"))),
        }
    }
}

/// A triangulation of a labeled polytope, cells given by vertex indices.
#[derive(Clone, Debug)]
pub struct Triangulation {
    pub polytope: LabeledPolytope,
    pub cells: Vec<Simplex>,
}

/// The non-interfering complex realized in the double chain polytope (by
/// `(±2 1_{min F}, ±1)`) or, for compatible double posets, in the double
/// order polytope (by `(±2 1_F, ±1)`).
pub fn triangulate(dp: &DoublePoset, which: Which) -> Result<Triangulation> {
    let polytope = match which {
        Which::TChain => double_chain_polytope(dp)?,
        Which::TOrd => double_order_polytope_h(dp)?,
    };
    let cx = NonInterferingComplex::new(dp)?;
    let index: Vec<usize> = cx
        .vertices
        .iter()
        .map(|&(s, f)| {
            let tag = match which {
                Which::TChain => VertexTag::Antichain(s, dp.side(s).min_of(f)),
                Which::TOrd => VertexTag::Filter(s, f),
            };
            polytope.vertex_index(&tag).ok_or_else(|| Error::InconsistentVH(format!("no vertex for {tag}")))
        })
        .collect::<Result<_>>()?;
    let mut cells: Vec<Simplex> = cx
        .maximal_faces
        .iter()
        .map(|f| {
            let mut c: Vec<usize> = f.iter().map(|&i| index[i]).collect();
            c.sort_unstable();
            c
        })
        .collect();
    cells.sort();
    Ok(Triangulation { polytope, cells })
}

/// What [`verify_triangulation`] found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangulationReport {
    pub cells: usize,
    pub unimodular: bool,
    /// Every cell contains both `(0, 1)` and `(0, -1)`.
    pub vertical_edge: bool,
    /// Sum of cell volumes, after checking that no two cells overlap.
    pub cell_volume: Q,
    /// Normalised volume from a pulling triangulation of the polytope.
    pub polytope_volume: Q,
}

impl TriangulationReport {
    pub fn ok(&self) -> bool {
        self.unimodular && self.vertical_edge && self.cell_volume == self.polytope_volume && self.cell_volume == q(self.cells as i64)
    }
}

pub fn verify_triangulation(t: &Triangulation) -> Result<TriangulationReport> {
    let p = &t.polytope.poly;
    let top = t.polytope.vertex_tags.iter().position(|tag| matches!(tag, VertexTag::Filter(Sign::Plus, 0) | VertexTag::Antichain(Sign::Plus, 0)));
    let bottom = t.polytope.vertex_tags.iter().position(|tag| matches!(tag, VertexTag::Filter(Sign::Minus, 0) | VertexTag::Antichain(Sign::Minus, 0)));
    let vertical_edge = match (top, bottom) {
        (Some(a), Some(b)) => t.cells.iter().all(|c| c.contains(&a) && c.contains(&b)),
        _ => false,
    };
    Ok(TriangulationReport {
        cells: t.cells.len(),
        unimodular: triangulation::is_unimodular(p, &t.cells)?,
        vertical_edge,
        cell_volume: triangulation::triangulation_nvol(p, &t.cells)?,
        polytope_volume: triangulation::pulling_volume(p)?,
    })
}

/// The canonical triangulation of the order polytope by maximal chains of
/// filters (one cell per linear extension), and its transfer to the chain
/// polytope with `1_F ↦ 1_{min F}`.
#[derive(Clone, Debug)]
pub struct OrderTriangulation {
    pub order: LabeledPolytope,
    pub chain: LabeledPolytope,
    pub order_cells: Vec<Simplex>,
    pub chain_cells: Vec<Simplex>,
}

pub fn canonical_order_triangulation(p: &Poset) -> Result<OrderTriangulation> {
    let order = order_polytope(p)?;
    let chain = chain_polytope(p)?;
    let mut order_cells = Vec::new();
    let mut chain_cells = Vec::new();
    for ext in p.linear_extensions(crate::poset::DEFAULT_ENUM_CAP)? {
        let mut f: Set = 0;
        let mut filters = vec![0];
        for &a in ext.iter().rev() {
            f |= bit(a);
            filters.push(f);
        }
        let find = |lp: &LabeledPolytope, tag: VertexTag| lp.vertex_index(&tag).ok_or_else(|| Error::InconsistentVH(format!("no vertex for {tag}")));
        let mut oc = filters.iter().map(|&f| find(&order, VertexTag::Filter(Sign::Plus, f))).collect::<Result<Vec<_>>>()?;
        let mut cc = filters.iter().map(|&f| find(&chain, VertexTag::Antichain(Sign::Plus, p.min_of(f)))).collect::<Result<Vec<_>>>()?;
        oc.sort_unstable();
        cc.sort_unstable();
        order_cells.push(oc);
        chain_cells.push(cc);
    }
    order_cells.sort();
    chain_cells.sort();
    Ok(OrderTriangulation { order, chain, order_cells, chain_cells })
}

/// Lattice points of `k P` in ambient coordinates.
pub fn ambient_lattice_points(p: &QPolytope, k: i64, budget: u64) -> Result<Vec<Vec<Q>>> {
    let l = &p.lattice;
    let d = l.dim();
    Ok(lattice::lattice_points(p, k, false, budget)?
        .into_iter()
        .map(|z| (0..d).map(|i| (0..d).fold(&l.offset[i] * q(k), |s, j| s + &l.basis[i][j] * q(z[j]))).collect())
        .collect())
}

/// The lift `(g, t) ↦ (Ψ g, t)`.
pub fn psi_lift(dp: &DoublePoset, x: &[Q]) -> Result<Vec<Q>> {
    let n = dp.n();
    let mut y = psi(dp, &x[..n])?;
    y.push(x[n].clone());
    Ok(y)
}

/// Whether the lift of `Ψ` maps the lattice points of `k TChain` bijectively
/// onto those of `k TOrd`. Returns the two counts as well.
pub fn lift_is_bijective(dp: &DoublePoset, k: i64, budget: u64) -> Result<(usize, usize, bool)> {
    let tc = double_chain_polytope(dp)?.poly;
    let to = double_order_polytope_h(dp)?.poly;
    let src = ambient_lattice_points(&tc, k, budget)?;
    let mut dst = ambient_lattice_points(&to, k, budget)?;
    dst.sort();
    let mut img = src.iter().map(|x| psi_lift(dp, x)).collect::<Result<Vec<_>>>()?;
    img.sort();
    let ok = img == dst;
    Ok((src.len(), dst.len(), ok))
}

/// A random rational in `[lo, hi]` with the given denominator.
pub fn random_rational(rng: &mut impl Rng, lo: i64, hi: i64, den: i64) -> Q {
    Q::new(rng.gen_range(lo * den..=hi * den).into(), den.into())
}

/// A random point of the order polytope: prefix maxima of random values.
pub fn random_order_point(p: &Poset, rng: &mut impl Rng) -> Vec<Q> {
    let r: Vec<Q> = (0..p.n()).map(|_| random_rational(rng, 0, 1, 12)).collect();
    (0..p.n()).map(|b| bits(p.down(b)).map(|a| r[a].clone()).max().unwrap_or_else(Q::zero)).collect()
}

/// A random point of the chain polytope: random nonnegative values scaled
/// so that the largest chain sum is at most one.
pub fn random_chain_point(p: &Poset, rng: &mut impl Rng) -> Vec<Q> {
    let g: Vec<Q> = (0..p.n()).map(|_| random_rational(rng, 0, 1, 12)).collect();
    let m = inverse_transfer(p, &g).expect("lengths match").into_iter().max().unwrap_or_else(Q::zero);
    if m > Q::one() {
        g.iter().map(|x| x / &m).collect()
    } else {
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::qvec;
    use crate::poset::generators as gen;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn half(n: i64) -> Q {
        Q::new(n.into(), 2.into())
    }

    #[test]
    fn transfer_of_filters_and_small_cases() {
        let p = gen::comb(2);
        for f in p.filters().unwrap() {
            let v: Vec<Q> = (0..p.n()).map(|i| q((f >> i & 1) as i64)).collect();
            let m = p.min_of(f);
            let w: Vec<Q> = (0..p.n()).map(|i| q((m >> i & 1) as i64)).collect();
            assert_eq!(transfer(&p, &v).unwrap(), w);
            assert_eq!(inverse_transfer(&p, &w).unwrap(), v);
        }
        assert_eq!(transfer(&gen::chain(2), &[half(1), q(1)]).unwrap(), vec![half(1), half(1)]);
        let x = vec![half(1), q(1), half(3)];
        assert_eq!(transfer(&gen::antichain(3), &x).unwrap(), x);
    }

    #[test]
    fn inverse_ignores_negative_entries() {
        let p = gen::chain(3);
        assert_eq!(inverse_transfer(&p, &[q(-1), q(2), q(-3)]).unwrap(), vec![q(0), q(2), q(2)]);
        let dp = gen::xw();
        let g = qvec(&[1, 0, 2, 0, 1]);
        assert_eq!(psi(&dp, &g).unwrap(), inverse_transfer(dp.plus(), &g).unwrap());
    }

    #[test]
    fn psi_of_antichain_differences() {
        let dp = gen::xw();
        let (pp, pm) = (dp.plus(), dp.minus());
        for a in pp.antichains().unwrap() {
            for b in pm.antichains().unwrap() {
                if a & b != 0 {
                    continue;
                }
                let g: Vec<Q> = (0..5).map(|i| q((a >> i & 1) as i64 - (b >> i & 1) as i64)).collect();
                let (fa, fb) = (pp.filter_generated(a), pm.filter_generated(b));
                let f: Vec<Q> = (0..5).map(|i| q((fa >> i & 1) as i64 - (fb >> i & 1) as i64)).collect();
                assert_eq!(psi(&dp, &g).unwrap(), f);
            }
        }
    }

    #[test]
    fn round_trips() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let dp = gen::xw();
        let alt = alternative_common_extension(&dp).unwrap();
        for _ in 0..50 {
            let g: Vec<Q> = (0..5).map(|_| random_rational(&mut rng, -2, 2, 7)).collect();
            let f = psi(&dp, &g).unwrap();
            assert_eq!(psi_inverse(&dp, &f).unwrap(), g);
            assert_eq!(psi_inverse_along(&dp, &alt, &f).unwrap(), g);
            let o = random_order_point(dp.plus(), &mut rng);
            assert_eq!(inverse_transfer(dp.plus(), &transfer(dp.plus(), &o).unwrap()).unwrap(), o);
        }
        assert_eq!(psi_inverse(&gen::opposite_pair(2), &[q(0), q(0)]).unwrap_err().name(), "NotCompatible");
    }

    #[test]
    fn xw_complex() {
        let dp = gen::xw();
        let cx = NonInterferingComplex::new(&dp).unwrap();
        assert_eq!(cx.vertices.len(), 21);
        assert_eq!(cx.maximal_faces.len(), 128);
        assert_eq!(predicted_cell_count(&dp), 128);
        assert!(cx.is_flag());
        assert!(cx.maximal_faces.iter().all(|f| f.len() == 7 && cx.is_face(&dp, f)));
    }

    #[test]
    fn small_triangulations() {
        let dp = DoublePoset::induced(gen::chain(1));
        for w in [Which::TChain, Which::TOrd] {
            let t = triangulate(&dp, w).unwrap();
            let r = verify_triangulation(&t).unwrap();
            assert_eq!(r.cells, 2);
            assert!(r.ok(), "{r:?}");
        }
        let opp = gen::opposite_pair(2);
        let t = triangulate(&opp, Which::TChain).unwrap();
        assert_eq!(t.cells.len(), 4);
        assert!(verify_triangulation(&t).unwrap().ok());
        assert_eq!(triangulate(&opp, Which::TOrd).unwrap_err().name(), "NotCompatible");
    }

    #[test]
    fn order_triangulation_counts() {
        for (p, e) in [(gen::chain(3), 1), (gen::antichain(3), 6), (gen::comb(2), 3)] {
            let t = canonical_order_triangulation(&p).unwrap();
            assert_eq!(t.order_cells.len(), e);
            assert!(triangulation::is_unimodular(&t.order.poly, &t.order_cells).unwrap());
            assert_eq!(triangulation::triangulation_nvol(&t.order.poly, &t.order_cells).unwrap(), q(e as i64));
            assert_eq!(triangulation::triangulation_nvol(&t.chain.poly, &t.chain_cells).unwrap(), q(e as i64));
        }
    }

    #[test]
    fn lift_bijection_small() {
        for dp in [gen::xw(), gen::mixed(2)] {
            for k in 1..=2 {
                let (a, b, ok) = lift_is_bijective(&dp, k, lattice::DEFAULT_POINT_BUDGET).unwrap();
                assert!(ok && a == b, "{a} {b}");
            }
        }
    }
}

//! Toric ideals of order, double order and double chain polytopes: their
//! quadratic Groebner bases, an independent Buchberger check, initial
//! complexes and the face test by binomial vanishing.

use std::cmp::Ordering;
use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::poset::{bits, canon_cmp, DoublePoset, Poset, Set, Sign};
use crate::transfer::NonInterferingComplex;
use crate::{Error, Result};

/// Default cap on rewriting steps in one normal form computation.
pub const DEFAULT_REDUCTION_CAP: usize = 100_000;

/// A variable `x_S`: `S` is a filter of the given side, or an antichain for
/// the double chain ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub sign: Sign,
    pub set: Set,
}

/// Which toric ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ideal {
    /// Hibi ideal of the plus order.
    Hibi,
    /// Double Hibi ideal of the double order polytope.
    TOrd,
    /// Ideal of the double chain polytope.
    TChain,
}

impl std::str::FromStr for Ideal {
    type Err = Error;
    fn from_str(s: &str) -> Result<Ideal> {
        match s {
            "hibi" => Ok(Ideal::Hibi),
            "tord" => Ok(Ideal::TOrd),
            "tchain" => Ok(Ideal::TChain),
            _ => Err(Error::InvalidInput(format!("expected hibi, tord or tchain, got '{s}'"))),
        }
    }
}

/// A multiset of variables, as sorted variable indices of a [`Ring`].
pub type Monomial = Vec<usize>;

/// `lead - trail` with `lead > trail` in the ring's order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

/// Polynomial ring with variables listed from smallest to largest and the
/// graded reverse lexicographic order they induce.
#[derive(Clone, Debug)]
pub struct Ring {
    pub vars: Vec<Var>,
    index: HashMap<Var, usize>,
    /// Exponent vector of each variable under the monomial map: ground
    /// coordinates, then the degrees in `t+` and `t-`.
    images: Vec<Vec<i64>>,
}

fn mono(mut v: Vec<usize>) -> Monomial {
    v.sort_unstable();
    v
}

impl Ring {
    /// Entries are `(variable, sort key, support)`: within a side variables
    /// are ordered by their key (size first, then canonically), plus side
    /// below minus side; the support is the ground set carried by the
    /// variable under the monomial map.
    fn new(n: usize, mut entries: Vec<(Var, Set, Set)>) -> Ring {
        entries.sort_by(|a, b| a.0.sign.cmp(&b.0.sign).then_with(|| canon_cmp(a.1, b.1)));
        let vars: Vec<Var> = entries.iter().map(|e| e.0).collect();
        let images = entries
            .iter()
            .map(|(v, _, supp)| {
                let s = v.sign.as_i64();
                let mut e: Vec<i64> = (0..n).map(|i| if supp >> i & 1 == 1 { s } else { 0 }).collect();
                e.push((v.sign == Sign::Plus) as i64);
                e.push((v.sign == Sign::Minus) as i64);
                e
            })
            .collect();
        let index = vars.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        Ring { vars, index, images }
    }

    /// Variables indexed by filters of the plus order.
    pub fn hibi(p: &Poset) -> Result<Ring> {
        let entries = p.filters()?.into_iter().map(|f| (Var { sign: Sign::Plus, set: f }, f, f)).collect();
        Ok(Ring::new(p.n(), entries))
    }

    /// Variables indexed by filters of both orders.
    pub fn double_order(dp: &DoublePoset) -> Result<Ring> {
        let mut entries = Vec::new();
        for s in [Sign::Plus, Sign::Minus] {
            entries.extend(dp.side(s).filters()?.into_iter().map(|f| (Var { sign: s, set: f }, f, f)));
        }
        Ok(Ring::new(dp.n(), entries))
    }

    /// Variables indexed by antichains of both orders, ordered by the
    /// filters they generate.
    pub fn double_chain(dp: &DoublePoset) -> Result<Ring> {
        let mut entries = Vec::new();
        for s in [Sign::Plus, Sign::Minus] {
            let p = dp.side(s);
            entries.extend(p.antichains()?.into_iter().map(|a| (Var { sign: s, set: a }, p.filter_generated(a), a)));
        }
        Ok(Ring::new(dp.n(), entries))
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn var(&self, v: Var) -> Result<usize> {
        self.index.get(&v).copied().ok_or_else(|| Error::UnknownFilterVariable(format!("{}{:#b}", v.sign.symbol(), v.set)))
    }

    pub fn monomial(&self, vs: &[Var]) -> Result<Monomial> {
        Ok(mono(vs.iter().map(|&v| self.var(v)).collect::<Result<_>>()?))
    }

    /// Graded reverse lexicographic comparison: higher degree wins; otherwise
    /// the monomial with the larger exponent of the smallest variable where
    /// they differ is smaller.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if a.len() != b.len() {
            return a.len().cmp(&b.len());
        }
        let (ea, eb) = (self.exponents(a), self.exponents(b));
        for i in 0..self.len() {
            if ea[i] != eb[i] {
                return eb[i].cmp(&ea[i]);
            }
        }
        Ordering::Equal
    }

    fn exponents(&self, m: &Monomial) -> Vec<u32> {
        let mut e = vec![0u32; self.len()];
        for &i in m {
            e[i] += 1;
        }
        e
    }

    /// `u - v` oriented so that the larger monomial leads.
    pub fn binomial(&self, u: Monomial, v: Monomial) -> Binomial {
        if self.cmp(&u, &v) == Ordering::Less {
            Binomial { lead: v, trail: u }
        } else {
            Binomial { lead: u, trail: v }
        }
    }

    /// Image of a monomial under the monomial map, as an exponent vector.
    pub fn image(&self, m: &Monomial) -> Vec<i64> {
        let d = self.images.first().map_or(0, |e| e.len());
        let mut out = vec![0i64; d];
        for &i in m {
            for (o, x) in out.iter_mut().zip(&self.images[i]) {
                *o += x;
            }
        }
        out
    }

    /// Whether the binomial lies in the toric ideal: both monomials have the
    /// same image (ground exponents and both degrees agree).
    pub fn toric_membership(&self, b: &Binomial) -> bool {
        self.image(&b.lead) == self.image(&b.trail)
    }

    pub fn describe_monomial(&self, m: &Monomial, labels: &[String]) -> String {
        m.iter()
            .map(|&i| {
                let v = self.vars[i];
                let names: Vec<&str> = bits(v.set).map(|a| labels[a].as_str()).collect();
                format!("x{}{{{}}}", v.sign.symbol(), names.join(","))
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Membership of a binomial given by variables, rejecting unknown ones.
pub fn toric_membership(ring: &Ring, u: &[Var], v: &[Var]) -> Result<bool> {
    let b = ring.binomial(ring.monomial(u)?, ring.monomial(v)?);
    Ok(ring.toric_membership(&b))
}

/// A basis together with its ring and the leading terms used for reporting.
#[derive(Clone, Debug)]
pub struct Basis {
    pub ring: Ring,
    pub binomials: Vec<Binomial>,
    /// The monomial each relation is stated with as leading term; used to
    /// check that the chosen order selects it.
    pub stated_leads: Vec<Monomial>,
}

impl Basis {
    fn push(&mut self, lead: Monomial, trail: Monomial) {
        let b = self.ring.binomial(lead.clone(), trail);
        if b.lead == b.trail || self.binomials.contains(&b) {
            return;
        }
        self.binomials.push(b);
        self.stated_leads.push(lead);
    }

    fn finish(mut self) -> Basis {
        let mut pairs: Vec<(Binomial, Monomial)> = self.binomials.into_iter().zip(self.stated_leads).collect();
        pairs.sort();
        (self.binomials, self.stated_leads) = pairs.into_iter().unzip();
        self
    }

    /// Whether the term order picks the stated leading term everywhere.
    pub fn leads_as_stated(&self) -> bool {
        self.binomials.iter().zip(&self.stated_leads).all(|(b, l)| &b.lead == l)
    }

    pub fn len(&self) -> usize {
        self.binomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.binomials.is_empty()
    }
}

fn hibi_relations(ring: &Ring, basis: &mut Basis, sign: Sign, filters: &[Set]) -> Result<()> {
    for (i, &f) in filters.iter().enumerate() {
        for &g in &filters[i + 1..] {
            if f & g != f && f & g != g {
                let v = |s| Var { sign, set: s };
                let lead = ring.monomial(&[v(f), v(g)])?;
                let trail = ring.monomial(&[v(f & g), v(f | g)])?;
                basis.push(lead, trail);
            }
        }
    }
    Ok(())
}

/// Hibi relations `x_F x_F' - x_{F∩F'} x_{F∪F'}` over incomparable filters.
pub fn hibi_basis(p: &Poset) -> Result<Basis> {
    let ring = Ring::hibi(p)?;
    let mut basis = Basis { ring: ring.clone(), binomials: Vec::new(), stated_leads: Vec::new() };
    hibi_relations(&ring, &mut basis, Sign::Plus, &p.filters()?)?;
    Ok(basis.finish())
}

/// Hibi relations on both sides plus the twist relations
/// `x_F+ x_F- - x_{F+ \ A} x_{F- \ A}` with `A = min F+ ∩ min F- ≠ ∅`.
pub fn double_hibi_basis(dp: &DoublePoset) -> Result<Basis> {
    if !dp.is_compatible() {
        return Err(Error::NotCompatible("the double Hibi basis needs a compatible double poset".into()));
    }
    let ring = Ring::double_order(dp)?;
    let mut basis = Basis { ring: ring.clone(), binomials: Vec::new(), stated_leads: Vec::new() };
    let fp = dp.plus().filters()?;
    let fm = dp.minus().filters()?;
    hibi_relations(&ring, &mut basis, Sign::Plus, &fp)?;
    hibi_relations(&ring, &mut basis, Sign::Minus, &fm)?;
    for &f in &fp {
        for &g in &fm {
            let a = dp.plus().min_of(f) & dp.minus().min_of(g);
            if a != 0 {
                let lead = ring.monomial(&[Var { sign: Sign::Plus, set: f }, Var { sign: Sign::Minus, set: g }])?;
                let trail = ring.monomial(&[Var { sign: Sign::Plus, set: f & !a }, Var { sign: Sign::Minus, set: g & !a }])?;
                basis.push(lead, trail);
            }
        }
    }
    Ok(basis.finish())
}

/// `A ⊔ A' = min(A ∪ A')`.
pub fn antichain_join(p: &Poset, a: Set, b: Set) -> Set {
    p.min_of(a | b)
}

/// `A ⊓ A' = (A ∩ A') ∪ (max(A ∪ A') \ min(A ∪ A'))`.
pub fn antichain_meet(p: &Poset, a: Set, b: Set) -> Set {
    (a & b) | (p.max_of(a | b) & !p.min_of(a | b))
}

/// `x_A x_A' - x_{A⊔A'} x_{A⊓A'}` for antichains generating incomparable
/// filters on either side, and `x_A+ x_A- - x_{A+ \ A-} x_{A- \ A+}`.
pub fn tchain_basis(dp: &DoublePoset) -> Result<Basis> {
    let ring = Ring::double_chain(dp)?;
    let mut basis = Basis { ring: ring.clone(), binomials: Vec::new(), stated_leads: Vec::new() };
    let mut anti = Vec::new();
    for s in [Sign::Plus, Sign::Minus] {
        let p = dp.side(s);
        let a = p.antichains()?;
        for (i, &x) in a.iter().enumerate() {
            for &y in &a[i + 1..] {
                let (fx, fy) = (p.filter_generated(x), p.filter_generated(y));
                if fx & fy != fx && fx & fy != fy {
                    let v = |set| Var { sign: s, set };
                    let lead = ring.monomial(&[v(x), v(y)])?;
                    let trail = ring.monomial(&[v(antichain_join(p, x, y)), v(antichain_meet(p, x, y))])?;
                    basis.push(lead, trail);
                }
            }
        }
        anti.push(a);
    }
    for &a in &anti[0] {
        for &b in &anti[1] {
            if a & b != 0 {
                let lead = ring.monomial(&[Var { sign: Sign::Plus, set: a }, Var { sign: Sign::Minus, set: b }])?;
                let trail = ring.monomial(&[Var { sign: Sign::Plus, set: a & !b }, Var { sign: Sign::Minus, set: b & !a }])?;
                basis.push(lead, trail);
            }
        }
    }
    Ok(basis.finish())
}

/// The basis for a named ideal.
pub fn basis_for(which: Ideal, dp: &DoublePoset) -> Result<Basis> {
    match which {
        Ideal::Hibi => hibi_basis(dp.plus()),
        Ideal::TOrd => double_hibi_basis(dp),
        Ideal::TChain => tchain_basis(dp),
    }
}

fn divides(small: &Monomial, big: &Monomial) -> Option<Monomial> {
    // both sorted: multiset difference big - small
    let mut rest = Vec::with_capacity(big.len());
    let mut i = 0;
    for &x in big {
        if i < small.len() && small[i] == x {
            i += 1;
        } else {
            rest.push(x);
        }
    }
    (i == small.len()).then_some(rest)
}

fn lcm(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    out
}

fn times(a: &Monomial, b: &Monomial) -> Monomial {
    mono(a.iter().chain(b).copied().collect())
}

/// Normal form of a monomial: rewrite `m = u * lead` to `u * trail` until no
/// leading term divides. Each step lowers the monomial in the term order, so
/// this terminates; `cap` guards against a basis with misoriented leads.
pub fn normal_form(m: &Monomial, basis: &[Binomial], cap: usize) -> Result<Monomial> {
    let mut cur = m.clone();
    for _ in 0..cap {
        match basis.iter().find_map(|b| divides(&b.lead, &cur).map(|rest| times(&rest, &b.trail))) {
            Some(next) => cur = next,
            None => return Ok(cur),
        }
    }
    Err(Error::NonTerminating(cap))
}

/// Normal form of a binomial: both terms reduced; zero when they agree.
pub fn normal_form_binomial(b: &Binomial, basis: &[Binomial], cap: usize) -> Result<Option<(Monomial, Monomial)>> {
    let u = normal_form(&b.lead, basis, cap)?;
    let v = normal_form(&b.trail, basis, cap)?;
    Ok((u != v).then_some((u, v)))
}

/// Buchberger's criterion: every S-pair reduces to zero. Each S-pair of
/// binomials is the binomial `(L/l_i) t_i - (L/l_j) t_j`; reducing both
/// terms to the same normal form is a reduction to zero.
pub fn buchberger_verify(ring: &Ring, basis: &[Binomial], cap: usize) -> Result<bool> {
    for b in basis {
        if ring.cmp(&b.lead, &b.trail) != Ordering::Greater {
            return Ok(false);
        }
    }
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            let l = lcm(&a.lead, &b.lead);
            let u = times(&divides(&a.lead, &l).expect("lead divides lcm"), &a.trail);
            let v = times(&divides(&b.lead, &l).expect("lead divides lcm"), &b.trail);
            if normal_form(&u, basis, cap)? != normal_form(&v, basis, cap)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// No term of any element is divisible by the leading term of another.
pub fn is_reduced(basis: &[Binomial]) -> bool {
    basis.iter().enumerate().all(|(i, b)| {
        basis.iter().enumerate().all(|(j, c)| i == j || (divides(&c.lead, &b.lead).is_none() && divides(&c.lead, &b.trail).is_none()))
    })
}

/// Every leading term is a product of two distinct variables.
pub fn leads_squarefree_quadratic(basis: &[Binomial]) -> bool {
    basis.iter().all(|b| b.lead.len() == 2 && b.lead[0] != b.lead[1])
}

/// Maximal faces of the flag complex whose minimal non-faces are the
/// leading terms, as sorted variable indices.
pub fn initial_complex(ring: &Ring, basis: &[Binomial]) -> Vec<Vec<usize>> {
    let n = ring.len();
    let mut adj = vec![FixedBitSet::with_capacity(n); n];
    for (i, a) in adj.iter_mut().enumerate() {
        a.insert_range(..);
        a.set(i, false);
    }
    for b in basis {
        if let [x, y] = b.lead[..] {
            adj[x].set(y, false);
            adj[y].set(x, false);
        }
    }
    crate::transfer::maximal_cliques(&adj)
}

/// Maximal faces of the non-interfering complex in the ring's variables:
/// filters for the double order ideal, their minimal elements for the
/// double chain ideal.
fn expected_complex(dp: &DoublePoset, ring: &Ring, which: Ideal) -> Result<Vec<Vec<usize>>> {
    if which == Ideal::Hibi {
        return order_complex(dp.plus(), ring);
    }
    let cx = NonInterferingComplex::new(dp)?;
    let index: Vec<usize> = cx
        .vertices
        .iter()
        .map(|&(s, f)| {
            let set = if which == Ideal::TChain { dp.side(s).min_of(f) } else { f };
            ring.var(Var { sign: s, set })
        })
        .collect::<Result<_>>()?;
    let mut faces: Vec<Vec<usize>> = cx.maximal_faces.iter().map(|f| mono(f.iter().map(|&i| index[i]).collect())).collect();
    faces.sort();
    Ok(faces)
}

/// Maximal chains of filters, one per linear extension: the canonical
/// unimodular triangulation of the order polytope.
fn order_complex(p: &Poset, ring: &Ring) -> Result<Vec<Vec<usize>>> {
    let mut faces = Vec::new();
    for ext in p.linear_extensions(crate::poset::DEFAULT_ENUM_CAP)? {
        let mut f: Set = 0;
        let mut face = vec![ring.var(Var { sign: Sign::Plus, set: 0 })?];
        for &a in ext.iter().rev() {
            f |= 1 << a;
            face.push(ring.var(Var { sign: Sign::Plus, set: f })?);
        }
        faces.push(mono(face));
    }
    faces.sort();
    Ok(faces)
}

fn complex_matches(dp: &DoublePoset, basis: &Basis, which: Ideal) -> Result<bool> {
    Ok(leads_squarefree_quadratic(&basis.binomials)
        && initial_complex(&basis.ring, &basis.binomials) == expected_complex(dp, &basis.ring, which)?)
}

/// Whether the initial complex of the basis is the expected unimodular
/// triangulation: the non-interfering complex for the double ideals, the
/// order complex of the filter lattice of the plus order for the Hibi
/// ideal. Leading terms must be squarefree quadratic.
pub fn initial_complex_match(dp: &DoublePoset, which: Ideal) -> Result<bool> {
    complex_matches(dp, &basis_for(which, dp)?, which)
}

/// Lemma-style face test: the variables `U` span a face (containing no
/// other lattice points of the vertex set) iff every basis binomial
/// vanishes at the indicator vector of `U`.
pub fn face_by_vanishing(basis: &[Binomial], u: &FixedBitSet) -> bool {
    basis.iter().all(|b| b.lead.iter().all(|&i| u.contains(i)) == b.trail.iter().all(|&i| u.contains(i)))
}

/// Everything that certifies a basis: toric membership of each element,
/// the stated leads, Buchberger's criterion and the initial complex. The
/// last one also shows the basis generates the whole toric ideal: a
/// unimodular initial complex fixes the Hilbert function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub size: usize,
    pub members: bool,
    pub leads_as_stated: bool,
    pub groebner: bool,
    pub reduced: bool,
    pub initial_complex: bool,
}

impl Certificate {
    /// Reducedness is an observation and does not enter.
    pub fn ok(&self) -> bool {
        self.members && self.leads_as_stated && self.groebner && self.initial_complex
    }
}

pub fn certify(basis: &Basis, dp: &DoublePoset, which: Ideal, cap: usize) -> Result<Certificate> {
    let members = basis.binomials.iter().all(|b| basis.ring.toric_membership(b));
    let groebner = buchberger_verify(&basis.ring, &basis.binomials, cap)?;
    let initial_complex = complex_matches(dp, basis, which)?;
    Ok(Certificate {
        size: basis.len(),
        members,
        leads_as_stated: basis.leads_as_stated(),
        groebner,
        reduced: is_reduced(&basis.binomials),
        initial_complex,
    })
}

/// How to damage a basis for negative controls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Corruption {
    /// Drop one element.
    Drop,
    /// Replace the trailing term of one element by another monomial of the
    /// same degree below its lead.
    Retail,
}

/// A damaged copy of the basis, or `None` when the basis is too small.
pub fn corrupt(basis: &Basis, how: Corruption, rng: &mut impl Rng) -> Option<Basis> {
    if basis.is_empty() {
        return None;
    }
    let mut out = basis.clone();
    let i = rng.gen_range(0..basis.len());
    match how {
        Corruption::Drop => {
            out.binomials.remove(i);
            out.stated_leads.remove(i);
        }
        Corruption::Retail => {
            let b = &basis.binomials[i];
            let n = basis.ring.len();
            let mut cands: Vec<Monomial> = Vec::new();
            for x in 0..n {
                for y in x..n {
                    let m = vec![x, y];
                    if m != b.trail && basis.ring.cmp(&m, &b.lead) == Ordering::Less {
                        cands.push(m);
                    }
                }
            }
            let m = cands.choose(rng)?.clone();
            out.binomials[i] = Binomial { lead: b.lead.clone(), trail: m };
        }
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{double_order_polytope_h, sublattice_face_test};
    use crate::poset::generators as gen;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const CAP: usize = DEFAULT_REDUCTION_CAP;

    #[test]
    fn small_bases() {
        assert_eq!(hibi_basis(&gen::antichain(2)).unwrap().len(), 1);
        assert!(hibi_basis(&gen::chain(4)).unwrap().is_empty());
        let b = double_hibi_basis(&DoublePoset::induced(gen::antichain(2))).unwrap();
        assert_eq!(b.len(), 9);
        assert!(b.leads_as_stated());
        assert_eq!(double_hibi_basis(&gen::opposite_pair(2)).unwrap_err().name(), "NotCompatible");
    }

    #[test]
    fn membership_examples() {
        let p = gen::antichain(2);
        let r = Ring::hibi(&p).unwrap();
        let v = |s| Var { sign: Sign::Plus, set: s };
        assert!(toric_membership(&r, &[v(1), v(2)], &[v(0), v(3)]).unwrap());
        assert!(!toric_membership(&r, &[v(1)], &[v(2)]).unwrap());
        assert_eq!(toric_membership(&r, &[v(5)], &[v(2)]).unwrap_err().name(), "UnknownFilterVariable");
    }

    #[test]
    fn xw_bases_certify() {
        let dp = gen::xw();
        for which in [Ideal::Hibi, Ideal::TOrd, Ideal::TChain] {
            let b = basis_for(which, &dp).unwrap();
            let c = certify(&b, &dp, which, CAP).unwrap();
            assert!(c.ok(), "{which:?} {c:?}");
        }
        assert!(initial_complex_match(&dp, Ideal::TOrd).unwrap());
        assert!(initial_complex_match(&dp, Ideal::TChain).unwrap());
    }

    #[test]
    fn normal_form_is_stable() {
        let dp = gen::mixed(3);
        let b = double_hibi_basis(&dp).unwrap();
        let mut shuffled = b.binomials.clone();
        shuffled.reverse();
        let n = b.ring.len();
        for x in 0..n {
            for y in x..n {
                let m = vec![x, y];
                let f = normal_form(&m, &b.binomials, CAP).unwrap();
                assert_eq!(normal_form(&f, &b.binomials, CAP).unwrap(), f);
                assert_eq!(normal_form(&m, &shuffled, CAP).unwrap(), f);
            }
        }
    }

    #[test]
    fn corrupted_bases_fail() {
        let dp = gen::xw();
        let b = double_hibi_basis(&dp).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for how in [Corruption::Drop, Corruption::Retail] {
            for _ in 0..5 {
                let c = corrupt(&b, how, &mut rng).unwrap();
                assert!(!certify(&c, &dp, Ideal::TOrd, CAP).unwrap().ok());
            }
        }
        // a Hibi basis minus one element is still Groebner for a smaller ideal
        let comb = DoublePoset::induced(gen::comb(2));
        let h = hibi_basis(comb.plus()).unwrap();
        let mut incomplete = 0;
        for i in 0..h.len() {
            let mut d = h.clone();
            d.binomials.remove(i);
            d.stated_leads.remove(i);
            let c = certify(&d, &comb, Ideal::Hibi, CAP).unwrap();
            assert!(!c.ok());
            if c.groebner {
                incomplete += 1;
            }
        }
        assert!(incomplete > 0);
    }

    #[test]
    fn vanishing_matches_sublattice_test() {
        let dp = gen::mixed(2);
        let b = double_hibi_basis(&dp).unwrap();
        let t = double_order_polytope_h(&dp).unwrap();
        let n = b.ring.len();
        assert_eq!(n, t.poly.vertices().unwrap().len());
        for mask in 0u64..1 << n {
            let mut u = FixedBitSet::with_capacity(n);
            let (mut lp, mut lm) = (Vec::new(), Vec::new());
            for i in bits(mask) {
                u.insert(i);
                let v = b.ring.vars[i];
                if v.sign == Sign::Plus { lp.push(v.set) } else { lm.push(v.set) }
            }
            assert_eq!(face_by_vanishing(&b.binomials, &u), sublattice_face_test(&dp, &lp, &lm).unwrap().is_face, "{mask:b}");
        }
    }
}

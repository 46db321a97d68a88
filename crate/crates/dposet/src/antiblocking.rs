//! Anti-blocking polytopes: duality, restrictions, Cayley sums, Minkowski
//! differences, their canonical subdivisions and lattice point formulas.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::{hull, lattice, q, AffineLattice, Inequality, QPolytope};
use crate::poly::Poly;
use crate::poset::{bit, bits, full, Set};
use crate::{Error, Result, Q};

/// A full-dimensional anti-blocking polytope
/// `P = conv-down(c_1..c_r) = {x >= 0 : <d_i, x> <= 1}` in canonical form:
/// `generators` are the componentwise-maximal vertices and `normals` the
/// irredundant facet normals, both sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiBlockingPolytope {
    pub n: usize,
    pub generators: Vec<Vec<Q>>,
    pub normals: Vec<Vec<Q>>,
}

fn leq(a: &[Q], b: &[Q]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn maximal(points: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> =
        points.iter().filter(|p| !points.iter().any(|o| o != *p && leq(p, o))).cloned().collect();
    out.sort();
    out.dedup();
    out
}

/// All points obtained from `points` by zeroing subsets of coordinates.
fn down_candidates(points: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> = Vec::new();
    for p in points {
        let supp: Set = (0..p.len()).filter(|&i| !p[i].is_zero()).fold(0, |s, i| s | bit(i));
        let mut sub = supp;
        loop {
            let v: Vec<Q> = (0..p.len()).map(|i| if sub & bit(i) != 0 { p[i].clone() } else { Q::zero() }).collect();
            if !out.contains(&v) {
                out.push(v);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & supp;
        }
    }
    out
}

fn coordinate_zero(v: &[Q], i: usize) -> Vec<Q> {
    let mut w = v.to_vec();
    w[i] = Q::zero();
    w
}

/// Membership in the polytope described by `p`'s facets, or by a hull of its
/// vertices when no facets are stored.
fn membership(p: &QPolytope) -> Result<impl Fn(&[Q]) -> bool> {
    let (ineqs, eqs) = match &p.inequalities {
        Some(h) => (h.clone(), Vec::new()),
        None => hull::facets_of_points(p.vertices()?)?,
    };
    Ok(move |x: &[Q]| ineqs.iter().all(|h| h.satisfied(x)) && eqs.iter().all(|h| h.value(x) == h.rhs))
}

/// Whether `p` lies in the nonnegative orthant and is closed under lowering
/// coordinates (zeroing one coordinate of a vertex never leaves `p`).
pub fn is_antiblocking(p: &QPolytope) -> Result<bool> {
    let verts = p.vertices()?;
    if verts.iter().any(|v| v.iter().any(|x| x.is_negative())) {
        return Ok(false);
    }
    let inside = membership(p)?;
    for v in verts {
        for i in 0..v.len() {
            if !v[i].is_zero() && !inside(&coordinate_zero(v, i)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl AntiBlockingPolytope {
    /// From a full-dimensional polytope with both descriptions that is known
    /// to be anti-blocking.
    fn from_hull(p: &QPolytope) -> Result<AntiBlockingPolytope> {
        let n = p.ambient_dim;
        let generators = maximal(p.vertices()?);
        let mut normals: Vec<Vec<Q>> = Vec::new();
        for h in p.inequalities()? {
            if h.rhs.is_positive() {
                normals.push(h.normal.iter().map(|x| x / &h.rhs).collect());
            } else if !(h.rhs.is_zero() && h.normal.iter().filter(|x| !x.is_zero()).count() == 1) {
                return Err(Error::NotAntiBlocking);
            }
        }
        if normals.iter().flatten().any(|x| x.is_negative()) {
            return Err(Error::NotAntiBlocking);
        }
        normals.sort();
        normals.dedup();
        Ok(AntiBlockingPolytope { n, generators, normals })
    }

    /// The down-closure of `points` (which must be nonnegative).
    pub fn from_vrep(points: &[Vec<Q>]) -> Result<AntiBlockingPolytope> {
        if points.iter().flatten().any(|x| x.is_negative()) {
            return Err(Error::NegativeCoordinate);
        }
        let p = QPolytope::from_points(&down_candidates(points))?;
        AntiBlockingPolytope::from_hull(&p)
    }

    /// `{x >= 0 : <d, x> <= 1 for d in normals}`.
    pub fn from_normals(n: usize, normals: &[Vec<Q>]) -> Result<AntiBlockingPolytope> {
        if normals.iter().flatten().any(|x| x.is_negative()) {
            return Err(Error::NegativeCoordinate);
        }
        let mut ineqs: Vec<Inequality> = (0..n)
            .map(|i| Inequality::new((0..n).map(|j| if i == j { -Q::one() } else { Q::zero() }).collect(), Q::zero()))
            .collect();
        ineqs.extend(normals.iter().map(|d| Inequality::new(d.clone(), Q::one())));
        let p = QPolytope::from_inequalities(n, ineqs)?;
        if p.dim()? != n as isize {
            return Err(Error::NotFullDimensional);
        }
        AntiBlockingPolytope::from_hull(&p)
    }

    /// From a polytope carrying its vertices (and possibly its facets).
    pub fn from_polytope(p: &QPolytope) -> Result<AntiBlockingPolytope> {
        if p.vertices()?.iter().flatten().any(|x| x.is_negative()) {
            return Err(Error::NegativeCoordinate);
        }
        if !is_antiblocking(p)? {
            return Err(Error::NotAntiBlocking);
        }
        if p.dim()? != p.ambient_dim as isize {
            return Err(Error::NotFullDimensional);
        }
        let p = p.clone().ensure_inequalities()?.irredundant()?;
        AntiBlockingPolytope::from_hull(&p)
    }

    /// The dual `A(P) = {y >= 0 : <x, y> <= 1 for x in P}`: generators and
    /// normals swap roles.
    pub fn associated(&self) -> AntiBlockingPolytope {
        AntiBlockingPolytope { n: self.n, generators: self.normals.clone(), normals: self.generators.clone() }
    }

    /// `A(P)` recomputed from scratch as `{y >= 0 : <c, y> <= 1}` over the
    /// generators, by double description.
    pub fn associated_by_hull(&self) -> Result<AntiBlockingPolytope> {
        AntiBlockingPolytope::from_normals(self.n, &self.generators)
    }

    /// All vertices: the down-closure of the generators, pruned.
    pub fn vertices(&self) -> Result<Vec<Vec<Q>>> {
        let mut v = hull::extreme_points(&down_candidates(&self.generators))?;
        v.sort();
        Ok(v)
    }

    /// Vertices of `A(P)`, i.e. every `d` with `<d, x> <= 1` valid and tight
    /// enough to be extreme, the zero vector included.
    pub fn dual_vertices(&self) -> Result<Vec<Vec<Q>>> {
        self.associated().vertices()
    }

    pub fn inequalities(&self) -> Vec<Inequality> {
        let n = self.n;
        let mut ineqs: Vec<Inequality> = (0..n)
            .map(|i| Inequality::new((0..n).map(|j| if i == j { -Q::one() } else { Q::zero() }).collect(), Q::zero()))
            .collect();
        ineqs.extend(self.normals.iter().map(|d| Inequality::new(d.clone(), Q::one())));
        ineqs
    }

    pub fn to_polytope(&self) -> Result<QPolytope> {
        QPolytope::new(self.n, Some(self.vertices()?), Some(self.inequalities())).irredundant()
    }

    /// The face `P|_J` in the coordinates `J`, itself anti-blocking and full
    /// dimensional in `R^J`.
    pub fn restrict(&self, j: Set) -> Result<AntiBlockingPolytope> {
        let idx: Vec<usize> = bits(j).filter(|&i| i < self.n).collect();
        if idx.is_empty() {
            return Ok(AntiBlockingPolytope { n: 0, generators: vec![vec![]], normals: vec![] });
        }
        let pts: Vec<Vec<Q>> = self.generators.iter().map(|g| idx.iter().map(|&i| g[i].clone()).collect()).collect();
        AntiBlockingPolytope::from_vrep(&pts)
    }

    /// Every facet normal is integral, i.e. `A(P)` is a lattice polytope.
    pub fn is_dual_integral(&self) -> bool {
        self.normals.iter().flatten().all(|x| x.is_integer())
    }

    pub fn is_lattice(&self) -> bool {
        self.generators.iter().flatten().all(|x| x.is_integer())
    }
}

/// Facets of `K(sP1, -sP2) = conv(sP1 x {1} ∪ -sP2 x {-1})`:
/// `(2/s)<d, x> - t <= 1` over vertices `d` of `A(P1)` and
/// `-(2/s)<d, x> + t <= 1` over vertices of `A(P2)`; the zero vertex gives
/// the horizontal facets. Non-facets are dropped.
pub fn cayley(p1: &AntiBlockingPolytope, p2: &AntiBlockingPolytope, s: i64) -> Result<QPolytope> {
    let n = p1.n;
    if p2.n != n {
        return Err(Error::DimensionMismatch { expected: n, got: p2.n });
    }
    let mut verts = Vec::new();
    for (p, sign) in [(p1, 1), (p2, -1)] {
        for v in p.vertices()? {
            let mut x: Vec<Q> = v.iter().map(|c| c * q(sign * s)).collect();
            x.push(q(sign));
            verts.push(x);
        }
    }
    let f = Q::new(2.into(), s.into());
    let mut ineqs = Vec::new();
    for (p, sign) in [(p1, 1), (p2, -1)] {
        for d in p.dual_vertices()? {
            let mut a: Vec<Q> = d.iter().map(|c| c * &f * q(sign)).collect();
            a.push(q(-sign));
            ineqs.push(Inequality::new(a, Q::one()));
        }
    }
    QPolytope::new(n + 1, Some(verts), Some(ineqs)).with_lattice(AffineLattice::cayley(n, s)).irredundant()
}

/// `P1 - P2` with facets `<d, x> <= 1` for nonzero vertices `d` of `A(P1)`
/// and `-<d, x> <= 1` for those of `A(P2)`; vertices are the differences of
/// vertices that are tight on a full-rank set of these.
pub fn minkowski_difference(p1: &AntiBlockingPolytope, p2: &AntiBlockingPolytope) -> Result<QPolytope> {
    let n = p1.n;
    if p2.n != n {
        return Err(Error::DimensionMismatch { expected: n, got: p2.n });
    }
    let mut ineqs = Vec::new();
    for (p, sign) in [(p1, 1), (p2, -1)] {
        for d in p.dual_vertices()? {
            if d.iter().any(|x| !x.is_zero()) {
                ineqs.push(Inequality::new(d.iter().map(|c| c * q(sign)).collect(), Q::one()));
            }
        }
    }
    let v2 = p2.vertices()?;
    let mut verts: Vec<Vec<Q>> = Vec::new();
    for a in p1.vertices()? {
        for b in &v2 {
            let x: Vec<Q> = a.iter().zip(b).map(|(u, w)| u - w).collect();
            if verts.contains(&x) {
                continue;
            }
            let tight: Vec<Vec<Q>> = ineqs.iter().filter(|h| h.tight(&x)).map(|h| h.normal.clone()).collect();
            if crate::geometry::linalg::rank(&tight) == n {
                verts.push(x);
            }
        }
    }
    QPolytope::new(n, Some(verts), Some(ineqs)).irredundant()
}

/// `K(P1, -P2)` and `P1 - P2`.
pub fn cayley_and_minkowski(p1: &AntiBlockingPolytope, p2: &AntiBlockingPolytope) -> Result<(QPolytope, QPolytope)> {
    Ok((cayley(p1, p2, 1)?, minkowski_difference(p1, p2)?))
}

/// One cell `P1|_J - P2|_{J^c}` of the canonical subdivision.
#[derive(Clone, Debug)]
pub struct Cell {
    pub j: Set,
    pub plus: AntiBlockingPolytope,
    pub minus: AntiBlockingPolytope,
    /// The cell in `R^n`: coordinates in `J` from `P1|_J`, the others from
    /// `-P2|_{J^c}`.
    pub poly: QPolytope,
}

/// The `2^n` cells of the canonical mixed subdivision of `P1 - P2`.
pub fn canonical_subdivision(p1: &AntiBlockingPolytope, p2: &AntiBlockingPolytope) -> Result<Vec<Cell>> {
    let n = p1.n;
    let mut cells = Vec::with_capacity(1 << n);
    for j in 0..=full(n) {
        let plus = p1.restrict(j)?;
        let minus = p2.restrict(full(n) & !j)?;
        let jv: Vec<usize> = bits(j).collect();
        let cv: Vec<usize> = bits(full(n) & !j).collect();
        let mut verts = Vec::new();
        let vp = plus.vertices()?;
        let vm = minus.vertices()?;
        for a in &vp {
            for b in &vm {
                let mut x = vec![Q::zero(); n];
                for (k, &i) in jv.iter().enumerate() {
                    x[i] = a[k].clone();
                }
                for (k, &i) in cv.iter().enumerate() {
                    x[i] = -b[k].clone();
                }
                verts.push(x);
            }
        }
        let poly = QPolytope::from_points(&verts)?;
        cells.push(Cell { j, plus, minus, poly });
    }
    Ok(cells)
}

/// Binomial coefficient as a rational.
fn binom(n: usize, k: usize) -> Q {
    let mut r = Q::one();
    for i in 0..k {
        r = r * q((n - i) as i64) / q((i + 1) as i64);
    }
    r
}

/// Normalised volume of an anti-blocking polytope (`1` in dimension zero).
pub fn nvol(p: &AntiBlockingPolytope) -> Result<Q> {
    if p.n == 0 {
        return Ok(Q::one());
    }
    crate::geometry::triangulation::pulling_volume(&p.to_polytope()?)
}

/// `nvol(P1 - P2)` from the canonical subdivision:
/// `sum_J C(n, |J|) nvol(P1|_J) nvol(P2|_{J^c})`.
pub fn nvol_difference_formula(p1: &AntiBlockingPolytope, p2: &AntiBlockingPolytope) -> Result<Q> {
    let n = p1.n;
    let mut total = Q::zero();
    for j in 0..=full(n) {
        let k = j.count_ones() as usize;
        total += binom(n, k) * nvol(&p1.restrict(j)?)? * nvol(&p2.restrict(full(n) & !j)?)?;
    }
    Ok(total)
}

/// `nvol(K(P1, -P2))` relative to `Z^n x (2Z+1)` from the canonical
/// subdivision: `sum_J nvol(P1|_J) nvol(P2|_{J^c})`.
pub fn nvol_cayley_formula(p1: &AntiBlockingPolytope, p2: &AntiBlockingPolytope) -> Result<Q> {
    let n = p1.n;
    let mut total = Q::zero();
    for j in 0..=full(n) {
        total += nvol(&p1.restrict(j)?)? * nvol(&p2.restrict(full(n) & !j)?)?;
    }
    Ok(total)
}

fn count(p: &AntiBlockingPolytope, k: i64, strict: bool) -> Result<u64> {
    if p.n == 0 {
        return Ok(1);
    }
    lattice::count_points(&p.to_polytope()?, k, strict, lattice::DEFAULT_POINT_BUDGET)
}

/// `E(aP1 - bP2)` by the decomposition
/// `sum_J E(relint((a+1) P1|_J)) E(b P2|_{J^c})`; the empty restriction
/// contributes `1` to the first factor.
pub fn lattice_count_diff(p1: &AntiBlockingPolytope, p2: &AntiBlockingPolytope, a: i64, b: i64) -> Result<u64> {
    if !p1.is_dual_integral() {
        return Err(Error::NotDualIntegral);
    }
    let n = p1.n;
    let mut total = 0u64;
    for j in 0..=full(n) {
        let inner = count(&p1.restrict(j)?, a + 1, true)?;
        let outer = count(&p2.restrict(full(n) & !j)?, b, false)?;
        total += inner * outer;
    }
    Ok(total)
}

/// `E(aP1 - bP2)` by direct enumeration of the hull of `aV(P1) - bV(P2)`.
pub fn lattice_count_diff_direct(p1: &AntiBlockingPolytope, p2: &AntiBlockingPolytope, a: i64, b: i64) -> Result<u64> {
    let v2 = p2.vertices()?;
    let mut pts = Vec::new();
    for x in p1.vertices()? {
        for y in &v2 {
            pts.push(x.iter().zip(y).map(|(u, w)| u * q(a) - w * q(b)).collect::<Vec<Q>>());
        }
    }
    let p = QPolytope::from_points(&pts)?;
    lattice::count_points(&p, 1, false, lattice::DEFAULT_POINT_BUDGET)
}

fn ehrhart_ab(p: &AntiBlockingPolytope) -> Result<Poly> {
    if p.n == 0 {
        return Ok(Poly::constant(Q::one()));
    }
    lattice::ehrhart(&p.to_polytope()?)
}

fn lattice_pair(p1: &AntiBlockingPolytope, p2: &AntiBlockingPolytope) -> Result<()> {
    if !p1.is_dual_integral() {
        return Err(Error::NotDualIntegral);
    }
    if !p1.is_lattice() || !p2.is_lattice() {
        return Err(Error::NotLatticePolytope);
    }
    Ok(())
}

/// `ehr_{P1-P2}(k) = sum_J (-1)^|J| ehr_{P1|_J}(-k-1) ehr_{P2|_{J^c}}(k)`.
pub fn ehrhart_diff(p1: &AntiBlockingPolytope, p2: &AntiBlockingPolytope) -> Result<Poly> {
    lattice_pair(p1, p2)?;
    let n = p1.n;
    let mut total = Poly::zero();
    for j in 0..=full(n) {
        let e1 = ehrhart_ab(&p1.restrict(j)?)?.compose_affine(&-Q::one(), &-Q::one());
        let e2 = ehrhart_ab(&p2.restrict(full(n) & !j)?)?;
        let term = e1.mul(&e2);
        total = if j.count_ones() % 2 == 0 { total.add(&term) } else { total.sub(&term) };
    }
    Ok(total)
}

/// The Ehrhart polynomial of `K(2P1, -2P2)` (in `Z^{n+1}`) from
/// `sum_J (-1)^|J| sum_{s=-k..k} ehr_{P1|_J}(s-k-1) ehr_{P2|_{J^c}}(k+s)`,
/// evaluated at `k = 0..n+2` and interpolated.
pub fn ehrhart_cayley(p1: &AntiBlockingPolytope, p2: &AntiBlockingPolytope) -> Result<Poly> {
    lattice_pair(p1, p2)?;
    let n = p1.n;
    let mut parts = Vec::new();
    for j in 0..=full(n) {
        parts.push((j.count_ones() % 2 == 1, ehrhart_ab(&p1.restrict(j)?)?, ehrhart_ab(&p2.restrict(full(n) & !j)?)?));
    }
    let value = |k: i64| -> Q {
        let mut total = Q::zero();
        for (odd, e1, e2) in &parts {
            let mut inner = Q::zero();
            for s in -k..=k {
                inner += e1.eval_int(s - k - 1) * e2.eval_int(k + s);
            }
            if *odd {
                total -= inner;
            } else {
                total += inner;
            }
        }
        total
    };
    let d = n as i64 + 1;
    let pts: Vec<(Q, Q)> = (0..=d).map(|k| (q(k), value(k))).collect();
    let poly = Poly::interpolate(&pts);
    if poly.eval_int(d + 1) != value(d + 1) {
        return Err(Error::InconsistentVH("Cayley sum counts are not polynomial".into()));
    }
    Ok(poly)
}

/// A reproducible random full-dimensional anti-blocking polytope in `R^n`:
/// between two and four generators with coordinates in `{0, 1/2, 1, 3/2}`.
pub fn random_instance(rng: &mut ChaCha8Rng, n: usize) -> Result<AntiBlockingPolytope> {
    loop {
        let r = rng.gen_range(2..=4);
        let gens: Vec<Vec<Q>> =
            (0..r).map(|_| (0..n).map(|_| Q::new(rng.gen_range(0..4).into(), 2.into())).collect()).collect();
        if (0..n).all(|i| gens.iter().any(|g| g[i].is_positive())) {
            return AntiBlockingPolytope::from_vrep(&gens);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{chain_polytope, stable_set_polytope};
    use crate::geometry::qvec;
    use crate::poset::generators as gen;
    use rand::SeedableRng;

    fn cube(n: usize) -> AntiBlockingPolytope {
        AntiBlockingPolytope::from_vrep(&[vec![Q::one(); n]]).unwrap()
    }

    fn unit() -> AntiBlockingPolytope {
        cube(1)
    }

    #[test]
    fn cube_and_simplex() {
        let c = cube(3);
        assert_eq!(c.generators, vec![qvec(&[1, 1, 1])]);
        assert_eq!(c.normals, vec![qvec(&[0, 0, 1]), qvec(&[0, 1, 0]), qvec(&[1, 0, 0])]);
        let s = AntiBlockingPolytope::from_polytope(&chain_polytope(&gen::chain(3)).unwrap().poly).unwrap();
        assert_eq!(s.normals, vec![qvec(&[1, 1, 1])]);
        assert_eq!(c.associated(), s);
        assert_eq!(c.associated_by_hull().unwrap(), s);
        assert!(c.is_dual_integral());
        let half = AntiBlockingPolytope::from_normals(2, &[vec![Q::new(1.into(), 2.into()), Q::one()]]).unwrap();
        assert!(!half.is_dual_integral());
    }

    #[test]
    fn negative_input_is_rejected() {
        assert_eq!(AntiBlockingPolytope::from_vrep(&[qvec(&[-1, 1])]).unwrap_err(), Error::NegativeCoordinate);
    }

    #[test]
    fn restriction_of_a_chain_polytope() {
        let comb = gen::comb(2);
        let c = AntiBlockingPolytope::from_polytope(&chain_polytope(&comb).unwrap().poly).unwrap();
        let a1 = comb.index_of("a1").unwrap();
        let b2 = comb.index_of("b2").unwrap();
        let r = c.restrict(bit(a1) | bit(b2)).unwrap();
        let sub = comb.restrict(bit(a1) | bit(b2));
        let direct = AntiBlockingPolytope::from_polytope(&chain_polytope(&sub).unwrap().poly).unwrap();
        assert_eq!(r, direct);
        assert_eq!(c.restrict(0).unwrap().n, 0);
        assert_eq!(cube(3).restrict(0b101).unwrap(), cube(2));
    }

    #[test]
    fn unit_interval_difference_and_cayley() {
        let (k, d) = cayley_and_minkowski(&unit(), &unit()).unwrap();
        assert_eq!(d.sorted_vertices().unwrap(), vec![qvec(&[-1]), qvec(&[1])]);
        assert_eq!(k.sorted_vertices().unwrap(), vec![qvec(&[-1, -1]), qvec(&[0, -1]), qvec(&[0, 1]), qvec(&[1, 1])]);
        k.certify().unwrap();
        let cells = canonical_subdivision(&unit(), &unit()).unwrap();
        let mut verts: Vec<Vec<Vec<Q>>> = cells.iter().map(|c| c.poly.sorted_vertices().unwrap()).collect();
        verts.sort();
        assert_eq!(verts, vec![vec![qvec(&[-1]), qvec(&[0])], vec![qvec(&[0]), qvec(&[1])]]);
    }

    #[test]
    fn unit_interval_counts() {
        for a in 1..4 {
            for b in 1..4 {
                let n = lattice_count_diff(&unit(), &unit(), a, b).unwrap();
                assert_eq!(n as i64, a + b + 1);
                assert_eq!(lattice_count_diff_direct(&unit(), &unit(), a, b).unwrap(), n);
            }
        }
        assert_eq!(ehrhart_diff(&unit(), &unit()).unwrap(), Poly::from_ints(&[1, 2]));
        // K(2[0,1], -2[0,1]) has (2k+1)^2 lattice points
        assert_eq!(ehrhart_cayley(&unit(), &unit()).unwrap(), Poly::from_ints(&[1, 4, 4]));
    }

    #[test]
    fn stable_set_polytopes_are_antiblocking() {
        for g in [gen::x_poset().comparability_graph(), crate::poset::Graph::cycle(5), gen::comb(2).comparability_graph()] {
            assert!(is_antiblocking(&stable_set_polytope(&g).unwrap().poly).unwrap());
        }
        let shifted = QPolytope::from_points(&[qvec(&[1, 1]), qvec(&[2, 1]), qvec(&[1, 2])]).unwrap();
        assert!(!is_antiblocking(&shifted).unwrap());
    }

    #[test]
    fn random_instances_are_involutive() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=3 {
            let p = random_instance(&mut rng, n).unwrap();
            let a = p.associated_by_hull().unwrap();
            assert_eq!(a, p.associated());
            assert_eq!(a.associated_by_hull().unwrap(), p);
        }
    }

    #[test]
    fn difference_facets_match_hull() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 1..=3 {
            let p1 = random_instance(&mut rng, n).unwrap();
            let p2 = random_instance(&mut rng, n).unwrap();
            let d = minkowski_difference(&p1, &p2).unwrap();
            let mut pts = Vec::new();
            for a in p1.vertices().unwrap() {
                for b in p2.vertices().unwrap() {
                    pts.push(a.iter().zip(&b).map(|(x, y)| x - y).collect::<Vec<Q>>());
                }
            }
            let h = QPolytope::from_points(&pts).unwrap();
            assert_eq!(d.sorted_facets().unwrap(), h.sorted_facets().unwrap());
            assert_eq!(d.sorted_vertices().unwrap(), h.sorted_vertices().unwrap());
        }
    }
}

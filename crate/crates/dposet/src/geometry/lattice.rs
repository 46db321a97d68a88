//! Lattice points of dilates and Ehrhart polynomials.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::{linalg, QPolytope};
use crate::poly::Poly;
use crate::{Error, Result, Q};

/// Default cap on search nodes visited while enumerating lattice points.
pub const DEFAULT_POINT_BUDGET: u64 = 10_000_000;

/// A polytope in lattice coordinates as an integer system `A z <= b` with a
/// bounding box.
struct IntSystem {
    a: Vec<Vec<i64>>,
    b: Vec<i64>,
    lo: Vec<i64>,
    hi: Vec<i64>,
}

fn floor_q(x: &Q) -> i64 {
    x.floor().to_integer().to_i64().expect("coordinate fits in i64")
}

fn ceil_q(x: &Q) -> i64 {
    x.ceil().to_integer().to_i64().expect("coordinate fits in i64")
}

impl IntSystem {
    fn new(p: &QPolytope, k: i64, strict: bool) -> Result<IntSystem> {
        let lp = p.to_lattice_coords();
        let verts = lp.vertices()?;
        let d = lp.ambient_dim;
        let kq = Q::from_integer(k.into());
        let mut lo = vec![i64::MAX; d];
        let mut hi = vec![i64::MIN; d];
        for v in verts {
            for i in 0..d {
                let x = &v[i] * &kq;
                lo[i] = lo[i].min(ceil_q(&x));
                hi[i] = hi[i].max(floor_q(&x));
            }
        }
        let mut a = Vec::new();
        let mut b = Vec::new();
        for h in lp.inequalities()? {
            let mut v = h.normal.clone();
            v.push(h.rhs.clone());
            let ints = linalg::primitive_integer(&v);
            let row: Option<Vec<i64>> = ints.iter().map(|x| x.to_i64()).collect();
            let row = row.ok_or_else(|| Error::TooLarge("inequality coefficients exceed i64".into()))?;
            let rhs = row[d].checked_mul(k).ok_or_else(|| Error::TooLarge("dilated right-hand side".into()))?;
            a.push(row[..d].to_vec());
            b.push(if strict { rhs - 1 } else { rhs });
        }
        Ok(IntSystem { a, b, lo, hi })
    }

    fn visit(&self, budget: u64, mut f: impl FnMut(&[i64])) -> Result<()> {
        let d = self.lo.len();
        let m = self.a.len();
        if d == 0 {
            if self.b.iter().all(|&x| x >= 0) {
                f(&[]);
            }
            return Ok(());
        }
        if (0..d).any(|i| self.lo[i] > self.hi[i]) {
            return Ok(());
        }
        // rem[j][i]: least possible value of sum_{l >= j} a_il z_l over the box
        let mut rem = vec![vec![0i64; m]; d + 1];
        for j in (0..d).rev() {
            for i in 0..m {
                let c = self.a[i][j];
                rem[j][i] = rem[j + 1][i] + (c * self.lo[j]).min(c * self.hi[j]);
            }
        }
        let mut z = vec![0i64; d];
        let mut partial = vec![vec![0i64; m]; d + 1];
        let mut visited = 0u64;
        self.descend(0, &rem, &mut partial, &mut z, &mut visited, budget, &mut f)
    }

    #[allow(clippy::too_many_arguments)]
    fn descend(
        &self,
        j: usize,
        rem: &[Vec<i64>],
        partial: &mut Vec<Vec<i64>>,
        z: &mut Vec<i64>,
        visited: &mut u64,
        budget: u64,
        f: &mut impl FnMut(&[i64]),
    ) -> Result<()> {
        let d = z.len();
        if j == d {
            f(z);
            return Ok(());
        }
        let (mut lo, mut hi) = (self.lo[j], self.hi[j]);
        for i in 0..self.a.len() {
            let c = self.a[i][j];
            if c == 0 {
                continue;
            }
            let room = self.b[i] - partial[j][i] - rem[j + 1][i];
            if c > 0 {
                hi = hi.min(room.div_euclid(c));
            } else {
                lo = lo.max(-(room.div_euclid(-c)));
            }
        }
        for x in lo..=hi {
            *visited += 1;
            if *visited > budget {
                return Err(Error::TooLarge(format!("lattice point search exceeded budget {budget}")));
            }
            z[j] = x;
            for i in 0..self.a.len() {
                partial[j + 1][i] = partial[j][i] + self.a[i][j] * x;
            }
            self.descend(j + 1, rem, partial, z, visited, budget, f)?;
        }
        Ok(())
    }
}

/// Number of lattice points in `k P` (or its relative interior when
/// `strict`), counted in the polytope's lattice. `P` must be full-dimensional
/// with a facet description for the strict variant to mean the interior.
pub fn count_points(p: &QPolytope, k: i64, strict: bool, budget: u64) -> Result<u64> {
    let sys = IntSystem::new(p, k, strict)?;
    let mut n = 0u64;
    sys.visit(budget, |_| n += 1)?;
    Ok(n)
}

/// The lattice points of `k P` in lattice coordinates, in lexicographic order.
pub fn lattice_points(p: &QPolytope, k: i64, strict: bool, budget: u64) -> Result<Vec<Vec<i64>>> {
    let sys = IntSystem::new(p, k, strict)?;
    let mut out = Vec::new();
    sys.visit(budget, |z| out.push(z.to_vec()))?;
    Ok(out)
}

/// The Ehrhart polynomial with respect to the polytope's lattice.
///
/// Counts at `k = 1..=d+1` and the value `1` at `k = 0` are interpolated;
/// the result must have degree at most `d` and be integral at `k = d + 2`.
pub fn ehrhart(p: &QPolytope) -> Result<Poly> {
    ehrhart_with_budget(p, DEFAULT_POINT_BUDGET)
}

pub fn ehrhart_with_budget(p: &QPolytope, budget: u64) -> Result<Poly> {
    if !p.is_lattice_polytope()? {
        return Err(Error::NotLatticePolytope);
    }
    let d = p.ambient_dim;
    let mut pts = vec![(0i64, BigInt::from(1))];
    for k in 1..=d as i64 + 1 {
        pts.push((k, BigInt::from(count_points(p, k, false, budget)?)));
    }
    let poly = Poly::interpolate_ints(&pts);
    if poly.degree().is_some_and(|g| g > d) || poly.eval_integer(d as i64 + 2).is_none() {
        return Err(Error::InconsistentVH("lattice point counts are not polynomial".into()));
    }
    Ok(poly)
}

/// Normalised volume `d! * vol` read off the Ehrhart polynomial.
pub fn nvol_from_ehrhart(e: &Poly, d: usize) -> Q {
    let fact: BigInt = (1..=d as u64).map(BigInt::from).product();
    if e.degree() != Some(d) {
        return Q::zero();
    }
    e.leading() * Q::from_integer(fact)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{qvec, tests::square, Inequality};

    #[test]
    fn square_counts() {
        let s = square();
        assert_eq!(count_points(&s, 2, false, 1000).unwrap(), 9);
        assert_eq!(count_points(&s, 3, true, 1000).unwrap(), 4);
        let e = ehrhart(&s).unwrap();
        assert_eq!(e, Poly::from_ints(&[1, 2, 1]));
        // reciprocity: interior of 3*square has e(-3) = 4 points
        assert_eq!(e.eval_int(-3), Q::from_integer(4.into()));
    }

    #[test]
    fn segment_and_triangle() {
        let seg = QPolytope::new(1, Some(vec![qvec(&[0]), qvec(&[1])]), Some(vec![Inequality::from_ints(&[-1], 0), Inequality::from_ints(&[1], 1)]));
        assert_eq!(ehrhart(&seg).unwrap(), Poly::from_ints(&[1, 1]));
        // order polytope of a 2-chain: 0 <= f(a) <= f(b) <= 1
        let tri = QPolytope::new(
            2,
            Some(vec![qvec(&[0, 0]), qvec(&[0, 1]), qvec(&[1, 1])]),
            Some(vec![Inequality::from_ints(&[-1, 0], 0), Inequality::from_ints(&[1, -1], 0), Inequality::from_ints(&[0, 1], 1)]),
        );
        assert_eq!(count_points(&tri, 1, false, 100).unwrap(), 3);
        assert_eq!(lattice_points(&tri, 1, false, 100).unwrap(), vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn budget_is_enforced() {
        let s = square();
        assert_eq!(count_points(&s, 100, false, 50).unwrap_err().name(), "TooLarge");
    }
}

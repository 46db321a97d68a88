//! Simplex volumes, triangulation checks and pulling triangulations.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::faces::FaceLattice;
use super::{linalg, QPolytope};
use crate::{Error, Result, Q};

/// A simplex as sorted indices into a vertex list.
pub type Simplex = Vec<usize>;

fn edge_matrix(points: &[&Vec<Q>]) -> Vec<Vec<Q>> {
    let d = points[0].len();
    (0..d).map(|i| points[1..].iter().map(|p| &p[i] - &points[0][i]).collect()).collect()
}

/// Normalised volume `|det(v_1 - v_0, ..., v_d - v_0)|` of a simplex given
/// in lattice coordinates.
pub fn simplex_nvol(points: &[&Vec<Q>]) -> Result<Q> {
    let Some(first) = points.first() else {
        return Err(Error::Degenerate("simplex without vertices".into()));
    };
    let d = first.len();
    if points.len() != d + 1 {
        return Err(Error::DimensionMismatch { expected: d + 1, got: points.len() });
    }
    let det = linalg::det(&edge_matrix(points));
    if det.is_zero() {
        return Err(Error::Degenerate("simplex is not full-dimensional".into()));
    }
    Ok(det.abs())
}

/// Strict-interior test for one cell, in integer arithmetic: with `M` the
/// edge matrix and `adj = det(M) M^{-1}`, a point `S / W` is inside iff all
/// entries of `sign(det) adj (S - W v_0)` are positive with sum below
/// `W |det|`.
struct CellTest {
    v0: Vec<i128>,
    adj: Vec<Vec<i128>>,
    det: i128,
}

fn to_i128(x: &Q) -> Result<i128> {
    x.to_integer().to_i128().ok_or_else(|| Error::TooLarge("coordinates exceed i128".into()))
}

impl CellTest {
    fn new(points: &[&Vec<i128>]) -> Result<CellTest> {
        let qpts: Vec<Vec<Q>> = points.iter().map(|p| p.iter().map(|&x| Q::from_integer(x.into())).collect()).collect();
        let refs: Vec<&Vec<Q>> = qpts.iter().collect();
        let m = edge_matrix(&refs);
        let det = linalg::det(&m);
        let inv = linalg::inverse(&m).ok_or_else(|| Error::Degenerate("degenerate cell".into()))?;
        let adj = inv.iter().map(|r| r.iter().map(|x| to_i128(&(x * &det))).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
        Ok(CellTest { v0: points[0].clone(), adj, det: to_i128(&det)? })
    }

    fn strictly_inside(&self, s: &[i128], w: i128) -> Option<bool> {
        let diff: Vec<i128> = s.iter().zip(&self.v0).map(|(a, b)| w.checked_mul(*b).and_then(|x| a.checked_sub(x))).collect::<Option<_>>()?;
        let sign = self.det.signum();
        let mut total: i128 = 0;
        for row in &self.adj {
            let mut l: i128 = 0;
            for (a, x) in row.iter().zip(&diff) {
                l = l.checked_add(a.checked_mul(*x)?)?;
            }
            l *= sign;
            if l <= 0 {
                return Some(false);
            }
            total = total.checked_add(l)?;
        }
        Some(total < w.checked_mul(self.det.abs())?)
    }
}

/// Total normalised volume of `cells` (indices into the vertices of `p`, in
/// the lattice of `p`). Sample points of every cell (its barycentre and one
/// point pushed towards each vertex) are checked to lie in the interior of
/// no other cell, which catches overlapping cells.
pub fn triangulation_nvol(p: &QPolytope, cells: &[Simplex]) -> Result<Q> {
    let lp = p.to_lattice_coords();
    let verts = lp.vertices()?;
    let scale = verts.iter().fold(BigInt::from(1), |acc, v| num_integer::Integer::lcm(&acc, &linalg::common_denominator(v)));
    let sq = Q::from_integer(scale);
    let ints: Vec<Vec<i128>> =
        verts.iter().map(|v| v.iter().map(|x| to_i128(&(x * &sq))).collect::<Result<Vec<_>>>()).collect::<Result<Vec<_>>>()?;
    let d = lp.ambient_dim;
    let mut total = Q::zero();
    let mut tests = Vec::with_capacity(cells.len());
    let mut samples: Vec<(Vec<i128>, i128)> = Vec::new();
    let mut owner = Vec::new();
    for (ci, c) in cells.iter().enumerate() {
        let pts: Vec<&Vec<Q>> = c.iter().map(|&i| &verts[i]).collect();
        total += simplex_nvol(&pts)?;
        let ipts: Vec<&Vec<i128>> = c.iter().map(|&i| &ints[i]).collect();
        tests.push(CellTest::new(&ipts)?);
        let sum: Vec<i128> = (0..d).map(|i| ipts.iter().map(|v| v[i]).sum()).collect();
        let k = ipts.len() as i128;
        samples.push((sum.clone(), k));
        owner.push(ci);
        for v in &ipts {
            let s: Vec<i128> = (0..d).map(|i| sum[i] + (k + 1) * v[i]).collect();
            samples.push((s, 2 * k + 1));
            owner.push(ci);
        }
    }
    for (si, (s, w)) in samples.iter().enumerate() {
        for (j, t) in tests.iter().enumerate() {
            if owner[si] == j {
                continue;
            }
            match t.strictly_inside(s, *w) {
                Some(true) => return Err(Error::InconsistentVH(format!("cells {} and {j} overlap", owner[si]))),
                Some(false) => {}
                None => return Err(Error::TooLarge("overlap test overflowed".into())),
            }
        }
    }
    Ok(total)
}

/// Whether every cell has normalised volume one in the lattice of `p`.
pub fn is_unimodular(p: &QPolytope, cells: &[Simplex]) -> Result<bool> {
    let lp = p.to_lattice_coords();
    let verts = lp.vertices()?;
    for c in cells {
        let pts: Vec<&Vec<Q>> = c.iter().map(|&i| &verts[i]).collect();
        if simplex_nvol(&pts)? != Q::from_integer(1.into()) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Pulling triangulation: in each face pull its earliest vertex in `order`
/// and cone it over the pulled triangulations of the facets of the face
/// that miss it.
pub fn pulling_triangulation(fl: &FaceLattice, order: &[usize]) -> Vec<Simplex> {
    let mut rank = vec![usize::MAX; fl.nverts];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let mut memo: HashMap<usize, Vec<Simplex>> = HashMap::new();
    let mut out = pull(fl, fl.root(), &rank, &mut memo);
    out.sort();
    out
}

fn pull(fl: &FaceLattice, id: usize, rank: &[usize], memo: &mut HashMap<usize, Vec<Simplex>>) -> Vec<Simplex> {
    if let Some(s) = memo.get(&id) {
        return s.clone();
    }
    let face = &fl.faces[id];
    let verts: Vec<usize> = face.vertices.ones().collect();
    let result = if verts.len() as isize == face.dim + 1 {
        vec![verts]
    } else {
        let v = *verts.iter().min_by_key(|&&u| (rank[u], u)).unwrap();
        let mut cells = Vec::new();
        for &g in &face.facets {
            if fl.faces[g].vertices.contains(v) {
                continue;
            }
            for mut s in pull(fl, g, rank, memo) {
                s.push(v);
                s.sort_unstable();
                cells.push(s);
            }
        }
        cells
    };
    memo.insert(id, result.clone());
    result
}

/// Normalised volume of a polytope from one of its pulling triangulations.
pub fn pulling_volume(p: &QPolytope) -> Result<Q> {
    let fl = p.face_lattice()?;
    let order: Vec<usize> = (0..fl.nverts).collect();
    let cells = pulling_triangulation(&fl, &order);
    let lp = p.to_lattice_coords();
    let verts = lp.vertices()?;
    let mut total = Q::zero();
    for c in &cells {
        let pts: Vec<&Vec<Q>> = c.iter().map(|&i| &verts[i]).collect();
        total += simplex_nvol(&pts)?;
    }
    Ok(total)
}

/// Normalised volume as an integer, when it is one.
pub fn as_integer(q: &Q) -> Option<i128> {
    if q.is_integer() {
        q.to_integer().to_i128()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{qvec, tests::square};

    #[test]
    fn unit_simplex() {
        let pts = [qvec(&[0, 0, 0]), qvec(&[1, 0, 0]), qvec(&[0, 1, 0]), qvec(&[0, 0, 1])];
        let refs: Vec<&Vec<Q>> = pts.iter().collect();
        assert_eq!(simplex_nvol(&refs).unwrap(), Q::from_integer(1.into()));
        let flat = [qvec(&[0, 0]), qvec(&[1, 1]), qvec(&[2, 2])];
        let refs: Vec<&Vec<Q>> = flat.iter().collect();
        assert_eq!(simplex_nvol(&refs).unwrap_err().name(), "Degenerate");
    }

    #[test]
    fn square_pulls_into_two_triangles() {
        let s = square();
        let fl = s.face_lattice().unwrap();
        for order in [vec![0, 1, 2, 3], vec![3, 2, 1, 0], vec![1, 2, 0, 3]] {
            let cells = pulling_triangulation(&fl, &order);
            assert_eq!(cells.len(), 2);
            assert_eq!(triangulation_nvol(&s, &cells).unwrap(), Q::from_integer(2.into()));
            assert!(is_unimodular(&s, &cells).unwrap());
        }
        assert_eq!(pulling_volume(&s).unwrap(), Q::from_integer(2.into()));
    }

    #[test]
    fn overlapping_cells_are_rejected() {
        let s = square();
        // vertices 0=(0,0) 1=(1,0) 2=(0,1) 3=(1,1); both diagonals' triangles overlap
        let cells = vec![vec![0, 1, 3], vec![0, 1, 2]];
        assert_eq!(triangulation_nvol(&s, &cells).unwrap_err().name(), "InconsistentVH");
    }

    #[test]
    fn cube_pulling_volume() {
        let mut pts = Vec::new();
        for m in 0..8i64 {
            pts.push(qvec(&[m & 1, m >> 1 & 1, m >> 2 & 1]));
        }
        let cube = QPolytope::from_points(&pts).unwrap();
        let fl = cube.face_lattice().unwrap();
        let cells = pulling_triangulation(&fl, &(0..8).collect::<Vec<_>>());
        assert_eq!(cells.len(), 6);
        assert_eq!(triangulation_nvol(&cube, &cells).unwrap(), Q::from_integer(6.into()));
    }
}

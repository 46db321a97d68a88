//! Exact rational polytopes: representations, lattices, polarity, levelness
//! and reflexivity.

pub mod faces;
pub mod hull;
pub mod lattice;
pub mod linalg;
pub mod triangulation;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result, Q};

pub use faces::FaceLattice;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

pub fn qvec(v: &[i64]) -> Vec<Q> {
    v.iter().map(|&x| q(x)).collect()
}

/// `<normal, x> <= rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Inequality {
    pub normal: Vec<Q>,
    pub rhs: Q,
}

impl Inequality {
    pub fn new(normal: Vec<Q>, rhs: Q) -> Inequality {
        Inequality { normal, rhs }
    }

    pub fn from_ints(normal: &[i64], rhs: i64) -> Inequality {
        Inequality { normal: qvec(normal), rhs: q(rhs) }
    }

    pub fn value(&self, x: &[Q]) -> Q {
        linalg::dot(&self.normal, x)
    }

    pub fn satisfied(&self, x: &[Q]) -> bool {
        self.value(x) <= self.rhs
    }

    pub fn tight(&self, x: &[Q]) -> bool {
        self.value(x) == self.rhs
    }

    /// Positive rescaling with a primitive integer normal/rhs vector.
    pub fn primitive(&self) -> Inequality {
        let mut v = self.normal.clone();
        v.push(self.rhs.clone());
        let ints = linalg::primitive_integer(&v);
        let d = self.normal.len();
        Inequality { normal: ints[..d].iter().map(|x| Q::from_integer(x.clone())).collect(), rhs: Q::from_integer(ints[d].clone()) }
    }
}

/// The affine lattice `offset + basis * Z^d`, basis given by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineLattice {
    pub basis: Vec<Vec<Q>>,
    pub offset: Vec<Q>,
}

impl AffineLattice {
    pub fn standard(d: usize) -> AffineLattice {
        AffineLattice { basis: linalg::identity(d), offset: vec![Q::zero(); d] }
    }

    /// `2 Z^n x (2Z + 1)`, the lattice of the double poset polytopes.
    pub fn doubled(n: usize) -> AffineLattice {
        AffineLattice::cayley(n, 2)
    }

    /// `s Z^n x (2Z + 1)`, the lattice of a Cayley sum `K(sP, -sQ)` of
    /// lattice polytopes.
    pub fn cayley(n: usize, s: i64) -> AffineLattice {
        let mut basis = linalg::identity(n + 1);
        for (i, row) in basis.iter_mut().enumerate() {
            row[i] = if i == n { q(2) } else { q(s) };
        }
        let mut offset = vec![Q::zero(); n + 1];
        offset[n] = Q::one();
        AffineLattice { basis, offset }
    }

    pub fn dim(&self) -> usize {
        self.offset.len()
    }

    pub fn is_standard(&self) -> bool {
        *self == AffineLattice::standard(self.dim())
    }

    /// Lattice coordinates `z` with `x = offset + B z`.
    pub fn coords(&self, x: &[Q]) -> Vec<Q> {
        let inv = linalg::inverse(&self.basis).expect("lattice basis is invertible");
        let diff: Vec<Q> = x.iter().zip(&self.offset).map(|(a, b)| a - b).collect();
        inv.iter().map(|r| linalg::dot(r, &diff)).collect()
    }

    pub fn contains(&self, x: &[Q]) -> bool {
        self.coords(x).iter().all(|c| c.is_integer())
    }

    /// Whether the functional `y` takes integer values on every lattice point.
    pub fn dual_contains(&self, y: &[Q]) -> bool {
        if !linalg::dot(y, &self.offset).is_integer() {
            return false;
        }
        let d = self.dim();
        (0..d).all(|j| {
            let col: Vec<Q> = (0..d).map(|i| self.basis[i][j].clone()).collect();
            linalg::dot(y, &col).is_integer()
        })
    }

    /// The lattice of functionals integral on this lattice, when the basis is
    /// diagonal and at most one offset coordinate is fractional relative to
    /// it (enough for the lattices used here).
    pub fn dual(&self) -> Result<AffineLattice> {
        let d = self.dim();
        let diagonal = (0..d).all(|i| (0..d).all(|j| i == j || self.basis[i][j].is_zero()));
        if !diagonal {
            return Err(Error::InvalidInput("dual of a non-diagonal lattice".into()));
        }
        let mut basis = linalg::identity(d);
        let mut frac = Vec::new();
        for i in 0..d {
            let b = &self.basis[i][i];
            let w = &self.offset[i] / b;
            basis[i][i] = b.recip().abs();
            if !w.is_integer() {
                frac.push((i, w));
            }
        }
        match frac.as_slice() {
            [] => {}
            [(i, w)] => {
                let f = w - w.floor();
                basis[*i][*i] = &basis[*i][*i] * Q::from_integer(f.denom().clone());
            }
            _ => return Err(Error::InvalidInput("dual lattice needs a Hermite normal form".into())),
        }
        Ok(AffineLattice { basis, offset: vec![Q::zero(); d] })
    }
}

/// An exact polytope with optional vertex and facet descriptions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolytope {
    pub ambient_dim: usize,
    pub vertices: Option<Vec<Vec<Q>>>,
    pub inequalities: Option<Vec<Inequality>>,
    pub lattice: AffineLattice,
}

/// Vertex-facet incidences: `rows[f]` holds the vertices on facet `f`.
#[derive(Clone, Debug)]
pub struct Incidence {
    pub nverts: usize,
    pub rows: Vec<FixedBitSet>,
}

impl QPolytope {
    pub fn new(ambient_dim: usize, vertices: Option<Vec<Vec<Q>>>, inequalities: Option<Vec<Inequality>>) -> QPolytope {
        QPolytope { ambient_dim, vertices, inequalities, lattice: AffineLattice::standard(ambient_dim) }
    }

    pub fn with_lattice(mut self, lattice: AffineLattice) -> QPolytope {
        self.lattice = lattice;
        self
    }

    /// Polytope given by points; facets computed by double description and
    /// non-extreme points dropped.
    pub fn from_points(points: &[Vec<Q>]) -> Result<QPolytope> {
        let d = points.first().map_or(0, |p| p.len());
        let verts = hull::extreme_points(points)?;
        let (ineqs, eqs) = hull::facets_of_points(&verts)?;
        if !eqs.is_empty() {
            return Err(Error::NotFullDimensional);
        }
        Ok(QPolytope::new(d, Some(verts), Some(ineqs)))
    }

    /// Polytope given by inequalities; vertices computed by double
    /// description and redundant inequalities dropped.
    pub fn from_inequalities(dim: usize, ineqs: Vec<Inequality>) -> Result<QPolytope> {
        let verts = hull::vertices_of_inequalities(&ineqs, dim)?;
        let p = QPolytope::new(dim, Some(verts), Some(ineqs));
        p.irredundant()
    }

    pub fn vertices(&self) -> Result<&Vec<Vec<Q>>> {
        self.vertices.as_ref().ok_or(Error::MissingRep("vertices"))
    }

    pub fn inequalities(&self) -> Result<&Vec<Inequality>> {
        self.inequalities.as_ref().ok_or(Error::MissingRep("inequalities"))
    }

    /// Fills in the facet description by double description if missing.
    pub fn ensure_inequalities(mut self) -> Result<QPolytope> {
        if self.inequalities.is_none() {
            let (ineqs, eqs) = hull::facets_of_points(self.vertices()?)?;
            if !eqs.is_empty() {
                return Err(Error::NotFullDimensional);
            }
            self.inequalities = Some(ineqs);
        }
        Ok(self)
    }

    /// Dimension of the affine hull of the vertices.
    pub fn dim(&self) -> Result<isize> {
        let v = self.vertices()?;
        Ok(linalg::affine_dim(&v.iter().collect::<Vec<_>>()))
    }

    pub fn incidence(&self) -> Result<Incidence> {
        let verts = self.vertices()?;
        let ineqs = self.inequalities()?;
        let ev = IntEval::new(verts);
        let rows = ineqs
            .iter()
            .map(|h| {
                let (a, b) = ev.prepare(h);
                let mut row = FixedBitSet::with_capacity(verts.len());
                for v in 0..verts.len() {
                    if ev.slack(v, &a, &b).is_zero() {
                        row.insert(v);
                    }
                }
                row
            })
            .collect();
        Ok(Incidence { nverts: verts.len(), rows })
    }

    /// Checks that both descriptions describe the same full-dimensional
    /// polytope: every vertex satisfies every inequality, each inequality is
    /// tight on a codimension-one set of vertices, each vertex lies on at
    /// least `dim` facets, and the tight normals at each vertex have full
    /// rank.
    pub fn certify(&self) -> Result<()> {
        let verts = self.vertices()?;
        let ineqs = self.inequalities()?;
        let d = self.ambient_dim;
        if self.dim()? != d as isize {
            return Err(Error::NotFullDimensional);
        }
        let ev = IntEval::new(verts);
        let mut per_vertex: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
        for (fi, h) in ineqs.iter().enumerate() {
            let (a, b) = ev.prepare(h);
            let mut tight = Vec::new();
            for v in 0..verts.len() {
                let s = ev.slack(v, &a, &b);
                if s.is_negative() {
                    return Err(Error::InconsistentVH(format!("vertex {v} violates inequality {fi}")));
                }
                if s.is_zero() {
                    tight.push(&verts[v]);
                    per_vertex[v].push(fi);
                }
            }
            if linalg::affine_dim(&tight) != d as isize - 1 {
                return Err(Error::InconsistentVH(format!("inequality {fi} is not facet-defining")));
            }
        }
        for (v, fs) in per_vertex.iter().enumerate() {
            let normals: Vec<Vec<Q>> = fs.iter().map(|&f| ineqs[f].normal.clone()).collect();
            if fs.len() < d || linalg::rank(&normals) != d {
                return Err(Error::InconsistentVH(format!("vertex {v} is not a vertex of the inequality system")));
            }
        }
        Ok(())
    }

    /// Keeps only facet-defining inequalities (tight on a codimension-one set
    /// of vertices), merging inequalities that define the same facet.
    pub fn irredundant(mut self) -> Result<QPolytope> {
        let keep = self.facet_indices()?;
        let ineqs = self.inequalities()?;
        let kept = keep.iter().map(|&i| ineqs[i].clone()).collect();
        self.inequalities = Some(kept);
        Ok(self)
    }

    /// Indices of the inequalities that define distinct facets, first
    /// occurrence kept.
    pub fn facet_indices(&self) -> Result<Vec<usize>> {
        let verts = self.vertices()?;
        let d = self.ambient_dim as isize;
        let inc = self.incidence()?;
        let mut seen: Vec<FixedBitSet> = Vec::new();
        let mut keep = Vec::new();
        for (i, row) in inc.rows.into_iter().enumerate() {
            if seen.contains(&row) {
                continue;
            }
            let tight: Vec<&Vec<Q>> = row.ones().map(|v| &verts[v]).collect();
            if linalg::affine_dim(&tight) == d - 1 {
                seen.push(row);
                keep.push(i);
            }
        }
        Ok(keep)
    }

    /// The same polytope in lattice coordinates, where the lattice is `Z^d`.
    pub fn to_lattice_coords(&self) -> QPolytope {
        let l = &self.lattice;
        let vertices = self.vertices.as_ref().map(|vs| vs.iter().map(|v| l.coords(v)).collect());
        let inequalities = self.inequalities.as_ref().map(|hs| {
            hs.iter()
                .map(|h| {
                    // <a, o + B z> <= b  becomes  <B^T a, z> <= b - <a, o>
                    let d = l.dim();
                    let normal: Vec<Q> = (0..d)
                        .map(|j| (0..d).fold(Q::zero(), |s, i| s + &h.normal[i] * &l.basis[i][j]))
                        .collect();
                    Inequality { normal, rhs: &h.rhs - linalg::dot(&h.normal, &l.offset) }
                })
                .collect()
        });
        QPolytope { ambient_dim: self.ambient_dim, vertices, inequalities, lattice: AffineLattice::standard(self.ambient_dim) }
    }

    pub fn is_lattice_polytope(&self) -> Result<bool> {
        Ok(self.vertices()?.iter().all(|v| self.lattice.contains(v)))
    }

    /// Every facet functional takes exactly two values on the vertices.
    pub fn is_2level(&self) -> Result<bool> {
        let verts = self.vertices()?;
        for h in self.inequalities()? {
            let mut vals: Vec<Q> = verts.iter().map(|v| h.value(v)).collect();
            vals.sort();
            vals.dedup();
            if vals.len() != 2 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn origin_interior(&self) -> Result<bool> {
        Ok(self.inequalities()?.iter().all(|h| h.rhs.is_positive()))
    }

    /// The polar `{y : <x, y> <= 1 for all x in P}`.
    pub fn polar(&self) -> Result<QPolytope> {
        let ineqs = self.inequalities()?;
        let verts = self.vertices()?;
        if !self.origin_interior()? {
            return Err(Error::OriginNotInterior);
        }
        let pv = ineqs.iter().map(|h| h.normal.iter().map(|a| a / &h.rhs).collect()).collect();
        let ph = verts.iter().map(|v| Inequality { normal: v.clone(), rhs: Q::one() }).collect();
        let lattice = self.lattice.dual().unwrap_or_else(|_| AffineLattice::standard(self.ambient_dim));
        Ok(QPolytope { ambient_dim: self.ambient_dim, vertices: Some(pv), inequalities: Some(ph), lattice })
    }

    /// A lattice polytope containing the origin in its interior whose polar
    /// has all vertices in the dual lattice.
    pub fn is_reflexive(&self) -> Result<bool> {
        if !self.origin_interior()? {
            return Err(Error::OriginNotInterior);
        }
        if !self.is_lattice_polytope()? {
            return Ok(false);
        }
        Ok(self.inequalities()?.iter().all(|h| {
            let y: Vec<Q> = h.normal.iter().map(|a| a / &h.rhs).collect();
            self.lattice.dual_contains(&y)
        }))
    }

    pub fn face_lattice(&self) -> Result<FaceLattice> {
        FaceLattice::new(self)
    }

    pub fn contains(&self, x: &[Q]) -> Result<bool> {
        Ok(self.inequalities()?.iter().all(|h| h.satisfied(x)))
    }

    /// Vertices as a sorted list, for representation-independent comparison.
    pub fn sorted_vertices(&self) -> Result<Vec<Vec<Q>>> {
        let mut v = self.vertices()?.clone();
        v.sort();
        Ok(v)
    }

    /// Facets normalised to primitive integer form and sorted.
    pub fn sorted_facets(&self) -> Result<Vec<Inequality>> {
        let mut v: Vec<Inequality> = self.inequalities()?.iter().map(|h| h.primitive()).collect();
        v.sort();
        Ok(v)
    }
}

/// Integer evaluation of inequalities on a fixed vertex set: vertices are
/// scaled to integers once, so each slack is an integer dot product.
pub struct IntEval {
    verts: Vec<Vec<BigInt>>,
    scale: Vec<BigInt>,
    small: Option<Vec<Vec<i64>>>,
}

impl IntEval {
    pub fn new(verts: &[Vec<Q>]) -> IntEval {
        let mut ints = Vec::with_capacity(verts.len());
        let mut scale = Vec::with_capacity(verts.len());
        for v in verts {
            let d = linalg::common_denominator(v);
            ints.push(v.iter().map(|x| (x * Q::from_integer(d.clone())).to_integer()).collect::<Vec<BigInt>>());
            scale.push(d);
        }
        let small = ints
            .iter()
            .zip(&scale)
            .map(|(r, s)| {
                let mut row: Vec<i64> = Vec::with_capacity(r.len() + 1);
                for x in r.iter().chain(std::iter::once(s)) {
                    let v: i64 = i64::try_from(x).ok().filter(|v| v.abs() < 1 << 24)?;
                    row.push(v);
                }
                Some(row)
            })
            .collect();
        IntEval { verts: ints, scale, small }
    }

    /// The inequality as a primitive integer vector `(a, b)`.
    pub fn prepare(&self, h: &Inequality) -> (Vec<BigInt>, BigInt) {
        let mut v = h.normal.clone();
        v.push(h.rhs.clone());
        let mut ints = linalg::primitive_integer(&v);
        let b = ints.pop().unwrap();
        (ints, b)
    }

    /// `b * scale - <a, v>`, positive multiple of the slack of vertex `v`.
    pub fn slack(&self, v: usize, a: &[BigInt], b: &BigInt) -> BigInt {
        if let Some(small) = &self.small {
            let small_a: Option<Vec<i64>> =
                a.iter().chain(std::iter::once(b)).map(|x| i64::try_from(x).ok().filter(|v| v.abs() < 1 << 24)).collect();
            if let Some(sa) = small_a {
                let row = &small[v];
                let d = row.len() - 1;
                let mut s: i128 = sa[d] as i128 * row[d] as i128;
                for i in 0..d {
                    s -= sa[i] as i128 * row[i] as i128;
                }
                return BigInt::from(s);
            }
        }
        let mut s = b * &self.scale[v];
        for (x, y) in a.iter().zip(&self.verts[v]) {
            s -= x * y;
        }
        s
    }
}

/// Exact rational as `p/q` (or `p`).
pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Exact rational as a `[p, q]` pair for JSON output.
pub fn q_json(x: &Q) -> serde_json::Value {
    serde_json::json!([int_json(x.numer()), int_json(x.denom())])
}

fn int_json(x: &BigInt) -> serde_json::Value {
    match i64::try_from(x) {
        Ok(v) => serde_json::Value::from(v),
        Err(_) => serde_json::Value::String(x.to_string()),
    }
}

//! Face lattices from vertex-facet incidences.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;

use super::QPolytope;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Face {
    pub vertices: FixedBitSet,
    pub dim: isize,
    /// Indices of the facets of this face (its maximal proper faces).
    pub facets: Vec<usize>,
}

/// All faces of a polytope, from the polytope itself down to the empty face.
///
/// Faces are generated top-down: the facets of a face `F` are the
/// inclusion-maximal sets `F ∩ G` over facets `G` of the polytope not
/// containing `F`. Dimensions therefore come from the generation depth and no
/// rank computations are needed.
#[derive(Clone, Debug)]
pub struct FaceLattice {
    pub dim: usize,
    pub nverts: usize,
    pub faces: Vec<Face>,
    index: HashMap<FixedBitSet, usize>,
}

impl FaceLattice {
    pub fn new(p: &QPolytope) -> Result<FaceLattice> {
        let inc = p.incidence()?;
        let d = p.dim()?;
        if d < 0 {
            return Err(Error::Degenerate("empty polytope".into()));
        }
        FaceLattice::from_incidence(d as usize, inc.nverts, &inc.rows)
    }

    pub fn from_incidence(dim: usize, nverts: usize, facet_rows: &[FixedBitSet]) -> Result<FaceLattice> {
        let mut all = FixedBitSet::with_capacity(nverts);
        all.insert_range(..);
        let mut faces = vec![Face { vertices: all.clone(), dim: dim as isize, facets: vec![] }];
        let mut index = HashMap::new();
        index.insert(all, 0);
        let mut level = vec![0usize];
        let mut cur_dim = dim as isize;
        while cur_dim >= 0 {
            let mut next = Vec::new();
            for &fid in &level {
                let fv = faces[fid].vertices.clone();
                let children: Vec<FixedBitSet> = if cur_dim == 0 {
                    vec![FixedBitSet::with_capacity(nverts)]
                } else {
                    let mut cands: Vec<FixedBitSet> = Vec::new();
                    for row in facet_rows {
                        if fv.is_subset(row) {
                            continue;
                        }
                        let mut x = fv.clone();
                        x.intersect_with(row);
                        if x.count_ones(..) == 0 || cands.contains(&x) {
                            continue;
                        }
                        cands.push(x);
                    }
                    let maximal: Vec<FixedBitSet> = cands
                        .iter()
                        .filter(|c| !cands.iter().any(|o| o != *c && c.is_subset(o)))
                        .cloned()
                        .collect();
                    if maximal.is_empty() {
                        return Err(Error::InconsistentVH(format!("face of dimension {cur_dim} without facets")));
                    }
                    maximal
                };
                let mut ids = Vec::with_capacity(children.len());
                for c in children {
                    let id = match index.get(&c) {
                        Some(&id) => {
                            if faces[id].dim != cur_dim - 1 {
                                return Err(Error::InconsistentVH("face lattice is not graded".into()));
                            }
                            id
                        }
                        None => {
                            let id = faces.len();
                            index.insert(c.clone(), id);
                            faces.push(Face { vertices: c, dim: cur_dim - 1, facets: vec![] });
                            next.push(id);
                            id
                        }
                    };
                    ids.push(id);
                }
                faces[fid].facets = ids;
            }
            level = next;
            cur_dim -= 1;
        }
        for f in &faces {
            if f.dim == 0 && f.vertices.count_ones(..) != 1 {
                return Err(Error::InconsistentVH("a vertex face holds several points".into()));
            }
        }
        Ok(FaceLattice { dim, nverts, faces, index })
    }

    /// `(f_0, ..., f_{d-1})`, excluding the empty face and the polytope.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0usize; self.dim];
        for face in &self.faces {
            if face.dim >= 0 && (face.dim as usize) < self.dim {
                f[face.dim as usize] += 1;
            }
        }
        f
    }

    pub fn face_of(&self, vertices: &FixedBitSet) -> Option<&Face> {
        self.index.get(vertices).map(|&i| &self.faces[i])
    }

    pub fn is_face(&self, vertices: &FixedBitSet) -> bool {
        self.index.contains_key(vertices)
    }

    pub fn root(&self) -> usize {
        0
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::square;
    use super::*;
    use crate::geometry::qvec;

    #[test]
    fn square_fvector() {
        let fl = square().face_lattice().unwrap();
        assert_eq!(fl.f_vector(), vec![4, 4]);
        assert_eq!(fl.len(), 10);
    }

    #[test]
    fn cube_and_simplex() {
        let mut pts = Vec::new();
        for m in 0..8i64 {
            pts.push(qvec(&[m & 1, m >> 1 & 1, m >> 2 & 1]));
        }
        let cube = QPolytope::from_points(&pts).unwrap();
        assert_eq!(cube.face_lattice().unwrap().f_vector(), vec![8, 12, 6]);
        let simplex = QPolytope::from_points(&[qvec(&[0, 0, 0]), qvec(&[1, 0, 0]), qvec(&[0, 1, 0]), qvec(&[0, 0, 1])]).unwrap();
        assert_eq!(simplex.face_lattice().unwrap().f_vector(), vec![4, 6, 4]);
    }
}

//! Double description conversions between vertex and facet descriptions.
//!
//! The polytope constructors take their facets from closed formulas. This
//! module exists for the places where no formula is available (anti-blocking
//! duals of random instances, Minkowski cells, polars of hulls) and as an
//! independent cross-check of the formulas.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::linalg::primitive_integer;
use super::Inequality;
use crate::{Error, Result, Q};

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    let mut s = BigInt::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

fn normalize(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

fn combine(alpha: &BigInt, u: &[BigInt], beta: &BigInt, w: &[BigInt]) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = u.iter().zip(w).map(|(x, y)| alpha * x - beta * y).collect();
    normalize(&mut out);
    out
}

struct Ray {
    v: Vec<BigInt>,
    zeros: FixedBitSet,
}

/// Extreme rays and a lineality basis of `{y : <row, y> >= 0 for all rows}`.
pub fn cone_rays(rows: &[Vec<BigInt>], dim: usize) -> (Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let m = rows.len();
    let mut lin: Vec<Vec<BigInt>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();
    for (i, a) in rows.iter().enumerate() {
        if let Some(j) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lin.remove(j);
            let mut s = dot(a, &l0);
            if s.is_negative() {
                l0.iter_mut().for_each(|x| *x = -x.clone());
                s = -s;
            }
            for l in lin.iter_mut() {
                let c = dot(a, l);
                if !c.is_zero() {
                    *l = combine(&s, l, &c, &l0);
                }
            }
            for r in rays.iter_mut() {
                let c = dot(a, &r.v);
                if !c.is_zero() {
                    r.v = combine(&s, &r.v, &c, &l0);
                }
                r.zeros.insert(i);
            }
            let mut zeros = FixedBitSet::with_capacity(m);
            zeros.insert_range(..i);
            rays.push(Ray { v: l0, zeros });
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        if neg.is_empty() {
            for (k, r) in rays.iter_mut().enumerate() {
                if vals[k].is_zero() {
                    r.zeros.insert(i);
                }
            }
            continue;
        }
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let mut common = rays[p].zeros.clone();
                common.intersect_with(&rays[q].zeros);
                let adjacent = (0..rays.len()).all(|k| k == p || k == q || !common.is_subset(&rays[k].zeros));
                if !adjacent {
                    continue;
                }
                let v = combine(&vals[p], &rays[q].v, &vals[q], &rays[p].v);
                common.insert(i);
                fresh.push(Ray { v, zeros: common });
            }
        }
        let mut kept = Vec::with_capacity(rays.len() + fresh.len());
        for (k, mut r) in rays.into_iter().enumerate() {
            if vals[k].is_zero() {
                r.zeros.insert(i);
                kept.push(r);
            } else if vals[k].is_positive() {
                kept.push(r);
            }
        }
        kept.extend(fresh);
        rays = kept;
    }
    (rays.into_iter().map(|r| r.v).collect(), lin)
}

fn to_int_row(lead: &Q, rest: &[Q]) -> Vec<BigInt> {
    let mut v = vec![lead.clone()];
    v.extend(rest.iter().cloned());
    primitive_integer(&v)
}

/// Facet inequalities and affine-hull equations `(normal, rhs)` of the convex
/// hull of `points`.
pub fn facets_of_points(points: &[Vec<Q>]) -> Result<(Vec<Inequality>, Vec<Inequality>)> {
    let Some(d) = points.first().map(|p| p.len()) else {
        return Err(Error::Degenerate("hull of no points".into()));
    };
    // y0 + <y, v> >= 0 for every point v
    let rows: Vec<Vec<BigInt>> = points.iter().map(|p| to_int_row(&Q::one(), p)).collect();
    let (rays, lin) = cone_rays(&rows, d + 1);
    let as_ineq = |y: &[BigInt]| Inequality {
        normal: y[1..].iter().map(|x| Q::from_integer(-x.clone())).collect(),
        rhs: Q::from_integer(y[0].clone()),
    };
    let ineqs: Vec<Inequality> = rays.iter().map(|y| as_ineq(y)).collect();
    let eqs: Vec<Inequality> = lin.iter().map(|y| as_ineq(y)).collect();
    Ok((ineqs, eqs))
}

/// Vertices of the bounded polyhedron `{x : <a_i, x> <= b_i}`.
pub fn vertices_of_inequalities(ineqs: &[Inequality], dim: usize) -> Result<Vec<Vec<Q>>> {
    // b*lam - <a, x> >= 0 and lam >= 0 in variables (lam, x)
    let mut rows: Vec<Vec<BigInt>> = ineqs
        .iter()
        .map(|h| {
            let neg: Vec<Q> = h.normal.iter().map(|x| -x.clone()).collect();
            to_int_row(&h.rhs, &neg)
        })
        .collect();
    let mut lam = vec![BigInt::zero(); dim + 1];
    lam[0] = BigInt::one();
    rows.push(lam);
    let (rays, lin) = cone_rays(&rows, dim + 1);
    if !lin.is_empty() {
        return Err(Error::Unbounded);
    }
    let mut out = Vec::with_capacity(rays.len());
    for y in rays {
        if !y[0].is_positive() {
            return Err(Error::Unbounded);
        }
        let l = Q::from_integer(y[0].clone());
        out.push(y[1..].iter().map(|x| Q::from_integer(x.clone()) / &l).collect());
    }
    out.sort();
    Ok(out)
}

/// The points of `candidates` that are vertices of their convex hull, in
/// their original order, with duplicates removed.
pub fn extreme_points(candidates: &[Vec<Q>]) -> Result<Vec<Vec<Q>>> {
    let mut uniq: Vec<Vec<Q>> = Vec::new();
    for c in candidates {
        if !uniq.contains(c) {
            uniq.push(c.clone());
        }
    }
    if uniq.len() <= 1 {
        return Ok(uniq);
    }
    let (ineqs, eqs) = facets_of_points(&uniq)?;
    let d = uniq[0].len();
    let hull_dim = d - eqs.len();
    let mut out = Vec::new();
    for p in &uniq {
        let tight: Vec<Vec<Q>> = ineqs
            .iter()
            .filter(|h| super::linalg::dot(&h.normal, p) == h.rhs)
            .map(|h| h.normal.clone())
            .chain(eqs.iter().map(|h| h.normal.clone()))
            .collect();
        if super::linalg::rank(&tight) == d && (hull_dim > 0 || out.is_empty()) {
            out.push(p.clone());
        }
    }
    Ok(out)
}

//! Exact dense linear algebra over the rationals and the integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Q;

pub type Mat = Vec<Vec<Q>>;

pub fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let m = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    let mut s = Q::zero();
                    for (k, x) in row.iter().enumerate() {
                        if !x.is_zero() && !b[k][j].is_zero() {
                            s += x * &b[k][j];
                        }
                    }
                    s
                })
                .collect()
        })
        .collect()
}

pub fn mat_add(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect()
}

pub fn mat_sub(a: &Mat, b: &Mat) -> Mat {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    let mut s = Q::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// Inverse by Gauss-Jordan elimination, or `None` if singular.
pub fn inverse(a: &Mat) -> Option<Mat> {
    let n = a.len();
    let mut m: Mat = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = r.clone();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Solves `a x = b` for square nonsingular `a`.
pub fn solve(a: &Mat, b: &[Q]) -> Option<Vec<Q>> {
    let inv = inverse(a)?;
    Some(inv.iter().map(|r| dot(r, b)).collect())
}

/// Determinant by fraction-free elimination on integer entries.
pub fn det_int(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else { return BigInt::zero() };
        if p != k {
            m.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

pub fn det(a: &Mat) -> Q {
    let n = a.len();
    let mut m = a.clone();
    let mut d = Q::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else { return Q::zero() };
        if piv != col {
            m.swap(piv, col);
            d = -d;
        }
        d *= &m[col][col];
        let inv = m[col][col].recip();
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let f = &m[r][col] * &inv;
                let pivot_row = m[col].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
    }
    d
}

/// Least common multiple of the denominators of `v`.
pub fn common_denominator(v: &[Q]) -> BigInt {
    v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// `v` scaled by a positive integer to a primitive integer vector.
pub fn primitive_integer(v: &[Q]) -> Vec<BigInt> {
    let d = common_denominator(v);
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(d.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|x| x / &g).collect()
    }
}

/// Rank of a rational matrix. Rows are rescaled to integers (which keeps the
/// rank) and eliminated in `i128` when that cannot overflow.
pub fn rank(rows: &[Vec<Q>]) -> usize {
    let ints: Vec<Vec<BigInt>> = rows.iter().map(|r| primitive_integer(r)).collect();
    rank_int(&ints)
}

pub fn rank_int(rows: &[Vec<BigInt>]) -> usize {
    let small: Option<Vec<Vec<i128>>> =
        rows.iter().map(|r| r.iter().map(|x| x.to_i128().filter(|v| v.abs() < 1 << 20)).collect()).collect();
    if let Some(m) = small {
        if let Some(r) = rank_i128(m) {
            return r;
        }
    }
    rank_big(rows.to_vec())
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

// Integer row reduction with gcd normalisation; `None` on overflow.
fn rank_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            let g = gcd_i128(a, b);
            let (fa, fb) = (a / g, b / g);
            let mut h = 0;
            for j in c..cols {
                let v = m[i][j].checked_mul(fa)?.checked_sub(m[r][j].checked_mul(fb)?)?;
                m[i][j] = v;
                h = gcd_i128(h, v);
            }
            if h > 1 {
                for x in m[i][c..].iter_mut() {
                    *x /= h;
                }
            }
        }
        r += 1;
    }
    Some(r)
}

fn rank_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let a = m[r][c].clone();
            let b = m[i][c].clone();
            for j in c..cols {
                m[i][j] = &m[i][j] * &a - &m[r][j] * &b;
            }
        }
        r += 1;
    }
    r
}

/// Dimension of the affine hull of `points` (`-1` for no points).
pub fn affine_dim(points: &[&Vec<Q>]) -> isize {
    if points.is_empty() {
        return -1;
    }
    let rows: Vec<Vec<Q>> = points
        .iter()
        .map(|p| {
            let mut r = vec![Q::one()];
            r.extend(p.iter().cloned());
            r
        })
        .collect();
    rank(&rows) as isize - 1
}

/// Absolute value of a rational as a rational.
pub fn qabs(x: &Q) -> Q {
    x.abs()
}

//! Univariate polynomials with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Q;

/// Coefficients in ascending order; trailing zeros are trimmed so equality is
/// structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Q>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Q>) -> Poly {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Poly {
        Poly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Poly {
        Poly::new(vec![Q::zero(), Q::one()])
    }

    pub fn from_ints(cs: &[i64]) -> Poly {
        Poly::new(cs.iter().map(|&c| Q::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn eval(&self, x: &Q) -> Q {
        let mut acc = Q::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: i64) -> Q {
        self.eval(&Q::from_integer(x.into()))
    }

    /// Value at an integer argument, which must be an integer.
    pub fn eval_integer(&self, x: i64) -> Option<BigInt> {
        let v = self.eval_int(x);
        v.is_integer().then(|| v.to_integer())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Q::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Poly::new(out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    /// `p(a*x + b)`.
    pub fn compose_affine(&self, a: &Q, b: &Q) -> Poly {
        let lin = Poly::new(vec![b.clone(), a.clone()]);
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&Poly::constant(c.clone()));
        }
        acc
    }

    /// Newton interpolation through `(x_i, y_i)` with distinct `x_i`.
    pub fn interpolate(points: &[(Q, Q)]) -> Poly {
        let n = points.len();
        let mut table: Vec<Q> = points.iter().map(|(_, y)| y.clone()).collect();
        for level in 1..n {
            for i in (level..n).rev() {
                let dx = &points[i].0 - &points[i - level].0;
                table[i] = (&table[i] - &table[i - 1]) / dx;
            }
        }
        let mut acc = Poly::zero();
        for i in (0..n).rev() {
            let factor = Poly::new(vec![-points[i].0.clone(), Q::one()]);
            acc = acc.mul(&factor).add(&Poly::constant(table[i].clone()));
        }
        acc
    }

    pub fn interpolate_ints(points: &[(i64, BigInt)]) -> Poly {
        let pts: Vec<(Q, Q)> = points
            .iter()
            .map(|(x, y)| (Q::from_integer((*x).into()), Q::from_integer(y.clone())))
            .collect();
        Poly::interpolate(&pts)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{}", mag)?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}n", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}n^{}", if show_coeff { "*" } else { "" }, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolation_recovers_cubic() {
        let p = Poly::from_ints(&[1, -2, 0, 3]);
        let pts: Vec<(Q, Q)> = (0..4).map(|k| (Q::from_integer(k.into()), p.eval_int(k))).collect();
        assert_eq!(Poly::interpolate(&pts), p);
    }

    #[test]
    fn affine_composition() {
        // (x+1)^2 = x^2 + 2x + 1
        let sq = Poly::from_ints(&[0, 0, 1]);
        let one = Q::one();
        assert_eq!(sq.compose_affine(&one, &one), Poly::from_ints(&[1, 2, 1]));
        assert_eq!(format!("{}", Poly::from_ints(&[1, 2, 1])), "n^2 + 2*n + 1");
    }
}

//! Exact polyhedral combinatorics of double posets.
//!
//! The crate builds the order, chain, double order and double chain polytopes
//! of (double) posets together with Hansen, valuation and anti-blocking
//! polytopes, and computes their faces, volumes, Ehrhart polynomials,
//! canonical triangulations and toric Groebner bases. All arithmetic is exact.

pub mod antiblocking;
pub mod constructors;
pub mod error;
pub mod geometry;
pub mod hibi;
pub mod poly;
pub mod poset;
pub mod transfer;

pub mod cli;

pub use error::{Error, Result};
pub use num_rational::BigRational as Q;

//! Exact enumeration of alternating sign matrices, TSSCPPs and their lattice
//! paths, with machine checks of the identities relating them: brute force,
//! determinant formulas, and formal residue evaluation of contour integrals.
//!
//! Arithmetic is exact throughout. Generic code is written against the
//! [`Ring`], [`Domain`] and [`Field`] traits; the aliases below are the
//! concrete instantiations used by the checks.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod asm;
pub mod error;
pub mod genpoly;
pub mod nilp;
pub mod partition;
pub mod report;
pub mod residue;
pub mod sample;
pub mod suite;

pub use algebra::cyclo::CycloScalar;
pub use algebra::matrix::SquareMatrix;
pub use algebra::parse::parse_poly;
pub use algebra::poly::{var_list, MultiPoly, VarList};
pub use algebra::scalar::{as_count, ratio, Domain, Field, Ring};
pub use algebra::series::{TruncatedSeries, Window};
pub use error::{Error, Result};
pub use genpoly::GenPoly;

/// Reduced arbitrary-precision rational.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// `Q(ζ)`, home of `q = e^{2πi/3}` and `q^{±1/2}`.
pub type Cyclo = CycloScalar<Rational>;
/// Polynomials with rational coefficients.
pub type QPoly = MultiPoly<Rational>;
/// Polynomials with cyclotomic coefficients.
pub type CycloPoly = MultiPoly<Cyclo>;
/// Truncated series with rational coefficients.
pub type QSeries = TruncatedSeries<Rational>;
/// Truncated series whose coefficients are polynomials (in `x`, `y`, ...).
pub type PolySeries = TruncatedSeries<QPoly>;

/// `n choose 2`.
pub fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

//! Exact coefficient rings, sparse polynomials, truncated series and determinants.

pub mod cyclo;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod scalar;
pub mod series;

//! Exact polynomial arithmetic over the rationals and double-precision
//! root finding.

mod poly;
pub mod rational;
mod roots;

use thiserror::Error;

pub use num_complex::Complex64;
pub(crate) use poly::join_terms;
pub use poly::Polynomial;
pub use rational::Rational;
pub use roots::{all_distinct, distinct_count, roots, ROOT_EQUALITY_TOL};

/// A point of the complex plane (roots, saddle coordinates).
pub type ComplexPoint = Complex64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("the zero polynomial has no well-defined roots")]
    ZeroPolynomial,
    #[error(
        "root finder missed its residual target after {sweeps} sweeps (residual {residual:e})"
    )]
    NonConvergence { sweeps: usize, residual: f64 },
    #[error("{0}")]
    Parse(String),
}

impl AlgebraError {
    pub fn name(&self) -> &'static str {
        match self {
            AlgebraError::ZeroPolynomial => "ZeroPolynomial",
            AlgebraError::NonConvergence { .. } => "NonConvergence",
            AlgebraError::Parse(_) => "ParseError",
        }
    }
}

//! Exact computation with rational Riordan arrays `d(z) h(z)^y`, `h = Q/P`:
//! residue tables, the equivalent Cauchy problem for `P(d1) d2 - Q(d1)`,
//! closed-form bivariate generating functions, the amoeba of
//! `P(z) w - Q(z)` and saddle-point asymptotics along diagonals.

pub mod algebra;
pub mod amoeba;
pub mod asympt;
pub mod bundled;
pub mod cauchy;
pub mod genfun;
pub mod grid;
pub mod laurent;
pub mod problem;
pub mod riordan;

use thiserror::Error;

pub use algebra::{AlgebraError, Complex64, ComplexPoint, Polynomial, Rational};
pub use amoeba::{AmoebaError, AmoebaSection, Census, Cone, Membership, NewtonPolygon};
pub use asympt::{AsymptError, Direction, SaddleResult};
pub use cauchy::{CauchyError, DifferenceEquation, InitialData};
pub use genfun::{BivariatePoly, BivariateRational, ColumnGF, ColumnInput, GenfunError};
pub use grid::Grid;
pub use laurent::{LaurentError, LaurentTail};
pub use problem::{CauchyProblem, ProblemFile};
pub use riordan::{RiordanError, RiordanSpec, ValidationReport, Violation};

/// Any error of the crate, keeping the originating module error.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Riordan(#[from] RiordanError),
    #[error(transparent)]
    Cauchy(#[from] CauchyError),
    #[error(transparent)]
    Genfun(#[from] GenfunError),
    #[error(transparent)]
    Amoeba(#[from] AmoebaError),
    #[error(transparent)]
    Asympt(#[from] AsymptError),
}

impl Error {
    /// Name of the innermost error variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::Algebra(e) => e.name(),
            Error::Laurent(e) => e.name(),
            Error::Riordan(e) => e.name(),
            Error::Cauchy(e) => e.name(),
            Error::Genfun(e) => e.name(),
            Error::Amoeba(e) => e.name(),
            Error::Asympt(e) => e.name(),
        }
    }
}

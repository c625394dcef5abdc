//! Rational Riordan arrays `r(x, y) = Res { d(z) h(z)^y z^x }` with
//! `h = Q/P` and rational `d`.

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Polynomial, Rational};
use crate::grid::Grid;
use crate::laurent::{LaurentError, LaurentTail};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RiordanError {
    #[error("invalid Riordan spec: {0}")]
    Invalid(ValidationReport),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

impl RiordanError {
    pub fn name(&self) -> &'static str {
        match self {
            RiordanError::Invalid(_) => "InvalidSpec",
            RiordanError::Laurent(e) => e.name(),
        }
    }
}

/// The data `(d, h)` of a rational Riordan array: `d = d_num/d_den`, `h = Q/P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RiordanSpec {
    #[serde(rename = "P")]
    pub p: Polynomial,
    #[serde(rename = "Q")]
    pub q: Polynomial,
    pub d_num: Polynomial,
    pub d_den: Polynomial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Violation {
    PDegreeTooLow,
    QDegreeTooHigh,
    DDenominatorZero,
    DDegreeTooHigh,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Violation::PDegreeTooLow => "deg P >= 1 required",
            Violation::QDegreeTooHigh => "deg Q < deg P required",
            Violation::DDenominatorZero => "d_den must be nonzero",
            Violation::DDegreeTooHigh => "deg d_num < deg d_den required",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let msgs: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        f.write_str(&msgs.join("; "))
    }
}

impl RiordanSpec {
    pub fn new(p: Polynomial, q: Polynomial, d_num: Polynomial, d_den: Polynomial) -> Self {
        RiordanSpec { p, q, d_num, d_den }
    }

    /// `d = h = Q/P`, the shape shared by all three bundled examples but the second.
    pub fn with_d_equal_h(p: Polynomial, q: Polynomial) -> Self {
        RiordanSpec {
            d_num: q.clone(),
            d_den: p.clone(),
            p,
            q,
        }
    }

    /// `m = deg P`; zero for a degenerate spec.
    pub fn m(&self) -> usize {
        self.p.degree().unwrap_or(0)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let m = self.p.degree();
        if m.is_none_or(|m| m < 1) {
            report.violations.push(Violation::PDegreeTooLow);
        }
        if let (Some(dq), Some(m)) = (self.q.degree(), m) {
            if dq >= m {
                report.violations.push(Violation::QDegreeTooHigh);
            }
        }
        match self.d_den.degree() {
            None => report.violations.push(Violation::DDenominatorZero),
            Some(dd) => {
                if self.d_num.degree().is_some_and(|dn| dn >= dd) {
                    report.violations.push(Violation::DDegreeTooHigh);
                }
            }
        }
        if self.q.is_zero() {
            report
                .warnings
                .push("Q = 0: every row y >= 1 vanishes".to_string());
        }
        if report.is_valid() && self.d_den.degree() > Some(0) {
            // radical of d_den must divide P*Q for d to be holomorphic off the poles of h
            let den = &self.d_den;
            let radical = den
                .exact_div(&den.gcd(&den.derivative()))
                .expect("gcd divides");
            if (&self.p * &self.q).exact_div(&radical).is_none() {
                report
                    .warnings
                    .push("d has poles outside the zeros of P and Q".to_string());
            }
        }
        report
    }

    /// `Err(Invalid)` carrying the report unless [`RiordanSpec::validate`] finds no violations.
    pub fn ensure_valid(&self) -> Result<(), RiordanError> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(RiordanError::Invalid(report))
        }
    }

    /// Proper iff `deg Q + 1 = deg P`, equivalently `h_0 != 0`.
    pub fn is_proper(&self) -> bool {
        match (self.q.degree(), self.p.degree()) {
            (Some(dq), Some(dp)) => dq + 1 == dp,
            _ => false,
        }
    }

    /// Expansions of `d` and `h` at infinity to the given order.
    pub fn tails(&self, order: usize) -> Result<(LaurentTail, LaurentTail), RiordanError> {
        self.ensure_valid()?;
        let d = LaurentTail::expand_at_infinity(&self.d_num, &self.d_den, order)?;
        let h = LaurentTail::expand_at_infinity(&self.q, &self.p, order)?;
        Ok((d, h))
    }

    /// `r(x, y)` by the residue formula.
    pub fn entry(&self, x: usize, y: usize) -> Result<Rational, RiordanError> {
        let (d, h) = self.tails(x)?;
        let column = if y == 0 { d } else { d.mul(&h.pow(y as u32)?) };
        Ok(column.res(x)?)
    }

    /// All entries of the window from one shared expansion of order `xmax`.
    pub fn table(&self, xmax: usize, ymax: usize) -> Result<Grid, RiordanError> {
        let (d, h) = self.tails(xmax)?;
        Ok(table_from_tails(&d, &h, xmax, ymax)?)
    }

    /// Same values as [`RiordanSpec::table`], rows computed in parallel.
    pub fn table_par(&self, xmax: usize, ymax: usize) -> Result<Grid, RiordanError> {
        let (d, h) = self.tails(xmax)?;
        let rows: Result<Vec<Vec<Rational>>, LaurentError> = (0..=ymax)
            .into_par_iter()
            .map(|y| {
                let col = if y == 0 {
                    d.clone()
                } else {
                    d.mul(&h.pow(y as u32)?)
                };
                (0..=xmax).map(|x| col.res(x)).collect()
            })
            .collect();
        Ok(Grid::from_rows(rows?))
    }
}

/// Residue table for raw tails `d`, `h` (formal `d` allowed); both tails must
/// reach order `xmax`.
pub fn table_from_tails(
    d: &LaurentTail,
    h: &LaurentTail,
    xmax: usize,
    ymax: usize,
) -> Result<Grid, LaurentError> {
    let need = |t: &LaurentTail| {
        if t.order() < xmax {
            Err(LaurentError::TruncationTooShort {
                x: xmax,
                order: t.order(),
            })
        } else {
            Ok(())
        }
    };
    need(d)?;
    need(h)?;
    let d = d.truncate(xmax);
    let h = h.truncate(xmax);
    let mut rows = Vec::with_capacity(ymax + 1);
    let mut column = d;
    for y in 0..=ymax {
        if y > 0 {
            column = column.mul(&h);
        }
        rows.push(
            (0..=xmax)
                .map(|x| column.res(x))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(Grid::from_rows(rows))
}

/// Sum of `r(x, y) z^(-x-1)` over the grid row `y`, i.e. the truncated column series.
pub fn column_tail(grid: &Grid, y: usize) -> LaurentTail {
    LaurentTail::new(grid.row(y).to_vec())
}

/// True when every entry above the diagonal `y > x` vanishes.
pub fn is_lower_triangular(grid: &Grid) -> bool {
    (0..=grid.ymax()).all(|y| (0..y.min(grid.xmax() + 1)).all(|x| grid.get(x, y).is_zero()))
}

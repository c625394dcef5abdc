//! The difference equation `[P(d1) d2 - Q(d1)] r = 0` with initial data on
//! `X_(m,1) = { (x, y) >= 0 : not (x >= m and y >= 1) }`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{rational, Polynomial, Rational};
use crate::grid::Grid;
use crate::laurent::{LaurentError, LaurentTail};
use crate::riordan::{RiordanError, RiordanSpec};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CauchyError {
    #[error("Cauchy problem is not well posed: {0}")]
    NotWellPosed(String),
    #[error("insufficient initial data: {0}")]
    InsufficientInitialData(String),
    #[error(transparent)]
    Riordan(#[from] RiordanError),
}

impl CauchyError {
    pub fn name(&self) -> &'static str {
        match self {
            CauchyError::NotWellPosed(_) => "NotWellPosed",
            CauchyError::InsufficientInitialData(_) => "InsufficientInitialData",
            CauchyError::Riordan(e) => e.name(),
        }
    }
}

impl From<LaurentError> for CauchyError {
    fn from(e: LaurentError) -> Self {
        CauchyError::Riordan(RiordanError::Laurent(e))
    }
}

/// `sum_a c_{a,1} r(x+a, y+1) - sum_a c_{a,0} r(x+a, y) = 0` with
/// `P = sum c_{a,1} z^a`, `Q = sum c_{a,0} z^a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DifferenceEquation {
    #[serde(rename = "P")]
    pub p: Polynomial,
    #[serde(rename = "Q")]
    pub q: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WellPosedness {
    pub ok: bool,
    pub report: Vec<String>,
}

impl DifferenceEquation {
    pub fn new(p: Polynomial, q: Polynomial) -> Self {
        DifferenceEquation { p, q }
    }

    pub fn from_spec(spec: &RiordanSpec) -> Self {
        DifferenceEquation {
            p: spec.p.clone(),
            q: spec.q.clone(),
        }
    }

    /// Order in `x`, `m = deg P` (zero when `P` is zero).
    pub fn m(&self) -> usize {
        self.p.degree().unwrap_or(0)
    }

    /// Support points `(a, b)` of `R(z, w) = P(z) w - Q(z)`.
    pub fn support(&self) -> Vec<(i64, i64)> {
        let mut pts: Vec<(i64, i64)> = Vec::new();
        for (a, c) in self.q.coeffs().iter().enumerate() {
            if !c.is_zero() {
                pts.push((a as i64, 0));
            }
        }
        for (a, c) in self.p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                pts.push((a as i64, 1));
            }
        }
        pts
    }

    /// Checks that the Newton polygon of `R` sits in the box `Pi_(m,1)` with
    /// `(m, 1)` a vertex carrying a nonzero coefficient.
    pub fn well_posed(&self) -> WellPosedness {
        let mut report = Vec::new();
        let mut ok = true;
        let Some(m) = self.p.degree() else {
            return WellPosedness {
                ok: false,
                report: vec!["P = 0: R has no (m,1) corner".to_string()],
            };
        };
        if m == 0 {
            ok = false;
            report.push(
                "deg P = 0: the corner (0,1) leaves no x-recursion (need m >= 1)".to_string(),
            );
        }
        report.push(format!(
            "corner (m,1) = ({m},1) with c_{{m,1}} = {}",
            rational::format(self.p.leading().unwrap())
        ));
        report
            .push("beta <= 1 for every support point: holds by the form P(z)w - Q(z)".to_string());
        match self.q.degree() {
            Some(dq) if dq >= m => {
                ok = false;
                report.push(format!(
                    "support point ({dq},0) of Q lies outside Pi_(m,1) (needs alpha <= {m}, and deg Q < m for a vertex at (m,1))"
                ));
            }
            Some(dq) => report.push(format!(
                "deg Q = {dq} < m = {m}: Newton polygon inside Pi_({m},1)"
            )),
            None => report.push("Q = 0: Newton polygon is the segment of P's support".to_string()),
        }
        if ok {
            report
                .push("for R = P(z)w - Q(z) these are exactly deg Q < deg P = m >= 1".to_string());
        }
        WellPosedness { ok, report }
    }

    fn ensure_well_posed(&self) -> Result<usize, CauchyError> {
        let wp = self.well_posed();
        if wp.ok {
            Ok(self.m())
        } else {
            Err(CauchyError::NotWellPosed(wp.report.join("; ")))
        }
    }
}

/// Values of `phi` on `X_(m,1)`, clipped to a finite window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InitialData {
    /// `phi(x, 0)` for `x = 0..=Xmax`.
    #[serde(rename = "phi_row0", with = "rational::vec")]
    pub row0: Vec<Rational>,
    /// `cols[k][y - 1] = phi(k, y)` for `k < m`, `y = 1..=Ymax`.
    #[serde(rename = "phi_cols", with = "rational::matrix")]
    pub cols: Vec<Vec<Rational>>,
}

impl InitialData {
    pub fn zeros(m: usize, xmax: usize, ymax: usize) -> Self {
        InitialData {
            row0: vec![Rational::zero(); xmax + 1],
            cols: vec![vec![Rational::zero(); ymax]; m],
        }
    }

    /// `phi(x, y)` for a point of `X_(m,1)`; `None` outside the tables.
    pub fn get(&self, x: usize, y: usize) -> Option<&Rational> {
        if y == 0 {
            self.row0.get(x)
        } else {
            self.cols.get(x).and_then(|c| c.get(y - 1))
        }
    }

    pub fn set(&mut self, x: usize, y: usize, v: Rational) {
        if y == 0 {
            self.row0[x] = v;
        } else {
            self.cols[x][y - 1] = v;
        }
    }

    /// `a * self + b * other` on the common window.
    pub fn combine(&self, a: &Rational, other: &InitialData, b: &Rational) -> InitialData {
        let lin = |u: &[Rational], v: &[Rational]| -> Vec<Rational> {
            u.iter().zip(v).map(|(s, t)| a * s + b * t).collect()
        };
        InitialData {
            row0: lin(&self.row0, &other.row0),
            cols: self
                .cols
                .iter()
                .zip(&other.cols)
                .map(|(u, v)| lin(u, v))
                .collect(),
        }
    }

    /// Largest `(Xmax, Ymax)` the tables cover.
    pub fn window(&self) -> (usize, usize) {
        let ymax = self.cols.iter().map(Vec::len).min().unwrap_or(0);
        (self.row0.len().saturating_sub(1), ymax)
    }
}

/// Solves the Cauchy problem on `0..=xmax` x `0..=ymax`, sweeping `y` then `x`:
/// `r(x,y) = (1/c_{m,1}) [ sum_a c_{a,0} r(x-m+a, y-1) - sum_{a<m} c_{a,1} r(x-m+a, y) ]`.
pub fn solve(
    eq: &DifferenceEquation,
    init: &InitialData,
    xmax: usize,
    ymax: usize,
) -> Result<Grid, CauchyError> {
    let m = eq.ensure_well_posed()?;
    if init.row0.len() <= xmax {
        return Err(CauchyError::InsufficientInitialData(format!(
            "phi(x,0) given for x <= {} but the window needs x <= {xmax}",
            init.row0.len() as i64 - 1
        )));
    }
    let ncols = m.min(xmax + 1);
    if ymax > 0 {
        for k in 0..ncols {
            let have = init.cols.get(k).map_or(0, Vec::len);
            if have < ymax {
                return Err(CauchyError::InsufficientInitialData(format!(
                    "phi({k},y) given for y <= {have} but the window needs y <= {ymax}"
                )));
            }
        }
    }

    let inv_lead = Rational::one() / eq.p.leading().unwrap();
    let p_terms: Vec<(usize, Rational)> = nonzero_terms(&eq.p, m);
    let q_terms: Vec<(usize, Rational)> = nonzero_terms(&eq.q, m + 1);

    let mut grid = Grid::zeros(xmax, ymax);
    for x in 0..=xmax {
        grid.set(x, 0, init.row0[x].clone());
    }
    for y in 1..=ymax {
        for k in 0..ncols {
            grid.set(k, y, init.cols[k][y - 1].clone());
        }
        for x in m..=xmax {
            let base = x - m;
            let mut acc = Rational::zero();
            for (a, c) in &q_terms {
                acc += c * grid.get(base + a, y - 1);
            }
            for (a, c) in &p_terms {
                acc -= c * grid.get(base + a, y);
            }
            grid.set(x, y, acc * &inv_lead);
        }
    }
    Ok(grid)
}

fn nonzero_terms(p: &Polynomial, below: usize) -> Vec<(usize, Rational)> {
    p.coeffs()
        .iter()
        .enumerate()
        .take(below)
        .filter(|(_, c)| !c.is_zero())
        .map(|(a, c)| (a, c.clone()))
        .collect()
}

/// Initial data `phi(x, y) = Res { d h^y z^x }` of a Riordan spec.
pub fn riordan_initial_data(
    spec: &RiordanSpec,
    xmax: usize,
    ymax: usize,
) -> Result<InitialData, CauchyError> {
    let m = spec.m();
    let (d, _) = spec.tails(xmax.max(m.saturating_sub(1)))?;
    let row0 = d.coeffs()[..=xmax].to_vec();
    let (d_short, h_short) = spec.tails(m.saturating_sub(1))?;
    let mut cols = vec![Vec::with_capacity(ymax); m];
    let mut column: LaurentTail = d_short;
    for _ in 1..=ymax {
        column = column.mul(&h_short);
        for (k, col) in cols.iter_mut().enumerate() {
            col.push(column.res(k)?);
        }
    }
    Ok(InitialData { row0, cols })
}

/// Exact `max |[P(d1) d2 - Q(d1)] r|` over all `(x, y)` with `x + m <= xmax`,
/// `y + 1 <= ymax`; zero for true solutions.
pub fn residual(eq: &DifferenceEquation, r: &Grid) -> Rational {
    let m = eq.m();
    let mut worst = Rational::zero();
    if r.xmax() < m || r.ymax() < 1 {
        return worst;
    }
    for y in 0..r.ymax() {
        for x in 0..=(r.xmax() - m) {
            let mut lhs = Rational::zero();
            for (a, c) in eq.p.coeffs().iter().enumerate() {
                lhs += c * r.get(x + a, y + 1);
            }
            for (a, c) in eq.q.coeffs().iter().enumerate() {
                lhs -= c * r.get(x + a, y);
            }
            let lhs = lhs.abs();
            if lhs > worst {
                worst = lhs;
            }
        }
    }
    worst
}

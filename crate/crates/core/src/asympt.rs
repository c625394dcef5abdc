//! Diagonal asymptotics `r(lambda p, lambda q) ~ d(z0) / sqrt(2 pi lambda q H(z0)) (z0^p w0^q)^lambda`.

use std::f64::consts::PI;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::rational::{format as fmt_rational, ln_abs};
use crate::algebra::{roots, AlgebraError, Complex64, Polynomial, Rational};
use crate::amoeba::{cone_omega, newton_polygon, sci, Amoeba, AmoebaError, DEFAULT_NPHI};
use crate::cauchy::{riordan_initial_data, solve, CauchyError, DifferenceEquation};
use crate::riordan::RiordanSpec;

/// `|eta0 - hi(xi0)|` allowed for a point of the boundary of `E_(m,1)`.
pub const BOUNDARY_TOL: f64 = 1e-6;
const POLE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AsymptError {
    #[error("direction needs p, q >= 1 (got {p}, {q})")]
    InvalidDirection { p: u64, q: u64 },
    #[error("lambda must be at least 1")]
    InvalidLambda,
    #[error("no saddle candidates")]
    EmptyCandidateSet,
    #[error("no candidate lies on the boundary of E_(m,1)")]
    NoBoundaryCandidate(Vec<CandidateReport>),
    #[error("the selected saddle is not on the boundary of E_(m,1)")]
    OffBoundary,
    #[error("direction ({p},{q}) is not interior to the cone Omega_(m,1)")]
    OutsideCone { p: u64, q: u64 },
    #[error("H has a pole at z0 = {0}")]
    PoleAtSaddle(Complex64),
    #[error("Re(lambda q H) = {0} is not positive")]
    NegativeHessian(f64),
    #[error(transparent)]
    Amoeba(#[from] AmoebaError),
    #[error(transparent)]
    Cauchy(#[from] CauchyError),
}

impl AsymptError {
    pub fn name(&self) -> &'static str {
        match self {
            AsymptError::InvalidDirection { .. } => "InvalidDirection",
            AsymptError::InvalidLambda => "InvalidLambda",
            AsymptError::EmptyCandidateSet => "EmptyCandidateSet",
            AsymptError::NoBoundaryCandidate(_) => "NoBoundaryCandidate",
            AsymptError::OffBoundary => "OffBoundary",
            AsymptError::OutsideCone { .. } => "OutsideCone",
            AsymptError::PoleAtSaddle(_) => "PoleAtSaddle",
            AsymptError::NegativeHessian(_) => "NegativeHessian",
            AsymptError::Amoeba(e) => e.name(),
            AsymptError::Cauchy(e) => e.name(),
        }
    }
}

impl From<AlgebraError> for AsymptError {
    fn from(e: AlgebraError) -> Self {
        AsymptError::Amoeba(e.into())
    }
}

/// Diagonal direction, stored reduced to `gcd(p, q) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Direction {
    pub p: u64,
    pub q: u64,
    /// The direction was given already reduced.
    pub reduced: bool,
}

impl Direction {
    pub fn new(p: u64, q: u64) -> Result<Self, AsymptError> {
        if p == 0 || q == 0 {
            return Err(AsymptError::InvalidDirection { p, q });
        }
        let g = p.gcd(&q);
        Ok(Direction {
            p: p / g,
            q: q / g,
            reduced: g == 1,
        })
    }

    pub fn ratio(&self) -> f64 {
        self.p as f64 / self.q as f64
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CandidateReport {
    pub z0: Complex64,
    pub w0: Complex64,
    pub xi: f64,
    pub eta: f64,
    pub hi: f64,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Diagnostics {
    pub simple_roots: bool,
    pub distinct_moduli: bool,
    pub in_cone: bool,
    /// More than one candidate passed the boundary test.
    pub ambiguous: bool,
    pub candidates: Vec<CandidateReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SaddleResult {
    pub z0: Complex64,
    pub w0: Complex64,
    #[serde(rename = "H")]
    pub h: Complex64,
    pub on_boundary: bool,
    pub diagnostics: Diagnostics,
}

impl SaddleResult {
    /// `|P(z0) w0 - Q(z0)|` and `|z0 (P'/P - Q'/Q)(z0) - p/q|`.
    pub fn residuals(&self, eq: &DifferenceEquation, dir: Direction) -> (f64, f64) {
        saddle_residuals(eq, dir, self.z0, self.w0)
    }
}

fn saddle_residuals(
    eq: &DifferenceEquation,
    dir: Direction,
    z: Complex64,
    w: Complex64,
) -> (f64, f64) {
    let pz = eq.p.eval_complex(z);
    let qz = eq.q.eval_complex(z);
    let r1 = (pz * w - qz).norm();
    let lhs = z * (eq.p.derivative().eval_complex(z) / pz - eq.q.derivative().eval_complex(z) / qz);
    (r1, (lhs - dir.ratio()).norm())
}

/// `q z (P' Q - Q' P) - p P Q`.
pub fn saddle_polynomial(eq: &DifferenceEquation, dir: Direction) -> Polynomial {
    let (p, q) = (&eq.p, &eq.q);
    let wronskian = &(&p.derivative() * q) - &(&q.derivative() * p);
    let left = (&Polynomial::z() * &wronskian).scale(&Rational::from_integer(dir.q.into()));
    &left - &(p * q).scale(&Rational::from_integer(dir.p.into()))
}

pub fn saddle_candidates(
    eq: &DifferenceEquation,
    dir: Direction,
) -> Result<Vec<(Complex64, Complex64)>, AsymptError> {
    let s = saddle_polynomial(eq, dir);
    if s.is_zero() {
        return Err(AsymptError::EmptyCandidateSet);
    }
    let scale = 1.0 + eq.p.max_abs_coeff().max(eq.q.max_abs_coeff());
    let out: Vec<_> = roots(&s)?
        .into_iter()
        .filter_map(|z| {
            let pz = eq.p.eval_complex(z);
            let qz = eq.q.eval_complex(z);
            let tol = POLE_TOL * scale * (1.0 + z.norm()).powi(eq.m() as i32);
            (pz.norm() > tol && qz.norm() > tol).then(|| (z, qz / pz))
        })
        .collect();
    if out.is_empty() {
        return Err(AsymptError::EmptyCandidateSet);
    }
    Ok(out)
}

fn is_real_positive(z: Complex64) -> bool {
    z.re > 0.0 && z.im.abs() <= 1e-9 * (1.0 + z.norm())
}

/// Picks the candidate whose log-image lies on the boundary of `E_(m,1)`.
pub fn select_dominant(
    eq: &DifferenceEquation,
    candidates: &[(Complex64, Complex64)],
    dir: Direction,
) -> Result<SaddleResult, AsymptError> {
    if candidates.is_empty() {
        return Err(AsymptError::EmptyCandidateSet);
    }
    let am = Amoeba::new(eq)?;
    let xi_min = am.log_max_p_root();
    let mut reports = Vec::with_capacity(candidates.len());
    for &(z0, w0) in candidates {
        let xi = z0.norm().ln();
        let eta = w0.norm().ln();
        let hi = am.section(xi, DEFAULT_NPHI)?.hi;
        let passes = xi > xi_min && (eta - hi).abs() <= BOUNDARY_TOL;
        reports.push(CandidateReport {
            z0,
            w0,
            xi,
            eta,
            hi,
            passes,
        });
    }
    let growth = |r: &CandidateReport| dir.p as f64 * r.xi + dir.q as f64 * r.eta;
    let passing: Vec<&CandidateReport> = reports.iter().filter(|r| r.passes).collect();
    let chosen = if reports.len() == 1 {
        reports[0].clone()
    } else {
        passing
            .iter()
            .copied()
            .max_by(|a, b| {
                is_real_positive(a.z0)
                    .cmp(&is_real_positive(b.z0))
                    .then(growth(a).total_cmp(&growth(b)))
            })
            .cloned()
            .ok_or_else(|| AsymptError::NoBoundaryCandidate(reports.clone()))?
    };

    let moduli = |rs: &[Complex64]| {
        let m: Vec<f64> = rs.iter().map(|r| r.norm()).collect();
        crate::algebra::distinct_count(&m) == m.len()
    };
    let in_cone = cone_omega(&newton_polygon(eq))
        .map(|c| c.contains_interior(dir.p as i64, dir.q as i64))
        .unwrap_or(false);
    let h = hessian_h(eq, chosen.z0, dir)?;
    Ok(SaddleResult {
        z0: chosen.z0,
        w0: chosen.w0,
        h,
        on_boundary: chosen.passes,
        diagnostics: Diagnostics {
            simple_roots: eq.p.is_squarefree() && eq.q.is_squarefree(),
            distinct_moduli: moduli(am.p_roots()) && moduli(am.q_roots()),
            in_cone,
            ambiguous: passing.len() > 1,
            candidates: reports,
        },
    })
}

/// Candidates and selection in one step.
pub fn saddle(eq: &DifferenceEquation, dir: Direction) -> Result<SaddleResult, AsymptError> {
    select_dominant(eq, &saddle_candidates(eq, dir)?, dir)
}

/// `H(z) = Q''/Q - P''/P + 2 (p/q) (1/z) P'/P - (p/q)(1 + p/q) / z^2`.
pub fn hessian_h(
    eq: &DifferenceEquation,
    z: Complex64,
    dir: Direction,
) -> Result<Complex64, AsymptError> {
    let pz = eq.p.eval_complex(z);
    let qz = eq.q.eval_complex(z);
    if z.norm() < POLE_TOL || pz.norm() < POLE_TOL || qz.norm() < POLE_TOL {
        return Err(AsymptError::PoleAtSaddle(z));
    }
    let d1p = eq.p.derivative();
    let d2p = d1p.derivative().eval_complex(z);
    let d2q = eq.q.derivative().derivative().eval_complex(z);
    let mu = dir.ratio();
    Ok(d2q / qz - d2p / pz + 2.0 * mu / z * d1p.eval_complex(z) / pz - mu * (1.0 + mu) / (z * z))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Estimate {
    pub value: f64,
    /// `log |value|`, finite even when `value` overflows.
    pub ln_abs: f64,
    /// Sign of the real value: `cos` of the accumulated phase.
    pub phase: f64,
}

/// Evaluates the estimate at a known saddle.
pub fn estimate_at(
    spec: &RiordanSpec,
    s: &SaddleResult,
    dir: Direction,
    lambda: u64,
) -> Result<Estimate, AsymptError> {
    if lambda == 0 {
        return Err(AsymptError::InvalidLambda);
    }
    if !s.diagnostics.in_cone {
        return Err(AsymptError::OutsideCone { p: dir.p, q: dir.q });
    }
    if !s.on_boundary {
        return Err(AsymptError::OffBoundary);
    }
    let lam = lambda as f64;
    let scaled = s.h * (lam * dir.q as f64);
    if scaled.re <= 0.0 {
        return Err(AsymptError::NegativeHessian(scaled.re));
    }
    let d = spec.d_num.eval_complex(s.z0) / spec.d_den.eval_complex(s.z0);
    let log_growth = dir.p as f64 * s.z0.ln() + dir.q as f64 * s.w0.ln();
    let log_root = (2.0 * PI * scaled).ln() * 0.5;
    let total = d.ln() - log_root + lam * log_growth;
    let phase = total.im;
    Ok(Estimate {
        value: total.re.exp() * phase.cos(),
        ln_abs: total.re + phase.cos().abs().ln(),
        phase,
    })
}

/// Rejects directions outside `Int Omega_(m,1)` before any saddle search.
pub fn ensure_in_cone(eq: &DifferenceEquation, dir: Direction) -> Result<(), AsymptError> {
    let cone = cone_omega(&newton_polygon(eq))?;
    if cone.contains_interior(dir.p as i64, dir.q as i64) {
        Ok(())
    } else {
        Err(AsymptError::OutsideCone { p: dir.p, q: dir.q })
    }
}

pub fn estimate(spec: &RiordanSpec, dir: Direction, lambda: u64) -> Result<Estimate, AsymptError> {
    let eq = DifferenceEquation::from_spec(spec);
    ensure_in_cone(&eq, dir)?;
    estimate_at(spec, &saddle(&eq, dir)?, dir, lambda)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbeRow {
    pub lambda: u64,
    #[serde(with = "crate::algebra::rational")]
    pub exact: Rational,
    pub estimate: f64,
    pub ratio: f64,
}

/// Exact `r(lambda p, lambda q)` from one Cauchy solve over the largest window,
/// against the estimate; `ratio = exact / estimate`.
pub fn convergence_probe(
    spec: &RiordanSpec,
    dir: Direction,
    lambdas: &[u64],
) -> Result<Vec<ProbeRow>, AsymptError> {
    let eq = DifferenceEquation::from_spec(spec);
    ensure_in_cone(&eq, dir)?;
    let s = saddle(&eq, dir)?;
    let lmax = lambdas.iter().copied().max().unwrap_or(0);
    let (xmax, ymax) = ((lmax * dir.p) as usize, (lmax * dir.q) as usize);
    let init = riordan_initial_data(spec, xmax, ymax)?;
    let grid = solve(&eq, &init, xmax, ymax)?;
    lambdas
        .iter()
        .map(|&lambda| {
            let est = estimate_at(spec, &s, dir, lambda)?;
            let exact = grid
                .get((lambda * dir.p) as usize, (lambda * dir.q) as usize)
                .clone();
            let sign = |neg: bool| if neg { -1.0 } else { 1.0 };
            let ratio = sign(est.value < 0.0)
                * sign(exact < Rational::from_integer(0.into()))
                * (ln_abs(&exact) - est.ln_abs).exp();
            Ok(ProbeRow {
                lambda,
                exact,
                estimate: est.value,
                ratio,
            })
        })
        .collect()
}

/// `lambda,exact,estimate,ratio`; exact as a rational string, floats with 17 significant digits.
pub fn probe_csv(rows: &[ProbeRow]) -> String {
    let mut out = String::from("lambda,exact,estimate,ratio\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.lambda,
            fmt_rational(&r.exact),
            sci(r.estimate),
            sci(r.ratio)
        ));
    }
    out
}

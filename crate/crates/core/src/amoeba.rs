//! Newton polygon, the cone `Omega_(m,1)` and the amoeba of `R(z,w) = P(z) w - Q(z)`.
//!
//! For `R` linear in `w`, `w = Q(z)/P(z)` on the zero set, so the amoeba over
//! `xi = log|z| = t` is the range of
//! `f(t, phi) = log|lc Q / lc P| + sum log|e^(t+i phi) - a_i| - sum log|e^(t+i phi) - b_j|`
//! where `a_i`, `b_j` are the roots of `Q` and `P`.

use std::f64::consts::PI;

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{distinct_count, roots, AlgebraError, Complex64, Polynomial};
use crate::cauchy::DifferenceEquation;

pub const DEFAULT_NPHI: usize = 1024;
/// `eta` within this distance of `[lo, hi]` counts as inside the amoeba.
pub const MEMBERSHIP_TOL: f64 = 1e-9;
const TENTACLE_TOL: f64 = 1e-8;
const ON_CIRCLE_TOL: f64 = 1e-12;
const REFINE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AmoebaError {
    #[error("Newton polygon is a segment or a point")]
    DegenerateHull,
    #[error("({0},1) is not a vertex of the Newton polygon")]
    NotAVertex(usize),
    #[error("P and Q must both be nonzero")]
    ZeroPolynomial,
    #[error("need at least {need} samples, got {got}")]
    TooFewSamples { need: usize, got: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

impl AmoebaError {
    pub fn name(&self) -> &'static str {
        match self {
            AmoebaError::DegenerateHull => "DegenerateHull",
            AmoebaError::NotAVertex(_) => "NotAVertex",
            AmoebaError::ZeroPolynomial => "ZeroPolynomial",
            AmoebaError::TooFewSamples { .. } => "TooFewSamples",
            AmoebaError::Algebra(e) => e.name(),
        }
    }
}

type Pt = (i64, i64);

fn cross(o: Pt, a: Pt, b: Pt) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NewtonPolygon {
    /// Support of `R`, sorted.
    pub points: Vec<Pt>,
    /// Hull vertices, counterclockwise, starting at the lowest-leftmost.
    pub vertices: Vec<Pt>,
}

impl NewtonPolygon {
    /// Hull of an arbitrary point set (monotone chain).
    pub fn from_points(mut points: Vec<Pt>) -> Self {
        points.sort_by_key(|&(a, b)| (b, a));
        points.dedup();
        let mut sorted = points.clone();
        sorted.sort();
        let vertices = if sorted.len() < 3 {
            sorted.clone()
        } else {
            let mut lower: Vec<Pt> = Vec::new();
            for &p in &sorted {
                while lower.len() >= 2
                    && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0
                {
                    lower.pop();
                }
                lower.push(p);
            }
            let mut upper: Vec<Pt> = Vec::new();
            for &p in sorted.iter().rev() {
                while upper.len() >= 2
                    && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0
                {
                    upper.pop();
                }
                upper.push(p);
            }
            lower.pop();
            upper.pop();
            lower.extend(upper);
            lower
        };
        let mut vertices = vertices;
        if let Some(start) = (0..vertices.len()).min_by_key(|&i| (vertices[i].1, vertices[i].0)) {
            vertices.rotate_left(start);
        }
        NewtonPolygon { points, vertices }
    }

    pub fn is_degenerate(&self) -> bool {
        self.twice_area() == 0
    }

    pub fn twice_area(&self) -> i64 {
        let n = self.vertices.len();
        if n < 3 {
            return 0;
        }
        (0..n)
            .map(|i| {
                let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
                a.0 * b.1 - a.1 * b.0
            })
            .sum::<i64>()
            .abs()
    }

    /// Lattice points on the boundary.
    pub fn boundary_count(&self) -> i64 {
        match self.vertices.len() {
            0 => 0,
            1 => 1,
            2 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                (b.0 - a.0).abs().gcd(&(b.1 - a.1).abs()) + 1
            }
            n => (0..n)
                .map(|i| {
                    let (a, b) = (self.vertices[i], self.vertices[(i + 1) % n]);
                    (b.0 - a.0).abs().gcd(&(b.1 - a.1).abs())
                })
                .sum(),
        }
    }

    /// `|N ∩ Z^2|` by Pick's theorem.
    pub fn lattice_count(&self) -> i64 {
        if self.vertices.len() < 3 {
            return self.boundary_count();
        }
        let b = self.boundary_count();
        (self.twice_area() + b) / 2 + 1
    }

    /// Closed-hull membership.
    pub fn contains(&self, p: Pt) -> bool {
        let n = self.vertices.len();
        match n {
            0 => false,
            1 => self.vertices[0] == p,
            2 => {
                let (a, b) = (self.vertices[0], self.vertices[1]);
                cross(a, b, p) == 0
                    && p.0 >= a.0.min(b.0)
                    && p.0 <= a.0.max(b.0)
                    && p.1 >= a.1.min(b.1)
                    && p.1 <= a.1.max(b.1)
            }
            _ => (0..n).all(|i| cross(self.vertices[i], self.vertices[(i + 1) % n], p) >= 0),
        }
    }
}

/// Support of `R = P w - Q`: `(a, 1)` for `c_{a,1} != 0`, `(a, 0)` for `c_{a,0} != 0`.
pub fn newton_polygon(eq: &DifferenceEquation) -> NewtonPolygon {
    let mut pts = Vec::new();
    for (a, c) in eq.q.coeffs().iter().enumerate() {
        if !c.is_zero() {
            pts.push((a as i64, 0));
        }
    }
    for (a, c) in eq.p.coeffs().iter().enumerate() {
        if !c.is_zero() {
            pts.push((a as i64, 1));
        }
    }
    NewtonPolygon::from_points(pts)
}

/// Cone spanned by `(m,1) - tau`, `tau` in the Newton polygon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Cone {
    /// Extreme rays, ordered so that `generators[0] x generators[1] > 0`.
    pub generators: [Pt; 2],
}

impl Cone {
    /// Strictly between both rays.
    pub fn contains_interior(&self, p: i64, q: i64) -> bool {
        let [g1, g2] = self.generators;
        let v = (p, q);
        cross((0, 0), g1, v) > 0 && cross((0, 0), v, g2) > 0
    }
}

pub fn cone_omega(np: &NewtonPolygon) -> Result<Cone, AmoebaError> {
    if np.is_degenerate() {
        return Err(AmoebaError::DegenerateHull);
    }
    let top = np
        .points
        .iter()
        .filter(|p| p.1 == 1)
        .map(|p| p.0)
        .max()
        .unwrap_or(0);
    let apex = (top, 1);
    let n = np.vertices.len();
    let i = np
        .vertices
        .iter()
        .position(|&v| v == apex)
        .ok_or(AmoebaError::NotAVertex(top as usize))?;
    let next = np.vertices[(i + 1) % n];
    let prev = np.vertices[(i + n - 1) % n];
    let a = (apex.0 - next.0, apex.1 - next.1);
    let b = (apex.0 - prev.0, apex.1 - prev.1);
    let generators = if cross((0, 0), a, b) > 0 {
        [a, b]
    } else {
        [b, a]
    };
    Ok(Cone { generators })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AmoebaSection {
    pub t: f64,
    pub lo: f64,
    pub hi: f64,
    pub samples: Vec<(f64, f64)>,
    /// `t` is within `1e-8` of `log|root|` for some root of `P` or `Q`.
    pub tentacle: bool,
    /// Some root lies on the circle `|z| = e^t`, so `f` diverges there.
    pub root_on_circle: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Membership {
    InsideAmoeba,
    InEm1,
    OtherComponent,
}

/// Roots of `Q` and `P` computed once; all amoeba queries go through here.
#[derive(Debug, Clone)]
pub struct Amoeba {
    a: Vec<Complex64>,
    b: Vec<Complex64>,
    log_lc: f64,
}

impl Amoeba {
    pub fn new(eq: &DifferenceEquation) -> Result<Self, AmoebaError> {
        let (Some(lq), Some(lp)) = (eq.q.leading(), eq.p.leading()) else {
            return Err(AmoebaError::ZeroPolynomial);
        };
        let log_lc = crate::algebra::rational::ln_abs(lq) - crate::algebra::rational::ln_abs(lp);
        Ok(Amoeba {
            a: roots(&eq.q)?,
            b: roots(&eq.p)?,
            log_lc,
        })
    }

    /// Roots of `Q`.
    pub fn q_roots(&self) -> &[Complex64] {
        &self.a
    }

    /// Roots of `P`.
    pub fn p_roots(&self) -> &[Complex64] {
        &self.b
    }

    /// `log max_j |b_j|`; `-inf` when `P` is constant.
    pub fn log_max_p_root(&self) -> f64 {
        self.b
            .iter()
            .map(|b| b.norm().ln())
            .fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn f(&self, t: f64, phi: f64) -> f64 {
        let z = Complex64::from_polar(t.exp(), phi);
        let up: f64 = self.a.iter().map(|a| (z - a).norm().ln()).sum();
        let down: f64 = self.b.iter().map(|b| (z - b).norm().ln()).sum();
        self.log_lc + up - down
    }

    fn all_roots(&self) -> impl Iterator<Item = &Complex64> {
        self.a.iter().chain(&self.b)
    }

    pub fn section(&self, t: f64, nphi: usize) -> Result<AmoebaSection, AmoebaError> {
        if nphi < 2 {
            return Err(AmoebaError::TooFewSamples { need: 2, got: nphi });
        }
        let step = 2.0 * PI / nphi as f64;
        let samples: Vec<(f64, f64)> = (0..nphi)
            .map(|i| {
                let phi = -PI + i as f64 * step;
                (phi, self.f(t, phi))
            })
            .collect();
        let r = t.exp();
        let tentacle = self
            .all_roots()
            .any(|c| (c.norm().ln() - t).abs() < TENTACLE_TOL);
        let root_on_circle = self.all_roots().any(|c| {
            let z = Complex64::from_polar(r, c.arg());
            (z - c).norm() < ON_CIRCLE_TOL
        });

        let (imin, imax) = extreme_indices(&samples);
        let (mut lo, mut hi) = (samples[imin].1, samples[imax].1);
        if !root_on_circle {
            let around = |i: usize| (samples[i].0 - step, samples[i].0 + step);
            let (a, b) = around(imin);
            lo = lo.min(golden(|phi| self.f(t, phi), a, b, false));
            let (a, b) = around(imax);
            hi = hi.max(golden(|phi| self.f(t, phi), a, b, true));
        }
        Ok(AmoebaSection {
            t,
            lo,
            hi,
            samples,
            tentacle,
            root_on_circle,
        })
    }

    pub fn membership(&self, xi: f64, eta: f64, nphi: usize) -> Result<Membership, AmoebaError> {
        let s = self.section(xi, nphi)?;
        Ok(
            if eta >= s.lo - MEMBERSHIP_TOL && eta <= s.hi + MEMBERSHIP_TOL {
                Membership::InsideAmoeba
            } else if eta > s.hi && xi > self.log_max_p_root() {
                Membership::InEm1
            } else {
                Membership::OtherComponent
            },
        )
    }

    /// `(t, lo, hi)` on `nt` equally spaced abscissas, computed in parallel.
    pub fn boundary_cloud(
        &self,
        tmin: f64,
        tmax: f64,
        nt: usize,
        nphi: usize,
    ) -> Result<Vec<CloudRow>, AmoebaError> {
        if nt < 2 {
            return Err(AmoebaError::TooFewSamples { need: 2, got: nt });
        }
        (0..nt)
            .into_par_iter()
            .map(|i| {
                let t = tmin + (tmax - tmin) * i as f64 / (nt - 1) as f64;
                let s = self.section(t, nphi)?;
                Ok(CloudRow {
                    t,
                    eta_lo: s.lo,
                    eta_hi: s.hi,
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CloudRow {
    pub t: f64,
    pub eta_lo: f64,
    pub eta_hi: f64,
}

/// Flattens rows to `(t, lo)`, `(t, hi)` boundary points.
pub fn cloud_points(rows: &[CloudRow]) -> Vec<(f64, f64)> {
    rows.iter()
        .flat_map(|r| [(r.t, r.eta_lo), (r.t, r.eta_hi)])
        .collect()
}

/// `t,eta_lo,eta_hi` with 17 significant digits.
pub fn cloud_csv(rows: &[CloudRow]) -> String {
    let mut out = String::from("t,eta_lo,eta_hi\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{}\n",
            sci(r.t),
            sci(r.eta_lo),
            sci(r.eta_hi)
        ));
    }
    out
}

/// Scientific notation with 17 significant digits.
pub fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

fn extreme_indices(samples: &[(f64, f64)]) -> (usize, usize) {
    let mut imin = 0;
    let mut imax = 0;
    for (i, s) in samples.iter().enumerate() {
        if s.1 < samples[imin].1 {
            imin = i;
        }
        if s.1 > samples[imax].1 {
            imax = i;
        }
    }
    (imin, imax)
}

fn golden(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, maximize: bool) -> f64 {
    let g = |x: f64| if maximize { -f(x) } else { f(x) };
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (g(c), g(d));
    while b - a > REFINE_TOL {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = g(d);
        }
    }
    let best = g((a + b) / 2.0).min(fc).min(fd);
    if maximize {
        -best
    } else {
        best
    }
}

pub fn section(eq: &DifferenceEquation, t: f64, nphi: usize) -> Result<AmoebaSection, AmoebaError> {
    Amoeba::new(eq)?.section(t, nphi)
}

pub fn membership(eq: &DifferenceEquation, xi: f64, eta: f64) -> Result<Membership, AmoebaError> {
    Amoeba::new(eq)?.membership(xi, eta, DEFAULT_NPHI)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Census {
    pub n1: usize,
    pub n2: usize,
    pub kappa: usize,
    pub lower_bound: i64,
    pub lattice_points: i64,
    pub maximal: bool,
    /// Both `P` and `Q` have simple roots.
    pub simple_roots: bool,
}

/// Component count lower bound `N1 + N2 + 2 - kappa` against the lattice
/// point count of the Newton polygon. `N1`, `N2` count distinct root moduli
/// of `Q`, `P` (a zero root counts as modulus 0).
pub fn component_census(eq: &DifferenceEquation) -> Result<Census, AmoebaError> {
    // repeated roots are counted once, via the exact squarefree part
    let moduli = |a: &Polynomial| -> Result<Vec<f64>, AmoebaError> {
        let radical = a.exact_div(&a.gcd(&a.derivative())).expect("gcd divides");
        Ok(roots(&radical)?.iter().map(|r| r.norm()).collect())
    };
    if eq.p.is_zero() || eq.q.is_zero() {
        return Err(AmoebaError::ZeroPolynomial);
    }
    let n1 = distinct_count(&moduli(&eq.q)?);
    let n2 = distinct_count(&moduli(&eq.p)?);
    let kappa = usize::from(eq.q.zero_root_multiplicity() > 0 || eq.p.zero_root_multiplicity() > 0);
    let lower_bound = (n1 + n2 + 2 - kappa) as i64;
    let lattice_points = newton_polygon(eq).lattice_count();
    Ok(Census {
        n1,
        n2,
        kappa,
        lower_bound,
        lattice_points,
        maximal: lower_bound == lattice_points,
        simple_roots: eq.p.is_squarefree() && eq.q.is_squarefree(),
    })
}

/// Largest `|hi(t+dt) - 2 hi(t) + hi(t-dt)|` over a grid, skipping abscissas
/// near tentacles. A kink shows up as a value that does not shrink with `dt`.
pub fn boundary_smoothness_probe(
    am: &Amoeba,
    tmin: f64,
    tmax: f64,
    nt: usize,
    nphi: usize,
) -> Result<f64, AmoebaError> {
    let rows = am.boundary_cloud(tmin, tmax, nt, nphi)?;
    let dt = (tmax - tmin) / (nt - 1) as f64;
    let near_tentacle = |t: f64| {
        am.a.iter()
            .chain(&am.b)
            .any(|c| (c.norm().ln() - t).abs() < 2.0 * dt)
    };
    Ok(rows
        .windows(3)
        .filter(|w| !near_tentacle(w[1].t))
        .map(|w| (w[2].eta_hi - 2.0 * w[1].eta_hi + w[0].eta_hi).abs())
        .fold(0.0, f64::max))
}

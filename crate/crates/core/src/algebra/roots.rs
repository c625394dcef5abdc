//! Simultaneous root finding (Aberth-Ehrlich) with Newton polishing.

use num_complex::Complex64;

use super::{AlgebraError, Polynomial};

const MAX_SWEEPS: usize = 1000;
const RESIDUAL_FACTOR: f64 = 1e-12;

/// Relative distance under which two roots (or two moduli) count as equal.
pub const ROOT_EQUALITY_TOL: f64 = 1e-9;

/// All complex roots of `a`, repeated by multiplicity.
///
/// Each root `r` satisfies
/// `|a(r)| <= 1e-12 * (1 + max|coeff|) * max(1, |r|)^deg`, the last factor
/// being the conditioning of Horner's rule for roots outside the unit disk.
pub fn roots(a: &Polynomial) -> Result<Vec<Complex64>, AlgebraError> {
    let degree = a.degree().ok_or(AlgebraError::ZeroPolynomial)?;
    let zeros = a.zero_root_multiplicity();
    let mut out = vec![Complex64::new(0.0, 0.0); zeros];
    if degree == zeros {
        return Ok(out);
    }
    let coeffs: Vec<Complex64> = a.to_f64()[zeros..]
        .iter()
        .map(|&c| Complex64::new(c, 0.0))
        .collect();
    let found = aberth(&coeffs);
    out.extend(found);

    let scale = 1.0 + a.max_abs_coeff();
    for r in &out {
        let residual = a.eval_complex(*r).norm();
        let tol = RESIDUAL_FACTOR * scale * r.norm().max(1.0).powi(degree as i32);
        if residual.is_nan() || residual > tol {
            return Err(AlgebraError::NonConvergence {
                sweeps: MAX_SWEEPS,
                residual,
            });
        }
    }
    Ok(out)
}

fn horner(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn initial_guesses(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n].norm();
    // Fujiwara-style bound on the root moduli
    let radius = (0..n)
        .map(|k| (coeffs[k].norm() / lead).powf(1.0 / (n - k) as f64))
        .fold(0.0, f64::max)
        .max(f64::MIN_POSITIVE);
    (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect()
}

fn aberth(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    if n == 1 {
        return vec![-coeffs[0] / coeffs[1]];
    }
    let mut z = initial_guesses(coeffs);
    for _ in 0..MAX_SWEEPS {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(coeffs, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let d = z[i] - z[j];
                    if d.norm() == 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        d.inv()
                    }
                })
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1e-300));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    // convergence is judged by the residual check in `roots`
    for r in &mut z {
        polish(coeffs, r);
    }
    z
}

fn polish(coeffs: &[Complex64], r: &mut Complex64) {
    let mut best = horner(coeffs, *r).0.norm();
    for _ in 0..50 {
        let (p, dp) = horner(coeffs, *r);
        if dp.norm() == 0.0 || p.norm() == 0.0 {
            break;
        }
        let candidate = *r - p / dp;
        let val = horner(coeffs, candidate).0.norm();
        if val.is_nan() || val >= best {
            break;
        }
        best = val;
        *r = candidate;
    }
}

/// Groups values that agree within `ROOT_EQUALITY_TOL * (1 + |x|)`.
pub fn distinct_count(values: &[f64]) -> usize {
    let mut sorted: Vec<f64> = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut count = 0;
    let mut last: Option<f64> = None;
    for v in sorted {
        match last {
            Some(prev) if (v - prev).abs() <= ROOT_EQUALITY_TOL * (1.0 + prev.abs()) => {}
            _ => count += 1,
        }
        last = Some(v);
    }
    count
}

/// True when no two roots coincide under the shared equality tolerance.
pub fn all_distinct(roots: &[Complex64]) -> bool {
    roots.iter().enumerate().all(|(i, a)| {
        roots[i + 1..]
            .iter()
            .all(|b| (a - b).norm() > ROOT_EQUALITY_TOL * (1.0 + a.norm()))
    })
}

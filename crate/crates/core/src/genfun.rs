//! Closed-form generating function of a Cauchy problem solution:
//!
//! `D(z,w) = ( P d + sum_k R_{k+1} Phi_k - (1/w) sum_a sum_{x<a} c_{a,0} phi(x,0) z^(a-x-1) ) / (P w - Q)`
//!
//! with `R_{k+1}(z,w) = sum_{a=k+1..m} (c_{a,1} w - c_{a,0}) z^(a-k-1)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{join_terms, Polynomial, Rational};
use crate::cauchy::{riordan_initial_data, CauchyError, DifferenceEquation, InitialData};
use crate::grid::Grid;
use crate::laurent::{LaurentError, LaurentTail};
use crate::riordan::RiordanSpec;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenfunError {
    #[error("column index {k} out of range 0..{m}")]
    IndexOutOfRange { k: usize, m: usize },
    #[error("Phi_{k} was given as a table; the closed form needs a rational U/V")]
    NonRationalInput { k: usize },
    #[error("Phi_{k} = U/V is malformed: {reason}")]
    InvalidColumn { k: usize, reason: String },
    #[error("expected {expected} column series, got {got}")]
    ColumnCountMismatch { expected: usize, got: usize },
    #[error("need phi(x,0) for x < {needed}, got {got} values")]
    InsufficientRow0 { needed: usize, got: usize },
    #[error("d has a zero denominator")]
    ZeroDenominator,
    #[error("denominator is not of the form w^s (A(z) w + B(z)): {0}")]
    UnsupportedDenominator(String),
    #[error("coefficient of w^(-{0}-1) has a polynomial part in z")]
    NotATail(usize),
    #[error(transparent)]
    Cauchy(#[from] CauchyError),
}

impl GenfunError {
    pub fn name(&self) -> &'static str {
        match self {
            GenfunError::IndexOutOfRange { .. } => "IndexOutOfRange",
            GenfunError::NonRationalInput { .. } => "NonRationalInput",
            GenfunError::InvalidColumn { .. } => "InvalidColumn",
            GenfunError::ColumnCountMismatch { .. } => "ColumnCountMismatch",
            GenfunError::InsufficientRow0 { .. } => "InsufficientRow0",
            GenfunError::ZeroDenominator => "ZeroDenominator",
            GenfunError::UnsupportedDenominator(_) => "UnsupportedDenominator",
            GenfunError::NotATail(_) => "NotATail",
            GenfunError::Cauchy(e) => e.name(),
        }
    }
}

impl From<LaurentError> for GenfunError {
    fn from(e: LaurentError) -> Self {
        GenfunError::Cauchy(e.into())
    }
}

/// Polynomial in `(z, w)`: `rows[j]` is the coefficient of `w^j`.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BivariatePoly {
    rows: Vec<Polynomial>,
}

impl BivariatePoly {
    pub fn new(mut rows: Vec<Polynomial>) -> Self {
        while rows.last().is_some_and(Polynomial::is_zero) {
            rows.pop();
        }
        BivariatePoly { rows }
    }

    pub fn zero() -> Self {
        BivariatePoly { rows: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_z(Polynomial::one())
    }

    /// A polynomial in `z` alone.
    pub fn from_z(p: Polynomial) -> Self {
        Self::new(vec![p])
    }

    /// A polynomial in `w` alone, given by its coefficients in `w`.
    pub fn from_w(p: &Polynomial) -> Self {
        Self::new(
            p.coeffs()
                .iter()
                .map(|c| Polynomial::constant(c.clone()))
                .collect(),
        )
    }

    /// `w^k`
    pub fn w_pow(k: usize) -> Self {
        let mut rows = vec![Polynomial::zero(); k + 1];
        rows[k] = Polynomial::one();
        Self::new(rows)
    }

    /// Builds `a(z) w + b(z)`.
    pub fn linear_in_w(a: Polynomial, b: Polynomial) -> Self {
        Self::new(vec![b, a])
    }

    /// Coefficient grid indexed `[w power][z power]`, from integers.
    pub fn from_int_grid(grid: &[&[i64]]) -> Self {
        Self::new(grid.iter().map(|r| Polynomial::from_ints(r)).collect())
    }

    pub fn rows(&self) -> &[Polynomial] {
        &self.rows
    }

    pub fn row(&self, j: usize) -> Polynomial {
        self.rows.get(j).cloned().unwrap_or_else(Polynomial::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn w_degree(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn z_degree(&self) -> Option<usize> {
        self.rows.iter().filter_map(Polynomial::degree).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.rows.iter().map(|r| r.scale(c)).collect())
    }

    pub fn mul_z(&self, p: &Polynomial) -> Self {
        Self::new(self.rows.iter().map(|r| r * p).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.rows.len().max(other.rows.len());
        Self::new((0..n).map(|j| &self.row(j) + &other.row(j)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.rows.len().max(other.rows.len());
        Self::new((0..n).map(|j| &self.row(j) - &other.row(j)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut rows = vec![Polynomial::zero(); self.rows.len() + other.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            for (j, b) in other.rows.iter().enumerate() {
                rows[i + j] = &rows[i + j] + &(a * b);
            }
        }
        Self::new(rows)
    }

    /// Swaps the roles of `z` and `w`.
    fn transpose(&self) -> Self {
        let nz = self.z_degree().map_or(0, |d| d + 1);
        Self::new(
            (0..nz)
                .map(|i| Polynomial::new(self.rows.iter().map(|r| r.coeff(i)).collect()))
                .collect(),
        )
    }

    /// Monic gcd over `Q[z]` of the `w`-coefficients.
    pub fn content_z(&self) -> Polynomial {
        self.rows.iter().fold(Polynomial::zero(), |g, r| g.gcd(r))
    }

    /// Monic gcd over `Q[w]` of the `z`-coefficients, as a polynomial in `w`.
    pub fn content_w(&self) -> Polynomial {
        self.transpose().content_z()
    }

    pub fn exact_div_z(&self, p: &Polynomial) -> Option<Self> {
        self.rows
            .iter()
            .map(|r| r.exact_div(p))
            .collect::<Option<Vec<_>>>()
            .map(Self::new)
    }

    pub fn exact_div_w(&self, p: &Polynomial) -> Option<Self> {
        self.transpose().exact_div_z(p).map(|t| t.transpose())
    }

    /// Exact quotient by a divisor of `w`-degree 1, `None` if it does not divide.
    pub fn exact_div_linear_w(&self, divisor: &Self) -> Option<Self> {
        if divisor.w_degree() != Some(1) {
            return None;
        }
        let (b, a) = (divisor.row(0), divisor.row(1));
        let Some(n) = self.w_degree() else {
            return Some(Self::zero());
        };
        if n == 0 {
            return None;
        }
        // N_j = a T_{j-1} + b T_j, top-down
        let mut quot = vec![Polynomial::zero(); n];
        let mut carry = self.row(n);
        for j in (1..=n).rev() {
            let t = carry.exact_div(&a)?;
            carry = &self.row(j - 1) - &(&b * &t);
            quot[j - 1] = t;
        }
        carry.is_zero().then(|| Self::new(quot))
    }

    /// All nonzero terms `(coefficient, z power, w power)`, ordered by total
    /// degree descending, then by `w` power descending.
    fn terms(&self) -> Vec<(Rational, usize, usize)> {
        let mut out = Vec::new();
        for (j, row) in self.rows.iter().enumerate() {
            for (i, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    out.push((c.clone(), i, j));
                }
            }
        }
        out.sort_by(|a, b| (b.1 + b.2).cmp(&(a.1 + a.2)).then(b.2.cmp(&a.2)));
        out
    }

    fn leading_coeff(&self) -> Option<Rational> {
        self.terms().first().map(|t| t.0.clone())
    }

    pub fn num_terms(&self) -> usize {
        self.terms().len()
    }
}

impl fmt::Display for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Rational, String)> = self
            .terms()
            .into_iter()
            .map(|(c, i, j)| {
                let z = match i {
                    0 => String::new(),
                    1 => "z".to_string(),
                    _ => format!("z^{i}"),
                };
                let w = match j {
                    0 => String::new(),
                    1 => "w".to_string(),
                    _ => format!("w^{j}"),
                };
                let mono = match (z.is_empty(), w.is_empty()) {
                    (false, false) => format!("{z}*{w}"),
                    _ => format!("{z}{w}"),
                };
                (c, mono)
            })
            .collect();
        f.write_str(&join_terms(&terms))
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariatePoly({self})")
    }
}

/// `num/den` with common univariate factors and the numerator's
/// divisibility by a linear-in-`w` denominator cancelled, then scaled to
/// integer coefficients of overall gcd 1 with a positive leading
/// denominator term.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BivariateRational {
    pub num: BivariatePoly,
    pub den: BivariatePoly,
}

impl BivariateRational {
    /// Panics on a zero denominator.
    pub fn new(num: BivariatePoly, den: BivariatePoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut r = BivariateRational { num, den };
        r.cancel();
        r.normalize_content();
        r
    }

    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den = BivariatePoly::one();
            return;
        }
        let gz = self.num.content_z().gcd(&self.den.content_z());
        if gz.degree() > Some(0) {
            self.num = self.num.exact_div_z(&gz).unwrap();
            self.den = self.den.exact_div_z(&gz).unwrap();
        }
        let gw = self.num.content_w().gcd(&self.den.content_w());
        if gw.degree() > Some(0) {
            self.num = self.num.exact_div_w(&gw).unwrap();
            self.den = self.den.exact_div_w(&gw).unwrap();
        }
        // what is left of the denominator is primitive; try it whole
        let rest = self
            .den
            .exact_div_z(&self.den.content_z())
            .and_then(|d| d.exact_div_w(&d.content_w()))
            .unwrap();
        if rest.w_degree() == Some(1) {
            if let (Some(n), Some(d)) = (
                self.num.exact_div_linear_w(&rest),
                self.den.exact_div_linear_w(&rest),
            ) {
                self.num = n;
                self.den = d;
            }
        }
    }

    fn normalize_content(&mut self) {
        let all: Vec<&Rational> = self
            .num
            .rows
            .iter()
            .chain(&self.den.rows)
            .flat_map(|r| r.coeffs())
            .filter(|c| !c.is_zero())
            .collect();
        let lcm_den = all.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let gcd_num = all.iter().fold(BigInt::zero(), |acc, c| {
            acc.gcd(&(c.numer() * (&lcm_den / c.denom())))
        });
        let mut factor = Rational::new(lcm_den, gcd_num);
        if self.den.leading_coeff().is_some_and(|c| c.is_negative()) {
            factor = -factor;
        }
        self.num = self.num.scale(&factor);
        self.den = self.den.scale(&factor);
    }

    pub fn scale(&self, c: &Rational) -> Self {
        // bypasses normalization so the constant survives
        BivariateRational {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// `self == other` as rational functions (cross-multiplication).
    pub fn same_function(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl fmt::Display for BivariateRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &BivariatePoly| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        if self.den == BivariatePoly::one() {
            return f.write_str(&self.num.to_string());
        }
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for BivariateRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivariateRational({self})")
    }
}

/// `Phi_k(w) = sum_{y>=1} phi(k,y) w^(-y-1) = U(w)/V(w)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColumnGF {
    pub k: usize,
    pub u: Polynomial,
    pub v: Polynomial,
}

impl ColumnGF {
    /// Finitely supported column `phi(k, 1..=n)` as `U / w^(n+1)`.
    pub fn from_finite(k: usize, values: &[Rational]) -> Self {
        let n = values.len();
        // phi(k,y) w^(-y-1) = phi(k,y) w^(n-y) / w^(n+1)
        let mut u = vec![Rational::zero(); n + 1];
        for (i, v) in values.iter().enumerate() {
            u[n - 1 - i] = v.clone();
        }
        ColumnGF {
            k,
            u: Polynomial::new(u),
            v: Polynomial::monomial(Rational::one(), n + 1),
        }
    }

    fn check(&self) -> Result<(), GenfunError> {
        let bad = |reason: &str| GenfunError::InvalidColumn {
            k: self.k,
            reason: reason.to_string(),
        };
        let dv = self.v.degree().ok_or_else(|| bad("V = 0"))?;
        if let Some(du) = self.u.degree() {
            // the series starts at w^-2
            if du + 2 > dv {
                return Err(bad("needs deg U <= deg V - 2 (no w^-1 term)"));
            }
        }
        Ok(())
    }
}

/// A column series: exact rational, or a bare table (rejected by [`assemble`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColumnInput {
    Rational(ColumnGF),
    Table(Vec<Rational>),
}

/// `R_{k+1}(z, w)` for `0 <= k < m`.
pub fn boundary_poly(eq: &DifferenceEquation, k: usize) -> Result<BivariatePoly, GenfunError> {
    let m = eq.m();
    if k >= m {
        return Err(GenfunError::IndexOutOfRange { k, m });
    }
    let shifted = |p: &Polynomial| Polynomial::new((k + 1..=m).map(|a| p.coeff(a)).collect());
    Ok(BivariatePoly::linear_in_w(shifted(&eq.p), -&shifted(&eq.q)))
}

/// `C(z) = sum_{a=0..m} sum_{x<a} c_{a,0} phi(x,0) z^(a-x-1)`; the correction
/// term is `-C(z)/w`. Summing `a` to `m` equals summing to `m-1` as `c_{m,0} = 0`.
pub fn correction_poly(
    eq: &DifferenceEquation,
    row0: &[Rational],
) -> Result<Polynomial, GenfunError> {
    let needed = eq.q.degree().unwrap_or(0);
    if row0.len() < needed {
        return Err(GenfunError::InsufficientRow0 {
            needed,
            got: row0.len(),
        });
    }
    let m = eq.m();
    let mut out = vec![Rational::zero(); m.max(1)];
    for a in 0..=m {
        let c = eq.q.coeff(a);
        if c.is_zero() {
            continue;
        }
        for x in 0..a {
            out[a - x - 1] += &c * &row0[x];
        }
    }
    Ok(Polynomial::new(out))
}

/// The closed form over the common denominator
/// `d_den(z) lcm(V_k)(w) w (P(z) w - Q(z))`, reduced.
pub fn assemble(
    eq: &DifferenceEquation,
    d: (&Polynomial, &Polynomial),
    cols: &[ColumnInput],
    row0: &[Rational],
) -> Result<BivariateRational, GenfunError> {
    let wp = eq.well_posed();
    if !wp.ok {
        return Err(CauchyError::NotWellPosed(wp.report.join("; ")).into());
    }
    let m = eq.m();
    if cols.len() != m {
        return Err(GenfunError::ColumnCountMismatch {
            expected: m,
            got: cols.len(),
        });
    }
    let (d_num, d_den) = d;
    if d_den.is_zero() {
        return Err(GenfunError::ZeroDenominator);
    }
    let mut gfs = Vec::with_capacity(m);
    for (k, c) in cols.iter().enumerate() {
        match c {
            ColumnInput::Table(_) => return Err(GenfunError::NonRationalInput { k }),
            ColumnInput::Rational(gf) => {
                if gf.k != k {
                    return Err(GenfunError::InvalidColumn {
                        k,
                        reason: format!("labelled {}", gf.k),
                    });
                }
                gf.check()?;
                gfs.push(gf);
            }
        }
    }
    let lcm_v = gfs.iter().fold(Polynomial::one(), |acc, g| acc.lcm(&g.v));
    let w = BivariatePoly::w_pow(1);
    let lv = BivariatePoly::from_w(&lcm_v);
    let c0 = correction_poly(eq, row0)?;

    let mut num = BivariatePoly::from_z(&eq.p * d_num).mul(&lv).mul(&w);
    for (k, g) in gfs.iter().enumerate() {
        let cofactor = lcm_v.exact_div(&g.v).expect("lcm is a multiple");
        let term = boundary_poly(eq, k)?
            .mul(&BivariatePoly::from_w(&(&g.u * &cofactor)))
            .mul(&w)
            .mul_z(d_den);
        num = num.add(&term);
    }
    num = num.sub(&lv.mul_z(&(d_den * &c0)));

    let r = BivariatePoly::linear_in_w(eq.p.clone(), -&eq.q);
    let den = lv.mul(&w).mul(&r).mul_z(d_den);
    Ok(BivariateRational::new(num, den))
}

/// Exact `Phi_k` for Riordan initial data; column `k` vanishes for `y > k`.
pub fn riordan_columns(spec: &RiordanSpec) -> Result<Vec<ColumnGF>, GenfunError> {
    let m = spec.m();
    let init = riordan_initial_data(spec, m.saturating_sub(1), m.saturating_sub(1))?;
    Ok((0..m)
        .map(|k| ColumnGF::from_finite(k, &init.cols[k][..k]))
        .collect())
}

/// [`assemble`] fed with the Riordan data of `spec`.
pub fn assemble_riordan(spec: &RiordanSpec) -> Result<BivariateRational, GenfunError> {
    let eq = DifferenceEquation::from_spec(spec);
    let m = spec.m();
    let cols: Vec<ColumnInput> = riordan_columns(spec)?
        .into_iter()
        .map(ColumnInput::Rational)
        .collect();
    let init = riordan_initial_data(spec, m, 0)?;
    assemble(&eq, (&spec.d_num, &spec.d_den), &cols, &init.row0)
}

/// Closed form for tabulated data on the window `xmax` x `ymax`: the row
/// `phi(x, 0)` stands in for `d` and every column is cut after `y = ymax`.
/// Entries in the window only see data inside it, so [`series_of`] of the
/// result agrees with [`crate::cauchy::solve`] there.
pub fn assemble_from_tables(
    eq: &DifferenceEquation,
    init: &InitialData,
    xmax: usize,
    ymax: usize,
) -> Result<BivariateRational, GenfunError> {
    let (have_x, have_y) = init.window();
    if have_x < xmax || (have_y < ymax && ymax > 0) || init.cols.len() < eq.m() {
        return Err(CauchyError::InsufficientInitialData(format!(
            "tables cover {have_x} x {have_y}, window is {xmax} x {ymax}"
        ))
        .into());
    }
    let mut d_num = vec![Rational::zero(); xmax + 1];
    for x in 0..=xmax {
        d_num[xmax - x] = init.row0[x].clone();
    }
    let d_num = Polynomial::new(d_num);
    let d_den = Polynomial::monomial(Rational::one(), xmax + 1);
    let cols: Vec<ColumnInput> = (0..eq.m())
        .map(|k| ColumnInput::Rational(ColumnGF::from_finite(k, &init.cols[k][..ymax])))
        .collect();
    assemble(eq, (&d_num, &d_den), &cols, &init.row0)
}

/// Coefficients of `w^(-j-1)`, `j = 0..depth`, of the correction expression
/// `sum_k R_{k+1} Phi_k - C(z)/w`, with `Phi_k` read from `init` up to `y = depth`.
pub fn correction_series(
    eq: &DifferenceEquation,
    init: &InitialData,
    depth: usize,
) -> Result<Vec<Polynomial>, GenfunError> {
    let m = eq.m();
    let (_, ymax) = init.window();
    if ymax < depth || init.cols.len() < m {
        return Err(CauchyError::InsufficientInitialData(format!(
            "probe depth {depth} needs phi(k,y) for y <= {depth}"
        ))
        .into());
    }
    let c0 = correction_poly(eq, &init.row0)?;
    let bounds: Vec<BivariatePoly> = (0..m)
        .map(|k| boundary_poly(eq, k))
        .collect::<Result<_, _>>()?;
    let phi = |k: usize, y: usize| -> Rational {
        if y == 0 || y > depth {
            Rational::zero()
        } else {
            init.cols[k][y - 1].clone()
        }
    };
    let mut out = Vec::with_capacity(depth);
    for j in 0..depth {
        // (A w - B) Phi: A phi(k, j+1) w^(-j-1) and -B phi(k, j) w^(-j-1)
        let mut coeff = if j == 0 { -&c0 } else { Polynomial::zero() };
        for (k, r) in bounds.iter().enumerate() {
            let a = r.row(1);
            let b = -&r.row(0);
            coeff = &coeff + &a.scale(&phi(k, j + 1));
            coeff = &coeff - &b.scale(&phi(k, j));
        }
        out.push(coeff);
    }
    Ok(out)
}

/// Probes the vanishing of the correction expression for Riordan data of `spec`.
pub fn correction_is_zero(
    eq: &DifferenceEquation,
    spec: &RiordanSpec,
    depth: usize,
) -> Result<bool, GenfunError> {
    let init = riordan_initial_data(spec, eq.m(), depth)?;
    Ok(correction_series(eq, &init, depth)?
        .iter()
        .all(Polynomial::is_zero))
}

/// Coefficients `r(x, y)` of `gf = sum r(x,y) z^(-x-1) w^(-y-1)`.
///
/// The denominator must read `w^s (A(z) w + B(z))`; then
/// `1/(A w + B) = sum_j (-B)^j / A^(j+1) w^(-j-1)` and every `w`-coefficient
/// is expanded at `z = infinity`.
pub fn series_of(gf: &BivariateRational, xmax: usize, ymax: usize) -> Result<Grid, GenfunError> {
    let den = &gf.den;
    let s = den.rows().iter().take_while(|r| r.is_zero()).count();
    let stripped = BivariatePoly::new(den.rows()[s..].to_vec());
    if stripped.w_degree() != Some(1) {
        return Err(GenfunError::UnsupportedDenominator(den.to_string()));
    }
    let a = stripped.row(1);
    let minus_b = -&stripped.row(0);
    let imax = gf.num.w_degree().unwrap_or(0);

    let mut rows = Vec::with_capacity(ymax + 1);
    for y in 0..=ymax {
        let top = y + imax;
        if top < s {
            rows.push(vec![Rational::zero(); xmax + 1]);
            continue;
        }
        let big_j = top - s;
        let mut numer = Polynomial::zero();
        for (i, ni) in gf.num.rows().iter().enumerate() {
            if ni.is_zero() || y + i < s {
                continue;
            }
            let j = y + i - s;
            numer = &numer + &(&(ni * &minus_b.pow(j as u32)) * &a.pow((big_j - j) as u32));
        }
        let denom = a.pow(big_j as u32 + 1);
        if numer
            .degree()
            .is_some_and(|dn| dn >= denom.degree().unwrap())
        {
            return Err(GenfunError::NotATail(y));
        }
        let tail = LaurentTail::expand_at_infinity(&numer, &denom, xmax)?;
        rows.push(tail.coeffs().to_vec());
    }
    Ok(Grid::from_rows(rows))
}

//! Truncated Laurent series at infinity, `s_0/z + s_1/z^2 + ... + s_K/z^(K+1)`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{rational, Polynomial, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("deg numerator {num} >= deg denominator {den}: no pure tail at infinity")]
    DegreeViolation { num: usize, den: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("h^0 = 1 is not a tail at infinity")]
    ZeroExponentUnrepresentable,
    #[error("residue needs index {x} but the tail stops at order {order}")]
    TruncationTooShort { x: usize, order: usize },
}

impl LaurentError {
    pub fn name(&self) -> &'static str {
        match self {
            LaurentError::DegreeViolation { .. } => "DegreeViolation",
            LaurentError::ZeroDenominator => "ZeroDenominator",
            LaurentError::ZeroExponentUnrepresentable => "ZeroExponentUnrepresentable",
            LaurentError::TruncationTooShort { .. } => "TruncationTooShort",
        }
    }
}

/// `coeffs[k]` multiplies `z^(-k-1)`; the order is `coeffs.len() - 1`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentTail {
    #[serde(with = "rational::vec")]
    coeffs: Vec<Rational>,
    order: usize,
}

impl std::fmt::Debug for LaurentTail {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let text: Vec<String> = self.coeffs.iter().map(rational::format).collect();
        write!(f, "LaurentTail[{}]", text.join(", "))
    }
}

impl LaurentTail {
    /// Panics on an empty coefficient list (the order would be negative).
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a LaurentTail holds at least s_0");
        let order = coeffs.len() - 1;
        LaurentTail { coeffs, order }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![Rational::zero(); order + 1])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Drops coefficients past `order` (never extends).
    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order)].to_vec())
    }

    /// Exact expansion of `num/den` at infinity to the given order.
    ///
    /// Coefficients follow from matching powers in `den * h = num`:
    /// `h_n = ([z^(m-1-n)] num - sum_{j=1..min(n,m)} c_{m-j} h_{n-j}) / c_m`.
    pub fn expand_at_infinity(
        num: &Polynomial,
        den: &Polynomial,
        order: usize,
    ) -> Result<Self, LaurentError> {
        let m = den.degree().ok_or(LaurentError::ZeroDenominator)?;
        if let Some(dn) = num.degree() {
            if dn >= m {
                return Err(LaurentError::DegreeViolation { num: dn, den: m });
            }
        }
        let c = den.coeffs();
        let lead_inv = Rational::one() / &c[m];
        let mut h: Vec<Rational> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = if n < m {
                num.coeff(m - 1 - n)
            } else {
                Rational::zero()
            };
            for j in 1..=n.min(m) {
                if !c[m - j].is_zero() {
                    acc -= &c[m - j] * &h[n - j];
                }
            }
            h.push(acc * &lead_inv);
        }
        Ok(Self::new(h))
    }

    /// Truncated Cauchy product: `r_k = sum_{i+j=k-1} a_i b_j`, order `min`.
    pub fn mul(&self, other: &LaurentTail) -> LaurentTail {
        let order = self.order.min(other.order);
        let mut out = vec![Rational::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order - i) {
                if !b.is_zero() {
                    out[i + j + 1] += a * b;
                }
            }
        }
        LaurentTail { coeffs: out, order }
    }

    pub fn scale(&self, c: &Rational) -> LaurentTail {
        LaurentTail {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
            order: self.order,
        }
    }

    pub fn add(&self, other: &LaurentTail) -> LaurentTail {
        let order = self.order.min(other.order);
        LaurentTail {
            coeffs: (0..=order)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
            order,
        }
    }

    /// `h^y` by binary exponentiation, truncating after every product.
    pub fn pow(&self, y: u32) -> Result<LaurentTail, LaurentError> {
        if y == 0 {
            return Err(LaurentError::ZeroExponentUnrepresentable);
        }
        let mut base = self.clone();
        let mut acc: Option<LaurentTail> = None;
        let mut e = y;
        loop {
            if e & 1 == 1 {
                acc = Some(match acc {
                    None => base.clone(),
                    Some(a) => a.mul(&base),
                });
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base);
        }
        Ok(acc.expect("y > 0"))
    }

    /// `Res { a(z) z^x }`, the coefficient `a_x`.
    pub fn res(&self, x: usize) -> Result<Rational, LaurentError> {
        self.coeffs
            .get(x)
            .cloned()
            .ok_or(LaurentError::TruncationTooShort {
                x,
                order: self.order,
            })
    }
}

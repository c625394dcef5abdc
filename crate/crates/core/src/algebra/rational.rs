//! Exact rationals and their textual form.
//!
//! Rationals serialize as `"num/den"`; integers may drop the `/1`.

use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serializer};

use super::AlgebraError;

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"-3/7"`, `"12"` or `"4/2"` (reduced on the way in).
pub fn parse(s: &str) -> Result<Rational, AlgebraError> {
    let s = s.trim();
    let bad = || AlgebraError::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(AlgebraError::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

pub fn format(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Natural log of |r|; `-inf` for zero. Works far outside the f64 range.
pub fn ln_abs(r: &Rational) -> f64 {
    if r.is_zero() {
        return f64::NEG_INFINITY;
    }
    ln_bigint(r.numer()) - ln_bigint(r.denom())
}

fn ln_bigint(n: &BigInt) -> f64 {
    let bits = n.bits();
    if bits < 1000 {
        if let Some(f) = n.abs().to_f64() {
            if f.is_finite() {
                return f.ln();
            }
        }
    }
    let shift = bits - 60;
    let top = (n.abs() >> shift).to_f64().unwrap_or(f64::NAN);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Nearest double, with sign; saturates to +-inf for huge values.
pub fn to_f64(r: &Rational) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    if let (Some(n), Some(d)) = (r.numer().to_f64(), r.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let sign = if r.numer().sign() == Sign::Minus {
        -1.0
    } else {
        1.0
    };
    sign * ln_abs(r).exp()
}

pub(crate) fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format(r))
}

pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
    let s = RationalText::deserialize(d)?;
    s.into_rational().map_err(serde::de::Error::custom)
}

/// Accepts both `"3/4"` and bare JSON integers.
#[derive(Deserialize)]
#[serde(untagged)]
pub(crate) enum RationalText {
    Text(String),
    Int(i64),
}

impl RationalText {
    pub(crate) fn into_rational(self) -> Result<Rational, AlgebraError> {
        match self {
            RationalText::Text(s) => parse(&s),
            RationalText::Int(n) => Ok(int(n)),
        }
    }
}

pub(crate) mod vec {
    use super::*;
    use serde::ser::SerializeSeq;

    pub(crate) fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format(r))?;
        }
        seq.end()
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<RationalText>::deserialize(d)?
            .into_iter()
            .map(|t| t.into_rational().map_err(serde::de::Error::custom))
            .collect()
    }
}

pub(crate) mod matrix {
    use super::*;

    pub(crate) fn serialize<S: Serializer>(v: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let text: Vec<Vec<String>> = v
            .iter()
            .map(|row| row.iter().map(format).collect())
            .collect();
        serde::Serialize::serialize(&text, s)
    }

    pub(crate) fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<Vec<Vec<Rational>>, D::Error> {
        Vec::<Vec<RationalText>>::deserialize(d)?
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|t| t.into_rational().map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one()
}

pub fn abs(r: &Rational) -> Rational {
    if r.is_negative() {
        -r.clone()
    } else {
        r.clone()
    }
}

pub fn one() -> Rational {
    Rational::one()
}

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use riordan_core::{Polynomial, Rational, RiordanSpec};

pub const SEED: u64 = 0x5eed_2024;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coeffs(rng: &mut ChaCha8Rng, degree: usize) -> Vec<i64> {
    let mut c: Vec<i64> = (0..=degree).map(|_| rng.random_range(-5..=5)).collect();
    while c[degree] == 0 {
        c[degree] = rng.random_range(-5..=5);
    }
    c
}

/// Valid spec: `1 <= m <= 4`, nonzero `Q` of lower degree, `deg d_den <= 4`,
/// integer coefficients in `[-5, 5]`.
pub fn random_spec(rng: &mut ChaCha8Rng) -> RiordanSpec {
    let m = rng.random_range(1..=4usize);
    let p = Polynomial::from_ints(&coeffs(rng, m));
    let q = loop {
        let dq = rng.random_range(0..m);
        let q = Polynomial::from_ints(&coeffs(rng, dq));
        if !q.is_zero() {
            break q;
        }
    };
    let dd = rng.random_range(1..=4usize);
    let d_den = Polynomial::from_ints(&coeffs(rng, dd));
    let dn = rng.random_range(0..dd);
    let mut num = coeffs(rng, dn);
    if rng.random_bool(0.2) {
        num.iter_mut().for_each(|c| *c = 0);
        num[0] = 1;
    }
    RiordanSpec::new(p, q, Polynomial::from_ints(&num), d_den)
}

/// `C(n, k)` by the product `prod_{i=1..k} (n-k+i)/i`, each partial product exact.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 1..=k {
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

pub fn int(n: impl Into<BigInt>) -> Rational {
    Rational::from_integer(n.into())
}

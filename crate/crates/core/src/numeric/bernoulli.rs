//! Even-index Bernoulli numbers for the asymptotic series, via tangent numbers.
//!
//! Deliberately separate from the exact Hurwitz bootstrap so numeric checks do
//! not inherit its arithmetic.

use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::One;

use crate::exact::{factorial, Rational};

static CACHE: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// Tangent numbers T_1..T_n (1, 2, 16, 272, ...).
fn tangent_numbers(n: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::from(0); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = BigInt::one();
    for k in 2..=n {
        t[k] = &t[k - 1] * BigInt::from(k - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * BigInt::from(j - k) + &t[j] * BigInt::from(j - k + 2);
        }
    }
    t
}

/// B_{2k} / (2k)! for k >= 1.
pub fn b2k_over_factorial(k: usize) -> Rational {
    assert!(k >= 1);
    if let Some(v) = CACHE.read().expect("bernoulli cache poisoned").get(k - 1) {
        return v.clone();
    }
    let mut cache = CACHE.write().expect("bernoulli cache poisoned");
    if cache.len() < k {
        let n = k.max(2 * cache.len()).max(32);
        let t = tangent_numbers(n);
        *cache = (1..=n)
            .map(|j| {
                let four = BigInt::from(4).pow(j as u32);
                let sign = if j % 2 == 1 { 1 } else { -1 };
                let b = Rational::new(BigInt::from(sign * 2 * j as i64) * &t[j], &four * (&four - 1));
                b / Rational::from_integer(factorial(2 * j as u64))
            })
            .collect();
    }
    cache[k - 1].clone()
}

/// B_{2k} itself.
pub fn b2k(k: usize) -> Rational {
    b2k_over_factorial(k) * Rational::from_integer(factorial(2 * k as u64))
}

//! Exact values of the Hurwitz zeta function at non-positive integers.
//!
//! Everything is bootstrapped from the identity
//! `sum_{k<m} C(m,k) zeta(-k) + 1 = 1/(m+1)`; Bernoulli numbers are derived
//! from the resulting polynomials rather than used as input.

use std::sync::RwLock;

use num_traits::{One, Zero};

use crate::exact::rational::pow2;
use crate::exact::{binomial, factorial, rat, rat_int, Cyclotomic, Polynomial, Rational, RationalPolynomial};
use crate::special_value::SpecialValue;

static ZETA_NEG: RwLock<Vec<Rational>> = RwLock::new(Vec::new());

/// zeta(-m), memoised. Trivial zeros come out of the recurrence.
pub fn zeta_neg(m: u64) -> Rational {
    let m = m as usize;
    if let Some(v) = ZETA_NEG.read().expect("zeta cache poisoned").get(m) {
        return v.clone();
    }
    let mut cache = ZETA_NEG.write().expect("zeta cache poisoned");
    while cache.len() <= m {
        // Instance n = j + 1 of the recurrence solved for zeta(-j).
        let j = cache.len() as u64;
        let n = j + 1;
        let mut rhs = rat(1, n as i64 + 1) - Rational::one();
        for (k, z) in cache.iter().enumerate() {
            rhs -= Rational::from_integer(binomial(n, k as u64)) * z;
        }
        let v = rhs / Rational::from_integer(binomial(n, j));
        cache.push(v);
    }
    cache[m].clone()
}

/// zeta(-m, alpha) = sum_k C(m,k) zeta(-k) alpha^{m-k} + alpha^m - alpha^{m+1}/(m+1).
pub fn hurwitz_poly(m: u64) -> RationalPolynomial {
    let mut coeffs = vec![Rational::zero(); m as usize + 2];
    for k in 0..=m {
        coeffs[(m - k) as usize] += Rational::from_integer(binomial(m, k)) * zeta_neg(k);
    }
    coeffs[m as usize] += Rational::one();
    coeffs[m as usize + 1] = -rat(1, m as i64 + 1);
    Polynomial::new(coeffs)
}

/// Exact zeta(-m, alpha) for rational alpha.
pub fn hurwitz_value(m: u64, alpha: &Rational) -> Rational {
    hurwitz_poly(m).eval(alpha)
}

/// Expansion point for [`hurwitz_poly_about`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    /// About alpha = 1/2.
    I,
    /// About alpha = -1/2, with the leading alpha^m shift term.
    II,
    /// About alpha = 1.
    III,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::I, Variant::II, Variant::III];
}

/// zeta(-m, alpha) expanded in powers of (alpha - c) and re-expanded in alpha.
pub fn hurwitz_poly_about(m: u64, variant: Variant) -> RationalPolynomial {
    let shift = |c: Rational| Polynomial::linear(c, Rational::one());
    let (base, halved, head) = match variant {
        Variant::I => (shift(rat(-1, 2)), true, RationalPolynomial::zero()),
        Variant::II => (shift(rat(1, 2)), true, Polynomial::monomial(Rational::one(), m as usize)),
        Variant::III => (shift(rat(-1, 1)), false, RationalPolynomial::zero()),
    };
    let mut acc = head;
    let mut power = Polynomial::constant(Rational::one());
    for n in 0..=m {
        let mut c = Rational::from_integer(binomial(m, n)) * zeta_neg(m - n);
        if halved {
            c *= pow2(n as i64 - m as i64) - Rational::one();
        }
        if !c.is_zero() {
            acc = &acc + &power.scale(&c);
        }
        power = &power * &base;
    }
    &acc - &power.scale(&rat(1, m as i64 + 1))
}

/// sum_{k<m} C(m,k) zeta(-k,alpha) + alpha^m - 1/(m+1); identically zero.
pub fn theorem2_residual(m: u64) -> RationalPolynomial {
    let mut acc = Polynomial::monomial(Rational::one(), m as usize);
    for k in 0..m {
        acc = &acc + &hurwitz_poly(k).scale(&rat_int(binomial(m, k)));
    }
    &acc - &Polynomial::constant(rat(1, m as i64 + 1))
}

/// B_n(alpha) = -n zeta(1-n, alpha) for n >= 1, and B_0 = 1.
pub fn bernoulli_poly(n: u64) -> RationalPolynomial {
    if n == 0 {
        return Polynomial::constant(Rational::one());
    }
    hurwitz_poly(n - 1).scale(&rat(-(n as i64), 1))
}

/// B_n = B_n(1), so B_1 = +1/2.
pub fn bernoulli_number(n: u64) -> Rational {
    bernoulli_poly(n).eval(&Rational::one())
}

/// zeta(2m) = (-1)^m 2^{2m-1} zeta(1-2m) pi^{2m} / (2m-1)!.
pub fn zeta_even(m: u64) -> SpecialValue {
    assert!(m >= 1, "zeta_even needs m >= 1");
    let sign = if m % 2 == 0 { 1 } else { -1 };
    let c = pow2(2 * m as i64 - 1) * zeta_neg(2 * m - 1) * rat(sign, 1)
        / Rational::from_integer(factorial(2 * m - 1));
    SpecialValue::new(Cyclotomic::from_rational(c), 2 * m as u32)
}

/// L(2m+1, chi_4) = (-1)^m 2^{2m} zeta(-2m, 1/4) pi^{2m+1} / (2m)!.
pub fn chi4_odd_l(m: u64) -> SpecialValue {
    let sign = if m % 2 == 0 { 1 } else { -1 };
    let c = pow2(2 * m as i64) * hurwitz_value(2 * m, &rat(1, 4)) * rat(sign, 1)
        / Rational::from_integer(factorial(2 * m));
    SpecialValue::new(Cyclotomic::from_rational(c), 2 * m as u32 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    use crate::exact::rational::rat_pow;

    /// (-1/2)^m, the shift between zeta(-m, -1/2) and zeta(-m, 1/2).
    fn half_shift(m: u64) -> Rational {
        rat_pow(&rat(-1, 2), m)
    }

    fn poly(c: &[(i64, i64)]) -> RationalPolynomial {
        Polynomial::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn first_values() {
        assert_eq!(zeta_neg(0), rat(-1, 2));
        assert_eq!(zeta_neg(1), rat(-1, 12));
        assert_eq!(zeta_neg(2), rat(0, 1));
        assert_eq!(zeta_neg(3), rat(1, 120));
        assert_eq!(zeta_neg(5), rat(-1, 252));
    }

    #[test]
    fn small_polynomials() {
        assert_eq!(hurwitz_poly(0), poly(&[(1, 2), (-1, 1)]));
        assert_eq!(hurwitz_poly(1), poly(&[(-1, 12), (1, 2), (-1, 2)]));
        assert_eq!(hurwitz_poly(2), poly(&[(0, 1), (-1, 6), (1, 2), (-1, 3)]));
        assert_eq!(hurwitz_value(2, &rat(1, 4)), rat(-1, 64));
        assert_eq!(hurwitz_value(0, &rat(1, 2)), rat(0, 1));
        assert_eq!(hurwitz_value(7, &rat(1, 1)), zeta_neg(7));
    }

    #[test]
    fn variants() {
        for v in Variant::ALL {
            assert_eq!(hurwitz_poly_about(0, v), poly(&[(1, 2), (-1, 1)]));
            assert_eq!(hurwitz_poly_about(3, v), hurwitz_poly(3));
        }
        assert_eq!(hurwitz_poly_about(1, Variant::I).eval(&rat(1, 2)), rat(1, 24));
    }

    #[test]
    fn residual_and_bernoulli() {
        for m in [1, 2, 6] {
            assert!(theorem2_residual(m).is_zero());
        }
        assert_eq!(bernoulli_poly(1), poly(&[(-1, 2), (1, 1)]));
        assert_eq!(bernoulli_poly(2), poly(&[(1, 6), (-1, 1), (1, 1)]));
        assert_eq!(bernoulli_poly(4), poly(&[(-1, 30), (0, 1), (1, 1), (-2, 1), (1, 1)]));
        assert_eq!(bernoulli_number(1), rat(1, 2));
        assert_eq!(bernoulli_number(2), rat(1, 6));
        assert_eq!(bernoulli_number(12), rat(-691, 2730));
    }

    #[test]
    fn even_and_chi4() {
        assert_eq!(zeta_even(1).to_string(), "(1/6) * pi^2");
        assert_eq!(zeta_even(2).to_string(), "(1/90) * pi^4");
        assert_eq!(zeta_even(3).to_string(), "(1/945) * pi^6");
        assert_eq!(chi4_odd_l(0).to_string(), "(1/4) * pi");
        assert_eq!(chi4_odd_l(1).to_string(), "(1/32) * pi^3");
        assert_eq!(chi4_odd_l(2).to_string(), "(5/1536) * pi^5");
    }

    #[test]
    fn shifted_bootstrap() {
        for m in 0..=10 {
            let via_minus_half = hurwitz_value(m, &rat(-1, 2)) - half_shift(m);
            assert_eq!(via_minus_half, hurwitz_value(m, &rat(1, 2)));
        }
    }
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational in canonical reduced form (positive denominator, `0/1` for zero).
pub type Rational = num_rational::BigRational;

/// Builds the canonical rational `numerator / denominator`.
pub fn rat_normalize(numerator: BigInt, denominator: BigInt) -> Result<Rational> {
    if denominator.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(numerator, denominator))
}

/// Small-integer shorthand; panics on a zero denominator.
pub fn rat(numerator: i64, denominator: i64) -> Rational {
    Rational::new(BigInt::from(numerator), BigInt::from(denominator))
}

pub fn rat_int<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `p/q`, `-p/q` or `p`. Both the ASCII hyphen and U+2212 are accepted as minus.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let cleaned = text.trim().replace('\u{2212}', "-");
    let bad = || Error::InvalidArgument(format!("malformed rational {text:?}"));
    let (num, den) = match cleaned.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (cleaned.as_str(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    rat_normalize(num, den)
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn pow2(e: i64) -> Rational {
    let p = BigInt::one() << e.unsigned_abs();
    if e >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

pub fn rat_pow(base: &Rational, e: u64) -> Rational {
    num_traits::pow(base.clone(), e as usize)
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalize_examples() {
        let r = rat_normalize(2.into(), 4.into()).unwrap();
        assert_eq!(r.to_string(), "1/2");
        let z = rat_normalize(0.into(), 5.into()).unwrap();
        assert_eq!((z.numer().clone(), z.denom().clone()), (0.into(), 1.into()));
        let n = rat_normalize(3.into(), (-6).into()).unwrap();
        assert_eq!(n.to_string(), "-1/2");
        assert_eq!(rat_normalize(1.into(), 0.into()), Err(Error::DivisionByZero));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("1/4").unwrap(), rat(1, 4));
        assert_eq!(parse_rational("\u{2212}3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), rat(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/2").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10.into());
        assert_eq!(binomial(0, 0), 1.into());
        assert_eq!(binomial(3, 4), 0.into());
        assert_eq!(factorial(6), 720.into());
        assert_eq!(pow2(-3), rat(1, 8));
    }
}

//! Complex Gamma function: Stirling series after an upward shift, reflection
//! for the left half-plane.

use super::bernoulli::b2k;
use super::bigfloat::{Complex, Precision, Real};
use crate::error::{Error, Result};

fn ln_gamma_stirling(z: &Complex, digits: f64) -> Complex {
    let p = z.precision();
    let half = Real::from_f64(0.5, p);
    let ln_z = z.ln();
    let two_pi = Real::pi(p).mul_i64(2);
    let mut acc = &(&Complex::new(&z.re - &half, z.im.clone()) * &ln_z) - z;
    acc = &acc + &Complex::from_real(&two_pi.ln() * &half);
    let inv = &Complex::one(p) / z;
    let inv2 = &inv * &inv;
    let mut zpow = inv;
    let eps = Real::pow10(-(digits.ceil() as i64), p);
    let zmag = z.abs().to_f64();
    let kmax = (std::f64::consts::PI * zmag).ceil() as usize + 2;
    for k in 1..=kmax {
        let c = Real::from_rational(&b2k(k), p).div_i64((2 * k * (2 * k - 1)) as i64);
        let term = zpow.scale(&c);
        let small = term.abs() < eps;
        acc = &acc + &term;
        if small {
            break;
        }
        zpow = &zpow * &inv2;
    }
    acc
}

fn is_nonpositive_integer(z: &Complex) -> bool {
    z.im.is_zero() && !(z.re > Real::zero(z.precision())) && z.re.floor() == z.re
}

/// Gamma(z); poles at non-positive integers are a domain error.
pub fn gamma(z: &Complex, prec: Precision) -> Result<Complex> {
    if is_nonpositive_integer(z) {
        return Err(Error::DomainError(format!("Gamma has a pole at {}", z.re.to_string_digits(10))));
    }
    let wp = prec.with_guard(10);
    let p = wp.bits();
    let z = z.with_bits(p);
    let half = Real::from_f64(0.5, p);
    if z.re < half {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        let pi = Real::pi(p);
        let one_minus = &Complex::one(p) - &z;
        let g = gamma(&one_minus, wp)?.with_bits(p);
        let s = z.scale(&pi).sin();
        return Ok((&Complex::from_real(pi) / &(&s * &g)).with_precision(prec));
    }
    let digits = wp.get() as f64;
    let target = digits * std::f64::consts::LN_10 / (2.0 * std::f64::consts::PI) + 3.0;
    let shift = (target - z.re.to_f64()).ceil().max(0.0) as u64;
    let mut prod = Complex::one(p);
    let mut w = z.clone();
    for _ in 0..shift {
        prod = &prod * &w;
        w = &w + &Complex::one(p);
    }
    let lg = ln_gamma_stirling(&w, digits);
    Ok((&lg.exp() / &prod).with_precision(prec))
}

pub fn gamma_real(x: &Real, prec: Precision) -> Result<Real> {
    Ok(gamma(&Complex::from_real(x.clone()), prec)?.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_and_half_values() {
        let prec = Precision::digits(50);
        let p = prec.bits();
        let tol = prec.tolerance(8);
        let g1 = gamma_real(&Real::one(p), prec).unwrap();
        assert!((&g1 - &Real::one(p)).abs() < tol);
        let g5 = gamma_real(&Real::from_i64(5, p), prec).unwrap();
        assert!((&g5 - &Real::from_i64(24, p)).abs() < tol);
        let gh = gamma_real(&Real::from_f64(0.5, p), prec).unwrap();
        assert!((&(&gh * &gh) - &Real::pi(p)).abs() < tol);
        let gm = gamma_real(&Real::from_f64(-1.5, p), prec).unwrap();
        // Gamma(-3/2) = 4 sqrt(pi) / 3
        let expect = Real::pi(p).sqrt().mul_i64(4).div_i64(3);
        assert!((&gm - &expect).abs() < tol);
        assert!(gamma_real(&Real::from_i64(-2, p), prec).is_err());
    }

    #[test]
    fn recurrence_off_axis() {
        let prec = Precision::digits(40);
        let p = prec.bits();
        let z = Complex::from_f64(0.3, 1.25, p);
        let lhs = gamma(&(&z + &Complex::one(p)), prec).unwrap();
        let rhs = &z * &gamma(&z, prec).unwrap();
        assert!((&lhs - &rhs).abs() < prec.tolerance(8));
    }
}

//! Hurwitz's formula for s < 0:
//! zeta(s, a) = 2^s pi^{s-1} Gamma(1-s) sum_{n>=1} sin(pi s/2 + 2 pi n a) n^{s-1}.
//!
//! For rational a = p/q the sine depends only on n mod q, so the series splits
//! into q residue-class sums q^{s-1} zeta(1-s, r/q), each absolutely convergent.

use super::bigfloat::{Complex, Precision, Real, GUARD_DIGITS};
use super::gamma::gamma;
use super::zeta::hurwitz_numeric;
use crate::error::{Error, Result};
use crate::exact::Rational;

pub fn hurwitz_formula_eval(s: &Real, alpha: &Rational, prec: Precision) -> Result<Real> {
    if !s.is_negative() {
        return Err(Error::DomainError(format!(
            "the trigonometric series needs s < 0, got {}",
            s.to_string_digits(12)
        )));
    }
    let zero = Rational::from_integer(0.into());
    let one = Rational::from_integer(1.into());
    if alpha <= &zero || alpha > &one {
        return Err(Error::DomainError(format!("alpha must lie in (0, 1], got {alpha}")));
    }
    let wp = prec.with_guard(GUARD_DIGITS);
    let p = wp.bits();
    let s = s.with_bits(p);
    let q: u64 = alpha.denom().try_into().map_err(|_| Error::InvalidArgument("denominator too large".into()))?;
    let num: u64 = alpha.numer().try_into().expect("alpha is positive");
    let pi = Real::pi(p);
    let one_minus_s = &Real::one(p) - &s;
    let half_pi_s = (&pi * &s).div_i64(2);
    let mut acc = Real::zero(p);
    for r in 1..=q {
        let angle = &half_pi_s + &pi.mul_i64(2 * (num * r % q) as i64).div_i64(q as i64);
        let class = hurwitz_numeric(
            &Complex::from_real(one_minus_s.clone()),
            &Real::from_u64(r, p).div_i64(q as i64),
            wp,
        )?
        .re;
        acc = &acc + &(&angle.sin() * &class);
    }
    // sum over classes carries q^{s-1}
    let q_pow = Real::from_u64(q, p).powf(&(&s - &Real::one(p)));
    let two_pow = Real::from_i64(2, p).powf(&s);
    let pi_pow = pi.powf(&(&s - &Real::one(p)));
    let g = gamma(&Complex::from_real(one_minus_s), wp)?.re;
    Ok((&(&(&two_pow * &pi_pow) * &g) * &(&q_pow * &acc)).with_precision(prec))
}

/// The literal variant with sin(pi n/2 + 2 pi n a); kept for the errata report.
pub fn hurwitz_formula_literal(s: &Real, alpha: &Rational, prec: Precision) -> Result<Real> {
    if !s.is_negative() {
        return Err(Error::DomainError("the trigonometric series needs s < 0".into()));
    }
    let wp = prec.with_guard(GUARD_DIGITS);
    let p = wp.bits();
    let s = s.with_bits(p);
    let q: u64 = alpha.denom().try_into().map_err(|_| Error::InvalidArgument("denominator too large".into()))?;
    let num: u64 = alpha.numer().try_into().map_err(|_| Error::DomainError("alpha must be positive".into()))?;
    // n mod 4q fixes the angle.
    let period = 4 * q;
    let pi = Real::pi(p);
    let one_minus_s = &Real::one(p) - &s;
    let mut acc = Real::zero(p);
    for r in 1..=period {
        let turns = (r % 4) * q + 4 * (num * r % q);
        let angle = pi.mul_i64(turns as i64).div_i64(2 * q as i64);
        let class = hurwitz_numeric(
            &Complex::from_real(one_minus_s.clone()),
            &Real::from_u64(r, p).div_i64(period as i64),
            wp,
        )?
        .re;
        acc = &acc + &(&angle.sin() * &class);
    }
    let q_pow = Real::from_u64(period, p).powf(&(&s - &Real::one(p)));
    let two_pow = Real::from_i64(2, p).powf(&s);
    let pi_pow = pi.powf(&(&s - &Real::one(p)));
    let g = gamma(&Complex::from_real(one_minus_s), wp)?.re;
    Ok((&(&(&two_pow * &pi_pow) * &g) * &(&q_pow * &acc)).with_precision(prec))
}

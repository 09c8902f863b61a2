//! Hurwitz and Riemann zeta by Euler-Maclaurin summation.
//!
//! zeta(s, a) = sum_{n<N} (n+a)^{-s} + (N+a)^{1-s}/(s-1) + (N+a)^{-s}/2
//!            + sum_{k=1}^{K} B_{2k}/(2k)! (s)_{2k-1} (N+a)^{-s-2k+1} + R.
//! N and K come from a log-magnitude estimate of the correction terms so that
//! |R| stays below the requested absolute accuracy.

use std::f64::consts::{LN_10, PI};

use super::bernoulli::b2k_over_factorial;
use super::bigfloat::{Complex, Precision, Real, GUARD_DIGITS};
use crate::error::{Error, Result};

/// Cutoff N and correction order K for absolute accuracy 10^{-digits}.
pub fn em_plan(s_re: f64, s_im: f64, alpha: f64, digits: f64) -> (usize, usize) {
    let goal = -digits * LN_10;
    let two_pi_ln = (2.0 * PI).ln();
    let poch = |k: usize| ((s_re + k as f64).powi(2) + s_im * s_im).sqrt().ln();
    for n in 1..200_000usize {
        let lx = (n as f64 + alpha).ln();
        // ln |(s)_{2k-1}|, accumulated.
        let mut lp = poch(0);
        let mut prev = f64::INFINITY;
        for k in 1..400usize {
            if k > 1 {
                lp += poch(2 * k - 3) + poch(2 * k - 2);
            }
            let lt = 2f64.ln() - 2.0 * k as f64 * two_pi_ln + lp - (s_re + 2.0 * k as f64 - 1.0) * lx;
            if lt < goal || lp == f64::NEG_INFINITY {
                return (n, k);
            }
            if lt > prev {
                break;
            }
            prev = lt;
        }
    }
    unreachable!("Euler-Maclaurin plan did not converge")
}

fn is_one(s: &Complex) -> bool {
    s.im.is_zero() && s.re == Real::one(s.re.precision())
}

/// zeta(s, alpha) for real alpha > 0 and s != 1.
pub fn hurwitz_numeric(s: &Complex, alpha: &Real, prec: Precision) -> Result<Complex> {
    if is_one(s) {
        return Err(Error::PoleAtOne);
    }
    if !(alpha > &Real::zero(alpha.precision())) {
        return Err(Error::DomainError(format!(
            "Hurwitz zeta needs alpha > 0, got {}",
            alpha.to_string_digits(12)
        )));
    }
    let (sr, si, af) = (s.re.to_f64(), s.im.to_f64(), alpha.to_f64());
    let digits = (prec.get() + GUARD_DIGITS) as f64;
    let (n, k) = em_plan(sr, si, af, digits);
    // The head sum can exceed the result by (N+a)^{1-sigma}; carry those digits.
    let loss = ((1.0 - sr).max(0.0) * (n as f64 + af).log10()).ceil() as u32 + 5;
    let wp = prec.with_guard(loss);
    let p = wp.bits();
    let s = s.with_bits(p);
    let alpha = alpha.with_bits(p);
    let neg_s = -&s;
    let mut acc = Complex::zero(p);
    for j in 0..n {
        let base = &alpha + &Real::from_u64(j as u64, p);
        acc = &acc + &neg_s.base_pow(&base);
    }
    let x = &alpha + &Real::from_u64(n as u64, p);
    let x_pow = neg_s.base_pow(&x);
    let one = Complex::one(p);
    let s_minus_1 = &s - &one;
    acc = &acc + &(&x_pow.scale(&x) / &s_minus_1);
    acc = &acc + &x_pow.scale(&Real::from_f64(0.5, p));
    // f = (s)_{2k-1} / x^{2k-1}
    let inv_x = &Real::one(p) / &x;
    let inv_x2 = &inv_x * &inv_x;
    let mut f = s.scale(&inv_x);
    for kk in 1..=k {
        if f.is_zero() {
            break;
        }
        let c = Real::from_rational(&b2k_over_factorial(kk), p);
        acc = &acc + &(&f * &x_pow).scale(&c);
        let a = &s + &Complex::from_real(Real::from_u64(2 * kk as u64 - 1, p));
        let b = &a + &one;
        f = (&(&f * &a) * &b).scale(&inv_x2);
    }
    Ok(acc.with_precision(prec))
}

pub fn zeta_numeric(s: &Complex, prec: Precision) -> Result<Complex> {
    hurwitz_numeric(s, &Real::one(prec.bits()), prec)
}

/// Real-argument convenience wrapper.
pub fn zeta_real(s: &Real, prec: Precision) -> Result<Real> {
    Ok(zeta_numeric(&Complex::from_real(s.clone()), prec)?.re)
}

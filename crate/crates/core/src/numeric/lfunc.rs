//! Numeric Dirichlet L-functions.

use super::bigfloat::{Complex, Precision, Real, GUARD_DIGITS};
use super::series::{chi_numeric, is_one, l_series_numeric};
use super::zeta::hurwitz_numeric;
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};

/// Shift used when the shifted series stands in for the Hurwitz sum at s = 1.
pub const SERIES_SHIFT: u64 = 4;

/// L(s, chi) = q^{-s} sum_a chi(a) zeta(s, a/q); at s = 1 the shifted series is used.
pub fn l_numeric(s: &Complex, chi: &DirichletCharacter, prec: Precision) -> Result<Complex> {
    if is_one(s) {
        if chi.is_principal() {
            return Err(Error::PoleAtOne);
        }
        return l_series_numeric(s, chi, SERIES_SHIFT, prec);
    }
    let q = chi.modulus();
    let wp = prec.with_guard(GUARD_DIGITS / 2);
    let p = wp.bits();
    let s = s.with_bits(p);
    let mut acc = Complex::zero(p);
    for a in 1..=q {
        let c = chi_numeric(chi, a as i64, p);
        if c.is_zero() {
            continue;
        }
        let alpha = Real::from_u64(a, p).div_i64(q as i64);
        acc = &acc + &(&c * &hurwitz_numeric(&s, &alpha, wp)?);
    }
    let scale = (-&s).base_pow(&Real::from_u64(q, p));
    Ok((&scale * &acc).with_precision(prec))
}

/// L(1, chi) = -(1/tau(conj chi)) sum_a conj(chi)(a) log sin(pi a / q) for even primitive chi.
/// Real characters give a real value, checked before the imaginary part is dropped.
pub fn l1_even_numeric(chi: &DirichletCharacter, prec: Precision) -> Result<Complex> {
    if !chi.is_even() {
        return Err(Error::NotEven);
    }
    if chi.is_principal() || !chi.is_primitive() {
        return Err(Error::NotPrimitive {
            modulus: chi.modulus(),
            conductor: chi.conductor(),
        });
    }
    let q = chi.modulus();
    let wp = prec.with_guard(GUARD_DIGITS);
    let p = wp.bits();
    let bar = chi.conj();
    let pi = Real::pi(p);
    let mut acc = Complex::zero(p);
    for a in 1..q {
        let c = chi_numeric(&bar, a as i64, p);
        if c.is_zero() {
            continue;
        }
        let log_sin = pi.mul_i64(a as i64).div_i64(q as i64).sin().ln();
        acc = &acc + &c.scale(&log_sin);
    }
    let tau = bar.gauss_sum().embed(wp);
    let v = -(&acc / &tau);
    if chi.order() > 2 {
        return Ok(v.with_precision(prec));
    }
    if v.im.abs() > prec.tolerance(8) {
        return Err(Error::RouteMismatch(format!(
            "L(1, {}) log-sin form has imaginary part {}",
            chi.label(),
            v.im.to_string_digits(6)
        )));
    }
    Ok(Complex::from_real(v.re.with_precision(prec)))
}

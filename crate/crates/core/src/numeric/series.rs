//! Shifted power series in alpha for zeta(s, alpha) and L(s, chi).
//!
//! zeta(s, alpha) = sum_{j<k} (j+alpha)^{-s}
//!                + sum_{n>=0} (-1)^n (s)_n / n! alpha^n zeta(s+n, k),   |alpha| < k,
//! where zeta(s, k) = sum_{j>=k} j^{-s}. At s = -m the n = m+1 term is the limit
//! -alpha^{m+1}/(m+1) and all later terms vanish.

use super::bigfloat::{Complex, Precision, Real, GUARD_DIGITS};
use super::zeta::hurwitz_numeric;
use crate::dirichlet::DirichletCharacter;
use crate::error::{Error, Result};

/// `Some(m)` when s = -m for an integer m >= 0.
pub(crate) fn nonpositive_integer(s: &Complex) -> Option<u64> {
    if !s.im.is_zero() || (!s.re.is_negative() && !s.re.is_zero()) {
        return None;
    }
    (s.re.floor() == s.re).then(|| (-&s.re).floor_bigint().try_into().ok()).flatten()
}

pub(crate) fn is_one(s: &Complex) -> bool {
    s.im.is_zero() && s.re == Real::one(s.re.precision())
}

/// sum_{n>=n0} coeff_n * zeta(s+n, k) where coeff_{n+1} = coeff_n * step(n).
/// The Pochhammer factor is handled here, including the pole-cancelling limit.
fn pochhammer_series(
    s: &Complex,
    k: u64,
    weight: impl Fn(usize) -> Complex,
    ratio_hint: f64,
    wp: Precision,
) -> Result<Complex> {
    let p = wp.bits();
    let kr = Real::from_u64(k, p);
    let one = Complex::one(p);
    let eps = Real::pow10(-((wp.get() + 2) as i64), p);
    let terminal = nonpositive_integer(s);
    let mut acc = Complex::zero(p);
    // poch_n = (-1)^n (s)_n / n!
    let mut poch = one.clone();
    let s_abs = s.abs().to_f64();
    let mut small_run = 0;
    let mut n = 0usize;
    loop {
        if let Some(m) = terminal {
            if n as u64 == m + 1 {
                // (-1)^n (s)_n zeta(s+n,k) / n!  ->  (-1)^{m+1} (-1)^m m! / (m+1)!
                let lim = Complex::from_real(Real::from_i64(-1, p).div_i64(m as i64 + 1));
                acc = &acc + &(&lim * &weight(n));
                break;
            }
        }
        let w = weight(n);
        if !w.is_zero() && !poch.is_zero() {
            let arg = s + &Complex::from_real(Real::from_u64(n as u64, p));
            let z = hurwitz_numeric(&arg, &kr, wp)?;
            let term = &(&poch * &w) * &z;
            let mag = term.abs();
            acc = &acc + &term;
            if (n as f64) > s_abs + 2.0 && mag < eps {
                small_run += 1;
            } else {
                small_run = 0;
            }
        } else if (n as f64) > s_abs + 2.0 {
            small_run += 1;
        }
        if small_run >= 3 {
            break;
        }
        // (-1)^{n+1} (s)_{n+1} / (n+1)! = poch * (-(s+n)) / (n+1)
        let factor = &(-&(s + &Complex::from_real(Real::from_u64(n as u64, p))))
            / &Complex::from_real(Real::from_u64(n as u64 + 1, p));
        poch = &poch * &factor;
        n += 1;
        if n > 20 + (40.0 * wp.get() as f64 / (-ratio_hint.ln()).max(1e-3)) as usize {
            return Err(Error::DomainError("shifted series failed to converge".into()));
        }
    }
    Ok(acc)
}

/// zeta(s, alpha) by the k-shifted power series; requires |alpha| < k.
pub fn prop1_series(s: &Complex, alpha: &Complex, k: u64, prec: Precision) -> Result<Complex> {
    if k == 0 {
        return Err(Error::InvalidArgument("shift k must be positive".into()));
    }
    if is_one(s) {
        return Err(Error::PoleAtOne);
    }
    let ratio = alpha.abs().to_f64() / k as f64;
    if !(ratio < 1.0) {
        return Err(Error::RadiusViolation {
            alpha: alpha.to_string_digits(12),
            k,
        });
    }
    let wp = prec.with_guard(GUARD_DIGITS);
    let p = wp.bits();
    let s = s.with_bits(p);
    let alpha = alpha.with_bits(p);
    let neg_s = -&s;
    let mut head = Complex::zero(p);
    for j in 0..k {
        let base = &alpha + &Complex::from_real(Real::from_u64(j, p));
        if base.is_zero() {
            return Err(Error::DomainError("alpha + j vanishes".into()));
        }
        head = &head + &base.pow(&neg_s);
    }
    let tail = pochhammer_series(&s, k, |n| alpha.powi(n as u64), ratio, wp)?;
    Ok((&head + &tail).with_precision(prec))
}

pub(crate) fn chi_numeric(chi: &DirichletCharacter, a: i64, p: usize) -> Complex {
    match chi.exponent(a) {
        Some(e) => Complex::unit_root(e, chi.order(), p),
        None => Complex::zero(p),
    }
}

/// L(s, chi) for nonprincipal chi by the shifted series
/// sum_{N <= qk} chi(N) N^{-s} + q^{-s} sum_{n>=1} (-1)^n (s)_n/n! zeta(s+n, k) sum_a chi(a) (a/q)^n.
pub fn l_series_numeric(s: &Complex, chi: &DirichletCharacter, k: u64, prec: Precision) -> Result<Complex> {
    if chi.is_principal() {
        return Err(Error::UnsupportedCharacter(format!("{} is principal", chi.label())));
    }
    if k == 0 {
        return Err(Error::InvalidArgument("shift k must be positive".into()));
    }
    let q = chi.modulus();
    let wp = prec.with_guard(GUARD_DIGITS);
    let p = wp.bits();
    let s = s.with_bits(p);
    let neg_s = -&s;
    let mut head = Complex::zero(p);
    for n in 1..=q * k {
        let c = chi_numeric(chi, n as i64, p);
        if !c.is_zero() {
            head = &head + &(&c * &neg_s.base_pow(&Real::from_u64(n, p)));
        }
    }
    let units: Vec<(Complex, Real)> = (1..q)
        .filter_map(|a| {
            let c = chi_numeric(chi, a as i64, p);
            (!c.is_zero()).then(|| (c, Real::from_u64(a, p).div_i64(q as i64)))
        })
        .collect();
    let weight = |n: usize| {
        if n == 0 {
            // sum_a chi(a) = 0
            return Complex::zero(p);
        }
        units
            .iter()
            .fold(Complex::zero(p), |acc, (c, x)| &acc + &c.scale(&x.powi(n as u64)))
    };
    let ratio = (q - 1) as f64 / (q * k) as f64;
    let tail = pochhammer_series(&s, k, weight, ratio, wp)?;
    let scale = neg_s.base_pow(&Real::from_u64(q, p));
    Ok((&head + &(&scale * &tail)).with_precision(prec))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::character;
    use crate::numeric::zeta::zeta_numeric;

    fn prec() -> Precision {
        Precision::digits(50)
    }

    fn c(x: f64) -> Complex {
        Complex::from_f64(x, 0.0, prec().bits())
    }

    #[test]
    fn matches_direct_continuation() {
        let tol = prec().tolerance(10);
        let p = prec().bits();
        let via = prop1_series(&c(2.5), &c(0.3), 1, prec()).unwrap();
        let direct = hurwitz_numeric(&c(2.5), &Real::from_f64(0.3, p), prec()).unwrap();
        assert!((&via - &direct).abs() < tol);
        let at_one = prop1_series(&c(2.5), &c(1.0), 2, prec()).unwrap();
        assert!((&at_one - &zeta_numeric(&c(2.5), prec()).unwrap()).abs() < tol);
        let exact = prop1_series(&c(-2.0), &c(0.25), 1, prec()).unwrap();
        assert!((&exact - &c(-1.0 / 64.0)).abs() < tol);
        assert!(matches!(
            prop1_series(&c(2.0), &c(1.0), 1, prec()),
            Err(Error::RadiusViolation { k: 1, .. })
        ));
    }

    #[test]
    fn l_series_values() {
        let chi4 = character(4, 1).unwrap();
        let catalan = l_series_numeric(&c(2.0), &chi4, 2, prec()).unwrap();
        assert!(catalan.re.to_string_digits(16).starts_with("0.9159655941772190"));
        let l1 = l_series_numeric(&c(1.0), &chi4, 2, prec()).unwrap();
        let quarter_pi = Real::pi(prec().bits()).div_i64(4);
        assert!((&l1.re - &quarter_pi).abs() < prec().tolerance(10));
        assert!(l_series_numeric(&c(2.0), &character(4, 0).unwrap(), 1, prec()).is_err());
    }
}

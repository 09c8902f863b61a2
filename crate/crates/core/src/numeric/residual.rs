//! Residual checks for identities whose values are transcendental.

use std::fmt;

use super::bigfloat::{Complex, Precision, Real, GUARD_DIGITS};
use super::calculus::{cauchy_derivative, circle_mean};
use super::gamma::gamma;
use super::lfunc::{l1_even_numeric, l_numeric};
use super::series::{is_one, l_series_numeric};
use super::zeta::{hurwitz_numeric, zeta_numeric};
use crate::dirichlet::{l1_odd_exact, DirichletCharacter};
use crate::error::{Error, Result};
use crate::exact::{rat, Rational};
use crate::hurwitz::hurwitz_value;

/// |lhs - rhs| against an accepted threshold.
#[derive(Clone, Debug)]
pub struct Residual {
    pub value: Real,
    pub bound: Real,
    pub pass: bool,
}

impl Residual {
    pub fn new(value: Real, bound: Real) -> Self {
        let pass = value <= bound;
        Residual { value, bound, pass }
    }

    pub fn between(lhs: &Complex, rhs: &Complex, bound: Real) -> Self {
        Residual::new((lhs - rhs).abs(), bound)
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (residual {} <= {})",
            if self.pass { "pass" } else { "FAIL" },
            self.value.to_string_digits(3),
            self.bound.to_string_digits(2)
        )
    }
}

/// Radius and reach of the circle used at removable singularities.
const MEAN_RADIUS: f64 = 0.125;
const MEAN_REACH: f64 = 1.0;
/// Contour radius for derivatives.
const DERIV_RADIUS: f64 = 0.25;
const DERIV_REACH: f64 = 2.0;

fn nonnegative_integer(s: &Complex) -> bool {
    s.im.is_zero() && !s.re.is_negative() && s.re.floor() == s.re
}

fn real(x: f64, p: usize) -> Complex {
    Complex::from_f64(x, 0.0, p)
}

fn half_pi_s(s: &Complex) -> Complex {
    s.scale(&Real::pi(s.precision()).div_i64(2))
}

/// 2^s pi^{s-1} Gamma(1-s).
fn reflection_factor(s: &Complex, prec: Precision) -> Result<Complex> {
    let p = s.precision();
    let one = Complex::one(p);
    let two = s.base_pow(&Real::from_i64(2, p));
    let pi = (s - &one).base_pow(&Real::pi(p));
    let g = gamma(&(&one - s), prec)?;
    Ok(&(&two * &pi) * &g)
}

/// |zeta(s) - 2^s pi^{s-1} Gamma(1-s) sin(pi s/2) zeta(1-s)|, bound 10^{-(P-12)}.
pub fn functional_eq_residual(s: &Complex, prec: Precision) -> Result<Residual> {
    if is_one(s) {
        return Err(Error::PoleAtOne);
    }
    let wp = prec.with_guard(GUARD_DIGITS);
    let p = wp.bits();
    let s = s.with_bits(p);
    let rhs = |z: &Complex| -> Result<Complex> {
        let one = Complex::one(p);
        let f = reflection_factor(z, wp)?;
        Ok(&(&f * &half_pi_s(z).sin()) * &zeta_numeric(&(&one - z), wp)?)
    };
    let right = if nonnegative_integer(&s) {
        circle_mean(rhs, &s, MEAN_RADIUS, MEAN_REACH, wp)?
    } else {
        rhs(&s)?
    };
    let left = zeta_numeric(&s, wp)?;
    Ok(Residual::between(&left, &right, prec.tolerance(12)))
}

fn require_primitive_nonprincipal(chi: &DirichletCharacter) -> Result<()> {
    if chi.is_principal() || !chi.is_primitive() {
        return Err(Error::NotPrimitive {
            modulus: chi.modulus(),
            conductor: chi.conductor(),
        });
    }
    Ok(())
}

/// Functional equation of L(s, chi): sin(pi s/2) for even chi, -i cos(pi s/2) for odd.
pub fn l_functional_residual(s: &Complex, chi: &DirichletCharacter, prec: Precision) -> Result<Residual> {
    require_primitive_nonprincipal(chi)?;
    let wp = prec.with_guard(GUARD_DIGITS);
    let p = wp.bits();
    let s = s.with_bits(p);
    let q = Real::from_u64(chi.modulus(), p);
    let tau = chi.gauss_sum().embed(wp);
    let bar = chi.conj();
    let rhs = |z: &Complex| -> Result<Complex> {
        let one = Complex::one(p);
        let f = &reflection_factor(z, wp)? * &(-z).base_pow(&q);
        let trig = if chi.is_even() {
            half_pi_s(z).sin()
        } else {
            -half_pi_s(z).cos().mul_i()
        };
        let l = l_numeric(&(&one - z), &bar, wp)?;
        Ok(&(&(&f * &tau) * &trig) * &l)
    };
    let right = if nonnegative_integer(&s) {
        circle_mean(rhs, &s, MEAN_RADIUS, MEAN_REACH, wp)?
    } else {
        rhs(&s)?
    };
    let left = l_numeric(&s, chi, wp)?;
    Ok(Residual::between(&left, &right, prec.tolerance(12)))
}

/// Which derivative chain to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChainKind {
    /// zeta(2m+1) against zeta'(-2m), m >= 1.
    Zeta,
    /// L(2m+1, chi) against L'(-2m, conj chi), chi even, m >= 0.
    LEven,
    /// L(2m, chi) against L'(1-2m, conj chi), chi odd, m >= 1.
    LOdd,
}

fn sign(m: u64) -> i64 {
    if m % 2 == 0 {
        1
    } else {
        -1
    }
}

fn factorial_real(n: u64, p: usize) -> Real {
    Real::from_bigint(&crate::exact::factorial(n), p)
}

/// Derivative chain residual; bound 10^{-P/2}.
pub fn lemma3_residual(
    kind: ChainKind,
    m: u64,
    chi: Option<&DirichletCharacter>,
    prec: Precision,
) -> Result<Residual> {
    let wp = prec.with_guard(GUARD_DIGITS);
    let p = wp.bits();
    let pi = Real::pi(p);
    let two = Real::from_i64(2, p);
    let bound = Real::pow10(-(prec.get() as i64 / 2), p);
    let (left, right) = match kind {
        ChainKind::Zeta => {
            if m == 0 {
                return Err(Error::InvalidArgument("the zeta chain needs m >= 1".into()));
            }
            let left = zeta_numeric(&real((2 * m + 1) as f64, p), wp)?;
            let center = real(-2.0 * m as f64, p);
            let d = cauchy_derivative(|z| zeta_numeric(z, wp), &center, DERIV_RADIUS, DERIV_REACH, wp)?;
            let c = (&two.powi(2 * m + 1) * &pi.powi(2 * m)).mul_i64(sign(m)) / factorial_real(2 * m, p);
            (left, d.scale(&c))
        }
        ChainKind::LEven | ChainKind::LOdd => {
            let chi = chi.ok_or_else(|| Error::InvalidArgument("a character is required".into()))?;
            require_primitive_nonprincipal(chi)?;
            let even = kind == ChainKind::LEven;
            if even && !chi.is_even() {
                return Err(Error::NotEven);
            }
            if !even && !chi.is_odd() {
                return Err(Error::NotOdd);
            }
            if !even && m == 0 {
                return Err(Error::InvalidArgument("the odd chain needs m >= 1".into()));
            }
            let bar = chi.conj();
            let tau_bar = bar.gauss_sum().embed(wp);
            let q = Real::from_u64(chi.modulus(), p);
            let (n, at) = if even { (2 * m + 1, -(2.0 * m as f64)) } else { (2 * m, 1.0 - 2.0 * m as f64) };
            let left = l_numeric(&real(n as f64, p), chi, wp)?;
            let d = cauchy_derivative(|z| l_numeric(z, &bar, wp), &real(at, p), DERIV_RADIUS, DERIV_REACH, wp)?;
            let c = if even {
                // (-1)^m 2^{2m+1} pi^{2m} q^{-2m} / (2m)!
                (&(&two.powi(2 * m + 1) * &pi.powi(2 * m)) / &(&q.powi(2 * m) * &factorial_real(2 * m, p)))
                    .mul_i64(sign(m))
            } else {
                // i (-1)^{m+1} 2^{2m} pi^{2m-1} q^{1-2m} / (2m-1)!
                (&(&two.powi(2 * m) * &pi.powi(2 * m - 1)) / &(&q.powi(2 * m - 1) * &factorial_real(2 * m - 1, p)))
                    .mul_i64(-sign(m))
            };
            let mut r = &d.scale(&c) / &tau_bar;
            if !even {
                r = r.mul_i();
            }
            (left, r)
        }
    };
    Ok(Residual::between(&left, &right, bound))
}

/// Trigonometric class-sum form of zeta(-2m, 1/q) (sine weights)
/// or zeta(1-2m, 1/q) (cosine weights).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassSumWeight {
    Sine,
    Cosine,
}

/// sum_{n = r mod q} n^{-t} = q^{-t} zeta(t, r/q).
fn class_sum(r: u64, q: u64, t: u64, prec: Precision) -> Result<Real> {
    let p = prec.bits();
    let z = hurwitz_numeric(&real(t as f64, p), &Real::from_u64(r, p).div_i64(q as i64), prec)?.re;
    Ok(&z / &Real::from_u64(q, p).powi(t))
}

/// Compares the exact hurwitz_value target with the class-sum series; bound 10^{-(P-8)}.
pub fn prop4_residual(variant: ClassSumWeight, m: u64, q: u64, prec: Precision) -> Result<Residual> {
    if m == 0 || q < 2 {
        return Err(Error::InvalidArgument("needs m >= 1 and q >= 2".into()));
    }
    let wp = prec.with_guard(GUARD_DIGITS);
    let p = wp.bits();
    let pi = Real::pi(p);
    let (t, target, factor) = match variant {
        ClassSumWeight::Sine => {
            let f = (&Real::from_i64(2, p).powi(2 * m) * &pi.powi(2 * m + 1)).mul_i64(sign(m));
            (2 * m + 1, hurwitz_value(2 * m, &rat(1, q as i64)), &factorial_real(2 * m, p) / &f)
        }
        ClassSumWeight::Cosine => {
            let f = (&Real::from_i64(2, p).powi(2 * m - 1) * &pi.powi(2 * m)).mul_i64(sign(m));
            (2 * m, hurwitz_value(2 * m - 1, &rat(1, q as i64)), &factorial_real(2 * m - 1, p) / &f)
        }
    };
    let mut acc = Real::zero(p);
    for r in 1..=q {
        let angle = pi.mul_i64(2 * r as i64).div_i64(q as i64);
        let w = match variant {
            ClassSumWeight::Sine => angle.sin(),
            ClassSumWeight::Cosine => angle.cos(),
        };
        acc = &acc + &(&w * &class_sum(r, q, t, wp)?);
    }
    let series = &factor * &acc;
    Ok(Residual::new(
        (&series - &Real::from_rational(&target, p)).abs(),
        prec.tolerance(8),
    ))
}

/// L(1, chi) closed form (log-sin for even, exact for odd) against the shifted series.
pub fn theorem6_cross_check(chi: &DirichletCharacter, prec: Precision) -> Result<Residual> {
    require_primitive_nonprincipal(chi)?;
    let wp = prec.with_guard(GUARD_DIGITS);
    let closed = if chi.is_even() {
        l1_even_numeric(chi, wp)?
    } else {
        l1_odd_exact(chi)?.embed(wp)
    };
    let series = l_series_numeric(&Complex::one(wp.bits()), chi, super::lfunc::SERIES_SHIFT, wp)?;
    Ok(Residual::between(&closed, &series, prec.tolerance(10)))
}

/// Helper for callers comparing an exact rational against a numeric value.
pub fn rational_residual(exact: &Rational, numeric: &Complex, bound: Real) -> Residual {
    let p = numeric.precision();
    Residual::between(&Complex::from_rational(exact, p), numeric, bound)
}

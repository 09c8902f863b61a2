//! Contour averages: values at removable singularities and derivatives.
//!
//! For f analytic on a disc of radius R about c, the K-node trapezoidal rule on
//! the circle of radius r has error of order (r/R)^K.

use super::bigfloat::{Complex, Precision, Real};
use crate::error::Result;

/// Nodes needed for 10^{-digits} when the nearest singularity is at `reach`.
pub fn node_count(radius: f64, reach: f64, digits: f64) -> usize {
    (digits / (reach / radius).log10()).ceil() as usize + 4
}

fn nodes(center: &Complex, radius: &Real, k: usize) -> Vec<(Complex, Complex)> {
    let p = center.precision();
    (0..k)
        .map(|j| {
            let u = Complex::unit_root(j as u64, k as u64, p);
            (center + &u.scale(radius), u)
        })
        .collect()
}

/// f(c) as the mean of f over the circle |z - c| = r.
pub fn circle_mean(
    f: impl Fn(&Complex) -> Result<Complex>,
    center: &Complex,
    radius: f64,
    reach: f64,
    prec: Precision,
) -> Result<Complex> {
    let wp = prec.with_guard(5);
    let p = wp.bits();
    let k = node_count(radius, reach, wp.get() as f64);
    let c = center.with_bits(p);
    let mut acc = Complex::zero(p);
    for (z, _) in nodes(&c, &Real::from_f64(radius, p), k) {
        acc = &acc + &f(&z)?;
    }
    Ok(acc.scale(&Real::one(p).div_i64(k as i64)).with_precision(prec))
}

/// f'(c) = (1 / (K r)) sum_j f(c + r u_j) conj(u_j).
pub fn cauchy_derivative(
    f: impl Fn(&Complex) -> Result<Complex>,
    center: &Complex,
    radius: f64,
    reach: f64,
    prec: Precision,
) -> Result<Complex> {
    let wp = prec.with_guard(5);
    let p = wp.bits();
    let k = node_count(radius, reach, wp.get() as f64 + 1.0);
    let c = center.with_bits(p);
    let r = Real::from_f64(radius, p);
    let mut acc = Complex::zero(p);
    for (z, u) in nodes(&c, &r, k) {
        acc = &acc + &(&f(&z)? * &u.conj());
    }
    let norm = &Real::one(p) / &r.mul_i64(k as i64);
    Ok(acc.scale(&norm).with_precision(prec))
}

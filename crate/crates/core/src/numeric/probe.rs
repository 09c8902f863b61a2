//! Search for a rational multiple of pi^{2m+1} in zeta(2m+1).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::bigfloat::{Complex, Precision, Real, GUARD_DIGITS};
use super::series::l_series_numeric;
use super::zeta::zeta_real;
use crate::dirichlet::character;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::hurwitz::chi4_odd_l;

/// Closest rational to `x` with denominator at most `bound`.
pub fn limit_denominator(x: &Rational, bound: &BigInt) -> Rational {
    if x.denom() <= bound {
        return x.clone();
    }
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::zero(), BigInt::one(), BigInt::one(), BigInt::zero());
    let (mut n, mut d) = (x.numer().clone(), x.denom().clone());
    loop {
        let a = n.div_floor(&d);
        let q2 = &q0 + &a * &q1;
        if &q2 > bound {
            break;
        }
        let p2 = &p0 + &a * &p1;
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        let r = &n - &a * &d;
        n = std::mem::replace(&mut d, r);
    }
    let k = (bound - &q0).div_floor(&q1);
    let b1 = Rational::new(&p0 + &k * &p1, &q0 + &k * &q1);
    let b2 = Rational::new(p1, q1);
    if (&b2 - x).abs() <= (&b1 - x).abs() {
        b2
    } else {
        b1
    }
}

/// Truncates a real to a rational with `digits` decimals.
fn to_rational(x: &Real, digits: usize) -> Rational {
    let p = x.precision();
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = x * &Real::from_bigint(&scale, p);
    Rational::new(scaled.floor_bigint(), scale)
}

/// One rational search.
#[derive(Clone, Debug)]
pub struct RationalHit {
    pub value: Real,
    pub best: Rational,
    pub distance: Real,
    pub found: bool,
}

impl RationalHit {
    fn search(value: Real, bound: &BigInt, prec: Precision) -> Self {
        let best = limit_denominator(&to_rational(&value, (prec.get() + GUARD_DIGITS) as usize), bound);
        let distance = (&value - &Real::from_rational(&best, value.precision())).abs();
        let found = distance <= prec.tolerance(10);
        RationalHit { value, best, distance, found }
    }
}

#[derive(Clone, Debug)]
pub struct ProbeReport {
    pub m: u64,
    /// zeta(2m+1) / pi^{2m+1}.
    pub target: RationalHit,
    /// L(3, chi_4) / pi^3, which must hit 1/32.
    pub control: RationalHit,
    /// The control's rational equals the exact closed-form coefficient.
    pub control_matches: bool,
}

impl ProbeReport {
    /// No rational for the target, and the control hits.
    pub fn consistent(&self) -> bool {
        !self.target.found && self.control.found && self.control_matches
    }
}

/// Searches for zeta(2m+1) = r pi^{2m+1} with denominator of r at most `bound`.
pub fn conjecture_probe(m: u64, prec: Precision, bound: u64) -> Result<ProbeReport> {
    if m == 0 {
        return Err(Error::InvalidArgument("zeta(1) is a pole; use m >= 1".into()));
    }
    if bound == 0 {
        return Err(Error::InvalidArgument("denominator bound must be positive".into()));
    }
    let wp = prec.with_guard(GUARD_DIGITS);
    let p = wp.bits();
    let pi = Real::pi(p);
    let bound = BigInt::from(bound);

    let z = zeta_real(&Real::from_u64(2 * m + 1, p), wp)?;
    let target = RationalHit::search(&z / &pi.powi(2 * m + 1), &bound, prec);

    let chi4 = character(4, 1).expect("mod 4 has two characters");
    let l3 = l_series_numeric(&Complex::from_real(Real::from_i64(3, p)), &chi4, 4, wp)?;
    let control = RationalHit::search(&l3.re / &pi.powi(3), &bound, prec);
    let control_matches = chi4_odd_l(1).coeff.as_rational().as_ref() == Some(&control.best);

    Ok(ProbeReport { m, target, control, control_matches })
}

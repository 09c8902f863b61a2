//! Lerch zeta values phi(lambda, alpha, -m) for rational lambda.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::rat_pow;
use crate::exact::{binomial, rat, rat_int, CycPolynomial, Cyclotomic, Polynomial, Rational};
use crate::hurwitz::hurwitz_value;

fn split(lambda: &Rational) -> Result<(i64, u64)> {
    let q: u64 = lambda
        .denom()
        .try_into()
        .map_err(|_| Error::InvalidArgument(format!("denominator of {lambda} too large")))?;
    if q < 2 {
        return Err(Error::NotLerch(lambda.to_string()));
    }
    let p: i64 = (lambda.numer() % lambda.denom())
        .try_into()
        .expect("reduced numerator fits");
    Ok((p.rem_euclid(q as i64), q))
}

/// phi(p/q, -k) = q^k sum_{a=1}^q zeta_q^{pa} zeta(-k, a/q), the value at -k of
/// sum_{n>=1} e^{2 pi i lambda n} n^{-s}.
pub fn lerch_neg(lambda: &Rational, k: u64) -> Result<Cyclotomic> {
    let (p, q) = split(lambda)?;
    let mut raw = vec![Rational::zero(); q as usize];
    for a in 1..=q {
        let e = (p as u64 * a % q) as usize;
        raw[e] += hurwitz_value(k, &rat(a as i64, q as i64));
    }
    Ok(Cyclotomic::new(q, raw).scale(&rat_pow(&rat_int(q), k)))
}

/// phi(lambda, alpha, -m) = alpha^m + sum_{k=0}^m C(m,k) phi(lambda,-k) alpha^{m-k}; degree m.
pub fn lerch_poly(lambda: &Rational, m: u64) -> Result<CycPolynomial> {
    let mut coeffs = vec![Cyclotomic::zero(); m as usize + 1];
    coeffs[m as usize] = Cyclotomic::one();
    for k in 0..=m {
        let c = lerch_neg(lambda, k)?.scale(&rat_int(binomial(m, k)));
        let slot = &mut coeffs[(m - k) as usize];
        *slot = &*slot + &c;
    }
    Ok(Polynomial::new(coeffs))
}

/// (w - 1) phi(lambda,alpha,-m) - w alpha^m - sum_{k<m} C(m,k) phi(lambda,alpha,-k)
/// with w = e^{-2 pi i lambda}; identically zero.
pub fn theorem4_recurrence_residual(lambda: &Rational, m: u64) -> Result<CycPolynomial> {
    let (p, q) = split(lambda)?;
    let w = Cyclotomic::root_of_unity(q, -p);
    let head = lerch_poly(lambda, m)?.scale(&(&w - &Cyclotomic::one()));
    let mut acc = &head - &Polynomial::monomial(w, m as usize);
    for k in 0..m {
        let term = lerch_poly(lambda, k)?.scale_rational(&rat_int(binomial(m, k)));
        acc = &acc - &term;
    }
    Ok(acc)
}

/// Integer lambda reduces to Hurwitz zeta; exposed for callers that want the
/// distinction explicit.
pub fn is_lerch(lambda: &Rational) -> bool {
    !lambda.denom().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cr(n: i64, d: i64) -> Cyclotomic {
        Cyclotomic::from_rational(rat(n, d))
    }

    #[test]
    fn values() {
        assert_eq!(lerch_neg(&rat(1, 2), 0).unwrap(), cr(-1, 2));
        assert_eq!(lerch_neg(&rat(1, 2), 1).unwrap(), cr(-1, 4));
        let z = Cyclotomic::root_of_unity(3, 1);
        let expect = &(&z.scale(&rat(1, 6)) - &Cyclotomic::root_of_unity(3, 2).scale(&rat(1, 6))) - &cr(1, 2);
        assert_eq!(lerch_neg(&rat(1, 3), 0).unwrap(), expect);
        assert!(matches!(lerch_neg(&rat(2, 1), 0), Err(Error::NotLerch(_))));
    }

    #[test]
    fn polynomials() {
        assert_eq!(lerch_poly(&rat(1, 2), 0).unwrap(), Polynomial::constant(cr(1, 2)));
        assert_eq!(
            lerch_poly(&rat(1, 2), 1).unwrap(),
            Polynomial::new(vec![cr(-1, 4), cr(1, 2)])
        );
        for m in [1, 3] {
            assert!(theorem4_recurrence_residual(&rat(1, 2), m).unwrap().is_zero());
        }
        assert!(theorem4_recurrence_residual(&rat(1, 3), 2).unwrap().is_zero());
        assert!(theorem4_recurrence_residual(&rat(-5, 3), 2).unwrap().is_zero());
    }
}

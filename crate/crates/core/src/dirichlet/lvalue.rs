//! Exact L-values: L(-m, chi), the parity-matched closed forms and L(1, chi) for odd chi.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::character::{DirichletCharacter, Parity};
use crate::error::{Error, Result};
use crate::exact::rational::{pow2, rat_pow};
use crate::exact::{binomial, factorial, rat, rat_int, Cyclotomic, Rational};
use crate::hurwitz::{hurwitz_value, zeta_neg};
use crate::special_value::SpecialValue;

/// S(-m, chi) = sum_{a=1}^q chi(a) a^m, in Q(zeta_order).
pub fn power_sum(m: u64, chi: &DirichletCharacter) -> Cyclotomic {
    let n = chi.order();
    let mut raw = vec![Rational::zero(); n as usize];
    for a in 1..=chi.modulus() {
        if let Some(e) = chi.exponent(a as i64) {
            raw[e as usize] += Rational::from_integer(BigInt::from(a).pow(m as u32));
        }
    }
    Cyclotomic::new(n, raw)
}

/// L(-m, chi) through the power-sum combination
/// sum_{k>=1} C(m,k) zeta(-k) q^k S(k-m) + (zeta(0)+1) S(-m) - S(-m-1)/(q(m+1)).
pub fn l_neg_power_sums(m: u64, chi: &DirichletCharacter) -> Cyclotomic {
    let q = rat_int(chi.modulus());
    let mut acc = power_sum(m, chi).scale(&(zeta_neg(0) + Rational::one()));
    for k in 1..=m {
        let c = rat_int(binomial(m, k)) * zeta_neg(k) * rat_pow(&q, k);
        if !c.is_zero() {
            acc = &acc + &power_sum(m - k, chi).scale(&c);
        }
    }
    let tail = power_sum(m + 1, chi).scale(&(Rational::one() / (q * rat_int(m + 1))));
    &acc - &tail
}

/// L(-m, chi) = q^m sum_a chi(a) zeta(-m, a/q).
pub fn l_neg_hurwitz(m: u64, chi: &DirichletCharacter) -> Cyclotomic {
    let q = chi.modulus();
    let n = chi.order();
    let mut raw = vec![Rational::zero(); n as usize];
    for a in 1..=q {
        if let Some(e) = chi.exponent(a as i64) {
            raw[e as usize] += hurwitz_value(m, &rat(a as i64, q as i64));
        }
    }
    Cyclotomic::new(n, raw).scale(&rat_pow(&rat_int(q), m))
}

/// Exact L(-m, chi); both routes are computed and must agree.
pub fn l_neg(m: u64, chi: &DirichletCharacter) -> Result<Cyclotomic> {
    let a = l_neg_power_sums(m, chi);
    let b = l_neg_hurwitz(m, chi);
    if a != b {
        return Err(Error::RouteMismatch(format!(
            "L({}, {}) power sums give {a}, Hurwitz sum gives {b}",
            -(m as i64),
            chi.label()
        )));
    }
    Ok(a)
}

/// sum_{k<m} q^{m-k} C(m,k) L(-k, chi) + S(-m, chi); zero for nonprincipal chi.
pub fn theorem2_corollary_residual(m: u64, chi: &DirichletCharacter) -> Result<Cyclotomic> {
    if chi.is_principal() {
        return Err(Error::UnsupportedCharacter(format!(
            "{} is principal",
            chi.label()
        )));
    }
    let q = rat_int(chi.modulus());
    let mut acc = power_sum(m, chi);
    for k in 0..m {
        let c = rat_pow(&q, m - k) * rat_int(binomial(m, k));
        acc = &acc + &l_neg(k, chi)?.scale(&c);
    }
    Ok(acc)
}

fn require_primitive(chi: &DirichletCharacter) -> Result<()> {
    if chi.is_primitive() {
        Ok(())
    } else {
        Err(Error::NotPrimitive {
            modulus: chi.modulus(),
            conductor: chi.conductor(),
        })
    }
}

/// Exact L(n, chi) = c pi^n for n of the same parity as chi.
///
/// The Gauss sum entering the functional equation is that of the conjugate
/// character; for real characters the two coincide. The result is checked
/// against the conjugate character: L(n, conj chi) = conj L(n, chi) exactly.
pub fn l_value_closed(n: u64, chi: &DirichletCharacter) -> Result<SpecialValue> {
    if n == 0 {
        return Err(Error::InvalidArgument("closed forms need n >= 1".into()));
    }
    require_primitive(chi)?;
    if Parity::of_integer(n) != chi.parity() {
        return Err(Error::ParityObstruction {
            n,
            parity: chi.parity().name(),
        });
    }
    let coeff = closed_coeff(n, chi)?;
    let mirror = closed_coeff(n, &chi.conj())?;
    check_conjugate(&coeff, &mirror, &format!("L({n}, {})", chi.label()))?;
    Ok(SpecialValue::new(coeff, n as u32))
}

fn closed_coeff(n: u64, chi: &DirichletCharacter) -> Result<Cyclotomic> {
    let q = chi.modulus();
    let bar = chi.conj();
    let tau_inv = bar.gauss_sum_inverse()?;
    let m = n / 2;
    let sign = rat(if m % 2 == 0 { 1 } else { -1 }, 1);
    let qr = rat_int(q);
    Ok(if n % 2 == 0 {
        let c = sign * pow2(2 * m as i64 - 1) * qr.clone()
            / (rat_pow(&qr, 2 * m) * rat_int(factorial(2 * m - 1)));
        &l_neg(2 * m - 1, &bar)? * &tau_inv.scale(&c)
    } else {
        let c = sign * pow2(2 * m as i64) / (rat_pow(&qr, 2 * m) * rat_int(factorial(2 * m)));
        &(&l_neg(2 * m, &bar)? * &tau_inv.scale(&c)) * &Cyclotomic::i()
    })
}

fn check_conjugate(value: &Cyclotomic, mirror: &Cyclotomic, what: &str) -> Result<()> {
    if mirror != &value.conj() {
        return Err(Error::RouteMismatch(format!(
            "{what}: conjugate character gives {mirror}, expected {}",
            value.conj()
        )));
    }
    Ok(())
}

fn require_odd_primitive(chi: &DirichletCharacter) -> Result<()> {
    if !chi.is_odd() {
        return Err(Error::NotOdd);
    }
    require_primitive(chi)
}

/// L(1, chi) = -i pi / (q tau(conj chi)) sum_a a conj(chi)(a), for odd primitive chi.
pub fn l1_odd_exact(chi: &DirichletCharacter) -> Result<SpecialValue> {
    require_odd_primitive(chi)?;
    let coeff = l1_odd_coeff(chi)?;
    check_conjugate(&coeff, &l1_odd_coeff(&chi.conj())?, &format!("L(1, {})", chi.label()))?;
    Ok(SpecialValue::new(coeff, 1))
}

fn l1_odd_coeff(chi: &DirichletCharacter) -> Result<Cyclotomic> {
    let bar = chi.conj();
    let c = rat(-1, chi.modulus() as i64);
    let coeff = &(&power_sum(1, &bar) * &bar.gauss_sum_inverse()?) * &Cyclotomic::i();
    Ok(coeff.scale(&c))
}

/// The literal form -pi / (q tau(chi)) sum_a a conj(chi)(a), without the factor i.
/// Kept to demonstrate that it is off by a factor of -i; never checked.
pub fn l1_odd_literal(chi: &DirichletCharacter) -> Result<SpecialValue> {
    require_odd_primitive(chi)?;
    let c = rat(-1, chi.modulus() as i64);
    let coeff = &power_sum(1, &chi.conj()) * &chi.gauss_sum_inverse()?;
    Ok(SpecialValue::new(coeff.scale(&c), 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dirichlet::character;

    fn cr(n: i64, d: i64) -> Cyclotomic {
        Cyclotomic::from_rational(rat(n, d))
    }

    #[test]
    fn power_sums() {
        let chi4 = character(4, 1).unwrap();
        assert_eq!(power_sum(1, &chi4), cr(-2, 1));
        assert_eq!(power_sum(0, &chi4), cr(0, 1));
        assert_eq!(power_sum(1, &character(3, 1).unwrap()), cr(-1, 1));
    }

    #[test]
    fn negative_values() {
        let chi4 = character(4, 1).unwrap();
        assert_eq!(l_neg(0, &chi4).unwrap(), cr(1, 2));
        assert_eq!(l_neg(1, &chi4).unwrap(), cr(0, 1));
        assert_eq!(l_neg(2, &chi4).unwrap(), cr(-1, 2));
        // Principal character mod 1 is the Riemann zeta function.
        assert_eq!(l_neg(3, &character(1, 0).unwrap()).unwrap(), cr(1, 120));
    }

    #[test]
    fn character_residuals() {
        let chi4 = character(4, 1).unwrap();
        for m in 1..=3 {
            assert!(theorem2_corollary_residual(m, &chi4).unwrap().is_zero());
        }
        assert!(theorem2_corollary_residual(3, &character(3, 1).unwrap()).unwrap().is_zero());
        assert!(theorem2_corollary_residual(1, &character(4, 0).unwrap()).is_err());
    }

    #[test]
    fn closed_forms() {
        let chi4 = character(4, 1).unwrap();
        assert_eq!(l_value_closed(3, &chi4).unwrap().to_string(), "(1/32) * pi^3");
        assert_eq!(l_value_closed(1, &chi4).unwrap().to_string(), "(1/4) * pi");
        assert_eq!(l_value_closed(5, &chi4).unwrap().to_string(), "(5/1536) * pi^5");
        assert!(matches!(l_value_closed(2, &chi4), Err(Error::ParityObstruction { n: 2, .. })));
        let quad5 = character(5, 2).unwrap();
        let v = l_value_closed(2, &quad5).unwrap();
        let tau = quad5.gauss_sum();
        assert_eq!(v.coeff, tau.scale(&rat(4, 125)));
        assert_eq!(l_value_closed(4, &character(1, 0).unwrap()).unwrap().to_string(), "(1/90) * pi^4");
    }

    #[test]
    fn complex_characters_pair_up() {
        let chi = crate::dirichlet::characters(5).iter().find(|c| c.order() == 4).cloned().unwrap();
        let a = l1_odd_exact(&chi).unwrap();
        let b = l1_odd_exact(&chi.conj()).unwrap();
        assert_eq!(b.coeff, a.coeff.conj());
        assert_ne!(a.coeff, a.coeff.conj());
        assert_eq!(l_value_closed(1, &chi).unwrap(), a);
    }

    #[test]
    fn l1_odd() {
        let chi4 = character(4, 1).unwrap();
        assert_eq!(l1_odd_exact(&chi4).unwrap().to_string(), "(1/4) * pi");
        let literal = l1_odd_literal(&chi4).unwrap();
        assert_eq!(literal.coeff, Cyclotomic::i().scale(&rat(-1, 4)));
        let chi3 = character(3, 1).unwrap();
        let v = l1_odd_exact(&chi3).unwrap();
        assert_eq!(&v.coeff * &v.coeff, cr(1, 27));
        let z = v.coeff.embed(crate::numeric::Precision::digits(20));
        assert!(z.re > crate::numeric::Real::zero(100));
        assert!(matches!(l1_odd_exact(&character(5, 2).unwrap()), Err(Error::NotOdd)));
    }
}

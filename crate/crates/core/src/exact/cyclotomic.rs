//! Exact arithmetic in the cyclotomic field Q(z), z = e^{2 pi i / q}.
//!
//! Elements are stored as their remainder modulo the q-th cyclotomic
//! polynomial, so two values are equal exactly when their coefficient
//! vectors agree (after lifting to a common modulus).

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{lcm_u64, Rational};
use crate::error::{Error, Result};
use crate::numeric::{Complex, Precision, Real};

type IntPoly = Vec<BigInt>;

fn phi_cache() -> &'static RwLock<HashMap<u64, Arc<IntPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn int_poly_mul(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact quotient of `num` by the monic polynomial `den`; panics if the
/// division leaves a remainder.
fn int_poly_div_monic(num: &[BigInt], den: &[BigInt]) -> IntPoly {
    let dd = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dd];
    for i in (dd..num.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i - dd + j] -= &c * dj;
        }
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    quot
}

/// The q-th cyclotomic polynomial, ascending integer coefficients, computed as
/// (x^q - 1) divided by the product of Phi_d over the proper divisors d of q.
pub fn cyclotomic_polynomial(q: u64) -> Arc<IntPoly> {
    assert!(q >= 1, "cyclotomic_polynomial needs q >= 1");
    if let Some(p) = phi_cache().read().unwrap().get(&q) {
        return p.clone();
    }
    let mut numerator = vec![BigInt::zero(); q as usize + 1];
    numerator[0] = BigInt::from(-1);
    numerator[q as usize] = BigInt::one();
    let mut divisor: IntPoly = vec![BigInt::one()];
    for d in 1..q {
        if q % d == 0 {
            divisor = int_poly_mul(&divisor, &cyclotomic_polynomial(d));
        }
    }
    let phi = Arc::new(int_poly_div_monic(&numerator, &divisor));
    phi_cache().write().unwrap().entry(q).or_insert(phi).clone()
}

/// Euler's totient.
pub fn totient(q: u64) -> u64 {
    let mut n = q;
    let mut result = q;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Remainder of a dense rational polynomial modulo the monic integer polynomial `m`.
fn reduce_mod(mut raw: Vec<Rational>, m: &[BigInt]) -> Vec<Rational> {
    let deg = m.len() - 1;
    for i in (deg..raw.len()).rev() {
        let c = std::mem::take(&mut raw[i]);
        if c.is_zero() {
            continue;
        }
        for (j, mj) in m.iter().enumerate().take(deg) {
            if !mj.is_zero() {
                raw[i - deg + j] -= &c * Rational::from_integer(mj.clone());
            }
        }
    }
    raw.resize(deg, Rational::zero());
    raw
}

fn rpoly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn rpoly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

fn rpoly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        for (j, bj) in b.iter().enumerate() {
            rem[shift + j] -= &c * bj;
        }
        quot[shift] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Exact element of Q(zeta_q) in canonical remainder form.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    modulus: u64,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// Folds exponents of `raw` (coefficient of z^j at index j) modulo `q` and
    /// reduces modulo Phi_q.
    pub fn new(q: u64, raw: Vec<Rational>) -> Self {
        assert!(q >= 1, "modulus must be positive");
        let mut folded = vec![Rational::zero(); q as usize];
        for (j, c) in raw.into_iter().enumerate() {
            if !c.is_zero() {
                folded[j % q as usize] += c;
            }
        }
        let phi = cyclotomic_polynomial(q);
        Cyclotomic {
            modulus: q,
            coeffs: reduce_mod(folded, &phi),
        }
    }

    /// Builds a value from already-canonical coefficients; rejects vectors of
    /// the wrong length.
    pub fn from_parts(q: u64, coeffs: Vec<Rational>) -> Result<Self> {
        if q == 0 {
            return Err(Error::InvalidArgument("modulus must be positive".into()));
        }
        let deg = totient(q) as usize;
        if coeffs.len() != deg {
            return Err(Error::InvalidArgument(format!(
                "modulus {q} needs {deg} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(Cyclotomic { modulus: q, coeffs })
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            modulus: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// z_q^e.
    pub fn root_of_unity(q: u64, e: i64) -> Self {
        let idx = e.rem_euclid(q as i64) as usize;
        let mut raw = vec![Rational::zero(); idx + 1];
        raw[idx] = Rational::one();
        Self::new(q, raw)
    }

    /// The imaginary unit, z_4.
    pub fn i() -> Self {
        Self::root_of_unity(4, 1)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|r| r.is_one())
    }

    /// The value as a rational, if it is one.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Rewrites rational values with modulus 1; other values are returned unchanged.
    pub fn normalized(self) -> Self {
        match self.as_rational() {
            Some(r) if self.modulus != 1 => Self::from_rational(r),
            _ => self,
        }
    }

    /// Re-expresses the value in Q(zeta_Q) via zeta_q -> zeta_Q^{Q/q}.
    pub fn lift(&self, target: u64) -> Result<Self> {
        if target == 0 || target % self.modulus != 0 {
            return Err(Error::IncompatibleModuli {
                from: self.modulus,
                to: target,
            });
        }
        if target == self.modulus {
            return Ok(self.clone());
        }
        let step = (target / self.modulus) as usize;
        let mut raw = vec![Rational::zero(); target as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[j * step] = c.clone();
        }
        Ok(Self::new(target, raw))
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.modulus == other.modulus {
            return (self.clone(), other.clone());
        }
        let l = lcm_u64(self.modulus, other.modulus);
        (self.lift(l).unwrap(), other.lift(l).unwrap())
    }

    /// Image under the field automorphism zeta -> zeta^k, gcd(k, q) = 1.
    pub fn galois(&self, k: u64) -> Self {
        let q = self.modulus;
        debug_assert_eq!(k.gcd(&q), 1);
        let mut raw = vec![Rational::zero(); q as usize];
        for (j, c) in self.coeffs.iter().enumerate() {
            raw[(j as u64 * k % q) as usize] += c;
        }
        Self::new(q, raw)
    }

    /// Complex conjugate: zeta -> zeta^{q-1}.
    pub fn conj(&self) -> Self {
        if self.modulus <= 2 {
            return self.clone();
        }
        self.galois(self.modulus - 1)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm against Phi_q.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let phi: Vec<Rational> = cyclotomic_polynomial(self.modulus)
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        let mut old_r = self.coeffs.clone();
        trim(&mut old_r);
        let mut r = phi.clone();
        let mut old_t = vec![Rational::one()];
        let mut t: Vec<Rational> = Vec::new();
        while !r.is_empty() {
            let (quot, rem) = rpoly_divrem(&old_r, &r);
            old_r = std::mem::replace(&mut r, rem);
            let next_t = rpoly_sub(&old_t, &rpoly_mul(&quot, &t));
            old_t = std::mem::replace(&mut t, next_t);
        }
        // old_r is a nonzero constant since Phi_q is irreducible.
        debug_assert_eq!(old_r.len(), 1);
        let scale = old_r[0].recip();
        let raw: Vec<Rational> = old_t.into_iter().map(|c| c * &scale).collect();
        let phi_int = cyclotomic_polynomial(self.modulus);
        let mut coeffs = reduce_mod(raw, &phi_int);
        coeffs.resize(totient(self.modulus) as usize, Rational::zero());
        Ok(Cyclotomic {
            modulus: self.modulus,
            coeffs,
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Numeric value sum_j c_j e^{2 pi i j / q}.
    pub fn embed(&self, prec: Precision) -> Complex {
        let p = prec.with_guard(10).bits();
        let q = self.modulus;
        let mut acc = Complex::zero(p);
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let root = Complex::unit_root(j as u64, q, p);
            acc = &acc + &root.scale(&Real::from_rational(c, p));
        }
        acc.with_precision(prec)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.unify(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.unify(rhs);
        Cyclotomic {
            modulus: a.modulus,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.unify(rhs);
        Cyclotomic {
            modulus: a.modulus,
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect(),
        }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if let Some(r) = self.as_rational() {
            return rhs.scale(&r);
        }
        if let Some(r) = rhs.as_rational() {
            return self.scale(&r);
        }
        let (a, b) = self.unify(rhs);
        let phi = cyclotomic_polynomial(a.modulus);
        Cyclotomic {
            modulus: a.modulus,
            coeffs: reduce_mod(rpoly_mul(&a.coeffs, &b.coeffs), &phi),
        }
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Display for Cyclotomic {
    /// `[q=Q] c0 + c1*z + c2*z^2`, zero terms omitted, `0` for zero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        write!(f, "[q={}] ", self.modulus)?;
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{mag}")?,
                1 => write!(f, "{mag}*z")?,
                _ => write!(f, "{mag}*z^{j}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn z(q: u64) -> Cyclotomic {
        Cyclotomic::root_of_unity(q, 1)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        // Phi_105 is the first with a coefficient outside {-1, 0, 1}.
        assert!(cyclotomic_polynomial(105).iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn totient_and_degree() {
        for q in 1..=200u64 {
            assert_eq!(cyclotomic_polynomial(q).len() as u64 - 1, totient(q), "q={q}");
        }
    }

    #[test]
    fn make_examples() {
        assert_eq!(Cyclotomic::root_of_unity(4, 2), Cyclotomic::from_int(-1));
        let one = Rational::one();
        let s = Cyclotomic::new(3, vec![one.clone(), one.clone(), one]);
        assert!(s.is_zero());
        assert_eq!(Cyclotomic::root_of_unity(5, 7), Cyclotomic::root_of_unity(5, 2));
    }

    #[test]
    fn arithmetic_examples() {
        let one = Cyclotomic::one();
        let p = &(&one + &z(4)) * &(&one - &z(4));
        assert_eq!(p, Cyclotomic::from_int(2));
        assert_eq!(&z(3) * &Cyclotomic::root_of_unity(3, 2), one);
        let x = &z(7) + &Cyclotomic::from_rational(rat(3, 5));
        assert_eq!(&x * &one, x);
    }

    #[test]
    fn inverse_examples() {
        let two_z = z(4).scale(&rat(2, 1));
        assert_eq!(two_z.inv().unwrap(), z(4).scale(&rat(-1, 2)));
        assert_eq!(Cyclotomic::one().inv().unwrap(), Cyclotomic::one());
        let d = &z(3) - &Cyclotomic::root_of_unity(3, 2);
        assert_eq!(&d * &d, Cyclotomic::from_int(-3));
        assert_eq!(d.inv().unwrap(), d.scale(&rat(-1, 3)));
        assert_eq!(Cyclotomic::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn conj_examples() {
        assert_eq!(z(4).conj(), -z(4));
        let r = Cyclotomic::from_rational(rat(2, 7));
        assert_eq!(r.conj(), r);
        let x = &z(9) + &Cyclotomic::root_of_unity(9, 4).scale(&rat(3, 2));
        assert_eq!(x.conj().conj(), x);
    }

    #[test]
    fn lift_examples() {
        let third = Cyclotomic::from_rational(rat(1, 3));
        assert_eq!(third.lift(12).unwrap().as_rational(), Some(rat(1, 3)));
        assert_eq!(Cyclotomic::root_of_unity(2, 1).lift(8).unwrap(), Cyclotomic::from_int(-1));
        assert_eq!(z(3).lift(6).unwrap(), Cyclotomic::root_of_unity(6, 2));
        assert_eq!(
            z(3).lift(4),
            Err(Error::IncompatibleModuli { from: 3, to: 4 })
        );
    }

    #[test]
    fn embed_examples() {
        let p = Precision::digits(30);
        let tol = Real::pow10(-22, p.bits());
        let i = z(4).embed(p);
        assert!((&i - &Complex::i(p.bits())).abs() < tol);
        let third = Cyclotomic::from_rational(rat(1, 3)).embed(p);
        assert!(third.re.to_string_digits(10).starts_with("0.3333333333"));
        let d = (&z(3) - &Cyclotomic::root_of_unity(3, 2)).embed(p);
        assert!(d.re.abs() < tol);
        assert!(d.im.to_string_digits(20).starts_with("1.7320508075688772"));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Cyclotomic::zero().to_string(), "0");
        assert_eq!(Cyclotomic::from_rational(rat(-1, 2)).to_string(), "[q=1] -1/2");
        let x = &z(4).scale(&rat(-1, 3)) + &Cyclotomic::from_rational(rat(1, 2));
        assert_eq!(x.to_string(), "[q=4] 1/2 - 1/3*z");
        let y = Cyclotomic::root_of_unity(5, 3).scale(&rat(2, 1));
        assert_eq!(y.to_string(), "[q=5] 2*z^3");
    }
}

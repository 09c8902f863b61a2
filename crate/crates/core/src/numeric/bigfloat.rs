//! Multi-precision real and complex numbers.
//!
//! Thin value types over `astro_float::BigFloat`. Every value carries its
//! working precision in bits; binary operations run at the larger of the two.
//! There is no global precision state: the constants cache is thread-local and
//! only memoises pi/e/ln2 at the requested precision.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact::Rational;

const RM: RoundingMode = RoundingMode::ToEven;
const LOG2_10: f64 = std::f64::consts::LOG2_10;
/// Internal guard digits carried by every [`Precision`].
pub const GUARD_DIGITS: u32 = 10;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("astro-float constants cache"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Requested number of significant decimal digits (at least 10).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision {
    digits: u32,
}

impl Precision {
    pub const MIN_DIGITS: u32 = 10;

    /// Panics below [`Precision::MIN_DIGITS`]; use [`Precision::try_digits`] for user input.
    pub fn digits(digits: u32) -> Self {
        Self::try_digits(digits).expect("precision must be at least 10 digits")
    }

    pub fn try_digits(digits: u32) -> Option<Self> {
        (digits >= Self::MIN_DIGITS).then_some(Precision { digits })
    }

    pub fn get(self) -> u32 {
        self.digits
    }

    /// Working precision in bits, guard digits included.
    pub fn bits(self) -> usize {
        ((self.digits + GUARD_DIGITS) as f64 * LOG2_10).ceil() as usize + 16
    }

    pub fn with_guard(self, extra: u32) -> Self {
        Precision {
            digits: self.digits + extra,
        }
    }

    /// 10^{-(digits - loss)}.
    pub fn tolerance(self, loss: u32) -> Real {
        Real::pow10(-(self.digits as i64 - loss as i64), self.bits())
    }
}

/// Bits needed for `digits` decimal digits.
pub fn digits_to_bits(digits: f64) -> usize {
    (digits.max(1.0) * LOG2_10).ceil() as usize + 16
}

#[derive(Debug)]
pub struct Real {
    v: BigFloat,
    p: usize,
}

impl Clone for Real {
    fn clone(&self) -> Self {
        Real {
            v: self.v.clone(),
            p: self.p,
        }
    }
}

impl Real {
    fn wrap(v: BigFloat, p: usize) -> Self {
        debug_assert!(!v.is_nan(), "NaN in multi-precision arithmetic");
        Real { v, p }
    }

    pub fn precision(&self) -> usize {
        self.p
    }

    pub fn with_bits(&self, p: usize) -> Self {
        let mut v = self.v.clone();
        v.set_precision(p, RM).expect("set precision");
        Real { v, p }
    }

    pub fn with_precision(&self, prec: Precision) -> Self {
        self.with_bits(prec.bits())
    }

    pub fn zero(p: usize) -> Self {
        Self::wrap(BigFloat::from_word(0, p), p)
    }

    pub fn one(p: usize) -> Self {
        Self::from_i64(1, p)
    }

    pub fn from_i64(n: i64, p: usize) -> Self {
        Self::wrap(BigFloat::from_i64(n, p), p)
    }

    pub fn from_u64(n: u64, p: usize) -> Self {
        Self::wrap(BigFloat::from_u64(n, p), p)
    }

    pub fn from_f64(x: f64, p: usize) -> Self {
        Self::wrap(BigFloat::from_f64(x, p), p)
    }

    pub fn from_bigint(n: &BigInt, p: usize) -> Self {
        let (sign, words) = n.to_u64_digits();
        // from_u128 yields NaN below 128 bits of precision.
        let base = BigFloat::from_u128(1u128 << 64, p.max(128));
        let mut acc = BigFloat::from_word(0, p);
        for w in words.iter().rev() {
            acc = acc.mul(&base, p, RM).add(&BigFloat::from_u64(*w, p), p, RM);
        }
        if sign == num_bigint::Sign::Minus {
            acc = acc.neg();
        }
        Self::wrap(acc, p)
    }

    pub fn from_rational(r: &Rational, p: usize) -> Self {
        let n = Self::from_bigint(r.numer(), p);
        if r.denom() == &BigInt::from(1) {
            return n;
        }
        &n / &Self::from_bigint(r.denom(), p)
    }

    /// Parses a decimal literal such as `-0.3` or `2.5e-3`.
    pub fn parse(text: &str, p: usize) -> Option<Self> {
        let v = with_consts(|cc| BigFloat::parse(text, Radix::Dec, p, RM, cc));
        (!v.is_nan() && !v.is_inf()).then(|| Self::wrap(v, p))
    }

    pub fn pi(p: usize) -> Self {
        Self::wrap(with_consts(|cc| cc.pi(p, RM)), p)
    }

    /// 10^e.
    pub fn pow10(e: i64, p: usize) -> Self {
        let ten = BigFloat::from_word(10, p);
        let mag = ten.powi(e.unsigned_abs() as usize, p, RM);
        if e >= 0 {
            Self::wrap(mag, p)
        } else {
            Self::wrap(BigFloat::from_word(1, p).div(&mag, p, RM), p)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.v.is_negative() && !self.v.is_zero()
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.v.abs(), self.p)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.v.sqrt(self.p, RM), self.p)
    }

    pub fn exp(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.exp(self.p, RM, cc)), self.p)
    }

    /// Natural logarithm; the argument must be positive.
    pub fn ln(&self) -> Self {
        debug_assert!(!self.is_negative() && !self.is_zero(), "ln of non-positive value");
        Self::wrap(with_consts(|cc| self.v.ln(self.p, RM, cc)), self.p)
    }

    pub fn sin(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.sin(self.p, RM, cc)), self.p)
    }

    pub fn cos(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.cos(self.p, RM, cc)), self.p)
    }

    pub fn atan(&self) -> Self {
        Self::wrap(with_consts(|cc| self.v.atan(self.p, RM, cc)), self.p)
    }

    /// Angle of the point (x, y) in (-pi, pi].
    pub fn atan2(y: &Real, x: &Real) -> Real {
        let p = y.p.max(x.p);
        if x.is_zero() {
            if y.is_zero() {
                return Real::zero(p);
            }
            let half_pi = Real::pi(p).div_i64(2);
            return if y.is_negative() { -half_pi } else { half_pi };
        }
        let base = (y / x).atan();
        if !x.is_negative() {
            base
        } else if y.is_negative() {
            &base - &Real::pi(p)
        } else {
            &base + &Real::pi(p)
        }
    }

    /// self^e for a non-negative integer exponent.
    pub fn powi(&self, e: u64) -> Self {
        Self::wrap(self.v.powi(e as usize, self.p, RM), self.p)
    }

    /// self^y for positive self.
    pub fn powf(&self, y: &Real) -> Self {
        (&self.ln() * y).exp()
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        self * &Real::from_i64(k, self.p)
    }

    pub fn div_i64(&self, k: i64) -> Self {
        self / &Real::from_i64(k, self.p)
    }

    pub fn floor(&self) -> Self {
        Self::wrap(self.v.floor(), self.p)
    }

    /// Integer part rounded toward negative infinity.
    pub fn floor_bigint(&self) -> BigInt {
        let f = self.floor();
        if f.is_zero() {
            return BigInt::zero();
        }
        let (sign, digits, exp) = f.decimal_digits();
        let exp = exp.max(0) as usize;
        let mut s: String = digits.iter().take(exp).map(|d| char::from(b'0' + d)).collect();
        while s.len() < exp {
            s.push('0');
        }
        let n: BigInt = s.parse().unwrap_or_default();
        if sign == Sign::Neg {
            -n
        } else {
            n
        }
    }

    /// Approximate base-10 exponent of |self| (-inf for zero).
    pub fn log10_abs(&self) -> f64 {
        if self.is_zero() {
            return f64::NEG_INFINITY;
        }
        let e = self.v.exponent().unwrap_or(0) as f64;
        let mut m = self.v.clone();
        m.set_exponent(0);
        let mf = Real::wrap(m, self.p).to_f64_unchecked().abs();
        e * std::f64::consts::LOG10_2 + mf.log10()
    }

    fn to_f64_unchecked(&self) -> f64 {
        self.to_string_digits(20).parse().unwrap_or(f64::NAN)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_f64_unchecked()
    }

    fn decimal_digits(&self) -> (Sign, Vec<u8>, i32) {
        with_consts(|cc| self.v.convert_to_radix(Radix::Dec, RM, cc))
            .expect("decimal conversion")
    }

    /// Decimal text with `n` significant digits; scientific notation outside
    /// [1e-5, 1e16).
    pub fn to_string_digits(&self, n: usize) -> String {
        let n = n.max(1);
        if self.is_zero() {
            return "0".into();
        }
        let (sign, mut digits, mut exp) = self.decimal_digits();
        digits.resize(digits.len().max(n + 1), 0);
        let round_up = digits[n] >= 5;
        digits.truncate(n);
        if round_up {
            let mut i = n;
            loop {
                if i == 0 {
                    digits.insert(0, 1);
                    digits.truncate(n);
                    exp += 1;
                    break;
                }
                i -= 1;
                if digits[i] == 9 {
                    digits[i] = 0;
                } else {
                    digits[i] += 1;
                    break;
                }
            }
        }
        let ds: String = digits.iter().map(|d| char::from(b'0' + d)).collect();
        let mut out = String::new();
        if sign == Sign::Neg {
            out.push('-');
        }
        if (-4..=16).contains(&exp) {
            if exp <= 0 {
                out.push_str("0.");
                out.push_str(&"0".repeat((-exp) as usize));
                out.push_str(&ds);
            } else {
                let e = exp as usize;
                if ds.len() <= e {
                    out.push_str(&ds);
                    out.push_str(&"0".repeat(e - ds.len()));
                } else {
                    out.push_str(&ds[..e]);
                    out.push('.');
                    out.push_str(&ds[e..]);
                }
            }
        } else {
            out.push_str(&ds[..1]);
            if ds.len() > 1 {
                out.push('.');
                out.push_str(&ds[1..]);
            }
            out.push_str(&format!("e{}", exp - 1));
        }
        out
    }

    pub fn max(self, other: Real) -> Real {
        if self >= other {
            self
        } else {
            other
        }
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|c| c.cmp(&0))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .unwrap_or(((self.p.saturating_sub(16)) as f64 / LOG2_10) as usize);
        write!(f, "{}", self.to_string_digits(digits))
    }
}

macro_rules! real_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for &Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                let p = self.p.max(rhs.p);
                Real::wrap(self.v.$m(&rhs.v, p, RM), p)
            }
        }
        impl $tr for Real {
            type Output = Real;
            fn $m(self, rhs: Real) -> Real {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Real> for Real {
            type Output = Real;
            fn $m(self, rhs: &Real) -> Real {
                (&self).$m(rhs)
            }
        }
    };
}
real_binop!(Add, add);
real_binop!(Sub, sub);
real_binop!(Mul, mul);
real_binop!(Div, div);

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real::wrap(self.v.clone().neg(), self.p)
    }
}

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        -&self
    }
}

/// Complex number with multi-precision parts.
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: Real) -> Self {
        let p = re.p;
        Complex {
            re,
            im: Real::zero(p),
        }
    }

    pub fn from_f64(re: f64, im: f64, p: usize) -> Self {
        Complex::new(Real::from_f64(re, p), Real::from_f64(im, p))
    }

    pub fn from_rational(r: &Rational, p: usize) -> Self {
        Complex::from_real(Real::from_rational(r, p))
    }

    pub fn zero(p: usize) -> Self {
        Complex::from_real(Real::zero(p))
    }

    pub fn one(p: usize) -> Self {
        Complex::from_real(Real::one(p))
    }

    pub fn i(p: usize) -> Self {
        Complex::new(Real::zero(p), Real::one(p))
    }

    /// e^{2 pi i j / q}.
    pub fn unit_root(j: u64, q: u64, p: usize) -> Self {
        let j = j % q;
        match (4 * j).checked_rem(q) {
            // Exact multiples of a quarter turn.
            Some(0) => {
                return match 4 * j / q {
                    0 => Complex::one(p),
                    1 => Complex::i(p),
                    2 => -Complex::one(p),
                    _ => -Complex::i(p),
                };
            }
            _ => {}
        }
        let theta = Real::pi(p).mul_i64(2 * j as i64).div_i64(q as i64);
        Complex::new(theta.cos(), theta.sin())
    }

    pub fn precision(&self) -> usize {
        self.re.p.max(self.im.p)
    }

    pub fn with_bits(&self, p: usize) -> Self {
        Complex::new(self.re.with_bits(p), self.im.with_bits(p))
    }

    pub fn with_precision(&self, prec: Precision) -> Self {
        self.with_bits(prec.bits())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Complex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn abs(&self) -> Real {
        if self.im.is_zero() {
            return self.re.abs();
        }
        if self.re.is_zero() {
            return self.im.abs();
        }
        self.norm_sqr().sqrt()
    }

    pub fn arg(&self) -> Real {
        Real::atan2(&self.im, &self.re)
    }

    pub fn scale(&self, k: &Real) -> Self {
        Complex::new(&self.re * k, &self.im * k)
    }

    pub fn mul_i(&self) -> Self {
        Complex::new(-&self.im, self.re.clone())
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        if self.im.is_zero() {
            return Complex::from_real(m);
        }
        Complex::new(&m * &self.im.cos(), &m * &self.im.sin())
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        if self.im.is_zero() && !self.re.is_negative() {
            return Complex::from_real(self.re.ln());
        }
        Complex::new(self.abs().ln(), self.arg())
    }

    pub fn sin(&self) -> Self {
        if self.im.is_zero() {
            return Complex::from_real(self.re.sin());
        }
        let (ch, sh) = cosh_sinh(&self.im);
        Complex::new(&self.re.sin() * &ch, &self.re.cos() * &sh)
    }

    pub fn cos(&self) -> Self {
        if self.im.is_zero() {
            return Complex::from_real(self.re.cos());
        }
        let (ch, sh) = cosh_sinh(&self.im);
        Complex::new(&self.re.cos() * &ch, -(&self.re.sin() * &sh))
    }

    /// base^self for a positive real base.
    pub fn base_pow(&self, base: &Real) -> Self {
        let lb = base.ln();
        Complex::new(&self.re * &lb, &self.im * &lb).exp()
    }

    /// self^w on the principal branch.
    pub fn pow(&self, w: &Complex) -> Self {
        if self.is_zero() {
            return Complex::zero(self.precision());
        }
        (w * &self.ln()).exp()
    }

    pub fn powi(&self, e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Complex::one(self.precision());
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn to_string_digits(&self, n: usize) -> String {
        if self.im.is_zero() {
            return self.re.to_string_digits(n);
        }
        let im = self.im.to_string_digits(n);
        if self.re.is_zero() {
            return format!("{im}i");
        }
        let (sign, mag) = match im.strip_prefix('-') {
            Some(m) => ("-", m.to_string()),
            None => ("+", im),
        };
        format!("{} {sign} {mag}i", self.re.to_string_digits(n))
    }
}

fn cosh_sinh(x: &Real) -> (Real, Real) {
    let e = x.exp();
    let inv = &Real::one(x.p) / &e;
    let two = Real::from_i64(2, x.p);
    (&(&e + &inv) / &two, &(&e - &inv) / &two)
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .unwrap_or(((self.precision().saturating_sub(16)) as f64 / LOG2_10) as usize);
        write!(f, "{}", self.to_string_digits(digits))
    }
}

impl From<Real> for Complex {
    fn from(r: Real) -> Self {
        Complex::from_real(r)
    }
}

impl Add for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        if self.im.is_zero() {
            return rhs.scale(&self.re);
        }
        if rhs.im.is_zero() {
            return self.scale(&rhs.re);
        }
        Complex::new(
            &(&self.re * &rhs.re) - &(&self.im * &rhs.im),
            &(&self.re * &rhs.im) + &(&self.im * &rhs.re),
        )
    }
}

impl Div for &Complex {
    type Output = Complex;
    fn div(self, rhs: &Complex) -> Complex {
        if rhs.im.is_zero() {
            return Complex::new(&self.re / &rhs.re, &self.im / &rhs.re);
        }
        let d = rhs.norm_sqr();
        let num = self * &rhs.conj();
        Complex::new(&num.re / &d, &num.im / &d)
    }
}

macro_rules! complex_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Complex {
            type Output = Complex;
            fn $m(self, rhs: Complex) -> Complex {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Complex> for Complex {
            type Output = Complex;
            fn $m(self, rhs: &Complex) -> Complex {
                (&self).$m(rhs)
            }
        }
    };
}
complex_owned!(Add, add);
complex_owned!(Sub, sub);
complex_owned!(Mul, mul);
complex_owned!(Div, div);

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        -&self
    }
}

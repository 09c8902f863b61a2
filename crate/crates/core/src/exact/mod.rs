//! Exact arithmetic: rationals, cyclotomic numbers and polynomials over both.

pub mod cyclotomic;
pub mod polynomial;
pub mod rational;

pub use cyclotomic::{cyclotomic_polynomial, totient, Cyclotomic};
pub use polynomial::{CycPolynomial, Polynomial, RationalPolynomial, Scalar};
pub use rational::{binomial, factorial, parse_rational, rat, rat_int, rat_normalize, Rational};

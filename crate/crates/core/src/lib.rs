//! Exact values of Hurwitz, Dirichlet L, Lerch and multiple zeta functions at
//! integer points, with numeric cross-checks.
//!
//! The exact side works over rationals and cyclotomic fields: ζ(-m, α) as a
//! polynomial in α, L(-m, χ), closed forms c·π^n for L(n, χ) when n and χ share
//! parity, Lerch and r-fold sums at negative integers. The numeric side
//! ([`numeric`]) evaluates the same functions in arbitrary precision and
//! checks the transcendental identities that have no exact form. [`verify`]
//! bundles both into named suites.
//!
//! ```
//! use zeta_exact::hurwitz::{hurwitz_value, zeta_even};
//! use zeta_exact::exact::rat;
//!
//! assert_eq!(hurwitz_value(2, &rat(1, 4)), rat(-1, 64));
//! assert_eq!(zeta_even(2).to_string(), "(1/90) * pi^4");
//! ```

pub mod dirichlet;
pub mod error;
pub mod exact;
pub mod exec;
pub mod hurwitz;
pub mod lerch;
pub mod multi;
pub mod numeric;
pub mod special_value;
pub mod verify;

pub use error::{Error, Result};
pub use exec::ExecMode;
pub use special_value::SpecialValue;

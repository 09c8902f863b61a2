//! Multi-precision numeric layer used to verify exact results independently.

pub mod bernoulli;
pub mod bigfloat;
pub mod gamma;
pub mod zeta;

pub use bigfloat::{Complex, Precision, Real};
pub use gamma::gamma;
pub use zeta::{hurwitz_numeric, zeta_numeric};
pub mod series;

pub use series::{l_series_numeric, prop1_series};
pub mod calculus;
pub mod formula;

pub use formula::hurwitz_formula_eval;
pub mod lfunc;

pub use lfunc::{l1_even_numeric, l_numeric};
pub mod residual;

pub use residual::{
    functional_eq_residual, l_functional_residual, lemma3_residual, prop4_residual,
    theorem6_cross_check, ChainKind, ClassSumWeight, Residual,
};
pub mod probe;

pub use probe::{conjecture_probe, limit_denominator, ProbeReport, RationalHit};

//! Dirichlet characters, Gauss sums and exact L-values.

pub mod character;
pub mod group;

pub use character::{character, characters, DirichletCharacter, Parity};
pub use group::{unit_group, UnitGroup};
pub mod lvalue;

pub use lvalue::{
    l1_odd_exact, l1_odd_literal, l_neg, l_value_closed, power_sum,
    theorem2_corollary_residual,
};

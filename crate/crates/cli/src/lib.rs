//! Library side of the `zetacalc` binary: output records and command bodies.

pub mod commands;
pub mod record;

pub use record::{Kind, OutputRecord, Provenance};

//! Exact computations with central hyperplane multiarrangements: logarithmic
//! derivation and form modules, Euler restriction, freeness and exceptional loci.

pub mod arrangement;
pub mod cli;
pub mod error;
pub mod exact_algebra;
pub mod deletion_restriction;
pub mod log_modules;

pub use error::{Error, Result};

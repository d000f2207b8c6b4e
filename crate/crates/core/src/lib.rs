//! Seifert invariants of spherical 3-orbifolds fibered by the Hopf fibration.

pub mod cli;
pub mod engine;
pub mod error;
pub mod groups;
pub mod oracle;
pub mod quaternion;

pub use error::{Error, Result};

/// Exact rational arithmetic used throughout.
pub type Rational = num_rational::Ratio<i64>;

//! Ordered blueprints, their free modules and exterior algebras, and
//! matroids over them.

pub mod blue_modules;
pub mod blueprints;
pub mod differential;
pub mod error;
pub mod exterior;
pub mod json;
pub mod matroids;
pub mod sampling;
pub mod oracles;
pub mod subsets;

pub use error::{Error, Result};

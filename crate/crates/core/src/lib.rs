//! Exact computations with lattice polytopes, toric fans and universal
//! rational parametrizations of projective toric varieties.

pub mod decompose;
pub mod error;
pub mod group;
pub mod json;
pub mod lattice;
pub mod multiplicative;
pub mod param;
pub mod poly;
pub mod polytope;
pub mod resolution;

pub use error::{Error, Result};
pub use lattice::{IntMat, IntVec};
pub use poly::{MultiPoly, Rational};

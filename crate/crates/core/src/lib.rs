//! Exact homological algebra for toupie algebras. Minimal resolutions come
//! from algebraic Morse theory on the bar resolution; transferring along the
//! resulting retract gives the A-infinity structures on Tor and Ext.

pub mod ainf;
pub mod algebra;
pub mod chains;
pub mod duality;
pub mod error;
pub mod examples;
pub mod lincomb;
pub mod morse;
pub mod presentation;
pub mod random;
pub mod rewriting;
pub mod scalar;
pub mod schema;
pub mod word;

pub use algebra::ToupieAlgebra;
pub use error::{Error, Result};
pub use lincomb::LinComb;
pub use scalar::Scalar;
pub use word::{Tensor, Word};

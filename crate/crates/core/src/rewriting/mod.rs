//! Exact matrices and the reduced Gröbner basis of a toupie ideal, which
//! gives the nontip basis and normal forms.

mod groebner;
mod matrix;

pub use groebner::{GroebnerData, NonMonomial};
pub use matrix::{Echelon, Matrix};

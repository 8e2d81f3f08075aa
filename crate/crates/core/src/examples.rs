//! Small presentations used throughout the tests and the CLI.

use crate::algebra::ToupieAlgebra;
use crate::presentation::Presentation;
use crate::schema::parse_presentation;

/// Three branches of lengths 3, 2, 2 with
/// `I = <a1a2a3 - c1c2, b1b2 - c1c2>` and order `a > b > c`.
pub const E1: &str = include_str!("../data/e1.json");
/// One branch `d1d2d3` with tips `d1d2`, `d2d3`.
pub const QUADRATIC_MONOMIAL: &str = include_str!("../data/quadratic_monomial.json");
/// One branch `d1d2d3` with the single tip `d1d2d3`.
pub const CUBIC_MONOMIAL: &str = include_str!("../data/cubic_monomial.json");
/// One branch `abcde` with overlapping tips `abc`, `cde`.
pub const OVERLAP: &str = include_str!("../data/overlap.json");
/// Two cubic branches joined by one relation `a1a2a3 - b1b2b3`.
pub const CUBIC_ONLY: &str = include_str!("../data/cubic_only.json");
/// Two cubic tips `a1a2a3`, `b1b2b3` tied to `c1c2` in one component.
pub const TWO_CUBIC: &str = include_str!("../data/two_cubic.json");
/// An intermediate vertex with two outgoing arrows.
pub const NOT_TOUPIE: &str = include_str!("../data/not_toupie.json");

pub fn presentation(text: &str) -> Presentation {
    parse_presentation(text).expect("bundled example parses")
}

pub fn algebra(text: &str) -> ToupieAlgebra {
    ToupieAlgebra::new(presentation(text)).expect("bundled example is a toupie algebra")
}

pub fn e1() -> ToupieAlgebra {
    algebra(E1)
}

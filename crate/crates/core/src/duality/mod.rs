mod gamma;
mod gr;
mod ideal;
mod yoneda;

use std::fmt;

pub use gamma::GammaGraph;
pub use gr::{gr_algebra, gr_relations, hypotheses_check, lowest_block, special_relations, Hypotheses};
pub use ideal::{graded_dimensions, ideal_equal, ideal_span, is_homogeneous, quotient_dimension};
pub use yoneda::{double_dual, dual_name, dual_path, yoneda_presentation, yoneda_unchecked};

use crate::presentation::Presentation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Input,
    Yoneda,
    Gr,
    DoubleDual,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Input => "input",
            Provenance::Yoneda => "yoneda",
            Provenance::Gr => "gr",
            Provenance::DoubleDual => "double-dual",
        })
    }
}

/// A presentation tagged with how it was obtained.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub presentation: Presentation,
    pub provenance: Provenance,
}

impl AlgebraPresentation {
    pub fn input(presentation: Presentation) -> Self {
        Self { presentation, provenance: Provenance::Input }
    }
}

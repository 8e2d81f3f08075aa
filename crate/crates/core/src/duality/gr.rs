use num_traits::Zero;

use crate::algebra::ToupieAlgebra;
use crate::presentation::{PathComb, Presentation};
use crate::rewriting::{Echelon, GroebnerData};

use super::{AlgebraPresentation, GammaGraph, Provenance};

/// The special-basis rows read back as relations.
pub fn special_relations(g: &GroebnerData) -> Vec<PathComb> {
    let special = g.matrix().special_basis();
    special
        .rows()
        .iter()
        .map(|row| {
            g.columns()
                .iter()
                .zip(row)
                .filter(|(_, c)| !c.is_zero())
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect()
        })
        .collect()
}

/// `rho'`: the minimal-length block of `rho`, made monic at its first term.
/// The columns are length-descending, so that block is a suffix.
pub fn lowest_block(g: &GroebnerData, rho: &PathComb) -> PathComb {
    let terms: Vec<_> = g.columns().iter().filter(|b| !rho.coeff(b).is_zero()).collect();
    let min = terms.iter().map(|b| b.len()).min().expect("nonzero relation");
    let block: Vec<_> = terms.into_iter().filter(|b| b.len() == min).collect();
    let lead = rho.coeff(block[0]);
    block.into_iter().map(|b| (b.clone(), rho.coeff(b) / &lead)).collect()
}

/// Relations of `gr A`: monomials unchanged, each special-basis relation
/// replaced by its lowest block. Blocks already in the span of earlier ones
/// are dropped so the result stays a minimal presentation.
pub fn gr_relations(g: &GroebnerData) -> Vec<PathComb> {
    let mut rels: Vec<PathComb> = g.monomials().iter().cloned().map(PathComb::basis).collect();
    let mut span = Echelon::new();
    for rho in special_relations(g) {
        let block = lowest_block(g, &rho);
        if span.insert(&block) {
            rels.push(block);
        }
    }
    rels
}

pub fn gr_algebra(alg: &ToupieAlgebra) -> AlgebraPresentation {
    let p = alg.presentation();
    let rels = gr_relations(alg.groebner());
    let presentation = Presentation::new(p.quiver().clone(), rels, p.order().to_vec()).expect("parallel supports");
    AlgebraPresentation { presentation, provenance: Provenance::Gr }
}

/// Outcome of the double-dual hypotheses, with one reason per violation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypotheses {
    pub monomials_quadratic: bool,
    pub one_long_tip_per_component: bool,
    /// Not part of the Theorem as stated; without it `gr A` need not be
    /// quadratic and `A!!` cannot match it.
    pub gr_quadratic: bool,
    pub reasons: Vec<String>,
}

impl Hypotheses {
    pub fn holds(&self) -> bool {
        self.reasons.is_empty()
    }

    /// The two conditions of the Theorem alone.
    pub fn literal(&self) -> bool {
        self.monomials_quadratic && self.one_long_tip_per_component
    }
}

pub fn hypotheses_check(alg: &ToupieAlgebra) -> Hypotheses {
    let g = alg.groebner();
    let mut reasons = Vec::new();
    for m in g.monomials().iter().filter(|m| m.len() != 2) {
        reasons.push(format!("monomial relation {} is not quadratic", alg.fmt_path(m)));
    }
    let monomials_quadratic = reasons.is_empty();

    let gamma = GammaGraph::build(g);
    let mut long: Vec<Vec<String>> = vec![Vec::new(); gamma.components.len()];
    for nm in g.nonmonomials().iter().filter(|nm| nm.tip.len() != 2) {
        let col = g.columns().iter().position(|c| *c == nm.tip).expect("tip is a column");
        let comp = gamma.component_of(col).expect("tip is a vertex of the graph");
        long[comp].push(alg.fmt_path(&nm.tip));
    }
    let before = reasons.len();
    for tips in long.iter().filter(|t| t.len() > 1) {
        reasons.push(format!("one component has non-quadratic tips {}", tips.join(", ")));
    }
    let one_long_tip_per_component = reasons.len() == before;

    let before = reasons.len();
    for rho in special_relations(g) {
        let block = lowest_block(g, &rho);
        let len = block.support().next().expect("nonzero").len();
        if len != 2 {
            reasons.push(format!(
                "lowest part of {} has length {len}",
                alg.presentation().fmt_relation(&rho)
            ));
        }
    }
    let gr_quadratic = reasons.len() == before;
    Hypotheses { monomials_quadratic, one_long_tip_per_component, gr_quadratic, reasons }
}

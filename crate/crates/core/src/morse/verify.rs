use serde::Serialize;

use super::bar::{bar_cells, bar_differential, bar_differential_lin, top_degree, WordComb};
use super::sdr::SdrMaps;
use crate::algebra::ToupieAlgebra;

/// Outcome of checking the deformation retract identities on every bar cell.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SdrReport {
    pub max_degree: usize,
    pub cells_checked: usize,
    pub chains_checked: usize,
    /// `(identity, cell)` for every violation, in enumeration order.
    pub failures: Vec<(String, String)>,
}

impl SdrReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn first_failure(&self) -> Option<&(String, String)> {
        self.failures.first()
    }
}

/// Homotopy identity in the form satisfied by zigzag homotopies with
/// dotted weight `-1/w`: `i p - id = d h + h d`.
pub const HOMOTOPY: &str = "ip - id = dh + hd";

/// Checks the five retract identities on all cells of bar degree at most `max_degree`.
pub fn verify_sdr(alg: &ToupieAlgebra, maps: &dyn SdrMaps, max_degree: usize) -> SdrReport {
    let n = max_degree.min(top_degree(alg));
    let mut report = SdrReport { max_degree, ..Default::default() };
    let fail = |report: &mut SdrReport, what: &str, w: &crate::word::Word| {
        report.failures.push((what.to_string(), alg.fmt_word(w)));
    };
    for layer in bar_cells(alg, n) {
        for w in &layer {
            report.cells_checked += 1;
            let x = WordComb::basis(w.clone());
            let h = maps.h(w);
            let lhs = maps.i_lin(&maps.p(w)) - x;
            let rhs = bar_differential_lin(alg, &h) + maps.h_lin(&bar_differential(alg, w));
            if lhs != rhs {
                fail(&mut report, HOMOTOPY, w);
            }
            if !maps.h_lin(&h).is_zero() {
                fail(&mut report, "hh = 0", w);
            }
            if !maps.p_lin(&h).is_zero() {
                fail(&mut report, "ph = 0", w);
            }
            if alg.chains().is_chain(w) {
                report.chains_checked += 1;
                let i = maps.i(w);
                if maps.p_lin(&i) != WordComb::basis(w.clone()) {
                    fail(&mut report, "pi = id", w);
                }
                if !maps.h_lin(&i).is_zero() {
                    fail(&mut report, "hi = 0", w);
                }
            }
        }
    }
    report
}

/// Cells where two sets of maps disagree, as `(map, cell)`.
pub fn compare_sdr(alg: &ToupieAlgebra, a: &dyn SdrMaps, b: &dyn SdrMaps, max_degree: usize) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for layer in bar_cells(alg, max_degree.min(top_degree(alg))) {
        for w in &layer {
            if a.h(w) != b.h(w) {
                out.push(("h".into(), alg.fmt_word(w)));
            }
            if a.p(w) != b.p(w) {
                out.push(("p".into(), alg.fmt_word(w)));
            }
            if alg.chains().is_chain(w) && a.i(w) != b.i(w) {
                out.push(("i".into(), alg.fmt_word(w)));
            }
        }
    }
    out
}

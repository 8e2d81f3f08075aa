use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::presentation::{Path, PathComb, Presentation};
use crate::rewriting::Echelon;

/// The ideal generated by the relations, as a subspace of the (finite)
/// path algebra spanned by all `l rho r`.
pub fn ideal_span(p: &Presentation) -> Result<Echelon<Path>> {
    let q = p.quiver();
    let paths = q.all_paths()?;
    let mut span = Echelon::new();
    for rel in p.relations() {
        let Some(first) = rel.support().next() else { continue };
        let (s, t) = (first.source(), first.target());
        for l in paths.iter().filter(|l| l.target() == s) {
            for r in paths.iter().filter(|r| r.source() == t) {
                let v: PathComb = rel
                    .iter()
                    .map(|(m, c)| (l.then(m).and_then(|lm| lm.then(r)).expect("parallel support"), c.clone()))
                    .collect();
                span.insert(&v);
            }
        }
    }
    Ok(span)
}

/// `dim kQ/I`.
pub fn quotient_dimension(p: &Presentation) -> Result<usize> {
    Ok(p.quiver().all_paths()?.len() - ideal_span(p)?.rank())
}

/// `dim (kQ/I)_d` for each path length `d`, valid for homogeneous ideals.
pub fn graded_dimensions(p: &Presentation) -> Result<Vec<usize>> {
    let mut by_len: BTreeMap<usize, usize> = BTreeMap::new();
    for path in p.quiver().all_paths()? {
        *by_len.entry(path.len()).or_default() += 1;
    }
    for v in ideal_span(p)?.canonical_basis() {
        let len = v.support().next().expect("nonzero").len();
        *by_len.get_mut(&len).expect("length present") -= 1;
    }
    Ok(by_len.into_values().collect())
}

/// Whether every relation has all support paths of one length.
pub fn is_homogeneous(p: &Presentation) -> bool {
    p.relations().iter().all(|r| {
        let mut lens = r.support().map(Path::len);
        let first = lens.next();
        lens.all(|l| Some(l) == first)
    })
}

/// Equality of the generated ideals over a shared quiver.
pub fn ideal_equal(a: &Presentation, b: &Presentation) -> Result<bool> {
    if a.quiver() != b.quiver() {
        return Err(Error::QuiverMismatch);
    }
    Ok(ideal_span(a)?.same_span(&ideal_span(b)?))
}

use std::cmp::Reverse;

use serde::Serialize;

use super::{PathComb, Path, Quiver, VertexId};
use crate::error::{Error, Result};

/// A validated toupie quiver. It has one source and one sink, and every other
/// vertex has exactly one incoming and one outgoing arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToupieShape {
    pub source: VertexId,
    pub sink: VertexId,
    /// Branches (paths from source to sink) in arrow-declaration order.
    pub branches: Vec<Path>,
}

pub fn validate_toupie(q: &Quiver) -> Result<ToupieShape> {
    if q.arrow_count() == 0 {
        return Err(Error::NotToupie("quiver has no arrows".into()));
    }
    let sources: Vec<VertexId> = q.vertices().filter(|&v| q.incoming(v).is_empty()).collect();
    let sinks: Vec<VertexId> = q.vertices().filter(|&v| q.outgoing(v).is_empty()).collect();
    let names = |vs: &[VertexId]| vs.iter().map(|&v| q.vertex_name(v).to_string()).collect::<Vec<_>>().join(", ");
    if sources.len() != 1 {
        return Err(Error::NotToupie(format!("expected one source, found [{}]", names(&sources))));
    }
    if sinks.len() != 1 {
        return Err(Error::NotToupie(format!("expected one sink, found [{}]", names(&sinks))));
    }
    let (source, sink) = (sources[0], sinks[0]);
    for v in q.vertices() {
        if v == source || v == sink {
            continue;
        }
        let (i, o) = (q.incoming(v).len(), q.outgoing(v).len());
        if (i, o) != (1, 1) {
            return Err(Error::NotToupie(format!(
                "vertex `{}` has in-degree {i} and out-degree {o}",
                q.vertex_name(v)
            )));
        }
    }
    if !q.is_acyclic() {
        return Err(Error::Cycle);
    }
    let mut branches = Vec::new();
    let mut covered = 0;
    for &a in q.outgoing(source) {
        let mut p = q.arrow_path(a);
        while p.target() != sink {
            let next = q.outgoing(p.target())[0];
            p = p.then(&q.arrow_path(next)).expect("consecutive arrows compose");
        }
        covered += p.len();
        branches.push(p);
    }
    // With the degree conditions and no cycles every arrow lies on exactly one branch.
    debug_assert_eq!(covered, q.arrow_count());
    Ok(ToupieShape { source, sink, branches })
}

impl ToupieShape {
    /// Index of the branch containing the nontrivial path `p`.
    pub fn branch_of(&self, p: &Path) -> Option<usize> {
        let a = p.first_arrow()?;
        self.branches.iter().position(|b| b.arrows().contains(&a))
    }

    pub fn is_full_branch(&self, p: &Path) -> bool {
        self.branches.contains(p)
    }

    /// Branch indices sorted by length (longest first), ties broken by the
    /// earliest position of any of the branch's arrows in `order`, then by
    /// declaration order.
    pub fn ordered(&self, q: &Quiver, order: &[String]) -> Vec<usize> {
        let rank = |b: &Path| {
            b.arrows()
                .iter()
                .filter_map(|&a| order.iter().position(|n| *n == q.arrow(a).name))
                .min()
                .unwrap_or(usize::MAX)
        };
        let mut idx: Vec<usize> = (0..self.branches.len()).collect();
        idx.sort_by_key(|&i| (Reverse(self.branches[i].len()), rank(&self.branches[i]), i));
        idx
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum BranchClass {
    /// A single arrow from source to sink.
    B1,
    /// Longer branch in no relation.
    B2,
    /// Branch containing a monomial relation.
    B3,
    /// Branch in the support of a non-monomial relation.
    B4,
}

/// Partition of the branches; `b4` follows the fixed branch order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BranchClasses {
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
    pub b3: Vec<usize>,
    pub b4: Vec<usize>,
}

impl BranchClasses {
    pub fn class_of(&self, branch: usize) -> BranchClass {
        if self.b1.contains(&branch) {
            BranchClass::B1
        } else if self.b3.contains(&branch) {
            BranchClass::B3
        } else if self.b4.contains(&branch) {
            BranchClass::B4
        } else {
            BranchClass::B2
        }
    }
}

/// Sorts branches into the four classes. A relation with a single path is
/// monomial; a relation with two or more paths must combine full branches.
pub fn classify_branches(
    q: &Quiver,
    shape: &ToupieShape,
    relations: &[PathComb],
    order: &[String],
) -> Result<BranchClasses> {
    let n = shape.branches.len();
    let mut monomial = vec![false; n];
    let mut nonmonomial = vec![false; n];
    for (index, rel) in relations.iter().enumerate() {
        if rel.len() == 1 {
            let p = rel.support().next().expect("nonzero relation");
            if p.len() < 2 {
                return Err(Error::Relation { index, reason: "monomial relation of length < 2".into() });
            }
            let b = shape.branch_of(p).expect("every arrow lies on a branch");
            monomial[b] = true;
        } else {
            for p in rel.support() {
                let Some(b) = shape.branches.iter().position(|b| b == p) else {
                    return Err(Error::Relation {
                        index,
                        reason: format!("`{}` is not a full branch", q.fmt_path(p)),
                    });
                };
                if p.len() < 2 {
                    return Err(Error::Relation {
                        index,
                        reason: format!("branch `{}` has length 1", q.fmt_path(p)),
                    });
                }
                nonmonomial[b] = true;
            }
        }
    }
    let mut classes = BranchClasses::default();
    for b in shape.ordered(q, order) {
        match (monomial[b], nonmonomial[b]) {
            (true, true) => return Err(Error::BranchConflict(q.fmt_path(&shape.branches[b]))),
            (true, false) => classes.b3.push(b),
            (false, true) => classes.b4.push(b),
            (false, false) if shape.branches[b].len() == 1 => classes.b1.push(b),
            (false, false) => classes.b2.push(b),
        }
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Quiver {
        Quiver::new(vertices, arrows).unwrap()
    }

    #[test]
    fn single_arrow_is_toupie() {
        let s = validate_toupie(&q(&["0", "w"], &[("a", "0", "w")])).unwrap();
        assert_eq!(s.branches.len(), 1);
    }

    #[test]
    fn branching_intermediate_vertex_rejected() {
        let quiver = q(
            &["0", "x", "w"],
            &[("a", "0", "x"), ("b", "x", "w"), ("c", "x", "w")],
        );
        let err = validate_toupie(&quiver).unwrap_err();
        assert!(matches!(err, Error::NotToupie(ref m) if m.contains("out-degree 2")), "{err}");
    }

    #[test]
    fn detached_cycle_rejected() {
        let quiver = q(
            &["0", "w", "x", "y"],
            &[("a", "0", "w"), ("b", "x", "y"), ("c", "y", "x")],
        );
        assert_eq!(validate_toupie(&quiver).unwrap_err(), Error::Cycle);
    }

    #[test]
    fn parallel_arrows_are_b1() {
        let quiver = q(&["0", "w"], &[("a", "0", "w"), ("b", "0", "w")]);
        let s = validate_toupie(&quiver).unwrap();
        let c = classify_branches(&quiver, &s, &[], &[]).unwrap();
        assert_eq!(c.b1, vec![0, 1]);
        assert!(c.b2.is_empty() && c.b3.is_empty() && c.b4.is_empty());
    }

    #[test]
    fn monomial_branch_is_b3() {
        let quiver = q(
            &["0", "x", "y", "w"],
            &[("d1", "0", "x"), ("d2", "x", "y"), ("d3", "y", "w")],
        );
        let s = validate_toupie(&quiver).unwrap();
        let rel = PathComb::basis(quiver.path(&["d1", "d2"]).unwrap());
        let c = classify_branches(&quiver, &s, &[rel], &[]).unwrap();
        assert_eq!(c.b3, vec![0]);
    }
}

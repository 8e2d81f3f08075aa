//! Quivers with relations and the toupie shape check.

mod quiver;
mod shape;

pub use quiver::{Arrow, ArrowId, Path, Quiver, VertexId};
pub use shape::{classify_branches, validate_toupie, BranchClass, BranchClasses, ToupieShape};

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::Scalar;

/// An element of the path algebra `kQ`.
pub type PathComb = LinComb<Path>;

/// Product in `kQ`: bilinear extension of concatenation; non-composable products vanish.
pub fn lincomb_mul(a: &PathComb, b: &PathComb) -> PathComb {
    let mut out = PathComb::zero();
    for (p, x) in a.iter() {
        for (q, y) in b.iter() {
            if let Some(pq) = p.then(q) {
                out.add_term(pq, x * y);
            }
        }
    }
    out
}

/// A quiver together with relations generating a two-sided ideal and an
/// optional branch priority list (arrow names, most significant first).
#[derive(Clone, Debug)]
pub struct Presentation {
    quiver: Quiver,
    relations: Vec<PathComb>,
    order: Vec<String>,
}

impl Presentation {
    pub fn new(quiver: Quiver, relations: Vec<PathComb>, order: Vec<String>) -> Result<Self> {
        for (index, rel) in relations.iter().enumerate() {
            let mut support = rel.support();
            let Some(first) = support.next() else {
                return Err(Error::Relation { index, reason: "relation is zero".into() });
            };
            if support.any(|p| !p.is_parallel(first)) {
                return Err(Error::Relation { index, reason: "paths are not parallel".into() });
            }
        }
        for name in &order {
            if quiver.arrow_id(name).is_none() {
                return Err(Error::UnknownArrow(name.clone()));
            }
        }
        Ok(Self { quiver, relations, order })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[PathComb] {
        &self.relations
    }

    pub fn order(&self) -> &[String] {
        &self.order
    }

    /// Renders a relation as `c p + c' p' ...`.
    pub fn fmt_relation(&self, rel: &PathComb) -> String {
        fmt_comb(&self.quiver, rel)
    }
}

pub fn fmt_comb(q: &Quiver, rel: &PathComb) -> String {
    let terms: Vec<(String, Scalar)> = rel.iter().map(|(p, c)| (q.fmt_path(p), c.clone())).collect();
    fmt_terms(&terms)
}

/// Renders `c1 x1 + c2 x2 ...`, omitting unit coefficients; `0` when empty.
pub fn fmt_terms(terms: &[(String, Scalar)]) -> String {
    use crate::scalar;
    use num_traits::One;
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (x, c)) in terms.iter().enumerate() {
        let neg = scalar::is_negative(c);
        let abs = if neg { -c.clone() } else { c.clone() };
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if !abs.is_one() {
            out.push_str(&scalar::format(&abs));
            out.push(' ');
        }
        out.push_str(x);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn e1() -> Quiver {
        Quiver::new(
            &["0", "x1", "x2", "y1", "z1", "w"],
            &[
                ("a1", "0", "x1"),
                ("a2", "x1", "x2"),
                ("a3", "x2", "w"),
                ("b1", "0", "y1"),
                ("b2", "y1", "w"),
                ("c1", "0", "z1"),
                ("c2", "z1", "w"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn products_in_path_algebra() {
        let q = e1();
        let a1 = PathComb::basis(q.path(&["a1"]).unwrap());
        let a23 = PathComb::basis(q.path(&["a2", "a3"]).unwrap());
        assert_eq!(lincomb_mul(&a1, &a23), PathComb::basis(q.path(&["a1", "a2", "a3"]).unwrap()));
        let rel = PathComb::basis(q.path(&["b1", "b2"]).unwrap())
            - PathComb::basis(q.path(&["c1", "c2"]).unwrap());
        let ew = PathComb::basis(Path::trivial(q.vertex_id("w").unwrap()));
        assert_eq!(lincomb_mul(&rel, &ew), rel);
        let b2 = PathComb::basis(q.path(&["b2"]).unwrap());
        assert!(lincomb_mul(&a1, &b2).is_zero());
    }

    #[test]
    fn relation_rendering() {
        let q = e1();
        let rel = PathComb::basis(q.path(&["b1", "b2"]).unwrap())
            + PathComb::term(q.path(&["c1", "c2"]).unwrap(), int(-2));
        assert_eq!(fmt_comb(&q, &rel), "b1.b2 - 2 c1.c2");
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let q = e1();
        let rel = PathComb::basis(q.path(&["a1", "a2"]).unwrap())
            - PathComb::basis(q.path(&["b1", "b2"]).unwrap());
        assert!(Presentation::new(q, vec![rel], vec![]).is_err());
    }
}

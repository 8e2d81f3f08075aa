use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::presentation::{lincomb_mul, BranchClasses, Path, PathComb, Quiver, ToupieShape};
use crate::scalar::Scalar;

use super::Matrix;

/// A row of the reduced coefficient matrix, read as a relation
/// `tip + sum of later branches`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonMonomial {
    pub tip: Path,
    pub relation: PathComb,
}

impl NonMonomial {
    /// `f_rho`: what the tip rewrites to.
    pub fn rewrite(&self) -> PathComb {
        let mut f = -self.relation.clone();
        f.add_term(self.tip.clone(), Scalar::one());
        f
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerData {
    monomials: BTreeSet<Path>,
    nonmonomials: Vec<NonMonomial>,
    columns: Vec<Path>,
    input_matrix: Matrix,
    matrix: Matrix,
    tips: BTreeSet<Path>,
    tips_by_len: Vec<Path>,
    tip_inverse: BTreeMap<Path, PathComb>,
    nontips: Vec<Vec<Path>>,
}

impl GroebnerData {
    /// Requires a validated shape and classification of `relations`.
    pub fn build(
        q: &Quiver,
        shape: &ToupieShape,
        classes: &BranchClasses,
        relations: &[PathComb],
    ) -> Result<Self> {
        let columns: Vec<Path> = classes.b4.iter().map(|&b| shape.branches[b].clone()).collect();
        let mut raw_monomials = BTreeSet::new();
        let mut rows = Vec::new();
        for (index, rel) in relations.iter().enumerate() {
            if rel.len() == 1 {
                let p = rel.support().next().expect("nonzero relation");
                if p.len() < 2 {
                    return Err(Error::Relation { index, reason: "monomial relation of length < 2".into() });
                }
                raw_monomials.insert(p.clone());
            } else {
                rows.push(columns.iter().map(|b| rel.coeff(b)).collect::<Vec<_>>());
            }
        }
        // Drop monomials that contain another one; the ideal is unchanged.
        let monomials: BTreeSet<Path> = raw_monomials
            .iter()
            .filter(|p| !raw_monomials.iter().any(|m| m != *p && p.contains(m)))
            .cloned()
            .collect();

        let input_matrix = Matrix::from_rows(rows, columns.len());
        let (matrix, pivots) = input_matrix.rref();
        if pivots.len() < input_matrix.row_count() {
            return Err(Error::RankDeficient { rank: pivots.len(), rows: input_matrix.row_count() });
        }
        let nonmonomials: Vec<NonMonomial> = pivots
            .iter()
            .enumerate()
            .map(|(r, &c)| {
                let relation = columns
                    .iter()
                    .zip(&matrix.rows()[r])
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(b, x)| (b.clone(), x.clone()))
                    .collect();
                NonMonomial { tip: columns[c].clone(), relation }
            })
            .collect();

        let mut tip_inverse = BTreeMap::new();
        for m in &monomials {
            tip_inverse.insert(m.clone(), PathComb::basis(m.clone()));
        }
        for nm in &nonmonomials {
            tip_inverse.insert(nm.tip.clone(), nm.relation.clone());
        }
        let tips: BTreeSet<Path> = tip_inverse.keys().cloned().collect();
        let mut tips_by_len: Vec<Path> = tips.iter().cloned().collect();
        tips_by_len.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));

        let mut nontips: Vec<Vec<Path>> = Vec::new();
        for p in q.all_paths()? {
            if tips.iter().any(|t| p.contains(t)) {
                continue;
            }
            if nontips.len() <= p.len() {
                nontips.resize(p.len() + 1, Vec::new());
            }
            nontips[p.len()].push(p);
        }
        while nontips.last().is_some_and(Vec::is_empty) {
            nontips.pop();
        }

        Ok(Self {
            monomials,
            nonmonomials,
            columns,
            input_matrix,
            matrix,
            tips,
            tips_by_len,
            tip_inverse,
            nontips,
        })
    }

    pub fn monomials(&self) -> &BTreeSet<Path> {
        &self.monomials
    }

    pub fn nonmonomials(&self) -> &[NonMonomial] {
        &self.nonmonomials
    }

    /// B4 branches in the fixed order; the columns of the coefficient matrix.
    pub fn columns(&self) -> &[Path] {
        &self.columns
    }

    pub fn input_matrix(&self) -> &Matrix {
        &self.input_matrix
    }

    /// Reduced row echelon form of the coefficient matrix.
    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn tips(&self) -> &BTreeSet<Path> {
        &self.tips
    }

    pub fn is_monomial_tip(&self, t: &Path) -> bool {
        self.monomials.contains(t)
    }

    /// The relation with tip `t`; for a monomial tip this is `t` itself.
    pub fn tip_inverse(&self, t: &Path) -> Option<&PathComb> {
        self.tip_inverse.get(t)
    }

    /// `c(p)`: the coefficient of `p` in the relation whose tip is `t`.
    pub fn coeff(&self, t: &Path, p: &Path) -> Scalar {
        self.tip_inverse.get(t).map_or_else(Scalar::zero, |r| r.coeff(p))
    }

    pub fn contains_tip(&self, p: &Path) -> bool {
        self.tips.iter().any(|t| p.contains(t))
    }

    pub fn is_nontip(&self, p: &Path) -> bool {
        !self.contains_tip(p)
    }

    /// Nontip paths grouped by length; a basis of the algebra.
    pub fn nontips(&self) -> &[Vec<Path>] {
        &self.nontips
    }

    pub fn nontip_counts(&self) -> Vec<usize> {
        self.nontips.iter().map(Vec::len).collect()
    }

    pub fn dimension(&self) -> usize {
        self.nontips.iter().map(Vec::len).sum()
    }

    /// Leftmost occurrence of a tip in `p`, longest tip first at a given position.
    fn first_tip(&self, p: &Path) -> Option<(usize, &Path)> {
        let arrows = p.arrows();
        (0..arrows.len()).find_map(|i| {
            self.tips_by_len
                .iter()
                .find(|t| arrows[i..].starts_with(t.arrows()))
                .map(|t| (i, t))
        })
    }

    /// Rewrites tips away: monomial tips to zero, nonmonomial tips to `f_rho`.
    pub fn normal_form(&self, q: &Quiver, a: &PathComb) -> PathComb {
        let mut out = PathComb::zero();
        let mut work: Vec<(Path, Scalar)> = a.iter().map(|(p, c)| (p.clone(), c.clone())).collect();
        while let Some((p, c)) = work.pop() {
            let Some((i, t)) = self.first_tip(&p) else {
                out.add_term(p, c);
                continue;
            };
            if self.monomials.contains(t) {
                continue;
            }
            let u = q.subpath(&p, 0, i);
            let v = q.subpath(&p, i + t.len(), p.len());
            let f = &self.tip_inverse[t];
            for (s, x) in f.iter() {
                if s == t {
                    continue;
                }
                let w = u.then(s).and_then(|us| us.then(&v)).expect("parallel rewrite composes");
                work.push((w, -(x * &c)));
            }
        }
        out
    }

    pub fn normal_form_path(&self, q: &Quiver, p: &Path) -> PathComb {
        self.normal_form(q, &PathComb::basis(p.clone()))
    }

    /// Product in the algebra, in normal form.
    pub fn mul(&self, q: &Quiver, a: &PathComb, b: &PathComb) -> PathComb {
        self.normal_form(q, &lincomb_mul(a, b))
    }
}

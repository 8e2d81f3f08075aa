use std::cell::RefCell;
use std::collections::BTreeMap;

use serde::Serialize;

use super::matching::{role, Role};
use crate::algebra::ToupieAlgebra;
use crate::error::Result;
use crate::lincomb::LinComb;
use crate::presentation::{Path, PathComb};
use crate::scalar::{self, Scalar};
use crate::word::Word;

/// A basis element `l (x) [w] (x) r` of the two-sided bar resolution.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Bimod {
    pub left: Path,
    pub word: Word,
    pub right: Path,
}

pub type BimodComb = LinComb<Bimod>;

impl Bimod {
    /// `1 (x) [w] (x) 1`.
    pub fn unit(word: Word) -> Self {
        Self { left: Path::trivial(word.source()), right: Path::trivial(word.target()), word }
    }

    pub fn has_trivial_coefficients(&self) -> bool {
        self.left.is_trivial() && self.right.is_trivial()
    }
}

/// Result of the resolution checks up to some homological degree.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ResolutionReport {
    pub max_degree: usize,
    pub betti: Vec<usize>,
    pub d_squared_zero: bool,
    pub augmentation: bool,
    pub minimal: bool,
    pub d1_formula: bool,
    pub d2_formula: bool,
    pub failures: Vec<String>,
}

impl ResolutionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// The minimal two-sided resolution, with differentials obtained from the
/// reduced bar resolution by reducing along the Morse matching.
pub struct Resolution<'a> {
    alg: &'a ToupieAlgebra,
    memo: RefCell<BTreeMap<Word, BimodComb>>,
}

impl<'a> Resolution<'a> {
    pub fn new(alg: &'a ToupieAlgebra) -> Self {
        Self { alg, memo: RefCell::default() }
    }

    /// `l * x * r` with products taken in the algebra.
    fn act(&self, l: &PathComb, x: &BimodComb, r: &PathComb) -> BimodComb {
        let mut out = BimodComb::zero();
        for (b, c) in x.iter() {
            let left = self.alg.mul(l, &PathComb::basis(b.left.clone()));
            let right = self.alg.mul(&PathComb::basis(b.right.clone()), r);
            for (lp, lc) in left.iter() {
                for (rp, rc) in right.iter() {
                    let key = Bimod { left: lp.clone(), word: b.word.clone(), right: rp.clone() };
                    out.add_term(key, c * lc * rc);
                }
            }
        }
        out
    }

    fn path_comb(p: &Path) -> PathComb {
        PathComb::basis(p.clone())
    }

    /// Bar resolution differential on `1 (x) [w] (x) 1`.
    pub fn bar(&self, w: &Word) -> BimodComb {
        let mut out = BimodComb::zero();
        if w.is_vertex() {
            return out;
        }
        let letters = w.letters();
        let n = letters.len();
        let rest = if n == 1 { Word::vertex(w.target()) } else { w.suffix(1) };
        let front = if n == 1 { Word::vertex(w.source()) } else { w.prefix(n - 1) };
        out.add_term(Bimod { left: letters[0].clone(), right: Path::trivial(w.target()), word: rest }, scalar::one());
        for (p, c) in super::bar::bar_differential(self.alg, w).iter() {
            out.add_term(Bimod::unit(p.clone()), c.clone());
        }
        out.add_term(
            Bimod { left: Path::trivial(w.source()), right: letters[n - 1].clone(), word: front },
            scalar::sign(n as i64),
        );
        out
    }

    /// Projection onto the critical cells, extended bilinearly.
    fn project(&self, w: &Word) -> Result<BimodComb> {
        if let Some(v) = self.memo.borrow().get(w) {
            return Ok(v.clone());
        }
        let out = if w.is_vertex() {
            BimodComb::basis(Bimod::unit(w.clone()))
        } else {
            match role(self.alg, w)? {
                Role::Critical => BimodComb::basis(Bimod::unit(w.clone())),
                Role::Upper { .. } => BimodComb::zero(),
                Role::Lower { partner, weight } => {
                    let mut thick = self.bar(&partner);
                    thick.add_term(Bimod::unit(w.clone()), -weight.clone());
                    self.project_lin(&thick)?.scaled(&(-scalar::one() / weight))
                }
            }
        };
        self.memo.borrow_mut().insert(w.clone(), out.clone());
        Ok(out)
    }

    fn project_lin(&self, x: &BimodComb) -> Result<BimodComb> {
        let mut out = BimodComb::zero();
        for (b, c) in x.iter() {
            let inner = self.project(&b.word)?;
            out.add_scaled(&self.act(&Self::path_comb(&b.left), &inner, &Self::path_comb(&b.right)), c);
        }
        Ok(out)
    }

    /// `d_n` on a chain, as an element of the previous term.
    pub fn differential(&self, chain: &Word) -> Result<BimodComb> {
        self.project_lin(&self.bar(chain))
    }

    /// Extends `d` bilinearly.
    pub fn differential_lin(&self, x: &BimodComb) -> Result<BimodComb> {
        let mut out = BimodComb::zero();
        for (b, c) in x.iter() {
            let d = self.differential(&b.word)?;
            out.add_scaled(&self.act(&Self::path_comb(&b.left), &d, &Self::path_comb(&b.right)), c);
        }
        Ok(out)
    }

    /// `d_2` from the support of the relation behind the tip of a 1-chain:
    /// every way to write a support path as `p1 a p3` with `a` an arrow.
    pub fn d2_expected(&self, chain: &Word) -> BimodComb {
        let q = self.alg.quiver();
        let g = self.alg.groebner();
        let tip = chain.path();
        let support = g.tip_inverse(&tip).cloned().unwrap_or_else(|| PathComb::basis(tip));
        let mut out = BimodComb::zero();
        for (p, c) in support.iter() {
            for k in 0..p.len() {
                let key = Bimod {
                    left: q.subpath(p, 0, k),
                    word: Word::letter(q.subpath(p, k, k + 1)),
                    right: q.subpath(p, k + 1, p.len()),
                };
                out.add_term(key, c.clone());
            }
        }
        out
    }

    /// `d_1([a]) = a (x) 1 - 1 (x) a`.
    pub fn d1_expected(&self, chain: &Word) -> BimodComb {
        let a = &chain.letters()[0];
        let mut out = BimodComb::zero();
        out.add_term(
            Bimod { left: a.clone(), word: Word::vertex(a.target()), right: Path::trivial(a.target()) },
            scalar::one(),
        );
        out.add_term(
            Bimod { left: Path::trivial(a.source()), word: Word::vertex(a.source()), right: a.clone() },
            -scalar::one(),
        );
        out
    }

    pub fn fmt(&self, x: &BimodComb) -> String {
        let q = self.alg.quiver();
        let side = |p: &Path| if p.is_trivial() { "1".to_string() } else { q.fmt_path(p) };
        let terms: Vec<(String, Scalar)> = x
            .iter()
            .map(|(b, c)| (format!("{} ⊗ {} ⊗ {}", side(&b.left), self.alg.fmt_word(&b.word), side(&b.right)), c.clone()))
            .collect();
        crate::presentation::fmt_terms(&terms)
    }

    /// Runs every check for chains of homological degree `1..=max_degree`.
    pub fn verify(&self, max_degree: usize) -> Result<ResolutionReport> {
        let alg = self.alg;
        let mut r = ResolutionReport {
            max_degree,
            betti: alg.betti(max_degree),
            d_squared_zero: true,
            augmentation: true,
            minimal: true,
            d1_formula: true,
            d2_formula: true,
            failures: Vec::new(),
        };
        for n in 1..=max_degree {
            for c in alg.chains().of_index(n as isize - 1) {
                let d = self.differential(&c)?;
                let name = alg.fmt_word(&c);
                if d.support().any(Bimod::has_trivial_coefficients) {
                    r.minimal = false;
                    r.failures.push(format!("d{n}({name}) has a term with trivial coefficients"));
                }
                if !self.differential_lin(&d)?.is_zero() {
                    r.d_squared_zero = false;
                    r.failures.push(format!("d{}d{n}({name}) != 0", n - 1));
                }
                if n == 1 {
                    let mu: PathComb = d.iter().fold(PathComb::zero(), |mut acc, (b, k)| {
                        acc.add_scaled(&alg.mul_paths(&b.left, &b.right), k);
                        acc
                    });
                    if !mu.is_zero() {
                        r.augmentation = false;
                        r.failures.push(format!("mu d1({name}) != 0"));
                    }
                    if d != self.d1_expected(&c) {
                        r.d1_formula = false;
                        r.failures.push(format!("d1({name}) differs from a ⊗ 1 - 1 ⊗ a"));
                    }
                }
                if n == 2 && d != self.d2_expected(&c) {
                    r.d2_formula = false;
                    r.failures.push(format!("d2({name}) differs from the support expansion"));
                }
            }
        }
        Ok(r)
    }
}

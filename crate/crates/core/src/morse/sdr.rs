use std::cell::RefCell;
use std::collections::BTreeMap;

use super::bar::{bar_cells, bar_differential, is_attached, top_degree, WordComb};
use super::matching::MorseMatching;
use super::oracle::BasedComplex;
use crate::algebra::ToupieAlgebra;
use crate::error::{Error, Result};
use crate::presentation::Path;
use crate::scalar::{self, Scalar};
use crate::word::Word;

/// The three maps of a strong deformation retract between the reduced bar
/// construction and the chain complex.
pub trait SdrMaps {
    fn h(&self, w: &Word) -> WordComb;
    fn p(&self, w: &Word) -> WordComb;
    fn i(&self, c: &Word) -> WordComb;

    fn h_lin(&self, x: &WordComb) -> WordComb {
        x.map_linear(|w| self.h(w))
    }

    fn p_lin(&self, x: &WordComb) -> WordComb {
        x.map_linear(|w| self.p(w))
    }

    fn i_lin(&self, x: &WordComb) -> WordComb {
        x.map_linear(|w| self.i(w))
    }
}

/// Closed-form maps computed from the words alone.
pub struct ClosedSdr<'a> {
    alg: &'a ToupieAlgebra,
    h_memo: RefCell<BTreeMap<Word, WordComb>>,
    p_memo: RefCell<BTreeMap<Word, WordComb>>,
}

/// Where a non-chain cell gets split: letter `k` into `left | right`.
struct Split {
    k: usize,
    left: Path,
    right: Path,
}

impl<'a> ClosedSdr<'a> {
    pub fn new(alg: &'a ToupieAlgebra) -> Self {
        Self { alg, h_memo: RefCell::default(), p_memo: RefCell::default() }
    }

    /// For a cell whose longest chain prefix ends at letter `j`, the letter
    /// `j+1` is cut right after its shortest prefix `w'` with `w_j w'` in the
    /// tip ideal (the first arrow when `j = -1`). `None` when the cell is a
    /// chain or no proper prefix qualifies.
    fn split_point(&self, w: &Word) -> Option<Split> {
        let q = self.alg.quiver();
        let g = self.alg.groebner();
        let letters = w.letters();
        let j = self.alg.chains().check(w).prefix_index;
        if j + 1 == letters.len() as isize {
            return None;
        }
        let k = (j + 1) as usize;
        let u = &letters[k];
        let cut = if j < 0 {
            1
        } else {
            let prev = &letters[k - 1];
            (1..=u.len()).find(|&m| g.contains_tip(&prev.then(&q.subpath(u, 0, m)).expect("composable")))?
        };
        if cut >= u.len() {
            return None;
        }
        let (left, right) = q.split_at(u, cut);
        Some(Split { k, left, right })
    }

    /// The sum over merges of `y` other than position `skip`, signed as in
    /// the bar differential.
    fn other_merges(&self, y: &Word, skip: usize) -> WordComb {
        let letters = y.letters();
        let mut out = WordComb::zero();
        for m in (0..letters.len() - 1).filter(|&m| m != skip) {
            let sign = scalar::sign(m as i64 + 1);
            for (p, c) in self.alg.mul_paths(&letters[m], &letters[m + 1]).iter() {
                out.add_term(y.merged(m, p.clone()), &sign * c);
            }
        }
        out
    }

    fn recurse(&self, w: &Word, memo: &RefCell<BTreeMap<Word, WordComb>>, keep_split: bool) -> WordComb {
        if let Some(v) = memo.borrow().get(w) {
            return v.clone();
        }
        let out = match self.split_point(w) {
            None if !keep_split && self.alg.chains().is_chain(w) => WordComb::basis(w.clone()),
            None => WordComb::zero(),
            Some(Split { k, left, right }) => {
                let y = w.split(k, left, right);
                let mut acc = if keep_split { WordComb::basis(y.clone()) } else { WordComb::zero() };
                for (z, c) in self.other_merges(&y, k).iter() {
                    acc.add_scaled(&self.recurse(z, memo, keep_split), c);
                }
                acc.scaled(&scalar::sign(k as i64))
            }
        };
        memo.borrow_mut().insert(w.clone(), out.clone());
        out
    }

    /// Iterated splitting for attached terms: returns `(sum of gamma^i, Gamma^n)`.
    fn lemma(&self, w: &Word) -> Result<(WordComb, WordComb)> {
        if !is_attached(self.alg, w) {
            return Err(Error::NotAttached(self.alg.fmt_word(w)));
        }
        let mut h = WordComb::zero();
        let mut gamma = WordComb::basis(w.clone());
        let mut p = WordComb::zero();
        while !gamma.is_zero() {
            let mut next = WordComb::zero();
            for (x, c) in gamma.iter() {
                let Some(Split { k, left, right }) = self.split_point(x) else {
                    if self.alg.chains().is_chain(x) {
                        p.add_term(x.clone(), c.clone());
                    }
                    continue;
                };
                let y = x.split(k, left, right.clone());
                h.add_term(y.clone(), c * scalar::sign(k as i64));
                if let Some(after) = x.letters().get(k + 1) {
                    for (m, d) in self.alg.mul_paths(&right, after).iter() {
                        next.add_term(y.merged(k + 1, m.clone()), c * d);
                    }
                }
            }
            gamma = next;
        }
        Ok((h, p))
    }

    /// `h` for attached terms by iterated splitting.
    pub fn h_attached(&self, w: &Word) -> Result<WordComb> {
        Ok(self.lemma(w)?.0)
    }

    /// `p` for attached terms: the final merged term.
    pub fn p_attached(&self, w: &Word) -> Result<WordComb> {
        Ok(self.lemma(w)?.1)
    }
}

impl SdrMaps for ClosedSdr<'_> {
    fn h(&self, w: &Word) -> WordComb {
        self.recurse(w, &self.h_memo, true)
    }

    /// Attached terms go through the iterated splitting; others through the
    /// structural recursion.
    fn p(&self, w: &Word) -> WordComb {
        match self.p_attached(w) {
            Ok(v) => v,
            Err(_) => self.recurse(w, &self.p_memo, false),
        }
    }

    fn i(&self, c: &Word) -> WordComb {
        let g = self.alg.groebner();
        let q = self.alg.quiver();
        if c.letters().len() == 2 && self.alg.chains().is_chain(c) {
            let tip = c.path();
            if let Some(rho) = g.tip_inverse(&tip).filter(|_| !g.is_monomial_tip(&tip)) {
                return rho
                    .iter()
                    .map(|(p, coeff)| {
                        let (a, rest) = q.split_at(p, 1);
                        (Word::new(vec![a, rest]), coeff.clone())
                    })
                    .collect();
            }
        }
        WordComb::basis(c.clone())
    }
}

/// The maps read off from zigzag paths in the matched bar complex.
pub struct OracleSdr {
    complex: BasedComplex<Word>,
}

impl OracleSdr {
    /// Uses every bar cell; toupie algebras have finitely many.
    pub fn build(alg: &ToupieAlgebra) -> Result<Self> {
        let top = top_degree(alg);
        let matching = MorseMatching::build(alg, top)?;
        let cells = bar_cells(alg, top);
        let all = cells.iter().enumerate().flat_map(|(d, layer)| layer.iter().map(move |w| (w.clone(), d + 1)));
        let pairs: Vec<(Word, Word)> = matching.pairs().map(|(l, u, _)| (l.clone(), u.clone())).collect();
        let complex = BasedComplex::new(all, |w| bar_differential(alg, w), pairs)?;
        for (l, u, w) in matching.pairs() {
            let entry: Scalar = complex.boundary(u).coeff(l);
            if &entry != w {
                return Err(Error::InvalidMatching(format!("weight mismatch on {}", alg.fmt_word(l))));
            }
        }
        Ok(Self { complex })
    }

    pub fn complex(&self) -> &BasedComplex<Word> {
        &self.complex
    }

    pub fn morse_differential(&self, c: &Word) -> WordComb {
        self.complex.morse_differential(c)
    }
}

impl SdrMaps for OracleSdr {
    fn h(&self, w: &Word) -> WordComb {
        self.complex.h(w)
    }

    fn p(&self, w: &Word) -> WordComb {
        self.complex.p(w)
    }

    fn i(&self, c: &Word) -> WordComb {
        self.complex.i(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::scalar::int;

    #[test]
    fn lemma_examples() {
        let a = examples::e1();
        let s = ClosedSdr::new(&a);
        let w = |l: &[&str]| a.word(l);
        assert_eq!(s.h_attached(&w(&["c1.c2"])).unwrap(), WordComb::basis(w(&["c1", "c2"])));
        assert!(s.h_attached(&w(&["b1", "b2"])).unwrap().is_zero());
        assert_eq!(s.p(&w(&["b1", "b2"])), WordComb::basis(w(&["b1", "b2"])));
        assert!(s.p(&w(&["c1", "c2"])).is_zero());
        assert!(s.p(&w(&["c1.c2"])).is_zero());
        assert_eq!(
            s.i(&w(&["b1", "b2"])),
            WordComb::basis(w(&["b1", "b2"])) - WordComb::basis(w(&["c1", "c2"]))
        );
        assert_eq!(
            s.i(&w(&["a1", "a2.a3"])),
            WordComb::basis(w(&["a1", "a2.a3"])) - WordComb::basis(w(&["c1", "c2"]))
        );
        assert_eq!(s.i(&w(&["a1"])), WordComb::basis(w(&["a1"])));
        assert!(matches!(s.h_attached(&w(&["a1", "a2"])), Err(Error::NotAttached(_))));
    }

    #[test]
    fn cubic_monomial_split() {
        let a = examples::algebra(examples::CUBIC_MONOMIAL);
        let s = ClosedSdr::new(&a);
        let h = s.h_attached(&a.word(&["d1.d2", "d3"])).unwrap();
        assert_eq!(h, WordComb::term(a.word(&["d1", "d2", "d3"]), int(1)));
    }

    #[test]
    fn closed_matches_oracle() {
        for text in [examples::E1, examples::QUADRATIC_MONOMIAL, examples::CUBIC_MONOMIAL, examples::OVERLAP] {
            let a = examples::algebra(text);
            let closed = ClosedSdr::new(&a);
            let oracle = OracleSdr::build(&a).unwrap();
            for layer in bar_cells(&a, top_degree(&a)) {
                for w in &layer {
                    assert_eq!(closed.h(w), oracle.h(w), "h {}", a.fmt_word(w));
                    assert_eq!(closed.p(w), oracle.p(w), "p {}", a.fmt_word(w));
                    if is_attached(&a, w) {
                        assert_eq!(closed.h_attached(w).unwrap(), oracle.h(w), "lemma h {}", a.fmt_word(w));
                    }
                    if a.chains().is_chain(w) {
                        assert_eq!(closed.i(w), oracle.i(w), "i {}", a.fmt_word(w));
                    }
                }
            }
        }
    }
}

use std::collections::BTreeMap;

use super::bar::bar_cells;
use crate::algebra::ToupieAlgebra;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::word::Word;

/// Position of a bar cell in the Morse matching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Role {
    Critical,
    /// Matched with a cell one degree up; `weight` is the differential
    /// coefficient of `partner` on this cell.
    Lower { partner: Word, weight: Scalar },
    /// Matched with a cell one degree down.
    Upper { partner: Word, weight: Scalar },
}

/// Classifies `w` through the V-set definition: with `j` the chain index of
/// the longest chain prefix, `w` is lower-matched when splitting letter `j+1`
/// raises the chain index to `j+1`, and upper-matched when merging letters `j`
/// and `j+1` drops it to `j-1`.
pub fn role(alg: &ToupieAlgebra, w: &Word) -> Result<Role> {
    let chains = alg.chains();
    let q = alg.quiver();
    let n = w.letters().len();
    let j = chains.check(w).prefix_index;
    if j == n as isize - 1 {
        return Ok(Role::Critical);
    }
    let k = (j + 1) as usize;
    let letter = &w.letters()[k];
    for cut in 1..letter.len() {
        let (left, right) = q.split_at(letter, cut);
        let y = w.split(k, left, right);
        if chains.check(&y).prefix_index == j + 1 {
            return Ok(Role::Lower { partner: y, weight: scalar::sign(k as i64 + 1) });
        }
    }
    if j >= 0 {
        let m = j as usize;
        if let Some(prod) = w.letters()[m].then(&w.letters()[m + 1]) {
            if alg.is_nontip(&prod) {
                let x = w.merged(m, prod);
                if chains.check(&x).prefix_index == j - 1 {
                    return Ok(Role::Upper { partner: x, weight: scalar::sign(m as i64 + 1) });
                }
            }
        }
    }
    Err(Error::InvalidMatching(format!("cell {} is neither critical nor matched", alg.fmt_word(w))))
}

/// The matching restricted to bar cells of degree at most `max_degree`.
#[derive(Clone, Debug)]
pub struct MorseMatching {
    max_degree: usize,
    /// lower cell -> (upper cell, weight)
    pairs: BTreeMap<Word, (Word, Scalar)>,
    critical: Vec<Vec<Word>>,
}

impl MorseMatching {
    /// Classifies every cell and checks that roles are mutually consistent
    /// and that the critical cells are exactly the chains.
    pub fn build(alg: &ToupieAlgebra, max_degree: usize) -> Result<Self> {
        let cells = bar_cells(alg, max_degree + 1);
        let mut pairs = BTreeMap::new();
        let mut critical = vec![Vec::new(); max_degree];
        for (d, layer) in cells.iter().enumerate() {
            for w in layer {
                match role(alg, w)? {
                    Role::Critical => {
                        if d < max_degree {
                            critical[d].push(w.clone());
                        }
                    }
                    Role::Lower { partner, weight } => {
                        match role(alg, &partner)? {
                            Role::Upper { partner: back, .. } if &back == w => {}
                            _ => {
                                return Err(Error::InvalidMatching(format!(
                                    "{} does not point back to {}",
                                    alg.fmt_word(&partner),
                                    alg.fmt_word(w)
                                )))
                            }
                        }
                        pairs.insert(w.clone(), (partner, weight));
                    }
                    Role::Upper { partner, .. } => {
                        if !matches!(role(alg, &partner)?, Role::Lower { partner: ref back, .. } if back == w) {
                            return Err(Error::InvalidMatching(format!(
                                "{} does not point back to {}",
                                alg.fmt_word(&partner),
                                alg.fmt_word(w)
                            )));
                        }
                    }
                }
            }
        }
        for (d, layer) in critical.iter().enumerate() {
            let expected = alg.chains().of_index(d as isize);
            let mut got = layer.clone();
            got.sort_by_key(|w| w.path());
            if got != expected {
                return Err(Error::InvalidMatching(format!(
                    "critical cells in degree {} differ from the {}-chains",
                    d + 1,
                    d
                )));
            }
        }
        Ok(Self { max_degree, pairs, critical })
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    /// Matched pairs `(lower, upper, weight)`.
    pub fn pairs(&self) -> impl Iterator<Item = (&Word, &Word, &Scalar)> {
        self.pairs.iter().map(|(l, (u, w))| (l, u, w))
    }

    pub fn partner_up(&self, lower: &Word) -> Option<&Word> {
        self.pairs.get(lower).map(|(u, _)| u)
    }

    /// Critical cells of bar degree `degree >= 1`.
    pub fn critical(&self, degree: usize) -> &[Word] {
        degree.checked_sub(1).and_then(|d| self.critical.get(d)).map_or(&[], Vec::as_slice)
    }
}

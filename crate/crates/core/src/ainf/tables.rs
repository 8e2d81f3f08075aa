use std::collections::BTreeMap;

use serde::Serialize;

use super::tensor::{composable, total_degree};
use crate::algebra::ToupieAlgebra;
use crate::morse::{TensorComb, WordComb};
use crate::scalar::{self, Scalar};
use crate::word::{Tensor, Word};

/// `N' = sum_{i>=2} (|c_1| + ... + |c_{i-1}|) |f_i|` with `f_i = c_i^v`.
pub fn pairing_exponent(cs: &[Word]) -> i64 {
    let mut before = 0usize;
    let mut e = 0usize;
    for c in cs {
        e += before * c.degree();
        before += c.degree();
    }
    e as i64
}

/// `<f_1 (x) ... (x) f_n, c_1 (x) ... (x) c_n>` for dual-basis functionals.
pub fn dual_pairing(duals: &[Word], word: &[Word]) -> Scalar {
    if duals == word {
        scalar::sign(pairing_exponent(word))
    } else {
        scalar::zero()
    }
}

/// `Delta_n` on every chain for `2 <= n <= max_arity`.
#[derive(Clone, Debug)]
pub struct CoalgebraTable {
    max_arity: usize,
    entries: BTreeMap<usize, BTreeMap<Word, TensorComb>>,
}

impl CoalgebraTable {
    pub fn build(alg: &ToupieAlgebra, max_arity: usize, delta: impl Fn(usize, &Word) -> TensorComb) -> Self {
        let mut entries = BTreeMap::new();
        for n in 2..=max_arity {
            let mut row = BTreeMap::new();
            for c in alg.chains().all() {
                let d = delta(n, c);
                if !d.is_zero() {
                    row.insert(c.clone(), d);
                }
            }
            entries.insert(n, row);
        }
        Self { max_arity, entries }
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    /// `Delta_n(c)`; zero outside the table and for `n = 1`.
    pub fn get(&self, n: usize, c: &Word) -> TensorComb {
        self.entries.get(&n).and_then(|r| r.get(c)).cloned().unwrap_or_default()
    }

    pub fn arity(&self, n: usize) -> impl Iterator<Item = (&Word, &TensorComb)> {
        self.entries.get(&n).into_iter().flatten()
    }

    pub fn set(&mut self, n: usize, c: Word, v: TensorComb) {
        self.entries.entry(n).or_default().insert(c, v);
    }

    pub fn to_json(&self, alg: &ToupieAlgebra) -> TableJson {
        let mut arities = BTreeMap::new();
        for (&n, row) in &self.entries {
            let rows = row
                .iter()
                .map(|(c, v)| EntryJson {
                    input: vec![alg.fmt_word(c)],
                    output: v
                        .iter()
                        .map(|(t, k)| TermJson { coeff: scalar::format(k), value: t.iter().map(|w| alg.fmt_word(w)).collect() })
                        .collect(),
                })
                .collect();
            arities.insert(n.to_string(), rows);
        }
        TableJson { kind: "tor-coalgebra", arities }
    }
}

/// `m_n` on tuples of dual chains, stored on the nonzero tuples; a chain
/// `c` stands for its dual `c^v`.
#[derive(Clone, Debug)]
pub struct AlgebraTable {
    max_arity: usize,
    entries: BTreeMap<usize, BTreeMap<Tensor, WordComb>>,
}

impl AlgebraTable {
    /// `m_n(f) = (-1)^{n sum |f_i|} sum_c <D^n f, Delta_n c> c^v`.
    pub fn dualize(tor: &CoalgebraTable) -> Self {
        let mut entries: BTreeMap<usize, BTreeMap<Tensor, WordComb>> = BTreeMap::new();
        for n in 2..=tor.max_arity {
            let row = entries.entry(n).or_default();
            for (c, d) in tor.arity(n) {
                for (t, k) in d.iter() {
                    let sign = scalar::sign((n * total_degree(t)) as i64) * dual_pairing(t, t);
                    row.entry(t.clone()).or_default().add_term(c.clone(), sign * k);
                }
            }
            row.retain(|_, v| !v.is_zero());
        }
        Self { max_arity: tor.max_arity, entries }
    }

    pub fn max_arity(&self) -> usize {
        self.max_arity
    }

    pub fn get(&self, duals: &[Word]) -> WordComb {
        self.entries.get(&duals.len()).and_then(|r| r.get(duals)).cloned().unwrap_or_default()
    }

    pub fn arity(&self, n: usize) -> impl Iterator<Item = (&Tensor, &WordComb)> {
        self.entries.get(&n).into_iter().flatten()
    }

    pub fn set(&mut self, duals: Tensor, v: WordComb) {
        self.entries.entry(duals.len()).or_default().insert(duals, v);
    }

    pub fn to_json(&self, alg: &ToupieAlgebra) -> TableJson {
        let mut arities = BTreeMap::new();
        for (&n, row) in &self.entries {
            let rows = row
                .iter()
                .map(|(t, v)| EntryJson {
                    input: t.iter().map(|w| alg.fmt_word(w)).collect(),
                    output: v
                        .iter()
                        .map(|(c, k)| TermJson { coeff: scalar::format(k), value: vec![alg.fmt_word(c)] })
                        .collect(),
                })
                .collect();
            arities.insert(n.to_string(), rows);
        }
        TableJson { kind: "ext-algebra", arities }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TermJson {
    pub coeff: String,
    pub value: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryJson {
    pub input: Vec<String>,
    pub output: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableJson {
    pub kind: &'static str,
    pub arities: BTreeMap<String, Vec<EntryJson>>,
}

/// Sequences of `n` chains of index at least zero composing end to end.
pub fn composable_tuples(alg: &ToupieAlgebra, n: usize) -> Vec<Tensor> {
    let chains: Vec<&Word> = alg.chains().all().collect();
    let mut out = Vec::new();
    let mut stack: Vec<Tensor> = chains.iter().map(|c| vec![(*c).clone()]).collect();
    while let Some(t) = stack.pop() {
        if t.len() == n {
            out.push(t);
            continue;
        }
        let end = t[t.len() - 1].target();
        for c in chains.iter().filter(|c| c.source() == end) {
            let mut next = t.clone();
            next.push((*c).clone());
            stack.push(next);
        }
    }
    debug_assert!(out.iter().all(|t| composable(t)));
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn pairing_signs() {
        let a = examples::e1();
        let (b1, b2) = (a.word(&["b1"]), a.word(&["b2"]));
        assert_eq!(dual_pairing(&[b1.clone(), b2.clone()], &[b1.clone(), b2.clone()]), scalar::int(-1));
        let c = a.word(&["c1.c2"]);
        assert_eq!(dual_pairing(std::slice::from_ref(&c), std::slice::from_ref(&c)), scalar::one());
        assert_eq!(dual_pairing(&[b1.clone(), b2.clone()], &[b2, b1]), scalar::zero());
    }
}

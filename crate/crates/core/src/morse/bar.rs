use crate::algebra::ToupieAlgebra;
use crate::lincomb::LinComb;
use crate::scalar::{self, Scalar};
use crate::word::{Tensor, Word};

pub type WordComb = LinComb<Word>;
pub type TensorComb = LinComb<Tensor>;

/// `d[a1|...|an] = sum_i (-1)^i [a1|...|a_i a_{i+1}|...|an]`, each merged
/// letter in normal form; terms whose merged letter vanishes drop out.
pub fn bar_differential(alg: &ToupieAlgebra, w: &Word) -> WordComb {
    let letters = w.letters();
    let mut out = WordComb::zero();
    for k in 0..letters.len().saturating_sub(1) {
        let sign = scalar::sign(k as i64 + 1);
        for (p, c) in alg.mul_paths(&letters[k], &letters[k + 1]).iter() {
            out.add_term(w.merged(k, p.clone()), &sign * c);
        }
    }
    out
}

pub fn bar_differential_lin(alg: &ToupieAlgebra, x: &WordComb) -> WordComb {
    x.map_linear(|w| bar_differential(alg, w))
}

/// `sum_i [a1|...|ai] (x) [a_{i+1}|...|an]`.
pub fn delta_prime(w: &Word) -> TensorComb {
    let n = w.letters().len();
    (1..n).map(|i| (vec![w.prefix(i), w.suffix(i)], Scalar::from_integer(1.into()))).collect()
}

/// Every adjacent product `w_{i-1} w_i` lies in the tip ideal.
pub fn is_attached(alg: &ToupieAlgebra, w: &Word) -> bool {
    w.letters().windows(2).all(|p| {
        p[0].then(&p[1]).is_some_and(|uv| alg.groebner().contains_tip(&uv))
    })
}

/// All bar words of degree `1..=max_degree`, grouped by degree (index 0 holds degree 1).
pub fn bar_cells(alg: &ToupieAlgebra, max_degree: usize) -> Vec<Vec<Word>> {
    let q = alg.quiver();
    let mut cells = vec![Vec::new(); max_degree];
    for p in q.all_paths().expect("toupie quivers are acyclic") {
        if p.is_trivial() {
            continue;
        }
        let mut stack: Vec<(usize, Vec<crate::presentation::Path>)> = vec![(0, Vec::new())];
        while let Some((start, letters)) = stack.pop() {
            if start == p.len() {
                let deg = letters.len();
                if deg <= max_degree {
                    cells[deg - 1].push(Word::new(letters));
                }
                continue;
            }
            if letters.len() == max_degree {
                continue;
            }
            for end in start + 1..=p.len() {
                let piece = q.subpath(&p, start, end);
                if !alg.is_nontip(&piece) {
                    break;
                }
                let mut next = letters.clone();
                next.push(piece);
                stack.push((end, next));
            }
        }
    }
    for layer in &mut cells {
        layer.sort();
    }
    cells
}

/// Largest possible bar degree: the length of the longest path.
pub fn top_degree(alg: &ToupieAlgebra) -> usize {
    alg.shape().branches.iter().map(|b| b.len()).max().unwrap_or(0)
}

use crate::morse::{TensorComb, WordComb};
use crate::scalar::{self, Scalar};
use crate::word::{Tensor, Word};

/// `f1 (x) ... (x) fn` applied to a tensor of words, without Koszul signs
/// (all the maps involved have even degree or are applied in degree-zero slots).
pub fn map_each(t: &Tensor, f: impl Fn(&Word) -> WordComb) -> TensorComb {
    let mut acc: Vec<(Tensor, Scalar)> = vec![(Vec::new(), scalar::one())];
    for w in t {
        let image = f(w);
        let mut next = Vec::new();
        for (prefix, c) in &acc {
            for (x, d) in image.iter() {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push((v, c * d));
            }
        }
        acc = next;
        if acc.is_empty() {
            break;
        }
    }
    acc.into_iter().collect()
}

/// `a (x) b` for linear combinations of tensors.
pub fn concat(a: &TensorComb, b: &TensorComb) -> TensorComb {
    let mut out = TensorComb::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            let mut v = x.clone();
            v.extend(y.iter().cloned());
            out.add_term(v, c * d);
        }
    }
    out
}

/// Homological degree: the number of letters.
pub fn degree(w: &Word) -> usize {
    w.degree()
}

pub fn total_degree(ws: &[Word]) -> usize {
    ws.iter().map(degree).sum()
}

/// Whether consecutive words compose end to end.
pub fn composable(ws: &[Word]) -> bool {
    ws.windows(2).all(|p| p[0].target() == p[1].source())
}

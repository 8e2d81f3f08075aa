use crate::algebra::ToupieAlgebra;
use crate::morse::TensorComb;
use crate::scalar;
use crate::word::Word;

/// Whether the chain is `[w0|w1]` with `w0 w1` the tip of a non-monomial relation.
pub fn is_nonmonomial_chain(alg: &ToupieAlgebra, c: &Word) -> bool {
    let g = alg.groebner();
    c.letters().len() == 2 && {
        let p = c.path();
        g.tips().contains(&p) && !g.is_monomial_tip(&p)
    }
}

/// Sign exponent `r1 + sum_{i<n} (n-i) r_i` of a decomposition with indices `rs`.
pub fn decomposition_sign(rs: &[isize]) -> i64 {
    let n = rs.len() as isize;
    let tail: isize = rs[..rs.len() - 1].iter().enumerate().map(|(i, r)| (n - 1 - i as isize) * r).sum();
    (rs[0] + tail) as i64
}

/// The closed-form `Delta_n` on a chain: signed chain decompositions for
/// monomial chains, support paths of length `n` for non-monomial ones.
pub fn closed_delta(alg: &ToupieAlgebra, n: usize, c: &Word) -> TensorComb {
    let mut out = TensorComb::zero();
    if n < 2 || c.is_vertex() {
        return out;
    }
    let q = alg.quiver();
    if is_nonmonomial_chain(alg, c) {
        let rho = alg.groebner().tip_inverse(&c.path()).expect("tip of a relation");
        for (p, coeff) in rho.iter().filter(|(p, _)| p.len() == n) {
            let t = (0..n).map(|k| Word::letter(q.subpath(p, k, k + 1))).collect();
            out.add_term(t, coeff.clone());
        }
        return out;
    }
    for parts in alg.chains().decompositions(q, c, n) {
        let rs: Vec<isize> = parts.iter().map(Word::index).collect();
        out.add_term(parts, scalar::sign(decomposition_sign(&rs)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::scalar::int;

    #[test]
    fn e1_examples() {
        let a = examples::e1();
        let u = a.word(&["a1", "a2.a3"]);
        let t = |ls: &[&str]| ls.iter().map(|l| a.word(&[l])).collect::<Vec<_>>();
        assert_eq!(closed_delta(&a, 2, &u), TensorComb::term(t(&["c1", "c2"]), int(-1)));
        assert_eq!(closed_delta(&a, 3, &u), TensorComb::term(t(&["a1", "a2", "a3"]), int(1)));
        assert!(closed_delta(&a, 4, &u).is_zero());
        assert!(closed_delta(&a, 2, &a.word(&["a1"])).is_zero());
    }

    #[test]
    fn monomial_two_fold() {
        let m = examples::algebra(examples::QUADRATIC_MONOMIAL);
        let d = closed_delta(&m, 2, &m.word(&["d1", "d2", "d3"]));
        let mut expected = TensorComb::basis(vec![m.word(&["d1"]), m.word(&["d2", "d3"])]);
        expected.add_term(vec![m.word(&["d1", "d2"]), m.word(&["d3"])], int(1));
        assert_eq!(d, expected);
    }

    #[test]
    fn sign_exponent() {
        assert_eq!(decomposition_sign(&[0, 1]), 0);
        assert_eq!(decomposition_sign(&[1, 0, 0]), 3);
    }
}

mod closed;
mod stasheff;
mod tables;
mod tensor;
mod transfer;

pub use closed::{closed_delta, decomposition_sign, is_nonmonomial_chain};
pub use stasheff::{algebra_identity, check_algebra, check_coalgebra, coalgebra_identity, StasheffReport};
pub use tables::{composable_tuples, dual_pairing, pairing_exponent, AlgebraTable, CoalgebraTable, TableJson};
pub use transfer::Transfer;

use crate::algebra::ToupieAlgebra;
use crate::error::Result;
use crate::morse::{OracleSdr, TensorComb, WordComb};
use crate::scalar;
use crate::word::Word;

/// `Delta_n(c)` by homotopy transfer along the zigzag maps.
pub fn transfer_delta(alg: &ToupieAlgebra, n: usize, c: &Word) -> Result<TensorComb> {
    let sdr = OracleSdr::build(alg)?;
    Ok(Transfer::new(alg, &sdr).delta(n, c))
}

/// The Tor coalgebra table from the closed form.
pub fn tor_table(alg: &ToupieAlgebra, max_arity: usize) -> CoalgebraTable {
    CoalgebraTable::build(alg, max_arity, |n, c| closed_delta(alg, n, c))
}

/// The Tor coalgebra table by transfer.
pub fn tor_table_transfer(alg: &ToupieAlgebra, max_arity: usize) -> Result<CoalgebraTable> {
    let sdr = OracleSdr::build(alg)?;
    let t = Transfer::new(alg, &sdr);
    Ok(CoalgebraTable::build(alg, max_arity, |n, c| t.delta(n, c)))
}

/// The Ext algebra table, dual to the closed-form Tor table.
pub fn ext_table(alg: &ToupieAlgebra, max_arity: usize) -> AlgebraTable {
    AlgebraTable::dualize(&tor_table(alg, max_arity))
}

/// `M = r1 + sum_i (n+i+1) r_i + sum_{i<j} r_i r_j + n(n+1)/2`.
pub fn corollary_exponent(rs: &[isize]) -> i64 {
    let n = rs.len() as isize;
    let mut m = rs[0] + n * (n + 1) / 2;
    for (i, r) in rs.iter().enumerate() {
        m += (n + i as isize + 2) * r;
        m += r * rs[i + 1..].iter().sum::<isize>();
    }
    m as i64
}

/// The Corollary's `m_n` on a tuple of duals of chains.
pub fn corollary_product(alg: &ToupieAlgebra, duals: &[Word]) -> WordComb {
    let n = duals.len();
    let mut out = WordComb::zero();
    if n < 2 || !tensor::composable(duals) || duals.iter().any(Word::is_vertex) {
        return out;
    }
    let q = alg.quiver();
    let path = duals.iter().skip(1).fold(duals[0].path(), |p, w| p.then(&w.path()).expect("composable"));
    let rs: Vec<isize> = duals.iter().map(Word::index).collect();
    if let Some(c) = alg.chains().with_path(&path) {
        if !is_nonmonomial_chain(alg, c) && c.index() == rs.iter().sum::<isize>() + 1 {
            let pieces = alg.chains().decompositions(q, c, n);
            if pieces.iter().any(|p| p == duals) {
                out.add_term(c.clone(), scalar::sign(corollary_exponent(&rs)));
                return out;
            }
        }
    }
    if rs.iter().all(|&r| r == 0) {
        let g = alg.groebner();
        for rel in g.nonmonomials() {
            let coeff = rel.relation.coeff(&path);
            if coeff != scalar::zero() {
                let (w0, w1) = q.split_at(&rel.tip, 1);
                out.add_term(Word::new(vec![w0, w1]), scalar::sign((n * (n + 1) / 2) as i64) * coeff);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;
    use crate::scalar::int;

    fn w(a: &ToupieAlgebra, ls: &[&str]) -> Vec<Word> {
        ls.iter().map(|l| a.word(&l.split(' ').collect::<Vec<_>>())).collect()
    }

    #[test]
    fn e1_transfer_examples() {
        let a = examples::e1();
        let v = a.word(&["b1", "b2"]);
        let u = a.word(&["a1", "a2.a3"]);
        let mut expected = TensorComb::basis(w(&a, &["b1", "b2"]));
        expected.add_term(w(&a, &["c1", "c2"]), int(-1));
        assert_eq!(transfer_delta(&a, 2, &v).unwrap(), expected);
        assert_eq!(transfer_delta(&a, 3, &u).unwrap(), TensorComb::basis(w(&a, &["a1", "a2", "a3"])));
        assert!(transfer_delta(&a, 2, &a.word(&["a1"])).unwrap().is_zero());
    }

    #[test]
    fn closed_equals_transfer() {
        for text in [examples::E1, examples::QUADRATIC_MONOMIAL, examples::CUBIC_MONOMIAL, examples::OVERLAP] {
            let a = examples::algebra(text);
            let closed = tor_table(&a, 5);
            let oracle = tor_table_transfer(&a, 5).unwrap();
            for n in 2..=5 {
                for c in a.chains().all() {
                    assert_eq!(closed.get(n, c), oracle.get(n, c), "n={n} {}", a.fmt_word(c));
                }
            }
        }
    }

    #[test]
    fn e1_products() {
        let a = examples::e1();
        let ext = ext_table(&a, 5);
        let u = a.word(&["a1", "a2.a3"]);
        let v = a.word(&["b1", "b2"]);
        assert_eq!(ext.get(&w(&a, &["b1", "b2"])), WordComb::term(v.clone(), int(-1)));
        assert_eq!(ext.get(&w(&a, &["c1", "c2"])), WordComb::basis(u.clone()) + WordComb::basis(v));
        assert_eq!(ext.get(&w(&a, &["a1", "a2", "a3"])), WordComb::basis(u));
    }

    #[test]
    fn stasheff_holds() {
        for text in [examples::E1, examples::QUADRATIC_MONOMIAL, examples::CUBIC_MONOMIAL, examples::OVERLAP] {
            let a = examples::algebra(text);
            let tor = tor_table(&a, 5);
            assert!(check_coalgebra(&a, &tor, 5).passed());
            let ext = AlgebraTable::dualize(&tor);
            let r = check_algebra(&a, &ext, 5);
            assert!(r.passed(), "{:?}", r.failures);
        }
    }

    #[test]
    fn flipped_product_breaks_associativity() {
        let a = examples::algebra(examples::QUADRATIC_MONOMIAL);
        let mut ext = ext_table(&a, 4);
        let pair = w(&a, &["d1", "d2"]);
        let flipped = -ext.get(&pair);
        ext.set(pair, flipped);
        let r = check_algebra(&a, &ext, 4);
        assert!(r.failures.iter().any(|(n, _)| *n == 3));
    }

    #[test]
    fn corollary_agrees() {
        for text in [examples::E1, examples::QUADRATIC_MONOMIAL, examples::CUBIC_MONOMIAL, examples::OVERLAP] {
            let a = examples::algebra(text);
            let ext = ext_table(&a, 5);
            for n in 2..=5 {
                for f in composable_tuples(&a, n) {
                    assert_eq!(ext.get(&f), corollary_product(&a, &f), "{}", crate::word::fmt_tensor(a.quiver(), &f));
                }
            }
        }
    }
}

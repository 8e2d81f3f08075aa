use std::cell::RefCell;
use std::collections::BTreeMap;

use super::tensor::{concat, degree, map_each};
use crate::algebra::ToupieAlgebra;
use crate::morse::{delta_prime, SdrMaps, TensorComb};
use crate::scalar::{self, Scalar};
use crate::word::Word;

/// Homotopy transfer of the diagonal on the bar construction to the chains:
/// `Delta_n = p^n Delta_n^B i` with
/// `Delta_n^B = sum_{s+t=n} (-1)^{s(t+1)} (F_s (x) F_t) Delta'`,
/// `F_1 = id`, `F_k = Delta_k^B h`.
pub struct Transfer<'a> {
    alg: &'a ToupieAlgebra,
    sdr: &'a dyn SdrMaps,
    memo: RefCell<BTreeMap<(usize, Word), TensorComb>>,
}

impl<'a> Transfer<'a> {
    pub fn new(alg: &'a ToupieAlgebra, sdr: &'a dyn SdrMaps) -> Self {
        Self { alg, sdr, memo: RefCell::default() }
    }

    pub fn algebra(&self) -> &ToupieAlgebra {
        self.alg
    }

    /// `F_k(x)`, of degree `k - 1`.
    fn f(&self, k: usize, x: &Word) -> TensorComb {
        if k == 1 {
            return TensorComb::basis(vec![x.clone()]);
        }
        let mut out = TensorComb::zero();
        for (y, c) in self.sdr.h(x).iter() {
            out.add_scaled(&self.bar_delta(k, y), c);
        }
        out
    }

    /// The recursive diagonal on the bar construction.
    pub fn bar_delta(&self, n: usize, x: &Word) -> TensorComb {
        if n == 1 {
            return TensorComb::basis(vec![x.clone()]);
        }
        if let Some(v) = self.memo.borrow().get(&(n, x.clone())) {
            return v.clone();
        }
        let mut out = TensorComb::zero();
        for (pair, c) in delta_prime(x).iter() {
            let (u, v) = (&pair[0], &pair[1]);
            for s in 1..n {
                let t = n - s;
                let left = self.f(s, u);
                if left.is_zero() {
                    continue;
                }
                let right = self.f(t, v);
                // moving F_t (degree t - 1) past u
                let e = (s * (t + 1) + (t - 1) * degree(u)) as i64;
                let sign: Scalar = scalar::sign(e) * c;
                out.add_scaled(&concat(&left, &right), &sign);
            }
        }
        self.memo.borrow_mut().insert((n, x.clone()), out.clone());
        out
    }

    /// `Delta_n` on a chain.
    pub fn delta(&self, n: usize, chain: &Word) -> TensorComb {
        let mut out = TensorComb::zero();
        for (x, c) in self.sdr.i(chain).iter() {
            for (t, d) in self.bar_delta(n, x).iter() {
                out.add_scaled(&map_each(t, |w| self.sdr.p(w)), &(c * d));
            }
        }
        out
    }
}

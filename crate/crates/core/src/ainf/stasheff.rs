use serde::Serialize;

use super::tables::{composable_tuples, AlgebraTable, CoalgebraTable};
use super::tensor::{concat, total_degree};
use crate::algebra::ToupieAlgebra;
use crate::morse::{TensorComb, WordComb};
use crate::scalar;
use crate::word::{fmt_tensor, Tensor};

#[derive(Clone, Debug, Default, Serialize)]
pub struct StasheffReport {
    pub max_arity: usize,
    pub checked: usize,
    /// `(n, input)` for every identity that fails.
    pub failures: Vec<(usize, String)>,
}

impl StasheffReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `(id^r (x) Delta_s (x) id^t)` on a tensor, with the Koszul sign of moving
/// `Delta_s` (degree `s - 2`) past the first `r` factors.
fn apply_coalgebra(table: &CoalgebraTable, r: usize, s: usize, t: &Tensor) -> TensorComb {
    let inner = table.get(s, &t[r]);
    if inner.is_zero() {
        return inner;
    }
    let sign = scalar::sign(((s + 2) * total_degree(&t[..r])) as i64);
    let head = TensorComb::basis(t[..r].to_vec());
    let tail = TensorComb::basis(t[r + 1..].to_vec());
    concat(&concat(&head, &inner), &tail).scaled(&sign)
}

/// `SI(n)'` on one chain: `sum (-1)^{r+st} (id^r (x) Delta_s (x) id^t) Delta_{r+1+t}`.
pub fn coalgebra_identity(table: &CoalgebraTable, n: usize, c: &crate::word::Word) -> TensorComb {
    let mut out = TensorComb::zero();
    for s in 2..n {
        let k = n - s + 1;
        for (t, coeff) in table.get(k, c).iter() {
            for r in 0..k {
                let tt = k - 1 - r;
                let sign = scalar::sign((r + s * tt) as i64) * coeff;
                out.add_scaled(&apply_coalgebra(table, r, s, t), &sign);
            }
        }
    }
    out
}

/// `SI(n)` on one tuple of duals:
/// `sum (-1)^{r+st} m_{r+1+t}(id^r (x) m_s (x) id^t)`.
pub fn algebra_identity(table: &AlgebraTable, f: &[crate::word::Word]) -> WordComb {
    let n = f.len();
    let mut out = WordComb::zero();
    for s in 2..n {
        for r in 0..=n - s {
            let t = n - s - r;
            let inner = table.get(&f[r..r + s]);
            if inner.is_zero() {
                continue;
            }
            let koszul = (s * total_degree(&f[..r])) as i64;
            let sign = scalar::sign(r as i64 + (s * t) as i64 + koszul);
            for (g, c) in inner.iter() {
                let mut args = f[..r].to_vec();
                args.push(g.clone());
                args.extend_from_slice(&f[r + s..]);
                out.add_scaled(&table.get(&args), &(&sign * c));
            }
        }
    }
    out
}

/// Checks `SI(n)'` for `3 <= n <= max_arity` on every chain.
pub fn check_coalgebra(alg: &ToupieAlgebra, table: &CoalgebraTable, max_arity: usize) -> StasheffReport {
    let mut report = StasheffReport { max_arity, ..Default::default() };
    for n in 3..=max_arity {
        for c in alg.chains().all() {
            report.checked += 1;
            if !coalgebra_identity(table, n, c).is_zero() {
                report.failures.push((n, alg.fmt_word(c)));
            }
        }
    }
    report
}

/// Checks `SI(n)` for `3 <= n <= max_arity` on every composable tuple of
/// duals; other tuples give zero on both sides.
pub fn check_algebra(alg: &ToupieAlgebra, table: &AlgebraTable, max_arity: usize) -> StasheffReport {
    let mut report = StasheffReport { max_arity, ..Default::default() };
    for n in 3..=max_arity {
        for f in composable_tuples(alg, n) {
            report.checked += 1;
            if !algebra_identity(table, &f).is_zero() {
                report.failures.push((n, fmt_tensor(alg.quiver(), &f)));
            }
        }
    }
    report
}

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::lincomb::LinComb;
use crate::scalar::{self, Scalar};

/// Dense matrix over the rationals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    cols: usize,
    rows: Vec<Vec<Scalar>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { cols, rows: vec![vec![Scalar::zero(); cols]; rows] }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { cols, rows }
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| scalar::int(x)).collect()).collect(), cols)
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.rows[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.rows[r][c] = x;
    }

    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Scalar) {
        let src = self.rows[source].clone();
        for (t, s) in self.rows[target].iter_mut().zip(&src) {
            if !s.is_zero() {
                *t -= factor * s;
            }
        }
    }

    /// Reduced row echelon form (zero rows last) and the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == m.rows.len() {
                break;
            }
            let Some(p) = (r..m.rows.len()).find(|&i| !m.rows[i][c].is_zero()) else {
                continue;
            };
            m.rows.swap(r, p);
            let inv = m.rows[r][c].recip();
            for x in m.rows[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..m.rows.len() {
                if i != r && !m.rows[i][c].is_zero() {
                    let f = m.rows[i][c].clone();
                    m.sub_row_multiple(i, r, &f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : M x = 0}`, one vector per free column, in RREF order.
    pub fn kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.rows[row][f].clone();
                }
                v
            })
            .collect()
    }

    /// Equality of row spaces.
    pub fn same_row_space(&self, other: &Matrix) -> bool {
        if self.cols != other.cols {
            return false;
        }
        let strip = |m: &Matrix| {
            let (r, p) = m.rref();
            r.rows.into_iter().take(p.len()).collect::<Vec<_>>()
        };
        strip(self) == strip(other)
    }

    /// The row reduction that produces the special basis. Columns are visited
    /// right to left; in each, the bottom-most entry whose row is zero to its
    /// right clears the entries above it. Stops at the first column with no
    /// such entry.
    pub fn special_basis(&self) -> Matrix {
        let mut m = self.clone();
        let mut bound = self.cols;
        while let Some(k) = (0..bound).rev().find(|&k| m.rows.iter().any(|r| !r[k].is_zero())) {
            let eligible = (0..m.rows.len())
                .rev()
                .find(|&l| !m.rows[l][k].is_zero() && m.rows[l][k + 1..].iter().all(Zero::is_zero));
            let Some(l) = eligible else {
                break;
            };
            for above in 0..l {
                if !m.rows[above][k].is_zero() {
                    let f = &m.rows[above][k] / &m.rows[l][k];
                    m.sub_row_multiple(above, l, &f);
                }
            }
            bound = k;
        }
        m
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(scalar::format).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Incrementally built echelon basis of a subspace spanned by sparse vectors.
/// Each stored vector is monic at its smallest key.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    pivots: BTreeMap<K, LinComb<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self { pivots: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Remainder of `v` after reduction by the stored basis.
    pub fn reduce(&self, v: &LinComb<K>) -> LinComb<K> {
        let mut v = v.clone();
        let mut from: Option<K> = None;
        loop {
            let next = v
                .support()
                .filter(|k| from.as_ref().is_none_or(|f| *k > f))
                .find(|k| self.pivots.contains_key(*k))
                .cloned();
            let Some(k) = next else { break };
            let c = v.coeff(&k);
            v.add_scaled(&self.pivots[&k], &-c);
            from = Some(k);
        }
        v
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let r = self.reduce(v);
        let Some((k, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        self.pivots.insert(k, r.scaled(&c.recip()));
        true
    }

    /// Fully reduced basis, sorted by pivot. Two echelons span the same space
    /// iff their canonical bases agree.
    pub fn canonical_basis(&self) -> Vec<LinComb<K>> {
        let mut out: Vec<LinComb<K>> = Vec::new();
        let keys: Vec<K> = self.pivots.keys().cloned().collect();
        for k in keys.iter().rev() {
            let mut v = self.pivots[k].clone();
            for w in &out {
                let pk = w.support().next().expect("nonzero basis vector").clone();
                let c = v.coeff(&pk);
                if !c.is_zero() {
                    v.add_scaled(w, &-c);
                }
            }
            out.push(v);
        }
        out.reverse();
        out
    }

    pub fn same_span(&self, other: &Echelon<K>) -> bool {
        self.rank() == other.rank() && other.pivots.values().all(|v| self.contains(v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_examples() {
        let id = Matrix::from_ints(&[&[1, 0], &[0, 1]]);
        assert_eq!(id.rref().0, id);
        let e1 = Matrix::from_ints(&[&[1, 0, -1], &[0, 1, -1]]);
        assert_eq!(e1.rref(), (e1.clone(), vec![0, 1]));
        let (r, p) = Matrix::from_ints(&[&[2, 2], &[1, 1]]).rref();
        assert_eq!(r, Matrix::from_ints(&[&[1, 1], &[0, 0]]));
        assert_eq!(p.len(), 1);
    }

    #[test]
    fn special_basis_examples() {
        let c = Matrix::from_ints(&[
            &[1, 0, 0, 0, 1, 0, 1],
            &[0, 1, 0, 0, 0, 1, 1],
            &[0, 0, 1, 0, 1, 0, 0],
            &[0, 0, 0, 1, 0, 1, 0],
        ]);
        let expected = Matrix::from_ints(&[
            &[1, -1, -1, 1, 0, 0, 0],
            &[0, 1, 0, -1, 0, 0, 1],
            &[0, 0, 1, 0, 1, 0, 0],
            &[0, 0, 0, 1, 0, 1, 0],
        ]);
        assert_eq!(c.special_basis(), expected);
        let e1 = Matrix::from_ints(&[&[1, 0, -1], &[0, 1, -1]]);
        assert_eq!(e1.special_basis(), Matrix::from_ints(&[&[1, -1, 0], &[0, 1, -1]]));
        let d = Matrix::from_ints(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, -1]]);
        assert_eq!(d.special_basis(), d);
    }

    #[test]
    fn kernel_annihilates() {
        let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]);
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in k {
            for row in m.rows() {
                let dot: Scalar = row.iter().zip(&v).map(|(a, b)| a * b).sum();
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn echelon_span() {
        let v = |xs: &[(u8, i64)]| xs.iter().map(|&(k, c)| (k, scalar::int(c))).collect::<LinComb<u8>>();
        let mut a = Echelon::new();
        assert!(a.insert(&v(&[(0, 1), (1, 1)])));
        assert!(a.insert(&v(&[(1, 2), (2, 1)])));
        assert!(!a.insert(&v(&[(0, 2), (1, 4), (2, 1)])));
        let mut b = Echelon::new();
        b.insert(&v(&[(0, 1), (1, -1), (2, -1)]));
        b.insert(&v(&[(1, 1), (2, 1)]));
        assert_eq!(a.rank(), 2);
        assert!(!a.same_span(&b));
        assert_eq!(a.canonical_basis().len(), 2);
    }
}

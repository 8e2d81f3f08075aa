use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::lincomb::LinComb;
use crate::scalar::{self, Scalar};

/// How a zigzag path arrived at its current cell; consecutive arrows must
/// alternate between dotted and thick.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Last {
    Start,
    Dotted,
    Thick,
}

/// A finite based complex with a partial matching, evaluated by summing
/// weights over zigzag paths.
#[derive(Debug)]
pub struct BasedComplex<C: Ord + Clone + Debug> {
    degree: BTreeMap<C, usize>,
    boundary: BTreeMap<C, LinComb<C>>,
    up: BTreeMap<C, (C, Scalar)>,
    down: BTreeMap<C, C>,
    memo: RefCell<BTreeMap<(C, Last), LinComb<C>>>,
}

impl<C: Ord + Clone + Debug> BasedComplex<C> {
    /// `boundary` must land in the given cells. Each pair `(lower, upper)` is
    /// weighted by the coefficient of `lower` in `d(upper)`, which must be
    /// nonzero; pairs must be disjoint and zigzag paths finite.
    pub fn new(
        cells: impl IntoIterator<Item = (C, usize)>,
        mut boundary: impl FnMut(&C) -> LinComb<C>,
        matching: impl IntoIterator<Item = (C, C)>,
    ) -> Result<Self> {
        let degree: BTreeMap<C, usize> = cells.into_iter().collect();
        let mut bd = BTreeMap::new();
        for (c, &n) in &degree {
            let b = boundary(c);
            for z in b.support() {
                match degree.get(z) {
                    Some(&m) if m + 1 == n => {}
                    _ => return Err(Error::InvalidMatching(format!("boundary of {c:?} leaves the complex at {z:?}"))),
                }
            }
            bd.insert(c.clone(), b);
        }
        let mut up = BTreeMap::new();
        let mut down = BTreeMap::new();
        let mut used = BTreeSet::new();
        for (lower, upper) in matching {
            if !used.insert(lower.clone()) || !used.insert(upper.clone()) {
                return Err(Error::InvalidMatching(format!("cells of pair ({lower:?}, {upper:?}) already matched")));
            }
            let w = bd.get(&upper).map(|b: &LinComb<C>| b.coeff(&lower)).unwrap_or_else(scalar::zero);
            if w == scalar::zero() {
                return Err(Error::InvalidMatching(format!("pair ({lower:?}, {upper:?}) is not an arrow")));
            }
            down.insert(upper.clone(), lower.clone());
            up.insert(lower, (upper, w));
        }
        let complex = Self { degree, boundary: bd, up, down, memo: RefCell::default() };
        complex.check_acyclic()?;
        Ok(complex)
    }

    /// Depth-first search over lower cells: `x -> z` when `z != x` is a
    /// matched lower cell in the boundary of the partner of `x`.
    fn check_acyclic(&self) -> Result<()> {
        #[derive(Clone, Copy, PartialEq)]
        enum Mark {
            Open,
            Done,
        }
        let mut marks: BTreeMap<&C, Mark> = BTreeMap::new();
        for start in self.up.keys() {
            if marks.contains_key(start) {
                continue;
            }
            let mut stack: Vec<(&C, Vec<&C>)> = vec![(start, self.next_lower(start))];
            marks.insert(start, Mark::Open);
            while let Some((node, rest)) = stack.last_mut() {
                match rest.pop() {
                    Some(z) => match marks.get(z) {
                        Some(Mark::Open) => return Err(Error::ZigzagCycle(format!("{z:?}"))),
                        Some(Mark::Done) => {}
                        None => {
                            marks.insert(z, Mark::Open);
                            let succ = self.next_lower(z);
                            stack.push((z, succ));
                        }
                    },
                    None => {
                        marks.insert(node, Mark::Done);
                        stack.pop();
                    }
                }
            }
        }
        Ok(())
    }

    fn next_lower(&self, x: &C) -> Vec<&C> {
        let (upper, _) = &self.up[x];
        self.boundary[upper].support().filter(|z| *z != x && self.up.contains_key(*z)).collect()
    }

    pub fn degree(&self, c: &C) -> Option<usize> {
        self.degree.get(c).copied()
    }

    pub fn cells(&self, n: usize) -> impl Iterator<Item = &C> {
        self.degree.iter().filter(move |(_, &m)| m == n).map(|(c, _)| c)
    }

    pub fn boundary(&self, c: &C) -> &LinComb<C> {
        &self.boundary[c]
    }

    pub fn is_critical(&self, c: &C) -> bool {
        !self.up.contains_key(c) && !self.down.contains_key(c)
    }

    pub fn critical(&self, n: usize) -> impl Iterator<Item = &C> {
        self.cells(n).filter(|c| self.is_critical(c))
    }

    /// Sum over all zigzag paths starting at `src`, the empty path included,
    /// of the path weight times its endpoint.
    pub fn gamma(&self, src: &C) -> LinComb<C> {
        self.reach(src, Last::Start)
    }

    /// `Γ(src, dst)`.
    pub fn gamma_between(&self, src: &C, dst: &C) -> Scalar {
        self.gamma(src).coeff(dst)
    }

    fn reach(&self, x: &C, last: Last) -> LinComb<C> {
        if let Some(v) = self.memo.borrow().get(&(x.clone(), last)) {
            return v.clone();
        }
        let mut out = LinComb::basis(x.clone());
        if last != Last::Dotted {
            if let Some((y, w)) = self.up.get(x) {
                let weight = -scalar::one() / w;
                out.add_scaled(&self.reach(y, Last::Dotted), &weight);
            }
        }
        if last != Last::Thick {
            let matched = self.down.get(x);
            for (z, c) in self.boundary[x].iter() {
                if Some(z) != matched {
                    out.add_scaled(&self.reach(z, Last::Thick), c);
                }
            }
        }
        self.memo.borrow_mut().insert((x.clone(), last), out.clone());
        out
    }

    fn restrict(&self, v: LinComb<C>, n: usize, critical_only: bool) -> LinComb<C> {
        v.filter(|c| self.degree[c] == n && (!critical_only || self.is_critical(c)))
    }

    pub fn h(&self, x: &C) -> LinComb<C> {
        self.restrict(self.gamma(x), self.degree[x] + 1, false)
    }

    pub fn p(&self, x: &C) -> LinComb<C> {
        self.restrict(self.gamma(x), self.degree[x], true)
    }

    pub fn i(&self, x: &C) -> LinComb<C> {
        self.restrict(self.gamma(x), self.degree[x], false)
    }

    /// Morse differential on a critical cell.
    pub fn morse_differential(&self, x: &C) -> LinComb<C> {
        match self.degree[x] {
            0 => LinComb::zero(),
            n => self.restrict(self.gamma(x), n - 1, true),
        }
    }
}

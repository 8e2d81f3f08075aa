use std::fmt;

use crate::presentation::{Path, Quiver, VertexId};

/// A bar word `[w1|...|wn]` of composable nontrivial paths. Chains are words
/// too; the (-1)-chain at a vertex is the word holding that trivial path.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Word(Vec<Path>);

impl Word {
    pub fn new(letters: Vec<Path>) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0].target() == w[1].source()));
        Self(letters)
    }

    pub fn vertex(v: VertexId) -> Self {
        Self(vec![Path::trivial(v)])
    }

    pub fn letter(p: Path) -> Self {
        Self(vec![p])
    }

    pub fn letters(&self) -> &[Path] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Path> {
        self.0
    }

    /// Number of letters, i.e. the bar degree.
    pub fn degree(&self) -> usize {
        if self.is_vertex() {
            0
        } else {
            self.0.len()
        }
    }

    /// Chain index `r` for an `r`-chain: degree minus one.
    pub fn index(&self) -> isize {
        self.degree() as isize - 1
    }

    pub fn is_vertex(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_trivial()
    }

    pub fn source(&self) -> VertexId {
        self.0[0].source()
    }

    pub fn target(&self) -> VertexId {
        self.0[self.0.len() - 1].target()
    }

    /// The underlying path `w1 w2 ... wn`.
    pub fn path(&self) -> Path {
        let mut p = self.0[0].clone();
        for w in &self.0[1..] {
            p = p.then(w).expect("letters compose");
        }
        p
    }

    /// Replaces letters `k` and `k+1` (0-based) by `merged`.
    pub fn merged(&self, k: usize, merged: Path) -> Word {
        let mut v = Vec::with_capacity(self.0.len() - 1);
        v.extend_from_slice(&self.0[..k]);
        v.push(merged);
        v.extend_from_slice(&self.0[k + 2..]);
        Word(v)
    }

    /// Replaces letter `k` by the two letters `left`, `right`.
    pub fn split(&self, k: usize, left: Path, right: Path) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0[..k]);
        v.push(left);
        v.push(right);
        v.extend_from_slice(&self.0[k + 1..]);
        Word(v)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    pub fn suffix(&self, from: usize) -> Word {
        Word(self.0[from..].to_vec())
    }

    pub fn display<'a>(&'a self, q: &'a Quiver) -> WordDisplay<'a> {
        WordDisplay { word: self, quiver: q }
    }

    pub fn names(&self, q: &Quiver) -> Vec<Vec<String>> {
        self.0.iter().map(|p| q.path_names(p)).collect()
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    quiver: &'a Quiver,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.0.iter().map(|p| self.quiver.fmt_path(p)).collect();
        write!(f, "[{}]", parts.join("|"))
    }
}

/// A tensor `x1 (x) x2 (x) ... (x) xn` of words.
pub type Tensor = Vec<Word>;

pub fn fmt_tensor(q: &Quiver, t: &Tensor) -> String {
    t.iter().map(|w| w.display(q).to_string()).collect::<Vec<_>>().join(" ⊗ ")
}

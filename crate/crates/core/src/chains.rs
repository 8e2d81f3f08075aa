//! The Uf-graph of the tip set and the Anick chains it encodes.

use std::collections::{BTreeMap, BTreeSet};

use crate::presentation::{Path, Quiver, VertexId};
use crate::rewriting::GroebnerData;
use crate::word::Word;

/// Vertices are the arrows together with proper right factors of tips;
/// `u -> v` when `uv` contains a tip and no proper prefix of `uv` does.
/// The trivial vertices `e` only have edges `e -> x` to arrows `x` leaving `e`.
#[derive(Clone, Debug)]
pub struct UfGraph {
    vertices: BTreeSet<Path>,
    successors: BTreeMap<Path, Vec<Path>>,
}

impl UfGraph {
    pub fn build(q: &Quiver, g: &GroebnerData) -> Self {
        let mut vertices: BTreeSet<Path> = q.arrow_ids().map(|a| q.arrow_path(a)).collect();
        for t in g.tips() {
            for start in 1..t.len() {
                vertices.insert(q.subpath(t, start, t.len()));
            }
        }
        let mut successors = BTreeMap::new();
        for u in &vertices {
            let succ: Vec<Path> = vertices
                .iter()
                .filter(|v| {
                    let Some(uv) = u.then(v) else { return false };
                    g.contains_tip(&uv) && !g.contains_tip(&q.subpath(&uv, 0, uv.len() - 1))
                })
                .cloned()
                .collect();
            successors.insert(u.clone(), succ);
        }
        Self { vertices, successors }
    }

    /// Nontrivial vertices.
    pub fn vertices(&self) -> &BTreeSet<Path> {
        &self.vertices
    }

    pub fn successors(&self, u: &Path) -> &[Path] {
        self.successors.get(u).map_or(&[], Vec::as_slice)
    }

    pub fn is_edge(&self, u: &Path, v: &Path) -> bool {
        self.successors(u).contains(v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Path, &Path)> {
        self.successors.iter().flat_map(|(u, vs)| vs.iter().map(move |v| (u, v)))
    }
}

/// Result of scanning a bar word for its longest chain prefix.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ChainCheck {
    /// Index `j` of the longest prefix `[w1|...|w_{j+1}]` that is a `j`-chain;
    /// `-1` when `w1` is not an arrow.
    pub prefix_index: isize,
    pub is_chain: bool,
}

/// All chains of nonnegative index, with lookup by underlying path.
#[derive(Clone, Debug)]
pub struct Chains {
    graph: UfGraph,
    vertices: Vec<VertexId>,
    by_index: Vec<Vec<Word>>,
    by_path: BTreeMap<Path, Word>,
}

impl Chains {
    pub fn build(q: &Quiver, g: &GroebnerData) -> Self {
        let graph = UfGraph::build(q, g);
        let mut by_index: Vec<Vec<Word>> = Vec::new();
        let mut layer: Vec<Word> = q.arrow_ids().map(|a| Word::letter(q.arrow_path(a))).collect();
        while !layer.is_empty() {
            layer.sort_by_cached_key(|w| (w.path(), w.clone()));
            layer.dedup();
            let next: Vec<Word> = layer
                .iter()
                .flat_map(|w| {
                    let last = w.letters().last().expect("nonempty chain");
                    graph.successors(last).iter().map(move |v| {
                        let mut letters = w.letters().to_vec();
                        letters.push(v.clone());
                        Word::new(letters)
                    })
                })
                .collect();
            by_index.push(std::mem::replace(&mut layer, next));
        }
        let mut by_path = BTreeMap::new();
        for w in by_index.iter().flatten() {
            let prev = by_path.insert(w.path(), w.clone());
            assert!(prev.is_none(), "two chains share an underlying path");
        }
        Self { graph, vertices: q.vertices().collect(), by_index, by_path }
    }

    pub fn graph(&self) -> &UfGraph {
        &self.graph
    }

    /// `W^(n)` for `n >= -1`, sorted by underlying path.
    pub fn of_index(&self, n: isize) -> Vec<Word> {
        match n {
            -1 => self.vertices.iter().map(|&v| Word::vertex(v)).collect(),
            n if n >= 0 => self.by_index.get(n as usize).cloned().unwrap_or_default(),
            _ => Vec::new(),
        }
    }

    /// Largest `n` with `W^(n)` nonempty.
    pub fn max_index(&self) -> isize {
        self.by_index.len() as isize - 1
    }

    /// All chains of index at least zero.
    pub fn all(&self) -> impl Iterator<Item = &Word> {
        self.by_index.iter().flatten()
    }

    pub fn count(&self, n: isize) -> usize {
        match n {
            -1 => self.vertices.len(),
            n if n >= 0 => self.by_index.get(n as usize).map_or(0, Vec::len),
            _ => 0,
        }
    }

    /// The chain whose underlying path is `p`, if any.
    pub fn with_path(&self, p: &Path) -> Option<&Word> {
        self.by_path.get(p)
    }

    pub fn check(&self, w: &Word) -> ChainCheck {
        let letters = w.letters();
        if letters.is_empty() || letters[0].len() != 1 {
            return ChainCheck { prefix_index: -1, is_chain: false };
        }
        let mut j = 0;
        while j + 1 < letters.len() && self.graph.is_edge(&letters[j], &letters[j + 1]) {
            j += 1;
        }
        ChainCheck { prefix_index: j as isize, is_chain: j + 1 == letters.len() }
    }

    pub fn is_chain(&self, w: &Word) -> bool {
        w.is_vertex() || self.check(w).is_chain
    }

    /// Ways to cut the underlying path of `c` into `n` consecutive pieces, each
    /// the underlying path of a chain, with piece indices summing to `r - 1`
    /// where `c` is an `r`-chain.
    pub fn decompositions(&self, q: &Quiver, c: &Word, n: usize) -> Vec<Vec<Word>> {
        let p = c.path();
        let target = c.index() - 1;
        let mut out = Vec::new();
        if n < 2 || p.len() < n {
            return out;
        }
        let mut parts = Vec::new();
        self.cut(q, &p, 0, n, target, &mut parts, &mut out);
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn cut(
        &self,
        q: &Quiver,
        p: &Path,
        start: usize,
        remaining: usize,
        budget: isize,
        parts: &mut Vec<Word>,
        out: &mut Vec<Vec<Word>>,
    ) {
        if remaining == 1 {
            if let Some(w) = self.with_path(&q.subpath(p, start, p.len())) {
                if w.index() == budget {
                    let mut done = parts.clone();
                    done.push(w.clone());
                    out.push(done);
                }
            }
            return;
        }
        for end in start + 1..=p.len() - (remaining - 1) {
            if let Some(w) = self.with_path(&q.subpath(p, start, end)) {
                if w.index() <= budget {
                    parts.push(w.clone());
                    self.cut(q, p, end, remaining - 1, budget - w.index(), parts, out);
                    parts.pop();
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::examples;

    #[test]
    fn e1_graph_and_chains() {
        let a = examples::e1();
        let c = a.chains();
        let extra: Vec<String> = c
            .graph()
            .vertices()
            .iter()
            .filter(|p| p.len() > 1)
            .map(|p| a.fmt_path(p))
            .collect();
        assert_eq!(extra, ["a2.a3"]);
        let edges: Vec<String> =
            c.graph().edges().map(|(u, v)| format!("{}->{}", a.fmt_path(u), a.fmt_path(v))).collect();
        assert_eq!(edges, ["a1->a2.a3", "b1->b2"]);
        let ones: Vec<String> = c.of_index(1).iter().map(|w| a.fmt_word(w)).collect();
        assert_eq!(ones, ["[b1|b2]", "[a1|a2.a3]"]);
        assert!(c.of_index(2).is_empty());
        assert_eq!(c.of_index(0).len(), 7);
        assert_eq!(c.of_index(-1).len(), 6);
        assert_eq!(a.betti(3), [6, 7, 2, 0]);
    }

    #[test]
    fn recognition() {
        let a = examples::e1();
        let c = a.chains();
        assert!(c.is_chain(&a.word(&["b1", "b2"])));
        assert!(!c.is_chain(&a.word(&["c1", "c2"])));
        assert!(c.is_chain(&a.word(&["a1"])));
        let check = c.check(&a.word(&["a1.a2", "a3"]));
        assert_eq!((check.prefix_index, check.is_chain), (-1, false));
        let check = c.check(&a.word(&["a1", "a2", "a3"]));
        assert_eq!((check.prefix_index, check.is_chain), (0, false));
    }

    #[test]
    fn cubic_monomial_graph() {
        let a = examples::algebra(examples::CUBIC_MONOMIAL);
        let g = a.chains().graph();
        assert!(g.vertices().contains(&a.path(&["d2", "d3"])));
        assert!(g.is_edge(&a.path(&["d1"]), &a.path(&["d2", "d3"])));
        assert_eq!(g.edges().count(), 1);
    }

    #[test]
    fn decompositions() {
        let a = examples::e1();
        let u = a.word(&["a1", "a2.a3"]);
        assert!(a.chains().decompositions(a.quiver(), &u, 2).is_empty());
        assert!(a.chains().decompositions(a.quiver(), &a.word(&["a1"]), 2).is_empty());

        let m = examples::algebra(examples::QUADRATIC_MONOMIAL);
        let top = m.word(&["d1", "d2", "d3"]);
        let found: Vec<Vec<String>> = m
            .chains()
            .decompositions(m.quiver(), &top, 2)
            .iter()
            .map(|d| d.iter().map(|w| m.fmt_word(w)).collect())
            .collect();
        assert_eq!(found, [vec!["[d1]", "[d2|d3]"], vec!["[d1|d2]", "[d3]"]]);

        let c = examples::algebra(examples::CUBIC_MONOMIAL);
        let u = c.word(&["d1", "d2.d3"]);
        assert_eq!(c.chains().decompositions(c.quiver(), &u, 3).len(), 1);
    }

    #[test]
    fn no_relations_graph_has_no_edges() {
        let text = examples::NOT_TOUPIE.replace(
            r#"{"name": "c", "src": "x", "dst": "w"}"#,
            r#"{"name": "c", "src": "0", "dst": "w"}"#,
        );
        let a = examples::algebra(&text);
        assert_eq!(a.chains().graph().edges().count(), 0);
        assert_eq!(a.chains().max_index(), 0);
    }
}

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct ArrowId(pub usize);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver with named vertices and arrows.
#[derive(Clone, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    vertex_index: HashMap<String, VertexId>,
    arrow_index: HashMap<String, ArrowId>,
    outgoing: Vec<Vec<ArrowId>>,
    incoming: Vec<Vec<ArrowId>>,
}

impl PartialEq for Quiver {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for Quiver {}

impl Quiver {
    /// Builds and validates a quiver from vertex names and `(name, source, target)` arrows.
    pub fn new<V, A>(vertices: &[V], arrows: &[(A, A, A)]) -> Result<Self>
    where
        V: AsRef<str>,
        A: AsRef<str>,
    {
        let mut vertex_index = HashMap::new();
        let mut names = Vec::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            let v = v.as_ref().to_string();
            if vertex_index.insert(v.clone(), VertexId(i)).is_some() {
                return Err(Error::DuplicateVertex(v));
            }
            names.push(v);
        }
        let mut arrow_index = HashMap::new();
        let mut outgoing = vec![Vec::new(); names.len()];
        let mut incoming = vec![Vec::new(); names.len()];
        let mut list = Vec::with_capacity(arrows.len());
        for (i, (name, src, dst)) in arrows.iter().enumerate() {
            let name = name.as_ref().to_string();
            let lookup = |v: &A| {
                vertex_index.get(v.as_ref()).copied().ok_or_else(|| Error::DanglingArrow {
                    arrow: name.clone(),
                    vertex: v.as_ref().to_string(),
                })
            };
            let (source, target) = (lookup(src)?, lookup(dst)?);
            if arrow_index.insert(name.clone(), ArrowId(i)).is_some() {
                return Err(Error::DuplicateArrow(name));
            }
            outgoing[source.0].push(ArrowId(i));
            incoming[target.0].push(ArrowId(i));
            list.push(Arrow { name, source, target });
        }
        Ok(Self { vertices: names, arrows: list, vertex_index, arrow_index, outgoing, incoming })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.vertices.len()).map(VertexId)
    }

    pub fn arrow_ids(&self) -> impl Iterator<Item = ArrowId> {
        (0..self.arrows.len()).map(ArrowId)
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertices[v.0]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a.0]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn arrow_id(&self, name: &str) -> Option<ArrowId> {
        self.arrow_index.get(name).copied()
    }

    pub fn outgoing(&self, v: VertexId) -> &[ArrowId] {
        &self.outgoing[v.0]
    }

    pub fn incoming(&self, v: VertexId) -> &[ArrowId] {
        &self.incoming[v.0]
    }

    /// Same vertices, every arrow reversed and renamed.
    pub fn opposite(&self, rename: impl Fn(&str) -> String) -> Quiver {
        let arrows: Vec<(String, String, String)> = self
            .arrows
            .iter()
            .map(|a| {
                (
                    rename(&a.name),
                    self.vertices[a.target.0].clone(),
                    self.vertices[a.source.0].clone(),
                )
            })
            .collect();
        Quiver::new(&self.vertices, &arrows).expect("opposite of a valid quiver is valid")
    }

    pub fn arrow_path(&self, a: ArrowId) -> Path {
        let arrow = &self.arrows[a.0];
        Path { source: arrow.source, target: arrow.target, arrows: vec![a] }
    }

    /// The path spelled by a sequence of arrow names.
    pub fn path<S: AsRef<str>>(&self, names: &[S]) -> Result<Path> {
        let mut ids = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            ids.push(self.arrow_id(n).ok_or_else(|| Error::UnknownArrow(n.to_string()))?);
        }
        self.path_from_ids(&ids)
    }

    pub fn path_from_ids(&self, ids: &[ArrowId]) -> Result<Path> {
        let Some(first) = ids.first() else {
            return Err(Error::Input("empty arrow list; use a trivial path".into()));
        };
        for w in ids.windows(2) {
            if self.arrows[w[0].0].target != self.arrows[w[1].0].source {
                return Err(Error::NotComposable {
                    left: self.arrows[w[0].0].name.clone(),
                    right: self.arrows[w[1].0].name.clone(),
                });
            }
        }
        Ok(Path {
            source: self.arrows[first.0].source,
            target: self.arrows[ids[ids.len() - 1].0].target,
            arrows: ids.to_vec(),
        })
    }

    /// Vertex reached after the first `k` arrows of `p`.
    pub fn vertex_at(&self, p: &Path, k: usize) -> VertexId {
        if k == 0 {
            p.source
        } else {
            self.arrows[p.arrows[k - 1].0].target
        }
    }

    /// The subpath made of arrows `start..end`; trivial when the range is empty.
    pub fn subpath(&self, p: &Path, start: usize, end: usize) -> Path {
        debug_assert!(start <= end && end <= p.len());
        if start == end {
            return Path::trivial(self.vertex_at(p, start));
        }
        Path {
            source: self.vertex_at(p, start),
            target: self.vertex_at(p, end),
            arrows: p.arrows[start..end].to_vec(),
        }
    }

    pub fn split_at(&self, p: &Path, k: usize) -> (Path, Path) {
        (self.subpath(p, 0, k), self.subpath(p, k, p.len()))
    }

    /// Every path of the quiver, trivial ones included, sorted by [`Path`] order.
    /// Fails on quivers with oriented cycles.
    pub fn all_paths(&self) -> Result<Vec<Path>> {
        if !self.is_acyclic() {
            return Err(Error::Cycle);
        }
        let mut out: Vec<Path> = self.vertices().map(Path::trivial).collect();
        let mut frontier: Vec<Path> = self.arrow_ids().map(|a| self.arrow_path(a)).collect();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for p in &frontier {
                for &a in self.outgoing(p.target) {
                    let mut arrows = p.arrows.clone();
                    arrows.push(a);
                    next.push(Path { source: p.source, target: self.arrows[a.0].target, arrows });
                }
            }
            out.append(&mut frontier);
            frontier = next;
        }
        out.sort();
        Ok(out)
    }

    pub fn is_acyclic(&self) -> bool {
        let mut indeg: Vec<usize> = self.incoming.iter().map(Vec::len).collect();
        let mut stack: Vec<usize> = (0..indeg.len()).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in &self.outgoing[v] {
                let t = self.arrows[a.0].target.0;
                indeg[t] -= 1;
                if indeg[t] == 0 {
                    stack.push(t);
                }
            }
        }
        seen == indeg.len()
    }

    pub fn path_names(&self, p: &Path) -> Vec<String> {
        p.arrows.iter().map(|a| self.arrows[a.0].name.clone()).collect()
    }

    /// Human-readable form: arrow names joined by `.`, or `e_v` for a trivial path.
    pub fn fmt_path(&self, p: &Path) -> String {
        if p.is_trivial() {
            format!("e_{}", self.vertices[p.source.0])
        } else {
            self.path_names(p).join(".")
        }
    }
}

/// A path, written left to right: `arrows[0]` is traversed first.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Self { source: v, target: v, arrows: Vec::new() }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    pub fn first_arrow(&self) -> Option<ArrowId> {
        self.arrows.first().copied()
    }

    /// Concatenation `self · other`, or `None` when `t(self) != s(other)`.
    pub fn then(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = Vec::with_capacity(self.len() + other.len());
        arrows.extend_from_slice(&self.arrows);
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    /// Like [`Path::then`] but reports the mismatch.
    pub fn compose(&self, other: &Path, q: &Quiver) -> Result<Path> {
        self.then(other).ok_or_else(|| Error::NotComposable {
            left: q.fmt_path(self),
            right: q.fmt_path(other),
        })
    }

    /// Position of the leftmost occurrence of the nontrivial path `sub`.
    pub fn find(&self, sub: &Path) -> Option<usize> {
        if sub.is_trivial() || sub.len() > self.len() {
            return None;
        }
        self.arrows.windows(sub.len()).position(|w| w == sub.arrows.as_slice())
    }

    pub fn contains(&self, sub: &Path) -> bool {
        self.find(sub).is_some()
    }

    pub fn starts_with(&self, prefix: &Path) -> bool {
        prefix.source == self.source && self.arrows.starts_with(&prefix.arrows)
    }

    pub fn ends_with(&self, suffix: &Path) -> bool {
        suffix.target == self.target && self.arrows.ends_with(&suffix.arrows)
    }

    pub fn is_parallel(&self, other: &Path) -> bool {
        self.source == other.source && self.target == other.target
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.arrows.cmp(&other.arrows))
            .then_with(|| self.source.cmp(&other.source))
            .then_with(|| self.target.cmp(&other.target))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn line() -> Quiver {
        Quiver::new(&["0", "1", "2"], &[("a", "0", "1"), ("b", "1", "2")]).unwrap()
    }

    #[test]
    fn build_small() {
        let q = Quiver::new(&["0", "1"], &[("a", "0", "1")]).unwrap();
        assert_eq!((q.vertex_count(), q.arrow_count()), (2, 1));
    }

    #[test]
    fn build_errors() {
        assert_eq!(
            Quiver::new(&["0", "1"], &[("a", "0", "2")]).unwrap_err(),
            Error::DanglingArrow { arrow: "a".into(), vertex: "2".into() }
        );
        assert!(matches!(Quiver::new(&["0", "0"], &[] as &[(&str, &str, &str)]), Err(Error::DuplicateVertex(_))));
        assert!(matches!(
            Quiver::new(&["0", "1"], &[("a", "0", "1"), ("a", "1", "0")]),
            Err(Error::DuplicateArrow(_))
        ));
    }

    #[test]
    fn composition() {
        let q = line();
        let a = q.path(&["a"]).unwrap();
        let b = q.path(&["b"]).unwrap();
        let e0 = Path::trivial(VertexId(0));
        assert_eq!(e0.then(&a), Some(a.clone()));
        let ab = a.then(&b).unwrap();
        assert_eq!(ab.len(), 2);
        assert_eq!((ab.source(), ab.target()), (VertexId(0), VertexId(2)));
        assert!(b.compose(&a, &q).is_err());
        assert_eq!(q.subpath(&ab, 1, 1), Path::trivial(VertexId(1)));
        assert_eq!(q.all_paths().unwrap().len(), 6);
    }
}

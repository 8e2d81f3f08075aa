use std::collections::BTreeSet;

use crate::rewriting::GroebnerData;

/// The graph on branches of non-monomial relations, joining two branches
/// when some relation involves both.
#[derive(Clone, Debug)]
pub struct GammaGraph {
    /// Indices into the branch columns of the Gröbner data.
    pub vertices: Vec<usize>,
    pub edges: BTreeSet<(usize, usize)>,
    pub components: Vec<Vec<usize>>,
}

impl GammaGraph {
    pub fn build(g: &GroebnerData) -> Self {
        let columns = g.columns();
        let col = |p| columns.iter().position(|c| c == p).expect("branch column");
        let mut vertices = BTreeSet::new();
        let mut edges = BTreeSet::new();
        for nm in g.nonmonomials() {
            let involved: Vec<usize> = nm.relation.support().map(col).collect();
            vertices.extend(involved.iter().copied());
            for (i, &a) in involved.iter().enumerate() {
                for &b in &involved[i + 1..] {
                    edges.insert((a.min(b), a.max(b)));
                }
            }
        }
        let vertices: Vec<usize> = vertices.into_iter().collect();
        let mut parent: Vec<usize> = (0..columns.len()).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for &(a, b) in &edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        }
        let mut components: Vec<Vec<usize>> = Vec::new();
        let mut roots: Vec<usize> = Vec::new();
        for &v in &vertices {
            let r = find(&mut parent, v);
            match roots.iter().position(|&x| x == r) {
                Some(i) => components[i].push(v),
                None => {
                    roots.push(r);
                    components.push(vec![v]);
                }
            }
        }
        Self { vertices, edges, components }
    }

    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.components.iter().position(|c| c.contains(&v))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples;

    #[test]
    fn e1_single_component() {
        let a = examples::e1();
        let gg = GammaGraph::build(a.groebner());
        assert_eq!(gg.vertices.len(), 3);
        assert_eq!(gg.components, vec![vec![0, 1, 2]]);
    }

    #[test]
    fn no_nonmonomials() {
        let a = examples::algebra(examples::QUADRATIC_MONOMIAL);
        let gg = GammaGraph::build(a.groebner());
        assert!(gg.vertices.is_empty() && gg.components.is_empty());
    }
}

//! Finite simple graphs on at most 64 vertices, plus the brute-force
//! graph-theoretic routines every algebraic answer is checked against.

mod cycles;
pub mod families;
mod parse;
mod vertex_set;

pub use cycles::{
    count_triangles, enumerate_induced_odd_cycles, is_bipartite, is_chordless_cycle, Bipartition,
};
pub use parse::{parse_dimacs, parse_edge_list, parse_graph};
pub use vertex_set::{Iter as VertexIter, VertexSet, MAX_VERTICES};

use crate::error::{Error, Result};

/// An immutable finite simple graph on vertices `0..n`.
///
/// Every vertex carries a label (by default its 1-based index) used when
/// reporting results back to the user.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Vec<String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices labelled `1..=n`.
    pub fn empty(n: usize) -> Result<Self> {
        Self::from_edges(n, std::iter::empty())
    }

    /// Builds a graph from 0-based vertex pairs. Duplicate edges (in either
    /// orientation) collapse; loops and out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let labels = (1..=n).map(|v| v.to_string()).collect();
        Self::with_labels(labels, edges)
    }

    /// Like [`Graph::from_edges`] with explicit, pairwise distinct labels.
    pub fn with_labels<I>(labels: Vec<String>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut seen = std::collections::HashSet::with_capacity(n);
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::Parse { line: 0, message: format!("duplicate vertex label {l:?}") });
            }
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w + 1, n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge { line: 0, vertex: labels[u].clone() });
            }
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        Ok(Graph { adj, labels })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(i, &nb)| {
            nb.iter().filter(move |&j| j > i).map(move |j| (i, j))
        })
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    /// Open neighbourhood of a single vertex.
    #[inline]
    pub fn adjacent(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Renders a vertex set through the vertex labels, e.g. `{1,2,5}`.
    pub fn format_set(&self, s: VertexSet) -> String {
        let parts: Vec<&str> = s.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", parts.join(","))
    }

    fn check_subset(&self, s: VertexSet) -> Result<()> {
        if s.is_subset(self.vertices()) {
            Ok(())
        } else {
            let bad = s.difference(self.vertices()).first().unwrap_or(0);
            Err(Error::VertexOutOfRange { vertex: bad + 1, n: self.n() })
        }
    }

    /// Graph on the same labelled vertices with exactly the missing edges.
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(v, &nb)| all.difference(nb).without(v))
            .collect();
        Graph { adj, labels: self.labels.clone() }
    }

    /// The induced subgraph on `s`, with vertices renumbered in increasing
    /// order and labels carried over.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph> {
        self.check_subset(s)?;
        let order = s.to_vec();
        let mut position = [usize::MAX; MAX_VERTICES];
        for (k, &v) in order.iter().enumerate() {
            position[v] = k;
        }
        let adj = order
            .iter()
            .map(|&v| self.adj[v].intersection(s).iter().map(|w| position[w]).collect())
            .collect();
        let labels = order.iter().map(|&v| self.labels[v].clone()).collect();
        Ok(Graph { adj, labels })
    }

    /// `N(A)`: vertices outside `a` adjacent to some member of `a`.
    pub fn neighbors(&self, a: VertexSet) -> VertexSet {
        a.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
            .difference(a)
    }

    /// True iff no edge has both ends in `a`.
    pub fn is_independent(&self, a: VertexSet) -> bool {
        a.iter().all(|v| self.adj[v].is_disjoint(a))
    }

    /// True iff every edge meets `w`.
    pub fn is_vertex_cover(&self, w: VertexSet) -> bool {
        self.is_independent(self.vertices().difference(w))
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| self.adj[v].intersection(s).len()).sum::<usize>() / 2
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn complement_of_c4_and_k4() {
        let c = cycle(4).complement();
        assert_eq!(c.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
        assert_eq!(complete(4).complement().edge_count(), 0);
        assert_eq!(complete(4).complement().n(), 4);
    }

    #[test]
    fn induced_subgraphs() {
        let p = cycle(5).induced_subgraph(set(&[0, 1, 2])).unwrap();
        assert_eq!(p.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let t = complete(4).induced_subgraph(set(&[0, 2, 3])).unwrap();
        assert_eq!(t.edge_count(), 3);
        assert_eq!(t.labels(), &["1", "3", "4"]);
        assert_eq!(
            cycle(4).induced_subgraph(set(&[0, 7])),
            Err(Error::VertexOutOfRange { vertex: 8, n: 4 })
        );
    }

    #[test]
    fn neighbors_and_independence() {
        assert_eq!(cycle(5).neighbors(set(&[0])), set(&[1, 4]));
        assert_eq!(petersen().neighbors(VertexSet::EMPTY), VertexSet::EMPTY);
        assert_eq!(complete(4).neighbors(set(&[0, 1])), set(&[2, 3]));
        let c4 = cycle(4);
        assert!(c4.is_independent(set(&[0, 2])));
        assert!(!c4.is_independent(set(&[0, 1])));
        assert!(c4.is_independent(VertexSet::EMPTY));
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Graph::from_edges(3, [(1, 1)]), Err(Error::LoopEdge { .. })));
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 4, n: 3 })
        );
        assert_eq!(Graph::empty(65), Err(Error::TooManyVertices { n: 65, max: 64 }));
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }
}

use std::collections::VecDeque;

use super::{Graph, VertexSet};

/// Outcome of a bipartiteness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartition {
    /// A proper 2-colouring; `left` holds the colour of each component's
    /// smallest vertex.
    Bipartite { left: VertexSet, right: VertexSet },
    /// An odd cycle, listed in traversal order.
    OddCycle(Vec<usize>),
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartition::Bipartite { .. })
    }
}

/// BFS 2-colouring; a conflict edge yields an odd cycle through the two BFS
/// tree paths to their lowest common ancestor.
pub fn is_bipartite(g: &Graph) -> Bipartition {
    let n = g.n();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for w in g.adjacent(u) {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        parent[w] = u;
                        depth[w] = depth[u] + 1;
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => {
                        return Bipartition::OddCycle(tree_cycle(u, w, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let left = (0..n).filter(|&v| color[v] == Some(false)).collect();
    let right = (0..n).filter(|&v| color[v] == Some(true)).collect();
    Bipartition::Bipartite { left, right }
}

fn tree_cycle(u: usize, w: usize, parent: &[usize], depth: &[usize]) -> Vec<usize> {
    let (mut a, mut b) = (u, w);
    let mut up = vec![a];
    let mut down = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        up.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        down.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        up.push(a);
        down.push(b);
    }
    down.pop();
    up.extend(down.into_iter().rev());
    up
}

/// True iff `s` induces a chordless cycle (of any length ≥ 3).
pub fn is_chordless_cycle(g: &Graph, s: VertexSet) -> bool {
    if s.len() < 3 || !s.is_subset(g.vertices()) {
        return false;
    }
    if s.iter().any(|v| g.adjacent(v).intersection(s).len() != 2) {
        return false;
    }
    // 2-regular, so it is a single cycle iff connected.
    let start = s.first().unwrap();
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let next = frontier
            .iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(g.adjacent(v)))
            .intersection(s)
            .difference(seen);
        seen = seen.union(next);
        frontier = next;
    }
    seen == s
}

/// Every vertex set of odd size at least `min_len` (rounded up to an odd
/// number ≥ 3) that induces a chordless cycle, in lexicographic order.
///
/// Cycles are grown as chordless paths from their smallest vertex; a
/// candidate extension may not touch any interior path vertex, and each
/// cycle is emitted once by requiring its second vertex to be smaller than
/// its last.
pub fn enumerate_induced_odd_cycles(g: &Graph, min_len: usize) -> Vec<VertexSet> {
    let min_len = {
        let m = min_len.max(3);
        if m.is_multiple_of(2) {
            m + 1
        } else {
            m
        }
    };
    let mut out = Vec::new();
    for start in 0..g.n() {
        let above = VertexSet::from_bits(!((2u64 << start) - 1));
        let mut search = PathSearch { g, start, above, min_len, out: &mut out };
        for second in g.adjacent(start).intersection(above) {
            search.extend(second, second, VertexSet::singleton(start).with(second), VertexSet::EMPTY, 2);
        }
    }
    out.sort_unstable();
    out
}

struct PathSearch<'a> {
    g: &'a Graph,
    start: usize,
    above: VertexSet,
    min_len: usize,
    out: &'a mut Vec<VertexSet>,
}

impl PathSearch<'_> {
    fn extend(&mut self, second: usize, last: usize, path: VertexSet, blocked: VertexSet, len: usize) {
        let candidates = self
            .g
            .adjacent(last)
            .intersection(self.above)
            .difference(path)
            .difference(blocked);
        let closers = self.g.adjacent(self.start);
        for w in candidates {
            if closers.contains(w) {
                let cycle_len = len + 1;
                if second < w && cycle_len % 2 == 1 && cycle_len >= self.min_len {
                    self.out.push(path.with(w));
                }
            } else {
                // `last` turns interior once `w` is appended.
                let blocked = blocked.union(self.g.adjacent(last));
                self.extend(second, w, path.with(w), blocked, len + 1);
            }
        }
    }
}

/// Number of 3-vertex sets inducing a triangle.
pub fn count_triangles(g: &Graph) -> usize {
    g.edges()
        .map(|(i, j)| {
            let above_j = VertexSet::from_bits(!((2u64 << j) - 1));
            g.adjacent(i).intersection(g.adjacent(j)).intersection(above_j).len()
        })
        .sum()
}

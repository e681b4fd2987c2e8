//! Brute-force oracles and graph corpora shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use oddhole::graph::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Edge set inside `s` as (i, j) pairs with i < j, read straight from adjacency.
fn induced_edges(g: &Graph, s: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (a, &i) in s.iter().enumerate() {
        for &j in &s[a + 1..] {
            if g.has_edge(i, j) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Every vertex subset of odd size ≥ `min_len` inducing a cycle, by testing
/// all `2^n` subsets: exactly `|S|` edges, every degree 2, connected.
pub fn oracle_odd_cycles(g: &Graph, min_len: usize) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 22, "subset oracle is exponential");
    let mut out = Vec::new();
    for bits in 0u64..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
        if s.len() < 3 || s.len().is_multiple_of(2) || s.len() < min_len {
            continue;
        }
        let edges = induced_edges(g, &s);
        if edges.len() != s.len() {
            continue;
        }
        let mut deg = vec![0usize; n];
        for &(i, j) in &edges {
            deg[i] += 1;
            deg[j] += 1;
        }
        if s.iter().any(|&v| deg[v] != 2) {
            continue;
        }
        // walk the cycle from s[0]
        let (mut prev, mut cur, mut steps) = (usize::MAX, s[0], 0);
        loop {
            let next = s.iter().copied().find(|&w| w != prev && g.has_edge(cur, w)).unwrap();
            prev = cur;
            cur = next;
            steps += 1;
            if cur == s[0] {
                break;
            }
        }
        if steps == s.len() {
            out.push(VertexSet::from_bits(bits));
        }
    }
    out.sort();
    out
}

pub fn oracle_has_odd_hole(g: &Graph) -> bool {
    !oracle_odd_cycles(g, 5).is_empty()
}

pub fn oracle_triangles(g: &Graph) -> usize {
    let n = g.n();
    let mut t = 0;
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if g.has_edge(i, j) && g.has_edge(j, k) && g.has_edge(i, k) {
                    t += 1;
                }
            }
        }
    }
    t
}

/// Bipartite iff some subset and its complement are both independent.
pub fn oracle_bipartite(g: &Graph) -> bool {
    let n = g.n();
    (0u64..(1 << n)).any(|bits| {
        g.edges().all(|(i, j)| (bits >> i & 1) != (bits >> j & 1))
    })
}

pub fn oracle_perfect(g: &Graph) -> bool {
    !oracle_has_odd_hole(g) && !oracle_has_odd_hole(&g.complement())
}

fn is_k_cover(g: &Graph, a: &[u64], k: u64) -> bool {
    a.iter().any(|&x| x > 0) && g.edges().all(|(i, j)| a[i] + a[j] >= k)
}

/// Whether the 2-cover `a` splits into two 1-covers or a 2-cover plus a
/// 0-cover, searching every `b ≤ a`.
pub fn oracle_reducible(g: &Graph, a: &[u64]) -> (bool, bool) {
    let n = a.len();
    let mut b = vec![0u64; n];
    let (mut one_one, mut two_zero) = (false, false);
    loop {
        let c: Vec<u64> = a.iter().zip(&b).map(|(x, y)| x - y).collect();
        if is_k_cover(g, &b, 1) && is_k_cover(g, &c, 1) {
            one_one = true;
        }
        if (is_k_cover(g, &b, 2) && is_k_cover(g, &c, 0)) || (is_k_cover(g, &c, 2) && is_k_cover(g, &b, 0)) {
            two_zero = true;
        }
        let mut i = 0;
        loop {
            if i == n {
                return (one_one, two_zero);
            }
            if b[i] < a[i] {
                b[i] += 1;
                break;
            }
            b[i] = 0;
            i += 1;
        }
    }
}

/// Upper-triangle adjacency bits of `g` under the relabelling `perm`
/// (`perm[new] = old`).
fn code(n: usize, adj: &[u64], perm: &[usize]) -> u64 {
    let mut c = 0u64;
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj[perm[i]] >> perm[j] & 1 == 1 {
                c |= 1 << bit;
            }
            bit += 1;
        }
    }
    c
}

/// Canonical form: the least code over relabellings that keep vertices
/// sorted by (degree, sorted neighbour degrees).
fn canonical(n: usize, adj: &[u64]) -> u64 {
    let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
    let key = |v: usize| {
        let mut nd: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
        nd.sort();
        (deg[v], nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| key(v));
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for &v in &order {
        match blocks.last_mut() {
            Some(b) if key(b[0]) == key(v) => b.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut perm = Vec::with_capacity(n);
    permute_blocks(n, adj, &blocks, 0, &mut perm, &mut best);
    best
}

fn permute_blocks(n: usize, adj: &[u64], blocks: &[Vec<usize>], k: usize, perm: &mut Vec<usize>, best: &mut u64) {
    if k == blocks.len() {
        *best = (*best).min(code(n, adj, perm));
        return;
    }
    let mut block = blocks[k].clone();
    heap_permutations(&mut block, &mut |p| {
        let len = perm.len();
        perm.extend_from_slice(p);
        permute_blocks(n, adj, blocks, k + 1, perm, best);
        perm.truncate(len);
    });
}

fn heap_permutations(items: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    fn go(k: usize, items: &mut [usize], f: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k {
            go(k - 1, items, f);
            if k.is_multiple_of(2) {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let k = items.len();
    go(k, items, f);
}

fn connected(n: usize, adj: &[u64]) -> bool {
    let mut seen = 1u64;
    let mut frontier = 1u64;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen.count_ones() as usize == n
}

fn from_code(n: usize, c: u64) -> Vec<u64> {
    let mut adj = vec![0u64; n];
    let mut bit = 0;
    for i in 0..n {
        for j in i + 1..n {
            if c >> bit & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    adj
}

/// All graphs on `n` vertices up to isomorphism, as canonical codes; each
/// class on `n` arises by adding a vertex to some class on `n - 1`.
fn all_classes(max_n: usize) -> Vec<BTreeSet<u64>> {
    let mut levels = vec![BTreeSet::from([0u64]), BTreeSet::from([0u64])];
    for n in 2..=max_n {
        let mut next = BTreeSet::new();
        for &c in &levels[n - 1] {
            let base = from_code(n - 1, c);
            for mask in 0u64..(1 << (n - 1)) {
                let mut adj = base.clone();
                adj.push(mask);
                for (v, row) in adj.iter_mut().enumerate().take(n - 1) {
                    if mask >> v & 1 == 1 {
                        *row |= 1 << (n - 1);
                    }
                }
                next.insert(canonical(n, &adj));
            }
        }
        levels.push(next);
    }
    levels
}

fn graph_of(n: usize, adj: &[u64]) -> Graph {
    let edges = (0..n).flat_map(|i| (i + 1..n).filter(move |&j| adj[i] >> j & 1 == 1).map(move |j| (i, j)));
    Graph::from_edges(n, edges).unwrap()
}

/// Connected graphs on `n` vertices up to isomorphism, for each `n ≤ max_n`.
pub fn connected_classes(max_n: usize) -> Vec<Vec<Graph>> {
    all_classes(max_n)
        .into_iter()
        .enumerate()
        .map(|(n, level)| {
            level
                .into_iter()
                .map(|c| from_code(n, c))
                .filter(|adj| n > 0 && connected(n, adj))
                .map(|adj| graph_of(n, &adj))
                .collect()
        })
        .collect()
}

/// `count` graphs with `2 ≤ n ≤ max_n`, edge probability cycling through
/// 0.3, 0.5, 0.7, redrawn until they have an edge.
pub fn random_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let probs = [0.3, 0.5, 0.7];
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=max_n);
        let p = probs[out.len() % probs.len()];
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        if !edges.is_empty() {
            out.push(Graph::from_edges(n, edges).unwrap());
        }
    }
    out
}

/// Random graph with exactly `m` edges.
pub fn random_graph_with_edges(n: usize, m: usize, seed: u64) -> Graph {
    use rand::seq::SliceRandom;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut all: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    all.shuffle(&mut rng);
    Graph::from_edges(n, all.into_iter().take(m)).unwrap()
}

/// Connected classes on 2..=7 vertices plus 500 random graphs on ≤ 10.
pub fn corpus() -> Vec<Graph> {
    let mut out: Vec<Graph> = connected_classes(7).into_iter().skip(2).flatten().collect();
    out.extend(random_graphs(500, 10, 0x5eed));
    out
}

pub fn edge_set(g: &Graph) -> HashSet<VertexSet> {
    g.edges().map(|(i, j)| VertexSet::singleton(i).with(j)).collect()
}

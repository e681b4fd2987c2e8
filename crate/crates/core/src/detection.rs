//! Odd induced cycles, odd holes and perfection read off the associated
//! primes of `J²`, where `J = I(G)^∨` is the cover ideal.
//!
//! `Ass(R/J²)` consists of the edge primes `(x_i, x_j)` and one prime
//! `(x_{i_1}, …, x_{i_s})` per odd induced cycle; every routine here checks
//! what it reads against the graph before reporting it.

use crate::algebra::{
    dual_from_components, irreducible_decomposition, minimal_primes, multiplicity_at_prime, primes_of,
    IrreducibleComponent, Monomial, MonomialIdeal, MonomialPrime,
};
use crate::covers::cover_ideal;
use crate::error::{Error, Result};
use crate::graph::{count_triangles, is_chordless_cycle, Graph, VertexSet};

/// Exponents of `J²` never exceed 2.
pub type Exp = u8;

/// `J`, `J²` and the irredundant decomposition of `J²` for one graph.
#[derive(Clone, Debug)]
pub struct Analysis {
    graph: Graph,
    cover: MonomialIdeal<Exp>,
    square: MonomialIdeal<Exp>,
    components: Vec<IrreducibleComponent<Exp>>,
    primes: Vec<MonomialPrime>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycleReport {
    /// Height-2 associated primes, one per edge.
    pub edges_found: Vec<MonomialPrime>,
    /// Supports of the associated primes of height ≥ 3, sorted.
    pub odd_cycles: Vec<VertexSet>,
}

impl OddCycleReport {
    pub fn triangles(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.odd_cycles.iter().copied().filter(|s| s.len() == 3)
    }

    pub fn holes(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.odd_cycles.iter().copied().filter(|s| s.len() >= 5)
    }

    pub fn longest(&self) -> Option<usize> {
        self.odd_cycles.iter().map(|s| s.len()).max()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Witness {
    pub vertices: VertexSet,
    /// The hole lives in the complement of the input graph.
    pub in_complement: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PerfectionVerdict {
    pub perfect: bool,
    pub witness: Option<Witness>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AdegReport {
    pub adeg: u64,
    /// `3|E| + t(G)` with `t(G)` the number of triangles.
    pub expected: u64,
    pub odd_hole_free: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DepthBounds {
    /// Size of the largest odd induced cycle.
    pub longest_odd_cycle: usize,
    pub depth_upper: usize,
    pub projdim_lower: usize,
}

fn inconsistent<T>(message: String) -> Result<T> {
    Err(Error::Inconsistency(message))
}

impl Analysis {
    pub fn new(g: &Graph) -> Result<Self> {
        let cover = cover_ideal::<Exp>(g)?;
        let square = cover.power(2);
        let components = irreducible_decomposition(&square)?;
        let primes = primes_of(&components);
        Ok(Analysis { graph: g.clone(), cover, square, components, primes })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cover_ideal(&self) -> &MonomialIdeal<Exp> {
        &self.cover
    }

    pub fn cover_square(&self) -> &MonomialIdeal<Exp> {
        &self.square
    }

    pub fn components(&self) -> &[IrreducibleComponent<Exp>] {
        &self.components
    }

    pub fn associated_primes(&self) -> &[MonomialPrime] {
        &self.primes
    }

    /// Splits `Ass(R/J²)` into edges and odd cycles, checking each support
    /// against the graph.
    pub fn odd_cycles(&self) -> Result<OddCycleReport> {
        let g = &self.graph;
        let mut edges_found = Vec::new();
        let mut odd_cycles = Vec::new();
        for p in &self.primes {
            let s = p.support;
            match s.len() {
                2 => {
                    let v = s.to_vec();
                    if !g.has_edge(v[0], v[1]) {
                        return inconsistent(format!("height-2 prime on non-edge {}", g.format_set(s)));
                    }
                    edges_found.push(*p);
                }
                h if h % 2 == 1 && h >= 3 && is_chordless_cycle(g, s) => odd_cycles.push(s),
                _ => return inconsistent(format!("prime on {} is neither an edge nor an odd induced cycle", g.format_set(s))),
            }
        }
        if edges_found.len() != g.edge_count() {
            return inconsistent(format!("{} edge primes for {} edges", edges_found.len(), g.edge_count()));
        }
        odd_cycles.sort_unstable();
        Ok(OddCycleReport { edges_found, odd_cycles })
    }

    /// Whether some associated prime has height ≥ 5, cross-checked against
    /// the threshold 4.
    pub fn has_odd_hole(&self) -> Result<bool> {
        let at_least = |h: usize| self.primes.iter().any(|p| p.height() >= h);
        let (four, five) = (at_least(4), at_least(5));
        if four != five {
            return inconsistent("associated prime of height 4".to_string());
        }
        Ok(five)
    }

    /// `J² : (L_t)^∞ = J²` holds iff no associated prime contains `L_t`.
    /// A monomial prime contains a sum of `t` distinct variables only when it
    /// contains all of them, and every `t` variables are summed in `L_t`, so
    /// this is the same as no associated prime having height ≥ `t`. At `t = 2`
    /// the edge primes qualify, so any graph with an edge fails.
    pub fn saturation_test(&self, t: usize) -> Result<bool> {
        if t <= 1 {
            return Err(Error::InvalidThreshold(t));
        }
        Ok(self.primes.iter().all(|p| p.height() < t))
    }

    /// `mult_{J²}(P)` for every associated prime.
    pub fn multiplicities(&self) -> Vec<(MonomialPrime, u64)> {
        self.primes
            .iter()
            .map(|p| (*p, multiplicity_at_prime(&self.square, p.support) as u64))
            .collect()
    }

    pub fn adeg_test(&self) -> Result<AdegReport> {
        let g = &self.graph;
        let adeg: u64 = self.multiplicities().iter().map(|&(_, m)| m).sum();
        let expected = 3 * g.edge_count() as u64 + count_triangles(g) as u64;
        let report = AdegReport { adeg, expected, odd_hole_free: adeg == expected };
        if adeg < expected {
            return inconsistent(format!("adeg(J^2) = {adeg} below 3|E|+t = {expected}"));
        }
        if report.odd_hole_free == self.has_odd_hole()? {
            return inconsistent("arithmetic degree disagrees with the associated primes".to_string());
        }
        Ok(report)
    }

    /// `deg(J²)`, required to equal `3|E|`.
    pub fn degree_check(&self) -> Result<u64> {
        let degree: u64 = minimal_primes(&self.primes)
            .iter()
            .map(|p| multiplicity_at_prime(&self.square, p.support) as u64)
            .sum();
        let expected = 3 * self.graph.edge_count() as u64;
        if degree != expected {
            return inconsistent(format!("deg(J^2) = {degree}, expected 3|E| = {expected}"));
        }
        Ok(degree)
    }

    /// The secant ideal `I(G)^{2}`: `(J²)^[2]` with every generator divisible
    /// by a square removed.
    pub fn secant_ideal(&self) -> Result<MonomialIdeal<Exp>> {
        let n = self.graph.n();
        let box2 = Monomial::new(vec![2; n])?;
        let dual = dual_from_components(&self.components, &box2)?;
        let kept = dual.gens().iter().filter(|m| m.is_squarefree()).cloned();
        MonomialIdeal::minimalize(n, kept)
    }

    /// `depth(R/J²) ≤ n − t` and `projdim(R/J²) ≥ t` for the longest odd
    /// induced cycle length `t`; `None` without odd induced cycles.
    pub fn depth_bounds(&self) -> Result<Option<DepthBounds>> {
        let n = self.graph.n();
        Ok(self.odd_cycles()?.longest().map(|t| DepthBounds {
            longest_odd_cycle: t,
            depth_upper: n - t,
            projdim_lower: t,
        }))
    }

    /// Lexicographically least among the smallest holes.
    pub fn smallest_hole(&self) -> Result<Option<VertexSet>> {
        Ok(self.odd_cycles()?.holes().min_by_key(|&s| (s.len(), s)))
    }
}

pub fn odd_induced_cycles_algebraic(g: &Graph) -> Result<OddCycleReport> {
    Analysis::new(g)?.odd_cycles()
}

pub fn has_odd_hole(g: &Graph) -> Result<bool> {
    Analysis::new(g)?.has_odd_hole()
}

pub fn saturation_test(g: &Graph, t: usize) -> Result<bool> {
    if t <= 1 {
        return Err(Error::InvalidThreshold(t));
    }
    Analysis::new(g)?.saturation_test(t)
}

pub fn adeg_test(g: &Graph) -> Result<AdegReport> {
    Analysis::new(g)?.adeg_test()
}

pub fn degree_check(g: &Graph) -> Result<u64> {
    Analysis::new(g)?.degree_check()
}

pub fn secant_ideal(g: &Graph) -> Result<MonomialIdeal<Exp>> {
    Analysis::new(g)?.secant_ideal()
}

pub fn depth_bounds(g: &Graph) -> Result<Option<DepthBounds>> {
    Analysis::new(g)?.depth_bounds()
}

/// Perfection via the associated primes of `J²` for `G` and its complement.
/// A side without edges has no holes and is skipped.
pub fn is_perfect(g: &Graph) -> Result<PerfectionVerdict> {
    if g.n() < 2 {
        return Err(Error::TooFewVertices { needed: 2, found: g.n() });
    }
    let complement = g.complement();
    let side = |h: &Graph| -> Result<Option<VertexSet>> {
        if h.edge_count() == 0 {
            Ok(None)
        } else {
            Analysis::new(h)?.smallest_hole()
        }
    };
    let (direct, dual) = std::thread::scope(|scope| {
        let handle = scope.spawn(|| side(&complement));
        let direct = side(g);
        (direct, handle.join().expect("complement analysis panicked"))
    });
    let witness = match (direct?, dual?) {
        (Some(vertices), _) => Some(Witness { vertices, in_complement: false }),
        (None, Some(vertices)) => Some(Witness { vertices, in_complement: true }),
        (None, None) => None,
    };
    Ok(PerfectionVerdict { perfect: witness.is_none(), witness })
}

//! Vertex covers of order 1 and 2 and the ideals they generate.
//!
//! A vector `a ∈ ℕⁿ` is a `k`-cover when it is nonzero and `a_i + a_j ≥ k`
//! on every edge; monomials and covers are identified through their
//! exponent vectors.

use crate::algebra::{alexander_dual_squarefree, Monomial, MonomialIdeal};
use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Bipartition, Graph, VertexSet};
use crate::scalar::Exponent;

pub type CoverVector<E> = Monomial<E>;

fn require_edges(g: &Graph) -> Result<()> {
    if g.edge_count() == 0 {
        Err(Error::Edgeless)
    } else {
        Ok(())
    }
}

/// All inclusion-minimal vertex covers, in lexicographic order.
///
/// Branches on a vertex `u` with an uncovered edge: either `u` joins the
/// cover, or it stays out and all of `N(u)` joins. Leaves are covers, and
/// the minimal ones are kept.
pub fn minimal_vertex_covers(g: &Graph) -> Result<Vec<VertexSet>> {
    require_edges(g)?;
    let mut out = Vec::new();
    branch_covers(g, VertexSet::EMPTY, VertexSet::EMPTY, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn branch_covers(g: &Graph, cover: VertexSet, excluded: VertexSet, out: &mut Vec<VertexSet>) {
    let open = g.vertices().difference(cover);
    let pivot = open
        .iter()
        .map(|v| (g.adjacent(v).intersection(open).len(), v))
        .filter(|&(d, _)| d > 0)
        .max_by_key(|&(d, v)| (d, std::cmp::Reverse(v)));
    let Some((_, u)) = pivot else {
        if cover.iter().all(|v| !g.adjacent(v).is_subset(cover)) {
            out.push(cover);
        }
        return;
    };
    branch_covers(g, cover.with(u), excluded, out);
    if g.adjacent(u).is_disjoint(excluded) {
        branch_covers(g, cover.union(g.adjacent(u)), excluded.with(u), out);
    }
}

/// Minimal vertex covers read off the Alexander dual of the edge ideal.
pub fn minimal_vertex_covers_by_duality(g: &Graph) -> Result<Vec<VertexSet>> {
    require_edges(g)?;
    let dual = alexander_dual_squarefree(&edge_ideal::<u8>(g))?;
    let mut out: Vec<VertexSet> = dual.gens().iter().map(Monomial::support).collect();
    out.sort_unstable();
    Ok(out)
}

/// `I(G) = (x_i x_j : ij ∈ E)`; the zero ideal for an edgeless graph.
pub fn edge_ideal<E: Exponent>(g: &Graph) -> MonomialIdeal<E> {
    let n = g.n();
    let gens = g
        .edges()
        .map(|(i, j)| Monomial::squarefree(n, VertexSet::singleton(i).with(j)))
        .collect();
    MonomialIdeal::minimalize_unchecked(n, gens)
}

/// The cover ideal `J = I(G)^∨`, generated by the minimal vertex covers.
pub fn cover_ideal<E: Exponent>(g: &Graph) -> Result<MonomialIdeal<E>> {
    let n = g.n();
    let gens = minimal_vertex_covers(g)?
        .into_iter()
        .map(|c| Monomial::squarefree(n, c))
        .collect();
    Ok(MonomialIdeal::minimalize_unchecked(n, gens))
}

/// True iff `a` is nonzero and `a_i + a_j ≥ k` on every edge.
///
/// Panics if `a` does not have one entry per vertex.
pub fn is_k_cover<E: Exponent>(g: &Graph, a: &CoverVector<E>, k: u64) -> bool {
    assert_eq!(a.ambient(), g.n(), "cover vector length must equal the vertex count");
    !a.is_one() && g.edges().all(|(i, j)| a.exponent(i).as_u64() + a.exponent(j).as_u64() >= k)
}

/// How a 2-cover decomposes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoCoverSplit<E: Exponent> {
    /// `a = first + second` with both 1-covers.
    OneCovers { first: CoverVector<E>, second: CoverVector<E> },
    /// `a = two + zero` with `two` a 2-cover and `zero` a nonzero vector.
    TwoAndZero { two: CoverVector<E>, zero: CoverVector<E> },
    Irreducible,
}

impl<E: Exponent> TwoCoverSplit<E> {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, TwoCoverSplit::Irreducible)
    }
}

fn require_two_cover<E: Exponent>(g: &Graph, a: &CoverVector<E>) -> Result<()> {
    if a.ambient() != g.n() {
        return Err(Error::AmbientMismatch { expected: g.n(), found: a.ambient() });
    }
    if !is_k_cover(g, a, 2) {
        return Err(Error::NotACover { order: 2 });
    }
    Ok(())
}

/// Splits a 2-cover, preferring a sum of two 1-covers.
///
/// Only whether an entry is positive matters for a 1-cover, so vertices
/// with `a_i ≥ 2` can feed both summands and vertices with `a_i = 0` have
/// only `a_i ≥ 2` neighbours. A split into two 1-covers therefore exists
/// exactly when the vertices with `a_i = 1` induce a bipartite graph. A
/// (2-cover, 0-cover) split exists iff lowering a single positive entry by
/// one leaves a 2-cover.
pub fn decompose_2cover<E: Exponent>(g: &Graph, a: &CoverVector<E>) -> Result<TwoCoverSplit<E>> {
    require_two_cover(g, a)?;
    if let Some((first, second)) = split_into_one_covers(g, a)? {
        return Ok(TwoCoverSplit::OneCovers { first, second });
    }
    let n = g.n();
    for i in a.support() {
        let lowered = a.with_exponent(i, a.exponent(i) - E::one());
        if is_k_cover(g, &lowered, 2) {
            let zero = Monomial::pure_power(n, i, E::one());
            return Ok(TwoCoverSplit::TwoAndZero { two: lowered, zero });
        }
    }
    Ok(TwoCoverSplit::Irreducible)
}

fn split_into_one_covers<E: Exponent>(
    g: &Graph,
    a: &CoverVector<E>,
) -> Result<Option<(CoverVector<E>, CoverVector<E>)>> {
    let n = g.n();
    let ones: VertexSet = a.support().iter().filter(|&i| a.exponent(i) == E::one()).collect();
    let heavy = a.support().difference(ones);
    let first_part = if g.edge_count() == 0 {
        // any two nonzero vectors summing to a
        if a.degree() < 2 {
            return Ok(None);
        }
        VertexSet::singleton(a.support().first().expect("nonzero cover"))
    } else {
        let sub = g.induced_subgraph(ones)?;
        match is_bipartite(&sub) {
            Bipartition::OddCycle(_) => return Ok(None),
            Bipartition::Bipartite { left, .. } => {
                let members = ones.to_vec();
                left.iter().map(|k| members[k]).collect::<VertexSet>().union(heavy)
            }
        }
    };
    let first = Monomial::squarefree(n, first_part.intersection(a.support()));
    let second = a.div(&first);
    debug_assert!(is_k_cover(g, &first, 1) && is_k_cover(g, &second, 1));
    Ok(Some((first, second)))
}

/// Shape of an irreducible 2-cover `a`: zero on an independent set `A`, two
/// on `B = N(A)`, one on the rest `C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IrreducibleCoverCertificate {
    pub independent: VertexSet,
    pub neighborhood: VertexSet,
    pub core: VertexSet,
}

/// Builds and verifies the certificate of an irreducible 2-cover: `A`
/// independent, `B = N(A)` not a vertex cover, `C` nonempty and inducing a
/// non-bipartite graph with no isolated vertex.
pub fn classify_irreducible_2cover<E: Exponent>(g: &Graph, a: &CoverVector<E>) -> Result<IrreducibleCoverCertificate> {
    if !decompose_2cover(g, a)?.is_irreducible() {
        return Err(Error::Reducible);
    }
    let mut cert = IrreducibleCoverCertificate {
        independent: VertexSet::EMPTY,
        neighborhood: VertexSet::EMPTY,
        core: VertexSet::EMPTY,
    };
    for i in 0..g.n() {
        match a.exponent(i).as_u64() {
            0 => cert.independent = cert.independent.with(i),
            1 => cert.core = cert.core.with(i),
            2 => cert.neighborhood = cert.neighborhood.with(i),
            e => return Err(Error::Inconsistency(format!("irreducible 2-cover has entry {e} at vertex {}", g.label(i)))),
        }
    }
    let fail = |what: &str| Err(Error::Inconsistency(format!("irreducible 2-cover certificate: {what}")));
    if !g.is_independent(cert.independent) {
        return fail("zero set is not independent");
    }
    if g.neighbors(cert.independent) != cert.neighborhood {
        return fail("two set differs from the neighbourhood of the zero set");
    }
    if g.is_vertex_cover(cert.neighborhood) {
        return fail("two set is a vertex cover");
    }
    if cert.core.is_empty() {
        return fail("one set is empty");
    }
    let core = g.induced_subgraph(cert.core)?;
    if is_bipartite(&core).is_bipartite() {
        return fail("one set induces a bipartite graph");
    }
    if (0..core.n()).any(|v| core.degree(v) == 0) {
        return fail("one set has an isolated vertex");
    }
    Ok(cert)
}

/// `J^(2) = ⋂_{ij ∈ E} (x_i, x_j)²`, each square formed as
/// `(x_i², x_j) ∩ (x_i, x_j²)`.
pub fn symbolic_square<E: Exponent>(g: &Graph) -> Result<MonomialIdeal<E>> {
    require_edges(g)?;
    let n = g.n();
    let (one, two) = (E::one(), E::two());
    let irreducible = |i: usize, ei: E, j: usize, ej: E| {
        MonomialIdeal::minimalize_unchecked(n, vec![Monomial::pure_power(n, i, ei), Monomial::pure_power(n, j, ej)])
    };
    let mut acc = MonomialIdeal::unit(n);
    for (i, j) in g.edges() {
        let square = irreducible(i, two, j, one).intersect(&irreducible(i, one, j, two))?;
        acc = acc.intersect(&square)?;
    }
    Ok(acc)
}

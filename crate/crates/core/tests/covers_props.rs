mod common;

use common::*;
use oddhole::algebra::{alexander_dual_squarefree, Monomial};
use oddhole::covers::{
    classify_irreducible_2cover, cover_ideal, decompose_2cover, edge_ideal, is_k_cover, minimal_vertex_covers,
    minimal_vertex_covers_by_duality, symbolic_square, TwoCoverSplit,
};
use oddhole::graph::{Graph, VertexSet};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        prop::collection::vec(any::<bool>(), pairs).prop_filter_map("has an edge", move |bits| {
            let all = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
            let g = Graph::from_edges(n, all.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e)).unwrap();
            (g.edge_count() > 0).then_some(g)
        })
    })
}

/// Minimal vertex covers by testing every subset.
fn oracle_covers(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let covers: Vec<VertexSet> =
        (0u64..(1 << n)).map(VertexSet::from_bits).filter(|&s| g.is_vertex_cover(s)).collect();
    let mut out: Vec<VertexSet> = covers
        .iter()
        .copied()
        .filter(|&c| !covers.iter().any(|&d| d != c && d.is_subset(c)))
        .collect();
    out.sort();
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cover_routes_agree(g in arb_graph(10)) {
        let covers = minimal_vertex_covers(&g).unwrap();
        prop_assert_eq!(&covers, &minimal_vertex_covers_by_duality(&g).unwrap());
        prop_assert_eq!(&covers, &oracle_covers(&g));
        prop_assert_eq!(cover_ideal::<u8>(&g).unwrap(), alexander_dual_squarefree(&edge_ideal::<u8>(&g)).unwrap());
    }

    #[test]
    fn squares_consist_of_two_covers(g in arb_graph(8)) {
        let square = cover_ideal::<u8>(&g).unwrap().power(2);
        let symbolic = symbolic_square::<u8>(&g).unwrap();
        prop_assert!(square.gens().iter().all(|a| is_k_cover(&g, a, 2)));
        prop_assert!(symbolic.gens().iter().all(|a| is_k_cover(&g, a, 2)));
        prop_assert!(square.is_subset(&symbolic));
        prop_assert_eq!(square == symbolic, oracle_bipartite(&g));
    }

    #[test]
    fn irreducible_iff_new_symbolic_generator(g in arb_graph(6)) {
        let n = g.n();
        let square = cover_ideal::<u8>(&g).unwrap().power(2);
        let symbolic = symbolic_square::<u8>(&g).unwrap();
        for code in 0..3usize.pow(n as u32) {
            let a = Monomial::new((0..n).map(|i| (code / 3usize.pow(i as u32) % 3) as u8).collect()).unwrap();
            if !is_k_cover(&g, &a, 2) {
                continue;
            }
            let split = decompose_2cover(&g, &a).unwrap();
            let new_generator = symbolic.gens().contains(&a) && !square.contains(&a);
            prop_assert_eq!(split.is_irreducible(), new_generator);
            let raw: Vec<u64> = a.exponents().iter().map(|&x| x as u64).collect();
            let (one_one, two_zero) = oracle_reducible(&g, &raw);
            prop_assert_eq!(matches!(split, TwoCoverSplit::OneCovers { .. }), one_one);
            prop_assert_eq!(split.is_irreducible(), !one_one && !two_zero);
            if split.is_irreducible() {
                let cert = classify_irreducible_2cover(&g, &a).unwrap();
                prop_assert_eq!(cert.independent.union(cert.neighborhood).union(cert.core), g.vertices());
            }
        }
    }
}

#[test]
fn c5_with_pendant_is_reducible() {
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
    let a = Monomial::<u8>::new(vec![2, 1, 1, 1, 1, 0]).unwrap();
    // the ones induce a path, so two 1-covers suffice
    assert_eq!(oracle_reducible(&g, &[2, 1, 1, 1, 1, 0]), (true, false));
    assert!(matches!(decompose_2cover(&g, &a).unwrap(), TwoCoverSplit::OneCovers { .. }));
}

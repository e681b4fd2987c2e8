mod common;

use common::*;
use oddhole::algebra::{Monomial, MonomialIdeal};
use oddhole::detection::{is_perfect, Analysis};
use oddhole::graph::Graph;
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn verdicts_agree(g in arb_graph(10)) {
        let a = Analysis::new(&g).unwrap();
        let report = a.odd_cycles().unwrap();
        prop_assert_eq!(&report.odd_cycles, &oracle_odd_cycles(&g, 3));
        let hole = oracle_has_odd_hole(&g);
        prop_assert_eq!(a.has_odd_hole().unwrap(), hole);
        prop_assert_eq!(a.adeg_test().unwrap().odd_hole_free, !hole);
        prop_assert_eq!(a.saturation_test(4).unwrap(), !hole);
        prop_assert_eq!(a.degree_check().unwrap(), 3 * g.edge_count() as u64);
        for (p, mult) in a.multiplicities() {
            match p.height() {
                2 => prop_assert_eq!(mult, 3),
                3 => prop_assert_eq!(mult, 1),
                _ => prop_assert!(mult >= 1),
            }
        }
        let n = g.n();
        let want = MonomialIdeal::minimalize(n, report.odd_cycles.iter().map(|&s| Monomial::<u8>::squarefree(n, s))).unwrap();
        prop_assert_eq!(a.secant_ideal().unwrap(), want);
        let bounds = a.depth_bounds().unwrap();
        prop_assert_eq!(bounds.map(|b| b.projdim_lower), report.longest());
    }

    #[test]
    fn perfection_matches_oracle(g in arb_graph(9)) {
        let v = is_perfect(&g).unwrap();
        prop_assert_eq!(v.perfect, oracle_perfect(&g));
        if let Some(w) = v.witness {
            let host = if w.in_complement { g.complement() } else { g.clone() };
            let holes = oracle_odd_cycles(&host, 5);
            prop_assert!(holes.contains(&w.vertices));
            let least = holes.iter().min_by_key(|s| (s.len(), **s)).copied();
            prop_assert_eq!(Some(w.vertices), least);
            if w.in_complement {
                prop_assert!(!oracle_has_odd_hole(&g));
            }
        }
    }
}

use proptest::prelude::*;

use spanmu::construct::{
    attach_pendants, build_spanning_tree, grow_dominating_tree, verify_certificate, BuildOptions, Starts,
};
use spanmu::graph::Graph;
use spanmu::mis::independence_number;
use spanmu::oracle::{mrct, prufer_decode, prufer_encode, DEFAULT_CAP};
use spanmu::rational::{parse_rational, ratio};

/// A connected graph: a Prüfer tree on `n` vertices plus some extra pairs.
fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (3..=max_n)
        .prop_flat_map(|n| {
            let seq = prop::collection::vec(0..n, n - 2);
            let extra = prop::collection::vec((0..n, 0..n), 0..2 * n);
            (Just(n), seq, extra)
        })
        .prop_map(|(n, seq, extra)| {
            let mut edges = prufer_decode(&seq).unwrap().edges();
            edges.extend(extra.into_iter().filter(|(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))));
            edges.sort_unstable();
            edges.dedup();
            Graph::from_edges(n, &edges).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn distances_form_a_metric(g in connected_graph(12)) {
        let d = g.distance_matrix().unwrap();
        let n = g.n();
        for u in 0..n {
            prop_assert_eq!(d[u][u], 0);
            for v in 0..n {
                prop_assert_eq!(d[u][v], d[v][u]);
                prop_assert_eq!(d[u][v] == 1, g.has_edge(u, v));
                for w in 0..n {
                    prop_assert!(d[u][w] <= d[u][v] + d[v][w]);
                }
            }
        }
    }

    #[test]
    fn edges_never_raise_wiener(g in connected_graph(12), a in 0usize..12, b in 0usize..12) {
        let (u, v) = (a % g.n(), b % g.n());
        prop_assume!(u != v && !g.has_edge(u, v));
        let h = g.with_edge(u.min(v), u.max(v)).unwrap();
        prop_assert!(h.wiener_index().unwrap() < g.wiener_index().unwrap());
    }

    #[test]
    fn prufer_round_trip(seq in (3usize..20).prop_flat_map(|n| prop::collection::vec(0..n, n - 2))) {
        let t = prufer_decode(&seq).unwrap();
        prop_assert_eq!(prufer_encode(&t).unwrap(), seq);
    }

    #[test]
    fn rational_text_round_trip(num in -500i64..500, den in 1i64..500) {
        let r = ratio(num, den);
        prop_assert_eq!(parse_rational(&r.to_string()), Some(r));
    }

    #[test]
    fn growth_dominates_with_an_independent_core(g in connected_graph(14), s in 0usize..14) {
        let start = s % g.n();
        let trace = grow_dominating_tree(&g, start).unwrap();
        prop_assert_eq!(trace.independent[0], start);
        prop_assert!(g.is_independent_set(&trace.independent).unwrap());
        prop_assert_eq!(trace.base_edges.len() + 1, trace.t());
        prop_assert!(trace.t() <= 2 * trace.k() - 1);
        for v in 0..g.n() {
            if trace.base.binary_search(&v).is_err() {
                prop_assert!(trace.independent.iter().any(|&a| g.has_edge(a, v)));
            }
        }
        let (tree, _) = attach_pendants(&g, &trace).unwrap();
        prop_assert!(tree.edges().iter().all(|&(u, v)| g.has_edge(u, v)));
    }

    #[test]
    fn constructed_trees_certify_and_respect_the_optimum(g in connected_graph(9)) {
        let alpha = independence_number(&g);
        let out = build_spanning_tree(&g, BuildOptions::default()).unwrap();
        prop_assert!(verify_certificate(&g, &out.tree, &out.certificate, Some(alpha)).is_ok());
        prop_assert!(out.certificate.k <= alpha);
        let (_, best) = mrct(&g, DEFAULT_CAP).unwrap();
        prop_assert!(best <= out.certificate.mu);
        for start in 0..g.n() {
            let one = build_spanning_tree(&g, BuildOptions { starts: Starts::One(start), refine: true }).unwrap();
            prop_assert!(one.certificate.mu >= out.certificate.mu);
        }
    }
}

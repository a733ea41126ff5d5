//! Randomized properties of closure, the exact searches and the Grundy
//! identities on small graphs.

use proptest::prelude::*;
use zfgraph::bitset::VertexSet;
use zfgraph::forcing::{
    closure, closure_naive, grundy_exact, is_zero_forcing, variant_number_exact, zero_forcing_number_exact,
    GrundyVariant, SearchOptions, ZfVariant,
};
use zfgraph::graphs::Graph;

fn graph(n: usize, bits: &[bool], connect: bool) -> Graph {
    let mut edges = Vec::new();
    let mut it = bits.iter().cycle();
    for v in 1..n {
        if connect {
            edges.push((v - 1, v));
        }
        for u in 0..v {
            if *it.next().unwrap() && !(connect && u + 1 == v) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn arb_graph(max: usize, connect: bool) -> impl Strategy<Value = Graph> {
    (1..=max, prop::collection::vec(prop::bool::weighted(0.3), 1..200))
        .prop_map(move |(n, bits)| graph(n, &bits, connect))
}

fn arb_graph_and_set(max: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    arb_graph(max, false).prop_flat_map(|g| {
        let n = g.v_count();
        (Just(g), prop::collection::vec(any::<bool>(), n), prop::collection::vec(any::<bool>(), n)).prop_map(
            move |(g, a, extra)| {
                let a_set = VertexSet::from_ids(n, (0..n).filter(|&i| a[i]));
                let b_set = VertexSet::from_ids(n, (0..n).filter(|&i| a[i] || extra[i]));
                (g, a_set, b_set)
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn closure_is_a_closure_operator((g, a, b) in arb_graph_and_set(24)) {
        let (ca, trace) = closure(&g, &a);
        let (cb, _) = closure(&g, &b);
        prop_assert!(a.is_subset(&ca));
        prop_assert!(ca.is_subset(&cb));
        prop_assert_eq!(&closure(&g, &ca).0, &ca);
        prop_assert_eq!(&closure_naive(&g, &a), &ca);
        prop_assert_eq!(trace.replay(&g).unwrap(), ca);
    }

    #[test]
    fn search_agrees_with_grundy(g in arb_graph(10, true)) {
        let n = g.v_count();
        let r = zero_forcing_number_exact(&g, &SearchOptions::default()).unwrap();
        let z = r.value().unwrap();
        prop_assert!(is_zero_forcing(&g, r.certificate.as_ref().unwrap()));
        prop_assert_eq!(r.certificate.as_ref().unwrap().count(), z);
        let zg = grundy_exact(&g, GrundyVariant::ZGrundy, 40).unwrap();
        let gr = grundy_exact(&g, GrundyVariant::Grundy, 40).unwrap();
        prop_assert!(zg.validate(&g) && gr.validate(&g));
        prop_assert_eq!(z, n - zg.len());
        prop_assert!(z >= n - gr.len());
    }

    #[test]
    fn certificates_do_not_depend_on_workers(g in arb_graph(12, true)) {
        let one = SearchOptions { workers: 1, ..SearchOptions::default() };
        let four = SearchOptions { workers: 4, ..SearchOptions::default() };
        prop_assert_eq!(
            zero_forcing_number_exact(&g, &one).unwrap().certificate,
            zero_forcing_number_exact(&g, &four).unwrap().certificate
        );
    }

    #[test]
    fn variant_chain(g in arb_graph(9, true)) {
        prop_assume!(g.v_count() >= 2);
        let opts = SearchOptions::default();
        let z = zero_forcing_number_exact(&g, &opts).unwrap().value().unwrap();
        let (zt, bt) = variant_number_exact(&g, ZfVariant::Total, &opts).unwrap().unwrap();
        let (zc, bc) = variant_number_exact(&g, ZfVariant::Connected, &opts).unwrap().unwrap();
        prop_assert!(ZfVariant::Total.accepts(&g, &bt) && ZfVariant::Connected.accepts(&g, &bc));
        prop_assert!(z <= zt && z <= zc);
        if z >= 2 {
            prop_assert!(zt <= zc);
        }
    }
}

#[test]
fn brute_force_matches_search_on_tiny_graphs() {
    // all 2^10 leader sets of a few fixed graphs
    for g in [Graph::cycle(10), Graph::path(10), graph(10, &[true, false, false, true, false], false)] {
        let n = g.v_count();
        let best = (0u32..1 << n)
            .filter(|m| is_zero_forcing(&g, &VertexSet::from_ids(n, (0..n).filter(|i| m >> i & 1 == 1))))
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap();
        let r = zero_forcing_number_exact(&g, &SearchOptions::default()).unwrap();
        assert_eq!(r.value(), Some(best));
    }
}

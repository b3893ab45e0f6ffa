mod common;

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use dichoose::caps::Caps;
use dichoose::certificate::{verify_certificate, LowerBoundCertificate};
use dichoose::dicolour::{dichromatic_number, dicolour_via_backedge, is_dicolouring};
use dichoose::extraction::{max_cut_bipartite, min_degree_core};
use dichoose::format::{self, GraphFile};
use dichoose::graph::{Digraph, Graph, VertexOrdering};
use dichoose::lists::ListAssignment;
use dichoose::probability::{
    is_saturated, mc_acyclic_probability, saturation_experiment, verify_parameter_chain, verify_prop_2_4, witness_orientation_search,
    SaturationParams, SearchMode, SideLists,
};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |keep| {
            let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            Graph::from_edges(n, edges.zip(&keep).filter(|(_, &k)| k).map(|(e, _)| e)).unwrap()
        })
    })
}

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |keep| {
            let arcs = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|(u, v)| u != v);
            Digraph::from_arcs(n, arcs.zip(keep).filter(|(_, k)| *k).map(|(a, _)| a)).unwrap()
        })
    })
}

fn orientation(max_n: usize) -> impl Strategy<Value = Digraph> {
    (graph(max_n), any::<u64>()).prop_map(|(g, seed)| dichoose::orientation::random_orientation(&g, seed))
}

fn lists(n: usize, r: usize, universe: u32) -> impl Strategy<Value = ListAssignment> {
    proptest::collection::vec(proptest::sample::subsequence((1..=universe).collect::<Vec<_>>(), r), n)
        .prop_map(|ls| ListAssignment::new(ls.into_iter().map(|l| l.into_iter().collect()).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_text_round_trip(g in graph(9)) {
        let parsed = format::parse_graph_text(&format::write_graph(&g)).unwrap();
        prop_assert_eq!(parsed, GraphFile::Graph(g));
    }

    #[test]
    fn digraph_text_round_trip(d in digraph(8)) {
        let parsed = format::parse_graph_text(&format::write_digraph(&d)).unwrap();
        prop_assert_eq!(parsed, GraphFile::Digraph(d));
    }

    #[test]
    fn lists_and_colourings_round_trip(l in lists(6, 3, 7), colours in proptest::collection::vec(1u32..9, 1..8)) {
        prop_assert_eq!(format::parse_lists_text(&format::write_lists(&l)).unwrap(), l);
        let c = format::parse_colouring_text(&format::write_colouring(&colours)).unwrap();
        prop_assert_eq!(c.colours(), &colours[..]);
    }

    #[test]
    fn side_lists_round_trip(entries in proptest::collection::btree_map(0usize..20, proptest::collection::btree_set(1u32..10, 1..4), 0..6)) {
        let text = format::write_side_lists(&entries);
        prop_assert_eq!(format::parse_side_lists_text(&text).unwrap(), entries);
    }

    #[test]
    fn dichromatic_matches_brute_force(d in digraph(6)) {
        let s = dichromatic_number(&d, &Caps::default()).unwrap();
        prop_assert_eq!(s.value, common::brute_dichromatic(&d));
        prop_assert!(is_dicolouring(&d, &s.witness).unwrap());
    }

    #[test]
    fn backedge_colouring_is_a_dicolouring(d in orientation(8), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut order: Vec<usize> = (0..d.n()).collect();
        order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
        let ord = VertexOrdering::new(order).unwrap();
        let c = dicolour_via_backedge(&d, &ord, &Caps::default()).unwrap();
        prop_assert!(is_dicolouring(&d, &c).unwrap());
    }

    #[test]
    fn cores_are_idempotent(g in graph(10), t in 0usize..5) {
        let core = min_degree_core(&g, t);
        prop_assert!((0..core.graph.n()).all(|v| core.graph.degree(v) >= t));
        let again = min_degree_core(&core.graph, t);
        prop_assert_eq!(again.graph.n(), core.graph.n());
        prop_assert_eq!(again.graph.edge_count(), core.graph.edge_count());
    }

    #[test]
    fn max_cut_keeps_half_the_edges(g in graph(12)) {
        let w = max_cut_bipartite(&g, &Caps::default()).unwrap();
        prop_assert!(2 * w.cross_edges().len() >= g.edge_count());
    }

    #[test]
    fn witness_certificates_verify(g in graph(5), l in lists(5, 1, 3), seed in any::<u64>()) {
        let l = ListAssignment::new(l.lists()[..g.n()].to_vec()).unwrap();
        let outcome = witness_orientation_search(&g, &l, SearchMode::Exhaustive, seed, &Caps::default()).unwrap();
        if let Some(cert) = outcome.certificate() {
            prop_assert!(verify_certificate(cert, &Caps::default()).unwrap().is_valid());
            let reparsed = LowerBoundCertificate::parse(&cert.to_text()).unwrap();
            prop_assert_eq!(&reparsed, cert);
        }
    }

    #[test]
    fn saturation_is_monotone_in_neighbours(
        base in proptest::collection::vec(proptest::sample::subsequence(vec![1u32, 2, 3, 4], 2), 0..12),
        extra in proptest::sample::subsequence(vec![1u32, 2, 3, 4], 2),
        k in 1usize..3,
    ) {
        // A star centred at 0 with B-leaves 1..=m, then one more leaf.
        let params = SaturationParams::new(2, k).unwrap();
        let caps = Caps::default();
        let m = base.len();
        let before = Graph::from_edges(m + 1, (1..=m).map(|b| (0, b))).unwrap();
        let after = Graph::from_edges(m + 2, (1..=m + 1).map(|b| (0, b))).unwrap();
        let mut side: SideLists = base.iter().enumerate().map(|(i, l)| (i + 1, l.iter().copied().collect())).collect();
        let was = is_saturated(&before, 0, &side, &params, &caps).unwrap();
        side.insert(m + 1, extra.into_iter().collect::<BTreeSet<u32>>());
        let now = is_saturated(&after, 0, &side, &params, &caps).unwrap();
        prop_assert!(!was || now);
    }

    #[test]
    fn binomial_inequalities_hold(r in 2u64..=200) {
        prop_assert!(verify_prop_2_4(r).unwrap().both_hold());
    }
}

#[test]
fn chain_ratio_is_exact_up_to_1000() {
    for r in 1..=1000 {
        assert!(verify_parameter_chain(r).unwrap().ratio_exact, "r = {r}");
    }
}

#[test]
fn experiments_ignore_worker_count() {
    let g = dichoose::constructions::random_bipartite(6, 10, 0.6, 3).unwrap();
    let a: Vec<usize> = (0..6).collect();
    let b: Vec<usize> = (6..16).collect();
    let params = SaturationParams::new(2, 1).unwrap();
    let mut texts = BTreeMap::new();
    for threads in [1, 3, 8] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let (sat, mc) = pool.install(|| {
            (
                saturation_experiment(&g, &a, &b, &params, 200, 9, None, &Caps::default()).unwrap().report.to_text(),
                mc_acyclic_probability(&g, 20_000, 9).unwrap().report.to_text(),
            )
        });
        texts.insert(threads, (sat, mc));
    }
    let first = &texts[&1];
    assert!(texts.values().all(|t| t == first));
}

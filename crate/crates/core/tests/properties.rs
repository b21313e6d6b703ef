mod common;

use std::collections::BTreeMap;

use hotruss::oracle::{decompose_naive, ktruss_naive};
use hotruss::{
    compute_all_supports, hot_decompose, hot_decompose_plus, hot_decompose_plus_with, hot_top_r, lower_bounds,
    support_tau, upper_bounds, EdgeId, Graph, PeelOptions, RunStats, TrussResult,
};
use proptest::prelude::*;

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (2usize..14)
        .prop_flat_map(|n| {
            let pairs: Vec<(u32, u32)> = (0..n as u32)
                .flat_map(|a| (a + 1..n as u32).map(move |b| (a, b)))
                .collect();
            (Just(n), proptest::sample::subsequence(pairs.clone(), 0..=pairs.len()))
        })
        .prop_map(|(n, edges)| Graph::from_edges(n, &edges))
}

/// Truss numbers keyed by label pair, for comparing differently built graphs.
fn by_labels(g: &Graph, r: &TrussResult) -> BTreeMap<(u64, u64), u32> {
    r.iter()
        .map(|(e, k)| {
            let (a, b) = g.endpoints(e);
            let (la, lb) = (g.label(a), g.label(b));
            ((la.min(lb), la.max(lb)), k)
        })
        .collect()
}

proptest! {
    #[test]
    fn decomposers_match_oracle(g in graph_strategy(), tau in 1u32..5) {
        let naive = decompose_naive(&g, tau);
        let (base, bs) = hot_decompose(&g, tau);
        let (opt, os) = hot_decompose_plus(&g, tau);
        prop_assert_eq!(base.phi_table(), naive.phi_table());
        prop_assert_eq!(opt.phi_table(), naive.phi_table());
        prop_assert!(os.support_recomputations <= bs.support_recomputations);
        prop_assert_eq!(bs.edges_peeled as usize, g.edge_count());
        prop_assert_eq!(os.edges_peeled as usize, g.edge_count());
    }

    #[test]
    fn truss_membership_matches_naive_truss(g in graph_strategy(), tau in 1u32..4) {
        let (res, _) = hot_decompose_plus(&g, tau);
        let top = res.k_max().unwrap_or(2);
        let mut previous: Option<Vec<EdgeId>> = None;
        for k in 2..=top + 1 {
            let naive = ktruss_naive(&g, k, tau);
            prop_assert_eq!(&res.truss(k), &naive, "k={}", k);
            if let Some(prev) = &previous {
                prop_assert!(naive.iter().all(|e| prev.contains(e)));
            }
            previous = Some(naive);
        }
    }

    #[test]
    fn input_order_does_not_matter(g in graph_strategy(), tau in 1u32..4, flip in any::<bool>()) {
        let reversed: Vec<(u64, u64)> = g
            .edge_list()
            .into_iter()
            .rev()
            .map(|(_, a, b)| if flip { (b as u64, a as u64) } else { (a as u64, b as u64) })
            .collect();
        let (h, _) = Graph::from_labeled_edges(reversed);
        let (rg, _) = hot_decompose_plus(&g, tau);
        let (rh, _) = hot_decompose_plus(&h, tau);
        prop_assert_eq!(by_labels(&g, &rg), by_labels(&h, &rh));
    }

    #[test]
    fn oracle_ignores_relabelling(g in graph_strategy(), tau in 1u32..4) {
        let n = g.vertex_count() as u64;
        let relabelled: Vec<(u64, u64)> =
            g.edge_list().into_iter().map(|(_, a, b)| (n - a as u64, n - b as u64)).collect();
        let (h, _) = Graph::from_labeled_edges(relabelled);
        let mut want: BTreeMap<(u64, u64), u32> = BTreeMap::new();
        for ((a, b), k) in by_labels(&g, &decompose_naive(&g, tau)) {
            want.insert(((n - b), (n - a)), k);
        }
        prop_assert_eq!(by_labels(&h, &decompose_naive(&h, tau)), want);
    }

    #[test]
    fn bounds_sandwich_truss_number(g in graph_strategy(), tau in 1u32..5) {
        let mut stats = RunStats::default();
        let lower = lower_bounds(&g, tau, &mut stats);
        let supports = compute_all_supports(&g, tau, &mut stats);
        let upper = upper_bounds(&g, tau, &supports, &mut stats);
        let naive = decompose_naive(&g, tau);
        for (e, phi) in naive.iter() {
            prop_assert!(lower[e.index()] <= phi, "{} lower {} phi {}", e, lower[e.index()], phi);
            prop_assert!(phi <= upper[e.index()], "{} upper {} phi {}", e, upper[e.index()], phi);
        }
    }

    #[test]
    fn larger_tau_never_lowers_truss_number(g in graph_strategy(), tau in 1u32..4) {
        let (a, _) = hot_decompose_plus(&g, tau);
        let (b, _) = hot_decompose_plus(&g, tau + 1);
        for (e, k) in a.iter() {
            prop_assert!(b.phi(e).unwrap() >= k);
        }
    }

    #[test]
    fn deleting_an_edge_never_raises_support(g in graph_strategy(), tau in 1u32..4, pick in any::<prop::sample::Index>()) {
        prop_assume!(g.edge_count() > 0);
        let edges: Vec<EdgeId> = g.edges().collect();
        let gone = edges[pick.index(edges.len())];
        let mut h = g.clone();
        h.remove_edge(gone).unwrap();
        for e in h.edges() {
            prop_assert!(support_tau(&h, e, tau).unwrap() <= support_tau(&g, e, tau).unwrap());
        }
    }

    #[test]
    fn self_check_never_fires(g in graph_strategy(), tau in 1u32..5) {
        let (_, stats) = hot_decompose_plus_with(&g, tau, PeelOptions { self_check: true });
        prop_assert_eq!(stats.self_check_failures, 0);
        prop_assert_eq!(stats.self_checks, stats.unchanged_skips);
    }

    #[test]
    fn top_r_is_the_top_slice(g in graph_strategy(), tau in 1u32..4, r in 1u32..6) {
        let (full, _) = hot_decompose(&g, tau);
        let (top, _) = hot_top_r(&g, tau, r);
        prop_assert_eq!(top.k_max, full.k_max());
        let mut want = full.top_levels(r);
        for v in want.values_mut() {
            v.sort_unstable();
        }
        prop_assert_eq!(top.trusses, want);
    }
}

#[test]
fn two_cliques_joined_by_a_bridge() {
    let mut edges = common::clique(5);
    edges.extend(common::clique(4).into_iter().map(|(a, b)| (a + 5, b + 5)));
    edges.push((4, 5));
    let g = Graph::from_edges(9, &edges);
    let (r, _) = hot_decompose_plus(&g, 1);
    assert_eq!(r.phi(g.find_edge(4, 5).unwrap()), Some(2));
    assert_eq!(r.phi(g.find_edge(0, 1).unwrap()), Some(5));
    assert_eq!(r.phi(g.find_edge(5, 6).unwrap()), Some(4));
    // two hops reach across the bridge
    let (r2, _) = hot_decompose_plus(&g, 2);
    assert_eq!(r2.phi_table(), decompose_naive(&g, 2).phi_table());
}

#[test]
fn k4_plus_path_top_one() {
    let mut edges = common::clique(4);
    edges.extend([(4, 5), (5, 6)]);
    let g = Graph::from_edges(7, &edges);
    let (top, _) = hot_top_r(&g, 1, 1);
    assert_eq!(top.k_max, Some(4));
    assert_eq!(top.trusses[&4].len(), 6);
    assert!(top.trusses[&4].iter().all(|&e| g.endpoints(e).1 < 4));
}

#[test]
fn random_graphs_match_oracle() {
    for case in common::suite(40) {
        let naive = decompose_naive(&case.graph, 3);
        let (opt, _) = hot_decompose_plus(&case.graph, 3);
        assert_eq!(opt.phi_table(), naive.phi_table(), "{}", case.name);
    }
}

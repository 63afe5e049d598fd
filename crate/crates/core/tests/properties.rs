use std::collections::BTreeSet;

use biclique::decomposer::{decompose, decompose_bipartite, verify_bipartite_decomposition, verify_decomposition};
use biclique::finder::{find_biclique, find_biclique_bipartite, scan_bipartite, scan_general, FinderConfig};
use biclique::io::{parse_bipartite, parse_graph, serialize_bipartite, serialize_graph};
use biclique::oracle::{max_balanced_biclique, reference_find, reference_find_bipartite};
use biclique::{gen, BipartiteGraph, Graph};
use proptest::prelude::*;

/// A random simple graph on up to `max_n` vertices, any density.
fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n, 0u32..=100, any::<u64>()).prop_map(|(n, pct, seed)| {
        let max_m = n * (n - 1) / 2;
        gen::gnm(n, max_m * pct as usize / 100, seed).unwrap()
    })
}

fn bipartite(max_side: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1..=max_side, 1..=max_side, 0u32..=100, any::<u64>()).prop_map(|(a, b, pct, seed)| {
        gen::bipartite_gnm(a, b, a * b * pct as usize / 100, seed).unwrap()
    })
}

fn naive_common(g: &Graph, c: &[usize], r: &[usize]) -> Vec<usize> {
    (0..g.n())
        .filter(|w| !r.contains(w))
        .filter(|&w| c.iter().all(|&v| g.has_edge(v, w)))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn deletions_keep_graph_consistent(g in graph(40), picks in proptest::collection::vec(any::<u64>(), 1..20)) {
        let mut g = g;
        for p in picks {
            let edges: Vec<_> = g.edges().collect();
            if edges.is_empty() {
                break;
            }
            let (u, v) = edges[p as usize % edges.len()];
            let before = g.m();
            g.delete_biclique_edges(&[u], &[v]).unwrap();
            prop_assert_eq!(g.m(), before - 1);
            prop_assert!(g.audit().is_ok());
        }
    }

    #[test]
    fn common_neighbors_match_double_loop(g in graph(64), seed in any::<u64>()) {
        let n = g.n();
        let mut s = seed | 1;
        let mut bits = || { s ^= s << 13; s ^= s >> 7; s ^= s << 17; s };
        let r: Vec<usize> = (0..n).filter(|_| bits() % 3 == 0).collect();
        let mut c: Vec<usize> = r.iter().copied().filter(|_| bits() % 2 == 0).collect();
        if c.is_empty() {
            c.push(0);
        }
        let mut r = r;
        if !r.contains(&c[0]) {
            r.push(c[0]);
            r.sort();
        }
        prop_assert_eq!(g.common_neighbors_outside(&c, &r).unwrap(), naive_common(&g, &c, &r));
    }

    #[test]
    fn top_degree_ignores_input_order(g in graph(40), r_frac in 0.0f64..=1.0, rot in any::<usize>()) {
        let mut edges: Vec<_> = g.edges().collect();
        let k = if edges.is_empty() { 0 } else { rot % edges.len() };
        edges.rotate_left(k);
        edges.reverse();
        let swapped: Vec<_> = edges.iter().map(|&(u, v)| (v, u)).collect();
        let h = Graph::from_edge_list(g.n(), &swapped).unwrap();
        let r = (r_frac * g.n() as f64) as usize;
        let top = g.top_degree_vertices(r);
        prop_assert_eq!(&top, &h.top_degree_vertices(r));
        // every listed vertex dominates every unlisted one
        let chosen: BTreeSet<_> = top.iter().copied().collect();
        let min_in = top.iter().map(|&v| g.degree(v)).min();
        let max_out = (0..g.n()).filter(|v| !chosen.contains(v)).map(|v| g.degree(v)).max();
        if let (Some(lo), Some(hi)) = (min_in, max_out) {
            prop_assert!(lo >= hi);
        }
    }

    #[test]
    fn text_round_trips(g in graph(50), bg in bipartite(20)) {
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize_graph(&back), text);
        let text = serialize_bipartite(&bg);
        let back = parse_bipartite(&text).unwrap();
        prop_assert_eq!(&back, &bg);
        prop_assert_eq!(serialize_bipartite(&back), text);
    }

    #[test]
    fn fixed_param_scan_matches_reference(g in graph(48), q in 1usize..4, extra in any::<usize>()) {
        let n = g.n();
        prop_assume!(q <= n);
        let r = q + extra % (n - q + 1);
        let fast = scan_general(&g, q, r, FinderConfig::default()).unwrap();
        prop_assert_eq!(&fast.biclique, &reference_find(&g, q, r).unwrap());
        prop_assert_eq!(&fast, &scan_general(&g, q, r, FinderConfig::parallel()).unwrap());
    }

    #[test]
    fn bipartite_scan_matches_reference(g in bipartite(24), q in 1usize..4, extra in any::<usize>()) {
        let b = g.b();
        prop_assume!(q <= b && q <= g.a());
        let r = q + extra % (b - q + 1);
        let fast = scan_bipartite(&g, q, r, FinderConfig::default()).unwrap();
        prop_assert_eq!(&fast.biclique, &reference_find_bipartite(&g, q, r).unwrap());
    }

    #[test]
    fn find_is_sound_and_deterministic(g in graph(80)) {
        prop_assume!(g.m() > 0);
        let rep = find_biclique(&g, FinderConfig::default()).unwrap();
        prop_assert!(rep.biclique.validate(&g).is_ok());
        prop_assert!(rep.q_achieved <= rep.q_target);
        prop_assert_eq!(rep.q_achieved, rep.biclique.size());
        prop_assert_eq!(&rep, &find_biclique(&g, FinderConfig::default()).unwrap());
        prop_assert_eq!(&rep, &find_biclique(&g, FinderConfig::parallel()).unwrap());
    }

    #[test]
    fn find_never_beats_oracle(g in graph(16)) {
        prop_assume!(g.m() > 0);
        let rep = find_biclique(&g, FinderConfig::default()).unwrap();
        let (best, witness) = max_balanced_biclique(&g, 24).unwrap();
        prop_assert!(rep.q_achieved <= best);
        let w = witness.unwrap();
        prop_assert!(w.validate(&g).is_ok());
        prop_assert_eq!(w.size(), best);
    }

    #[test]
    fn bipartite_find_is_sound(g in bipartite(40)) {
        prop_assume!(g.m() > 0);
        let rep = find_biclique_bipartite(&g, FinderConfig::default()).unwrap();
        prop_assert!(rep.biclique.validate_bipartite(&g).is_ok());
        prop_assert!(rep.q_achieved <= rep.q_target);
    }

    #[test]
    fn decompositions_partition_edges(g in graph(70)) {
        let d = decompose(&g, FinderConfig::default()).unwrap();
        let report = verify_decomposition(&g, &d);
        prop_assert!(report.is_valid(), "{:?}", report.violations);
        let loop_parts = d.loop_parts();
        let loop_edges: usize = d.phases.iter().map(|p| p.edges_removed).sum();
        prop_assert_eq!(loop_edges + d.parts.len() - loop_parts, g.m());
        for p in &d.parts[..loop_parts] {
            prop_assert_eq!(p.a.len(), p.b.len());
        }
        for p in &d.parts[loop_parts..] {
            prop_assert_eq!((p.a.len(), p.b.len()), (1, 1));
        }
        prop_assert!(loop_parts <= g.m());
        let remaining = d.parts.len() - loop_parts;
        prop_assert!(!biclique::decomposer::general_threshold_exceeded(g.n(), remaining));
        prop_assert!(d.phases.windows(2).all(|w| w[0].ell < w[1].ell));
    }

    #[test]
    fn bipartite_decompositions_partition_edges(g in bipartite(40)) {
        let d = decompose_bipartite(&g, FinderConfig::default()).unwrap();
        let report = verify_bipartite_decomposition(&g, &d);
        prop_assert!(report.is_valid(), "{:?}", report.violations);
        let loop_edges: usize = d.phases.iter().map(|p| p.edges_removed).sum();
        prop_assert_eq!(loop_edges + d.parts.len() - d.loop_parts(), g.m());
    }
}

#[test]
fn structured_families_decompose_exactly() {
    let mut inputs = vec![gen::complete(30), gen::complete_bipartite_general(7, 20).unwrap()];
    let star: Vec<_> = (1..40).map(|v| (0, v)).collect();
    inputs.push(Graph::from_edge_list(40, &star).unwrap());
    let matching: Vec<_> = (0..20).map(|i| (2 * i, 2 * i + 1)).collect();
    inputs.push(Graph::from_edge_list(40, &matching).unwrap());
    for g in &inputs {
        let d = decompose(g, FinderConfig::default()).unwrap();
        assert!(verify_decomposition(g, &d).is_valid());
    }
    let d = decompose(&gen::complete(30), FinderConfig::default()).unwrap();
    assert!(d.parts.len() >= 29);
}

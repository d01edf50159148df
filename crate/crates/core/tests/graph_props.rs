mod common;

use equisurf::graph::io::{parse_graph, serialize_graph};
use equisurf::graph::{articulation_points, bipartition, classify_basic, classify_shape, complete_bipartite, Shape};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn text_round_trip(g in common::arb_graph(12)) {
        let text = serialize_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn classification_matches_brute_force(g in common::arb_graph(8)) {
        let c = classify_basic(&g);
        prop_assert_eq!(c.connected, common::is_connected(&g));
        prop_assert_eq!(c.bipartition.is_some(), bipartition(&g).is_some());
        if let Some(bp) = &c.bipartition {
            prop_assert!(g.edges().iter().all(|&(u, v)| bp.side_a.contains(&u) != bp.side_a.contains(&v)));
        }
        // biconnected: connected, at least 3 vertices (or K_2) and no cut vertex
        let cut_free = g.vertices().all(|v| g.vertex_count() <= 2 || common::is_connected(&common::without_vertex(&g, v)));
        let expect = c.connected && g.vertex_count() >= 2 && cut_free;
        prop_assert_eq!(c.biconnected, expect);
        if c.connected {
            prop_assert_eq!(articulation_points(&g).is_empty(), cut_free);
        }
    }

    #[test]
    fn complete_bipartite_recognised_after_relabeling(a in 1usize..6, b in 1usize..6, seed in any::<u64>()) {
        let g = complete_bipartite(a, b);
        let mut perm: Vec<usize> = g.vertices().collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let expected = if a == 1 && b == 1 { Shape::Complete(2) } else { Shape::CompleteBipartite(a.max(b), a.min(b)) };
        prop_assert_eq!(classify_shape(&g.relabel(&perm)), expected);
    }
}

mod common;

use equisurf::constructions::multiply_subdivide;
use equisurf::graph::{classify_basic, complete, complete_bipartite, Graph};
use equisurf::topology::{
    embedding_join, euler_lower_bound, face_trace, genus_formula, min_genus_search, multiply_subdivide_embedding,
    parse_rotation, serialize_rotation, GenusFamily, RotationSystem, SearchMode,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn shuffled(g: &Graph, seed: u64) -> RotationSystem {
    let base = RotationSystem::from_graph(g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rot = base.rotations().to_vec();
    for r in &mut rot {
        r.shuffle(&mut rng);
    }
    base.with_rotation(rot).unwrap()
}

/// Two vertices on the first face, distinct when the face allows it.
fn face_pair(r: &RotationSystem, pick: usize) -> (usize, usize) {
    let t = face_trace(r).unwrap();
    let f = &t.faces[pick % t.faces.len()];
    let verts: Vec<usize> = f.iter().map(|&d| r.tail(d)).collect();
    let a = verts[0];
    let b = verts.iter().copied().find(|&x| x != a).unwrap();
    (a, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn face_trace_invariants(g in common::arb_connected_graph(9), seed in any::<u64>()) {
        let r = shuffled(&g, seed);
        let t = face_trace(&r).unwrap();
        let (p, q, faces) = (t.stats.p as i64, t.stats.q as i64, t.stats.r as i64);
        prop_assert_eq!(t.faces.iter().map(Vec::len).sum::<usize>(), 2 * g.edge_count());
        prop_assert_eq!((p - q + faces).rem_euclid(2), 0);
        prop_assert!(p - q + faces <= 2);
        prop_assert_eq!(2 * t.stats.genus as i64, 2 - p + q - faces);
        // every dart lies on exactly one face
        let mut darts: Vec<usize> = t.faces.iter().flatten().map(|d| d.0).collect();
        darts.sort_unstable();
        prop_assert_eq!(darts, (0..2 * g.edge_count()).collect::<Vec<_>>());
    }

    #[test]
    fn rotation_text_round_trip(g in common::arb_connected_graph(9), seed in any::<u64>()) {
        let r = shuffled(&g, seed);
        let text = serialize_rotation(&r);
        let back = parse_rotation(&text).unwrap();
        prop_assert_eq!(&back, &r);
        prop_assert_eq!(serialize_rotation(&back), text);
    }

    #[test]
    fn exhaustive_search_respects_bounds(g in common::arb_connected_graph(6), seed in any::<u64>()) {
        let out = min_genus_search(&g, SearchMode::Exhaustive).unwrap();
        prop_assert!(out.genus >= out.euler_lower_bound);
        prop_assert_eq!(face_trace(&out.rotation).unwrap().stats.genus as u64, out.genus);
        prop_assert_eq!(out.rotation.underlying_graph().unwrap(), g.clone());
        // no rotation beats the optimum
        prop_assert!(face_trace(&shuffled(&g, seed)).unwrap().stats.genus as u64 >= out.genus);
    }

    #[test]
    fn anneal_never_beats_exhaustive(g in common::arb_connected_graph(6), seed in any::<u64>()) {
        let best = min_genus_search(&g, SearchMode::Exhaustive).unwrap().genus;
        let out = min_genus_search(&g, SearchMode::Anneal { seed, budget: 5_000 }).unwrap();
        prop_assert!(out.genus >= best);
        prop_assert_eq!(face_trace(&out.rotation).unwrap().stats.genus as u64, out.genus);
        prop_assert_eq!(out.certified_optimal, out.genus == out.euler_lower_bound);
    }

    #[test]
    fn join_is_additive(
        g1 in common::arb_connected_graph(7),
        g2 in common::arb_connected_graph(7),
        seeds in any::<(u64, u64)>(),
        picks in any::<(usize, usize)>(),
    ) {
        let (r1, r2) = (shuffled(&g1, seeds.0), shuffled(&g2, seeds.1));
        let (u, v) = face_pair(&r1, picks.0);
        let (x, y) = face_pair(&r2, picks.1);
        let out = embedding_join(&r1, u, v, &r2, x, y).unwrap();
        let traced = face_trace(&out.rotation).unwrap().stats;
        prop_assert_eq!(traced, out.stats);
        prop_assert_eq!(traced.genus, out.genus_left + out.genus_right);
        prop_assert_eq!(traced.q, g1.edge_count() + g2.edge_count() + 2);
        let joined = out.rotation.underlying_graph().unwrap();
        let p1 = g1.vertex_count();
        prop_assert!(joined.has_edge(u, x + p1) && joined.has_edge(v, y + p1));
    }

    #[test]
    fn multiply_subdivide_embedding_invariants(g in common::arb_connected_graph(7), seed in any::<u64>(), l in 2usize..4) {
        let r = shuffled(&g, seed);
        let before = face_trace(&r).unwrap().stats;
        let out = multiply_subdivide_embedding(&r, l).unwrap();
        let after = face_trace(&out).unwrap().stats;
        prop_assert_eq!(after.genus, before.genus);
        prop_assert_eq!(after.r, before.r + (l - 1) * before.q);
        prop_assert_eq!(after.p, before.p + l * before.q);
        if classify_basic(&g).biconnected {
            let built = multiply_subdivide(&g, l as u64).unwrap().graph;
            prop_assert_eq!(out.underlying_graph().unwrap(), built);
        }
    }
}

#[test]
fn euler_bound_equals_formula_for_complete_families() {
    for n in 3..=50u64 {
        let g = complete(n as usize);
        assert_eq!(euler_lower_bound(&g, false), genus_formula(GenusFamily::Complete(n), true).unwrap(), "K_{n}");
    }
    for a in 2..=50u64 {
        for b in 2..=50u64 {
            let g = complete_bipartite(a as usize, b as usize);
            assert_eq!(
                euler_lower_bound(&g, true),
                genus_formula(GenusFamily::CompleteBipartite(a, b), true).unwrap(),
                "K_{{{a},{b}}}"
            );
        }
    }
}

#[test]
fn exhaustive_meets_formula_on_small_complete_graphs() {
    let cases: [(Graph, GenusFamily); 5] = [
        (complete(5), GenusFamily::Complete(5)),
        (complete(6), GenusFamily::Complete(6)),
        (complete_bipartite(3, 3), GenusFamily::CompleteBipartite(3, 3)),
        (complete_bipartite(4, 3), GenusFamily::CompleteBipartite(4, 3)),
        (complete_bipartite(4, 4), GenusFamily::CompleteBipartite(4, 4)),
    ];
    for (g, fam) in cases {
        let out = min_genus_search(&g, SearchMode::Exhaustive).unwrap();
        assert_eq!(out.genus, genus_formula(fam, true).unwrap(), "{fam:?}");
        assert_eq!(out.genus, out.euler_lower_bound);
    }
}

#[test]
fn k7_genus_certified_by_annealing() {
    let out = min_genus_search(&complete(7), SearchMode::Anneal { seed: 1, budget: 1_000_000 }).unwrap();
    assert_eq!(out.genus, 1);
    assert!(out.certified_optimal);
}

mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{claw_cover_mrv, claw_partitions, data};
use starpack_core::certify::verify_star_packing;
use starpack_core::faces::trace_faces;
use starpack_core::fixtures::{fixture_c80, fixture_dodecahedron};
use starpack_core::packing::{
    classify_packing, find_star_packings, find_star_packings_with, StarSearch, StarSearchResult, StarSearchStatus,
};
use starpack_core::transform::chamfer;
use starpack_core::{EmbeddedCubicGraph, SearchBudget};

fn all_packings(g: &EmbeddedCubicGraph) -> StarSearchResult {
    find_star_packings(g, usize::MAX, SearchBudget::unlimited()).unwrap()
}

fn center_sets(r: &StarSearchResult) -> BTreeSet<Vec<usize>> {
    r.packings.iter().map(|p| p.centers()).collect()
}

#[test]
fn small_fullerenes_agree_with_claw_partitions() {
    let graphs = data("small_fullerenes.pc");
    assert_eq!(graphs.len(), 5);
    for g in &graphs {
        let r = all_packings(g);
        let oracle = claw_partitions(g);
        assert_eq!(center_sets(&r), oracle, "n = {}", g.vertex_count());
        if g.vertex_count() % 8 == 0 {
            assert_eq!(r.status, StarSearchStatus::Exhausted);
        } else {
            assert_eq!(r.status, StarSearchStatus::ModuloReject);
        }
    }
}

#[test]
fn c24_has_no_star_packing() {
    let graphs = data("small_fullerenes.pc");
    let c24 = graphs.iter().find(|g| g.vertex_count() == 24).unwrap();
    let r = all_packings(c24);
    assert!(r.packings.is_empty());
    assert_eq!(r.status, StarSearchStatus::Exhausted);
    // a proof of absence stays one under a larger budget
    let again = find_star_packings(c24, 10, SearchBudget::nodes(1 << 40)).unwrap();
    assert_eq!(again.status, StarSearchStatus::Exhausted);
    assert!(again.packings.is_empty());
}

#[test]
fn chamfered_seeds_agree_with_exact_cover() {
    let counts: Vec<usize> = data("chamfer_seeds.pc")
        .iter()
        .map(|seed| {
            let g = chamfer(seed).unwrap().graph;
            let r = all_packings(&g);
            assert_eq!(r.status, StarSearchStatus::Exhausted);
            assert_eq!(center_sets(&r), claw_cover_mrv(&g), "n = {}", g.vertex_count());
            for p in &r.packings {
                verify_star_packing(&g, p).unwrap();
            }
            r.packings.len()
        })
        .collect();
    assert_eq!(counts, vec![7, 2, 4, 2, 4, 2, 1, 1, 2, 8]);
}

#[test]
fn c80_p0_packing_uses_the_vertices_off_the_pentagons() {
    let g = fixture_c80();
    let faces = trace_faces(&g);
    let mut on_pentagon = [false; 80];
    for f in faces.iter().filter(|f| f.size() == 5) {
        for &v in &f.boundary {
            on_pentagon[v] = true;
        }
    }
    let off: Vec<usize> = (0..80).filter(|&v| !on_pentagon[v]).collect();
    assert_eq!(off.len(), 20);

    let r = all_packings(&g);
    let p0: Vec<_> = r
        .packings
        .iter()
        .filter(|p| classify_packing(&g, p).unwrap().is_p0)
        .collect();
    assert_eq!(p0.len(), 1);
    assert_eq!(p0[0].centers(), off);

    let mut opts = StarSearch::new(usize::MAX, SearchBudget::unlimited());
    opts.p0_only = true;
    let only = find_star_packings_with(&g, &opts).unwrap();
    assert_eq!(only.packings, vec![p0[0].clone()]);
}

#[test]
fn modulo_gate_skips_the_search() {
    let c60 = data("c60_ih.pc").remove(0);
    for g in [fixture_dodecahedron(), c60] {
        let r = find_star_packings(&g, 1, SearchBudget::unlimited()).unwrap();
        assert_eq!(r.status, StarSearchStatus::ModuloReject);
        assert_eq!(r.nodes, 0);
    }
}

#[test]
fn searches_are_deterministic() {
    let g = fixture_c80();
    assert_eq!(all_packings(&g), all_packings(&g));
}

/// A random simple connected cubic graph, rotations in arbitrary order.
fn random_cubic(n: usize, seed: u64) -> EmbeddedCubicGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let mut points: Vec<usize> = (0..3 * n).collect();
        points.shuffle(&mut rng);
        let mut rot = vec![Vec::new(); n];
        let mut simple = true;
        for pair in points.chunks(2) {
            let (a, b) = (pair[0] / 3, pair[1] / 3);
            if a == b || rot[a].contains(&b) {
                simple = false;
                break;
            }
            rot[a].push(b);
            rot[b].push(a);
        }
        if simple {
            if let Ok(g) = EmbeddedCubicGraph::new(rot) {
                return g;
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_cubic_graphs_agree_with_claw_partitions(half in 2usize..=8, seed in any::<u64>()) {
        let g = random_cubic(2 * half, seed);
        let mut opts = StarSearch::new(usize::MAX, SearchBudget::unlimited());
        opts.allow_non_fullerene = true;
        let r = find_star_packings_with(&g, &opts).unwrap();
        prop_assert_eq!(center_sets(&r), claw_partitions(&g));
        if g.vertex_count().is_multiple_of(4) {
            prop_assert_eq!(r.status, StarSearchStatus::Exhausted);
        }
    }
}

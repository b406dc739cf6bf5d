#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use starpack_core::codec::decode_planar_code;
use starpack_core::EmbeddedCubicGraph;

pub fn data(name: &str) -> Vec<EmbeddedCubicGraph> {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name);
    decode_planar_code(&std::fs::read(&path).unwrap()).unwrap()
}

/// Every perfect star packing, as sets of centers, by trying each subset of
/// `n / 4` vertices as the center set.
pub fn claw_partitions(g: &EmbeddedCubicGraph) -> BTreeSet<Vec<usize>> {
    let n = g.vertex_count();
    let mut out = BTreeSet::new();
    if !n.is_multiple_of(4) {
        return out;
    }
    let k = n / 4;
    let mut pick = Vec::with_capacity(k);
    subsets(g, 0, k, &mut pick, &mut out);
    out
}

fn subsets(g: &EmbeddedCubicGraph, from: usize, k: usize, pick: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
    if pick.len() == k {
        let mut hit = vec![0; g.vertex_count()];
        for &c in pick.iter() {
            hit[c] += 1;
            for w in g.neighbors(c) {
                hit[w] += 1;
            }
        }
        if hit.iter().all(|&h| h == 1) {
            out.insert(pick.clone());
        }
        return;
    }
    for c in from..g.vertex_count() {
        if g.vertex_count() - c < k - pick.len() {
            break;
        }
        pick.push(c);
        subsets(g, c + 1, k, pick, out);
        pick.pop();
    }
}

/// Exact cover over claws, branching on the uncovered vertex with the fewest
/// available claws. Returns all center sets.
pub fn claw_cover_mrv(g: &EmbeddedCubicGraph) -> BTreeSet<Vec<usize>> {
    let mut out = BTreeSet::new();
    let mut covered = vec![false; g.vertex_count()];
    let mut centers = Vec::new();
    mrv(g, &mut covered, &mut centers, &mut out);
    out
}

fn claw_fits(g: &EmbeddedCubicGraph, covered: &[bool], c: usize) -> bool {
    !covered[c] && g.neighbors(c).all(|w| !covered[w])
}

fn mrv(g: &EmbeddedCubicGraph, covered: &mut Vec<bool>, centers: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
    let options = |v: usize, covered: &[bool]| -> Vec<usize> {
        std::iter::once(v)
            .chain(g.neighbors(v))
            .filter(|&c| claw_fits(g, covered, c))
            .collect()
    };
    let best = (0..g.vertex_count())
        .filter(|&v| !covered[v])
        .map(|v| (options(v, covered).len(), v))
        .min();
    let Some((_, v)) = best else {
        let mut set = centers.clone();
        set.sort_unstable();
        out.insert(set);
        return;
    };
    for c in options(v, covered) {
        covered[c] = true;
        for w in g.neighbors(c) {
            covered[w] = true;
        }
        centers.push(c);
        mrv(g, covered, centers, out);
        centers.pop();
        covered[c] = false;
        for w in g.neighbors(c) {
            covered[w] = false;
        }
    }
}

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use starpack_core::codec::{decode_planar_code, encode_planar_code};
use starpack_core::fixtures::{fixture_c80, fixture_dodecahedron};
use starpack_core::packing::{
    find_hamiltonian_cycle, find_perfect_matching, find_pseudo_matching, find_star_packings, StarSearch,
};
use starpack_core::transform::{chamfer, extract_cycle_factor_from_provenance, semi_star_transform, star_transform};
use starpack_core::{verify_fullerene, SearchBudget};

fn transforms(c: &mut Criterion) {
    let c20 = fixture_dodecahedron();
    let ch = chamfer(&c20).unwrap();
    let p = ch.original_vertex_packing();
    c.bench_function("chamfer c20", |b| b.iter(|| chamfer(black_box(&c20)).unwrap()));
    c.bench_function("star c80", |b| b.iter(|| star_transform(black_box(&ch.graph), &p).unwrap()));
    c.bench_function("semistar c80", |b| b.iter(|| semi_star_transform(black_box(&ch.graph), &p).unwrap()));
    let (f, prov) = star_transform(&ch.graph, &p).unwrap();
    c.bench_function("extract factor f180", |b| {
        b.iter(|| extract_cycle_factor_from_provenance(black_box(&f), &prov).unwrap())
    });
    c.bench_function("verify f180", |b| b.iter(|| verify_fullerene(black_box(&f))));
    let bytes = encode_planar_code(&f).unwrap();
    c.bench_function("decode f180", |b| b.iter(|| decode_planar_code(black_box(&bytes)).unwrap()));
}

fn searches(c: &mut Criterion) {
    let c80 = fixture_c80();
    let ch = chamfer(&fixture_dodecahedron()).unwrap();
    let (f, _) = star_transform(&ch.graph, &ch.original_vertex_packing()).unwrap();
    let all = StarSearch::new(usize::MAX, SearchBudget::unlimited());
    c.bench_function("all star packings c80", |b| {
        b.iter(|| starpack_core::packing::find_star_packings_with(black_box(&c80), &all).unwrap())
    });
    c.bench_function("first star packing c80", |b| {
        b.iter(|| find_star_packings(black_box(&c80), 1, SearchBudget::unlimited()).unwrap())
    });
    c.bench_function("perfect matching f180", |b| b.iter(|| find_perfect_matching(black_box(&f)).unwrap()));
    c.bench_function("pseudo matching f180", |b| {
        b.iter(|| find_pseudo_matching(black_box(&f), 2, SearchBudget::unlimited()).unwrap())
    });
    c.bench_function("hamiltonian cycle f180", |b| {
        b.iter(|| find_hamiltonian_cycle(black_box(&f), SearchBudget::unlimited()).unwrap())
    });
}

criterion_group!(benches, transforms, searches);
criterion_main!(benches);

use std::hint::black_box;
use std::sync::Arc;

use catcw::colimits::{chaotic, one_sided_homotopy_pushout, pushout};
use catcw::cw::sphere;
use catcw::ktheory::{k0_vanishing_witness, PointedCategory};
use catcw::model::find_equivalence;
use catcw::sheaf::{sheafify_constant, unit_check, FiniteSpace};
use catcw::{FiniteCategory, FpCategory, FpFunctor, DEFAULT_SEARCH_BOUND};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn spheres(c: &mut Criterion) {
    let mut group = c.benchmark_group("sphere");
    for n in 0..=3 {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| black_box(sphere(n).unwrap())));
    }
    group.finish();
}

fn pushouts(c: &mut Criterion) {
    let s0 = Arc::new(FpCategory::discrete(["n", "s"]));
    let collapse = FpFunctor::to_terminal(s0.clone());
    c.bench_function("pushout/collapse_collapse", |b| b.iter(|| black_box(pushout(&collapse, &collapse).unwrap())));
    c.bench_function("one_sided/collapse_collapse", |b| {
        b.iter(|| black_box(one_sided_homotopy_pushout(&collapse, &collapse).unwrap()))
    });
}

fn k0(c: &mut Criterion) {
    let s0 = PointedCategory::at_first(Arc::new(FpCategory::discrete(["n", "s"]))).unwrap();
    let z = PointedCategory::at_first(Arc::new(FpCategory::integers())).unwrap();
    c.bench_function("k0_witness/S0", |b| b.iter(|| black_box(k0_vanishing_witness(&s0).unwrap())));
    c.bench_function("k0_witness/Z", |b| b.iter(|| black_box(k0_vanishing_witness(&z).unwrap())));
}

fn equivalences(c: &mut Criterion) {
    let c4 = chaotic(["a", "b", "c", "d"]).unwrap().to_finite(64).unwrap();
    let one = FiniteCategory::terminal();
    c.bench_function("find_equivalence/chaotic4_to_1", |b| {
        b.iter(|| black_box(find_equivalence(&c4, &one, DEFAULT_SEARCH_BOUND).unwrap()))
    });
}

fn sheaves(c: &mut Criterion) {
    let z3 = FiniteCategory::cyclic(3);
    let circle = FiniteSpace::pseudocircle();
    c.bench_function("sheafify/Z3_pseudocircle", |b| b.iter(|| black_box(sheafify_constant(&z3, &circle))));
    c.bench_function("unit_check/Z3_pseudocircle", |b| b.iter(|| black_box(unit_check(&z3, &circle).unwrap())));
}

criterion_group!(benches, spheres, pushouts, k0, equivalences, sheaves);
criterion_main!(benches);

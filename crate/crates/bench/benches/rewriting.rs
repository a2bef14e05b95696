use std::hint::black_box;

use catcw::cw::{build_two_complex, Component, GroupoidPresentation};
use catcw::{FpCategory, Path, DEFAULT_BUDGET};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn torus() -> FpCategory {
    let g = GroupoidPresentation {
        components: vec![Component {
            extra_objects: vec![],
            generators: vec!["a".into(), "b".into()],
            relations: vec![vec!["a".into(), "b".into(), "a^-1".into(), "b^-1".into()]],
        }],
    };
    build_two_complex(&g).unwrap()
}

fn completion(c: &mut Criterion) {
    let mut group = c.benchmark_group("complete");
    for n in [2, 6, 12] {
        let z = FpCategory::cyclic(n);
        group.bench_with_input(BenchmarkId::new("cyclic", n), &z, |b, z| {
            b.iter(|| black_box(z.complete(DEFAULT_BUDGET - 1)))
        });
    }
    let t = torus();
    group.bench_function("torus", |b| b.iter(|| black_box(t.complete(DEFAULT_BUDGET - 1))));
    group.finish();
}

fn normal_forms(c: &mut Criterion) {
    let z = FpCategory::integers();
    let rs = z.complete(DEFAULT_BUDGET);
    c.bench_function("normal_forms/integers_len_20", |b| {
        b.iter(|| black_box(rs.normal_forms("*", "*", 20).unwrap()))
    });
    let z12 = FpCategory::cyclic(12);
    let long = Path::new("*", vec!["a"; 200]);
    c.bench_function("normal_form/cyclic12_len_200", |b| {
        b.iter(|| black_box(z12.rewriting().normal_form(&long).unwrap()))
    });
}

fn finite_models(c: &mut Criterion) {
    let z12 = FpCategory::cyclic(12);
    c.bench_function("to_finite/cyclic12", |b| b.iter(|| black_box(z12.to_finite(64).unwrap())));
}

criterion_group!(benches, completion, normal_forms, finite_models);
criterion_main!(benches);

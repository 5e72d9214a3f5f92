use criterion::{black_box, criterion_group, criterion_main, Criterion};
use zhualg::lattice::{algebra_span, short_vectors, verify_relations};
use zhualg::rat::rat_int;
use zhualg::rat::Rat;
use zhualg_bench::{a2, rank2_det8};

fn bench_short_vectors(c: &mut Criterion) {
    let lat = a2();
    let zero = vec![Rat::from_integer(0.into()); 2];
    c.bench_function("short_vectors A2 bound 12", |b| {
        b.iter(|| short_vectors(&lat, black_box(&zero), &rat_int(12)))
    });
}

fn bench_span_closure(c: &mut Criterion) {
    let lat = a2();
    c.bench_function("algebra_span A2", |b| b.iter(|| algebra_span(&lat).unwrap()));
}

fn bench_verify_relations(c: &mut Criterion) {
    let lat = rank2_det8();
    c.bench_function("verify_relations rank-2 det-8", |b| {
        b.iter(|| verify_relations(&lat).unwrap())
    });
}

criterion_group!(benches, bench_short_vectors, bench_span_closure, bench_verify_relations);
criterion_main!(benches);

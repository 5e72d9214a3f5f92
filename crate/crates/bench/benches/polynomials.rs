use criterion::{black_box, criterion_group, criterion_main, Criterion};
use zhualg::multipoly::schur_poly;
use zhualg::poly::{poly_gcd, rational_roots};
use zhualg::rbar::g_k;
use zhualg::smith::SmithAlgebra;

fn bench_schur(c: &mut Criterion) {
    c.bench_function("schur_poly r=10", |b| b.iter(|| schur_poly(black_box(10))));
}

fn bench_h_gcd(c: &mut Criterion) {
    let alg = SmithAlgebra::new(g_k(2));
    let h20 = alg.h_sum(20);
    let h30 = alg.h_sum(30);
    c.bench_function("gcd(h_20, h_30) for g_2", |b| {
        b.iter(|| poly_gcd(black_box(&h20), black_box(&h30)).unwrap())
    });
}

fn bench_gk_roots(c: &mut Criterion) {
    let g4 = g_k(4);
    c.bench_function("rational_roots g_4", |b| {
        b.iter(|| rational_roots(black_box(&g4)).unwrap())
    });
}

criterion_group!(benches, bench_schur, bench_h_gcd, bench_gk_roots);
criterion_main!(benches);

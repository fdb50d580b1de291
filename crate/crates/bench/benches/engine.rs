use criterion::{black_box, criterion_group, criterion_main, Criterion};
use zschur_core::acceptance::SplitMix64;
use zschur_core::algebra::SchurAlgebra;
use zschur_core::combinatorics::Composition;
use zschur_core::modules::{cartan_matrix, ext_table, radical_check};
use zschur_core::orbits::enumerate_orbits;

fn orbit_products(c: &mut Criterion) {
    let engine = SchurAlgebra::new(3, 5);
    let all = enumerate_orbits(3, 5);
    // warm the word cache so the measurement sees the steady state
    let mut rng = SplitMix64::new(7);
    for _ in 0..1000 {
        let a = rng.pick(&all);
        let b = rng.pick(&all);
        let _ = engine.product(a, b);
    }
    let mut pairs = Vec::new();
    let mut rng = SplitMix64::new(11);
    while pairs.len() < 512 {
        let a = rng.pick(&all).clone();
        let b = rng.pick(&all).clone();
        if a.col_vector() == b.row_vector() {
            pairs.push((a, b));
        }
    }
    c.bench_function("product_3_5_cached", |bench| {
        bench.iter(|| {
            for (a, b) in &pairs {
                black_box(engine.product(a, b));
            }
        })
    });
}

fn word_cache_fill(c: &mut Criterion) {
    let base: Composition = "1,2,2,1".parse().unwrap();
    c.bench_function("word_bfs_slice_4_6", |bench| {
        bench.iter(|| {
            let engine = SchurAlgebra::new(4, 6);
            let diag = zschur_core::OrbitMatrix::diagonal(&base);
            black_box(engine.word_decompose(&diag));
        })
    });
}

fn cartan_3_5(c: &mut Criterion) {
    c.bench_function("cartan_3_5", |bench| {
        bench.iter(|| black_box(cartan_matrix(3, 5)))
    });
}

fn ext_table_4_5(c: &mut Criterion) {
    c.bench_function("ext_table_4_5", |bench| {
        bench.iter(|| black_box(ext_table(4, 5)))
    });
}

fn radical_3_4(c: &mut Criterion) {
    c.bench_function("radical_3_4", |bench| {
        bench.iter(|| {
            let engine = SchurAlgebra::new(3, 4);
            black_box(radical_check(&engine, 3, 4).unwrap())
        })
    });
}

criterion_group!(
    benches,
    orbit_products,
    word_cache_fill,
    cartan_3_5,
    ext_table_4_5,
    radical_3_4
);
criterion_main!(benches);

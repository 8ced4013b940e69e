use asnorm::normality::{mu_matrix, veronese_matrix};
use asnorm::{certify, FieldSpec};
use asnorm_bench::{embedding, FIXTURES};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn field_mul(c: &mut Criterion) {
    let f = FieldSpec::new(2, 8).unwrap();
    c.bench_function("gf256_mul_all_pairs", |b| {
        b.iter(|| {
            let mut acc = 0u32;
            for x in 0..256 {
                for y in 0..256 {
                    acc ^= f.mul(x, y);
                }
            }
            black_box(acc)
        })
    });
}

fn mu_rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("mu_rank");
    for &(label, p, k, m, regime) in FIXTURES {
        let emb = embedding(p, k, m, regime);
        let s = m as u64 - 1;
        group.bench_with_input(BenchmarkId::from_parameter(label), &emb, |b, emb| {
            b.iter(|| mu_matrix(emb, s).rank())
        });
    }
    group.finish();
}

fn veronese_rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("veronese3_rank");
    for &(label, p, k, m, regime) in FIXTURES {
        let emb = embedding(p, k, m, regime);
        group.bench_with_input(BenchmarkId::from_parameter(label), &emb, |b, emb| {
            b.iter(|| veronese_matrix(emb, 3).unwrap().rank())
        });
    }
    group.finish();
}

fn full_certificate(c: &mut Criterion) {
    let emb = embedding(2, 4, 5, asnorm::Regime::Case1);
    c.bench_function("certify_q16_m5", |b| b.iter(|| certify(&emb, 2)));
}

criterion_group!(benches, field_mul, mu_rank, veronese_rank, full_certificate);
criterion_main!(benches);

//! Hot-path benchmarks at the n = 13 working scale: partition derivation,
//! parameter verification, distance-table computation, graph splitting,
//! coverage sweeps, and the double-MDS enumeration.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use perfcode::generators::hamming;
use perfcode::mds::{enumerate_double_mds, SearchOptions};
use perfcode::partition::{compute_parameters, derive_partition, distribution_bundle};
use perfcode::perfect::{build_b, double_shorten, is_1perfect, is_twofold_1perfect};
use perfcode::splitgraph::split_code;

fn bench_pipelines(c: &mut Criterion) {
    let h15 = hamming(4).unwrap();
    let seed = double_shorten(&h15).unwrap();
    let partition = derive_partition(&seed).unwrap();
    let c4 = partition.part(3).clone();
    let cover = build_b(&seed).unwrap();

    c.bench_function("derive_partition n=13", |b| {
        b.iter(|| derive_partition(black_box(&seed)).unwrap())
    });

    c.bench_function("compute_parameters n=13", |b| {
        b.iter(|| compute_parameters(black_box(&partition)))
    });

    c.bench_function("distribution_bundle n=13", |b| {
        b.iter(|| distribution_bundle(black_box(&partition)).unwrap())
    });

    c.bench_function("split_code |C4|=1024", |b| {
        b.iter(|| split_code(black_box(&c4)).unwrap())
    });

    c.bench_function("is_1perfect H^15", |b| {
        b.iter(|| is_1perfect(black_box(&h15)).unwrap())
    });

    c.bench_function("is_twofold_1perfect H^15", |b| {
        b.iter(|| is_twofold_1perfect(black_box(&cover)).unwrap())
    });

    c.bench_function("enumerate_double_mds Q^2", |b| {
        b.iter(|| {
            enumerate_double_mds(2, &SearchOptions::default(), |code| {
                black_box(code);
            })
            .unwrap()
        })
    });
}

criterion_group!(benches, bench_pipelines);
criterion_main!(benches);

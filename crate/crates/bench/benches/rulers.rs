use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rgrkit::constructions::{cubic_rgr, ruzsa_best};
use rgrkit::rulers::{ModularRuler, Ruler};

fn verifiers(c: &mut Criterion) {
    let ruler = cubic_rgr(40).unwrap();
    c.bench_function("is_rgr cubic k=40", |b| {
        b.iter(|| black_box(&ruler).is_rgr())
    });

    let m = ModularRuler::new(vec![0, 1, 8, 12, 14], 30).unwrap();
    c.bench_function("is_rmgr (30,5)", |b| b.iter(|| black_box(&m).is_rmgr()));

    let table =
        Ruler::from_unsigned(&[0, 1, 4, 18, 37, 46, 48, 71, 77, 112, 120, 127, 132]).unwrap();
    c.bench_function("is_golomb k=13", |b| {
        b.iter(|| black_box(&table).is_golomb())
    });
}

fn constructions(c: &mut Criterion) {
    c.bench_function("ruzsa_best p=31", |b| b.iter(|| ruzsa_best(black_box(31))));
    c.bench_function("cubic_rgr k=200", |b| b.iter(|| cubic_rgr(black_box(200))));
}

criterion_group!(benches, verifiers, constructions);
criterion_main!(benches);

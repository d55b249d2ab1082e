use criterion::{criterion_group, criterion_main, Criterion};
use rgrkit::groups::{FiniteGroup, Subgroup};
use rgrkit::search::{find_ggr, find_rmgr, optimal_rgr};

fn rulers(c: &mut Criterion) {
    let mut group = c.benchmark_group("optimal_rgr");
    group.sample_size(10);
    for k in [6, 7, 8] {
        group.bench_function(format!("k={k}"), |b| {
            b.iter(|| optimal_rgr(k, None).unwrap())
        });
    }
    group.finish();
}

fn transversals(c: &mut Criterion) {
    let mut group = c.benchmark_group("transversal");
    group.sample_size(10);
    group.bench_function("rmgr (30,5)", |b| {
        b.iter(|| find_rmgr(30, 5, None).unwrap())
    });
    let a4 = FiniteGroup::parse("A4").unwrap();
    let gens = [
        a4.parse_element("(12)(34)").unwrap(),
        a4.parse_element("(13)(24)").unwrap(),
    ];
    let klein = Subgroup::generated(&a4, &gens).unwrap();
    group.bench_function("ggr A4/V4", |b| b.iter(|| find_ggr(&klein, None).unwrap()));
    group.finish();
}

criterion_group!(benches, rulers, transversals);
criterion_main!(benches);

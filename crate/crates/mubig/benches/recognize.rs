use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mubig::families::{generate, Family, FamilyId};
use mubig::recognize::{recognize_with, Budget};

fn bench(c: &mut Criterion) {
    let cases = [
        ("K", FamilyId::plain(Family::K)),
        ("~P(1)", FamilyId::tilde(Family::P(1))),
        ("Kfam'(2,2)", FamilyId::primed(Family::Kfam(2, 2))),
        ("S'(2)", FamilyId::primed(Family::S(2))),
    ];
    let mut group = c.benchmark_group("recognize");
    group.sample_size(10);
    for (name, id) in cases {
        let g = generate(id).expect("family member");
        for (mode, parallel) in [("parallel", true), ("sequential", false)] {
            group.bench_with_input(BenchmarkId::new(mode, name), &g, |b, g| {
                b.iter(|| recognize_with(black_box(g), &Budget::unlimited(), true, parallel).status)
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);

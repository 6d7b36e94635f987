//! Benchmarks for the hot paths: product expansion, the primitive
//! projector, and rank certification.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use num::BigRational;
use wqsym::freeness::{freeness_report, BasisTables, FreeMorphisms};
use wqsym::hopf::{coproduct, eulerian_projector, star, tridendriform, Ops, TriKind};
use wqsym::words::{all_surjections, word};
use wqsym::{prim_rank, rank_at};

fn bench_products(c: &mut Criterion) {
    let ops = Ops::exact();
    let x = word(&[2, 1, 1, 3]);
    let y = word(&[1, 2, 1]);
    c.bench_function("tridendriform_middle_4x3", |b| {
        b.iter(|| tridendriform(&ops, &x, &y, TriKind::Middle).unwrap())
    });
    c.bench_function("star_4x3", |b| b.iter(|| star(&x, &y).unwrap()));
}

fn bench_coproduct_and_projector(c: &mut Criterion) {
    let w = word(&[3, 4, 2, 5, 1, 1, 3, 5]);
    c.bench_function("coproduct_deg8", |b| b.iter(|| coproduct(&w)));
    let v = word(&[2, 4, 3, 1, 5, 2]);
    c.bench_function("eulerian_projector_deg6", |b| {
        b.iter(|| eulerian_projector(&v))
    });
}

fn bench_ranks(c: &mut Criterion) {
    let zero = BigRational::from_integer(0.into());
    c.bench_function("prim_rank_deg4", |b| {
        b.iter_batched(
            || BasisTables::new(4),
            |tables| prim_rank(&tables, 4),
            BatchSize::SmallInput,
        )
    });
    c.bench_function("rank_projector_images_deg4", |b| {
        b.iter_batched(
            || {
                all_surjections(4)
                    .into_iter()
                    .map(|x| eulerian_projector(&x))
                    .collect::<Vec<_>>()
            },
            |vectors| rank_at(&vectors, &zero).unwrap(),
            BatchSize::SmallInput,
        )
    });
    c.bench_function("freeness_report_deg3", |b| {
        b.iter_batched(
            || BasisTables::new(3),
            |tables| {
                let morphisms = FreeMorphisms::new(&tables);
                freeness_report(
                    &morphisms,
                    3,
                    &wqsym::FreenessReport::default_q_values(),
                    true,
                )
            },
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(
    benches,
    bench_products,
    bench_coproduct_and_projector,
    bench_ranks
);
criterion_main!(benches);

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use persalg_bench::{random_bitableau_sum, random_flag_bifiltration};
use persalg_core::complexes::{be_multipliers, rank_conditions};
use persalg_core::fixtures::hilbert_burch_352;
use persalg_core::persistence::{presentation_of_homology, rank_invariant_table};
use persalg_core::polyring::groebner_basis;
use persalg_core::tableaux::straighten_in;
use persalg_core::varieties::{enumerate_standard, MaxRankPolicy, RankedFormat};
use persalg_core::{generic_matrix, CoeffDomain, MonomialOrder, RingCtx};

fn algebra(c: &mut Criterion) {
    let r = RingCtx::indexed("x", 9, CoeffDomain::Integers).unwrap();
    let m = generic_matrix(&r, 1, 3, 3).unwrap();
    let minors = m.minors(2).unwrap();
    c.bench_function("groebner 2-minors of generic 3x3", |b| {
        b.iter(|| groebner_basis(&r, black_box(&minors), MonomialOrder::GradedRevLex).unwrap())
    });
    let big = RingCtx::indexed("x", 15, CoeffDomain::Integers).unwrap();
    let a = generic_matrix(&big, 1, 3, 5).unwrap();
    c.bench_function("exterior power 3 of generic 3x5", |b| b.iter(|| black_box(&a).exterior_power(3).unwrap()));
    let cx = hilbert_burch_352();
    let ranks = rank_conditions(cx.betti()).unwrap();
    c.bench_function("BE multipliers 3<-5<-2", |b| b.iter(|| be_multipliers(black_box(&cx), &ranks).unwrap()));
}

fn combinatorics(c: &mut Criterion) {
    let sums: Vec<_> = (0..16).map(|s| random_bitableau_sum(s, 3, 5)).collect();
    c.bench_function("straighten 16 bitableaux in 3x5", |b| {
        b.iter(|| sums.iter().map(|x| straighten_in(x, 3, 5).unwrap().len()).sum::<usize>())
    });
    let f = RankedFormat::new(vec![2, 3, 2], vec![1, 1]).unwrap();
    c.bench_function("standard monomials (2,3,2) degree 3", |b| {
        b.iter(|| enumerate_standard(black_box(&f), 3, MaxRankPolicy::IncludeMaxRank, 1_000_000).unwrap().len())
    });
}

fn persistence(c: &mut Criterion) {
    let bif = random_flag_bifiltration(1, 12, 5);
    c.bench_function("rank invariant table, 12 vertices, 5x5", |b| {
        b.iter(|| rank_invariant_table(black_box(&bif), 1, 0).unwrap())
    });
    c.bench_function("presentation of H_1, 12 vertices, 5x5", |b| {
        b.iter(|| presentation_of_homology(black_box(&bif), 1, [5, 5], 0).unwrap())
    });
}

criterion_group!(benches, algebra, combinatorics, persistence);
criterion_main!(benches);

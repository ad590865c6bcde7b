use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qudessin_bench::clustered_polynomial;
use qudessin_core::belyi::{ramification_passport, roots_of, ComplexRationalMap, RootOptions};
use qudessin_core::cartography::{
    grid_group, low_index_subgroups, max_stabilized_lines, FinitelyPresentedGroup, Incidence, PermutationGroup,
};
use qudessin_core::contextuality::{bell_census, pentagram_census};

fn low_index(c: &mut Criterion) {
    let g = FinitelyPresentedGroup::cartographic();
    let mut group = c.benchmark_group("low_index");
    group.sample_size(10);
    for n in [6, 7, 9] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| low_index_subgroups(&g, black_box(n)).unwrap().len())
        });
    }
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    group.bench_function("bell_3", |b| b.iter(|| bell_census(black_box(3)).unwrap()));
    group.bench_function("pentagram", |b| b.iter(|| pentagram_census().count()));
    group.finish();
}

fn schreier_sims(c: &mut Criterion) {
    let gens = grid_group().generators().to_vec();
    c.bench_function("schreier_sims/grid72", |b| {
        b.iter(|| PermutationGroup::new(9, black_box(gens.clone())).unwrap().order())
    });
    c.bench_function("schreier_sims/s10", |b| {
        b.iter(|| PermutationGroup::symmetric(black_box(10)).unwrap().order())
    });
    let fano = Incidence::fano_plane();
    let g = FinitelyPresentedGroup::cartographic();
    let psl = low_index_subgroups(&g, 7)
        .unwrap()
        .into_iter()
        .map(|t| qudessin_core::cartography::coset_group(&t))
        .find(|p| p.order() == 168)
        .unwrap();
    c.bench_function("stabilize/psl27_fano", |b| b.iter(|| max_stabilized_lines(&psl, &fano).unwrap()));
}

fn roots(c: &mut Criterion) {
    let mut group = c.benchmark_group("roots");
    for k in [3, 6] {
        let p = clustered_polynomial(k);
        group.bench_with_input(BenchmarkId::new("clustered", p.degree()), &p, |b, p| {
            b.iter(|| roots_of(p, RootOptions::default()).unwrap())
        });
    }
    group.finish();
    let klein = ComplexRationalMap::klein();
    c.bench_function("passport/klein", |b| b.iter(|| ramification_passport(&klein).unwrap()));
}

criterion_group!(benches, low_index, census, schreier_sims, roots);
criterion_main!(benches);

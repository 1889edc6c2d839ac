use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use homsim_core::basis_conversion::conversion_matrix;
use homsim_core::biphoton_state::{spdc_state, to_hg, SpdcSpectrum};
use homsim_core::experiment::{scan_grid, RunConfig};
use homsim_core::poly_oracle::eq1_identity_check;

fn identity(c: &mut Criterion) {
    let mut group = c.benchmark_group("identity_check");
    for (p, ell) in [(0u32, 2i32), (2, 3), (4, -4)] {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("p{p}_l{ell}")),
            &(p, ell),
            |b, &(p, ell)| b.iter(|| eq1_identity_check(black_box(p), black_box(ell))),
        );
    }
    group.finish();
}

fn conversion(c: &mut Criterion) {
    // warm the cache once; the steady state is a map lookup
    let mut group = c.benchmark_group("conversion_matrix");
    for order in [4u32, 8] {
        conversion_matrix(order);
        group.bench_with_input(BenchmarkId::from_parameter(order), &order, |b, &n| {
            b.iter(|| conversion_matrix(black_box(n)))
        });
    }
    group.finish();
}

fn state_to_hg(c: &mut Criterion) {
    let state = spdc_state(&SpdcSpectrum::demo()).unwrap();
    c.bench_function("spdc_to_hg", |b| b.iter(|| to_hg(black_box(&state))));
}

fn grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan_grid");
    for preset in ["fig2", "fig3"] {
        let cfg = RunConfig::preset(preset).unwrap();
        group.bench_function(preset, |b| b.iter(|| scan_grid(black_box(&cfg)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, identity, conversion, state_to_hg, grid);
criterion_main!(benches);

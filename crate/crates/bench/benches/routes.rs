use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tnomial_bench::central_query;
use tnomial_core::identities::{series_inverse, Mode};
use tnomial_core::oracle::{count_selections, BoxWeights, Budget};
use tnomial_core::{coeff_by_route, coeff_symbolic, Route, SeqParams, Tnomials};

fn routes(c: &mut Criterion) {
    let query = central_query();
    let mut g = c.benchmark_group("coefficient-routes");
    for route in Route::ALL {
        g.bench_with_input(
            BenchmarkId::from_parameter(route.name()),
            &route,
            |b, &r| b.iter(|| coeff_by_route(r, black_box(&query)).unwrap()),
        );
    }
    g.finish();
}

fn symbolic(c: &mut Criterion) {
    c.bench_function("symbolic-coefficient-16-8", |b| {
        b.iter(|| coeff_symbolic(black_box(16), 8).unwrap())
    });
}

fn inverse(c: &mut Criterion) {
    c.bench_function("inverse-coefficient-12-0", |b| {
        b.iter(|| {
            Tnomials::new(SeqParams::new(2, 3), 12)
                .unwrap()
                .inverse(black_box(12), 0)
                .unwrap()
        })
    });
}

fn series(c: &mut Criterion) {
    c.bench_function("a-times-b-n8-order10", |b| {
        b.iter(|| series_inverse(black_box(8), 10, Mode::Numeric(SeqParams::new(2, 3))).unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    let w = BoxWeights::new(&SeqParams::new(2, 3), 8).unwrap();
    let budget = Budget::default();
    c.bench_function("selections-n8-k6", |b| {
        b.iter(|| count_selections(black_box(&w), 6, true, &budget).unwrap())
    });
}

criterion_group!(benches, routes, symbolic, inverse, series, enumeration);
criterion_main!(benches);

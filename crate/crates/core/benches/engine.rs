//! Benchmarks for the hot paths of the engine: axiom verification, the
//! integral projections, ladder round trips, the identity suite, and both
//! diagram evaluators.
//!
//! Every benchmark id is prefixed with the arithmetic mode so the rayon
//! data-parallel build can be compared against the sequential fallback:
//!
//! ```text
//! cargo bench -p hopfint-core                          # parallel (default)
//! cargo bench -p hopfint-core --no-default-features    # sequential
//! ```

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use hopfint_core::diagram::{builtin_diagram, evaluate, evaluate_naive, Bindings};
use hopfint_core::hopf::{builtin, HopfAlgebra};
use hopfint_core::integrals::{
    cal_e_matrix, check_suite, kuperberg_p, kuperberg_q, ladder, ladder_inverse, LadderKind,
};
use hopfint_core::scalar::FieldSpec;

fn mode() -> &'static str {
    if cfg!(feature = "parallel") {
        "parallel"
    } else {
        "sequential"
    }
}

fn taft3_gf7() -> HopfAlgebra {
    builtin("taft:3", FieldSpec::prime(7).unwrap()).unwrap()
}

fn q8_rational() -> HopfAlgebra {
    builtin("group:q8", FieldSpec::rational()).unwrap()
}

fn sweedler_rational() -> HopfAlgebra {
    builtin("sweedler", FieldSpec::rational()).unwrap()
}

fn bench_axioms(c: &mut Criterion) {
    let mut g = c.benchmark_group(format!("{}/verify_axioms", mode()));
    let taft = taft3_gf7();
    g.bench_function("taft3_gf7", |b| b.iter(|| black_box(&taft).verify_axioms()));
    let q8 = q8_rational();
    g.bench_function("q8_rational", |b| b.iter(|| black_box(&q8).verify_axioms()));
    g.finish();
}

fn bench_projections(c: &mut Criterion) {
    let mut g = c.benchmark_group(format!("{}/projections", mode()));
    let taft = taft3_gf7();
    g.bench_function("kuperberg_p_taft3", |b| b.iter(|| kuperberg_p(black_box(&taft))));
    g.bench_function("kuperberg_q_taft3", |b| b.iter(|| kuperberg_q(black_box(&taft))));
    let q8 = q8_rational();
    g.bench_function("cal_e_matrix_q8_rational", |b| b.iter(|| cal_e_matrix(black_box(&q8))));
    g.finish();
}

fn bench_larger_dimension(c: &mut Criterion) {
    // Dimension 16, the largest algebra the builtins can produce quickly;
    // this is where the parallel/sequential split starts to matter.
    let taft4 = builtin("taft:4", FieldSpec::prime(5).unwrap()).unwrap();
    let mut g = c.benchmark_group(format!("{}/dim16", mode()));
    g.sample_size(20);
    g.bench_function("verify_axioms_taft4_gf5", |b| {
        b.iter(|| black_box(&taft4).verify_axioms())
    });
    g.bench_function("kuperberg_p_taft4_gf5", |b| b.iter(|| kuperberg_p(black_box(&taft4))));
    g.bench_function("cal_e_matrix_taft4_gf5", |b| b.iter(|| cal_e_matrix(black_box(&taft4))));
    g.finish();
}

fn bench_ladders(c: &mut Criterion) {
    let mut g = c.benchmark_group(format!("{}/ladders", mode()));
    let taft = taft3_gf7();
    g.bench_function("roundtrip_taft3", |b| {
        b.iter(|| {
            let h = black_box(&taft);
            ladder(h, LadderKind::L2).mul(&ladder_inverse(h, LadderKind::L2))
        })
    });
    g.finish();
}

fn bench_suite(c: &mut Criterion) {
    let mut g = c.benchmark_group(format!("{}/identity_suite", mode()));
    g.sample_size(20);
    let sw = sweedler_rational();
    g.bench_function("sweedler_rational", |b| b.iter(|| check_suite(black_box(&sw))));
    g.finish();
}

fn bench_diagrams(c: &mut Criterion) {
    let mut g = c.benchmark_group(format!("{}/diagram_eval", mode()));
    let p = builtin_diagram("p").unwrap();
    let q = builtin_diagram("q").unwrap();
    let none = Bindings::new();

    let sw = sweedler_rational();
    g.bench_function("p_greedy_sweedler", |b| {
        b.iter(|| evaluate(black_box(&sw), &p, &none).unwrap())
    });
    g.bench_function("p_naive_sweedler", |b| {
        b.iter(|| evaluate_naive(black_box(&sw), &p, &none).unwrap())
    });

    let taft = taft3_gf7();
    g.bench_function("q_greedy_taft3", |b| {
        b.iter(|| evaluate(black_box(&taft), &q, &none).unwrap())
    });
    g.sample_size(10);
    g.bench_function("q_naive_taft3", |b| {
        b.iter(|| evaluate_naive(black_box(&taft), &q, &none).unwrap())
    });
    g.finish();
}

criterion_group!(
    benches,
    bench_axioms,
    bench_projections,
    bench_larger_dimension,
    bench_ladders,
    bench_suite,
    bench_diagrams
);
criterion_main!(benches);

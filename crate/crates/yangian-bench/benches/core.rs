//! Benchmarks for the hot paths: PBW straightening, the determinant-type
//! series, and a representative classical-identity check.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use yangian::casimir::newton_gl_check;
use yangian::lie::LieSpec;
use yangian::matrix::PairingCase;
use yangian::qdet::qdet;
use yangian::twisted::{s_embedded, sdet};
use yangian::yangian::{t_series, YCtx, YElement, YGen};
use yangian::Scalar;

fn straighten(c: &mut Criterion) {
    let ctx = YCtx::standard(2);
    let word = vec![
        YGen { r: 3, i: 2, j: 1 },
        YGen { r: 3, i: 1, j: 2 },
        YGen { r: 2, i: 2, j: 1 },
        YGen { r: 2, i: 1, j: 2 },
    ];
    c.bench_function("straighten_len4_level3", |b| {
        b.iter(|| YElement::from_word(&ctx, black_box(&word), &Scalar::one()))
    });
}

fn qdet_rank_two(c: &mut Criterion) {
    let ctx = YCtx::standard(2);
    c.bench_function("qdet_n2_depth3", |b| b.iter(|| qdet(&t_series(black_box(&ctx), 3))));
}

fn sdet_rank_two(c: &mut Criterion) {
    let ctx = YCtx::signed(1, false);
    let s = s_embedded(&ctx, PairingCase::Symplectic, 3);
    c.bench_function("sdet_sp_n2_depth3", |b| {
        b.iter(|| sdet(black_box(&s), PairingCase::Symplectic))
    });
}

fn newton_rank_two(c: &mut Criterion) {
    let spec = LieSpec::gl(2);
    c.bench_function("newton_gl2_to_order4", |b| {
        b.iter(|| newton_gl_check(black_box(&spec), -4).unwrap())
    });
}

criterion_group!(benches, straighten, qdet_rank_two, sdet_rank_two, newton_rank_two);
criterion_main!(benches);

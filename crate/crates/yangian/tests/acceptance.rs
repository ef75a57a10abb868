//! End-to-end acceptance harness.
//!
//! Each test below covers one acceptance criterion for the toolkit and ends by
//! printing a single `criterion NN (<name>): PASS` line (visible under
//! `cargo test -- --nocapture`).  Every comparison is exact — rational
//! arithmetic throughout, no tolerances — so a criterion either holds
//! identically or the test fails with the first offending witness.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use yangian::casimir::{
    capelli_c_g, capelli_c_gl, capelli_chi_target, casimir_families_g, casimir_families_gl,
    cayley_hamilton_g, cayley_hamilton_gl, chi_ck_target, chi_dk_target, chi_poly,
    d_standard_decomposition_check, hafnian_d_family, hafnian_expansion_check, newton_g_check,
    newton_gl_check, perelomov_popov_g, perelomov_popov_gl, pfaffian_c_family,
    pfaffian_decomposition_check, pfaffian_decomposition_skew_check, pfaffian_square_check,
    sym_target, SymFamily,
};
use yangian::homs::{
    antipode_axiom_check, antipode_square_check, capelli_minor_matrix, evaluation_image,
    evaluation_t, power_image, resolvent_matrix,
};
use yangian::lie::{AlgKind, LieSpec};
use yangian::matrix::{Mat, PairingCase};
use yangian::qdet::{
    block_factorization_check, comatrix_identity_check, composite_minor_matrix,
    cotranspose_identity_check, factorization_check, liouville_check, qdet, qdet_with_perm,
    sylvester_qdet_check,
};
use yangian::scalar::frac;
use yangian::sl2::{presentation_translation_check, FinitePresentation, SeriesPresentation};
use yangian::tensor::tau_series;
use yangian::twisted::{
    all_perms, case_sign, fiber_analysis, gamma_factor, quaternary_check, s_embedded, s_evaluated,
    sdet, sdet_factorization_check, sdet_formula, sdet_product_check, stirling_first,
    symmetry_check, zeta_embedding_check, zeta_sdet_check,
};
use yangian::yangian::{
    coproduct, coproduct_gen, counit, relation_oracle, t_series, Strategy, YCtx, YElement, YGen,
    YTensor,
};
use yangian::{Ring, Scalar, Series};

fn pass(num: u32, name: &str) {
    println!("criterion {:02} ({}): PASS", num, name);
}

/// Normal forms are stable and strategy-independent on random words, and the
/// four structural matrix maps all land in honest representations of the
/// defining relations.
#[test]
fn criterion_01_relation_engine() {
    let ctx = YCtx::standard(2);
    let labels = ctx.labels().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for round in 0..500 {
        let len = rng.gen_range(1..=4usize);
        let word: Vec<YGen> = (0..len)
            .map(|_| YGen {
                r: rng.gen_range(1..=5u32),
                i: labels[rng.gen_range(0..labels.len())],
                j: labels[rng.gen_range(0..labels.len())],
            })
            .collect();
        let mut c = rng.gen_range(-4i64..=4);
        if c == 0 {
            c = 1;
        }
        let coeff = Scalar::from_int(c);
        let x = YElement::from_word(&ctx, &word, &coeff);
        assert_eq!(x.renormalize(Strategy::Leftmost), x, "sample {}: leftmost not idempotent", round);
        assert_eq!(
            x.renormalize(Strategy::Rightmost),
            x,
            "sample {}: rightmost disagrees",
            round
        );
        let mut y = YElement::scalar(&coeff);
        for g in &word {
            y = y.mul_with(&YElement::gen(&ctx, g.r, g.i, g.j), Strategy::Rightmost);
        }
        assert_eq!(y, x, "sample {}: strategies disagree on {:?}", round, word);
    }

    let spec = LieSpec::gl(2);
    relation_oracle(spec.labels(), 4, &evaluation_image(&spec), false).unwrap();
    relation_oracle(spec.labels(), 4, &power_image(&spec), false).unwrap();
    let rm = resolvent_matrix(&spec, 5);
    let rimg = |r: u32, i: i32, j: i32| rm.get(i, j).coeff(-(r as i64));
    relation_oracle(spec.labels(), 4, &rimg, false).unwrap();
    let big = LieSpec::gl(3);
    let cm = capelli_minor_matrix(&big, 2, 5);
    let cimg = |r: u32, i: i32, j: i32| cm.get(i, j).coeff(-(r as i64));
    relation_oracle(&[1, 2], 4, &cimg, false).unwrap();

    pass(1, "relation engine");
}

/// All row/column expansions of the quantum determinant agree, abstractly at
/// rank two and under evaluation at rank three, and its coefficients are
/// central.
#[test]
fn criterion_02_quantum_determinant() {
    let ctx = YCtx::standard(2);
    let t = t_series(&ctx, 4);
    let q = qdet(&t);
    for rho in all_perms(&[1, 2]) {
        for column_form in [false, true] {
            qdet_with_perm(&t, &rho, column_form).eq_to(&q, -4).unwrap();
        }
    }

    let g3 = LieSpec::gl(3);
    let te = evaluation_t(&g3, 3);
    let qe = qdet(&te);
    for rho in all_perms(&[1, 2, 3]) {
        let row = qdet_with_perm(&te, &rho, false);
        let col = qdet_with_perm(&te, &rho, true);
        row.eq_to(&col, -3).unwrap();
        row.eq_to(&qe, -3).unwrap();
    }

    for k in 1..=4i64 {
        let dk = q.coeff(-k);
        for r in 1..=3u32 {
            for &i in ctx.labels() {
                for &j in ctx.labels() {
                    let g = YElement::gen(&ctx, r, i, j);
                    assert!(
                        dk.commutator(&g).is_zero(),
                        "d_{} does not commute with level-{} generator ({}, {})",
                        k,
                        r,
                        i,
                        j
                    );
                }
            }
        }
    }

    pass(2, "quantum determinant");
}

/// The coproduct respects the defining relations, the determinant coefficients
/// are grouplike, and the counit and antipode axioms hold.
#[test]
fn criterion_03_hopf_structure() {
    let ctx = YCtx::standard(2);
    let cp = |r: u32, i: i32, j: i32| coproduct_gen(&ctx, r, i, j);
    relation_oracle(ctx.labels(), 4, &cp, false).unwrap();

    let q = qdet(&t_series(&ctx, 3));
    let dk: Vec<YElement> =
        (0..=3).map(|k| if k == 0 { YElement::one() } else { q.coeff(-k) }).collect();
    for k in 0..=3usize {
        let lhs = coproduct(&dk[k]);
        let mut rhs = YTensor::zero();
        for a in 0..=k {
            rhs = rhs.add(&YTensor::of(&dk[a], &dk[k - a]));
        }
        assert_eq!(lhs, rhs, "determinant coefficient {} is not grouplike", k);
    }

    for r in 1..=3u32 {
        for &i in ctx.labels() {
            for &j in ctx.labels() {
                let x = YElement::gen(&ctx, r, i, j);
                let delta = coproduct(&x);
                let mut left = YElement::zero();
                let mut right = YElement::zero();
                for ((w1, w2), c) in delta.terms() {
                    let e1 = counit(&YElement::from_word(&ctx, w1, &Scalar::one()));
                    left = left.add(&YElement::from_word(&ctx, w2, &e1.mul(c)));
                    let e2 = counit(&YElement::from_word(&ctx, w2, &Scalar::one()));
                    right = right.add(&YElement::from_word(&ctx, w1, &e2.mul(c)));
                }
                assert_eq!(left, x, "left counit axiom fails at level {} ({}, {})", r, i, j);
                assert_eq!(right, x, "right counit axiom fails at level {} ({}, {})", r, i, j);
            }
        }
    }

    antipode_axiom_check(&ctx, 3).unwrap();
    antipode_square_check(&ctx, 3).unwrap();

    pass(3, "Hopf structure");
}

/// The comatrix identity, its transposed companion, and the
/// determinant-vs-inverse series identity hold abstractly and under
/// evaluation.
#[test]
fn criterion_04_liouville_comatrix() {
    let t = t_series(&YCtx::standard(2), 4);
    comatrix_identity_check(&t, -3).unwrap();
    cotranspose_identity_check(&t, -3).unwrap();
    liouville_check(&t, -3).unwrap();

    let te = evaluation_t(&LieSpec::gl(3), 3);
    comatrix_identity_check(&te, -2).unwrap();
    cotranspose_identity_check(&te, -2).unwrap();
    liouville_check(&te, -2).unwrap();

    pass(4, "Liouville and comatrix identities");
}

/// The determinant factors through principal minors (with permutable factors),
/// through an upper-left block, and through the composite-minor matrix whose
/// coefficients again satisfy the defining relations of a smaller algebra.
#[test]
fn criterion_05_factorizations() {
    let t2 = t_series(&YCtx::standard(2), 4);
    factorization_check(&t2, -3).unwrap();
    block_factorization_check(&t2, 1, -3).unwrap();

    let te3 = evaluation_t(&LieSpec::gl(3), 3);
    factorization_check(&te3, -2).unwrap();

    // Rank reduction at (n, m) = (2, 1): the single composite minor has
    // commuting coefficients, and its expansion matches the determinant ratio.
    let comp21 = composite_minor_matrix(&t2, 1);
    let img21 = |r: u32, _i: i32, _j: i32| comp21.get(1, 1).coeff(-(r as i64));
    relation_oracle(&[1], 3, &img21, false).unwrap();
    sylvester_qdet_check(&t2, 1, -4).unwrap();

    // Rank reduction at (n, m) = (3, 2) under evaluation.
    let comp32 = composite_minor_matrix(&te3, 2);
    let img32 = |r: u32, i: i32, j: i32| comp32.get(i, j).coeff(-(r as i64));
    relation_oracle(&[1, 2], 3, &img32, false).unwrap();
    sylvester_qdet_check(&te3, 2, -3).unwrap();

    pass(5, "determinant factorizations");
}

/// Both low-rank presentations hold (the finite one exactly, the series one
/// through depth four), they translate into each other, and both carry the
/// expected Hopf structure.
#[test]
fn criterion_06_rank_one_presentations() {
    let a = FinitePresentation::standard();
    a.verify_relations().unwrap();
    a.verify_coproduct().unwrap();
    a.verify_antipode().unwrap();
    a.verify_counit().unwrap();

    let b4 = SeriesPresentation::standard(4);
    b4.verify_series_relations().unwrap();
    b4.verify_component_relations().unwrap();

    let b3 = SeriesPresentation::standard(3);
    b3.verify_coproduct().unwrap();
    b3.verify_antipode().unwrap();
    b3.verify_counit().unwrap();

    presentation_translation_check(3).unwrap();

    pass(6, "rank-one presentations");
}

/// Reflection-algebra matrices satisfy their symmetry and quaternary
/// relations, the three routes to the twisted determinant agree (including the
/// explicit rank-one closed forms), and the determinant's ratio identity and
/// factorization hold in both pairing cases.
#[test]
fn criterion_07_twisted_algebras() {
    const CASES: [PairingCase; 2] = [PairingCase::Orthogonal, PairingCase::Symplectic];

    let ctx2 = YCtx::signed(1, false);
    for case in CASES {
        let s = s_embedded(&ctx2, case, 3);
        symmetry_check(&s, case, -2).unwrap();
        quaternary_check(&s, case, -1, -1).unwrap();
    }
    let ctx3 = YCtx::signed(1, true);
    let s3 = s_embedded(&ctx3, PairingCase::Orthogonal, 2);
    symmetry_check(&s3, PairingCase::Orthogonal, -1).unwrap();
    quaternary_check(&s3, PairingCase::Orthogonal, 0, 0).unwrap();

    for case in CASES {
        let s = s_embedded(&ctx2, case, 3);
        let det = sdet(&s, case);
        let forward = ctx2.labels().to_vec();
        let mut reversed = forward.clone();
        reversed.reverse();
        for arr in [&forward, &reversed] {
            for variant in [1u8, 2u8] {
                det.eq_to(&sdet_formula(&s, case, arr, variant), -3).unwrap();
            }
        }
        sdet_product_check(1, false, case, 3, -3).unwrap();

        // Explicit closed forms for the two corner expansions at rank one.
        let pm = case_sign(case);
        let g: Series<YElement> = gamma_factor(case, 1, -3);
        let sm1 = s.shift_arg(&Scalar::from_int(-1), Some(-3));
        let sneg = s.negate_arg();
        let e1 = g.mul(&sm1.get(-1, -1).mul(sneg.get(-1, -1)).add(
            &sm1.get(-1, 1).mul(sneg.get(1, -1)).scale(&Scalar::from_int(-pm)),
        ));
        det.eq_to(&e1, -3).unwrap();
        let e2 = g.mul(&sneg.get(1, 1).mul(sm1.get(1, 1)).add(
            &sneg.get(1, -1).mul(sm1.get(-1, 1)).scale(&Scalar::from_int(-pm)),
        ));
        det.eq_to(&e2, -3).unwrap();

        zeta_sdet_check(&s, case, -3).unwrap();
        zeta_embedding_check(1, false, case, 3, -3).unwrap();
    }

    zeta_sdet_check(&s3, PairingCase::Orthogonal, -2).unwrap();
    zeta_embedding_check(1, true, PairingCase::Orthogonal, 2, -2).unwrap();

    for (kind, case) in [
        (AlgKind::OEven, PairingCase::Orthogonal),
        (AlgKind::Sp, PairingCase::Symplectic),
        (AlgKind::OOdd, PairingCase::Orthogonal),
    ] {
        let spec = LieSpec::signed(kind, 1);
        let se = s_evaluated(&spec, 4);
        sdet_factorization_check(&se, case, -3).unwrap();
    }

    pass(7, "twisted algebras");
}

/// Fibers of the sign-forgetting projection on signed permutations have
/// power-of-two sizes counted by unsigned Stirling numbers of the first kind.
#[test]
fn criterion_08_projection_fibers() {
    for m in [3usize, 4, 5] {
        let report = fiber_analysis(m);
        let factorial: usize = (1..=m).product();
        assert_eq!(report.total, factorial, "fiber sizes must add up to {}!", m);
        let mut fiber_count = 0usize;
        for (&size, &count) in &report.by_size {
            assert!(size.is_power_of_two(), "fiber size {} is not a power of two", size);
            let k = size.trailing_zeros() as usize;
            assert_eq!(
                count as u128,
                stirling_first(m - 1, k),
                "wrong number of size-2^{} fibers at m = {}",
                k,
                m
            );
            fiber_count += count;
        }
        let small_factorial: usize = (1..m).product();
        assert_eq!(fiber_count, small_factorial, "expected {} fibers at m = {}", small_factorial, m);
    }

    pass(8, "projection fibers");
}

/// Newton's identities and the Perelomov–Popov eigenvalue formulas hold for
/// the general-linear series and for the symplectic and orthogonal series.
#[test]
fn criterion_09_newton_identities() {
    newton_gl_check(&LieSpec::gl(2), -5).unwrap();
    newton_gl_check(&LieSpec::gl(3), -4).unwrap();
    perelomov_popov_gl(&LieSpec::gl(3), -4).unwrap();

    for (kind, rank) in [(AlgKind::Sp, 1), (AlgKind::OOdd, 1), (AlgKind::OEven, 2)] {
        let spec = LieSpec::signed(kind, rank);
        newton_g_check(&spec, -4).unwrap();
        perelomov_popov_g(&spec, -4).unwrap();
    }

    pass(9, "Newton and eigenvalue identities");
}

/// The characteristic-type polynomial annihilates the generator matrix in both
/// of its substitution forms for gl, and in its shifted form for the
/// symplectic and orthogonal algebras.
#[test]
fn criterion_10_cayley_hamilton() {
    cayley_hamilton_gl(&LieSpec::gl(2)).unwrap();
    cayley_hamilton_gl(&LieSpec::gl(3)).unwrap();

    for (kind, rank) in [(AlgKind::Sp, 1), (AlgKind::OOdd, 1), (AlgKind::OEven, 2)] {
        let spec = LieSpec::signed(kind, rank);
        cayley_hamilton_g(&spec).unwrap();
    }

    pass(10, "Cayley-Hamilton annihilation");
}

/// The four path-sum families are central with the right symmetric-function
/// images, the two return-path families coincide, and the twisted families
/// behave the same way in even degree.
#[test]
fn criterion_11_path_sum_families() {
    for n in [2usize, 3] {
        let spec = LieSpec::gl(n);
        let fams = casimir_families_gl(&spec, 3);
        for k in 1..=3usize {
            for (name, v) in [
                ("Lambda", &fams.lam[k]),
                ("S", &fams.s[k]),
                ("Psi", &fams.psi[k]),
                ("Phi", &fams.phi[k]),
            ] {
                v.is_central().unwrap_or_else(|e| panic!("{}_{} at gl({}): {}", name, k, n, e));
            }
            assert_eq!(fams.psi[k], fams.phi[k], "first-return and ratio sums differ at k={}", k);
            for (name, v, fam) in [
                ("Lambda", &fams.lam[k], SymFamily::Elementary),
                ("S", &fams.s[k], SymFamily::Complete),
                ("Psi", &fams.psi[k], SymFamily::PowerSum),
            ] {
                assert_eq!(
                    v.hc_image_l(),
                    sym_target(&spec, fam, k, false).poly,
                    "{}_{} image at gl({})",
                    name,
                    k,
                    n
                );
            }
        }
    }

    for (kind, rank) in [(AlgKind::Sp, 1), (AlgKind::OEven, 2)] {
        let spec = LieSpec::signed(kind, rank);
        let fams = casimir_families_g(&spec, 1);
        for (name, v) in [("Lambda", &fams.lam[1]), ("S", &fams.s[1]), ("Phi", &fams.phi[1])] {
            v.is_central().unwrap_or_else(|e| panic!("{}_2 at {:?}: {}", name, kind, e));
        }
        let triples = [
            ("Lambda", fams.lam[1].hc_image_l().neg(), SymFamily::Elementary),
            ("S", fams.s[1].hc_image_l(), SymFamily::Complete),
            ("Phi", fams.phi[1].hc_image_l().scale(&frac(1, 2)), SymFamily::PowerSum),
        ];
        for (name, img, fam) in triples {
            assert_eq!(
                img,
                sym_target(&spec, fam, 1, true).poly,
                "{}_2 image at {:?}",
                name,
                kind
            );
        }
    }

    pass(11, "path-sum central families");
}

/// The Pfaffian squares to the constant term of the characteristic series,
/// Pfaffian pairs decompose the determinant series in both presentations, and
/// the Hafnian expansion inverts the symplectic series — with all images
/// matching the factorial symmetric-function targets.
#[test]
fn criterion_12_pfaffians_and_hafnians() {
    let o4 = LieSpec::signed(AlgKind::OEven, 2);
    let o5 = LieSpec::signed(AlgKind::OOdd, 2);
    let sp4 = LieSpec::signed(AlgKind::Sp, 2);
    let skew4 = LieSpec::o_skew(4);

    pfaffian_square_check(&skew4).unwrap();
    pfaffian_decomposition_check(&o4).unwrap();
    pfaffian_decomposition_check(&o5).unwrap();
    pfaffian_decomposition_skew_check(&skew4).unwrap();
    d_standard_decomposition_check(&skew4).unwrap();

    hafnian_expansion_check(&sp4, 2, -5).unwrap();
    hafnian_expansion_check(&sp4, 3, -6).unwrap();

    for spec in [&o4, &o5] {
        for (k, ck) in pfaffian_c_family(spec, 2).iter().enumerate().skip(1) {
            assert_eq!(ck.hc_image_l(), chi_ck_target(spec, k), "c_{} image", k);
        }
    }
    for (k, dk) in hafnian_d_family(&sp4, 2).iter().enumerate().skip(1) {
        assert_eq!(dk.hc_image_l(), chi_dk_target(&sp4, k), "d_{} image", k);
    }

    pass(12, "Pfaffian and Hafnian families");
}

/// All coefficients of the first two weighted trace series commute with each
/// other, abstractly at rank two and in the evaluated algebra.
#[test]
fn criterion_13_commuting_trace_families() {
    let ctx = YCtx::standard(2);
    let labels: Vec<i32> = vec![1, 2];
    let weights = Mat::from_fn(labels.clone(), labels, |i, j| {
        if i == j {
            Scalar::from_int(i as i64)
        } else {
            Scalar::zero()
        }
    });

    let t = t_series(&ctx, 3);
    let taus: Vec<_> = (1..=2usize).map(|k| tau_series(&t, &weights, k)).collect();
    for a in &taus {
        for b in &taus {
            for (e1, c1) in a.iter() {
                for (e2, c2) in b.iter() {
                    assert!(
                        c1.commutator(c2).is_zero(),
                        "coefficients at u^{} and u^{} do not commute",
                        e1,
                        e2
                    );
                }
            }
        }
    }

    let te = evaluation_t(&LieSpec::gl(2), 3);
    let taus_e: Vec<_> = (1..=2usize).map(|k| tau_series(&te, &weights, k)).collect();
    for a in &taus_e {
        for b in &taus_e {
            for (e1, c1) in a.iter() {
                for (e2, c2) in b.iter() {
                    assert!(
                        c1.commutator(c2).is_zero(),
                        "evaluated coefficients at u^{} and u^{} do not commute",
                        e1,
                        e2
                    );
                }
            }
        }
    }

    pass(13, "commuting trace families");
}

/// The characteristic image of the column determinant factors through the
/// shifted eigenvalue polynomial for every algebra the harness touches; kept
/// here as a cross-criterion consistency net for the evaluation machinery.
#[test]
fn capelli_images_consistent_across_algebras() {
    let g2 = LieSpec::gl(2);
    assert_eq!(chi_poly(&capelli_c_gl(&g2)), capelli_chi_target(&g2));
    let g3 = LieSpec::gl(3);
    assert_eq!(chi_poly(&capelli_c_gl(&g3)), capelli_chi_target(&g3));
    for (kind, rank) in [(AlgKind::Sp, 1), (AlgKind::OOdd, 1), (AlgKind::OEven, 2)] {
        let spec = LieSpec::signed(kind, rank);
        let arrangement: Vec<i32> = spec.labels().to_vec();
        assert_eq!(chi_poly(&capelli_c_g(&spec, &arrangement)), capelli_chi_target(&spec));
    }
}

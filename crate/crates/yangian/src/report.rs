//! Named verification suites with machine-readable, deterministic reports.
//!
//! A suite bundles a fixed list of exact identity checks behind a stable
//! name and a small parameter map (rank, truncation depth, pairing case,
//! sample count, seed).  Running one produces a [`SuiteReport`] with one
//! [`CheckRecord`] per check, in a fixed order; when a check fails the
//! record quotes the first offending coefficient reported by the underlying
//! comparison.  Reports serialize to JSON.  Everything except the wall-time
//! field is deterministic given the parameters, and
//! [`SuiteReport::canonical_json`] zeroes that field so byte-level
//! comparisons of two runs are meaningful.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::casimir::{
    capelli_c_g, capelli_c_gl, capelli_chi_target, casimir_families_g, casimir_families_gl,
    cayley_hamilton_g, cayley_hamilton_gl, chi_ck_target, chi_dk_target, chi_poly,
    d_standard_decomposition_check, hafnian_d_family, hafnian_expansion_check, newton_g_check,
    newton_gl_check, perelomov_popov_g, perelomov_popov_gl, pfaffian_c_family,
    pfaffian_decomposition_check, pfaffian_decomposition_skew_check, pfaffian_square_check,
    sym_target, SymFamily,
};
use crate::homs::{
    antipode_axiom_check, antipode_square_check, capelli_minor_matrix, evaluation_image,
    evaluation_t, power_image, resolvent_matrix,
};
use crate::lie::{AlgKind, LieSpec};
use crate::matrix::{Mat, PairingCase};
use crate::qdet::{
    block_factorization_check, comatrix_identity_check, cotranspose_identity_check,
    factorization_check, liouville_check, qdet, qdet_with_perm, sylvester_qdet_check,
};
use crate::ring::Ring;
use crate::scalar::Scalar;
use crate::sl2::{presentation_translation_check, FinitePresentation, SeriesPresentation};
use crate::tensor::tau_series;
use crate::twisted::{
    all_perms, coideal_check, fiber_analysis, quaternary_check, s_embedded, s_evaluated, sdet,
    sdet_factorization_check, sdet_formula, sdet_functional_check, sdet_product_check,
    sklyanin_comatrix_check, stirling_first, symmetry_check, zeta_embedding_check,
    zeta_sdet_check,
};
use crate::yangian::{
    coproduct, coproduct_gen, counit, relation_oracle, t_series, Strategy, YCtx, YElement, YGen,
    YTensor,
};

/// Outcome of a single check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One named check inside a suite.  `witness` is only present on failure
/// and points at the first offending coefficient or index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub anchor: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

/// Result of running a suite: the effective parameters (defaults filled
/// in), the ordered check list, and the wall time in milliseconds.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub params: BTreeMap<String, String>,
    pub checks: Vec<CheckRecord>,
    pub time_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail).count()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    /// JSON with the wall-time field zeroed: two runs with identical
    /// parameters produce byte-identical canonical JSON.
    pub fn canonical_json(&self) -> String {
        let mut c = self.clone();
        c.time_ms = 0;
        c.to_json()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let params: Vec<String> =
            self.params.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
        out.push_str(&format!("suite {} ({})\n", self.suite, params.join(", ")));
        for c in &self.checks {
            match c.status {
                CheckStatus::Pass => out.push_str(&format!("  pass {}\n", c.anchor)),
                CheckStatus::Fail => out.push_str(&format!(
                    "  FAIL {}: {}\n",
                    c.anchor,
                    c.witness.as_deref().unwrap_or("no witness")
                )),
            }
        }
        out.push_str(&format!(
            "{} checks, {} failures, {} ms\n",
            self.checks.len(),
            self.failures(),
            self.time_ms
        ));
        out
    }
}

/// Why a suite could not run at all (as opposed to running and failing).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuiteError {
    UnknownSuite(String),
    InvalidParams(String),
}

impl fmt::Display for SuiteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteError::UnknownSuite(name) => {
                write!(f, "unknown suite `{}`; available: ", name)?;
                let names: Vec<&str> = list_suites().iter().map(|(n, _)| *n).collect();
                write!(f, "{}", names.join(", "))
            }
            SuiteError::InvalidParams(msg) => write!(f, "invalid parameters: {}", msg),
        }
    }
}

impl std::error::Error for SuiteError {}

/// Typed accessors over the raw string parameter map.  Every key a suite
/// reads is echoed (with its effective value) into the report, and keys the
/// suite never reads are rejected afterwards.
struct Params<'a> {
    raw: &'a BTreeMap<String, String>,
    effective: BTreeMap<String, String>,
}

impl<'a> Params<'a> {
    fn new(raw: &'a BTreeMap<String, String>) -> Self {
        Params { raw, effective: BTreeMap::new() }
    }

    fn usize_or(&mut self, key: &str, default: usize) -> Result<usize, SuiteError> {
        let v = match self.raw.get(key) {
            Some(s) => s.parse::<usize>().map_err(|_| {
                SuiteError::InvalidParams(format!("`{}` must be a nonnegative integer, got `{}`", key, s))
            })?,
            None => default,
        };
        self.effective.insert(key.to_string(), v.to_string());
        Ok(v)
    }

    fn i64_or(&mut self, key: &str, default: i64) -> Result<i64, SuiteError> {
        let v = match self.raw.get(key) {
            Some(s) => s.parse::<i64>().map_err(|_| {
                SuiteError::InvalidParams(format!("`{}` must be an integer, got `{}`", key, s))
            })?,
            None => default,
        };
        self.effective.insert(key.to_string(), v.to_string());
        Ok(v)
    }

    fn u64_or(&mut self, key: &str, default: u64) -> Result<u64, SuiteError> {
        let v = match self.raw.get(key) {
            Some(s) => s.parse::<u64>().map_err(|_| {
                SuiteError::InvalidParams(format!("`{}` must be a nonnegative integer, got `{}`", key, s))
            })?,
            None => default,
        };
        self.effective.insert(key.to_string(), v.to_string());
        Ok(v)
    }

    fn str_or(&mut self, key: &str, default: &str) -> Result<String, SuiteError> {
        let v = self.raw.get(key).cloned().unwrap_or_else(|| default.to_string());
        self.effective.insert(key.to_string(), v.clone());
        Ok(v)
    }

    fn case_or(&mut self, key: &str, default: &str) -> Result<PairingCase, SuiteError> {
        let v = self.str_or(key, default)?;
        match v.as_str() {
            "o" => Ok(PairingCase::Orthogonal),
            "sp" => Ok(PairingCase::Symplectic),
            other => Err(SuiteError::InvalidParams(format!(
                "`{}` must be `o` or `sp`, got `{}`",
                key, other
            ))),
        }
    }

    /// Reject keys that the suite never consulted.
    fn finish(self) -> Result<BTreeMap<String, String>, SuiteError> {
        for key in self.raw.keys() {
            if !self.effective.contains_key(key) {
                return Err(SuiteError::InvalidParams(format!("unknown parameter `{}`", key)));
            }
        }
        Ok(self.effective)
    }
}

fn clip(s: &str) -> String {
    const LIMIT: usize = 240;
    if s.len() <= LIMIT {
        s.to_string()
    } else {
        let cut: String = s.chars().take(LIMIT).collect();
        format!("{}...", cut)
    }
}

fn record(anchor: &str, result: Result<(), String>) -> CheckRecord {
    match result {
        Ok(()) => CheckRecord { anchor: anchor.to_string(), status: CheckStatus::Pass, witness: None },
        Err(e) => CheckRecord {
            anchor: anchor.to_string(),
            status: CheckStatus::Fail,
            witness: Some(clip(&e)),
        },
    }
}

fn record_opt(anchor: &str, failure: Option<String>) -> CheckRecord {
    record(anchor, match failure {
        None => Ok(()),
        Some(w) => Err(w),
    })
}

/// The orthogonal or symplectic spec acting on C^N.
fn signed_spec(case: PairingCase, cap_n: usize) -> Result<Arc<LieSpec>, SuiteError> {
    if cap_n < 2 {
        return Err(SuiteError::InvalidParams(format!("N must be at least 2, got {}", cap_n)));
    }
    match case {
        PairingCase::Symplectic => {
            if cap_n % 2 != 0 {
                return Err(SuiteError::InvalidParams(format!(
                    "the symplectic case needs even N, got {}",
                    cap_n
                )));
            }
            Ok(LieSpec::signed(AlgKind::Sp, cap_n / 2))
        }
        PairingCase::Orthogonal => Ok(if cap_n % 2 == 0 {
            LieSpec::signed(AlgKind::OEven, cap_n / 2)
        } else {
            LieSpec::signed(AlgKind::OOdd, cap_n / 2)
        }),
    }
}

/// All registered suites as `(name, description)` pairs, in the order the
/// `--list-suites` flag prints them.
pub fn list_suites() -> Vec<(&'static str, &'static str)> {
    vec![
        ("relation-engine", "normal-form stability on random words and defining relations for the evaluation, power, resolvent, and corner-minor images"),
        ("qdet-center", "row/column quantum-determinant expansions agree and the coefficients are central"),
        ("hopf", "coproduct is an algebra map, the quantum determinant is grouplike, counit and antipode axioms"),
        ("liouville", "comatrix and cotranspose identities and the Liouville ratio, abstract and evaluated"),
        ("sylvester", "principal and block factorizations and the composite-minor determinant identity"),
        ("sl2-realizations", "both rank-one presentations: relations, coproduct, antipode, counit, translation"),
        ("twisted-symmetry", "reflection-equation matrix: transpose symmetry, exchange relation, coideal property"),
        ("sdet-crosscheck", "Sklyanin determinant three ways: antisymmetrizer, closed formula, product of quantum determinants"),
        ("twisted-liouville", "zeta ratio, comatrix identity, and quasi-determinant factorization for the twisted determinant"),
        ("fibers", "projection fibers of the symmetric group: power-of-two sizes counted by Stirling numbers"),
        ("newton", "Newton trace identity and the eigenvalue product formula for the characteristic series"),
        ("cayley-hamilton", "the characteristic series annihilates its own generator matrix"),
        ("graphical", "path-sum Casimir families: centrality and symmetric-function eigenvalue images"),
        ("pfaffian", "Pfaffian minor families and the decompositions of the orthogonal characteristic series"),
        ("hafnian", "Hafnian minor family and the inverse-expansion of the symplectic characteristic series"),
        ("trace-family", "weighted antisymmetrizer traces pairwise commute, abstractly and evaluated"),
    ]
}

/// Run the named suite.  `params` uses string values (as they arrive from a
/// command line); missing entries fall back to suite defaults, unknown
/// names or malformed values are rejected.
pub fn run_suite(
    name: &str,
    params: &BTreeMap<String, String>,
) -> Result<SuiteReport, SuiteError> {
    let start = Instant::now();
    let mut p = Params::new(params);
    let checks = match name {
        "relation-engine" => suite_relation_engine(&mut p)?,
        "qdet-center" => suite_qdet_center(&mut p)?,
        "hopf" => suite_hopf(&mut p)?,
        "liouville" => suite_liouville(&mut p)?,
        "sylvester" => suite_sylvester(&mut p)?,
        "sl2-realizations" => suite_sl2(&mut p)?,
        "twisted-symmetry" => suite_twisted_symmetry(&mut p)?,
        "sdet-crosscheck" => suite_sdet_crosscheck(&mut p)?,
        "twisted-liouville" => suite_twisted_liouville(&mut p)?,
        "fibers" => suite_fibers(&mut p)?,
        "newton" => suite_newton(&mut p)?,
        "cayley-hamilton" => suite_cayley_hamilton(&mut p)?,
        "graphical" => suite_graphical(&mut p)?,
        "pfaffian" => suite_pfaffian(&mut p)?,
        "hafnian" => suite_hafnian(&mut p)?,
        "trace-family" => suite_trace_family(&mut p)?,
        other => return Err(SuiteError::UnknownSuite(other.to_string())),
    };
    let effective = p.finish()?;
    Ok(SuiteReport {
        suite: name.to_string(),
        params: effective,
        checks,
        time_ms: start.elapsed().as_millis() as u64,
    })
}

fn suite_relation_engine(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let n = p.usize_or("n", 2)?;
    let d = p.i64_or("D", 3)?.max(1);
    let samples = p.usize_or("samples", 100)?;
    let seed = p.u64_or("seed", 0)?;
    let ctx = YCtx::standard(n);
    let labels = ctx.labels().to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failure = None;
    for round in 0..samples {
        let len = rng.gen_range(1..=4usize);
        let word: Vec<YGen> = (0..len)
            .map(|_| YGen {
                r: rng.gen_range(1..=d as u32),
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
        if x.renormalize(Strategy::Leftmost) != x || x.renormalize(Strategy::Rightmost) != x {
            failure = Some(format!("normal form not idempotent on sample {}: {:?}", round, word));
            break;
        }
        let mut y = YElement::scalar(&coeff);
        for g in &word {
            y = y.mul_with(&YElement::gen(&ctx, g.r, g.i, g.j), Strategy::Rightmost);
        }
        if y != x {
            failure = Some(format!("straightening strategies disagree on sample {}: {:?}", round, word));
            break;
        }
    }
    let mut checks = vec![record_opt("normal-form-stability", failure)];

    let bound = d as u32;
    let abstract_img = |r: u32, i: i32, j: i32| YElement::gen(&ctx, r, i, j);
    checks.push(record(
        "defining-relations",
        relation_oracle(ctx.labels(), bound, &abstract_img, false).map(|_| ()),
    ));

    let spec = LieSpec::gl(n);
    checks.push(record(
        "evaluation-map",
        relation_oracle(spec.labels(), bound, &evaluation_image(&spec), false).map(|_| ()),
    ));
    checks.push(record(
        "power-map",
        relation_oracle(spec.labels(), bound, &power_image(&spec), false).map(|_| ()),
    ));
    let rm = resolvent_matrix(&spec, d + 1);
    let rimg = |r: u32, i: i32, j: i32| rm.get(i, j).coeff(-(r as i64));
    checks.push(record(
        "resolvent-map",
        relation_oracle(spec.labels(), bound, &rimg, false).map(|_| ()),
    ));
    let big_spec = LieSpec::gl(n + 1);
    let cm = capelli_minor_matrix(&big_spec, n, d + 1);
    let minor_labels: Vec<i32> = (1..=n as i32).collect();
    let cimg = |r: u32, i: i32, j: i32| cm.get(i, j).coeff(-(r as i64));
    checks.push(record(
        "corner-minor-map",
        relation_oracle(&minor_labels, bound, &cimg, false).map(|_| ()),
    ));
    Ok(checks)
}

fn suite_qdet_center(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let n = p.usize_or("n", 2)?;
    let d = p.i64_or("D", 4)?.max(1);
    let ctx = YCtx::standard(n);
    let t = t_series(&ctx, d);
    let q = qdet(&t);
    let family: Vec<i32> = (1..=n as i32).collect();

    let mut failure = None;
    'outer: for rho in all_perms(&family) {
        for column_form in [false, true] {
            let alt = qdet_with_perm(&t, &rho, column_form);
            if let Err(e) = alt.eq_to(&q, -d) {
                failure = Some(format!(
                    "{} expansion along {:?}: {}",
                    if column_form { "column" } else { "row" },
                    rho,
                    e
                ));
                break 'outer;
            }
        }
    }
    let mut checks = vec![record_opt("row-column-expansions", failure)];

    let spec = LieSpec::gl(n);
    let te = evaluation_t(&spec, d);
    let qe = qdet(&te);
    let mut failure = None;
    'outer: for rho in all_perms(&family) {
        for column_form in [false, true] {
            let alt = qdet_with_perm(&te, &rho, column_form);
            if let Err(e) = alt.eq_to(&qe, -d) {
                failure = Some(format!(
                    "evaluated {} expansion along {:?}: {}",
                    if column_form { "column" } else { "row" },
                    rho,
                    e
                ));
                break 'outer;
            }
        }
    }
    checks.push(record_opt("evaluated-expansions", failure));

    let mut failure = None;
    'central: for k in 1..=d {
        let dk = q.coeff(-k);
        for r in 1..=(d - 1).max(1) as u32 {
            for &i in ctx.labels() {
                for &j in ctx.labels() {
                    let g = YElement::gen(&ctx, r, i, j);
                    let comm = dk.commutator(&g);
                    if !comm.is_zero() {
                        failure = Some(format!(
                            "[d_{}, t^({})_{}{}] = {}",
                            k,
                            r,
                            i,
                            j,
                            clip(&comm.to_string())
                        ));
                        break 'central;
                    }
                }
            }
        }
    }
    checks.push(record_opt("coefficients-central", failure));
    Ok(checks)
}

fn suite_hopf(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let n = p.usize_or("n", 2)?;
    let d = p.i64_or("D", 3)?.max(1);
    let ctx = YCtx::standard(n);

    let cp = |r: u32, i: i32, j: i32| coproduct_gen(&ctx, r, i, j);
    let mut checks = vec![record(
        "coproduct-homomorphism",
        relation_oracle(ctx.labels(), d as u32, &cp, false).map(|_| ()),
    )];

    let q = qdet(&t_series(&ctx, d));
    let dk: Vec<YElement> =
        (0..=d).map(|k| if k == 0 { YElement::one() } else { q.coeff(-k) }).collect();
    let mut failure = None;
    for k in 0..=d as usize {
        let lhs = coproduct(&dk[k]);
        let mut rhs = YTensor::zero();
        for a in 0..=k {
            rhs = rhs.add(&YTensor::of(&dk[a], &dk[k - a]));
        }
        if lhs != rhs {
            failure = Some(format!("coefficient {} of the determinant is not grouplike", k));
            break;
        }
    }
    checks.push(record_opt("determinant-grouplike", failure));

    let mut failure = None;
    'counit: for r in 1..=d as u32 {
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
                if left != x || right != x {
                    failure = Some(format!("counit axiom fails on t^({})_{}{}", r, i, j));
                    break 'counit;
                }
            }
        }
    }
    checks.push(record_opt("counit-axiom", failure));

    checks.push(record("antipode-axiom", antipode_axiom_check(&ctx, d as u32)));
    checks.push(record("antipode-square", antipode_square_check(&ctx, d)));
    Ok(checks)
}

fn suite_liouville(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let n = p.usize_or("n", 2)?;
    let d = p.i64_or("D", 4)?.max(2);
    let ctx = YCtx::standard(n);
    let t = t_series(&ctx, d);
    let mut checks = vec![
        record("comatrix-identity", comatrix_identity_check(&t, -(d - 1))),
        record("cotranspose-identity", cotranspose_identity_check(&t, -(d - 1))),
        record("liouville-ratio", liouville_check(&t, -(d - 1))),
    ];
    let spec = LieSpec::gl(n);
    let te = evaluation_t(&spec, d);
    checks.push(record("evaluated-comatrix-identity", comatrix_identity_check(&te, -(d - 1))));
    checks.push(record("evaluated-liouville-ratio", liouville_check(&te, -(d - 1))));
    Ok(checks)
}

fn suite_sylvester(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let n = p.usize_or("n", 2)?;
    let d = p.i64_or("D", 3)?.max(2);
    let m = p.usize_or("m", 1)?;
    if m >= n {
        return Err(SuiteError::InvalidParams(format!(
            "the block size m must be smaller than n, got m={} n={}",
            m, n
        )));
    }
    let ctx = YCtx::standard(n);
    let t = t_series(&ctx, d);
    Ok(vec![
        record("principal-factorization", factorization_check(&t, -(d - 1))),
        record("block-factorization", block_factorization_check(&t, m, -(d - 1))),
        record("composite-minor-determinant", sylvester_qdet_check(&t, m, -d)),
    ])
}

fn suite_sl2(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let d = p.i64_or("D", 3)?.max(2);
    let a = FinitePresentation::standard();
    let b = SeriesPresentation::standard(d);
    Ok(vec![
        record("finite-presentation", a.verify_relations()),
        record("finite-coproduct", a.verify_coproduct()),
        record("finite-antipode", a.verify_antipode()),
        record("finite-counit", a.verify_counit()),
        record("series-presentation", b.verify_series_relations()),
        record("component-presentation", b.verify_component_relations()),
        record("series-coproduct", b.verify_coproduct()),
        record("series-antipode", b.verify_antipode()),
        record("series-counit", b.verify_counit()),
        record("presentation-translation", presentation_translation_check(d)),
    ])
}

fn suite_twisted_symmetry(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let cap_n = p.usize_or("N", 2)?;
    let case = p.case_or("case", "sp")?;
    let d = p.i64_or("D", 3)?.max(2);
    let spec = signed_spec(case, cap_n)?;
    let n = cap_n / 2;
    let with_zero = cap_n % 2 == 1;
    let ctx = YCtx::signed(n, with_zero);
    let s = s_embedded(&ctx, case, d);
    let mut checks = vec![
        record("transpose-symmetry", symmetry_check(&s, case, -(d - 1))),
        record("exchange-relation", quaternary_check(&s, case, -(d - 2), -(d - 2))),
        record(
            "coideal-property",
            coideal_check(n, with_zero, case, d - 1, -(d - 1)).map(|_| ()),
        ),
    ];
    let se = s_evaluated(&spec, d);
    checks.push(record("evaluated-symmetry", symmetry_check(&se, case, -(d - 1))));
    checks.push(record(
        "evaluated-exchange",
        quaternary_check(&se, case, -(d - 2), -(d - 2)),
    ));
    Ok(checks)
}

fn suite_sdet_crosscheck(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let cap_n = p.usize_or("N", 2)?;
    let case = p.case_or("case", "sp")?;
    let d = p.i64_or("D", 3)?.max(2);
    signed_spec(case, cap_n)?;
    let n = cap_n / 2;
    let with_zero = cap_n % 2 == 1;
    let ctx = YCtx::signed(n, with_zero);
    let s = s_embedded(&ctx, case, d);
    let det = sdet(&s, case);

    let mut failure = None;
    let forward = ctx.labels().to_vec();
    let mut reversed = forward.clone();
    reversed.reverse();
    'outer: for arr in [forward, reversed] {
        for variant in [1u8, 2u8] {
            let alt = sdet_formula(&s, case, &arr, variant);
            if let Err(e) = det.eq_to(&alt, -d) {
                failure = Some(format!("arrangement {:?}, variant {}: {}", arr, variant, e));
                break 'outer;
            }
        }
    }
    let mut checks = vec![record_opt("closed-formula", failure)];
    checks.push(record(
        "quantum-determinant-product",
        sdet_product_check(n, with_zero, case, d, -d),
    ));
    let s_deep = s_embedded(&ctx, case, d + 1);
    checks.push(record(
        "functional-relation",
        sdet_functional_check(&s_deep, case, -(d + 1)),
    ));
    Ok(checks)
}

fn suite_twisted_liouville(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let cap_n = p.usize_or("N", 2)?;
    let case = p.case_or("case", "sp")?;
    let d = p.i64_or("D", 3)?.max(2);
    let spec = signed_spec(case, cap_n)?;
    let n = cap_n / 2;
    let with_zero = cap_n % 2 == 1;
    let ctx = YCtx::signed(n, with_zero);
    let s = s_embedded(&ctx, case, d);
    let mut checks = vec![
        record("zeta-ratio", zeta_sdet_check(&s, case, -d)),
        record("zeta-via-untwisted", zeta_embedding_check(n, with_zero, case, d, -d)),
        record("comatrix-identity", sklyanin_comatrix_check(&s, case, -d)),
        record("embedded-factorization", sdet_factorization_check(&s, case, -(d - 1))),
    ];
    let se = s_evaluated(&spec, d + 1);
    checks.push(record(
        "evaluated-factorization",
        sdet_factorization_check(&se, case, -(d - 1)),
    ));
    Ok(checks)
}

fn suite_fibers(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let cap_n = p.usize_or("N", 4)?;
    if cap_n == 0 || cap_n > 7 {
        return Err(SuiteError::InvalidParams(format!(
            "N must be between 1 and 7, got {}",
            cap_n
        )));
    }
    let rep = fiber_analysis(cap_n);
    let mut checks = Vec::new();

    let mut failure = None;
    for (&size, _) in &rep.by_size {
        if !size.is_power_of_two() {
            failure = Some(format!("fiber of size {} is not a power of two", size));
            break;
        }
    }
    checks.push(record_opt("power-of-two-sizes", failure));

    let mut failure = None;
    for (&size, &count) in &rep.by_size {
        let k = size.trailing_zeros() as usize;
        let want = stirling_first(cap_n - 1, k);
        if count as u128 != want {
            failure = Some(format!(
                "fibers of size 2^{}: found {}, Stirling count is {}",
                k, count, want
            ));
            break;
        }
    }
    checks.push(record_opt("stirling-counts", failure));

    let total_expected: usize = (1..=cap_n).product();
    checks.push(record_opt(
        "total-permutations",
        if rep.total == total_expected {
            None
        } else {
            Some(format!("fiber sizes sum to {}, expected {}!", rep.total, cap_n))
        },
    ));
    Ok(checks)
}

fn suite_newton(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let algebra = p.str_or("algebra", "gl")?;
    match algebra.as_str() {
        "gl" => {
            let n = p.usize_or("n", 2)?;
            let prec = p.i64_or("prec", 4)?.max(1);
            let spec = LieSpec::gl(n);
            let mut checks = vec![
                record("newton-identity", newton_gl_check(&spec, -prec)),
                record("eigenvalue-product", perelomov_popov_gl(&spec, -prec)),
            ];
            let img = chi_poly(&capelli_c_gl(&spec));
            let want = capelli_chi_target(&spec);
            checks.push(record_opt(
                "characteristic-image",
                if img == want {
                    None
                } else {
                    Some(clip(&format!("image {} differs from {}", img, want)))
                },
            ));
            Ok(checks)
        }
        "o" | "sp" => {
            let cap_n = p.usize_or("N", 2)?;
            let prec = p.i64_or("prec", 4)?.max(1);
            let case = if algebra == "sp" {
                PairingCase::Symplectic
            } else {
                PairingCase::Orthogonal
            };
            let spec = signed_spec(case, cap_n)?;
            let mut checks = vec![
                record("newton-identity", newton_g_check(&spec, -prec)),
                record("eigenvalue-product", perelomov_popov_g(&spec, -prec)),
            ];
            let img = chi_poly(&capelli_c_g(&spec, spec.labels()));
            let want = capelli_chi_target(&spec);
            checks.push(record_opt(
                "characteristic-image",
                if img == want {
                    None
                } else {
                    Some(clip(&format!("image {} differs from {}", img, want)))
                },
            ));
            Ok(checks)
        }
        other => Err(SuiteError::InvalidParams(format!(
            "`algebra` must be gl, o, or sp, got `{}`",
            other
        ))),
    }
}

fn suite_cayley_hamilton(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let algebra = p.str_or("algebra", "gl")?;
    match algebra.as_str() {
        "gl" => {
            let n = p.usize_or("n", 2)?;
            Ok(vec![record("annihilation", cayley_hamilton_gl(&LieSpec::gl(n)))])
        }
        "o" | "sp" => {
            let cap_n = p.usize_or("N", 2)?;
            let case = if algebra == "sp" {
                PairingCase::Symplectic
            } else {
                PairingCase::Orthogonal
            };
            let spec = signed_spec(case, cap_n)?;
            Ok(vec![record("annihilation", cayley_hamilton_g(&spec))])
        }
        other => Err(SuiteError::InvalidParams(format!(
            "`algebra` must be gl, o, or sp, got `{}`",
            other
        ))),
    }
}

fn suite_graphical(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let algebra = p.str_or("algebra", "gl")?;
    match algebra.as_str() {
        "gl" => {
            let n = p.usize_or("n", 2)?;
            let kmax = p.usize_or("kmax", 3)?.max(1);
            let spec = LieSpec::gl(n);
            let fams = casimir_families_gl(&spec, kmax);
            let mut central = None;
            let mut agree = None;
            let mut images = None;
            for k in 1..=kmax {
                for (name, v) in [
                    ("Lambda", &fams.lam[k]),
                    ("S", &fams.s[k]),
                    ("Psi", &fams.psi[k]),
                    ("Phi", &fams.phi[k]),
                ] {
                    if central.is_none() {
                        if let Err(e) = v.is_central() {
                            central = Some(format!("{}_{}: {}", name, k, clip(&e)));
                        }
                    }
                }
                if agree.is_none() && fams.psi[k] != fams.phi[k] {
                    agree = Some(format!("first-return and return-ratio sums differ at k={}", k));
                }
                if images.is_none() {
                    for (name, v, fam) in [
                        ("Lambda", &fams.lam[k], SymFamily::Elementary),
                        ("S", &fams.s[k], SymFamily::Complete),
                        ("Psi", &fams.psi[k], SymFamily::PowerSum),
                    ] {
                        let img = v.hc_image_l();
                        let want = sym_target(&spec, fam, k, false).poly;
                        if img != want {
                            images = Some(clip(&format!(
                                "{}_{} image {} differs from {}",
                                name, k, img, want
                            )));
                            break;
                        }
                    }
                }
            }
            Ok(vec![
                record_opt("families-central", central),
                record_opt("first-return-equals-ratio", agree),
                record_opt("symmetric-function-images", images),
            ])
        }
        "o" | "sp" => {
            let cap_n = p.usize_or("N", 2)?;
            let khalf = p.usize_or("kmax", 2)?.max(2) / 2;
            let case = if algebra == "sp" {
                PairingCase::Symplectic
            } else {
                PairingCase::Orthogonal
            };
            let spec = signed_spec(case, cap_n)?;
            let fams = casimir_families_g(&spec, khalf);
            let mut central = None;
            let mut images = None;
            for k in 1..=khalf {
                for (name, v) in [("Lambda", &fams.lam[k]), ("S", &fams.s[k]), ("Phi", &fams.phi[k])]
                {
                    if central.is_none() {
                        if let Err(e) = v.is_central() {
                            central = Some(format!("{}_{}: {}", name, 2 * k, clip(&e)));
                        }
                    }
                }
                if images.is_none() {
                    let lam_img = if k % 2 == 1 {
                        fams.lam[k].hc_image_l().neg()
                    } else {
                        fams.lam[k].hc_image_l()
                    };
                    let triples = [
                        ("Lambda", lam_img, SymFamily::Elementary),
                        ("S", fams.s[k].hc_image_l(), SymFamily::Complete),
                        (
                            "Phi",
                            fams.phi[k].hc_image_l().scale(&crate::scalar::frac(1, 2)),
                            SymFamily::PowerSum,
                        ),
                    ];
                    for (name, img, fam) in triples {
                        let want = sym_target(&spec, fam, k, true).poly;
                        if img != want {
                            images = Some(clip(&format!(
                                "{}_{} image {} differs from {}",
                                name,
                                2 * k,
                                img,
                                want
                            )));
                            break;
                        }
                    }
                }
            }
            Ok(vec![
                record_opt("families-central", central),
                record_opt("symmetric-function-images", images),
            ])
        }
        other => Err(SuiteError::InvalidParams(format!(
            "`algebra` must be gl, o, or sp, got `{}`",
            other
        ))),
    }
}

fn suite_pfaffian(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let cap_n = p.usize_or("N", 4)?;
    let spec = signed_spec(PairingCase::Orthogonal, cap_n)?;
    let n = cap_n / 2;
    let mut checks =
        vec![record("determinant-decomposition", pfaffian_decomposition_check(&spec))];
    if cap_n % 2 == 0 {
        let skew = LieSpec::o_skew(cap_n);
        checks.push(record("square-is-constant-term", pfaffian_square_check(&skew)));
        checks.push(record(
            "skew-decomposition",
            pfaffian_decomposition_skew_check(&skew),
        ));
        checks.push(record(
            "standard-decomposition",
            d_standard_decomposition_check(&skew),
        ));
    }
    let c = pfaffian_c_family(&spec, n);
    let mut failure = None;
    for (k, ck) in c.iter().enumerate().skip(1) {
        let img = ck.hc_image_l();
        let want = chi_ck_target(&spec, k);
        if img != want {
            failure = Some(clip(&format!("c_{} image {} differs from {}", k, img, want)));
            break;
        }
    }
    checks.push(record_opt("factorial-elementary-images", failure));
    Ok(checks)
}

fn suite_hafnian(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let cap_n = p.usize_or("N", 4)?;
    let kmax = p.usize_or("kmax", 2)?.max(1);
    let spec = signed_spec(PairingCase::Symplectic, cap_n)?;
    let mut checks = vec![
        record(
            "inverse-expansion",
            hafnian_expansion_check(&spec, kmax, -(2 * kmax as i64 + 1)),
        ),
        record(
            "inverse-expansion-next-order",
            hafnian_expansion_check(&spec, kmax + 1, -(2 * kmax as i64 + 2)),
        ),
    ];
    let d = hafnian_d_family(&spec, kmax);
    let mut failure = None;
    for (k, dk) in d.iter().enumerate().skip(1) {
        let img = dk.hc_image_l();
        let want = chi_dk_target(&spec, k);
        if img != want {
            failure = Some(clip(&format!("d_{} image {} differs from {}", k, img, want)));
            break;
        }
    }
    checks.push(record_opt("factorial-complete-images", failure));
    Ok(checks)
}

fn suite_trace_family(p: &mut Params) -> Result<Vec<CheckRecord>, SuiteError> {
    let n = p.usize_or("n", 2)?;
    let d = p.i64_or("D", 3)?.max(1);
    let ctx = YCtx::standard(n);
    let labels: Vec<i32> = (1..=n as i32).collect();
    let weights = Mat::from_fn(labels.clone(), labels.clone(), |i, j| {
        if i == j {
            Scalar::from_int(i as i64)
        } else {
            Scalar::zero()
        }
    });
    let t = t_series(&ctx, d);
    let taus: Vec<_> = (1..=2usize).map(|k| tau_series(&t, &weights, k)).collect();
    let mut failure = None;
    'abstract_pairs: for a in &taus {
        for b in &taus {
            for (e1, c1) in a.iter() {
                for (e2, c2) in b.iter() {
                    let comm = c1.commutator(c2);
                    if !comm.is_zero() {
                        failure = Some(format!(
                            "coefficients at u^{} and u^{} do not commute: {}",
                            e1,
                            e2,
                            clip(&comm.to_string())
                        ));
                        break 'abstract_pairs;
                    }
                }
            }
        }
    }
    let mut checks = vec![record_opt("coefficients-commute", failure)];

    let spec = LieSpec::gl(n);
    let te = evaluation_t(&spec, d);
    let taus_e: Vec<_> = (1..=2usize).map(|k| tau_series(&te, &weights, k)).collect();
    let mut failure = None;
    'eval_pairs: for a in &taus_e {
        for b in &taus_e {
            for (e1, c1) in a.iter() {
                for (e2, c2) in b.iter() {
                    let comm = c1.commutator(c2);
                    if !comm.is_zero() {
                        failure = Some(format!(
                            "evaluated coefficients at u^{} and u^{} do not commute: {}",
                            e1,
                            e2,
                            clip(&comm.to_string())
                        ));
                        break 'eval_pairs;
                    }
                }
            }
        }
    }
    checks.push(record_opt("evaluated-coefficients-commute", failure));
    Ok(checks)
}

//! Command-line front end for the exact verification toolkit: run named
//! check suites, print computed objects (determinant series, central
//! families, eigenvalue images), and exercise the permutation
//! combinatorics behind the twisted determinants.
//!
//! Exit codes: 0 when everything requested passed, 1 when a check failed,
//! 2 on usage or parameter errors.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use yangian::casimir::{
    capelli_c_g, capelli_c_gl, capelli_c_skew, capelli_chi_target, casimir_families_g,
    casimir_families_gl, chi_ck_target, chi_dk_target, chi_poly, d_standard,
    d_standard_decomposition_check, hafnian_d_family, pfaffian_c_family, pfaffian_c_family_skew,
};
use yangian::lie::{AlgKind, EnvElement, LieSpec};
use yangian::matrix::PairingCase;
use yangian::qdet::qdet;
use yangian::report::{list_suites, run_suite, SuiteError, SuiteReport};
use yangian::scalar::Scalar;
use yangian::series::Series;
use yangian::twisted::{
    fiber_analysis, gamma_factor, perm_sign, project_perm, sdet, sdet_formula, stirling_first,
};
use yangian::yangian::{t_series, YCtx, YElement};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser)]
#[command(
    name = "yangian-cli",
    version,
    about = "Exact checks for quantum determinant, twisted determinant, and Casimir identities"
)]
struct Cli {
    /// Run this named verification suite and print its report.
    #[arg(long, value_name = "NAME")]
    suite: Option<String>,

    /// List the available suites and exit.
    #[arg(long)]
    list_suites: bool,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(flatten)]
    params: ParamFlags,

    #[command(subcommand)]
    command: Option<Command>,
}

/// Shared numeric knobs.  Every flag is optional; each consumer fills in
/// its own defaults and rejects flags it does not understand.
#[derive(Args, Clone)]
struct ParamFlags {
    /// Algebra family: gl, o, sp, or o-skew (where applicable).
    #[arg(long, global = true, value_name = "FAMILY")]
    algebra: Option<String>,

    /// Rank of the general linear algebra.
    #[arg(long, global = true)]
    n: Option<usize>,

    /// Ambient dimension for the orthogonal/symplectic algebras.
    #[arg(long = "N", global = true, value_name = "N")]
    cap_n: Option<usize>,

    /// Pairing case: o or sp.
    #[arg(long, global = true, value_name = "o|sp")]
    case: Option<String>,

    /// Series truncation depth.
    #[arg(long = "D", global = true, value_name = "DEPTH")]
    depth: Option<i64>,

    /// Seed for sampled checks.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Sample count for randomized checks.
    #[arg(long, global = true)]
    samples: Option<usize>,

    /// Largest family index to compute.
    #[arg(long, global = true)]
    kmax: Option<usize>,

    /// Number of negative powers of u to verify.
    #[arg(long, global = true)]
    prec: Option<i64>,

    /// Block size for factorization suites.
    #[arg(long, global = true)]
    m: Option<usize>,
}

impl ParamFlags {
    fn to_map(&self) -> BTreeMap<String, String> {
        let mut map = BTreeMap::new();
        if let Some(v) = &self.algebra {
            map.insert("algebra".to_string(), v.clone());
        }
        if let Some(v) = self.n {
            map.insert("n".to_string(), v.to_string());
        }
        if let Some(v) = self.cap_n {
            map.insert("N".to_string(), v.to_string());
        }
        if let Some(v) = &self.case {
            map.insert("case".to_string(), v.clone());
        }
        if let Some(v) = self.depth {
            map.insert("D".to_string(), v.to_string());
        }
        if let Some(v) = self.seed {
            map.insert("seed".to_string(), v.to_string());
        }
        if let Some(v) = self.samples {
            map.insert("samples".to_string(), v.to_string());
        }
        if let Some(v) = self.kmax {
            map.insert("kmax".to_string(), v.to_string());
        }
        if let Some(v) = self.prec {
            map.insert("prec".to_string(), v.to_string());
        }
        if let Some(v) = self.m {
            map.insert("m".to_string(), v.to_string());
        }
        map
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print a computed object: qdet, stirling, or hc.
    Compute(ComputeArgs),
    /// Evaluate the twisted determinant by one of three routes.
    Sdet(SdetArgs),
    /// Project a permutation of 1..N to its canonical fiber representative.
    Pin(PinArgs),
    /// Histogram the projection fibers over all permutations of 1..N.
    Fibers,
    /// Build a central family and verify its eigenvalue images.
    Casimir(CasimirArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Object to compute: qdet | stirling | hc.
    object: String,

    /// Target for `hc`: capelli.
    #[arg(long, default_value = "capelli")]
    target: String,
}

#[derive(Args)]
struct SdetArgs {
    /// Route: formula | antisym | product.
    #[arg(long, default_value = "antisym")]
    method: String,
}

#[derive(Args)]
struct PinArgs {
    /// The permutation as comma-separated images of 1..N, e.g. 2,3,1.
    #[arg(long, value_name = "P1,P2,...")]
    perm: String,
}

#[derive(Args)]
struct CasimirArgs {
    /// Family: capelli | newton | graphical | pfaffian | hafnian | D.
    #[arg(long, default_value = "capelli")]
    family: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

/// `Err` means a usage/parameter problem (exit 2); `Ok` carries the exit
/// code derived from check verdicts.
fn dispatch(cli: &Cli) -> Result<ExitCode, String> {
    if cli.list_suites {
        if cli.suite.is_some() || cli.command.is_some() {
            return Err("--list-suites cannot be combined with a suite or subcommand".into());
        }
        print_suite_list(cli.format);
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(name) = &cli.suite {
        if cli.command.is_some() {
            return Err("--suite cannot be combined with a subcommand".into());
        }
        return run_named_suite(name, &cli.params, cli.format);
    }
    match &cli.command {
        Some(Command::Compute(args)) => compute(args, &cli.params, cli.format),
        Some(Command::Sdet(args)) => sdet_routes(args, &cli.params, cli.format),
        Some(Command::Pin(args)) => pin(args, &cli.params, cli.format),
        Some(Command::Fibers) => fibers(&cli.params, cli.format),
        Some(Command::Casimir(args)) => casimir(args, &cli.params, cli.format),
        None => Err("nothing to do: pass --suite, --list-suites, or a subcommand (see --help)".into()),
    }
}

fn print_suite_list(format: Format) {
    match format {
        Format::Text => {
            for (name, desc) in list_suites() {
                println!("{:18} {}", name, desc);
            }
        }
        Format::Json => {
            let entries: Vec<_> = list_suites()
                .into_iter()
                .map(|(name, desc)| json!({"suite": name, "description": desc}))
                .collect();
            println!("{}", serde_json::to_string_pretty(&entries).unwrap());
        }
    }
}

fn run_named_suite(name: &str, params: &ParamFlags, format: Format) -> Result<ExitCode, String> {
    match run_suite(name, &params.to_map()) {
        Ok(rep) => {
            emit_report(&rep, format);
            Ok(if rep.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Err(e @ SuiteError::UnknownSuite(_)) => Err(e.to_string()),
        Err(e @ SuiteError::InvalidParams(_)) => Err(e.to_string()),
    }
}

fn emit_report(rep: &SuiteReport, format: Format) {
    match format {
        Format::Text => print!("{}", rep.to_text()),
        Format::Json => println!("{}", rep.to_json()),
    }
}

fn parse_case(s: &str) -> Result<PairingCase, String> {
    match s {
        "o" => Ok(PairingCase::Orthogonal),
        "sp" => Ok(PairingCase::Symplectic),
        other => Err(format!("case must be `o` or `sp`, got `{}`", other)),
    }
}

fn signed_spec(case: PairingCase, cap_n: usize) -> Result<Arc<LieSpec>, String> {
    if cap_n < 2 {
        return Err(format!("N must be at least 2, got {}", cap_n));
    }
    match case {
        PairingCase::Symplectic => {
            if cap_n % 2 != 0 {
                return Err(format!("the symplectic case needs even N, got {}", cap_n));
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

fn compute(args: &ComputeArgs, params: &ParamFlags, format: Format) -> Result<ExitCode, String> {
    match args.object.as_str() {
        "qdet" => {
            let n = params.n.unwrap_or(2);
            let d = params.depth.unwrap_or(3);
            if n == 0 || d < 1 {
                return Err("qdet needs n >= 1 and D >= 1".into());
            }
            let ctx = YCtx::standard(n);
            let q = qdet(&t_series(&ctx, d));
            match format {
                Format::Text => println!("{}", q),
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "object": "qdet",
                        "n": n,
                        "D": d,
                        "series": q.to_string(),
                    }))
                    .unwrap()
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        "stirling" => {
            let cap_n = params.cap_n.unwrap_or(2);
            if cap_n < 2 {
                return Err("stirling needs N >= 2".into());
            }
            let m = cap_n - 1;
            let coeffs: Vec<u128> = (1..=m).map(|k| stirling_first(m, k)).collect();
            match format {
                Format::Text => {
                    let factors: Vec<String> = (0..m)
                        .map(|j| if j == 0 { "x".to_string() } else { format!("(x+{})", j) })
                        .collect();
                    let strs: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
                    println!("{} has coefficients c({},k) = {} for k = 1..{}", factors.concat(), m, strs.join(", "), m);
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "object": "stirling",
                        "N": cap_n,
                        "m": m,
                        "coefficients": coeffs.iter().map(|c| *c as u64).collect::<Vec<u64>>(),
                    }))
                    .unwrap()
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        "hc" => {
            if args.target != "capelli" {
                return Err(format!("unknown hc target `{}`; available: capelli", args.target));
            }
            hc_capelli(params, format)
        }
        other => Err(format!("unknown object `{}`; available: qdet, stirling, hc", other)),
    }
}

/// The eigenvalue image of the Capelli-type determinant next to its
/// factored closed form.
fn hc_capelli(params: &ParamFlags, format: Format) -> Result<ExitCode, String> {
    let algebra = params.algebra.as_deref().unwrap_or("gl");
    let (image, target, factored) = match algebra {
        "gl" => {
            let n = params.n.unwrap_or(2);
            let spec = LieSpec::gl(n);
            let image = chi_poly(&capelli_c_gl(&spec));
            let target = capelli_chi_target(&spec);
            let factored: Vec<String> = (1..=n).map(|i| format!("(u + l{})", i)).collect();
            (image, target, factored.concat())
        }
        "o" | "sp" => {
            let case = parse_case(if algebra == "sp" { "sp" } else { "o" })?;
            let cap_n = params.cap_n.unwrap_or(2);
            let spec = signed_spec(case, cap_n)?;
            let image = chi_poly(&capelli_c_g(&spec, spec.labels()));
            let target = capelli_chi_target(&spec);
            let mut parts = Vec::new();
            if cap_n % 2 == 1 {
                parts.push("(u + 1/2)".to_string());
            }
            for i in 1..=cap_n / 2 {
                parts.push(format!("(u^2 - l{}^2)", i));
            }
            (image, target, parts.concat())
        }
        other => return Err(format!("hc capelli supports algebra gl, o, or sp, got `{}`", other)),
    };
    let matches = image == target;
    match format {
        Format::Text => {
            println!("image:    {}", image);
            println!("factored: {}", factored);
            println!("match:    {}", if matches { "yes" } else { "NO" });
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "object": "hc",
                "target": "capelli",
                "algebra": algebra,
                "image": image.to_string(),
                "factored": factored,
                "match": matches,
            }))
            .unwrap()
        ),
    }
    Ok(if matches { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn sdet_routes(args: &SdetArgs, params: &ParamFlags, format: Format) -> Result<ExitCode, String> {
    let cap_n = params.cap_n.unwrap_or(2);
    let case = parse_case(params.case.as_deref().unwrap_or("sp"))?;
    signed_spec(case, cap_n)?;
    let d = params.depth.unwrap_or(3);
    if d < 1 {
        return Err("sdet needs D >= 1".into());
    }
    let n = cap_n / 2;
    let with_zero = cap_n % 2 == 1;
    let ctx = YCtx::signed(n, with_zero);
    let t = t_series(&ctx, d);
    let s = t.mul(&t.negate_arg().transpose_theta(case));
    let series = match args.method.as_str() {
        "antisym" => sdet(&s, case),
        "formula" => sdet_formula(&s, case, ctx.labels(), 1),
        "product" => {
            let m = ctx.labels().len() as i64;
            let q = qdet(&t);
            let floor = q.floor();
            let qn = q.negate_arg().shift_arg(&Scalar::from_int(1 - m), floor);
            let g: Series<YElement> = gamma_factor(case, n, floor.unwrap_or(-d));
            g.mul(&q).mul(&qn)
        }
        other => {
            return Err(format!(
                "unknown method `{}`; available: formula, antisym, product",
                other
            ))
        }
    };
    match format {
        Format::Text => println!("{}", series),
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "object": "sdet",
                "N": cap_n,
                "case": if case == PairingCase::Symplectic { "sp" } else { "o" },
                "D": d,
                "method": args.method,
                "series": series.to_string(),
            }))
            .unwrap()
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn pin(args: &PinArgs, params: &ParamFlags, format: Format) -> Result<ExitCode, String> {
    let perm: Vec<i32> = args
        .perm
        .split(',')
        .map(|p| p.trim().parse::<i32>().map_err(|_| format!("bad entry `{}` in --perm", p)))
        .collect::<Result<_, _>>()?;
    let m = perm.len();
    if let Some(cap_n) = params.cap_n {
        if cap_n != m {
            return Err(format!("--perm has {} entries but --N is {}", m, cap_n));
        }
    }
    let family: Vec<i32> = (1..=m as i32).collect();
    let mut sorted = perm.clone();
    sorted.sort_unstable();
    if sorted != family {
        return Err(format!("--perm must be a permutation of 1..{}", m));
    }
    let projected = project_perm(&family, &perm);
    let sign = perm_sign(&family, &perm);
    let projected_sign = perm_sign(&family, &projected);
    match format {
        Format::Text => {
            println!("permutation:      {:?}", perm);
            println!("projection:       {:?}", projected);
            println!("sign:             {}", sign);
            println!("projection sign:  {}", projected_sign);
        }
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "object": "pin",
                "N": m,
                "perm": perm,
                "projection": projected,
                "sign": sign,
                "projection_sign": projected_sign,
            }))
            .unwrap()
        ),
    }
    Ok(ExitCode::SUCCESS)
}

fn fibers(params: &ParamFlags, format: Format) -> Result<ExitCode, String> {
    let cap_n = params.cap_n.unwrap_or(2);
    if cap_n == 0 || cap_n > 7 {
        return Err(format!("fibers needs 1 <= N <= 7, got {}", cap_n));
    }
    let rep = fiber_analysis(cap_n);
    match format {
        Format::Text => {
            println!("projection fibers over the {}! permutations of 1..{}", cap_n, cap_n);
            for (size, count) in &rep.by_size {
                println!("  size {:3}: {} fibers", size, count);
            }
            println!("total permutations: {}", rep.total);
        }
        Format::Json => {
            let by_size: BTreeMap<String, usize> =
                rep.by_size.iter().map(|(k, v)| (k.to_string(), *v)).collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "object": "fibers",
                    "N": cap_n,
                    "by_size": by_size,
                    "total": rep.total,
                }))
                .unwrap()
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Render an element family as display strings alongside eigenvalue images.
fn family_rows(elements: &[(String, EnvElement)]) -> Vec<serde_json::Value> {
    elements
        .iter()
        .map(|(name, e)| {
            json!({
                "name": name,
                "element": e.to_string(),
                "image": e.hc_image_l().to_string(),
            })
        })
        .collect()
}

fn print_family_text(elements: &[(String, EnvElement)]) {
    for (name, e) in elements {
        println!("{} = {}", name, e);
        println!("  image: {}", e.hc_image_l());
    }
}

fn casimir(args: &CasimirArgs, params: &ParamFlags, format: Format) -> Result<ExitCode, String> {
    let algebra = params.algebra.as_deref().unwrap_or("gl").to_string();
    let map = params.to_map();
    match args.family.as_str() {
        "capelli" => {
            let (series, verdict): (Series<EnvElement>, Option<bool>) = match algebra.as_str() {
                "gl" => {
                    let spec = LieSpec::gl(params.n.unwrap_or(2));
                    let c = capelli_c_gl(&spec);
                    let ok = chi_poly(&c) == capelli_chi_target(&spec);
                    (c, Some(ok))
                }
                "o" | "sp" => {
                    let case = parse_case(&algebra)?;
                    let spec = signed_spec(case, params.cap_n.unwrap_or(2))?;
                    let c = capelli_c_g(&spec, spec.labels());
                    let ok = chi_poly(&c) == capelli_chi_target(&spec);
                    (c, Some(ok))
                }
                "o-skew" => {
                    let spec = LieSpec::o_skew(params.cap_n.unwrap_or(2));
                    let c = capelli_c_skew(&spec);
                    let ok = c.iter().all(|(_, coeff)| coeff.is_central().is_ok());
                    (c, Some(ok))
                }
                other => return Err(format!("unknown algebra `{}`", other)),
            };
            let ok = verdict.unwrap_or(true);
            match format {
                Format::Text => {
                    println!("C(u) = {}", series);
                    println!("verdict: {}", if ok { "pass" } else { "FAIL" });
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "object": "casimir",
                        "family": "capelli",
                        "algebra": algebra,
                        "series": series.to_string(),
                        "image": chi_poly(&series).to_string(),
                        "pass": ok,
                    }))
                    .unwrap()
                ),
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        "newton" => {
            let rep = run_suite("newton", &map).map_err(|e| e.to_string())?;
            emit_report(&rep, format);
            Ok(if rep.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        "graphical" => {
            let mut elements: Vec<(String, EnvElement)> = Vec::new();
            match algebra.as_str() {
                "gl" => {
                    let spec = LieSpec::gl(params.n.unwrap_or(2));
                    let kmax = params.kmax.unwrap_or(3).max(1);
                    let fams = casimir_families_gl(&spec, kmax);
                    for k in 1..=kmax {
                        elements.push((format!("Lambda_{}", k), fams.lam[k].clone()));
                        elements.push((format!("S_{}", k), fams.s[k].clone()));
                        elements.push((format!("Psi_{}", k), fams.psi[k].clone()));
                        elements.push((format!("Phi_{}", k), fams.phi[k].clone()));
                    }
                }
                "o" | "sp" => {
                    let case = parse_case(&algebra)?;
                    let spec = signed_spec(case, params.cap_n.unwrap_or(2))?;
                    let khalf = params.kmax.unwrap_or(2).max(2) / 2;
                    let fams = casimir_families_g(&spec, khalf);
                    for k in 1..=khalf {
                        elements.push((format!("Lambda_{}", 2 * k), fams.lam[k].clone()));
                        elements.push((format!("S_{}", 2 * k), fams.s[k].clone()));
                        elements.push((format!("Phi_{}", 2 * k), fams.phi[k].clone()));
                    }
                }
                other => return Err(format!("graphical families support gl, o, sp; got `{}`", other)),
            }
            let rep = run_suite("graphical", &map).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    print_family_text(&elements);
                    print!("{}", rep.to_text());
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "object": "casimir",
                        "family": "graphical",
                        "algebra": algebra,
                        "elements": family_rows(&elements),
                        "report": serde_json::to_value(&rep).unwrap(),
                    }))
                    .unwrap()
                ),
            }
            Ok(if rep.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        "pfaffian" => {
            let cap_n = params.cap_n.unwrap_or(4);
            let mut elements: Vec<(String, EnvElement)> = Vec::new();
            let mut images_ok = true;
            match algebra.as_str() {
                "gl" | "o" => {
                    let spec = signed_spec(PairingCase::Orthogonal, cap_n)?;
                    let family = pfaffian_c_family(&spec, cap_n / 2);
                    for (k, ck) in family.iter().enumerate().skip(1) {
                        images_ok &= ck.hc_image_l() == chi_ck_target(&spec, k);
                        elements.push((format!("c_{}", k), ck.clone()));
                    }
                }
                "o-skew" => {
                    let spec = LieSpec::o_skew(cap_n);
                    let family = pfaffian_c_family_skew(&spec, cap_n / 2);
                    for (k, ck) in family.iter().enumerate().skip(1) {
                        elements.push((format!("c_{}", k), ck.clone()));
                    }
                }
                other => return Err(format!("pfaffian families support o and o-skew; got `{}`", other)),
            }
            let rep = run_suite("pfaffian", &suite_map_n(cap_n)).map_err(|e| e.to_string())?;
            let pass = rep.passed() && images_ok;
            match format {
                Format::Text => {
                    print_family_text(&elements);
                    print!("{}", rep.to_text());
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "object": "casimir",
                        "family": "pfaffian",
                        "algebra": algebra,
                        "elements": family_rows(&elements),
                        "report": serde_json::to_value(&rep).unwrap(),
                    }))
                    .unwrap()
                ),
            }
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        "hafnian" => {
            let cap_n = params.cap_n.unwrap_or(4);
            let case = parse_case(params.case.as_deref().unwrap_or("sp"))?;
            if case != PairingCase::Symplectic || algebra == "o" || algebra == "o-skew" {
                return Err("the hafnian family lives in the symplectic case".into());
            }
            let spec = signed_spec(PairingCase::Symplectic, cap_n)?;
            let kmax = params.kmax.unwrap_or(2).max(1);
            let family = hafnian_d_family(&spec, kmax);
            let mut elements: Vec<(String, EnvElement)> = Vec::new();
            let mut images_ok = true;
            for (k, dk) in family.iter().enumerate().skip(1) {
                images_ok &= dk.hc_image_l() == chi_dk_target(&spec, k);
                elements.push((format!("d_{}", k), dk.clone()));
            }
            let mut smap = suite_map_n(cap_n);
            smap.insert("kmax".to_string(), kmax.to_string());
            let rep = run_suite("hafnian", &smap).map_err(|e| e.to_string())?;
            let pass = rep.passed() && images_ok;
            match format {
                Format::Text => {
                    print_family_text(&elements);
                    print!("{}", rep.to_text());
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "object": "casimir",
                        "family": "hafnian",
                        "algebra": "sp",
                        "elements": family_rows(&elements),
                        "report": serde_json::to_value(&rep).unwrap(),
                    }))
                    .unwrap()
                ),
            }
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        "D" => {
            let cap_n = params.cap_n.unwrap_or(2);
            let spec = LieSpec::o_skew(cap_n);
            let d = d_standard(&spec);
            let central = d.iter().all(|(_, coeff)| coeff.is_central().is_ok());
            let decomposition = if cap_n >= 2 && cap_n % 2 == 0 {
                d_standard_decomposition_check(&spec).is_ok()
            } else {
                true
            };
            let pass = central && decomposition;
            match format {
                Format::Text => {
                    println!("D(u) = {}", d);
                    println!("coefficients central: {}", if central { "pass" } else { "FAIL" });
                    if cap_n % 2 == 0 {
                        println!(
                            "falling-factorial decomposition: {}",
                            if decomposition { "pass" } else { "FAIL" }
                        );
                    }
                }
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "object": "casimir",
                        "family": "D",
                        "algebra": "o-skew",
                        "N": cap_n,
                        "series": d.to_string(),
                        "central": central,
                        "decomposition": decomposition,
                    }))
                    .unwrap()
                ),
            }
            Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        other => Err(format!(
            "unknown family `{}`; available: capelli, newton, graphical, pfaffian, hafnian, D",
            other
        )),
    }
}

fn suite_map_n(cap_n: usize) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    map.insert("N".to_string(), cap_n.to_string());
    map
}

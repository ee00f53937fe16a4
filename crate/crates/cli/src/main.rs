//! `lmds`: line-oriented front end over the core crate.
//!
//! Every report is a sequence of `key=value` lines (splitting on the first
//! `=`), so runs diff cleanly.  Exit codes: 0 all requested checks passed,
//! 2 input error, 3 enumeration cap exceeded, 4 a check failed.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigUint;

use lmds_core::bounds::{self, Characterization};
use lmds_core::ckfamily;
use lmds_core::codecore::{
    macwilliams, read_code_from_path, write_code_to_path, EnumOpts, LinearCode, Source,
    WeightDistribution,
};
use lmds_core::designs;
use lmds_core::gf::{parse_field_notation, Elem, Field};
use lmds_core::lrc;
use lmds_core::propagate::{self, PropagationOutcome};
use lmds_core::subsetsum;
use lmds_core::suite;
use lmds_core::{Error, Result};

#[derive(Parser)]
#[command(name = "lmds", version, about = "Construct, analyze, and verify linear codes near the Singleton bound")]
struct Cli {
    /// Largest number of words a single enumeration may visit.
    #[arg(long, global = true, default_value_t = 1 << 24)]
    cap: u64,
    /// Worker threads for the packed enumeration path.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Suppress the leading timestamp line, making runs byte-identical.
    #[arg(long, global = true)]
    no_ts: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Describe a finite field.
    Field(FieldArgs),
    /// Operations on code files.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Build and verify members of the evaluation family.
    #[command(subcommand)]
    Ck(CkCmd),
    /// Check the 2-design carried by fixed-weight supports.
    #[command(subcommand)]
    Design(DesignCmd),
    /// Locality reports with both optimality verdicts.
    #[command(subcommand)]
    Lrc(LrcCmd),
    /// Parity extension, augmentation, expurgation, and two-block pairing.
    #[command(subcommand)]
    Prop(PropCmd),
    /// Subset-sum counts over the nonzero field elements.
    Subsetsum(SubsetsumArgs),
    /// Characterization checks, boundary reconstructions, and length bounds.
    #[command(subcommand)]
    Bounds(BoundsCmd),
    /// Run the full reproduction suite (criteria 1-7).
    Reproduce,
}

#[derive(Args)]
struct FieldArgs {
    /// Field in `p^h` notation, e.g. `2^3`.
    #[arg(long)]
    field: String,
    /// Optional modulus as base-p coefficients, constant term first.
    #[arg(long)]
    modulus: Option<String>,
}

#[derive(Subcommand)]
enum CodeCmd {
    /// Classify a code file and print both enumerators.
    Analyze {
        #[arg(long)]
        code: PathBuf,
    },
}

#[derive(Subcommand)]
enum CkCmd {
    /// Construct a family member and print or save its generator matrix.
    Build {
        #[arg(long)]
        field: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a member: counting criterion, enumeration, designs.
    Verify {
        #[arg(long)]
        field: String,
        #[arg(long)]
        k: usize,
        /// Raise the cap so the exhaustive side always runs.
        #[arg(long)]
        full_enum: bool,
    },
}

#[derive(Subcommand)]
enum DesignCmd {
    /// Test whether the weight-w supports form a t-design.
    Check {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        weight: usize,
        #[arg(long, default_value_t = 2)]
        t: usize,
    },
}

#[derive(Subcommand)]
enum LrcCmd {
    /// Locality, per-coordinate repair degrees, and optimality bounds.
    Report {
        #[arg(long)]
        code: PathBuf,
    },
}

#[derive(Subcommand)]
enum PropCmd {
    /// Append an overall parity coordinate.
    Extend {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Adjoin the all-one word (binary).
    Augment {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Keep the even-weight subcode (binary).
    Expurgate {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Two-block pairing of same-length codes.
    Uuv {
        #[arg(long)]
        c1: PathBuf,
        #[arg(long)]
        c2: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SubsetsumArgs {
    #[arg(long)]
    field: String,
    /// Subset size.
    #[arg(long)]
    r: u64,
    /// Target sum, as an integer code or `a^i` power notation.
    #[arg(long)]
    b: String,
    /// Comma-separated elements removed from the ground set.
    #[arg(long)]
    exclude: Option<String>,
    /// Also run the brute-force count and report agreement.
    #[arg(long)]
    brute: bool,
}

#[derive(Subcommand)]
enum BoundsCmd {
    /// Upper and lower bounds on the maximum length at a given defect.
    Maxlen {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: u32,
    },
    /// Bounds on the number of minimum-weight words on both sides.
    Minweight {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: u32,
    },
    /// Rebuild both enumerators from the boundary counts.
    Wdist {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        ell: u32,
        /// Comma-separated counts A_i for the 2*ell-1 boundary weights.
        #[arg(long)]
        boundary: String,
    },
    /// Run the distance-sum characterization against a code file.
    CheckCode {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        ell: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if !cli.no_ts {
        let ts = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
        println!("ts={ts}");
    }
    let opts = EnumOpts {
        cap: cli.cap,
        threads: cli.threads.max(1),
    };
    match run(&cli.cmd, &opts) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::Inconsistent(_) => 4,
        _ => 2,
    }
}

fn run(cmd: &Cmd, opts: &EnumOpts) -> Result<u8> {
    match cmd {
        Cmd::Field(a) => field_cmd(a),
        Cmd::Code(CodeCmd::Analyze { code }) => analyze_cmd(code, opts),
        Cmd::Ck(CkCmd::Build { field, k, out }) => ck_build_cmd(field, *k, out.as_deref()),
        Cmd::Ck(CkCmd::Verify { field, k, full_enum }) => ck_verify_cmd(field, *k, *full_enum, opts),
        Cmd::Design(DesignCmd::Check { code, weight, t }) => design_cmd(code, *weight, *t, opts),
        Cmd::Lrc(LrcCmd::Report { code }) => lrc_cmd(code, opts),
        Cmd::Prop(p) => prop_cmd(p, opts),
        Cmd::Subsetsum(a) => subsetsum_cmd(a, opts),
        Cmd::Bounds(b) => bounds_cmd(b, opts),
        Cmd::Reproduce => reproduce_cmd(opts),
    }
}

/// Render a weight distribution as `1+10z^3+18z^4+...`.
fn poly(wd: &WeightDistribution) -> String {
    let zero = BigUint::default();
    let mut terms = Vec::new();
    for (i, c) in wd.counts().iter().enumerate() {
        if *c == zero {
            continue;
        }
        let cs = c.to_string();
        terms.push(match i {
            0 => cs,
            _ if cs == "1" => format!("z^{i}"),
            _ => format!("{cs}z^{i}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn source_name(s: Source) -> &'static str {
    match s {
        Source::Enumerated => "enumerated",
        Source::MacWilliams => "macwilliams",
        Source::Formula => "formula",
    }
}

fn field_notation(f: &Field) -> String {
    format!("{}^{}", f.p(), f.h())
}

fn print_rows(code: &LinearCode) {
    for (i, row) in code.rows().iter().enumerate() {
        let joined: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        println!("row{i}={}", joined.join(" "));
    }
}

fn parse_field(notation: &str, modulus: Option<&str>) -> Result<Field> {
    let (p, h) = parse_field_notation(notation)?;
    let modulus = match modulus {
        None => None,
        Some(s) => Some(
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::Parse(format!("bad modulus coefficient {t:?}")))
                })
                .collect::<Result<Vec<u32>>>()?,
        ),
    };
    Field::new(p, h, modulus.as_deref())
}

fn field_cmd(a: &FieldArgs) -> Result<u8> {
    let f = parse_field(&a.field, a.modulus.as_deref())?;
    println!("command=field");
    println!("p={}", f.p());
    println!("h={}", f.h());
    println!("q={}", f.q());
    let coeffs: Vec<String> = f.modulus().iter().map(|c| c.to_string()).collect();
    println!("modulus={}", coeffs.join(","));
    println!("alpha={}", f.alpha());
    println!("alpha_order={}", f.q() - 1);
    Ok(0)
}

fn analyze_cmd(path: &PathBuf, opts: &EnumOpts) -> Result<u8> {
    let code = read_code_from_path(path)?;
    println!("command=code analyze");
    println!("field={}", field_notation(code.field()));
    let report = code.classify(opts)?;
    println!("n={}", report.n);
    println!("k={}", report.k);
    println!("d={}", report.d);
    println!("dual_d={}", report.dual_d);
    println!("defect={}", report.defect);
    println!("dual_defect={}", report.dual_defect);
    println!("verdict={}", report.verdict);
    println!("forced_by_sufficiency={}", report.forced_by_sufficiency);
    let (wd, dual) = code.wd_pair(opts)?;
    println!("enumerator={}", poly(&wd));
    println!("enumerator_source={}", source_name(wd.source()));
    println!("dual_enumerator={}", poly(&dual));
    println!("dual_enumerator_source={}", source_name(dual.source()));
    Ok(0)
}

fn ck_build_cmd(field: &str, k: usize, out: Option<&std::path::Path>) -> Result<u8> {
    let f = parse_field(field, None)?;
    let code = ckfamily::build_ck(&f, k)?;
    println!("command=ck build");
    println!("field={}", field_notation(&f));
    println!("n={}", code.n());
    println!("k={}", code.k());
    match out {
        Some(path) => {
            write_code_to_path(&code, path)?;
            println!("out={}", path.display());
        }
        None => print_rows(&code),
    }
    Ok(0)
}

/// Cap large enough for the smaller enumeration side of an `[n, k]_q` code,
/// when that fits in a `u64` at all.
fn side_cap(q: u64, n: usize, k: usize, base: u64) -> u64 {
    q.checked_pow(k.min(n - k) as u32)
        .map(|side| base.max(side))
        .unwrap_or(base)
}

fn ck_verify_cmd(field: &str, k: usize, full_enum: bool, opts: &EnumOpts) -> Result<u8> {
    let f = parse_field(field, None)?;
    let q = f.q();
    let v = q as usize - 1;
    let eopts = EnumOpts {
        cap: if full_enum { side_cap(q, v, k, opts.cap) } else { opts.cap },
        threads: opts.threads,
    };
    let rep = ckfamily::ck_verdict(&f, k, &eopts)?;
    println!("command=ck verify");
    println!("field={}", field_notation(&f));
    println!("n={}", rep.n);
    println!("k={}", rep.k);
    println!("verdict={}", rep.predicted);
    println!("d={}", rep.predicted_d);
    println!("zero_sum_k_subsets={}", rep.zero_sum_k_subsets);
    match &rep.observed {
        Some(o) => {
            println!("observed={o}");
            println!("agree=true");
        }
        None => println!("observed=skipped (cap exceeded; pass --full-enum or raise --cap)"),
    }
    if k + 4 <= v + 1 {
        // interior member: report the design and enumerator data
        let (l1, l2) = ckfamily::ck_lambda(&f, k)?;
        println!("lambda1={l1}");
        println!("lambda2={l2}");
        println!("design=2-({v},{},{l2})", v - k);
        println!("dual_design=2-({v},{k},{l1})");
        let (wd, dual) = ckfamily::ck_enumerator(&f, k)?;
        println!("enumerator={}", poly(&wd));
        println!("dual_enumerator={}", poly(&dual));
    }
    Ok(0)
}

fn design_cmd(path: &PathBuf, weight: usize, t: usize, opts: &EnumOpts) -> Result<u8> {
    let code = read_code_from_path(path)?;
    let chk = designs::check_design(&code, weight, t, opts)?;
    println!("command=design check");
    println!("t={}", chk.t);
    println!("points={}", chk.points);
    println!("block_size={}", chk.block_size);
    println!("blocks={}", chk.blocks);
    println!("simple={}", chk.simple);
    match chk.lambda {
        Some(l) => println!("lambda={l}"),
        None => println!(
            "lambda=not constant (range {}..={})",
            chk.lambda_range.0, chk.lambda_range.1
        ),
    }
    println!("is_design={}", chk.is_design());
    if let Some(l) = chk.lambda.filter(|_| chk.is_design()) {
        let (ct, cv, cw, cl) = designs::complementary_params(chk.t, chk.points, chk.block_size, l)?;
        println!("complement={ct}-({cv},{cw},{cl})");
    }
    Ok(if chk.is_design() { 0 } else { 4 })
}

fn lrc_cmd(path: &PathBuf, opts: &EnumOpts) -> Result<u8> {
    let code = read_code_from_path(path)?;
    let rep = lrc::lrc_report(&code, opts)?;
    println!("command=lrc report");
    println!("field={}", field_notation(code.field()));
    println!("n={}", rep.n);
    println!("k={}", rep.k);
    println!("d={}", rep.d);
    println!("locality={}", rep.locality);
    let per: Vec<String> = lrc::coordinate_localities(&code, opts)?
        .iter()
        .map(|r| r.to_string())
        .collect();
    println!("coordinate_localities={}", per.join(","));
    println!("singleton_like_bound={}", rep.singleton_like);
    println!("d_optimal={}", rep.d_optimal);
    println!("dimension_bound={}", rep.cm);
    println!("dimension_bound_t={}", rep.cm_t);
    println!("k_optimal={}", rep.k_optimal);
    Ok(0)
}

fn print_outcome(out: &PropagationOutcome) {
    println!("op={}", out.op);
    for (i, inp) in out.inputs.iter().enumerate() {
        println!("input{}={inp}", i + 1);
    }
    match &out.predicted {
        Some(p) => println!("predicted={p}"),
        None => println!("predicted=none (outside the identity's reach)"),
    }
    println!("observed={}", out.observed);
    if let Some(fsd) = out.fsd {
        println!("formally_self_dual={fsd}");
    }
}

fn emit_result(code: &LinearCode, out: Option<&std::path::Path>) -> Result<()> {
    match out {
        Some(path) => {
            write_code_to_path(code, path)?;
            println!("out={}", path.display());
        }
        None => print_rows(code),
    }
    Ok(())
}

fn prop_cmd(cmd: &PropCmd, opts: &EnumOpts) -> Result<u8> {
    match cmd {
        PropCmd::Extend { code, out } => {
            let input = read_code_from_path(code)?;
            let outcome = propagate::extend_report(&input, opts)?;
            println!("command=prop extend");
            print_outcome(&outcome);
            emit_result(&outcome.result, out.as_deref())?;
        }
        PropCmd::Expurgate { code, out } => {
            let input = read_code_from_path(code)?;
            let outcome = propagate::expurgate_report(&input, opts)?;
            println!("command=prop expurgate");
            print_outcome(&outcome);
            emit_result(&outcome.result, out.as_deref())?;
        }
        PropCmd::Augment { code, out } => {
            let input = read_code_from_path(code)?;
            let augmented = propagate::augment(&input)?;
            println!("command=prop augment");
            println!("op=augment");
            println!("input1={}", input.classify(opts)?);
            println!("observed={}", augmented.classify(opts)?);
            emit_result(&augmented, out.as_deref())?;
        }
        PropCmd::Uuv { c1, c2, out } => {
            let a = read_code_from_path(c1)?;
            let b = read_code_from_path(c2)?;
            let outcome = propagate::uuv_report(&a, &b, opts)?;
            println!("command=prop uuv");
            print_outcome(&outcome);
            emit_result(&outcome.result, out.as_deref())?;
        }
    }
    Ok(0)
}

fn subsetsum_cmd(a: &SubsetsumArgs, opts: &EnumOpts) -> Result<u8> {
    let f = parse_field(&a.field, None)?;
    let b = f.parse_element(&a.b)?;
    let excluded: Vec<Elem> = match &a.exclude {
        None => Vec::new(),
        Some(s) => s
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| f.parse_element(t))
            .collect::<Result<_>>()?,
    };
    println!("command=subsetsum");
    println!("q={}", f.q());
    println!("r={}", a.r);
    println!("b={b}");
    if !excluded.is_empty() {
        let shown: Vec<String> = excluded.iter().map(|x| x.to_string()).collect();
        println!("exclude={}", shown.join(","));
    }
    let closed: Option<BigUint> = if excluded.is_empty() {
        Some(subsetsum::count_closed(&f, a.r, b))
    } else if excluded.len() == 2
        && excluded[0] != 0
        && excluded[1] != 0
        && excluded[0] != excluded[1]
        && f.add(excluded[0], excluded[1]) == b
    {
        Some(subsetsum::count_restricted(
            &f,
            a.r as usize + 2,
            excluded[0],
            excluded[1],
        )?)
    } else {
        None
    };
    if let Some(c) = &closed {
        println!("closed={c}");
    } else if !a.brute {
        return Err(Error::Unsupported(
            "no closed form for this exclusion set; pass --brute".into(),
        ));
    }
    if a.brute || closed.is_none() {
        let brute = subsetsum::count_brute(&f, a.r as usize, b, &excluded, opts.cap)?;
        println!("brute={brute}");
        if let Some(c) = &closed {
            let agree = *c == brute;
            println!("match={agree}");
            if !agree {
                return Ok(4);
            }
        }
    }
    Ok(0)
}

fn bounds_cmd(cmd: &BoundsCmd, opts: &EnumOpts) -> Result<u8> {
    match cmd {
        BoundsCmd::Maxlen { q, k, ell } => {
            let m = bounds::maxlen_bounds(*k, *q, *ell)?;
            println!("command=bounds maxlen");
            println!("k={k}");
            println!("q={q}");
            println!("ell={ell}");
            let show = |o: Option<i64>| o.map(|v| v.to_string()).unwrap_or_else(|| "-".into());
            println!("upper_general={}", show(m.upper_general));
            println!("upper_high_dim={}", show(m.upper_high_dim));
            println!("upper_binary={}", show(m.upper_binary));
            println!("tightest_upper={}", show(m.tightest_upper));
            println!("lower_chain={}", m.lower_chain);
            Ok(0)
        }
        BoundsCmd::Minweight { n, k, q, ell } => {
            let b = bounds::minweight_bounds(*n, *k, *q, *ell)?;
            println!("command=bounds minweight");
            println!("n={n}");
            println!("k={k}");
            println!("q={q}");
            println!("ell={ell}");
            println!("boundA={}", b.bound_a);
            println!("boundAdual={}", b.bound_a_dual);
            println!("genericA={}", b.generic_a);
            println!("genericAdual={}", b.generic_a_dual);
            println!("tighterA={}", b.refined_tighter_a);
            println!("tighterAdual={}", b.refined_tighter_a_dual);
            Ok(0)
        }
        BoundsCmd::Wdist { n, k, q, ell, boundary } => wdist_cmd(*n, *k, *q, *ell, boundary),
        BoundsCmd::CheckCode { code, ell } => check_code_cmd(code, *ell, opts),
    }
}

fn wdist_cmd(n: usize, k: usize, q: u64, ell: u32, boundary: &str) -> Result<u8> {
    let l = ell as usize;
    if l == 0 || l > k || l > n - k {
        return Err(Error::Unsupported(format!(
            "need 1 <= ell <= min(k, n-k), got ell={ell} for [{n},{k}]"
        )));
    }
    let boundary: Vec<BigUint> = boundary
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<BigUint>()
                .map_err(|_| Error::Parse(format!("bad boundary count {t:?}")))
        })
        .collect::<Result<_>>()?;
    let primal = bounds::lmds_primal(n, k, q, ell, &boundary)?;
    let dual = macwilliams(&primal, q, k as u64)?;
    // Feed the derived dual boundary back through the closed dual-side
    // formula; both routes must land on the same distribution.
    let dual_boundary: Vec<BigUint> = (k - l + 1..=k + l - 1)
        .map(|i| dual.count(i).clone())
        .collect();
    let (p2, d2) = bounds::lmds_distribution(n, k, q, ell, &boundary, &dual_boundary)?;
    let consistent = p2.counts() == primal.counts() && d2.counts() == dual.counts();
    println!("command=bounds wdist");
    println!("n={n}");
    println!("k={k}");
    println!("q={q}");
    println!("ell={ell}");
    println!("enumerator={}", poly(&primal));
    println!("dual_enumerator={}", poly(&dual));
    println!("consistent={consistent}");
    Ok(if consistent { 0 } else { 4 })
}

fn check_code_cmd(path: &PathBuf, ell: u32, opts: &EnumOpts) -> Result<u8> {
    let code = read_code_from_path(path)?;
    println!("command=bounds check-code");
    println!("field={}", field_notation(code.field()));
    println!("ell={ell}");
    let outcome = bounds::characterization(&code, ell, opts)?;
    let (name, report, failed) = match &outcome {
        Characterization::HypothesesUnmet { report } => ("hypotheses-unmet", report, false),
        Characterization::EquivalentVerified { report, distance_sum, target } => {
            println!("distance_sum={distance_sum}");
            println!("target={target}");
            ("equivalent-verified", report, false)
        }
        Characterization::Counterexample { report, distance_sum, target } => {
            println!("distance_sum={distance_sum}");
            println!("target={target}");
            ("counterexample", report, true)
        }
    };
    println!("observed={report}");
    println!("outcome={name}");
    let mut bad = failed;
    if ell >= 1 && report.defect == ell && report.dual_defect == ell {
        let b = bounds::minweight_bounds(code.n(), code.k(), code.field().q(), ell)?;
        let (wd, dual) = code.wd_pair(opts)?;
        let within = wd.count(report.d) <= &b.bound_a && dual.count(report.dual_d) <= &b.bound_a_dual;
        println!("min_count={}", wd.count(report.d));
        println!("min_bound={}", b.bound_a);
        println!("dual_min_count={}", dual.count(report.dual_d));
        println!("dual_min_bound={}", b.bound_a_dual);
        println!("within_bounds={within}");
        bad |= !within;
    }
    Ok(if bad { 4 } else { 0 })
}

fn reproduce_cmd(opts: &EnumOpts) -> Result<u8> {
    println!("command=reproduce");
    let reports = suite::run_all(opts)?;
    let mut passed = 0;
    for rep in &reports {
        let status = if rep.passed() { "PASS" } else { "FAIL" };
        println!("criterion_{}={status} {}", rep.index, rep.name);
        for (j, line) in rep.lines.iter().enumerate() {
            let info = if line.info.is_empty() {
                String::new()
            } else {
                format!(" ({})", line.info)
            };
            println!(
                "criterion_{}.{}={} {}{info}",
                rep.index,
                j + 1,
                line.status(),
                line.label
            );
        }
        if rep.passed() {
            passed += 1;
        }
    }
    println!("criteria_passed={passed}/{}", reports.len());
    let all = passed == reports.len();
    println!("overall={}", if all { "PASS" } else { "FAIL" });
    Ok(if all { 0 } else { 4 })
}

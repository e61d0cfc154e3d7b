//! Command implementations behind the `cox` binary.
//!
//! Every command builds an [`OutputDocument`] (or, for `verify`, a list of
//! reports) and an exit status; `main` only prints. Exit codes are 0 for
//! success, 1 for a verification or cross-method failure and 2 for usage
//! errors.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cox_core::arith::parse_rational;
use cox_core::catalog::{catalog, dual_partition, exponents, parameters, parse_type, ExponentList};
use cox_core::powersum::{
    exponent_power_sum, height_power_sum, heightsum_closed_with, powersum_closed_with, powersum_todd_with, Method,
};
use cox_core::verify::{run, CheckReport, Fault, RunConfig, Suite};
use cox_core::{CoxeterType, Error, ParameterSet, Profile, Rational};

mod output;

pub use output::{Cell, OutputDocument};

#[derive(Parser, Debug)]
#[command(name = "cox", version, about = "Exact power sums of Coxeter exponents and root heights")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parameter row, exponents and dual partition of one type.
    Info(InfoArgs),
    /// Exponents of one type.
    Exponents(TypeArgs),
    /// Sum of the n-th powers of the exponents.
    Powersum(PowerSumArgs),
    /// Sum of the n-th powers of the heights of the positive roots.
    Heights(HeightArgs),
    /// Parameters and power sums S_0..S_n for many types.
    Table(TableArgs),
    /// Run the verification suites.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Latex,
    Pretty,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Direct,
    Todd,
    Closed,
    All,
}

#[derive(Args, Debug)]
pub struct TypeArgs {
    /// Coxeter type, e.g. E8, C5, I2(7)
    #[arg(value_name = "TYPE")]
    pub ty: String,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct ParamArgs {
    /// standard, redefined or h2-original; defaults to redefined for I2(m), standard otherwise
    #[arg(long)]
    pub profile: Option<String>,
    /// Override for an arbitrary beta slot, as a rational "a/b"
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
}

#[derive(Args, Debug)]
pub struct InfoArgs {
    #[command(flatten)]
    pub target: TypeArgs,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Args, Debug)]
pub struct PowerSumArgs {
    #[command(flatten)]
    pub target: TypeArgs,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(short = 'n', default_value_t = 1)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Todd)]
    pub method: MethodArg,
    /// Free parameter of the p-factor
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..=64))]
    pub p: u32,
}

#[derive(Args, Debug)]
pub struct HeightArgs {
    #[command(flatten)]
    pub target: TypeArgs,
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(short = 'n', default_value_t = 1)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
    pub method: MethodArg,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Comma-separated list of types
    #[arg(long, value_delimiter = ',', conflicts_with = "all", required_unless_present = "all")]
    pub types: Vec<String>,
    /// Every type in the catalog bounded by --max-rank and --max-m
    #[arg(long)]
    pub all: bool,
    #[arg(long, default_value_t = 8)]
    pub max_rank: u32,
    #[arg(long, default_value_t = 12)]
    pub max_m: u32,
    #[arg(long, default_value_t = 5)]
    pub n_max: usize,
    #[arg(long)]
    pub profile: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// "all" or a comma-separated list of suites
    #[arg(long, default_value = "all")]
    pub suite: String,
    #[arg(long, default_value_t = 12)]
    pub max_rank: u32,
    #[arg(long, default_value_t = 30)]
    pub max_m: u32,
    #[arg(long, default_value_t = 12)]
    pub n_max: usize,
    #[arg(long, env = "COX_SEED", default_value_t = 42)]
    pub seed: u64,
    /// Worker threads; 0 uses every core
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Corrupt one constant, e.g. E8.gamma=901
    #[arg(long, hide = true)]
    pub inject_fault: Option<String>,
    /// Print only failing reports and the summary
    #[arg(long)]
    pub quiet: bool,
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
}

/// What a command produced: text for standard output, diagnostics for
/// standard error, and the exit code.
#[derive(Debug, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn usage(message: impl Into<String>) -> Self {
        Outcome { stdout: String::new(), stderr: format!("error: {}\n", message.into()), code: 2 }
    }
}

/// A bad flag, type or parameter; exit code 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

pub type CmdResult<T> = std::result::Result<T, Usage>;

pub fn execute(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Info(a) => cmd_info(&a).map(|doc| (doc.render(a.target.format), 0, String::new())),
        Command::Exponents(a) => cmd_exponents(&a).map(|doc| (doc.render(a.format), 0, String::new())),
        Command::Powersum(a) => cmd_powersum(&a).map(|(doc, err)| finish(doc.render(a.target.format), err)),
        Command::Heights(a) => cmd_heights(&a).map(|(doc, err)| finish(doc.render(a.target.format), err)),
        Command::Table(a) => cmd_table(&a).map(|doc| (doc.render(a.format), 0, String::new())),
        Command::Verify(a) => cmd_verify(&a),
    };
    match result {
        Ok((stdout, code, stderr)) => Outcome { stdout, stderr, code },
        Err(Usage(message)) => Outcome::usage(message),
    }
}

fn finish(stdout: String, mismatch: Option<String>) -> (String, i32, String) {
    match mismatch {
        Some(m) => (stdout, 1, format!("error: {m}\n")),
        None => (stdout, 0, String::new()),
    }
}

fn resolve_type(text: &str) -> CmdResult<CoxeterType> {
    Ok(parse_type(text)?.normalize())
}

fn resolve_params(t: CoxeterType, args: &ParamArgs) -> CmdResult<(Profile, ParameterSet)> {
    let profile = match &args.profile {
        Some(p) => p.parse::<Profile>()?,
        None => Profile::default_for(t),
    };
    let mut ps = parameters(t, profile)?;
    if let Some(beta) = &args.beta {
        ps = ps.with_beta(parse_rational(beta)?, t)?;
    }
    Ok((profile, ps))
}

fn rat_list(v: &[Rational]) -> Cell {
    let mut v = v.to_vec();
    v.sort();
    Cell::List(v.into_iter().map(Cell::Rat).collect())
}

fn int_list(v: &[u64]) -> Cell {
    Cell::List(v.iter().map(|&m| Cell::int(m as i64)).collect())
}

fn param_cells(ps: &ParameterSet) -> Vec<(&'static str, Cell)> {
    vec![
        ("r", Cell::int(ps.r)),
        ("h", Cell::int(ps.h)),
        ("gamma", Cell::int(ps.gamma)),
        ("d", Cell::Rat(ps.d.clone())),
        ("nu", Cell::int(ps.nu)),
        ("alpha", Cell::Rat(ps.alpha.clone())),
        ("beta", Cell::Rat(ps.beta.clone())),
        ("A", Cell::Rat(ps.a.clone())),
        ("B", Cell::Rat(ps.b.clone())),
    ]
}

pub fn cmd_info(args: &InfoArgs) -> CmdResult<OutputDocument> {
    let t = resolve_type(&args.target.ty)?;
    let (profile, ps) = resolve_params(t, &args.params)?;
    let e = exponents(t);
    let mut row = vec![("type", Cell::Text(t.to_string())), ("profile", Cell::Text(profile.to_string()))];
    row.extend(param_cells(&ps));
    row.push(("beta_free", Cell::Bool(ps.beta_free)));
    row.push(("V+", rat_list(&ps.v_plus())));
    row.push(("V-", rat_list(&ps.v_minus())));
    row.push(("exponents", int_list(e.values())));
    row.push(("dual_partition", int_list(dual_partition(&e).counts())));
    Ok(OutputDocument::single(row))
}

pub fn cmd_exponents(args: &TypeArgs) -> CmdResult<OutputDocument> {
    let t = resolve_type(&args.ty)?;
    let e = exponents(t);
    Ok(OutputDocument::single(vec![
        ("type", Cell::Text(t.to_string())),
        ("r", Cell::int(e.rank() as i64)),
        ("h", Cell::int(t.coxeter_number())),
        ("exponents", int_list(e.values())),
    ]))
}

fn method_row(t: CoxeterType, n: usize, method: &str, value: Rational) -> Vec<(&'static str, Cell)> {
    vec![
        ("type", Cell::Text(t.to_string())),
        ("n", Cell::int(n as i64)),
        ("method", Cell::Text(method.to_string())),
        ("value", Cell::Rat(value)),
    ]
}

/// Compares every row's value with the first; `None` when they all agree.
fn cross_check(rows: &[(String, Rational)]) -> Option<String> {
    let (first_name, first) = rows.first()?;
    rows.iter()
        .find(|(_, v)| v != first)
        .map(|(name, v)| format!("methods disagree: {first_name} gives {first}, {name} gives {v}"))
}

pub fn cmd_powersum(args: &PowerSumArgs) -> CmdResult<(OutputDocument, Option<String>)> {
    let t = resolve_type(&args.target.ty)?;
    let (_, ps) = resolve_params(t, &args.params)?;
    let n = args.n;
    if args.method == MethodArg::Closed && n > 5 {
        return Err(Usage(format!("the closed method covers n <= 5, got n = {n}")));
    }
    let mut values: Vec<(String, Rational)> = Vec::new();
    let want = |m: MethodArg| args.method == m || args.method == MethodArg::All;
    if want(MethodArg::Direct) {
        values.push((Method::Direct.to_string(), exponent_power_sum(&exponents(t), n)));
    }
    if want(MethodArg::Todd) {
        values.push((format!("{} p={}", Method::Todd, args.p), powersum_todd_with(&ps, n, args.p)));
    }
    if want(MethodArg::Closed) && n <= 5 {
        values.push((Method::Closed.to_string(), powersum_closed_with(&ps, n)?));
    }
    let mismatch = cross_check(&values);
    let rows = values.into_iter().map(|(m, v)| method_row(t, n, &m, v)).collect();
    Ok((OutputDocument::from_rows(rows), mismatch))
}

fn height_kind(t: CoxeterType) -> &'static str {
    if t.is_crystallographic() {
        "height sum"
    } else {
        "formal height sum"
    }
}

pub fn cmd_heights(args: &HeightArgs) -> CmdResult<(OutputDocument, Option<String>)> {
    let t = resolve_type(&args.target.ty)?;
    let (_, ps) = resolve_params(t, &args.params)?;
    let n = args.n;
    match args.method {
        MethodArg::Todd => return Err(Usage("height sums have no todd method; use direct, closed or all".into())),
        MethodArg::Closed if n > 4 => {
            return Err(Usage(format!("the closed method covers n <= 4, got n = {n}")));
        }
        _ => {}
    }
    let e: ExponentList = exponents(t);
    let mut values: Vec<(String, Rational)> = Vec::new();
    if matches!(args.method, MethodArg::Direct | MethodArg::All) {
        match height_power_sum(&e, n) {
            Ok(v) => values.push((Method::Direct.to_string(), v)),
            Err(err) => return Ok((OutputDocument::default(), Some(err.to_string()))),
        }
    }
    if matches!(args.method, MethodArg::Closed | MethodArg::All) && n <= 4 {
        values.push((Method::Closed.to_string(), heightsum_closed_with(&ps, n)?));
    }
    let mismatch = cross_check(&values);
    let rows = values
        .into_iter()
        .map(|(m, v)| {
            let mut row = method_row(t, n, &m, v);
            row.push(("kind", Cell::Text(height_kind(t).into())));
            row
        })
        .collect();
    Ok((OutputDocument::from_rows(rows), mismatch))
}

pub fn cmd_table(args: &TableArgs) -> CmdResult<OutputDocument> {
    let types: Vec<CoxeterType> = if args.all {
        catalog(args.max_rank, args.max_m)
    } else {
        let mut out: Vec<CoxeterType> = Vec::new();
        for text in &args.types {
            let t = resolve_type(text.trim())?;
            if !out.contains(&t) {
                out.push(t);
            }
        }
        out
    };
    let fixed: Option<Profile> = args.profile.as_deref().map(str::parse).transpose()?;
    let mut rows = Vec::with_capacity(types.len());
    for t in types {
        let profile = fixed.unwrap_or_else(|| Profile::default_for(t));
        let ps = parameters(t, profile)?;
        let e = exponents(t);
        let mut row: Vec<(String, Cell)> = vec![("type".into(), Cell::Text(t.to_string()))];
        row.extend(param_cells(&ps).into_iter().map(|(k, v)| (k.to_string(), v)));
        for n in 0..=args.n_max {
            row.push((format!("S{n}"), Cell::Rat(exponent_power_sum(&e, n))));
        }
        rows.push(row);
    }
    Ok(OutputDocument::from_rows(rows))
}

fn parse_suites(text: &str) -> CmdResult<Vec<Suite>> {
    if text == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    let mut out = Vec::new();
    for name in text.split(',') {
        let suite: Suite = name.trim().parse()?;
        if !out.contains(&suite) {
            out.push(suite);
        }
    }
    out.sort();
    Ok(out)
}

pub fn verify_config(args: &VerifyArgs) -> CmdResult<RunConfig> {
    let mut cfg = RunConfig::new(args.max_rank, args.max_m, args.n_max, args.seed);
    cfg.suites = parse_suites(&args.suite)?;
    cfg.jobs = args.jobs;
    cfg.fault = args.inject_fault.as_deref().map(str::parse::<Fault>).transpose()?;
    Ok(cfg)
}

fn report_json(r: &CheckReport) -> serde_json::Value {
    serde_json::json!({
        "suite": r.suite,
        "subject": r.subject,
        "passed": r.passed,
        "checks": r.checks,
        "witness": r.witness,
        "note": r.note,
    })
}

pub fn render_reports(reports: &[CheckReport], suites: &[Suite], quiet: bool) -> String {
    let mut out = String::new();
    for r in reports.iter().filter(|r| !quiet || !r.passed) {
        let _ = writeln!(out, "{r}");
    }
    for suite in suites {
        let mine: Vec<&CheckReport> = reports.iter().filter(|r| r.suite == suite.name()).collect();
        let failed = mine.iter().filter(|r| !r.passed).count();
        let checks: usize = mine.iter().map(|r| r.checks).sum();
        let status = if failed == 0 { "PASS" } else { "FAIL" };
        let _ = writeln!(
            out,
            "{status} suite {:<15} {} reports, {failed} failed, {checks} checks",
            suite.name(),
            mine.len()
        );
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    if failed == 0 {
        let _ = writeln!(out, "all {} reports passed", reports.len());
    } else {
        let _ = writeln!(out, "{failed} of {} reports failed", reports.len());
    }
    out
}

pub fn cmd_verify(args: &VerifyArgs) -> CmdResult<(String, i32, String)> {
    if matches!(args.format, Format::Csv | Format::Latex) {
        return Err(Usage("verify supports --format pretty or json".into()));
    }
    let cfg = verify_config(args)?;
    let reports = run(&cfg);
    let code = if reports.iter().all(|r| r.passed) { 0 } else { 1 };
    let stdout = match args.format {
        Format::Json => {
            let items: Vec<_> = reports.iter().filter(|r| !args.quiet || !r.passed).map(report_json).collect();
            format!("{}\n", serde_json::Value::Array(items))
        }
        _ => render_reports(&reports, &cfg.suites, args.quiet),
    };
    Ok((stdout, code, String::new()))
}


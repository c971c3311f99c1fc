//! The `multigrade` command-line tool.
//!
//! Exit codes: 0 on success, 2 when a clean run has a negative answer
//! (verification failed, nothing found, only trivial candidates), 1 on usage
//! or input errors. With `--json` every command prints one JSON document on
//! stdout; diagnostics always go to stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{ArgAction, Args, Parser, Subcommand, ValueEnum};
use multigrade::elliptic::{solutions_from_point, CandidateOutcome, QuarticModel, RationalPoint};
use multigrade::families::{self, Candidate};
use multigrade::json::{term, terms, SolutionRecord};
use multigrade::rational::Rational;
use multigrade::search::{exhaustive_search, SearchReport, SearchSpec, Strategy};
use multigrade::system::{drop_zeros, frolov_shift, power_sum};
use multigrade::{Solution, SystemShape, TEPair, Term};
use serde::{Deserialize, Serialize};

/// Overrides the default search node budget.
pub const NODE_BUDGET_VAR: &str = "MULTIGRADE_NODE_BUDGET";

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_NEGATIVE: u8 = 2;

/// What a command printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn negative(stdout: String, diagnostic: impl Into<String>) -> Self {
        CommandOutcome {
            exit_code: EXIT_NEGATIVE,
            stdout,
            stderr: line(diagnostic.into()),
        }
    }

    fn error(message: impl Into<String>) -> Self {
        CommandOutcome {
            exit_code: EXIT_ERROR,
            stdout: String::new(),
            stderr: line(format!("error: {}", message.into())),
        }
    }
}

fn line(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

#[derive(Parser, Debug)]
#[command(
    name = "multigrade",
    version,
    about = "Equal sums of like powers: verify, generate, search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a candidate solution exponent by exponent.
    Verify(VerifyArgs),
    /// Instantiate a parametric family.
    Family(Box<FamilyArgs>),
    /// Solutions from multiples of an elliptic-curve generator.
    Ec(EcArgs),
    /// Bounded exhaustive search for one shape.
    Search(SearchArgs),
    /// Translate a symmetric pair and optionally drop its zero terms.
    Shift(ShiftArgs),
}

/// A comma-separated list of integers such as `30,4,-3,20`.
#[derive(Debug, Clone)]
struct TermList(Vec<Term>);

fn parse_terms(s: &str) -> Result<TermList, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Term>()
                .map_err(|_| format!("not an integer: {t:?}"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(TermList)
}

fn parse_term(s: &str) -> Result<Term, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("not an integer: {s:?}"))
}

fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("not a rational number: {s:?}"))
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long)]
    k: u32,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_terms)]
    lhs: TermList,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_terms)]
    rhs: TermList,
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum FamilyName {
    /// Degree 2, shape (1, 3); needs --p --q.
    K2,
    /// Degree 3 from a Pythagorean triple; needs --a --b --c.
    #[value(name = "k3-pyth")]
    K3Pyth,
    /// Degree 3, shape (2, 4); needs --p --q.
    K3,
    /// Degree 3 two-sided identity; needs --p --q --r --s (rationals allowed).
    #[value(name = "k3-partial")]
    K3Partial,
    /// Degree 5, shape (4, 6); needs --m --n.
    K5a,
    /// Degree 5, shape (4, 6); needs --m --n.
    K5b,
}

impl FamilyName {
    fn label(self) -> &'static str {
        match self {
            FamilyName::K2 => "k2",
            FamilyName::K3Pyth => "k3-pyth",
            FamilyName::K3 => "k3",
            FamilyName::K3Partial => "k3-partial",
            FamilyName::K5a => "k5a",
            FamilyName::K5b => "k5b",
        }
    }
}

#[derive(Args, Debug)]
struct FamilyArgs {
    #[arg(value_enum)]
    name: FamilyName,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    p: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    q: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    r: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    s: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    a: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    b: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    c: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    m: Option<Rational>,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_rational)]
    n: Option<Rational>,
    /// Print the instantiated terms without normalizing.
    #[arg(long)]
    raw: bool,
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CurveName {
    /// Y^2 = X^3 - 36X, degree-4 solutions of shape (3, 5).
    K4,
    /// Y^2 = X^3 - 21X - 20, degree-5 solutions of shape (4, 6).
    K5,
}

impl CurveName {
    fn model(self) -> QuarticModel {
        match self {
            CurveName::K4 => QuarticModel::K4,
            CurveName::K5 => QuarticModel::K5,
        }
    }
}

#[derive(Args, Debug)]
struct EcArgs {
    #[arg(value_enum)]
    curve: CurveName,
    /// Multiple of the generator to use.
    #[arg(long)]
    n: u64,
    #[arg(long)]
    show_point: bool,
    #[arg(long)]
    show_uv: bool,
    #[arg(long)]
    json: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum StrategyArg {
    Plain,
    Mitm,
    Auto,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Plain => Strategy::Plain,
            StrategyArg::Mitm => Strategy::MeetInTheMiddle,
            StrategyArg::Auto => Strategy::Auto,
        }
    }
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    k: u32,
    #[arg(long)]
    s1: usize,
    #[arg(long)]
    s2: usize,
    /// Maximum absolute value of any term.
    #[arg(long)]
    height: u64,
    /// Whether zero terms are enumerated.
    #[arg(long, default_value_t = true, action = ArgAction::Set)]
    zeros: bool,
    /// Stop after this many solutions.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    limit: Option<u64>,
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    threads: Option<u64>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    /// Refuse shapes that the side-count lower bounds rule out.
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct ShiftArgs {
    #[arg(long)]
    k: u32,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_terms)]
    a: TermList,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_terms)]
    b: TermList,
    #[arg(long, allow_hyphen_values = true, value_parser = parse_term)]
    d: Term,
    /// Also print the solution left after removing zero terms.
    #[arg(long)]
    drop_zeros: bool,
    #[arg(long)]
    json: bool,
}

/// JSON payload of `verify`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOutput {
    pub k: u32,
    #[serde(with = "terms")]
    pub lhs: Vec<Term>,
    #[serde(with = "terms")]
    pub rhs: Vec<Term>,
    pub verified: bool,
    pub trivial: bool,
    pub verified_r: Vec<u32>,
    /// Power sums of each side for `r = 1..k`.
    #[serde(with = "terms")]
    pub lhs_sums: Vec<Term>,
    #[serde(with = "terms")]
    pub rhs_sums: Vec<Term>,
}

/// JSON payload of `family`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyOutput {
    pub family: String,
    pub normalized: bool,
    pub solution: SolutionRecord,
}

/// Exact affine coordinates as fractions; both absent for the point at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointOutput {
    pub x: Option<String>,
    pub y: Option<String>,
}

/// Quartic parameters: `u` with `t` (degree 4) or `v` (degree 5).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuarticOutput {
    pub u: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<String>,
}

/// JSON payload of `ec`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EcOutput {
    pub curve: String,
    pub n: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point: Option<PointOutput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quartic: Option<QuarticOutput>,
    pub solutions: Vec<SolutionRecord>,
    pub trivial_candidates: usize,
    /// Reasons for candidates that could not be instantiated.
    pub skipped: Vec<String>,
}

/// JSON payload of `shift`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftOutput {
    pub k: u32,
    #[serde(with = "term")]
    pub d: Term,
    #[serde(with = "terms")]
    pub a: Vec<Term>,
    #[serde(with = "terms")]
    pub b: Vec<Term>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solution: Option<SolutionRecord>,
}

/// Parses `args` (program name first) and runs the command.
pub fn execute<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CommandOutcome::ok(text),
                _ => CommandOutcome {
                    exit_code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: line(text),
                },
            };
        }
    };
    match cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Family(a) => cmd_family(*a),
        Command::Ec(a) => cmd_ec(a),
        Command::Search(a) => cmd_search(a),
        Command::Shift(a) => cmd_shift(a),
    }
}

/// Runs the tool, writing to the given streams, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let outcome = execute(args);
    let written = out
        .write_all(outcome.stdout.as_bytes())
        .and_then(|_| err.write_all(outcome.stderr.as_bytes()));
    match written {
        Ok(()) => outcome.exit_code,
        Err(_) => EXIT_ERROR,
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    line(serde_json::to_string(value).expect("output types always serialize"))
}

fn join(terms: &[Term]) -> String {
    terms
        .iter()
        .map(Term::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn join_r(rs: &[u32]) -> String {
    if rs.is_empty() {
        return "none".into();
    }
    rs.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn solution_block(out: &mut String, rec: &SolutionRecord) {
    let _ = writeln!(out, "k={}  {} | {}", rec.k, join(&rec.lhs), join(&rec.rhs));
    let _ = writeln!(out, "verified r: {}", join_r(&rec.verified_r));
    let _ = writeln!(out, "trivial: {}", rec.trivial);
}

fn cmd_verify(args: VerifyArgs) -> CommandOutcome {
    let sol = match Solution::new(args.k, args.lhs.0, args.rhs.0) {
        Ok(s) => s,
        Err(e) => return CommandOutcome::error(e.to_string()),
    };
    let rs: Vec<u32> = (1..=sol.k()).collect();
    let output = VerifyOutput {
        k: sol.k(),
        lhs: sol.lhs().to_vec(),
        rhs: sol.rhs().to_vec(),
        verified: sol.verify(),
        trivial: sol.is_trivial(),
        verified_r: sol.exponents_holding(),
        lhs_sums: rs.iter().map(|&r| power_sum(sol.lhs(), r)).collect(),
        rhs_sums: rs.iter().map(|&r| power_sum(sol.rhs(), r)).collect(),
    };
    let stdout = if args.json {
        to_json(&output)
    } else {
        let mut s = String::new();
        for (i, r) in rs.iter().enumerate() {
            let (l, rr) = (&output.lhs_sums[i], &output.rhs_sums[i]);
            let rel = if l == rr { "=" } else { "!=" };
            let _ = writeln!(s, "r={r}: {l} {rel} {rr}");
        }
        let _ = writeln!(s, "verified: {}", output.verified);
        let _ = writeln!(s, "trivial: {}", output.trivial);
        s
    };
    if output.verified {
        CommandOutcome::ok(stdout)
    } else {
        CommandOutcome::negative(stdout, "not verified for every exponent up to k")
    }
}

fn require(value: &Option<Rational>, flag: &str, family: FamilyName) -> Result<Rational, String> {
    value
        .clone()
        .ok_or_else(|| format!("family {} needs --{flag}", family.label()))
}

fn require_int(value: &Option<Rational>, flag: &str, family: FamilyName) -> Result<Term, String> {
    let v = require(value, flag, family)?;
    if !v.is_integer() {
        return Err(format!(
            "--{flag} must be an integer for family {}",
            family.label()
        ));
    }
    Ok(v.to_integer())
}

fn build_family(args: &FamilyArgs) -> Result<Candidate, String> {
    let f = args.name;
    let int = |v: &Option<Rational>, flag: &str| require_int(v, flag, f);
    let candidate = match f {
        FamilyName::K2 => families::k2_family(int(&args.p, "p")?, int(&args.q, "q")?),
        FamilyName::K3Pyth => {
            families::k3_pythagorean(int(&args.a, "a")?, int(&args.b, "b")?, int(&args.c, "c")?)
        }
        FamilyName::K3 => families::k3_family(int(&args.p, "p")?, int(&args.q, "q")?),
        FamilyName::K3Partial => families::k3_partial(
            &require(&args.p, "p", f)?,
            &require(&args.q, "q", f)?,
            &require(&args.r, "r", f)?,
            &require(&args.s, "s", f)?,
        ),
        FamilyName::K5a => families::k5_family1(int(&args.m, "m")?, int(&args.n, "n")?),
        FamilyName::K5b => families::k5_family2(int(&args.m, "m")?, int(&args.n, "n")?),
    };
    candidate.map_err(|e| e.to_string())
}

fn cmd_family(args: FamilyArgs) -> CommandOutcome {
    let candidate = match build_family(&args) {
        Ok(c) => c,
        Err(e) => return CommandOutcome::error(e),
    };
    let solution = if args.raw {
        candidate.solution().clone()
    } else {
        match candidate.normalized() {
            Ok(s) => s,
            Err(e) => return CommandOutcome::error(e.to_string()),
        }
    };
    let output = FamilyOutput {
        family: args.name.label().into(),
        normalized: !args.raw,
        solution: SolutionRecord::from(&solution),
    };
    let stdout = if args.json {
        to_json(&output)
    } else {
        let mut s = String::new();
        let form = if output.normalized {
            "normalized"
        } else {
            "raw"
        };
        let _ = writeln!(s, "family {} ({form})", output.family);
        solution_block(&mut s, &output.solution);
        s
    };
    if candidate.is_complete() {
        CommandOutcome::ok(stdout)
    } else {
        CommandOutcome::negative(
            stdout,
            "the instance does not satisfy every exponent up to k",
        )
    }
}

fn point_output(p: &RationalPoint) -> PointOutput {
    match p.coords() {
        Some((x, y)) => PointOutput {
            x: Some(x.to_string()),
            y: Some(y.to_string()),
        },
        None => PointOutput { x: None, y: None },
    }
}

fn cmd_ec(args: EcArgs) -> CommandOutcome {
    let model = args.curve.model();
    let report = match solutions_from_point(model, args.n) {
        Ok(r) => r,
        Err(e) => return CommandOutcome::error(e.to_string()),
    };
    let mut trivial_candidates = 0;
    let mut skipped = Vec::new();
    for d in &report.diagnostics {
        match &d.outcome {
            CandidateOutcome::Trivial(_) => trivial_candidates += 1,
            CandidateOutcome::Skipped(e) => skipped.push(e.to_string()),
            CandidateOutcome::Incomplete(rs) => {
                skipped.push(format!("candidate holds only for r in {rs:?}"))
            }
            CandidateOutcome::Nontrivial(_) => {}
        }
    }
    let quartic = report.params.as_ref().map(|q| {
        let second = Some(q.second().to_string());
        match model {
            QuarticModel::K4 => QuarticOutput {
                u: q.u().to_string(),
                t: second,
                v: None,
            },
            QuarticModel::K5 => QuarticOutput {
                u: q.u().to_string(),
                t: None,
                v: second,
            },
        }
    });
    let output = EcOutput {
        curve: args
            .curve
            .to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .into(),
        n: args.n,
        point: args.show_point.then(|| point_output(&report.point)),
        quartic: if args.show_uv { quartic } else { None },
        solutions: report.solutions.iter().map(SolutionRecord::from).collect(),
        trivial_candidates,
        skipped,
    };
    let stdout = if args.json {
        to_json(&output)
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "curve: {}", model.curve());
        let _ = writeln!(s, "n: {}", output.n);
        if args.show_point {
            let _ = writeln!(s, "point: {}", report.point);
        }
        if let Some(q) = &output.quartic {
            let (name, value) = match (&q.t, &q.v) {
                (Some(t), _) => ("t", t),
                (_, Some(v)) => ("v", v),
                _ => unreachable!("quartic output always has a second coordinate"),
            };
            let _ = writeln!(s, "u: {}", q.u);
            let _ = writeln!(s, "{name}: {value}");
        }
        for rec in &output.solutions {
            solution_block(&mut s, rec);
        }
        s
    };
    if !output.solutions.is_empty() {
        return CommandOutcome::ok(stdout);
    }
    let diagnostic = if output.skipped.is_empty() {
        "no nontrivial solution: all candidates trivial".to_string()
    } else {
        format!(
            "no nontrivial solution: {} trivial, skipped: {}",
            output.trivial_candidates,
            output.skipped.join("; ")
        )
    };
    CommandOutcome::negative(stdout, diagnostic)
}

fn node_budget() -> Result<Option<u64>, String> {
    match std::env::var(NODE_BUDGET_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| format!("{NODE_BUDGET_VAR} must be a non-negative integer, got {v:?}")),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => Err(format!("{NODE_BUDGET_VAR}: {e}")),
    }
}

fn cmd_search(args: SearchArgs) -> CommandOutcome {
    let shape = match SystemShape::new(args.k, args.s1, args.s2) {
        Ok(s) => s,
        Err(e) => return CommandOutcome::error(e.to_string()),
    };
    if args.strict && !shape.is_feasible() {
        return CommandOutcome::error(format!(
            "shape {shape} is ruled out by the side-count lower bounds"
        ));
    }
    let mut spec = SearchSpec::new(shape, args.height)
        .with_zero_terms(args.zeros)
        .with_limit(args.limit.map(|l| l as usize))
        .with_threads(args.threads.map(|t| t as usize))
        .with_strategy(args.strategy.into());
    match node_budget() {
        Ok(Some(b)) => spec = spec.with_node_budget(b),
        Ok(None) => {}
        Err(e) => return CommandOutcome::error(e),
    }
    let report: SearchReport = match exhaustive_search(&spec) {
        Ok(r) => r,
        Err(e) => return CommandOutcome::error(e.to_string()),
    };
    let stdout = if args.json {
        to_json(&report)
    } else {
        let mut s = String::new();
        for sol in &report.solutions {
            let _ = writeln!(s, "{} | {}", join(sol.lhs()), join(sol.rhs()));
        }
        let coverage = if report.exhaustive {
            "exhaustive"
        } else {
            "not exhaustive"
        };
        let _ = writeln!(
            s,
            "{shape}, height {}: {} solution(s), {coverage}, {} nodes",
            args.height,
            report.solutions.len(),
            report.nodes
        );
        s
    };
    if !report.solutions.is_empty() {
        CommandOutcome::ok(stdout)
    } else if report.exhaustive {
        CommandOutcome::negative(stdout, "no nontrivial solution in the box")
    } else {
        CommandOutcome::negative(stdout, "nothing found before the node budget ran out")
    }
}

fn cmd_shift(args: ShiftArgs) -> CommandOutcome {
    let shifted = TEPair::new(args.k, args.a.0, args.b.0).and_then(|te| frolov_shift(&te, &args.d));
    let shifted = match shifted {
        Ok(te) => te,
        Err(e) => return CommandOutcome::error(e.to_string()),
    };
    let solution = if args.drop_zeros {
        match drop_zeros(&shifted) {
            Ok(s) => Some(SolutionRecord::from(&s)),
            Err(e) => return CommandOutcome::error(e.to_string()),
        }
    } else {
        None
    };
    let output = ShiftOutput {
        k: shifted.k(),
        d: args.d,
        a: shifted.a().to_vec(),
        b: shifted.b().to_vec(),
        solution,
    };
    let stdout = if args.json {
        to_json(&output)
    } else {
        let mut s = String::new();
        let _ = writeln!(s, "a: {}", join(&output.a));
        let _ = writeln!(s, "b: {}", join(&output.b));
        if let Some(rec) = &output.solution {
            solution_block(&mut s, rec);
        }
        s
    };
    CommandOutcome::ok(stdout)
}

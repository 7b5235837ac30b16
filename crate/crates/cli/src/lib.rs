//! Commands behind the `mpgen` binary.

pub mod report;

use std::io::{BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};
use mpgen_core::classify::{
    coefficient_report, generic_transfer_is_generic, is_generic_lq, is_generic_lq_via_coeff, standard_module_reducible,
};
use mpgen_core::gamma::{
    ord_gamma_rs, ord_gamma_std, ord_gamma_sym2, ord_gamma_vs_parameter, ord_local_coeff, rs_breakdown, std_breakdown,
    sym2_breakdown, CoeffMode, ElementaryTerm,
};
use mpgen_core::notation::{parse_rep, ParseError, RepExpr};
use mpgen_core::theta::{first_occurrence, lift_table, theta_lift, Branch, LiftLevel, LiftResult, Tower};
use mpgen_core::universe;
use mpgen_core::{Error, HalfInt, LParameter, LanglandsDatum, QuadChar, Segment, TemperedRep};
use serde::Serialize;
use thiserror::Error as ThisError;

use report::{GammaReport, LiftJson, Report, SelftestLine, SelftestReport};

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] Error),
    #[error("route disagreement: {0}")]
    Disagreement(String),
}

impl CliError {
    /// 1 for bad input, 2 for an internal invariant breach.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_invariant_breach() => 2,
            CliError::Disagreement(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GammaKind {
    Std,
    Rs,
    Sym2,
    Param,
    Coeff,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Mp,
    So,
}

#[derive(Debug, Parser)]
#[command(
    name = "mpgen",
    version,
    about = "Generic representations of p-adic metaplectic groups and their theta lifts"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genericity by both routes, standard-module reducibility and witnesses.
    Classify {
        /// A datum such as `L(St(2) v^1; T{1*S4})`; read from stdin when omitted.
        expr: Option<String>,
    },
    /// First occurrence indices.
    Occurrence {
        expr: Option<String>,
        /// Discriminant character of the towers, e.g. `chi:a`.
        #[arg(long)]
        chi: Option<String>,
    },
    /// One theta lift.
    Lift {
        expr: Option<String>,
        /// `split`, `nonsplit`, `chi:LABEL` or `chi:LABEL:nonsplit`.
        #[arg(long, default_value = "split")]
        tower: String,
        /// `l` (even) or `m=DIM` for the target `O(DIM)`.
        #[arg(long, allow_hyphen_values = true)]
        level: String,
    },
    /// Lifts from first occurrence down `depth` steps on both branches.
    Table {
        expr: Option<String>,
        #[arg(long, default_value_t = 2)]
        depth: u32,
        #[arg(long)]
        chi: Option<String>,
    },
    /// Order of a gamma factor at a point, with its elementary breakdown.
    GammaOrd {
        #[arg(value_enum)]
        kind: GammaKind,
        /// Segments and parameters, e.g. `rs 'St(2) v^1' 'D(1;-1,0)'` or `coeff 'St(2) v^1' '{1*S4}'`.
        args: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long, value_enum, default_value = "mp")]
        mode: Mode,
    },
    /// Runs the enumeration properties over the built-in universe.
    Selftest {
        #[arg(long, default_value_t = 4)]
        depth: u32,
    },
}

fn parse_datum(text: &str) -> Result<LanglandsDatum, CliError> {
    Ok(parse_rep(text)?.to_datum()?)
}

fn parse_segment(text: &str) -> Result<Segment, CliError> {
    match parse_rep(text)? {
        RepExpr::Segment(s) => Ok(s.to_segment()?),
        _ => Err(CliError::Usage(format!("expected a segment, got {text}"))),
    }
}

fn parse_param(text: &str) -> Result<LParameter, CliError> {
    match parse_rep(text)? {
        RepExpr::Param(p) => Ok(p.to_param()),
        RepExpr::Tempered(t) => Ok(t.to_tempered()?.param().clone()),
        _ => Err(CliError::Usage(format!("expected a parameter {{...}}, got {text}"))),
    }
}

fn parse_half(text: &str) -> Result<HalfInt, CliError> {
    text.parse().map_err(|e| CliError::Usage(format!("bad point {text:?}: {e}")))
}

fn parse_chi(text: Option<&str>) -> Result<QuadChar, CliError> {
    let Some(t) = text else { return Ok(QuadChar::trivial()) };
    if t == "1" {
        return Ok(QuadChar::trivial());
    }
    let Some(labels) = t.strip_prefix("chi:") else {
        return Err(CliError::Usage(format!("expected chi:LABEL, got {t:?}")));
    };
    let mut chi = QuadChar::trivial();
    for l in labels.split('+') {
        chi = chi.mul(&QuadChar::named(l).map_err(Error::from)?);
    }
    Ok(chi)
}

pub fn parse_tower(text: &str) -> Result<Tower, CliError> {
    match text {
        "split" => return Ok(Tower::split()),
        "nonsplit" => return Ok(Tower::nonsplit()),
        _ => {}
    }
    let (chi, branch) = match text.rsplit_once(':') {
        Some((c, "split")) => (c, Branch::Split),
        Some((c, "nonsplit")) => (c, Branch::Nonsplit),
        _ => (text, Branch::Split),
    };
    Ok(Tower::new(parse_chi(Some(chi))?, branch))
}

pub fn parse_level(text: &str, n: u64) -> Result<LiftLevel, CliError> {
    let level = match text.strip_prefix("m=") {
        Some(m) => {
            let m = m.parse::<i64>().map_err(|_| CliError::Usage(format!("bad target dimension {m:?}")))?;
            LiftLevel::from_target(n, m)?
        }
        None => {
            let l = text.parse::<i64>().map_err(|_| CliError::Usage(format!("bad level {text:?}")))?;
            LiftLevel::new(l)?
        }
    };
    if level.target_dim(n) < 1 {
        return Err(Error::BadTarget(level.target_dim(n)).into());
    }
    Ok(level)
}

/// Both genericity routes, reducibility and first occurrence.
pub fn classify(d: &LanglandsDatum) -> Result<Report, CliError> {
    let verdict = is_generic_lq(d)?;
    let via = is_generic_lq_via_coeff(d)?;
    if verdict.generic != via {
        return Err(CliError::Disagreement(format!(
            "{d}: combinatorial route says {}, local coefficient says {via}",
            verdict.generic
        )));
    }
    let mut r = Report {
        input: d.to_string(),
        generic: Some(verdict.generic),
        generic_via_coefficient: Some(via),
        witnesses: Some(verdict.witnesses),
        coefficient: Some(coefficient_report(d)?),
        ..Report::default()
    };
    if via {
        let red = standard_module_reducible(d)?;
        r.standard_reducible = Some(red.reducible);
        r.reducibility_witnesses = Some(red.witnesses);
        r.notes = Some(red.notes).filter(|n| !n.is_empty());
        r.transfer_generic = Some(generic_transfer_is_generic(d)?);
        r.first_occurrence = Some(first_occurrence(d, &QuadChar::trivial())?);
    }
    Ok(r)
}

pub fn occurrence(d: &LanglandsDatum, chi: &QuadChar) -> Result<Report, CliError> {
    Ok(Report { input: d.to_string(), first_occurrence: Some(first_occurrence(d, chi)?), ..Report::default() })
}

pub fn lift(d: &LanglandsDatum, tower: &Tower, level: &str) -> Result<Report, CliError> {
    let n = d.rank();
    let l = parse_level(level, n)?;
    let entry = match theta_lift(d, tower, l)? {
        LiftResult::Zero => LiftJson::zero(tower, l.get(), l.target_dim(n)),
        LiftResult::Lift(x) => LiftJson::lift(&x),
    };
    Ok(Report { input: d.to_string(), lifts: Some(vec![entry]), ..Report::default() })
}

pub fn table(d: &LanglandsDatum, chi: &QuadChar, depth: u32) -> Result<Report, CliError> {
    let fo = first_occurrence(d, chi)?;
    let lifts = lift_table(d, chi, depth)?.iter().map(LiftJson::lift).collect();
    Ok(Report { input: d.to_string(), first_occurrence: Some(fo), lifts: Some(lifts), ..Report::default() })
}

fn expect_args(args: &[String], n: usize, usage: &str) -> Result<(), CliError> {
    if args.len() != n {
        return Err(CliError::Usage(format!("expected {usage}")));
    }
    Ok(())
}

pub fn gamma_ord(kind: GammaKind, args: &[String], at: &str, mode: Mode) -> Result<GammaReport, CliError> {
    let u0 = parse_half(at)?;
    let sum = |t: &[ElementaryTerm]| t.iter().map(|x| x.order).sum::<i64>();
    let (name, order, terms, coefficient) = match kind {
        GammaKind::Std => {
            expect_args(args, 1, "one segment")?;
            let s = parse_segment(&args[0])?;
            ("gamma(u, delta)", ord_gamma_std(&s, u0).0, std_breakdown(&s, u0), None)
        }
        GammaKind::Rs => {
            expect_args(args, 2, "two segments")?;
            let (s1, s2) = (parse_segment(&args[0])?, parse_segment(&args[1])?);
            ("gamma(u, delta x delta')", ord_gamma_rs(&s1, &s2, u0).0, rs_breakdown(&s1, &s2, u0), None)
        }
        GammaKind::Sym2 => {
            expect_args(args, 1, "one segment")?;
            let s = parse_segment(&args[0])?;
            ("gamma(u, delta, Sym2)", ord_gamma_sym2(&s, u0).0, sym2_breakdown(&s, u0), None)
        }
        GammaKind::Param => {
            expect_args(args, 2, "a parameter and a segment")?;
            let (phi, s) = (parse_param(&args[0])?, parse_segment(&args[1])?);
            let order = ord_gamma_vs_parameter(&phi, &s, u0)?.0;
            let mut terms = Vec::new();
            for x in phi.summands() {
                for _ in 0..x.mult {
                    terms.extend(rs_breakdown(&s, &Segment::unitary(x.rho.clone(), x.a), u0));
                }
            }
            ("gamma(u, sigma x delta)", order, terms, None)
        }
        GammaKind::Coeff => {
            expect_args(args, 2, "a segment and a parameter")?;
            let (s, phi) = (parse_segment(&args[0])?, parse_param(&args[1])?);
            let sigma = TemperedRep::metaplectic(phi)?;
            let m = match mode {
                Mode::Mp => CoeffMode::Metaplectic,
                Mode::So => CoeffMode::Orthogonal,
            };
            let c = ord_local_coeff(&s, &sigma, m, u0);
            let mut terms = sym2_breakdown(&s, u0.double());
            for x in sigma.param().summands() {
                for _ in 0..x.mult {
                    terms.extend(rs_breakdown(&s, &Segment::unitary(x.rho.clone(), x.a), u0));
                }
            }
            if m == CoeffMode::Metaplectic {
                terms.extend(std_breakdown(&s, u0 + HalfInt::HALF).into_iter().map(|mut t| {
                    t.factor = format!("denominator {}", t.factor);
                    t.order = -t.order;
                    t
                }));
            }
            ("C(u, delta (x) sigma)", c.total.0, terms, Some(c))
        }
    };
    if coefficient.is_none() && sum(&terms) != order {
        return Err(Error::InvariantBreach(format!("breakdown of {name} does not sum to {order}")).into());
    }
    Ok(GammaReport { kind: name.to_string(), input: args.to_vec(), at: u0, order, terms, coefficient })
}

fn tally(check: &str, results: Vec<Result<Vec<String>, Error>>, breaches: &mut Vec<String>) -> SelftestLine {
    let cases = results.len();
    let mut examples = Vec::new();
    let mut violations = 0;
    for r in results {
        match r {
            Ok(v) => {
                violations += v.len();
                examples.extend(v);
            }
            Err(e) => {
                violations += 1;
                breaches.push(e.to_string());
            }
        }
    }
    examples.truncate(5);
    SelftestLine { check: check.to_string(), cases, violations, examples }
}

/// Route equivalence, conservation and lift properties over the enumeration universe.
pub fn selftest(depth: u32) -> SelftestReport {
    let data = universe::data();
    let mut breaches = Vec::new();
    let routes = data.iter().map(|d| universe::check_routes(d).map(|m| m.into_iter().collect())).collect();
    let routes = tally("route equivalence", routes, &mut breaches);
    let generic: Vec<&LanglandsDatum> =
        data.iter().filter(|d| is_generic_lq(d).map(|v| v.generic).unwrap_or(false)).collect();
    let cons = generic.iter().map(|d| universe::check_conservation(d).map(|m| m.into_iter().collect())).collect();
    let cons = tally("conservation", cons, &mut breaches);
    let lifts = generic.iter().map(|d| universe::check_lifts(d, depth)).collect();
    let lifts = tally("lift properties", lifts, &mut breaches);
    let classify_runs = data
        .iter()
        .map(|d| match classify(d) {
            Err(e) if e.exit_code() == 2 => Ok(vec![format!("{d}: {e}")]),
            _ => Ok(Vec::new()),
        })
        .collect();
    let classify_line = tally("classify never exits 2", classify_runs, &mut breaches);
    SelftestReport { checks: vec![routes, cons, lifts, classify_line], breaches }
}

fn emit<T: Serialize>(value: &T, text: impl FnOnce() -> String, format: Format, batch: bool, out: &mut dyn Write) {
    let s = match (format, batch) {
        (_, true) => serde_json::to_string(value).expect("serializable"),
        (Format::Json, false) => serde_json::to_string_pretty(value).expect("serializable"),
        (Format::Text, false) => text().trim_end().to_string(),
    };
    let _ = writeln!(out, "{s}");
}

fn run_one(cmd: &Command, expr: &str) -> Result<Report, CliError> {
    let d = parse_datum(expr)?;
    match cmd {
        Command::Classify { .. } => classify(&d),
        Command::Occurrence { chi, .. } => occurrence(&d, &parse_chi(chi.as_deref())?),
        Command::Lift { tower, level, .. } => lift(&d, &parse_tower(tower)?, level),
        Command::Table { depth, chi, .. } => table(&d, &parse_chi(chi.as_deref())?, *depth),
        Command::GammaOrd { .. } | Command::Selftest { .. } => unreachable!("no datum argument"),
    }
}

#[derive(Serialize)]
struct ErrorLine<'a> {
    input: &'a str,
    error: String,
    exit_code: i32,
}

/// Runs a parsed command line; returns the process exit code.
pub fn run(cli: &Cli, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let format = cli.format;
    match &cli.command {
        Command::GammaOrd { kind, args, at, mode } => match gamma_ord(*kind, args, at, *mode) {
            Ok(r) => {
                emit(&r, || r.to_text(), format, false, out);
                0
            }
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                e.exit_code()
            }
        },
        Command::Selftest { depth } => {
            let r = selftest(*depth);
            emit(&r, || r.to_text(), format, false, out);
            if r.breaches.is_empty() && r.clean() {
                0
            } else {
                2
            }
        }
        cmd => {
            let expr = match cmd {
                Command::Classify { expr } => expr,
                Command::Occurrence { expr, .. } => expr,
                Command::Lift { expr, .. } => expr,
                Command::Table { expr, .. } => expr,
                _ => unreachable!(),
            };
            match expr.as_deref() {
                Some(e) if e != "-" => match run_one(cmd, e) {
                    Ok(r) => {
                        emit(&r, || r.to_text(), format, false, out);
                        0
                    }
                    Err(e) => {
                        let _ = writeln!(err, "error: {e}");
                        e.exit_code()
                    }
                },
                _ => {
                    let mut worst = 0;
                    for line in stdin.lines() {
                        let Ok(line) = line else { return 1 };
                        let line = line.trim();
                        if line.is_empty() || line.starts_with('#') {
                            continue;
                        }
                        match run_one(cmd, line) {
                            Ok(r) => emit(&r, String::new, format, true, out),
                            Err(e) => {
                                let code = e.exit_code();
                                worst = worst.max(code);
                                emit(
                                    &ErrorLine { input: line, error: e.to_string(), exit_code: code },
                                    String::new,
                                    format,
                                    true,
                                    out,
                                );
                            }
                        }
                    }
                    worst
                }
            }
        }
    }
}

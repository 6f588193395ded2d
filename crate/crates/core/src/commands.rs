//! Subcommands of the `macforge` binary. Each returns a [`Report`]; the binary
//! only prints it and maps the outcome to an exit code.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::autenum::{
    closure, expected_orders, filtration, standard_generators, verify_structure, Depth,
    DEFAULT_LIMIT,
};
use crate::error::{AutError, OracleError, ParamError};
use crate::group::Family;
use crate::oracle::{cross_check, table_bytes, todd_coxeter, CheckMode, Presentation, Strategy};
use crate::params::{GroupParams, OddPrimeParams};
use crate::report::{Report, ReportParams};
use crate::verify::{verify_formulas, VerifyOptions};

/// Bytes per stored automorphism during closure: a key plus its hash entry.
pub const BYTES_PER_AUT: u64 = 40;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    /// Usage and resource errors share exit code 2; failing checks use 1.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

impl From<ParamError> for CliError {
    fn from(e: ParamError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::Params(p) => p.into(),
            OracleError::Parse(_) | OracleError::Unsupported(_) => CliError::Usage(e.to_string()),
            _ => CliError::Resource(e.to_string()),
        }
    }
}

impl From<AutError> for CliError {
    fn from(e: AutError) -> Self {
        match e {
            AutError::Unsupported(_) => CliError::Usage(e.to_string()),
            _ => CliError::Resource(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "macforge",
    version,
    about = "Checks for the Macdonald groups J, H and K"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arithmetic invariants plus the coset-table cross-check.
    VerifyFormulas(VerifyArgs),
    /// Automorphism group closure, filtration and structure table.
    Aut(AutArgs),
    /// Odd-prime commutator identities against a coset table.
    Oddp(OddpArgs),
    /// Coset enumeration, alone or against the normal-form arithmetic.
    Oracle(OracleArgs),
    /// Write a report file, re-rendering an input or running the default bundle.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "UPPER")]
pub enum FamilyArg {
    J,
    H,
    K,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::J => Family::J,
            FamilyArg::H => Family::H,
            FamilyArg::K => Family::K,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Hlt,
    Felsch,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    /// Print JSON instead of the text table.
    #[arg(long)]
    pub json: bool,
    /// Also write the report (JSON) to this path.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long)]
    pub m: u32,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub ell: i64,
}

impl GroupArgs {
    pub fn resolve(&self) -> Result<(Family, GroupParams), CliError> {
        Ok((self.family.into(), GroupParams::new(self.m, self.ell)?))
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub exhaustive: bool,
    /// Skip the coset-table cross-check.
    #[arg(long)]
    pub no_oracle: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct AutArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Only the closure and filtration rows.
    #[arg(long)]
    pub filtration: bool,
    /// Allow J at m = 3 (2^24 automorphisms).
    #[arg(long)]
    pub full: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct OddpArgs {
    #[arg(long)]
    pub p: u64,
    #[arg(long, default_value_t = 1)]
    pub m: u32,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub ell: i64,
    #[arg(long, default_value_t = 20)]
    pub range: i64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum, conflicts_with_all = ["builtin", "file"])]
    pub family: Option<FamilyArg>,
    #[arg(long, default_value_t = 2)]
    pub m: u32,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pub ell: i64,
    /// A named presentation: J[m,ell], H[m,ell], K[m,ell], Jp[p,m,ell] or Q16.
    #[arg(long, conflicts_with = "file")]
    pub builtin: Option<String>,
    /// A presentation file, one relator per line.
    #[arg(long)]
    pub file: Option<PathBuf>,
    #[arg(long)]
    pub max_cosets: Option<usize>,
    #[arg(long, value_enum, default_value_t = StrategyArg::Hlt)]
    pub strategy: StrategyArg,
    #[arg(long, default_value_t = 100_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub exhaustive: bool,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Args)]
pub struct ReportArgs {
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, conflicts_with = "text")]
    pub json: bool,
    #[arg(long)]
    pub text: bool,
    /// Re-render a JSON report instead of running the default bundle.
    #[arg(long)]
    pub input: Option<PathBuf>,
}

pub fn cmd_verify_formulas(a: &VerifyArgs) -> Result<Report, CliError> {
    let (family, params) = a.group.resolve()?;
    let opts = VerifyOptions {
        samples: a.samples,
        seed: a.seed,
        exhaustive: a.exhaustive,
        skip_oracle: a.no_oracle,
    };
    Ok(verify_formulas(family, params, opts)?)
}

/// Rough peak memory of a closure with `n` members.
pub fn aut_memory_estimate(n: u64) -> u64 {
    n * BYTES_PER_AUT
}

pub fn cmd_aut(a: &AutArgs) -> Result<Report, CliError> {
    let (family, params) = a.group.resolve()?;
    let expected = expected_orders(family, params.m);
    let aut = expected.iter().find(|(n, _)| n == "aut").map(|e| e.1);
    if a.full {
        if let Some(n) = aut {
            eprintln!(
                "closure of {n} automorphisms needs about {} MiB",
                aut_memory_estimate(n) >> 20
            );
        }
    }
    if !a.filtration {
        let depth = if a.full { Depth::Full } else { Depth::Quick };
        return Ok(verify_structure(family, params, depth)?);
    }
    if family == Family::J && params.m >= 3 && !a.full {
        return Err(CliError::Usage("J at m >= 3 needs --full".into()));
    }
    let mut report = Report::new(ReportParams {
        command: "aut".into(),
        family: Some(family),
        m: Some(params.m),
        ell: Some(params.ell),
        ..Default::default()
    });
    let t = Instant::now();
    let set = closure(&standard_generators(family, params)?, DEFAULT_LIMIT)?;
    let ms = t.elapsed().as_millis() as u64;
    filtration(&set)?.add_to(&mut report);
    if let Some(c) = report.checks.iter_mut().find(|c| c.name == "aut") {
        c.elapsed_ms = ms;
    }
    report.recompute();
    Ok(report)
}

pub fn cmd_oddp(a: &OddpArgs) -> Result<Report, CliError> {
    let params = OddPrimeParams::new(a.p, a.m, a.ell)?;
    if a.range < 0 {
        return Err(CliError::Usage("--range must be non-negative".into()));
    }
    Ok(crate::oracle::oddp_range_check(params, a.range)?)
}

pub fn cmd_oracle(a: &OracleArgs) -> Result<Report, CliError> {
    let strategy = match a.strategy {
        StrategyArg::Hlt => Strategy::Hlt,
        StrategyArg::Felsch => Strategy::Felsch,
    };
    let pres = if let Some(f) = a.family {
        let params = GroupParams::new(a.m, a.ell)?;
        let default = Presentation::family(f.into(), params);
        let custom = a.max_cosets.is_some() || strategy != Strategy::Hlt;
        if !custom {
            let mode = if a.exhaustive {
                CheckMode::Exhaustive
            } else {
                CheckMode::Sampled {
                    n: a.samples,
                    seed: a.seed,
                }
            };
            return Ok(cross_check(f.into(), params, mode)?);
        }
        default
    } else if let Some(name) = &a.builtin {
        Presentation::builtin(name)?
    } else if let Some(path) = &a.file {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.clone(),
            source,
        })?;
        Presentation::parse(&path.display().to_string(), &text)?
    } else {
        return Err(CliError::Usage("give --family, --builtin or --file".into()));
    };
    let mut pres = pres.with_strategy(strategy);
    if let Some(cap) = a.max_cosets {
        pres = pres.with_max_cosets(cap);
    }
    enumerate_report(&pres)
}

/// Enumerate a presentation and record the table's basic facts.
fn enumerate_report(pres: &Presentation) -> Result<Report, CliError> {
    let mut report = Report::new(ReportParams {
        command: "oracle".into(),
        ..Default::default()
    });
    let t = Instant::now();
    let table = todd_coxeter(pres)?;
    let ms = t.elapsed().as_millis() as u64;
    let st = table.stats();
    report.check_that("coset_count", "recorded", table.len(), true, ms);
    report.check_that(
        "enumeration_stats",
        "recorded",
        format!(
            "defined {}, max live {} (~{} MiB), coincidences {}",
            st.defined,
            st.max_live,
            table_bytes(st.max_live) >> 20,
            st.coincidences
        ),
        true,
        0,
    );
    let t = Instant::now();
    report.check_eq(
        "columns_are_permutations",
        true,
        table.columns_are_permutations(),
        0,
    );
    report.check_eq(
        "relators_hold",
        true,
        table.satisfies(pres),
        t.elapsed().as_millis() as u64,
    );
    Ok(report)
}

/// The quick bundle behind a bare `report`: verification at m = 2 for every
/// family, Aut(K) at m = 2 and the odd-prime identities at p = 3.
pub fn default_bundle() -> Result<Report, CliError> {
    let mut report = Report::new(ReportParams {
        command: "report".into(),
        ..Default::default()
    });
    let params = GroupParams::new(2, 1)?;
    for family in [Family::J, Family::H, Family::K] {
        let opts = VerifyOptions {
            samples: 20_000,
            ..Default::default()
        };
        report.extend(prefixed(
            &family.to_string(),
            verify_formulas(family, params, opts)?,
        ));
    }
    report.extend(prefixed(
        "aut_K",
        verify_structure(Family::K, params, Depth::Quick)?,
    ));
    let oddp = crate::oracle::oddp_range_check(OddPrimeParams::new(3, 1, 1)?, 10)?;
    report.extend(prefixed("oddp", oddp));
    report.recompute();
    Ok(report)
}

fn prefixed(prefix: &str, mut r: Report) -> Report {
    for c in &mut r.checks {
        c.name = format!("{prefix}.{}", c.name);
    }
    r
}

/// Writes the report; returns the rendered text for printing.
pub fn cmd_report(a: &ReportArgs) -> Result<Report, CliError> {
    let report = match &a.input {
        Some(path) => {
            let s = fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Report::from_json(&s)
                .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?
        }
        None => default_bundle()?,
    };
    let body = if a.text {
        report.render_text()
    } else {
        report.to_json()
    };
    write(&a.out, &body)?;
    Ok(report)
}

fn write(path: &PathBuf, body: &str) -> Result<(), CliError> {
    fs::write(path, body).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })
}

fn output_of(cmd: &Command) -> Option<&Output> {
    match cmd {
        Command::VerifyFormulas(a) => Some(&a.output),
        Command::Aut(a) => Some(&a.output),
        Command::Oddp(a) => Some(&a.output),
        Command::Oracle(a) => Some(&a.output),
        Command::Report(_) => None,
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::VerifyFormulas(a) => cmd_verify_formulas(a),
        Command::Aut(a) => cmd_aut(a),
        Command::Oddp(a) => cmd_oddp(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Report(a) => cmd_report(a),
    }
}

/// Run, print and return the exit code: 0 pass, 1 failed check, 2 error.
pub fn main_with(cli: &Cli) -> i32 {
    let report = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    };
    let json = match &cli.command {
        Command::Report(a) => a.json,
        cmd => output_of(cmd).is_some_and(|o| o.json),
    };
    if json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_text());
    }
    if let Some(path) = output_of(&cli.command).and_then(|o| o.out.as_ref()) {
        if let Err(e) = write(path, &report.to_json()) {
            eprintln!("error: {e}");
            return e.exit_code();
        }
    }
    if report.pass {
        0
    } else {
        1
    }
}

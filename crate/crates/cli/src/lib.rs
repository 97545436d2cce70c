//! Command-line front end for `polyident`.
//!
//! Exit codes: 0 on success, 1 when a verification or consistency check
//! fails, 2 for usage, input and parse errors.

pub mod document;

use std::ffi::OsString;
use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use polyident::bench::{compare_methods, count_ops, Counted, Method, MethodInput, OpCountReport};
use polyident::ring::{MatrixRing, Polynomials, Rationals};
use polyident::verify::{run_suites, Suite, VerifyOptions};

use document::{parse_cli_scalar, parse_document, Kind, MatrixDocument, RingKind, Scalar};

/// Environment variable holding the worker-thread count.
pub const WORKERS_ENV: &str = "POLYIDENT_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "polyident",
    version,
    about = "Exact permanents and determinants through polarization identities"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate one function of a matrix or cube document.
    Compute(ComputeArgs),
    /// Run seeded oracle suites.
    Verify(VerifyArgs),
    /// Compare operation counts of all methods.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Function {
    Per,
    Det,
    Eper,
    Detp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodKind {
    Definitional,
    Identity,
    Ryser,
}

#[derive(Debug, Args)]
struct ComputeArgs {
    #[arg(long = "fn", value_enum)]
    function: Function,
    #[arg(long, value_enum)]
    method: MethodKind,
    /// Comma-separated free parameters: n values for per, one for det.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "delta")]
    gamma: Option<String>,
    /// Free element for eper.
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<String>,
    file: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteChoice {
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Cor1,
    Cor2,
    Polarization,
    All,
}

impl SuiteChoice {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteChoice::Thm2 => vec![Suite::Thm2],
            SuiteChoice::Thm3 => vec![Suite::Thm3],
            SuiteChoice::Thm4 => vec![Suite::Thm4],
            SuiteChoice::Thm5 => vec![Suite::Thm5],
            SuiteChoice::Cor1 => vec![Suite::Cor1],
            SuiteChoice::Cor2 => vec![Suite::Cor2],
            SuiteChoice::Polarization => vec![Suite::Polarization],
            SuiteChoice::All => Suite::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: SuiteChoice,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 20)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 2)]
    nmin: usize,
    #[arg(long, default_value_t = 5)]
    nmax: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Also write one JSON record per row to this file.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Add wall-clock seconds to every row (makes output nondeterministic).
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, thiserror::Error)]
enum Failure {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Check(String),
    #[error("output closed")]
    Closed,
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Check(_) => 1,
            Failure::Closed => 0,
        }
    }
}

impl From<polyident::Error> for Failure {
    fn from(e: polyident::Error) -> Self {
        match e {
            polyident::Error::Disagreement(_) => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Display) -> Failure {
    Failure::Usage(msg.to_string())
}

/// Reads the worker count from [`WORKERS_ENV`] and sizes the global pool.
/// Unset means one worker per core.
pub fn configure_workers() -> Result<(), String> {
    let Some(raw) = std::env::var_os(WORKERS_ENV) else {
        return Ok(());
    };
    let count = raw
        .to_str()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .filter(|&k| k > 0)
        .ok_or_else(|| format!("{WORKERS_ENV} must be a positive integer, got {raw:?}"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(count)
        .build_global()
        .map_err(|e| e.to_string())
}

/// Runs the command line `argv` (including the program name) and returns the
/// process exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Compute(args) => compute(&args, out),
        Command::Verify(args) => verify(&args, out),
        Command::Bench(args) => bench(&args, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Closed) => 0,
        Err(f) => {
            let _ = writeln!(err, "error: {f}");
            f.exit_code()
        }
    }
}

fn io_failure(e: std::io::Error) -> Failure {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        return Failure::Closed;
    }
    Failure::Usage(format!("writing output: {e}"))
}

fn resolve_method(function: Function, kind: MethodKind) -> Result<Method, Failure> {
    use Function::*;
    use MethodKind::*;
    Ok(match (function, kind) {
        (Per, Definitional) => Method::PerDefinitional,
        (Per, Identity) => Method::PerIdentity,
        (Per, Ryser) => Method::PerRyser,
        (Det, Definitional) => Method::DetDefinitional,
        (Det, Identity) => Method::DetIdentity,
        (Eper, Definitional) => Method::EperDefinitional,
        (Eper, Identity) => Method::EperIdentity,
        (Detp, Definitional) => Method::DetpDefinitional,
        (Detp, Identity) => Method::DetpIdentity,
        (_, Ryser) => return Err(usage("--method ryser is only available with --fn per")),
    })
}

/// Validates the free-parameter flags for `method` and parses them.
fn free_params(args: &ComputeArgs, method: Method, doc: &MatrixDocument) -> Result<Vec<Scalar>, Failure> {
    let (flag, given) = match (&args.gamma, &args.delta) {
        (Some(g), _) => ("--gamma", Some(g)),
        (_, Some(d)) => ("--delta", Some(d)),
        _ => ("", None),
    };
    let Some(text) = given else {
        return Ok(Vec::new());
    };
    let expected_flag = match method {
        Method::PerIdentity | Method::DetIdentity => "--gamma",
        Method::EperIdentity => "--delta",
        _ => return Err(usage(format!("{flag} is not accepted by {method}"))),
    };
    if flag != expected_flag {
        return Err(usage(format!("{method} takes {expected_flag}, not {flag}")));
    }
    let values = if flag == "--delta" {
        vec![parse_cli_scalar(doc.ring, text).map_err(usage)?]
    } else {
        text.split(',')
            .map(|s| parse_cli_scalar(doc.ring, s))
            .collect::<Result<Vec<_>, _>>()
            .map_err(usage)?
    };
    let wanted = method.free_param_count(doc.n);
    if values.len() != wanted {
        return Err(usage(format!(
            "{method} takes {wanted} value(s) in {flag}, got {}",
            values.len()
        )));
    }
    Ok(values)
}

fn compute(args: &ComputeArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let method = resolve_method(args.function, args.method)?;
    let text = std::fs::read_to_string(&args.file).map_err(|e| usage(format!("{}: {e}", args.file.display())))?;
    let doc = parse_document(&text).map_err(|e| usage(format!("{}: {e}", args.file.display())))?;
    let wanted_kind = if method.takes_cube() { Kind::Cube } else { Kind::Matrix };
    if doc.kind != wanted_kind {
        return Err(usage(format!(
            "{method} needs a {} document, got a {}",
            wanted_kind.name(),
            doc.kind.name()
        )));
    }
    let free = free_params(args, method, &doc)?;
    let cube = doc.kind == Kind::Cube;
    let (value, report) = match doc.ring {
        RingKind::Rational => {
            let input = if cube {
                MethodInput::Cube(doc.rational_cube())
            } else {
                MethodInput::Matrix(doc.rational_matrix())
            };
            let free: Vec<_> = free.iter().filter_map(Scalar::to_rational).collect();
            let counted = count_ops(&Rationals, method, &input, &free, false)?;
            if doc.all_integers() && free.iter().all(|g| g.is_integer()) && !counted.value.is_integer() {
                return Err(Failure::Check(format!(
                    "{method} returned {} for an integer input",
                    counted.value
                )));
            }
            rendered(counted)
        }
        RingKind::Symbolic => {
            let input = if cube {
                MethodInput::Cube(doc.poly_cube())
            } else {
                MethodInput::Matrix(doc.poly_matrix())
            };
            let free: Vec<_> = free.iter().filter_map(Scalar::to_poly).collect();
            rendered(count_ops(&Polynomials, method, &input, &free, false)?)
        }
        RingKind::Matrix2 => {
            let ring = MatrixRing::default();
            let input = if cube {
                MethodInput::Cube(doc.matrix2_cube())
            } else {
                MethodInput::Matrix(doc.matrix2_matrix())
            };
            let free: Vec<_> = free.iter().filter_map(Scalar::to_matrix2).collect();
            rendered(count_ops(&ring, method, &input, &free, false)?)
        }
    };
    writeln!(out, "value: {value}").map_err(io_failure)?;
    write_report(out, &report).map_err(io_failure)
}

fn rendered<E: Display>(c: Counted<E>) -> (String, OpCountReport) {
    (c.value.to_string(), c.report)
}

fn write_report(out: &mut dyn Write, r: &OpCountReport) -> std::io::Result<()> {
    writeln!(out, "method: {}", r.method)?;
    writeln!(out, "n: {}", r.n)?;
    writeln!(out, "adds: {}", r.adds)?;
    writeln!(out, "muls: {}", r.muls)?;
    writeln!(out, "powers: {}", r.powers)?;
    writeln!(out, "power_muls: {}", r.power_muls)?;
    writeln!(out, "int_divs: {}", r.int_divs)?;
    writeln!(out, "f_evals: {}", r.f_evals)?;
    if let Some(t) = r.wall_time_s {
        writeln!(out, "wall_time_s: {t}")?;
    }
    Ok(())
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let opts = VerifyOptions {
        n: args.n,
        trials: args.trials,
        seed: args.seed,
    };
    let lines = run_suites(&args.suite.suites(), &opts)?;
    let failed = lines.iter().filter(|l| !l.passed()).count();
    for line in &lines {
        writeln!(out, "{line}").map_err(io_failure)?;
    }
    writeln!(out, "summary: {} passed, {failed} failed", lines.len() - failed).map_err(io_failure)?;
    if failed > 0 {
        return Err(Failure::Check(format!("{failed} verification line(s) failed")));
    }
    Ok(())
}

fn bench(args: &BenchArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let table = compare_methods(args.nmin, args.nmax, args.seed, args.timing)?;
    out.write_all(table.to_text().as_bytes()).map_err(io_failure)?;
    if let Some(path) = &args.out {
        std::fs::write(path, table.to_records()).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

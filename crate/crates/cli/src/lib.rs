//! `cfrac` command-line front end: expansion, verification, tables, moment
//! scans and the algorithm benchmark, with `cfrac/1` JSON I/O.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

mod bench;
mod commands;
pub mod json;
mod weights;

/// Exit code for success.
pub const EXIT_OK: i32 = 0;
/// Malformed input or arguments.
pub const EXIT_MALFORMED: i32 = 1;
/// The computation itself failed; an error object is printed.
pub const EXIT_EXPANSION: i32 = 2;
/// A verification ran to completion and found a counterexample.
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "cfrac", version, about = "Exact continued-fraction expansion of truncated power series")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a series as a continued fraction.
    Expand(ExpandArgs),
    /// Run one of the verification checks.
    Verify(VerifyArgs),
    /// Print a Jacobi–Rogers or Stieltjes–Rogers table.
    Table(TableArgs),
    /// Find the first negative coefficient of a Stieltjes fraction.
    Moments(MomentsArgs),
    /// Time the quadratic and linear algorithms against each other.
    Bench(BenchArgs),
    /// List the built-in families.
    Catalog {
        #[command(subcommand)]
        what: CatalogCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum CatalogCommand {
    List {
        #[arg(long, value_enum, default_value_t = Output::Text)]
        output: Output,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Primitive,
    Refined,
}

#[derive(Clone, Debug, Args)]
pub struct SeriesArgs {
    /// JSON series description (`-` for standard input).
    #[arg(long, conflicts_with = "family")]
    pub input: Option<String>,
    /// Built-in family name.
    #[arg(long)]
    pub family: Option<String>,
    /// Family parameters as `k=v` (`sym` keeps a parameter symbolic).
    #[arg(long, num_args = 1.., value_delimiter = ',', value_parser = parse_kv)]
    pub params: Vec<(String, String)>,
}

#[derive(Clone, Debug, Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub series: SeriesArgs,
    #[arg(long)]
    pub order: Option<usize>,
    /// `c`, `s`, `j` or `custom:<M-list>`.
    #[arg(long, default_value = "c")]
    pub shape: String,
    #[arg(long, value_enum, default_value_t = Algorithm::Refined)]
    pub algorithm: Algorithm,
    /// Series description of the initial numerator `g_-1`.
    #[arg(long)]
    pub g_minus_one: Option<String>,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    pub output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Check {
    EulerGauss,
    Flajolet,
    Hankel,
    Gtable,
    Roundtrip,
}

#[derive(Clone, Debug, Args)]
pub struct WeightArgs {
    /// Stieltjes weights `alpha_1, alpha_2, ...`; the last value repeats.
    #[arg(long, conflicts_with_all = ["betas", "gammas"])]
    pub alphas: Option<String>,
    /// Jacobi weights `beta_1, beta_2, ...`; the last value repeats.
    #[arg(long, requires = "gammas")]
    pub betas: Option<String>,
    /// Jacobi weights `gamma_0, gamma_1, ...`; the last value repeats.
    #[arg(long, requires = "betas")]
    pub gammas: Option<String>,
    /// Domain of the weights; inferred from the variables used if absent.
    #[arg(long)]
    pub domain: Option<String>,
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub check: Check,
    #[command(flatten)]
    pub series: SeriesArgs,
    #[command(flatten)]
    pub weights: WeightArgs,
    #[arg(long)]
    pub order: Option<usize>,
    /// Hankel block or table size.
    #[arg(long)]
    pub size: Option<usize>,
    /// Number of recurrence levels for the Euler–Gauss check.
    #[arg(long, default_value_t = 6)]
    pub levels: usize,
    #[arg(long, default_value = "c")]
    pub shape: String,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    pub output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    #[value(name = "J")]
    J,
    #[value(name = "S")]
    S,
    #[value(name = "Sprime")]
    Sprime,
}

#[derive(Clone, Debug, Args)]
pub struct TableArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    #[command(flatten)]
    pub weights: WeightArgs,
    #[arg(long, default_value_t = 6)]
    pub size: usize,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    pub output: Output,
}

#[derive(Clone, Debug, Args)]
pub struct MomentsArgs {
    #[command(flatten)]
    pub series: SeriesArgs,
    /// Number of moments `a_0..a_N` to expand.
    #[arg(long)]
    pub budget: Option<usize>,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    pub output: Output,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgorithmChoice {
    Both,
    Primitive,
    Refined,
}

#[derive(Clone, Debug, Args)]
pub struct BenchArgs {
    /// `factorial` or `rising_factorial` (symbolic `a`).
    #[arg(long)]
    pub family: String,
    #[arg(long = "Ns", value_delimiter = ',', required = true)]
    pub ns: Vec<usize>,
    #[arg(long, value_enum, default_value_t = AlgorithmChoice::Both)]
    pub algorithms: AlgorithmChoice,
    /// Also write `N ms` pairs with their logarithms to this file.
    #[arg(long)]
    pub emit_plot: Option<String>,
}

fn parse_kv(s: &str) -> Result<(String, String), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("`{s}` is not of the form key=value"))?;
    Ok((k.trim().to_string(), v.trim().to_string()))
}

/// How a command ended, beyond plain success.
#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or unreadable input.
    Malformed(anyhow::Error),
    /// The library rejected the computation.
    Computation(cfrac::Error),
    /// Two code paths that must agree did not.
    Disagreement(Value),
    /// A check ran and failed; the report has been printed.
    CheckFailed,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Malformed(e)
    }
}

pub type CmdResult = Result<(), Failure>;

/// Wraps a library error from the computing phase.
pub(crate) fn computing<T>(r: cfrac::Result<T>) -> Result<T, Failure> {
    r.map_err(Failure::Computation)
}

pub(crate) fn print_json(out: &mut dyn Write, v: &impl serde::Serialize) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)
}

/// Parses the arguments, runs the command, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_MALFORMED } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let res = match &cli.command {
        Command::Expand(a) => commands::expand(a, out),
        Command::Verify(a) => commands::verify(a, out),
        Command::Table(a) => commands::table(a, out),
        Command::Moments(a) => commands::moments(a, out),
        Command::Bench(a) => bench::bench(a, out),
        Command::Catalog { what: CatalogCommand::List { output } } => commands::catalog_list(*output, out),
    };
    match res {
        Ok(()) => EXIT_OK,
        Err(Failure::Malformed(e)) => {
            let _ = writeln!(err, "error: {e:#}");
            EXIT_MALFORMED
        }
        Err(Failure::Computation(e)) => {
            let _ = print_json(out, &json::error_object(&e));
            let _ = writeln!(err, "error: {e}");
            EXIT_EXPANSION
        }
        Err(Failure::Disagreement(v)) => {
            let _ = print_json(out, &v);
            EXIT_EXPANSION
        }
        Err(Failure::CheckFailed) => EXIT_CHECK_FAILED,
    }
}

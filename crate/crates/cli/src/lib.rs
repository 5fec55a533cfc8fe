//! Front end for the `baker-gamma` binary. [`run`] parses arguments,
//! dispatches, writes the report to `out`, and returns the process exit
//! code: 0 pass/consistent, 1 fail/inconsistent, 2 usage, 3 I/O.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;

use baker_gamma::qcore::{UnitRational, DEFAULT_PREC_BITS};
use baker_gamma::Error;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

mod commands;
mod scan;
mod verify;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "baker-gamma", version, about = "Exact and interval certificates for log Γ(x) + log Γ(1 − x)")]
pub struct Cli {
    /// Working precision in bits.
    #[arg(long, global = true, env = "BG_PREC_BITS", default_value_t = DEFAULT_PREC_BITS)]
    pub prec: u32,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Minimal polynomial and isolating interval of sin(πx).
    Minpoly {
        x: UnitRational,
        #[arg(long, default_value_t = 40)]
        digits: usize,
    },
    /// Enclosures of f(x) and f′(x).
    Eval {
        x: UnitRational,
        #[arg(long, default_value_t = 40)]
        digits: usize,
        /// Also evaluate log Γ(x) + log Γ(1 − x) and intersect.
        #[arg(long)]
        verify: bool,
    },
    /// CSV of f over an equally spaced rational grid.
    Scan(ScanArgs),
    /// Run a built-in certificate.
    Verify {
        #[arg(value_enum)]
        check: verify::Check,
    },
    /// Analyze a hypothetical exception set.
    Exceptions {
        /// Comma-separated fractions, e.g. "1/3,2/3"; empty for the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    #[command(subcommand)]
    Period(PeriodCommand),
    /// The conditional π·e implication at y.
    Pie { y: UnitRational },
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[arg(long)]
    pub from: UnitRational,
    #[arg(long)]
    pub to: UnitRational,
    /// Number of intervals; the grid has steps + 1 points.
    #[arg(long)]
    pub steps: u32,
    /// Fractional digits of f_mid.
    #[arg(long, default_value_t = 20)]
    pub digits: usize,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub verify: bool,
}

#[derive(Subcommand, Debug)]
pub enum PeriodCommand {
    /// f(x2) − f(x1) = log sin(πx1) − log sin(πx2).
    Diff { x1: UnitRational, x2: UnitRational },
    /// Normalize and classify a period read from a JSON file.
    File { path: PathBuf },
}

/// Failure modes mapped onto exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Internal(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_IO,
            CliError::Internal(_) => EXIT_FAIL,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Internal(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Domain(_) | Error::Parse(_) => CliError::Usage(e.to_string()),
            _ => CliError::Internal(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Pretty JSON followed by a newline.
pub(crate) fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    let s = serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))?;
    writeln!(out, "{s}").map_err(|e| CliError::Io(e.to_string()))
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> CliResult<i32> {
    let prec = cli.prec;
    match cli.command {
        Command::Minpoly { x, digits } => commands::minpoly(&x, digits, out),
        Command::Eval { x, digits, verify } => commands::eval(&x, prec, digits, verify, out),
        Command::Scan(args) => scan::run(&args, prec, out),
        Command::Verify { check } => verify::run(check, prec, out),
        Command::Exceptions { set } => commands::exceptions(&set, out),
        Command::Period(PeriodCommand::Diff { x1, x2 }) => commands::period_diff(&x1, &x2, prec, out),
        Command::Period(PeriodCommand::File { path }) => commands::period_file(&path, prec, out),
        Command::Pie { y } => commands::pie(&y, prec, out),
    }
}

/// Entry point shared by the binary and tests.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "{e}");
            e.code()
        }
    }
}

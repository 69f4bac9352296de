//! Command-line front end.

pub mod parse;
pub mod report;
pub mod selftest;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, ErrorKind};
use crate::partition::PartitionInputs;
use crate::seifert::SeifertData;

pub use parse::{parse_cs_values, parse_raw, parse_seifert};
pub use report::{InvariantReport, Render};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_NUMERIC: i32 = 4;

pub fn exit_code(e: &Error) -> i32 {
    match e.kind() {
        ErrorKind::Input => EXIT_INPUT,
        ErrorKind::Domain => EXIT_DOMAIN,
        ErrorKind::Numeric => EXIT_NUMERIC,
    }
}

fn kind_name(e: &Error) -> &'static str {
    match e.kind() {
        ErrorKind::Input => "input",
        ErrorKind::Domain => "domain",
        ErrorKind::Numeric => "numeric",
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "seifert-torsion", version, about = "Closed-form torsion and Chern-Simons invariants of Seifert manifolds")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Rank N of the torus gauge group.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..), global = true)]
    gauge_rank: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Seifert data, e.g. "[0,-1;(2,1),(3,1),(5,1)]".
    #[arg(long)]
    data: Option<String>,

    /// Batch file with one datum per line.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full invariant report.
    Invariants(Source),
    /// First homology and the torsion of H^2.
    Homology(Source),
    /// Analytic torsion and its volume normalization.
    Torsion(Source),
    /// Dedekind sum s(alpha, beta).
    Dedekind {
        #[arg(long, allow_negative_numbers = true)]
        alpha: i64,
        #[arg(long, allow_negative_numbers = true)]
        beta: i64,
    },
    /// Residuals of the zeta kernels against known closed forms.
    ZetaSelftest,
    /// Chern-Simons partition-function magnitudes.
    Partition {
        #[arg(long)]
        data: String,
        /// Level k >= 1.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        level: u64,
        /// Chern-Simons values (radians), JSON array or one per line.
        #[arg(long)]
        cs_file: PathBuf,
        /// Gravitational phase exponent phi, contributing exp(i phi).
        #[arg(long, allow_negative_numbers = true)]
        grav_phase: Option<f64>,
    },
}

struct Io<'a> {
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    format: Format,
}

impl Io<'_> {
    fn emit<R: Render>(&mut self, report: &R) -> i32 {
        let rendered = match self.format {
            Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
            Format::Text => report.text(),
        };
        let _ = self.out.write_all(rendered.as_bytes());
        EXIT_OK
    }

    fn fail(&mut self, e: &Error) -> i32 {
        let _ = writeln!(self.err, "error: {e}");
        exit_code(e)
    }
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_INPUT
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let mut io = Io { out, err, format: cli.format };
    let n = cli.gauge_rank;
    match cli.command {
        Command::Invariants(src) => per_datum(&mut io, &src, n, report::invariant_report),
        Command::Homology(src) => per_datum(&mut io, &src, n, report::homology_report),
        Command::Torsion(src) => per_datum(&mut io, &src, n, report::torsion_summary),
        Command::Dedekind { alpha, beta } => match report::dedekind_report(alpha, beta) {
            Ok(r) => io.emit(&r),
            Err(e) => io.fail(&e),
        },
        Command::ZetaSelftest => zeta_selftest(&mut io),
        Command::Partition { data, level, cs_file, grav_phase } => {
            partition(&mut io, &data, n, level, &cs_file, grav_phase)
        }
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse {
        offset: 0,
        expected: format!("readable file {} ({e})", path.display()),
    })
}

fn per_datum<R, F>(io: &mut Io<'_>, src: &Source, gauge_rank: u32, compute: F) -> i32
where
    R: Render + Send,
    F: Fn(&SeifertData, u32) -> crate::Result<R> + Sync,
{
    if let Some(text) = &src.data {
        return match parse_seifert(text).and_then(|d| compute(&d, gauge_rank)) {
            Ok(r) => io.emit(&r),
            Err(e) => io.fail(&e),
        };
    }
    let path = src.input.as_ref().expect("clap enforces one source");
    match read_file(path) {
        Ok(body) => batch(io, &body, gauge_rank, compute),
        Err(e) => io.fail(&e),
    }
}

#[derive(Serialize)]
struct ErrorRecord<'a> {
    line: usize,
    input: &'a str,
    error: ErrorDetail,
}

#[derive(Serialize)]
struct ErrorDetail {
    kind: &'static str,
    message: String,
}

/// One output record per input line, in input order. A failing line yields
/// an error record; the exit code is the most severe per-line code.
fn batch<R, F>(io: &mut Io<'_>, body: &str, gauge_rank: u32, compute: F) -> i32
where
    R: Render + Send,
    F: Fn(&SeifertData, u32) -> crate::Result<R> + Sync,
{
    let lines: Vec<&str> = body.lines().collect();
    let results: Vec<crate::Result<R>> = lines
        .par_iter()
        .map(|line| parse_seifert(line).and_then(|d| compute(&d, gauge_rank)))
        .collect();

    let mut code = EXIT_OK;
    let mut buf = String::new();
    for (idx, (line, result)) in lines.iter().zip(&results).enumerate() {
        let lineno = idx + 1;
        match result {
            Ok(r) => match io.format {
                Format::Json => buf.push_str(&serde_json::to_string(r).expect("report serializes")),
                Format::Text => buf.push_str(&r.line()),
            },
            Err(e) => {
                code = code.max(exit_code(e));
                let _ = writeln!(io.err, "line {lineno}: error: {e}");
                match io.format {
                    Format::Json => {
                        let rec = ErrorRecord {
                            line: lineno,
                            input: line,
                            error: ErrorDetail { kind: kind_name(e), message: e.to_string() },
                        };
                        buf.push_str(&serde_json::to_string(&rec).expect("record serializes"));
                    }
                    Format::Text => buf.push_str(&format!("error line {lineno}: {e}")),
                }
            }
        }
        buf.push('\n');
    }
    let _ = io.out.write_all(buf.as_bytes());
    code
}

fn zeta_selftest(io: &mut Io<'_>) -> i32 {
    let checks = match selftest::run_battery() {
        Ok(c) => c,
        Err(e) => return io.fail(&e),
    };
    let all_pass = checks.iter().all(|c| c.pass);
    match io.format {
        Format::Json => {
            let _ = writeln!(io.out, "{}", serde_json::to_string_pretty(&checks).expect("checks serialize"));
        }
        Format::Text => {
            for c in &checks {
                let _ = writeln!(
                    io.out,
                    "{} {:<60} residual {:.3e} (tol {:.0e})",
                    if c.pass { "PASS" } else { "FAIL" },
                    c.name,
                    c.residual,
                    c.tolerance
                );
            }
        }
    }
    if all_pass {
        EXIT_OK
    } else {
        let _ = writeln!(io.err, "error: zeta self-test residuals exceed tolerance");
        EXIT_NUMERIC
    }
}

fn partition(
    io: &mut Io<'_>,
    data: &str,
    gauge_rank: u32,
    level: u64,
    cs_file: &Path,
    grav_phase: Option<f64>,
) -> i32 {
    let result = parse_seifert(data).and_then(|d| {
        let cs_values = parse_cs_values(&read_file(cs_file)?)?;
        let inputs = PartitionInputs { data: d, gauge_rank, level, cs_values, grav_phase };
        report::partition_report(&inputs)
    });
    match result {
        Ok(r) => io.emit(&r),
        Err(e) => io.fail(&e),
    }
}

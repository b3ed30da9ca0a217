//! `diolab`: command-line front end over the exact-arithmetic laboratory.
//! Curve construction, bounded system enumeration, the claims audit, the
//! impossibility scans, and the quartic mapping, all emitting deterministic
//! machine-readable reports.
//!
//! Exit codes: 0 success, 1 usage or invalid input, 2 a hard invariant of
//! the artifact itself failed (never a mere claim failure), 3 internal error.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

#[derive(Parser)]
#[command(
    name = "diolab",
    version,
    about = "Exact-arithmetic laboratory for double equations and their curves"
)]
struct Cli {
    #[command(flatten)]
    output: OutputOptions,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOptions {
    /// Report format on stdout (or --out file).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Append a one-line JSON summary of the run to this file.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Worker threads for the data-parallel scans (output is unaffected).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Include wall-clock timing in the report (reports stop being
    /// byte-reproducible across runs).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Curves of a coefficient triple (a, b, a+b): the Frey-type curve, the
    /// two companions, the discriminant quantity and the reflection checks.
    Frey {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
        b: BigInt,
    },

    /// Run the full claims registry on every solution of both systems.
    Audit {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
        b: BigInt,
        #[arg(long)]
        pq_bound: u64,
    },

    /// Enumerate solutions of one system or quartic variant.
    Enumerate {
        #[arg(long, value_parser = parse_system)]
        system: diolab_core::systems::SystemKind,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
        b: BigInt,
        #[arg(long)]
        pq_bound: u64,
        /// Also try each triangle with the legs swapped.
        #[arg(long)]
        allow_swap: bool,
        /// Report joint solvability of both systems instead of one listing
        /// (with --shared-wtv requiring a common triangle).
        #[arg(long)]
        joint: bool,
        #[arg(long, requires = "joint")]
        shared_wtv: bool,
    },

    /// Exhaustive bounded scan of one equation family.
    Descent {
        #[arg(long, value_parser = parse_family_name)]
        family: FamilyName,
        #[arg(long)]
        bound: u64,
        /// Exponent parameter for the lebesgue family (n >= 3).
        #[arg(long)]
        n: Option<u32>,
    },

    /// Search for simultaneous squares X^2 + mY^2, X^2 + nY^2.
    Concordant {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
        m: BigInt,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
        n: BigInt,
        #[arg(long)]
        bound: u64,
    },

    /// Membership, quadric pair and cubic image of a point on an oblique
    /// quartic Omega(A, B, C; alpha, beta, gamma).
    Quartic {
        #[arg(long = "A", allow_hyphen_values = true, value_parser = parse_bigint)]
        a: BigInt,
        #[arg(long = "B", allow_hyphen_values = true, value_parser = parse_bigint)]
        b: BigInt,
        #[arg(long = "C", allow_hyphen_values = true, value_parser = parse_bigint)]
        c: BigInt,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
        alpha: BigInt,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
        beta: BigInt,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_bigint)]
        gamma: BigInt,
        /// Homogeneous coordinates U,V,W,T.
        #[arg(long)]
        point: String,
    },

    /// Print the machine-readable claims registry.
    Claims,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum FamilyName {
    QuarticSum,
    QuarticDiff,
    SumToFourth,
    DiffToFourth,
    Lebesgue,
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.parse::<BigInt>().map_err(|e| e.to_string())
}

fn parse_system(s: &str) -> Result<diolab_core::systems::SystemKind, String> {
    use diolab_core::systems::SystemKind;
    SystemKind::ALL
        .iter()
        .copied()
        .find(|k| k.slug() == s)
        .ok_or_else(|| {
            format!(
                "unknown system '{s}' (expected one of: {})",
                SystemKind::ALL.map(|k| k.slug()).join(", ")
            )
        })
}

fn parse_family_name(s: &str) -> Result<FamilyName, String> {
    match s {
        "quartic-sum" => Ok(FamilyName::QuarticSum),
        "quartic-diff" => Ok(FamilyName::QuarticDiff),
        "sum-to-fourth" => Ok(FamilyName::SumToFourth),
        "diff-to-fourth" => Ok(FamilyName::DiffToFourth),
        "lebesgue" => Ok(FamilyName::Lebesgue),
        other => Err(format!(
            "unknown family '{other}' (expected quartic-sum, quartic-diff, \
             sum-to-fourth, diff-to-fourth or lebesgue)"
        )),
    }
}

/// Errors carrying their exit code: 1 for bad input, 3 for internal trouble.
pub enum CliError {
    Usage(String),
    Invariant(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Invariant(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Invariant(m) | CliError::Internal(m) => m,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };

    if cli.output.jobs == 0 {
        eprintln!("error: --jobs must be at least 1");
        return ExitCode::from(1);
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.output.jobs)
        .build_global()
    {
        eprintln!("error: failed to configure worker threads: {e}");
        return ExitCode::from(3);
    }

    let started = Instant::now();
    let mut report = match commands::run(&cli.command) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {}", e.message());
            return ExitCode::from(e.code());
        }
    };
    if cli.output.timing {
        report.elapsed_ms = Some(started.elapsed().as_millis());
    }

    let rendered = match cli.output.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    if let Some(path) = &cli.output.out {
        if let Err(e) = std::fs::write(path, &rendered) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(3);
        }
    } else {
        print!("{rendered}");
    }
    if let Some(path) = &cli.output.cache {
        if let Err(e) = report.append_cache(path) {
            eprintln!("error: cannot append to cache {}: {e}", path.display());
            return ExitCode::from(3);
        }
    }
    ExitCode::SUCCESS
}

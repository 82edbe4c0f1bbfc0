use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use wheel_pinv::bench::{bench_csv, run_bench, BenchConfig, Method};
use wheel_pinv::io::{write_alphas, write_matrix, Format};
use wheel_pinv::{
    alpha_table, closed_form_pinv, distance_matrix_closed, mp_pinv_oracle, run_verification,
    special_laplacian, VerifyOptions,
};

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact Moore–Penrose inverse of odd wheel distance matrices.
#[derive(Debug, Parser)]
#[command(name = "wheelpinv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Latex,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
            FormatArg::Latex => Format::Latex,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Closed,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Closed => Method::Closed,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Distance matrix D of W_n.
    Dist {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
    },
    /// Moore–Penrose inverse of D.
    Pinv {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "closed")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
    },
    /// The special Laplacian L̃.
    Slap {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
    },
    /// The coefficients α_1, …, α_m.
    Alphas {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: FormatArg,
    },
    /// Run every check for odd n in 5..=n-max.
    Verify {
        #[arg(long = "n-max")]
        n_max: usize,
        /// Write the JSON report here instead of standard output.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Tamper with one entry of L̃ first (test hook).
        #[arg(long, hide = true)]
        perturb: bool,
    },
    /// Time closed-form assembly against the general inverse.
    Bench {
        #[arg(long = "n-list", value_delimiter = ',', required = true)]
        n_list: Vec<usize>,
        #[arg(
            long,
            value_enum,
            value_delimiter = ',',
            default_value = "closed,oracle"
        )]
        methods: Vec<MethodArg>,
        #[arg(long, default_value_t = wheel_pinv::bench::DEFAULT_REPEATS)]
        repeats: usize,
        #[arg(long = "oracle-cutoff", default_value_t = wheel_pinv::bench::DEFAULT_ORACLE_CUTOFF)]
        oracle_cutoff: usize,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<wheel_pinv::Error> for Failure {
    fn from(e: wheel_pinv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

fn emit(text: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Dist { n, format } => {
            let d = distance_matrix_closed(n)?;
            emit(&write_matrix(&d.mat, format.into()))
        }
        Command::Pinv { n, method, format } => {
            let k = match method {
                MethodArg::Closed => closed_form_pinv(n)?.k,
                MethodArg::Oracle => mp_pinv_oracle(&distance_matrix_closed(n)?.mat),
            };
            emit(&write_matrix(&k, format.into()))
        }
        Command::Slap { n, format } => {
            let l = special_laplacian(n)?;
            emit(&write_matrix(&l.mat, format.into()))
        }
        Command::Alphas { n, format } => {
            let table = alpha_table(n)?;
            emit(&write_alphas(n, &table.alphas, format.into()))
        }
        Command::Verify {
            n_max,
            report,
            perturb,
        } => {
            let rep = run_verification(n_max, VerifyOptions { perturb })?;
            let json = rep.to_json();
            match &report {
                Some(path) => fs::write(path, &json)
                    .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
                None => emit(&json)?,
            }
            for c in rep.failures() {
                eprintln!("FAIL n={} {}: {}", c.n, c.check_id, c.detail);
            }
            let failed = rep.failures().count();
            eprintln!(
                "{} checks over n = 5..={n_max}, {failed} failed",
                rep.checks.len()
            );
            if rep.overall {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Bench {
            n_list,
            methods,
            repeats,
            oracle_cutoff,
        } => {
            let config = BenchConfig {
                n_list,
                methods: methods.into_iter().map(Method::from).collect(),
                repeats,
                oracle_cutoff,
            };
            let records = run_bench(&config)?;
            emit(&bench_csv(&records))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(EXIT_FAILED),
        Err(Failure::Usage(msg)) => {
            eprintln!("wheelpinv: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

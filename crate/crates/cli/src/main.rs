use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sx_core::{Measure, SxError};

mod commands;
mod expect;

/// Clique complexes and simplicial centralities of undirected networks.
#[derive(Debug, Parser)]
#[command(name = "sx", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the summary row: vertices, edges, clique counts, clique number.
    Cliques {
        matrix: PathBuf,
        /// JSON file of expected counts; any mismatch exits with status 1.
        #[arg(long)]
        expect: Option<PathBuf>,
        /// Also list every simplex of this level.
        #[arg(long, value_name = "K")]
        list: Option<usize>,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Connectivity verdict per simplex level.
    Connectivity {
        matrix: PathBuf,
        /// Every level up to the complex dimension instead of 0-2.
        #[arg(long)]
        all_levels: bool,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Run the full centrality analysis and write a report.
    Analyze {
        matrix: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
        levels: Vec<usize>,
        #[arg(long)]
        all_levels: bool,
        #[arg(
            long,
            value_delimiter = ',',
            default_value = "degree,closeness,betweenness,eigenvector,subgraph"
        )]
        measures: Vec<Measure>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = sx_core::centrality::DEFAULT_EIGEN_MAX_ITER)]
        max_iter: usize,
        /// Size of the cross-level lift table.
        #[arg(long, default_value_t = 5)]
        top: usize,
        /// Network name stored in the report (defaults to the file stem).
        #[arg(long)]
        name: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Report file (json) or directory (csv).
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        input: InputArgs,
    },
    /// Compare the rankings of one measure across levels of a saved report.
    Compare {
        report: PathBuf,
        #[arg(long)]
        measure: Measure,
        #[arg(long, default_value_t = 10)]
        top: usize,
    },
    /// Render SVG charts (and their data as CSV) from a saved report.
    Plot {
        report: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Keep vertices without edges (dropped by default).
    #[arg(long)]
    keep_isolated: bool,
    /// Highest simplex dimension to build.
    #[arg(long, value_name = "D")]
    max_dim: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Failure of a subcommand, mapped onto the documented exit statuses.
#[derive(Debug)]
enum Failure {
    Input(String),
    NoConvergence(String),
    Io(String),
}

impl From<SxError> for Failure {
    fn from(e: SxError) -> Self {
        match e {
            SxError::NoConvergence { .. } => Failure::NoConvergence(e.to_string()),
            SxError::Io { .. } => Failure::Io(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 1,
            Failure::NoConvergence(_) => 2,
            Failure::Io(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::NoConvergence(m) | Failure::Io(m) => m,
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("SX_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Failure::Input(format!("SX_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Input(format!("cannot configure {n} threads: {e}")))
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();

    // clap's own usage errors exit with 2, which is reserved for non-convergence
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };

    let result = configure_threads().and_then(|()| commands::run(cli.command));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("sx: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use specht::{GarnirPolicy, Partition, PolicyKind, Tableau};
use specht_cli::commands::{self, guard_with, CliError};
use specht_cli::{Format, Report, Status};

/// Exact checks of Garnir presentations of Specht modules.
#[derive(Parser)]
#[command(name = "specht", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format: text, csv or json.
    #[arg(long, global = true, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Does a relation set present S^λ?
    Check {
        #[arg(long)]
        shape: Partition,
        #[arg(long, default_value = "max")]
        policy: PolicyKind,
        /// Only use column-strict t in g^t_{c,k}.
        #[arg(long)]
        column_strict_only: bool,
        /// Cap on the number of tableaux enumerated.
        #[arg(long)]
        guard_dim: Option<usize>,
    },
    /// Eigenvalues and multiplicities of the Garnir operator on V_{n,m}.
    Spectrum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Verdicts for every shape of size up to --n-max.
    Scan {
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value = "max")]
        policy: PolicyKind,
        #[arg(long)]
        column_strict_only: bool,
        #[arg(long)]
        guard_dim: Option<usize>,
    },
    /// Irreducible decomposition of V_{n,m} and of each eigenspace.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// A single Garnir relation, raw and straightened.
    Garnir {
        #[arg(long)]
        shape: Option<Partition>,
        /// Rows separated by '/', e.g. "1 5 7/2 6/3/4".
        #[arg(long)]
        tableau: Tableau,
        /// 1-based column c; the relation exchanges with column c+1.
        #[arg(long)]
        column: usize,
        /// Defaults to the length of column c+1.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Worked examples and the two-column spectrum suite.
    Selftest {
        #[arg(long, default_value_t = 12)]
        nm_max: usize,
    },
}

fn policy(kind: PolicyKind, column_strict_only: bool) -> GarnirPolicy {
    let p = GarnirPolicy::new(kind);
    if column_strict_only {
        p.column_strict()
    } else {
        p
    }
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("SPECHT_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("SPECHT_THREADS must be a non-negative integer, got '{raw}'")))?;
    if threads > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    Ok(())
}

fn run(command: Command) -> Result<Report, CliError> {
    configure_threads()?;
    match command {
        Command::Check {
            shape,
            policy: kind,
            column_strict_only,
            guard_dim,
        } => commands::check(&shape, &policy(kind, column_strict_only), &guard_with(guard_dim)),
        Command::Spectrum { n, m } => commands::spectrum(n, m),
        Command::Scan {
            n_max,
            policy: kind,
            column_strict_only,
            guard_dim,
        } => commands::scan(n_max, &policy(kind, column_strict_only), &guard_with(guard_dim)),
        Command::Decompose { n, m } => commands::decompose(n, m),
        Command::Garnir {
            shape,
            tableau,
            column,
            k,
        } => commands::garnir(shape.as_ref(), &tableau, column, k),
        Command::Selftest { nm_max } => commands::selftest(nm_max),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(report) => {
            print!("{}", report.render(cli.format));
            match report.status {
                Status::Fail => ExitCode::from(2),
                Status::Pass | Status::Observation => ExitCode::SUCCESS,
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use hskein::present::{Bounds, Mode};
use hskein::Exec;
use hskein_cli::commands::{self, PathMap, Report};
use hskein_cli::error::EXIT_NOT_FOUND;
use hskein_cli::examples;
use hskein_cli::CliError;

/// q-homotopy skein modules: freeness verdicts, linking modules, presentations.
///
/// MANIFOLD is `catalog:<name>`, a descriptor file, or a bare catalog name.
#[derive(Parser)]
#[command(name = "hskein", version)]
struct Cli {
    /// Print the machine-readable payload instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Disable the data-parallel paths.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Freeness verdicts for H(M) and C(M).
    Analyze { manifold: String },
    /// λ(α) and the linking summand of a wrapping class.
    Linking { manifold: String, alpha: String },
    /// Skein closure of seed classes.
    Closure {
        manifold: String,
        #[arg(long, required = true)]
        seeds: Vec<String>,
        #[arg(long, env = "HSKEIN_CONJ_BOUND", default_value_t = 1)]
        conj_bound: usize,
    },
    /// Evaluates s, s_f or s_if on a path literal.
    PathEval {
        path: String,
        #[arg(long, value_enum, default_value = "s")]
        map: PathMap,
        /// Read labels as wrapping classes of this manifold.
        #[arg(long)]
        manifold: Option<String>,
    },
    /// Presentation matrix of the skein closure of the seeds.
    Present {
        manifold: String,
        #[arg(long, required = true)]
        seeds: Vec<String>,
        #[arg(long, default_value = "r")]
        mode: Mode,
        #[arg(long, env = "HSKEIN_CONJ_BOUND", default_value_t = 1)]
        conj_bound: usize,
        #[arg(long, default_value_t = 1)]
        coset_bound: usize,
        /// Search the rows for torsion certificates.
        #[arg(long)]
        certify: bool,
    },
    /// Replays the worked examples; `all` runs every one.
    Examples {
        #[arg(default_value = "all")]
        name: String,
    },
    /// Lists catalog entries, or prints one descriptor.
    Catalog { name: Option<String> },
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    match &cli.command {
        Command::Analyze { manifold } => Ok(commands::analyze(&commands::load(manifold)?)),
        Command::Linking { manifold, alpha } => commands::linking(&commands::load(manifold)?, alpha),
        Command::Closure {
            manifold,
            seeds,
            conj_bound,
        } => {
            let m = commands::load(manifold)?;
            let seeds = commands::parse_seeds(&m, seeds)?;
            Ok(commands::closure(&m, &seeds, *conj_bound, exec))
        }
        Command::PathEval { path, map, manifold } => {
            let m = manifold.as_deref().map(commands::load).transpose()?;
            commands::path_eval(path, *map, m.as_ref())
        }
        Command::Present {
            manifold,
            seeds,
            mode,
            conj_bound,
            coset_bound,
            certify,
        } => {
            let m = commands::load(manifold)?;
            let seeds = commands::parse_seeds(&m, seeds)?;
            let bounds = Bounds {
                conj: *conj_bound,
                coset: *coset_bound,
            };
            commands::present(&m, &seeds, *mode, bounds, *certify, exec)
        }
        Command::Examples { name } => {
            let outcomes = if name == "all" {
                examples::run_all()?
            } else {
                vec![examples::run(name)?]
            };
            let text: String = outcomes.iter().map(|o| o.render()).collect();
            let _ = std::io::stdout().write_all(text.as_bytes());
            let failed: usize = outcomes.iter().flat_map(|o| &o.checks).filter(|c| !c.pass).count();
            if failed > 0 {
                return Err(CliError::Mismatch(failed));
            }
            let total: usize = outcomes.iter().map(|o| o.checks.len()).sum();
            Ok(Report {
                text: format!("all {total} checks passed\n"),
                payload: serde_json::Value::Null,
            })
        }
        Command::Catalog { name } => commands::catalog(name.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let out = if cli.json {
                format!("{}\n", serde_json::to_string_pretty(&report.payload).expect("json"))
            } else {
                report.text
            };
            // a closed pipe (`| head`) is not an error
            let _ = std::io::stdout().write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = e.exit_code();
            ExitCode::from(u8::try_from(code).unwrap_or(EXIT_NOT_FOUND as u8))
        }
    }
}

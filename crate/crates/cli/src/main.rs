use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod pretty;

use commands::{Output, Range};

/// Reports on stable Kneser graphs SG(n,k): graphs, complexes, the
/// alternating matroid, characteristic classes and the Borsuk-graph geometry.
///
/// Set SGTOPO_WORKERS to bound the worker pool used by sweeps.
#[derive(Parser, Debug)]
#[command(name = "sgtopo", version)]
struct Cli {
    /// Human-readable tables instead of JSON / CSV.
    #[arg(long, global = true)]
    pretty: bool,

    /// Write the report here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build SG(n,k) and optionally colour it and count its automorphisms.
    Graph {
        n: usize,
        k: usize,
        /// Exact chromatic number with a witness colouring.
        #[arg(long)]
        chromatic: bool,
        /// Check that deleting any vertex lowers the chromatic number.
        #[arg(long)]
        critical: bool,
        /// Order of the automorphism group.
        #[arg(long)]
        aut: bool,
    },
    /// Z2 Betti numbers of Hom(K2, SG(n,k)) and of the neighbourhood complex.
    Homology { n: usize, k: usize },
    /// Covector and cocircuit counts of C^{m,k+1} with a numeric realization check.
    Matroid {
        m: usize,
        k: usize,
        /// Random points for the realization check.
        #[arg(long, default_value_t = 20_000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Include the full covector list.
        #[arg(long)]
        list: bool,
    },
    /// Test-graph classification over a range of n.
    Classify {
        #[arg(long)]
        k: usize,
        /// Inclusive range such as 1..10.
        #[arg(long, default_value = "1..10")]
        n_range: Range,
        #[arg(long, default_value_t = 64)]
        max_degree: u32,
    },
    /// Vertex norms, edge defects and equivariance deviations as CSV.
    Geometry {
        /// Single n; ignored when --sweep is given.
        #[arg(long, required_unless_present = "sweep")]
        n: Option<usize>,
        #[arg(long)]
        k: usize,
        /// Inclusive n range such as 2..30.
        #[arg(long)]
        sweep: Option<Range>,
        /// Sampled sphere points per row.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Largest acceptable equivariance deviation.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
}

fn run(cli: Cli) -> Result<Output, String> {
    let pretty = cli.pretty;
    match cli.command {
        Command::Graph { n, k, chromatic, critical, aut } => commands::graph(n, k, chromatic, critical, aut, pretty),
        Command::Homology { n, k } => commands::homology(n, k, pretty),
        Command::Matroid { m, k, samples, seed, list } => commands::matroid(m, k, samples, seed, list, pretty),
        Command::Classify { k, n_range, max_degree } => commands::classify(k, n_range, max_degree, pretty),
        Command::Geometry { n, k, sweep, samples, seed, tol } => {
            let range = sweep.unwrap_or_else(|| {
                let n = n.expect("clap enforces --n without --sweep");
                Range { lo: n, hi: n }
            });
            commands::geometry(k, range, samples, seed, tol, pretty)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let path = cli.output.clone();
    match run(cli) {
        Ok(out) => {
            let written = match &path {
                Some(p) => fs::write(p, &out.text).map_err(|e| format!("{}: {e}", p.display())),
                None => {
                    print!("{}", out.text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            for v in &out.violations {
                eprintln!("violation: {v}");
            }
            if out.violations.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

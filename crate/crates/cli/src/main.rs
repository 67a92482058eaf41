//! `apolar-lab`: inverse systems, symmetric decompositions and Poincaré series
//! from the command line.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "apolar-lab", version, about = "Macaulay inverse systems and Poincaré series of Gorenstein algebras")]
pub struct Cli {
    /// Emit the machine-readable report instead of tables.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Record wall-clock time in the report (breaks byte-reproducibility).
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Expr {
    /// Polynomial in y1..yn, e.g. "y1^3 + y2^2 + y3^2".
    pub expr: String,
    /// Number of variables; defaults to the largest index used.
    #[arg(long)]
    pub nvars: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hilbert function, socle degree, capital degree and length.
    Hilbert(Expr),
    /// Minimal generators of the apolar ideal.
    Ann(Expr),
    /// Symmetric decomposition of the associated graded algebra and f_h.
    Decompose(Expr),
    /// Betti numbers of the residue field from a minimal resolution.
    Betti {
        #[command(flatten)]
        expr: Expr,
        #[arg(long, default_value_t = 6)]
        pmax: usize,
    },
    /// Predicted Poincaré series checked against the resolution.
    Poincare {
        #[command(flatten)]
        expr: Expr,
        #[arg(long, default_value_t = 6)]
        pmax: usize,
    },
    /// Which rationality criteria apply.
    Classify {
        expr: Option<String>,
        #[arg(long)]
        nvars: Option<usize>,
        /// Hilbert function as a comma-separated list.
        #[arg(long, value_delimiter = ',', conflicts_with = "expr")]
        hilbert: Option<Vec<usize>>,
        #[arg(long, requires = "hilbert")]
        dim: Option<usize>,
    },
    /// Annihilator of G + H (disjoint variables) or of G + sum of n - m squares.
    Split {
        #[arg(long)]
        g: String,
        #[arg(long, conflicts_with = "n")]
        h: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Admissible symmetric decomposition tables.
    Enumerate {
        #[arg(long)]
        sdeg: usize,
        #[arg(long, default_value_t = 16)]
        max_dim: usize,
        #[arg(long, default_value_t = 4)]
        max_h2: usize,
    },
    /// Run a seeded verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let echo: Vec<String> = std::env::args().skip(1).filter(|a| a != "--timing").collect();
    let start = std::time::Instant::now();
    match commands::run(&cli, echo) {
        Ok(mut out) => {
            if cli.timing {
                out.report.timing_ms = Some(start.elapsed().as_millis() as u64);
            }
            let mut stdout = std::io::stdout().lock();
            let text = if cli.json {
                serde_json::to_string_pretty(&out.report).expect("report serializes") + "\n"
            } else {
                out.text
            };
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "segrelab", version)]
#[command(about = "Exact checks for the Segre embedding of a plane cubic times P^1")]
struct Cli {
    #[command(flatten)]
    common: Common,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Characteristic of the coefficient field (0 for Q)
    #[arg(long = "char", global = true)]
    pub characteristic: Option<u64>,

    /// Curve file with `variables:`, `char:` and `cubic:` lines (default: Fermat cubic)
    #[arg(long, global = true)]
    pub curve: Option<PathBuf>,

    /// Fixture ideal: fermat_segre, determinantal2, determinantal3, hartshorne
    #[arg(long, global = true)]
    pub fixture: Option<String>,

    /// Fixture name or ideal file
    #[arg(long, global = true)]
    pub ideal: Option<String>,

    /// Largest prime of a sweep
    #[arg(long, global = true, default_value_t = 100)]
    pub limit: u64,

    /// Dimension of the projective-space factor
    #[arg(long, global = true, default_value_t = 1)]
    pub n: u32,

    /// Seed for the candidate order of the depth search
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Wall-clock budget, e.g. `60s`, `500ms`, `2m`
    #[arg(long, global = true, value_parser = parse_duration)]
    pub budget: Option<Duration>,

    /// Cap on S-pairs per basis computation
    #[arg(long, global = true)]
    pub max_pairs: Option<u64>,

    /// Basis cache directory (default: $SEGRELAB_CACHE_DIR)
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the presentation, radical generation by four polynomials and the dimension
    #[command(name = "verify-theorem1")]
    VerifyTheorem1,
    /// Classify primes up to --limit as ordinary, supersingular or bad
    HasseSweep {
        /// Print only the summary
        #[arg(long)]
        summary: bool,
    },
    /// Predicted cohomological dimension per prime
    CdTable,
    /// Depth and Cohen-Macaulayness of a fixture or ideal file
    Depth {
        /// Also exhibit the Frobenius witness of non-Cohen-Macaulayness
        #[arg(long)]
        witness: bool,
    },
    /// Fedder's F-purity test for the curve's cubic or for an ideal
    Fedder,
    /// Reduce a regular sequence found over Q modulo primes
    ModpCheck {
        /// Comma-separated primes
        #[arg(long, value_delimiter = ',', default_value = "5,7,11,13")]
        primes: Vec<u64>,
        /// Semicolon-separated linear forms (default: the depth sequence over Q)
        #[arg(long)]
        forms: Option<String>,
    },
    /// Kernel of the Segre parametrization, computed by elimination
    Kernel,
}

fn parse_duration(s: &str) -> Result<Duration, String> {
    let s = s.trim();
    let split = s.find(|c: char| !c.is_ascii_digit() && c != '.').unwrap_or(s.len());
    let (num, unit) = s.split_at(split);
    let value: f64 = num.parse().map_err(|_| format!("bad duration `{s}`"))?;
    let secs = match unit {
        "" | "s" => value,
        "ms" => value / 1000.0,
        "m" | "min" => value * 60.0,
        "h" => value * 3600.0,
        _ => return Err(format!("unknown unit in `{s}`")),
    };
    if secs <= 0.0 {
        return Err("budget must be positive".into());
    }
    Ok(Duration::from_secs_f64(secs))
}

/// 0 verified, 1 claim failed, 2 precondition, 3 budget exhausted.
fn exit_code_for(err: &anyhow::Error) -> u8 {
    let core = err.chain().find_map(|e| e.downcast_ref::<segrelab::Error>());
    match core {
        Some(segrelab::Error::BudgetExhausted(_)) => 3,
        Some(segrelab::Error::ClaimFailed(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command, &cli.common) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

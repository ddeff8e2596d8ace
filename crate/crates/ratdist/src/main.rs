use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use ratdist::{cmd_approx, cmd_multiples, cmd_scan, cmd_transform, cmd_verify, ApproxLimits, CommandResult, Direction, Shape};

#[derive(Parser)]
#[command(name = "ratdist", version, about = "Exact rational-distance constructions on an elliptic family")]
struct Cli {
    /// Write the payload here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiples kP1 on the cubic of (m, n).
    Multiples {
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[arg(long, default_value_t = 11)]
        kmax: usize,
    },
    /// Approximate a point set by a rational one.
    Approx {
        /// triangle, parallelogram or quad
        shape: Shape,
        /// JSON file with the input points.
        file: PathBuf,
        #[arg(long, default_value = "0.1")]
        eps: String,
        /// Largest multiple k tried per parameter draw.
        #[arg(long)]
        kbudget: Option<u32>,
        /// Wall-clock limit in seconds for the curve search.
        #[arg(long, default_value_t = 60.0)]
        time_budget: f64,
    },
    /// CSV of singularity, torsion and oval checks over an (m, n) grid.
    Scan {
        #[arg(long, default_value = "-2:2", allow_hyphen_values = true)]
        m_range: String,
        #[arg(long, default_value = "-2:2", allow_hyphen_values = true)]
        n_range: String,
        #[arg(long, default_value_t = 5)]
        steps: usize,
    },
    /// Check a certificate exactly.
    Verify { file: PathBuf },
    /// Map a point between the quartic and the cubic.
    Transform {
        /// q2c or c2q
        direction: Direction,
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        #[arg(long, allow_hyphen_values = true, required_if_eq("direction", "q2c"))]
        x: Option<String>,
        #[arg(long, allow_hyphen_values = true, required_if_eq("direction", "q2c"))]
        y: Option<String>,
        #[arg(long, allow_hyphen_values = true, required_if_eq("direction", "c2q"))]
        u: Option<String>,
        #[arg(long, allow_hyphen_values = true, required_if_eq("direction", "c2q"))]
        w: Option<String>,
    },
}

fn read(path: &PathBuf) -> Result<String, CommandResult> {
    std::fs::read_to_string(path).map_err(|e| CommandResult::error(format!("{}: {e}", path.display())))
}

fn run(command: Command) -> CommandResult {
    match command {
        Command::Multiples { m, n, kmax } => cmd_multiples(&m, &n, kmax),
        Command::Approx { shape, file, eps, kbudget, time_budget } => {
            let input = match read(&file) {
                Ok(s) => s,
                Err(e) => return e,
            };
            if !(time_budget.is_finite() && time_budget > 0.0) {
                return CommandResult::error("--time-budget must be a positive number of seconds");
            }
            let limits = ApproxLimits { kbudget, time_budget: Some(Duration::from_secs_f64(time_budget)) };
            cmd_approx(shape, &input, &eps, limits)
        }
        Command::Scan { m_range, n_range, steps } => cmd_scan(&m_range, &n_range, steps),
        Command::Verify { file } => match read(&file) {
            Ok(s) => cmd_verify(&s),
            Err(e) => e,
        },
        Command::Transform { direction, m, n, x, y, u, w } => {
            let (first, second) = match direction {
                Direction::QuarticToCubic => (x, y),
                Direction::CubicToQuartic => (u, w),
            };
            cmd_transform(direction, &m, &n, &first.unwrap_or_default(), &second.unwrap_or_default())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(cli.command);
    for line in &result.diagnostics {
        eprintln!("{line}");
    }
    let text = result.render();
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("{}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(result.exit_code() as u8)
}

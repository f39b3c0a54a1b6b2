use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use legendric::manifest::SearchBounds;
use legendric::{json, off, runner, RunManifest};
use legendric_core::matrix::Rational;
use legendric_core::orbit::{tangent_frame, verify_legendrian};
use legendric_core::polytope::convex_hull;
use legendric_core::symplectic::SymplecticSpace;
use legendric_core::{classify, WeightTuple, DEFAULT_SEED, DEFAULT_TRIALS};

#[derive(Parser)]
#[command(
    name = "legendric",
    version,
    about = "Exact-arithmetic toolkit for toric Legendrian varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify one weight tuple and print its report as JSON.
    Check {
        /// Comma-separated weights, e.g. 2,1,1
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Classify every coprime non-increasing tuple within the bound.
    Classify {
        /// Tuple length (the variety has dimension n - 1).
        #[arg(long)]
        n: usize,
        /// Upper bound on a_0.
        #[arg(long = "max-a")]
        max_a: i64,
        /// Worker threads; defaults to LEGENDRIC_JOBS or 1.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Dump the weight polytope as JSON or OFF.
    Polytope {
        #[arg(long)]
        weights: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check the Lagrangian frame condition and dump the base frame.
    VerifyLegendrian {
        #[arg(long)]
        weights: String,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Exact symplectic linear algebra on matrix files.
    Symplectic {
        #[command(subcommand)]
        command: SymplecticCommand,
    },
}

#[derive(Subcommand)]
enum SymplecticCommand {
    /// Split a 2n x 2n rational matrix into its sp and asp parts.
    Decompose {
        /// JSON file holding an array of rows of "p/q" strings.
        #[arg(long)]
        matrix: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Off,
}

/// Exit code 2 marks invalid input, 1 an internal invariant violation.
struct Failure {
    code: u8,
    message: String,
}

fn invalid(message: impl ToString) -> Failure {
    Failure {
        code: 2,
        message: message.to_string(),
    }
}

fn internal(message: impl ToString) -> Failure {
    Failure {
        code: 1,
        message: message.to_string(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn parse_weights(spec: &str) -> Result<WeightTuple, Failure> {
    let mut values = Vec::new();
    for token in spec.split(',') {
        let value: i64 = token
            .trim()
            .parse()
            .map_err(|_| invalid(format!("weight {token:?} is not an integer")))?;
        values.push(value);
    }
    WeightTuple::new(&values).map_err(invalid)
}

fn default_jobs() -> usize {
    std::env::var("LEGENDRIC_JOBS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let started = Instant::now();
    let command_line = std::env::args().collect::<Vec<_>>().join(" ");
    let manifest = |started: &Instant| {
        RunManifest::new(command_line.clone()).with_duration_ms(started.elapsed().as_millis() as u64)
    };

    match cli.command {
        Command::Check { weights, trials, seed } => {
            let tuple = parse_weights(&weights)?;
            let report = classify(&tuple, trials, seed);
            let doc = json::emit_check(
                manifest(&started).with_trials(trials).with_seed(seed),
                &report,
            );
            print!("{doc}");
            Ok(())
        }
        Command::Classify { n, max_a, jobs, trials, seed } => {
            let jobs = jobs.unwrap_or_else(default_jobs).max(1);
            let reports = runner::classify_all_parallel(n, max_a, trials, seed, jobs)
                .map_err(invalid)?;
            let doc = json::emit_classification(
                manifest(&started)
                    .with_bounds(n, max_a)
                    .with_trials(trials)
                    .with_seed(seed)
                    .with_jobs(jobs),
                &reports,
            );
            print!("{doc}");
            let parsed = json::parse_classification(&doc).map_err(internal)?;
            eprint!(
                "{}",
                runner::summary_table(&parsed.reports, &SearchBounds { n, max_a })
            );
            Ok(())
        }
        Command::Polytope { weights, format } => {
            let tuple = parse_weights(&weights)?;
            let hull = convex_hull(&tuple.configuration()).map_err(invalid)?;
            match format {
                Format::Json => {
                    print!("{}", json::emit_polytope(manifest(&started), &hull));
                }
                Format::Off => {
                    print!("{}", off::polytope_to_off(&hull).map_err(invalid)?);
                }
            }
            Ok(())
        }
        Command::VerifyLegendrian { weights, trials, seed } => {
            let tuple = parse_weights(&weights)?;
            let legendrian = verify_legendrian(&tuple, trials, seed);
            let ones = vec![Rational::from_integer(1.into()); tuple.n() - 1];
            let frame = tangent_frame(&tuple, &ones).map_err(internal)?;
            let doc = json::emit_verify(
                manifest(&started).with_trials(trials).with_seed(seed),
                &tuple,
                legendrian,
                &frame,
            );
            print!("{doc}");
            Ok(())
        }
        Command::Symplectic { command } => match command {
            SymplecticCommand::Decompose { matrix } => {
                let text = fs::read_to_string(&matrix)
                    .map_err(|e| invalid(format!("cannot read {}: {e}", matrix.display())))?;
                let rows: Vec<Vec<String>> = serde_json::from_str(&text)
                    .map_err(|e| invalid(format!("matrix file is not a JSON string matrix: {e}")))?;
                let m = json::matrix_from_strings(&rows).map_err(invalid)?;
                if m.rows() == 0 || m.rows() != m.cols() || m.rows() % 2 != 0 {
                    return Err(invalid(format!(
                        "matrix must be square of even size 2n, got {}x{}",
                        m.rows(),
                        m.cols()
                    )));
                }
                let space = SymplecticSpace::new(m.rows() / 2).map_err(internal)?;
                let (plus, minus) = space.decompose(&m).map_err(internal)?;
                let doc = json::emit_decompose(manifest(&started), &plus, &minus);
                print!("{doc}");
                Ok(())
            }
        },
    }
}

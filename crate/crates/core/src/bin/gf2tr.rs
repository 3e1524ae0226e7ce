use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use gf2_tensor_rank::bilinear::{codegen, BilinearAlgorithm, VerifyMode};
use gf2_tensor_rank::cc_construct::synthesize_any;
use gf2_tensor_rank::curve_count::{place_counts, CurveStep};
use gf2_tensor_rank::report::{render_text, run_report};
use gf2_tensor_rank::tower_bounds::{bound_report, select_step, StepJson};
use gf2_tensor_rank::Error;

/// Random pairs checked by `verify` when neither mode flag is given and `n > 12`.
const DEFAULT_RANDOM_PAIRS: u64 = 100_000;

#[derive(Parser)]
#[command(name = "gf2tr", version, about = "Bilinear multiplication algorithms and tensor-rank bounds for GF(2^n)")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and verify a multiplication algorithm for GF(2^n).
    Synthesize {
        #[arg(long)]
        n: usize,
    },
    /// Check a stored algorithm against field multiplication.
    Verify {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Rank bounds and the selected tower step at n.
    Bounds {
        #[arg(long)]
        n: u64,
    },
    /// Tower step used for GF(2^n).
    SelectStep {
        #[arg(long)]
        n: u64,
    },
    /// Place counts of H1, H11, H2 or H21.
    CountPlaces {
        #[arg(long)]
        step: CurveStep,
    },
    /// Straight-line XOR/AND program for a stored algorithm.
    Codegen {
        #[arg(long)]
        file: PathBuf,
    },
    /// Run the reproduction checklist.
    Report,
}

#[derive(Args)]
#[group(multiple = false)]
struct ModeArgs {
    /// All 2^(2n) pairs (n <= 12).
    #[arg(long)]
    exhaustive: bool,
    /// K seeded random pairs.
    #[arg(long, value_name = "K")]
    random: Option<u64>,
}

enum Failure {
    Verification,
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Other(e.to_string())
    }
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("plain data serializes")
}

fn load(path: &PathBuf) -> Result<BilinearAlgorithm, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Other(format!("{}: {e}", path.display())))?;
    Ok(BilinearAlgorithm::from_json_str(&text)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Synthesize { n } => {
            let alg = synthesize_any(n)?;
            if cli.json {
                println!("{}", alg.to_json_string());
            } else {
                let doc = alg.to_json();
                println!("n {} modulus {} rank {}", doc.n, doc.modulus, doc.rank);
                for ((a, b), c) in doc.a.iter().zip(&doc.b).zip(&doc.c) {
                    println!("{a} {b} {c}");
                }
            }
        }
        Command::Verify { file, mode } => {
            let alg = load(&file)?;
            let (label, passed) = match (mode.exhaustive, mode.random) {
                (true, _) => ("exhaustive".to_string(), alg.verify(VerifyMode::Exhaustive)?),
                (_, Some(k)) => (format!("random {k}"), alg.verify(VerifyMode::Random(k))?),
                _ if alg.n() <= gf2_tensor_rank::bilinear::MAX_EXHAUSTIVE_N => {
                    ("exhaustive".to_string(), alg.verify(VerifyMode::Exhaustive)?)
                }
                _ => (
                    format!("random {DEFAULT_RANDOM_PAIRS}"),
                    alg.verify(VerifyMode::Random(DEFAULT_RANDOM_PAIRS))?,
                ),
            };
            if cli.json {
                let doc = json!({"mode": label, "n": alg.n(), "passed": passed, "rank": alg.rank()});
                println!("{}", pretty(&doc));
            } else {
                let verdict = if passed { "PASS" } else { "FAIL" };
                println!("{verdict} n {} rank {} ({label})", alg.n(), alg.rank());
            }
            if !passed {
                return Err(Failure::Verification);
            }
        }
        Command::Bounds { n } => println!("{}", pretty(&bound_report(n)?)),
        Command::SelectStep { n } => println!("{}", pretty(&StepJson::from(select_step(n)?))),
        Command::CountPlaces { step } => println!("{}", pretty(&place_counts(step)?)),
        Command::Codegen { file } => print!("{}", codegen(&load(&file)?)),
        Command::Report => {
            let rows = run_report();
            if cli.json {
                println!("{}", pretty(&rows));
            } else {
                print!("{}", render_text(&rows));
            }
            if !rows.iter().all(|r| r.passed) {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::Value;
use unitring_core::Error;

mod commands;

/// Unit groups of commutative rings: decide, build witnesses, verify.
#[derive(Parser, Debug)]
#[command(name = "unitring", version)]
struct Cli {
    /// Seed for the randomized polynomial factorization.
    #[arg(long, global = true, default_value_t = unitring_core::gf2poly::DEFAULT_SEED)]
    seed: u64,
    /// Single-line JSON (the default).
    #[arg(long, global = true, conflicts_with = "json_pretty")]
    json_compact: bool,
    /// Indented JSON.
    #[arg(long, global = true)]
    json_pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Is there a ring with exactly this many units? (integer, "inf" or "aleph<k>")
    RealizeCardinal { cardinal: String },
    /// Is this abelian group a unit group? ("C3 x C9" or "3,9")
    RealizeGroup { group: String },
    /// p-group case: prime p and the exponents of the cyclic factors ("1,1,2").
    Pgroup { p: u64, exponents: String },
    /// Factor a polynomial over GF(2) given in hex (bit i = coefficient of x^i).
    FactorPoly { hex: String },
    /// Degrees of the fields in GF(2^a) (x) GF(2^b).
    TensorSplit { a: u32, b: u32 },
    /// Re-check a witness file produced by realize-cardinal or realize-group.
    Verify { file: PathBuf },
    /// Enumerate the units of Z[x]/(x^2, m x).
    SurveyR2m { m: u64 },
    /// Check that no 2^n - 1 with 2 <= n <= n_max is a perfect power.
    MersenneCheck { n_max: u32 },
}

/// What a command produced: JSON for stdout and whether a resource guard
/// limited the answer.
pub(crate) struct Outcome {
    pub json: Value,
    pub guard_limited: bool,
}

impl From<Value> for Outcome {
    fn from(json: Value) -> Self {
        Self { json, guard_limited: false }
    }
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    match &cli.command {
        Command::RealizeCardinal { cardinal } => commands::realize_cardinal(cardinal),
        Command::RealizeGroup { group } => commands::realize_group(group),
        Command::Pgroup { p, exponents } => commands::pgroup(*p, exponents),
        Command::FactorPoly { hex } => commands::factor_poly(hex, cli.seed),
        Command::TensorSplit { a, b } => commands::tensor_split(*a, *b),
        Command::Verify { file } => commands::verify(file),
        Command::SurveyR2m { m } => commands::survey_r2m(*m),
        Command::MersenneCheck { n_max } => commands::mersenne_check(*n_max),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            let text = if cli.json_pretty {
                serde_json::to_string_pretty(&outcome.json)
            } else {
                serde_json::to_string(&outcome.json)
            };
            println!("{}", text.expect("JSON values always serialize"));
            if outcome.guard_limited {
                eprintln!("note: enumeration guard exceeded, result is formula-only");
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Resource(_) => ExitCode::from(3),
                Error::Domain(_) | Error::Usage(_) => ExitCode::from(2),
            }
        }
    }
}

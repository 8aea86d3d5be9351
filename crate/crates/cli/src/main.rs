use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use k2slot_cli::{run_session, SessionConfig};

/// Exact computations with symbols in K2 mod m of F_q(t).
#[derive(Parser)]
#[command(name = "k2slot", version)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized factorization.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Cofactor degree bound for slot certificates (default: deg f + 4).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    degree_bound: Option<u64>,
    /// Cap on enumerated candidates per search.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the session in a file.
    Run { file: PathBuf },
    /// Run a session given inline.
    Eval { session: String },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let input = match &cli.command {
        Cmd::Run { file } => match std::fs::read_to_string(file) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: IoError: {}: {e}", file.display());
                return ExitCode::from(2);
            }
        },
        Cmd::Eval { session } => session.clone(),
    };
    let config = SessionConfig {
        seed: cli.seed,
        degree_bound: cli.degree_bound.map(|d| d as usize),
        json: cli.json,
        budget: cli.budget,
    };
    let out = run_session(&input, &config);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.exit_code as u8)
}

//! `jd`: command-line front end.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 verification failure,
//! 3 resource cap.

mod cache;
mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "jd", version, about = "Jacobi diagrams, their modules and the operators between them")]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpaceKind {
    /// Connected diagrams.
    C,
    /// Strut-free diagrams.
    Y,
    /// All diagrams with a fixed leg count.
    Full,
    /// Symmetric one-loop subgroup.
    Sym,
    /// Periodic one-loop subgroup.
    Period,
}

#[derive(Args, Debug, Clone)]
pub struct SpaceArgs {
    #[arg(long)]
    pub genus: u16,
    #[arg(long)]
    pub ideg: usize,
    #[arg(long, value_enum, default_value = "c")]
    pub space: SpaceKind,
    /// Loop degree (connected spaces only).
    #[arg(long)]
    pub loops: Option<usize>,
    /// Leg count (required for `full`).
    #[arg(long)]
    pub legs: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the generators of a space.
    Basis(SpaceArgs),
    /// Invariant factors of a space.
    Structure(SpaceArgs),
    /// Apply a named operator: delta, delta1, delta2, deltaAt:<label>, Y,
    /// Delta, star, compose, rev, halfDelta, halfDeltaY.
    Apply {
        #[arg(long)]
        genus: u16,
        #[arg(long)]
        op: String,
        /// One expression, or two for `star` and `compose`.
        #[arg(required = true, num_args = 1..=2)]
        exprs: Vec<String>,
    },
    /// Run a verification suite (`--list` to list them).
    Verify {
        suite: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        genus: Option<u16>,
        /// Upper bound on the suite's degree parameter.
        #[arg(long)]
        degree: Option<usize>,
        /// Lower the i-degree cap.
        #[arg(long)]
        max_ideg: Option<usize>,
        #[arg(long, default_value_t = jd_verify::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Record wall time in the report.
        #[arg(long)]
        time: bool,
    },
    /// Necklace, bracelet and Witt counts; with --genus also the predicted
    /// one-loop rank.
    Count {
        #[arg(long)]
        length: usize,
        #[arg(long, conflicts_with = "genus")]
        alphabet: Option<usize>,
        #[arg(long)]
        genus: Option<u16>,
    },
    /// Free Lie (or quasi-Lie) algebra in one degree.
    Lie {
        #[arg(long)]
        genus: u16,
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        quasi: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("jd: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use akinv::parser::parse;
use akinv::report::Report;
use akinv::runner::{self, Options};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "akinv",
    version,
    about = "Check exponential maps, invariant rewrites and conductors"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run every statement of a script.
    Run {
        #[command(flatten)]
        common: Common,
        /// Default bound for `iterative` commands without their own.
        #[arg(long)]
        bound: Option<u32>,
        /// Degree bound of the candidate pool for `invariant` and `rewrite`.
        #[arg(long)]
        pool_degree: Option<u32>,
        /// Seed for extra random samples in `iterative`.
        #[arg(long)]
        seed: Option<u64>,
        /// Record wall-clock time per statement.
        #[arg(long)]
        timing: bool,
    },
    /// Parse a script and build its declarations without running commands.
    Check {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    script: PathBuf,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

fn env_usize(name: &str) -> Option<usize> {
    std::env::var(name).ok()?.parse().ok()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, mut opts, declarations_only) = match cli.command {
        Cmd::Run {
            common,
            bound,
            pool_degree,
            seed,
            timing,
        } => (
            common,
            Options {
                bound,
                pool_degree,
                seed,
                timing,
                ..Options::default()
            },
            false,
        ),
        Cmd::Check { common } => (common, Options::default(), true),
    };
    opts.groebner_steps = env_usize("AKINV_GB_STEPS");
    opts.member_bound = env_usize("AKINV_MEMBER_BOUND");

    let report = match std::fs::read_to_string(&common.script) {
        Err(e) => Report::parse_failure(format!("{}: {e}", common.script.display())),
        Ok(src) => match parse(&src) {
            Ok(script) => runner::run(&script, &opts, declarations_only),
            Err(e) => Report::parse_failure(e.to_string()),
        },
    };
    if common.json {
        println!("{}", report.to_json());
    } else {
        print!("{report}");
    }
    ExitCode::from(report.status.exit_code() as u8)
}

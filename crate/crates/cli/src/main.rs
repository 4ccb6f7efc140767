use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use leibniz_cli::{
    run_eval, run_expand, run_selftest, run_verify, EvalCmd, ExpandCmd, Mode, Outcome, SelftestCmd, VerifyCmd,
    EXIT_USAGE,
};
use leibniz_core::Execution;

/// Leibniz-type rules for powers of generalized derivations.
#[derive(Parser)]
#[command(name = "leibniz", version)]
struct Cli {
    /// Run every suite on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the expansion of f^n(ab) in canonical form.
    Expand {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        n: u64,
        #[arg(long, default_value = "noncommutative")]
        mode: Mode,
        #[arg(long)]
        allow_large: bool,
    },
    /// Check a spec against a concrete model file.
    Verify {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        model: PathBuf,
        #[arg(long, default_value_t = 6)]
        n_max: u64,
        #[arg(long, default_value_t = 25)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Evaluate every expansion of f^n(ab) on concrete elements.
    Eval {
        #[arg(long)]
        spec: PathBuf,
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        n: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long)]
        allow_large: bool,
    },
    /// Run every built-in property suite.
    Selftest {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        n_max: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { 0 });
        }
    };
    let exec = if cli.sequential { Execution::Sequential } else { Execution::Parallel };
    let outcome: Outcome = match &cli.command {
        Command::Expand { spec, n, mode, allow_large } => {
            run_expand(&ExpandCmd { spec, n: *n, mode: *mode, allow_large: *allow_large })
        }
        Command::Verify { spec, model, n_max, trials, seed } => run_verify(&VerifyCmd {
            spec,
            model,
            n_max: *n_max,
            trials: *trials,
            seed: *seed,
            exec,
        }),
        Command::Eval { spec, model, n, a, b, allow_large } => run_eval(&EvalCmd {
            spec,
            model,
            n: *n,
            a,
            b,
            allow_large: *allow_large,
        }),
        Command::Selftest { seed, n_max } => run_selftest(&SelftestCmd { seed: *seed, n_max: *n_max, exec }),
    };
    let _ = std::io::stdout().write_all(outcome.stdout.as_bytes());
    let _ = std::io::stderr().write_all(outcome.stderr.as_bytes());
    ExitCode::from(outcome.code as u8)
}

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgAction, Parser, Subcommand};
use vanishing_audit::{
    cmd_char_eval, cmd_ingest_check, cmd_selftest, cmd_verify_alternating, cmd_verify_arith, cmd_verify_lie,
    ArithCheck, Format, RunOptions,
};

#[derive(Parser, Debug)]
#[command(name = "vanishing-audit", version, about = "Audit prime-power vanishing elements in finite simple groups")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Worker threads for range commands. Output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Count flagged known exceptions as passes (`false` audits strictly).
    #[arg(long, global = true, action = ArgAction::Set, default_value_t = true)]
    allow_known_exceptions: bool,
    /// Reject unknown fields and stop on the first malformed record.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Witness elements of A_n for n in [N_MIN, N_MAX].
    VerifyAlternating { n_min: u64, n_max: u64 },
    /// Divisor checks for groups of Lie type.
    VerifyLie {
        /// Family name (e.g. 2B2, E8, PSLn), `PSL2` or `spot`; repeatable. Default: all.
        #[arg(long = "family")]
        families: Vec<String>,
        #[arg(long, default_value_t = 1024)]
        q_max: u64,
    },
    /// Exhaustive scan of an arithmetic lemma over [FROM, TO].
    VerifyArith {
        #[arg(value_enum)]
        which: ArithCheck,
        from: u64,
        to: u64,
    },
    /// Evaluate chi_SIGMA at cycle type LAMBDA, e.g. `"(5,2)" "(4,2,1)"`.
    CharEval { sigma: String, lambda: String },
    /// Brute-force and orthogonality checks of the library itself.
    Selftest,
    /// Check line-delimited class records from PATH.
    IngestCheck { path: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = RunOptions { jobs: cli.jobs, allow_known_exceptions: cli.allow_known_exceptions };
    let result = match &cli.command {
        Command::VerifyAlternating { n_min, n_max } => cmd_verify_alternating(*n_min, *n_max, opts),
        Command::VerifyLie { families, q_max } => cmd_verify_lie(families, *q_max, opts),
        Command::VerifyArith { which, from, to } => cmd_verify_arith(*which, *from, *to, opts),
        Command::CharEval { sigma, lambda } => cmd_char_eval(sigma, lambda, opts),
        Command::Selftest => cmd_selftest(opts),
        Command::IngestCheck { path } => cmd_ingest_check(path, cli.strict, opts),
    };
    match result {
        Ok(report) => {
            let mut stdout = io::stdout().lock();
            if report.write_to(cli.format, &mut stdout).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(2);
            }
            ExitCode::from(report.exit_code())
        }
        Err(e) => {
            eprintln!("vanishing-audit: {e}");
            ExitCode::from(2)
        }
    }
}

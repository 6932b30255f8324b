//! Command-line front end for `tightmaps-core`.
//!
//! [`run`] parses arguments and returns the exit code and output, so the
//! binary is a thin wrapper and tests can drive commands in-process.

pub mod commands;
pub mod json;
pub mod text;

use clap::{Parser, Subcommand};
use tightmaps_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "tightmaps",
    version,
    about = "Exact verdicts on tight holomorphic maps between Hermitian symmetric spaces",
    after_help = "Algebra names: su(p,q), sp(2p), so*(2p), so(p,2), e6, e7. \
                  Quote names containing '*' or parentheses in the shell."
)]
pub struct Cli {
    /// Emit JSON instead of text tables.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank, Gram matrix, root count, highest root and noncompact node.
    Rootsys { algebra: String },
    /// Check a root list for the Π-system conditions and identify it.
    Validate {
        algebra: String,
        /// Roots as coefficient vectors, `;`-separated: `[1,0,0];[0,1,1]`.
        #[arg(long)]
        roots: String,
    },
    /// The maximal regular subalgebras of an algebra with their verdicts.
    Maximal { algebra: String },
    /// Tightness certificate of a catalog entry (`su4:l=1,s=2`) or a root
    /// list. The algebra may use the entry's parameters, e.g. `sp(2p)`.
    Check { algebra: String, target: String },
    /// The skew-symmetric tensor representation ρₘ of su(p,1).
    Tensor {
        p: usize,
        m: usize,
        /// Cross-check the closed forms against explicit matrices.
        #[arg(long)]
        oracle: bool,
    },
    /// Compare every computed verdict with the expected table and report
    /// catalog discrepancies.
    VerifyPaper {
        /// Sweep bounds, e.g. `su=10,sp=9,sostar=9,so2=13`.
        #[arg(long)]
        sweep: Option<String>,
        /// Evaluate the catalog families on separate threads.
        #[arg(long)]
        parallel: bool,
    },
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }
}

/// Internal violations exit with 3; everything caused by the input with 2.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_USAGE,
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(rendered)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: rendered,
                }
            };
        }
    };
    match commands::execute(&cli) {
        Ok(out) => out,
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

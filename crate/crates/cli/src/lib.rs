//! `moduli`: tables of `A_n` and `B_n`, γ-polynomials, dimensions, real-root
//! checks and the identity harness from the command line.
//!
//! Exit codes: 0 success, 1 a check or invariant failed, 2 usage error.

mod commands;
pub mod range;
pub mod record;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use moduli_core::moduli::{Kind, Method};
use moduli_core::oeis::FetchPolicy;

pub use range::{parse_coeffs, NRange};
pub use record::{Emitter, Format, OutputRecord, RecordKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "moduli",
    version,
    about = "Poincaré polynomials of M̄_(0,n+1) and its type B analogue"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print A_n or B_n for each n in the range.
    Poly {
        kind: Kind,
        range: NRange,
        /// Route to compute the table with; defaults to keel (A) or quadratic_B (B).
        #[arg(long)]
        method: Option<Method>,
        /// Also compute the table by every other route and require agreement.
        #[arg(long)]
        verify_cross: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print γ-polynomials of A_n or B_n.
    Gamma {
        kind: Kind,
        range: NRange,
        /// Exit 1 if any γ-coefficient is negative.
        #[arg(long)]
        assert_positive: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the identity harness, the Chow sums and the cross-method checks.
    Verify {
        /// Truncation order in t.
        #[arg(long, default_value_t = 25)]
        order: usize,
        /// Largest n for the brute-force oracle and the Chow sums.
        #[arg(long, default_value_t = 6)]
        oracle_max: usize,
        /// Feed one check a corrupted table; succeed only if exactly that check fails.
        #[arg(long)]
        self_test: bool,
        /// Corrupt each input of each check in turn; succeed only if every corruption is caught.
        #[arg(long)]
        mutation_sweep: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Decide real-rootedness by exact Sturm sequences.
    Roots {
        /// Family and range of n; omit when using --poly.
        #[arg(required_unless_present = "poly")]
        kind: Option<Kind>,
        #[arg(required_unless_present = "poly")]
        range: Option<NRange>,
        /// Comma-separated coefficients in ascending degree, e.g. "1,1,1".
        #[arg(long, conflicts_with_all = ["kind", "range"])]
        poly: Option<String>,
        /// Largest n accepted in the range.
        #[arg(long, default_value_t = 300)]
        max_n: usize,
        /// Exit 1 unless every polynomial is real-rooted.
        #[arg(long)]
        assert_real: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Print dim H for both families for n = 1..=max_n.
    Dims {
        max_n: usize,
        /// Shorthand for --policy offline.
        #[arg(long)]
        offline: bool,
        #[arg(long, default_value = "cache_first")]
        policy: FetchPolicy,
        /// Compare A_n(1) with OEIS A074059 and feed it through the type B recursion.
        #[arg(long)]
        oeis_check: bool,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Regenerate the bundled OEIS fixture and the golden tables.
    SeedFixtures {
        /// Directory for the OEIS fixture.
        #[arg(long)]
        fixtures_dir: Option<PathBuf>,
        /// Directory for the golden tables.
        #[arg(long)]
        golden_dir: Option<PathBuf>,
    },
}

/// Parses `args` and runs the command, writing data to `out` and
/// diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    match commands::dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(commands::Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(commands::Failure::Internal(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
    }
}

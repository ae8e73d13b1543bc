//! `cwalg`: command-line front end for the Coxeter-group algebra computations.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::output::Format;

/// Exit statuses.
pub const EXIT_OK: u8 = 0;
pub const EXIT_BUDGET: u8 = 2;
pub const EXIT_CHECK_FAILED: u8 = 3;
pub const EXIT_BAD_CONFIG: u8 = 4;

/// Environment variable naming the lattice cache directory.
pub const CACHE_ENV: &str = "CWALG_CACHE_DIR";

#[derive(Parser, Debug)]
#[command(name = "cwalg", version, about = "Exact computations in the algebras C_W(u) of finite Coxeter groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Lattice cache directory (overrides the CWALG_CACHE_DIR variable).
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Maximum number of worker threads for independent jobs.
    #[arg(long, default_value_t = 1, global = true)]
    pub jobs: usize,
    /// Report wall-clock time in `elapsed_ms` (otherwise 0, keeping output reproducible).
    #[arg(long, global = true)]
    pub timing: bool,
    /// Largest number of reflection subgroups to enumerate.
    #[arg(long, default_value_t = cwalg::lattice::DEFAULT_STATE_CAP, global = true)]
    pub max_classes: usize,
    /// Largest group order to tabulate.
    #[arg(long, default_value_t = cwalg::coxeter::DEFAULT_ELEMENT_CAP, global = true)]
    pub max_elements: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bell numbers (reflection, parabolic and closed subgroups) and algebra ranks.
    Bell {
        /// Coxeter types such as A3, B4, D5, I2:7, G2, H3, H4, F4, E6, E7.
        #[arg(required = true)]
        types: Vec<String>,
    },
    /// Structural checks.
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
    /// Dimension of the image of the braid group under Psi_lambda.
    Dim(DimArgs),
    /// Ishii's skein relations and the cubic relation in C_{A_k}(u).
    Ishii {
        /// Parameter u: an integer, a fraction or `symbolic`.
        #[arg(long, default_value = "symbolic")]
        u: String,
        /// Shorthand for `--u symbolic`.
        #[arg(long)]
        symbolic: bool,
        /// Rank k of A_k (at least 2).
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// The lambda = -1 monoid representation and its positive form.
    Monoid {
        r#type: String,
        #[arg(long, value_enum, default_value_t = FlavorArg::Parabolic)]
        flavor: FlavorArg,
        /// Number of random positive words tested for positivity.
        #[arg(long, default_value_t = 500)]
        words: usize,
        #[arg(long, default_value_t = 20)]
        max_len: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Semisimplicity at u = 1 through the regular trace form.
    Ss {
        r#type: String,
        #[arg(long, value_enum, default_value_t = FlavorArg::Full)]
        flavor: FlavorArg,
        /// Largest algebra dimension accepted.
        #[arg(long, default_value_t = cwalg::specializations::DEFAULT_SS_CAP)]
        cap: usize,
    },
    /// Eigenvectors of g + lambda g e in C_{A_1}(u) and the discriminant check.
    Spectrum {
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        u: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum CheckCommand {
    /// Defining relations on every basis vector.
    Cw {
        r#type: String,
        #[command(flatten)]
        scalar: ScalarArgs,
        /// Flavor to check; all defined flavors when omitted.
        #[arg(long, value_enum)]
        flavor: Option<FlavorArg>,
    },
    /// Hecke projection against an independent Hecke algebra, and the splitting.
    Hecke {
        r#type: String,
        #[command(flatten)]
        scalar: ScalarArgs,
        #[arg(long, default_value_t = 100)]
        pairs: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Bar involution over Laurent polynomials with u = v^2.
    Bar {
        r#type: String,
        /// Largest algebra dimension accepted (the check is quadratic in it).
        #[arg(long, default_value_t = 128)]
        cap: usize,
    },
    /// Relations of the Yokonuma-Hecke algebra Y_{d,n}(u) and its braids-and-ties subalgebra.
    Y {
        d: usize,
        n: usize,
        #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
        u: String,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ScalarArgs {
    /// Scalar ring, positionally (`check cw A2 symbolic`).
    #[arg(value_enum)]
    pub kind: Option<ScalarKind>,
    /// Scalar ring; defaults to `symbolic` when u is symbolic and `rational` otherwise.
    #[arg(long, value_enum)]
    pub scalar: Option<ScalarKind>,
    /// Parameter u: an integer, a fraction or `symbolic`.
    #[arg(long, default_value = "symbolic", allow_hyphen_values = true)]
    pub u: String,
    /// Shorthand for `--scalar mod-p`.
    #[arg(long)]
    pub mod_p: bool,
    /// Prime for `mod-p`: 31 for 2^31-1, 61 for 2^61-1.
    #[arg(long, value_enum, default_value_t = PrimeArg::P31)]
    pub prime: PrimeArg,
}

#[derive(Args, Debug, Clone)]
pub struct DimArgs {
    pub r#type: String,
    #[command(flatten)]
    pub scalar: ScalarArgs,
    /// lambda, the same for every class; -1 selects the monoid case.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub lambda: String,
    #[arg(long, value_enum, default_value_t = FlavorArg::Full)]
    pub flavor: FlavorArg,
    /// Close only under the generators, not their inverses.
    #[arg(long)]
    pub no_inverses: bool,
    /// Largest dimension accepted.
    #[arg(long, default_value_t = cwalg::specializations::DEFAULT_DIM_CAP)]
    pub cap: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarKind {
    Symbolic,
    Rational,
    ModP,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimeArg {
    #[value(name = "31")]
    P31,
    #[value(name = "61")]
    P61,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlavorArg {
    Full,
    Parabolic,
    Closed,
}

impl From<FlavorArg> for cwalg::lattice::Flavor {
    fn from(f: FlavorArg) -> Self {
        match f {
            FlavorArg::Full => Self::Full,
            FlavorArg::Parabolic => Self::Parabolic,
            FlavorArg::Closed => Self::Closed,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_BAD_CONFIG } else { EXIT_OK });
        }
    };
    match commands::run(&cli) {
        Ok(reports) => {
            print!("{}", output::render(&reports, cli.global.format));
            if reports.iter().all(|r| r.passed) {
                ExitCode::from(EXIT_OK)
            } else {
                ExitCode::from(EXIT_CHECK_FAILED)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

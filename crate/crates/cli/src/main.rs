//! `catcheck`: validate category and functor files, run verification
//! suites, and print computed ends, coends and Kan extensions.
//!
//! Exit codes: 0 all checks pass, 1 a check or validation failed, 2 the
//! input is malformed, 3 a size cap was hit.

mod commands;
mod input;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use yoneda_core::basecat::Caps;
use yoneda_core::suites::Suite;
use yoneda_core::{Error, FinSet, FinVect};

use commands::{Compute, Format, Outcome, Params};
use input::LiteralBase;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BaseKind {
    Finset,
    Finvect,
}

#[derive(Debug, Parser)]
#[command(name = "catcheck", version, about = "Exact checks of enriched functor-category constructions")]
struct Cli {
    /// Base category: finite sets or finite-dimensional vector spaces over F_p.
    #[arg(long, global = true, value_enum, env = "CATCHECK_BASE", default_value = "finset")]
    base: BaseKind,
    /// Field characteristic for --base finvect.
    #[arg(long, global = true, env = "CATCHECK_P", default_value_t = 2)]
    p: u32,
    /// Seed for every sampled sweep.
    #[arg(long, global = true, env = "CATCHECK_SEED", default_value_t = 0)]
    seed: u64,
    /// Largest hom-set or candidate family that may be enumerated.
    #[arg(long, global = true, env = "CATCHECK_MAX_HOM", value_parser = positive_u128)]
    max_hom: Option<u128>,
    /// Largest object (cardinality or dimension) that may be built.
    #[arg(long, global = true, env = "CATCHECK_MAX_ELEMS", value_parser = clap::value_parser!(u64).range(1..))]
    max_elems: Option<u64>,
    #[arg(long, global = true, value_enum, env = "CATCHECK_FORMAT", default_value = "text")]
    format: Format,
    /// Print leg morphisms of computed objects.
    #[arg(long, global = true, env = "CATCHECK_LEGS")]
    legs: bool,
    #[command(subcommand)]
    command: Command,
}

fn positive_u128(s: &str) -> Result<u128, String> {
    match s.parse::<u128>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, clap::Args)]
struct Inputs {
    /// Functor files, in the order the suite or construction expects.
    inputs: Vec<PathBuf>,
    /// Category files or names to make available by name.
    #[arg(long = "category")]
    categories: Vec<String>,
    /// Restrict to one object of the index category.
    #[arg(long)]
    object: Option<String>,
    /// Object of the base (size or dimension) acting on functors.
    #[arg(long)]
    m: Option<usize>,
    /// Functor between index categories: a file, point:<cat>:<obj>,
    /// identity:<cat> or terminal:<cat>.
    #[arg(long)]
    phi: Option<String>,
    /// Largest object size in default sweeps.
    #[arg(long)]
    max_size: Option<usize>,
    /// Endomorphisms tried per naturality check.
    #[arg(long, default_value_t = 3)]
    samples: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Parse and validate category, functor and index-functor files.
    Validate {
        #[arg(required = true)]
        paths: Vec<PathBuf>,
    },
    /// Run a verification suite: a default sweep, or on the given inputs.
    Check {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Compute a construction and print its carrier.
    Compute {
        #[arg(value_enum)]
        what: Compute,
        #[command(flatten)]
        inputs: Inputs,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Input(_) => 2,
        Error::Resource { .. } => 3,
        Error::Invalid(_) | Error::Precondition(_) => 1,
    }
}

fn params(cli: &Cli, inputs: &Inputs) -> Params {
    Params {
        inputs: inputs.inputs.clone(),
        categories: inputs.categories.clone(),
        object: inputs.object.clone(),
        m: inputs.m,
        phi: inputs.phi.clone(),
        max_size: inputs.max_size,
        samples: inputs.samples,
        seed: cli.seed,
        legs: cli.legs,
        format: Some(cli.format),
    }
}

/// Returns what to print on stdout and the exit code.
fn dispatch<B: LiteralBase>(base: &B, cli: &Cli) -> (String, u8) {
    let outcome = match &cli.command {
        Command::Validate { paths } => {
            let (out, worst) = commands::validate(base, paths);
            return (out, worst.as_ref().map_or(0, exit_code));
        }
        Command::Check { suite, inputs } => commands::check(base, *suite, &params(cli, inputs)),
        Command::Compute { what, inputs } => commands::compute(base, *what, &params(cli, inputs)),
    };
    match outcome {
        Ok(Outcome { text, passed }) => (text, if passed { 0 } else { 1 }),
        Err(e) => (format!("error {e}\n"), exit_code(&e)),
    }
}

fn run(cli: &Cli) -> Result<(String, u8), Error> {
    let mut caps = Caps::default();
    if let Some(h) = cli.max_hom {
        caps.max_hom = h;
    }
    if let Some(e) = cli.max_elems {
        caps.max_elems = usize::try_from(e).unwrap_or(usize::MAX);
    }
    Ok(match cli.base {
        BaseKind::Finset => dispatch(&FinSet::with_caps(caps), cli),
        BaseKind::Finvect => dispatch(&FinVect::with_caps(cli.p, caps)?, cli),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, code) = run(&cli).unwrap_or_else(|e| (format!("error {e}\n"), exit_code(&e)));
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
    let _ = stdout.flush();
    ExitCode::from(code)
}

//! Library side of the `bvfla` binary. Commands write to a caller-supplied
//! writer and return an exit code, so they can be driven in-process.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod render;

pub use commands::{cmd_classify, cmd_enumerate, cmd_fixtures, cmd_laws, cmd_search, cmd_verify};

/// Exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    /// A law or theorem failed.
    pub const FAILED: i32 = 1;
    /// Unreadable or malformed input, or bad usage.
    pub const INPUT: i32 = 2;
    pub const BUDGET: i32 = 3;
    pub const NOT_FOUND: i32 = 4;
}

/// Worker-count override for the rayon pool.
pub const THREADS_ENV: &str = "BVFLA_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "bvfla",
    version,
    about = "LA-semigroup and bipolar fuzzy subset workbench"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the structural laws on a Cayley table.
    Laws(LawsArgs),
    /// Classify a bipolar subset against every ideal class.
    Classify(ClassifyArgs),
    /// Run the theorem suite on a table.
    Verify(VerifyArgs),
    /// Enumerate left-invertive tables of a given order.
    Enumerate(EnumerateArgs),
    /// Search for a subset matching a class formula.
    Search(SearchArgs),
    /// Write the bundled example files.
    Fixtures(FixturesArgs),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum BiFormArg {
    #[default]
    Outer,
    Printed,
}

impl From<BiFormArg> for bvfla_core::BiForm {
    fn from(f: BiFormArg) -> Self {
        match f {
            BiFormArg::Outer => bvfla_core::BiForm::OuterPair,
            BiFormArg::Printed => bvfla_core::BiForm::PrintedPair,
        }
    }
}

#[derive(Debug, Args)]
pub struct LawsArgs {
    pub table: PathBuf,
    #[arg(long)]
    pub json: bool,
    /// List every violating tuple, not just the first.
    #[arg(long)]
    pub all_witnesses: bool,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    pub table: PathBuf,
    #[arg(required_unless_present = "gamma", conflicts_with = "gamma")]
    pub bvf: Option<PathBuf>,
    /// Classify the whole-carrier subset instead of a file.
    #[arg(long)]
    pub gamma: bool,
    #[arg(long, value_enum, default_value_t)]
    pub bi_form: BiFormArg,
    #[arg(long, conflicts_with = "decimal")]
    pub json: bool,
    /// Show approximate decimals instead of exact rationals (text only).
    #[arg(long)]
    pub decimal: bool,
    #[arg(long)]
    pub all_witnesses: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub table: PathBuf,
    /// Subset files added to the instance family (repeatable).
    #[arg(long = "bvf")]
    pub bvf: Vec<PathBuf>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    pub q: u32,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub order: u64,
    /// One representative per isomorphism class.
    #[arg(long)]
    pub iso: bool,
    #[arg(long)]
    pub left_identity: bool,
    /// Search-node limit; 0 disables the limit.
    #[arg(long, default_value_t = bvfla_core::enumerate::DEFAULT_BUDGET)]
    pub budget: u64,
    /// Write the census here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub target: String,
    #[arg(long, value_delimiter = ',', default_value = "4")]
    pub orders: Vec<usize>,
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..))]
    pub q: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = bvfla_core::search::DEFAULT_MAX_TRIALS)]
    pub max_trials: u64,
    #[arg(long, value_enum, default_value_t)]
    pub bi_form: BiFormArg,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct FixturesArgs {
    #[arg(long, default_value = "fixtures")]
    pub out: PathBuf,
}

/// Parses `args` (including the program name) and runs the command.
/// Usage errors are written to `err` and yield exit code 2.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::INPUT
            } else {
                exit::OK
            };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    if let Err(message) = configure_threads(std::env::var(THREADS_ENV).ok().as_deref()) {
        let _ = writeln!(err, "error: {message}");
        return exit::INPUT;
    }
    dispatch(&cli.command, out, err)
}

/// Runs an already parsed command.
pub fn dispatch(command: &Command, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match command {
        Command::Laws(a) => cmd_laws(a, out),
        Command::Classify(a) => cmd_classify(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Enumerate(a) => cmd_enumerate(a, out),
        Command::Search(a) => cmd_search(a, out),
        Command::Fixtures(a) => cmd_fixtures(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit::INPUT
        }
    }
}

fn configure_threads(value: Option<&str>) -> Result<(), String> {
    let Some(value) = value else { return Ok(()) };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {value:?}"))?;
    // A second initialization (e.g. repeated in-process runs) keeps the
    // existing pool.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

//! `durfee`: command-line driver for the invariant computations.
//!
//! Exit codes: 0 when every asserted check passes, 1 on a failed check,
//! 2 on input errors, 3 when an enumeration budget is exceeded.

use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use durfee_core::harness::{self, Format, Options, Report};
use durfee_core::invariants::IcisInput;
use durfee_core::io::{parse_document, InputDocument};
use durfee_core::lattice::DEFAULT_CELL_CAP;
use durfee_core::Error;

#[derive(Parser, Debug)]
#[command(
    name = "durfee",
    version,
    about = "Exact Milnor numbers, geometric genera and Durfee-type bounds from Newton diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Seed for randomized corpora.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Maximum number of lattice cells visited by a single count.
    #[arg(long, global = true, default_value_t = DEFAULT_CELL_CAP)]
    budget: u128,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// μ, p_g and volumes of a diagram or tuple.
    Invariants { file: PathBuf },
    /// Verdict on μ > C(n,r)·p_g.
    Durfee { file: PathBuf },
    /// Reports for every scale d in the range, with the leading-term comparison.
    Scan {
        file: PathBuf,
        #[arg(long, value_parser = parse_range)]
        range: RangeInclusive<i64>,
    },
    /// The second inequality for kΓ over the range of k.
    Thm2 {
        file: PathBuf,
        #[arg(long, value_parser = parse_range)]
        range: RangeInclusive<i64>,
    },
    /// Volumes and counts of the tetrahedral region for each m.
    Counterexample {
        #[arg(long, value_parser = parse_range)]
        m_range: RangeInclusive<i64>,
    },
    /// Stirling and C(n,r) identities plus the facet-volume bound.
    LemmaSuite {
        #[arg(long, default_value_t = 8)]
        n_max: u32,
        #[arg(long, default_value_t = 6)]
        r_max: u32,
    },
    /// Mixed covolume table and the averaged inequality.
    MixedCovol { file: PathBuf },
    /// Ehrhart polynomial of a polytope, or the p_g(kΓ) expansion of a diagram.
    Ehrhart { file: PathBuf },
    /// Both sides of the conjectured strengthening (reported, never asserted).
    Conjecture { file: PathBuf },
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (a, b) = s.split_once("..").ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|e| format!("bad range start {a:?}: {e}"))?;
    let b: i64 = b.trim().trim_start_matches('=').parse().map_err(|e| format!("bad range end {b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok(a..=b)
}

fn read_document(path: &Path) -> anyhow::Result<InputDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
    let doc = parse_document(&text).with_context(|| format!("reading {}", path.display()))?;
    Ok(doc)
}

fn read_input(path: &Path) -> anyhow::Result<IcisInput> {
    Ok(IcisInput::new(read_document(path)?.into_tuple()?))
}

fn emit<R: Report>(report: &R, cli: &Cli) -> anyhow::Result<bool> {
    let format = match cli.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let text = harness::render(report, format)?;
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(report.passed())
}

fn run(cli: &Cli) -> anyhow::Result<bool> {
    let opts = Options { budget: cli.budget, seed: cli.seed };
    match &cli.command {
        Command::Invariants { file } => emit(&harness::invariants_summary(&read_input(file)?, &opts)?, cli),
        Command::Durfee { file } => emit(&harness::durfee_check(&read_input(file)?, &opts)?, cli),
        Command::Scan { file, range } => emit(&harness::scaling_scan(&read_input(file)?, range.clone(), &opts)?, cli),
        Command::Thm2 { file, range } => {
            let g = read_document(file)?.into_diagram()?;
            emit(&harness::theorem2_check(&g, range.clone(), &opts)?, cli)
        }
        Command::Counterexample { m_range } => emit(&harness::counterexample(m_range.clone(), &opts)?, cli),
        Command::LemmaSuite { n_max, r_max } => emit(&harness::lemma_suite(*n_max, *r_max, &opts)?, cli),
        Command::MixedCovol { file } => emit(&harness::mixed_covolume_report(&read_input(file)?.tuple)?, cli),
        Command::Ehrhart { file } => {
            let report = match read_document(file)? {
                InputDocument::Polytope(p) => harness::polytope_ehrhart_report(&p)?,
                doc => harness::diagram_ehrhart_report(&doc.into_diagram()?)?,
            };
            emit(&report, cli)
        }
        Command::Conjecture { file } => emit(&harness::conjecture_report(&read_input(file)?, &opts)?, cli),
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => 3,
        Some(
            Error::Input(_)
            | Error::DimensionMismatch { .. }
            | Error::EmptyInput(_)
            | Error::DimensionTooLarge(_)
            | Error::NegativeCoordinate { .. }
            | Error::NotFullDimensional { .. }
            | Error::NotConvenient
            | Error::NonIntegral(_)
            | Error::Precondition(_),
        ) => 2,
        Some(_) => 1,
        None if err.downcast_ref::<std::io::Error>().is_some() => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

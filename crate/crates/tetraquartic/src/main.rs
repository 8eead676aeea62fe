//! Command-line front end: runs the verification battery and prints the
//! claim records.
//!
//! ```text
//! tetraquartic <lattice|discform|isometry|quartic|report>
//!              [--input FILE] [--format text|json] [--jobs N]
//! ```
//!
//! Each subcommand runs one section of the battery; `report` runs all of
//! them.  Without `--input` the built-in reference sample is used.  The
//! process exits 0 exactly when every executed claim passes (unverified
//! records do not fail), 1 when some claim fails, and 2 when the input
//! file cannot be parsed.  JSON output is sorted by claim id and
//! byte-identical across runs and thread counts; all rational values are
//! printed exactly as `p/q`.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use tetraquartic::quartic::{QuarticCoefficients, QuarticError};
use tetraquartic::report::{failure_count, render_json, render_text, run_section, ReportSection};

/// Exact verification of tetrahedral quartic surfaces: lattice
/// invariants, discriminant forms, isometries, and projective geometry.
#[derive(Parser)]
#[command(name = "tetraquartic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice invariants, class identities, and Riemann-Roch arithmetic.
    Lattice(RunArgs),
    /// Discriminant-form values, dual lifts, and the automorphism group.
    Discform(RunArgs),
    /// Isometries and their induced actions on the discriminant group.
    Isometry(RunArgs),
    /// Nodes, lines, cross-ratios, branch sextic, and fibrations of the
    /// input quartic.
    Quartic(RunArgs),
    /// The full verification report (all sections).
    Report(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// JSON coefficient file: twelve mandatory "p/q" strings a0..d3 plus
    /// an optional delta (default "1"); omit to use the built-in
    /// reference sample.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads; falls back to the TETRAQUARTIC_JOBS environment
    /// variable, then to one worker per core.
    #[arg(long, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    /// Line-per-claim report with a summary.
    Text,
    /// Pretty-printed record array, sorted by claim id.
    Json,
}

/// Reads and parses a coefficient file; errors name the file or the
/// offending field.
fn parse_input(path: &Path) -> Result<QuarticCoefficients, QuarticError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| QuarticError::InputParse(format!("{}: {e}", path.display())))?;
    QuarticCoefficients::from_json_str(&text)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (section, args) = match &cli.command {
        Command::Lattice(args) => (ReportSection::Lattice, args),
        Command::Discform(args) => (ReportSection::DiscForm, args),
        Command::Isometry(args) => (ReportSection::Isometry, args),
        Command::Quartic(args) => (ReportSection::Quartic, args),
        Command::Report(args) => (ReportSection::All, args),
    };

    let coeffs = match &args.input {
        Some(path) => match parse_input(path) {
            Ok(coeffs) => coeffs,
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
        None => QuarticCoefficients::reference_sample(),
    };

    let records = run_section(&coeffs, args.jobs, section);
    let rendered = match args.format {
        Format::Text => render_text(&records),
        Format::Json => render_json(&records),
    };
    print!("{rendered}");

    if failure_count(&records) == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

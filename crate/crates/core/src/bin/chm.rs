//! Command-line front end: verify rows, search orders, list the known
//! matrices, and dump spectra. Reports go to standard output; notes and
//! errors to standard error.
//!
//! Exit codes: 0 success (verified Hadamard / complete search), 1 verified
//! not Hadamard, 2 usage or parse error, 3 search stopped by a node limit.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use circulant_hadamard::report;
use circulant_hadamard::search::{enumerate, verify_solutions, SearchConfig, Symmetry};
use circulant_hadamard::SignRow;

#[derive(Parser)]
#[command(
    name = "chm",
    version,
    about = "Circulant Hadamard matrix toolkit: exact verification and exhaustive search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one first row: Hadamard predicate, identities, spectrum
    Verify {
        /// Row literal, compact ("+---") or comma-separated ("+1,-1,-1,-1")
        row: String,
        /// Relative tolerance for the spectral checks
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Exhaustively enumerate circulant Hadamard first rows of an order
    Search {
        /// Row length to search
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,
        /// Disable the regularity filter (order short-circuit and
        /// positive-count bounds)
        #[arg(long = "no-lemma2")]
        no_lemma2: bool,
        /// Disable partial-autocorrelation pruning
        #[arg(long = "no-prune")]
        no_prune: bool,
        /// Solution equivalence: rotation,negation | rotation | negation | none
        #[arg(long, default_value = "rotation,negation")]
        symmetry: String,
        /// Worker threads for the subtree phase (never affects results)
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        threads: u64,
        /// Stop after this many search nodes and report an incomplete run
        #[arg(long = "node-limit")]
        node_limit: Option<u64>,
        /// Emit every raw solution instead of canonical representatives
        #[arg(long = "emit-all")]
        emit_all: bool,
        /// Omit the timing block so outputs are byte-comparable
        #[arg(long = "no-timing")]
        no_timing: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// List the ten known circulant Hadamard matrices with verification
    Known {
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print eigenvalues, powers, and autocorrelations of one row
    Spectrum {
        /// Row literal, compact ("+---") or comma-separated ("+1,-1,-1,-1")
        row: String,
        /// Relative tolerance for the spectral checks
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn emit(report: &serde_json::Value, format: Format) {
    let rendered = match format {
        Format::Json => report::to_json(report),
        Format::Csv => report::to_csv(report),
        Format::Text => report::to_text(report),
    };
    print!("{rendered}");
}

fn parse_row(literal: &str) -> Result<SignRow, ExitCode> {
    literal.parse().map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}

fn parse_symmetry(spec: &str) -> Result<Symmetry, ExitCode> {
    let mut symmetry = Symmetry::NONE;
    for part in spec.split(',').map(str::trim) {
        match part {
            "rotation" => symmetry.rotation = true,
            "negation" => symmetry.negation = true,
            "none" if spec.trim() == "none" => {}
            other => {
                eprintln!(
                    "error: invalid symmetry {other:?}; \
                     expected a comma-separated subset of rotation,negation or none"
                );
                return Err(ExitCode::from(2));
            }
        }
    }
    Ok(symmetry)
}

fn run_verify(literal: &str, tolerance: f64, format: Format) -> Result<ExitCode, ExitCode> {
    let row = parse_row(literal)?;
    if row.len() % 2 != 0 {
        eprintln!(
            "note: order {} is odd; the identity block needs an even order and is omitted",
            row.len()
        );
    }
    let report = report::verify_report(literal, &row, tolerance);
    let hadamard = report["hadamard"] == serde_json::json!(true);
    emit(&report, format);
    Ok(ExitCode::from(u8::from(!hadamard)))
}

#[allow(clippy::too_many_arguments)]
fn run_search(
    order: u64,
    no_lemma2: bool,
    no_prune: bool,
    symmetry: &str,
    threads: u64,
    node_limit: Option<u64>,
    emit_all: bool,
    no_timing: bool,
    format: Format,
) -> Result<ExitCode, ExitCode> {
    let config = SearchConfig {
        order: order as usize,
        use_regularity_filter: !no_lemma2,
        use_paf_pruning: !no_prune,
        symmetry: parse_symmetry(symmetry)?,
        worker_count: threads as usize,
        node_limit,
        emit_all,
    };
    let outcome = match enumerate(&config) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return Err(ExitCode::from(2));
        }
    };
    let verified = verify_solutions(&outcome);
    let report = report::search_report(&config, &outcome, verified, !no_timing);
    emit(&report, format);
    if !verified {
        eprintln!("error: a solution failed independent re-verification");
        return Err(ExitCode::from(1));
    }
    Ok(ExitCode::from(if outcome.complete { 0 } else { 3 }))
}

fn run_known(tolerance: f64, format: Format) -> ExitCode {
    let report = report::known_report(tolerance);
    let all_good = report["records"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["hadamard"] == serde_json::json!(true));
    emit(&report, format);
    if all_good {
        ExitCode::SUCCESS
    } else {
        eprintln!("error: a catalogued matrix failed verification");
        ExitCode::from(1)
    }
}

fn run_spectrum(literal: &str, tolerance: f64, format: Format) -> Result<ExitCode, ExitCode> {
    let row = parse_row(literal)?;
    let report = report::spectrum_report(literal, &row, tolerance);
    emit(&report, format);
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            row,
            tolerance,
            format,
        } => run_verify(&row, tolerance, format),
        Command::Search {
            order,
            no_lemma2,
            no_prune,
            symmetry,
            threads,
            node_limit,
            emit_all,
            no_timing,
            format,
        } => run_search(
            order, no_lemma2, no_prune, &symmetry, threads, node_limit, emit_all, no_timing,
            format,
        ),
        Command::Known { tolerance, format } => Ok(run_known(tolerance, format)),
        Command::Spectrum {
            row,
            tolerance,
            format,
        } => run_spectrum(&row, tolerance, format),
    };
    match result {
        Ok(code) => code,
        Err(code) => code,
    }
}

//! Command-line front end: germ files, catalog, reports, consistency checks.

pub mod germfile;
pub mod report;
pub mod selftest;

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use germinv::germ::catalog::{catalog_entry, DEFAULT_MAX_K, FAMILIES};
use germinv::germ::{analyze, Germ, PipelineConfig};
use germinv::Error;

use report::{render_table, ReportDocument, DISPLAY_TERMS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_LIMIT: i32 = 2;
pub const EXIT_CONSISTENCY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "germinv", version, about = "Exact invariants of finitely determined germs (C^2,0) -> (C^3,0)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct OutputFlags {
    /// Emit one JSON document per germ.
    #[arg(long, conflicts_with = "table")]
    pub json: bool,
    /// Emit a text table (default).
    #[arg(long)]
    pub table: bool,
}

#[derive(Debug, Args, Clone, Copy)]
pub struct ComputeFlags {
    /// Puiseux series truncation.
    #[arg(long, value_name = "N")]
    pub truncation: Option<u32>,
    /// Largest cyclotomic conductor allowed for coefficients.
    #[arg(long, value_name = "n")]
    pub conductor: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze every germ in a germ file.
    Analyze {
        file: std::path::PathBuf,
        #[command(flatten)]
        output: OutputFlags,
        #[command(flatten)]
        compute: ComputeFlags,
    },
    /// Analyze built-in germs (S, B, C, H, marar).
    Catalog {
        family: Option<String>,
        #[arg(long, value_name = "K")]
        k: Option<u32>,
        /// Accept family parameters above 12.
        #[arg(long)]
        allow_large: bool,
        #[command(flatten)]
        output: OutputFlags,
        #[command(flatten)]
        compute: ComputeFlags,
    },
    /// Run the consistency checks only; exit 3 if any fails.
    Check {
        file: std::path::PathBuf,
        #[command(flatten)]
        compute: ComputeFlags,
    },
    /// Run the built-in property suites.
    Selftest,
}

/// Exit code for a pipeline error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceExceeded(_) | Error::TruncationExceeded(_) | Error::ExtensionUnsupported(_) => EXIT_LIMIT,
        Error::InternalInconsistency(_) => EXIT_CONSISTENCY,
        _ => EXIT_INPUT,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::DivisionByZero => "DivisionByZero",
        Error::ExtensionUnsupported(_) => "ExtensionUnsupported",
        Error::VariableMismatch(..) => "VariableMismatch",
        Error::InvalidArgument(_) => "InvalidArgument",
        Error::ResourceExceeded(_) => "ResourceExceeded",
        Error::TruncationExceeded(_) => "TruncationExceeded",
        Error::NotFinitelyDetermined(_) => "NotFinitelyDetermined",
        Error::NeedsOverride(_) => "NeedsOverride",
        Error::InvalidOverride(_) => "InvalidOverride",
        Error::InternalInconsistency(_) => "InternalInconsistency",
        Error::NotApplicable(_) => "NotApplicable",
        Error::WrongKind(_) => "WrongKind",
    }
}

fn config(c: &ComputeFlags) -> PipelineConfig {
    let mut cfg = PipelineConfig { truncation: c.truncation, ..PipelineConfig::default() };
    if let Some(n) = c.conductor {
        cfg.max_conductor = n;
    }
    cfg
}

/// Analyze germs concurrently, keeping input order.
pub fn analyze_all(germs: &[Germ], cfg: &PipelineConfig) -> Vec<Result<ReportDocument, Error>> {
    germs
        .par_iter()
        .map(|g| analyze(g, cfg).map(|r| ReportDocument::from_report(&r, DISPLAY_TERMS)))
        .collect()
}

fn emit(
    germs: &[Germ],
    results: &[Result<ReportDocument, Error>],
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let mut code = EXIT_OK;
    let docs: Vec<ReportDocument> = results.iter().filter_map(|r| r.as_ref().ok().cloned()).collect();
    if json {
        for r in results.iter().flatten() {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(r).expect("serializable report"));
        }
    } else if !docs.is_empty() {
        let _ = write!(out, "{}", render_table(&docs));
    }
    for (g, r) in germs.iter().zip(results) {
        if let Err(e) = r {
            let _ = writeln!(err, "{}: {}: {e}", g.name, error_kind(e));
            code = code.max(exit_code(e));
        }
    }
    code
}

fn read_germs(path: &std::path::Path, err: &mut dyn Write) -> Result<Vec<Germ>, i32> {
    let text = match std::fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", path.display());
            return Err(EXIT_INPUT);
        }
    };
    germfile::parse_germ_file(&text).map_err(|e| {
        let _ = writeln!(err, "{}:{e}", path.display());
        EXIT_INPUT
    })
}

fn catalog_germs(family: Option<&str>, k: Option<u32>, allow_large: bool) -> Result<Vec<Germ>, Error> {
    if let Some(k) = k {
        if k > DEFAULT_MAX_K && !allow_large {
            return Err(Error::InvalidArgument(format!("k = {k} exceeds {DEFAULT_MAX_K}; pass --allow-large")));
        }
    }
    let families: Vec<&str> = match family {
        Some(f) => vec![f],
        None => FAMILIES.to_vec(),
    };
    let mut out = Vec::new();
    for fam in families {
        let ks = match k {
            Some(k) if !fam.eq_ignore_ascii_case("marar") => vec![Some(k)],
            _ => selftest::default_range(fam),
        };
        for k in ks {
            out.push(catalog_entry(fam, k)?.germ);
        }
    }
    Ok(out)
}

/// Run a parsed command, writing to the given streams; returns the exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match cli.command {
        Command::Analyze { file, output, compute } => {
            let germs = match read_germs(&file, err) {
                Ok(g) => g,
                Err(code) => return code,
            };
            let results = analyze_all(&germs, &config(&compute));
            emit(&germs, &results, output.json, out, err)
        }
        Command::Catalog { family, k, allow_large, output, compute } => {
            let germs = match catalog_germs(family.as_deref(), k, allow_large) {
                Ok(g) => g,
                Err(e) => {
                    let _ = writeln!(err, "{e}");
                    return EXIT_INPUT;
                }
            };
            let results = analyze_all(&germs, &config(&compute));
            emit(&germs, &results, output.json, out, err)
        }
        Command::Check { file, compute } => {
            let germs = match read_germs(&file, err) {
                Ok(g) => g,
                Err(code) => return code,
            };
            let results = analyze_all(&germs, &config(&compute));
            let mut code = EXIT_OK;
            for (g, r) in germs.iter().zip(&results) {
                match r {
                    Ok(doc) => {
                        let flags: Vec<String> = doc.checks.iter().map(|(k, v)| format!("{k}={v}")).collect();
                        let verdict = if doc.checks_pass() { "ok" } else { "FAIL" };
                        let _ = writeln!(out, "{}: {verdict} {}", g.name, flags.join(" "));
                        if !doc.checks_pass() {
                            code = code.max(EXIT_CONSISTENCY);
                        }
                    }
                    Err(e) => {
                        let _ = writeln!(err, "{}: {}: {e}", g.name, error_kind(e));
                        code = code.max(exit_code(e));
                    }
                }
            }
            code
        }
        Command::Selftest => {
            let suites = [
                selftest::field_suite(2_000, 1),
                selftest::local_oracle_suite(200, 2),
                selftest::linking_suite(10_000, 4, 3),
                selftest::catalog_suite(),
                selftest::intersection_suite(),
                selftest::round_trip_suite(),
            ];
            let mut code = EXIT_OK;
            for s in &suites {
                let verdict = if s.passed() { "ok" } else { "FAIL" };
                let _ = writeln!(out, "{verdict:<4} {} ({} cases)", s.name, s.cases);
                for f in &s.failures {
                    let _ = writeln!(out, "     {f}");
                }
                if !s.passed() {
                    code = EXIT_CONSISTENCY;
                }
            }
            code
        }
    }
}

//! Thin command-line front end over the library. All logic lives in the
//! library crate; this file only parses arguments, reads files, and maps
//! outcomes to exit codes: 0 success, 1 usage or validation errors, 2 for a
//! cross-check disagreement or corpus/crossval failure.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use contact_pi1::cli::corpus::run_corpus;
use contact_pi1::cli::crossval::{run_crossval, CrossvalOptions};
use contact_pi1::cli::{
    compute_document, parse_documents, parse_method_selection, render_text,
    render_validation_text, to_json, validate_document, InputDocument,
};
use contact_pi1::{Error, Result};

#[derive(Parser)]
#[command(
    name = "contact-pi1",
    version,
    about = "Validate moment cones of compact contact toric manifolds and compute pi_1"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Compute pi_1 for the document (or JSON array of documents) in FILE.
    Compute {
        file: PathBuf,
        /// Method selection: thmB, lerman, thmC or all.
        #[arg(long, default_value = "all")]
        method: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Validate documents (convexity, goodness, integrality) without pi_1.
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Cross-validate the methods on seeded random instances.
    Crossval {
        #[arg(long, default_value_t = 200)]
        count: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Ambient dimension bounds as "lo..hi" (inclusive).
        #[arg(long)]
        dim: Option<String>,
        /// Facet count bounds as "lo..hi" (inclusive).
        #[arg(long)]
        facets: Option<String>,
    },
    /// Run the built-in corpus; optionally write its documents to a directory.
    Corpus {
        #[arg(long)]
        emit: Option<PathBuf>,
    },
}

fn parse_range(text: &str, flag: &str) -> Result<(usize, usize)> {
    let Some((lo, hi)) = text.split_once("..") else {
        return Err(Error::Parse(format!(
            "--{flag} expects an inclusive range like 2..6, got {text:?}"
        )));
    };
    let lo: usize = lo
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("--{flag}: bad lower bound {lo:?}")))?;
    let hi: usize = hi
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("--{flag}: bad upper bound {hi:?}")))?;
    if lo > hi {
        return Err(Error::Parse(format!("--{flag}: empty range {text:?}")));
    }
    Ok((lo, hi))
}

fn doc_heading(doc: &InputDocument, index: usize) -> String {
    match &doc.label {
        Some(label) => label.clone(),
        None => format!("document {index}"),
    }
}

fn error_entry(doc: &InputDocument, err: &Error) -> serde_json::Value {
    match &doc.label {
        Some(label) => serde_json::json!({ "label": label, "error": err.to_string() }),
        None => serde_json::json!({ "error": err.to_string() }),
    }
}

fn run_compute(file: &PathBuf, method: &str, format: Format) -> Result<ExitCode> {
    let methods = parse_method_selection(method)?;
    let text = fs::read_to_string(file)?;
    let (docs, is_batch) = parse_documents(&text)?;

    if !is_batch {
        let report = compute_document(&docs[0], &methods)?;
        match format {
            Format::Json => print!("{}", to_json(&report)),
            Format::Text => print!("{}", render_text(&report)),
        }
        return Ok(if report.agrees() {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(2)
        });
    }

    let mut any_error = false;
    let mut any_disagree = false;
    let mut values = Vec::new();
    let mut blocks = Vec::new();
    for (index, doc) in docs.iter().enumerate() {
        match compute_document(doc, &methods) {
            Ok(report) => {
                if !report.agrees() {
                    any_disagree = true;
                }
                match format {
                    Format::Json => {
                        values.push(serde_json::to_value(&report).expect("reports serialize"));
                    }
                    Format::Text => {
                        blocks.push(format!("== {}\n{}", doc_heading(doc, index), render_text(&report)));
                    }
                }
            }
            Err(err) => {
                any_error = true;
                match format {
                    Format::Json => values.push(error_entry(doc, &err)),
                    Format::Text => {
                        blocks.push(format!("== {}\nerror: {err}\n", doc_heading(doc, index)));
                    }
                }
            }
        }
    }
    match format {
        Format::Json => print!("{}", to_json(&values)),
        Format::Text => print!("{}", blocks.join("\n")),
    }
    Ok(if any_disagree {
        ExitCode::from(2)
    } else if any_error {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run_validate(file: &PathBuf, format: Format) -> Result<ExitCode> {
    let text = fs::read_to_string(file)?;
    let (docs, is_batch) = parse_documents(&text)?;

    if !is_batch {
        let report = validate_document(&docs[0])?;
        match format {
            Format::Json => print!("{}", to_json(&report)),
            Format::Text => print!("{}", render_validation_text(&report)),
        }
        return Ok(ExitCode::SUCCESS);
    }

    let mut any_error = false;
    let mut values = Vec::new();
    let mut blocks = Vec::new();
    for (index, doc) in docs.iter().enumerate() {
        match validate_document(doc) {
            Ok(report) => match format {
                Format::Json => {
                    values.push(serde_json::to_value(&report).expect("reports serialize"));
                }
                Format::Text => {
                    blocks.push(format!(
                        "== {}\n{}",
                        doc_heading(doc, index),
                        render_validation_text(&report)
                    ));
                }
            },
            Err(err) => {
                any_error = true;
                match format {
                    Format::Json => values.push(error_entry(doc, &err)),
                    Format::Text => {
                        blocks.push(format!("== {}\nerror: {err}\n", doc_heading(doc, index)));
                    }
                }
            }
        }
    }
    match format {
        Format::Json => print!("{}", to_json(&values)),
        Format::Text => print!("{}", blocks.join("\n")),
    }
    Ok(if any_error {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn run_crossval_command(
    count: u64,
    seed: u64,
    dim: Option<&str>,
    facets: Option<&str>,
) -> Result<ExitCode> {
    let mut opts = CrossvalOptions::new(count, seed);
    if let Some(text) = dim {
        opts.dim = parse_range(text, "dim")?;
    }
    if let Some(text) = facets {
        opts.facets = parse_range(text, "facets")?;
    }
    let summary = run_crossval(&opts);
    print!("{}", summary.render());
    Ok(if summary.ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn run_corpus_command(emit: Option<&PathBuf>) -> Result<ExitCode> {
    let run = run_corpus(emit.map(|p| p.as_path()))?;
    print!("{}", run.text);
    Ok(if run.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    match &cli.command {
        Command::Compute {
            file,
            method,
            format,
        } => run_compute(file, method, *format),
        Command::Validate { file, format } => run_validate(file, *format),
        Command::Crossval {
            count,
            seed,
            dim,
            facets,
        } => run_crossval_command(*count, *seed, dim.as_deref(), facets.as_deref()),
        Command::Corpus { emit } => run_corpus_command(emit.as_ref()),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(
        env_logger::Env::new().filter_or("CONTACT_PI1_LOG", "warn"),
    )
    .format_timestamp(None)
    .try_init()
    .ok();

    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use deflog::bridges::{parse_af, parse_default_theory, stable_correspondence};
use deflog::dot::{annotated_dot, to_dot};
use deflog::{
    extensions_with, parse_sentence, parse_theory, Analysis, Error, Limits, ParseErrors, Theory,
};

use report::{
    digest, DotResult, ExtensionsResult, FromAfResult, FromDefaultsResult, JustifyResult, Results,
    RunReport, TheoremsResult,
};

const EXIT_NO_EXTENSION: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_DISAGREE: u8 = 3;

/// Reasoning with dialectical arguments: extensions, justification, and
/// bridges to argumentation frameworks and default logic.
#[derive(Debug, Parser)]
#[command(name = "deflog", version)]
struct Cli {
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Largest theory the exhaustive searches accept.
    #[arg(long, global = true, value_name = "N", default_value_t = Limits::default().max_sentences)]
    max_theory: usize,

    /// Report the elapsed time (omitted by default so output is reproducible).
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every extension of a theory file.
    Extensions {
        file: PathBuf,
        /// Also list every supported and attacked sentence.
        #[arg(long)]
        full: bool,
    },
    /// Decide whether a sentence is dialectically justifiable or defeasible.
    Justify { file: PathBuf, sentence: String },
    /// Compare direct enumeration with the existence and count theorems.
    VerifyTheorems { file: PathBuf },
    /// Translate an argumentation framework (APX or pair list) and compare
    /// with its stable extensions.
    FromAf { file: PathBuf },
    /// Translate defaults and program rules, then list extensions.
    FromDefaults {
        file: PathBuf,
        #[arg(long)]
        full: bool,
    },
    /// Emit the support and attack graph in Graphviz format.
    Dot {
        file: PathBuf,
        /// Style nodes by their status in the unique extension.
        #[arg(long)]
        annotate: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn input_error(path: &Path, e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    }
}

/// One `path:line:column: message` line per syntax error.
fn syntax_errors(path: &Path, errors: &ParseErrors) -> Failure {
    let message = errors
        .0
        .iter()
        .map(|e| format!("{}:{e}", path.display()))
        .collect::<Vec<_>>()
        .join("\nerror: ");
    Failure {
        code: EXIT_INPUT,
        message,
    }
}

fn library_error(path: &Path, e: Error) -> Failure {
    match e {
        Error::Parse(errors) => syntax_errors(path, &errors),
        other => input_error(path, other),
    }
}

fn read(path: &Path) -> Result<(String, String), Failure> {
    let bytes = fs::read(path).map_err(|e| input_error(path, e))?;
    let text = String::from_utf8(bytes).map_err(|e| input_error(path, e))?;
    let digest = digest(text.as_bytes());
    Ok((text, digest))
}

fn read_theory(path: &Path) -> Result<(Theory, String), Failure> {
    let (text, digest) = read(path)?;
    let theory = parse_theory(&text).map_err(|e| syntax_errors(path, &e))?;
    Ok((theory, digest))
}

/// The report and the exit code it warrants.
fn execute(cli: &Cli) -> Result<(RunReport, u8), Failure> {
    let limits = Limits::new(cli.max_theory);
    let report = |command, input_digest, results| RunReport {
        command,
        input_digest,
        results,
        elapsed_ms: None,
    };
    Ok(match &cli.command {
        Command::Extensions { file, full } => {
            let (theory, d) = read_theory(file)?;
            let exts = extensions_with(&theory, limits).map_err(|e| input_error(file, e))?;
            let code = if exts.is_empty() {
                EXIT_NO_EXTENSION
            } else {
                0
            };
            let r = ExtensionsResult::new(&theory, &exts, *full);
            (report("extensions", d, Results::Extensions(r)), code)
        }
        Command::Justify { file, sentence } => {
            let (theory, d) = read_theory(file)?;
            let phi = parse_sentence(sentence).map_err(|e| Failure {
                code: EXIT_INPUT,
                message: format!("sentence: {e}"),
            })?;
            let analysis =
                Analysis::with_limits(&theory, limits).map_err(|e| input_error(file, e))?;
            let r = JustifyResult::new(&analysis.verdict(&phi));
            (report("justify", d, Results::Justify(r)), 0)
        }
        Command::VerifyTheorems { file } => {
            let (theory, d) = read_theory(file)?;
            let direct = extensions_with(&theory, limits)
                .map_err(|e| input_error(file, e))?
                .len();
            let analysis =
                Analysis::with_limits(&theory, limits).map_err(|e| input_error(file, e))?;
            let (exists, count) = (analysis.has_extension(), analysis.count_extensions());
            let agree = exists == (direct > 0) && count == direct;
            let r = TheoremsResult {
                direct_count: direct,
                oracle_existence: exists,
                oracle_count: count,
                agree,
            };
            let code = if agree { 0 } else { EXIT_DISAGREE };
            (report("verify-theorems", d, Results::Theorems(r)), code)
        }
        Command::FromAf { file } => {
            let (text, d) = read(file)?;
            let af = parse_af(&text).map_err(|e| library_error(file, e))?;
            let corr = stable_correspondence(&af, limits).map_err(|e| input_error(file, e))?;
            let r = FromAfResult::new(&corr.theory, &corr.deflog, &corr.stable);
            let code = if r.matches { 0 } else { EXIT_DISAGREE };
            (report("from-af", d, Results::FromAf(r)), code)
        }
        Command::FromDefaults { file, full } => {
            let (text, d) = read(file)?;
            let theory = parse_default_theory(&text)
                .map_err(|e| syntax_errors(file, &e))?
                .to_theory()
                .map_err(|e| input_error(file, e))?;
            let exts = extensions_with(&theory, limits).map_err(|e| input_error(file, e))?;
            let code = if exts.is_empty() {
                EXIT_NO_EXTENSION
            } else {
                0
            };
            let r = FromDefaultsResult {
                theory: theory.iter().map(ToString::to_string).collect(),
                extensions: ExtensionsResult::new(&theory, &exts, *full),
            };
            (report("from-defaults", d, Results::FromDefaults(r)), code)
        }
        Command::Dot { file, annotate } => {
            let (theory, d) = read_theory(file)?;
            let dot = if *annotate {
                annotated_dot(&theory, limits).map_err(|e| input_error(file, e))?
            } else {
                to_dot(&theory, None)
            };
            (report("dot", d, Results::Dot(DotResult { dot })), 0)
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    match execute(&cli) {
        Ok((mut report, code)) => {
            let elapsed = start.elapsed().as_millis();
            if cli.timing {
                report.elapsed_ms = Some(elapsed);
            }
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&report).expect("report serializes")
                );
            } else {
                print!("{}", report.render_text());
                if cli.timing {
                    eprintln!("elapsed: {elapsed} ms");
                }
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

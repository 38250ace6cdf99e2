//! `casimir` — construct, verify, and emit Casimir elements of sp(m).
//!
//! Exit codes: 0 success, 1 failed checks or refused work, 2 usage errors.

use casimir_core::casimir::{build_from_words, build_reference, reference_tuple_count};
use casimir_core::verify::{run_suite, Suite};
use casimir_core::words::{listing_lines, sign_exponent, sign_of};
use casimir_core::{json, render, words};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "casimir",
    version,
    about = "Casimir elements of sp(m) in exact arithmetic"
)]
struct Cli {
    /// Worker threads for parallel fan-out (default: all cores, or
    /// CASIMIR_THREADS). Results do not depend on this value.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Theorem,
    Reference,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyFormat {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum WordFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Structure,
    Casimir,
    Ktype,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// List the admissible words of length 2r with L(w) and sign.
    Words {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        /// Use the unbalanced (no wrap-around, E+ count off by one) variant.
        #[arg(long)]
        claim: bool,
        #[arg(long, value_enum, default_value_t = WordFormat::Text)]
        format: WordFormat,
        /// Write output to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build the Casimir element D_{2r} at rank m and emit it.
    Casimir {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        r: u32,
        /// theorem: signed word sum; reference: dual-basis trace formula.
        #[arg(long, value_enum, default_value_t = Method::Theorem)]
        method: Method,
        /// Emit the PBW normal form instead of the raw sum.
        #[arg(long)]
        normalize: bool,
        #[arg(long, value_enum, default_value_t = PolyFormat::Text)]
        format: PolyFormat,
        /// Run the reference method even past the tuple-count guard.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suites; exit 0 iff every check passes.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        m: u32,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..))]
        max_r: u32,
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Serialize)]
struct WordEntry {
    letters: Vec<&'static str>,
    #[serde(rename = "L")]
    l: usize,
    sign: i64,
}

#[derive(Serialize)]
struct WordListing {
    r: u32,
    claim: bool,
    count: usize,
    words: Vec<WordEntry>,
}

fn emit(text: String, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
    }
}

fn cmd_words(r: u32, claim: bool, format: WordFormat, out: Option<&PathBuf>) -> Result<(), String> {
    let r = r as usize;
    let listed = if claim {
        words::enumerate_words_unbalanced(r)
    } else {
        words::enumerate_words(r)
    }
    .map_err(|e| e.to_string())?;
    if listed.len() != 4usize.pow(r as u32) {
        return Err(format!(
            "enumeration bug: {} words at r={r}, expected {}",
            listed.len(),
            4usize.pow(r as u32)
        ));
    }
    let text = match format {
        WordFormat::Text => {
            let mut t = listing_lines(r, claim)
                .map_err(|e| e.to_string())?
                .join("\n");
            t.push('\n');
            t
        }
        WordFormat::Json => {
            let doc = WordListing {
                r: r as u32,
                claim,
                count: listed.len(),
                words: listed
                    .iter()
                    .map(|w| WordEntry {
                        letters: w.letters().iter().map(|l| l.ascii()).collect(),
                        l: sign_exponent(w),
                        sign: sign_of(w),
                    })
                    .collect(),
            };
            let mut t = serde_json::to_string(&doc).expect("serialization cannot fail");
            t.push('\n');
            t
        }
    };
    emit(text, out)
}

fn cmd_casimir(
    m: u32,
    r: u32,
    method: Method,
    normalize: bool,
    format: PolyFormat,
    force: bool,
    out: Option<&PathBuf>,
) -> Result<(), String> {
    let (m, r) = (m as usize, r as usize);
    let poly = match method {
        Method::Theorem => build_from_words(r, m).map_err(|e| e.to_string())?,
        Method::Reference => {
            let tuples = reference_tuple_count(2 * r, m);
            let too_big = !matches!(tuples, Some(t) if t <= 100_000_000);
            if too_big && !force {
                return Err(format!(
                    "reference method would visit {} basis tuples (limit 10^8); pass --force to proceed",
                    tuples.map_or("more than u128".to_string(), |t| t.to_string())
                ));
            }
            build_reference(2 * r, m).map_err(|e| e.to_string())?
        }
    };
    let poly = if normalize {
        poly.pbw_normalize()
    } else {
        poly
    };
    let mut text = match format {
        PolyFormat::Text => render::text(&poly),
        PolyFormat::Latex => render::latex(&poly),
        PolyFormat::Json => json::encode(&poly),
    };
    text.push('\n');
    emit(text, out)
}

fn cmd_verify(m: u32, max_r: u32, suite: SuiteArg) -> bool {
    let suite = match suite {
        SuiteArg::Structure => Suite::Structure,
        SuiteArg::Casimir => Suite::Casimir,
        SuiteArg::Ktype => Suite::Ktype,
        SuiteArg::All => Suite::All,
    };
    let checks = run_suite(suite, m as usize, max_r as usize);
    let mut all_pass = true;
    for c in &checks {
        let status = if c.pass { "PASS" } else { "FAIL" };
        println!("[{status}] {:<55} {:>6} ms", c.name, c.millis);
        if let Some(detail) = &c.detail {
            println!("       {detail}");
        }
        all_pass &= c.pass;
    }
    println!(
        "{}/{} checks passed",
        checks.iter().filter(|c| c.pass).count(),
        checks.len()
    );
    all_pass
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let threads = cli
        .threads
        .or_else(|| {
            std::env::var("CASIMIR_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .filter(|&n| n > 0);
    if let Some(n) = threads {
        // Ignore the error if a pool already exists; results are identical.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }

    let outcome = match &cli.command {
        Command::Words {
            r,
            claim,
            format,
            out,
        } => cmd_words(*r, *claim, *format, out.as_ref()),
        Command::Casimir {
            m,
            r,
            method,
            normalize,
            format,
            force,
            out,
        } => cmd_casimir(*m, *r, *method, *normalize, *format, *force, out.as_ref()),
        Command::Verify { m, max_r, suite } => {
            return if cmd_verify(*m, *max_r, *suite) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };

    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

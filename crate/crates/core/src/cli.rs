//! Command-line front end. [`run`] takes the argument vector and output
//! streams and returns the process exit code, so the binary stays a thin
//! wrapper and every command can be exercised in-process.
//!
//! Exit codes: 0 accept or success, 1 reject or mismatch, 2 usage, parse or
//! construction error.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::automata::{
    build_derivative_quotient_dfa, build_pointed_dfa, build_quotient_dfa, export_dot, export_json, isomorphic,
    minimize, run_dfa, Dfa, DEFAULT_MAX_STATES,
};
use crate::derivatives::{build_derivative_dfa, derivative_match};
use crate::gen::{corpus, GenConfig};
use crate::oracle::{member_oracle, words_up_to};
use crate::pointed::{initial, move_pre};
use crate::syntax::{parse, Regex};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECT: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

/// Longest word length `compare` will enumerate.
pub const COMPARE_MAX_LEN: usize = 8;

#[derive(Debug, Parser)]
#[command(name = "pregex", version, about = "Compile and match regular expressions via pointed expressions and derivatives")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Construction {
    Pointed,
    Quotient,
    Derivative,
    DerivativeQuotient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Pointed,
    Derivative,
    Oracle,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build an automaton and print it.
    Compile {
        regex: String,
        #[arg(long, value_enum, default_value = "pointed")]
        construction: Construction,
        #[arg(long)]
        minimize: bool,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Decide whether WORD belongs to the language of REGEX.
    Match {
        regex: String,
        word: String,
        #[arg(long, value_enum, default_value = "pointed")]
        engine: Engine,
    },
    /// Print the pointed state after each symbol of WORD.
    Trace { regex: String, word: String },
    /// Build all four automata and cross-check them on every word up to MAX_LEN.
    Compare { regex: String, max_len: usize },
    /// Print pseudo-random regular expressions, one per line.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long = "max-leaves", alias = "maxLeaves", default_value_t = 8)]
        max_leaves: usize,
        #[arg(long, default_value = "abc")]
        alphabet: String,
    },
}

fn parse_or_report(text: &str, err: &mut dyn Write) -> Option<Regex> {
    match parse(text) {
        Ok(r) => Some(r),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            None
        }
    }
}

pub fn build(r: &Regex, construction: Construction) -> Result<Dfa, String> {
    match construction {
        Construction::Pointed => Ok(build_pointed_dfa(r)),
        Construction::Quotient => Ok(build_quotient_dfa(r)),
        Construction::Derivative => build_derivative_dfa(r, DEFAULT_MAX_STATES).map_err(|e| e.to_string()),
        Construction::DerivativeQuotient => build_derivative_quotient_dfa(r).map_err(|e| e.to_string()),
    }
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };

    match cli.command {
        Command::Compile { regex, construction, minimize: min, format } => {
            let Some(r) = parse_or_report(&regex, err) else { return EXIT_ERROR };
            let dfa = match build(&r, construction) {
                Ok(d) => d,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    return EXIT_ERROR;
                }
            };
            let dfa = if min { minimize(&dfa) } else { dfa };
            let text = match format {
                Format::Dot => export_dot(&dfa),
                Format::Json => export_json(&dfa) + "\n",
            };
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Command::Match { regex, word, engine } => {
            let Some(r) = parse_or_report(&regex, err) else { return EXIT_ERROR };
            let accepted = match engine {
                Engine::Pointed => run_dfa(&build_pointed_dfa(&r), &word),
                Engine::Derivative => derivative_match(&r, &word),
                Engine::Oracle => member_oracle(&r, &word),
            };
            verdict(accepted, out, false)
        }
        Command::Trace { regex, word } => {
            let Some(r) = parse_or_report(&regex, err) else { return EXIT_ERROR };
            let mut p = initial(&r);
            let _ = writeln!(out, "{p}");
            for c in word.chars() {
                p = move_pre(&p, c);
                let _ = writeln!(out, "{p}");
            }
            verdict(p.fin, out, true)
        }
        Command::Compare { regex, max_len } => {
            let Some(r) = parse_or_report(&regex, err) else { return EXIT_ERROR };
            if max_len > COMPARE_MAX_LEN {
                let _ = writeln!(err, "error: maximum length {max_len} exceeds {COMPARE_MAX_LEN}");
                return EXIT_ERROR;
            }
            compare(&r, max_len, out, err)
        }
        Command::Gen { seed, count, max_leaves, alphabet } => {
            if max_leaves == 0 {
                let _ = writeln!(err, "error: --max-leaves must be at least 1");
                return EXIT_ERROR;
            }
            if let Some(c) = alphabet.chars().find(|c| !c.is_ascii_alphanumeric()) {
                let _ = writeln!(err, "error: alphabet symbol {c:?} is not alphanumeric");
                return EXIT_ERROR;
            }
            let _ = writeln!(err, "seed={seed} count={count} max-leaves={max_leaves} alphabet={alphabet}");
            for r in corpus(seed, count, &GenConfig::new(max_leaves, &alphabet)) {
                let _ = writeln!(out, "{r}");
            }
            EXIT_OK
        }
    }
}

fn verdict(accepted: bool, out: &mut dyn Write, upper: bool) -> i32 {
    let word = match (accepted, upper) {
        (true, false) => "accept",
        (false, false) => "reject",
        (true, true) => "ACCEPT",
        (false, true) => "REJECT",
    };
    let _ = writeln!(out, "{word}");
    if accepted {
        EXIT_OK
    } else {
        EXIT_REJECT
    }
}

fn compare(r: &Regex, max_len: usize, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let constructions = [
        Construction::Pointed,
        Construction::Quotient,
        Construction::Derivative,
        Construction::DerivativeQuotient,
    ];
    // the constructions are independent and pure
    let built: Vec<Result<Dfa, String>> = std::thread::scope(|s| {
        let handles: Vec<_> = constructions.iter().map(|&c| s.spawn(move || build(r, c))).collect();
        handles.into_iter().map(|h| h.join().expect("construction thread panicked")).collect()
    });
    let mut dfas = Vec::new();
    for d in built {
        match d {
            Ok(d) => dfas.push(d),
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return EXIT_ERROR;
            }
        }
    }

    let _ = writeln!(out, "regex: {r}");
    for d in &dfas {
        let _ = writeln!(out, "{}: {} states", d.construction(), d.len());
    }

    let alphabet: Vec<char> = r.symbols().into_iter().collect();
    let words = words_up_to(&alphabet, max_len);
    let mut mismatches = 0usize;
    for w in &words {
        let expected = member_oracle(r, w);
        let mut results: Vec<(&str, bool)> = dfas.iter().map(|d| (d.construction(), run_dfa(d, w))).collect();
        results.push(("derivative-match", derivative_match(r, w)));
        for (name, got) in results {
            if got != expected {
                mismatches += 1;
                let _ = writeln!(err, "mismatch: {name} says {got} on {w:?}, oracle says {expected}");
            }
        }
    }
    let _ = writeln!(
        out,
        "agreement: {} words up to length {max_len}, {}",
        words.len(),
        if mismatches == 0 { "ok".to_string() } else { format!("{mismatches} mismatches") }
    );
    let iso = isomorphic(&dfas[1], &dfas[3]).unwrap_or(false);
    let _ = writeln!(out, "quotients isomorphic: {}", if iso { "yes" } else { "no" });

    if mismatches == 0 && iso {
        let _ = writeln!(out, "OK");
        EXIT_OK
    } else {
        let _ = writeln!(out, "FAIL");
        EXIT_REJECT
    }
}

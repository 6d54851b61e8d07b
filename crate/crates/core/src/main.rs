//! Command-line surface. All analysis lives in the library; this binary
//! parses arguments, loads the code, and prints one report per run.
//!
//! Exit codes: 0 success, 2 usage or precondition failure, 3 anomaly (a
//! checked statement failed on an instance — see the theorem report).

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use am_designs::am::TheoremId;
use am_designs::code::{construct_extended_golay, construct_golay, construct_golay_dual, LinearCode};
use am_designs::harmonic::Limits;
use am_designs::io::parse_code_file;
use am_designs::report::{self, Envelope};
use am_designs::Error;

#[derive(Parser)]
#[command(
    name = "am-designs",
    version,
    about = "Exact design-strength analysis for short linear codes over small prime fields"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Weight distribution, dual distance, and per-weight design strengths
    Analyze {
        #[command(flatten)]
        code: CodeArgs,
        /// Largest strength probed per weight class
        #[arg(long, default_value_t = 5)]
        probe: u32,
    },
    /// Exhaustive t-design test for one weight class
    Design {
        #[command(flatten)]
        code: CodeArgs,
        /// Codeword weight whose supports form the blocks
        #[arg(long)]
        weight: u32,
        /// Strength to test
        #[arg(long)]
        t: u32,
    },
    /// Weight-window strength condition and the admissible t values
    Am {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Check one classification statement (1.1, 1.2, or 1.3) on the code
    Theorem {
        #[command(flatten)]
        code: CodeArgs,
        /// Statement id: 1.1, 1.2, or 1.3
        #[arg(long)]
        id: String,
    },
    /// Harmonic-coefficient vanishing per weight, optionally a design check
    Harmonic {
        #[command(flatten)]
        code: CodeArgs,
        /// Harmonic degree
        #[arg(long)]
        k: usize,
        /// Weight class for a vanishing-based design check
        #[arg(long, requires = "t")]
        weight: Option<u32>,
        /// Strength for the design check
        #[arg(long, requires = "weight")]
        t: Option<u32>,
        /// Cap on the harmonic degree
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Cap on the number of k-subsets indexed
        #[arg(long, default_value_t = 20_000)]
        max_subsets: u64,
    },
    /// Root scan of the strength-gap sums, verified by counting
    Criterion {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Sphere-counting identity for two- and three-weight codes
    Identity {
        #[command(flatten)]
        code: CodeArgs,
    },
    /// Scan for Hamming-ball sizes that are exact powers of q
    Diophantine {
        /// Alphabet size (at least 2)
        #[arg(long)]
        q: u64,
        /// Ball radius
        #[arg(long)]
        ell: u32,
        /// Largest length scanned
        #[arg(long)]
        nmax: u64,
        /// Emit the machine-readable JSON envelope instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the built-in generator matrices in the code-file format
    Fixtures {
        /// Emit the machine-readable JSON envelope instead of text
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct CodeArgs {
    /// Path to a generator-matrix file: header `q n k`, then k digit rows
    #[arg(long, value_name = "PATH", conflicts_with = "fixture")]
    code: Option<PathBuf>,
    /// Built-in code
    #[arg(long, value_enum)]
    fixture: Option<Fixture>,
    /// Cap on codewords enumerated per code (default 3^16)
    #[arg(long)]
    budget: Option<u64>,
    /// Emit the machine-readable JSON envelope instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fixture {
    Golay11,
    Golay11dual,
    Golay12,
}

fn load_code(args: &CodeArgs) -> Result<LinearCode, Error> {
    let mut code = match (&args.code, args.fixture) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidParameter {
                detail: format!("cannot read {}: {e}", path.display()),
            })?;
            let name = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "code".into());
            parse_code_file(&text)?.with_name(name)
        }
        (None, Some(Fixture::Golay11)) => construct_golay(),
        (None, Some(Fixture::Golay11dual)) => construct_golay_dual(),
        (None, Some(Fixture::Golay12)) => construct_extended_golay(),
        _ => {
            return Err(Error::InvalidParameter {
                detail: "provide exactly one of --code PATH or --fixture NAME".into(),
            })
        }
    };
    if let Some(b) = args.budget {
        code = code.with_budget(b);
    }
    Ok(code)
}

/// Runs one parsed command; returns the envelope and whether JSON was asked.
fn execute(cmd: Cmd) -> Result<(Envelope, bool), Error> {
    let (rep, json) = match cmd {
        Cmd::Analyze { code, probe } => {
            let c = load_code(&code)?;
            (report::analyze_report(&c, probe)?, code.json)
        }
        Cmd::Design { code, weight, t } => {
            let c = load_code(&code)?;
            (report::design_report(&c, weight, t)?, code.json)
        }
        Cmd::Am { code } => {
            let c = load_code(&code)?;
            (report::am_report(&c)?, code.json)
        }
        Cmd::Theorem { code, id } => {
            let tid = TheoremId::parse(&id).ok_or_else(|| Error::InvalidParameter {
                detail: format!("unknown statement id `{id}`; use 1.1, 1.2, or 1.3"),
            })?;
            let c = load_code(&code)?;
            (report::theorem_report(&c, tid)?, code.json)
        }
        Cmd::Harmonic { code, k, weight, t, max_degree, max_subsets } => {
            let c = load_code(&code)?;
            let limits = Limits { max_degree, max_subsets };
            (report::harmonic_report(&c, k, weight.zip(t), limits)?, code.json)
        }
        Cmd::Criterion { code } => {
            let c = load_code(&code)?;
            (report::criterion_report(&c)?, code.json)
        }
        Cmd::Identity { code } => {
            let c = load_code(&code)?;
            (report::identity_report(&c)?, code.json)
        }
        Cmd::Diophantine { q, ell, nmax, json } => {
            (report::diophantine_report(q, ell, nmax)?, json)
        }
        Cmd::Fixtures { json } => (report::fixtures_report(), json),
    };
    Ok((Envelope::new(rep), json))
}

fn run(cmd: Cmd) -> i32 {
    match execute(cmd) {
        Ok((env, json)) => {
            if json {
                println!("{}", serde_json::to_string_pretty(&env).expect("reports serialize"));
            } else {
                print!("{env}");
            }
            if report::is_anomalous(&env.report) {
                3
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli.cmd));
}

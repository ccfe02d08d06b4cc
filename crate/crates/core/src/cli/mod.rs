//! Command-line interface: argument parsing, job execution and exit codes.
//!
//! Exit codes: 0 success, 1 a check failed, 2 invalid input, 3 size limit exceeded.

mod commands;
pub mod io;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::bredon::BredonError;
use crate::coeff::CoeffError;
use crate::galoisff::GaloisError;
use crate::interp::InterpError;
use crate::orbitcat::DEFAULT_SIZE_CAP;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    SizeLimit(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::SizeLimit(_) => 3,
            CliError::Internal(_) => 1,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Validation(_) => "validation",
            CliError::SizeLimit(_) => "size-limit",
            CliError::Internal(_) => "internal",
        }
    }
}

impl From<BredonError> for CliError {
    fn from(e: BredonError) -> Self {
        match e {
            BredonError::SizeLimit(s) => CliError::SizeLimit(s),
            BredonError::Linear(_) => CliError::Internal(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<CoeffError> for CliError {
    fn from(e: CoeffError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<InterpError> for CliError {
    fn from(e: InterpError) -> Self {
        match e {
            InterpError::SizeLimit(s) => CliError::SizeLimit(s),
            InterpError::Linear(_) => CliError::Internal(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<GaloisError> for CliError {
    fn from(e: GaloisError) -> Self {
        match e {
            GaloisError::Bredon(b) => b.into(),
            GaloisError::Coeff(c) => c.into(),
            other => CliError::Validation(other.to_string()),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "bredon", version, about = "Bredon cohomology of finite groups over orbit categories")]
pub struct Cli {
    /// Largest number of chains (or enumerated objects) in one degree
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    pub size_cap: usize,
    /// Worker threads; results do not depend on this
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Write the output document here instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Cross-validate against the interpretation layers; mismatches exit with 1
    #[arg(long, global = true)]
    pub check: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GroupArgs {
    /// Group file, or a catalogue name such as C4, S3, C2xC2
    #[arg(long)]
    pub group: String,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Bredon cohomology of a fixed point functor
    Cohomology {
        #[command(flatten)]
        group: GroupArgs,
        /// Family file or trivial-only, full, cyclic
        #[arg(long)]
        family: String,
        #[arg(long)]
        module: String,
        /// Inclusive range such as 0..2
        #[arg(long, default_value = "0..2")]
        degrees: String,
        /// Include representative cocycles
        #[arg(long)]
        cocycles: bool,
    },
    /// F-structure classes, compared with the order of H²
    Structures {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        family: String,
        #[arg(long)]
        module: String,
    },
    /// F-derivations modulo principal ones
    Derivations {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        family: String,
        #[arg(long)]
        module: String,
    },
    /// Characters of a subgroup vanishing on the family
    Characters {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        family: String,
        /// Comma-separated elements generating the subgroup; the whole group by default
        #[arg(long)]
        subgroup: Option<String>,
    },
    /// Bredon-Galois cohomology of GF(p^n)/GF(p^d)
    Galois {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value = "full")]
        family: String,
        #[arg(long, default_value = "1..3")]
        degrees: String,
    },
    /// Close a family under conjugation and/or subgroups
    FamilyClose {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        family: String,
        #[arg(long)]
        conjugation: bool,
        #[arg(long)]
        subgroups: bool,
    },
    /// Ordinary group cohomology from the bar complex
    Oracle {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        module: String,
        #[arg(long, default_value = "0..2")]
        degrees: String,
    },
    /// Run a verification suite: oracle, characters, structures, galois, properties, all
    Check { suite: String },
}

/// Output document plus whether every requested check passed.
pub struct Outcome {
    pub document: String,
    pub pass: bool,
    /// Wall-clock lines for stderr; kept out of the document so it stays reproducible.
    pub timings: Vec<String>,
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let job = || commands::dispatch(cli);
    match cli.threads {
        Some(0) => Err(CliError::Validation("--threads must be positive".into())),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Internal(e.to_string()))?
            .install(job),
        None => job(),
    }
}

fn diagnostic(e: &CliError) -> String {
    serde_json::json!({"error": e.kind(), "message": e.to_string()}).to_string()
}

/// Parses `args` (program name first), runs the job, writes the document, returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(out) => {
            for line in &out.timings {
                eprintln!("{line}");
            }
            let written = match &cli.output {
                Some(path) => std::fs::write(path, format!("{}\n", out.document)),
                None => writeln!(std::io::stdout(), "{}", out.document),
            };
            if let Err(e) = written {
                eprintln!("{}", diagnostic(&CliError::Validation(format!("cannot write output: {e}"))));
                return 2;
            }
            if out.pass {
                0
            } else {
                1
            }
        }
        Err(e) => {
            eprintln!("{}", diagnostic(&e));
            e.exit_code()
        }
    }
}

// Running command-line jobs in-process.

use std::error::Error;

use bredon::cli::{execute, Cli};
use clap::Parser;

/// The JSON document of `cohomology` for `C2`, `F = {e}`, trivial `Z`.
pub fn run_example() -> Result<serde_json::Value, Box<dyn Error>> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/data");
    let cli = Cli::try_parse_from([
        "bredon",
        "cohomology",
        "--group",
        &format!("{dir}/c2.json"),
        "--family",
        "trivial-only",
        "--module",
        &format!("{dir}/z-trivial.json"),
        "--degrees",
        "0..2",
        "--check",
    ])?;
    let out = execute(&cli)?;
    println!("{}", out.document);
    assert!(out.pass);
    Ok(serde_json::from_str(&out.document)?)
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example().map(|_| ())
}

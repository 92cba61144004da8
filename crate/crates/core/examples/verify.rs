//! Runs every applicable check against a theory file.
//!
//!     cargo run --example verify -- path/to/theory.dlt

use std::path::{Path, PathBuf};

use deflog::cli::format::load_theory;
use deflog::cli::verify_theory;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data/birds.dlt"));
    let dt = load_theory(&path)?;
    for check in verify_theory(&dt, 16) {
        println!("{:<4} {} {}", check.status.label(), check.name, check.detail);
    }
    Ok(())
}

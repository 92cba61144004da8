//! Extensions of the Nixon diamond and of a theory about birds.
//!
//!     cargo run --example extensions

use std::path::Path;

use deflog::cli::format::load_theory;
use deflog::defaults::{enumerate_extensions, generating_defaults, is_extension};
use deflog::logic::parse_formula;
use deflog::FinTheory;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");

    for name in ["nixon.dlt", "birds.dlt"] {
        let dt = load_theory(&data.join(name))?;
        let ext = enumerate_extensions(&dt);
        println!("{name}: {} extension(s)", ext.len());
        for e in ext.iter() {
            let used: Vec<String> = generating_defaults(&dt, e).iter().map(|d| d.to_string()).collect();
            println!("  {}  via [{}]", e.generators(), used.join("; "));
        }
    }

    // Candidates can be checked directly, without enumerating.
    let dt = load_theory(&data.join("birds.dlt"))?;
    let flying = FinTheory::from_formulas([
        parse_formula("bird")?,
        parse_formula("flies")?,
        parse_formula("!penguin")?,
    ]);
    let grounded = FinTheory::from_formulas([parse_formula("bird")?]);
    println!(
        "Cn(bird, flies, !penguin) is an extension: {}",
        is_extension(&dt, &flying)
    );
    println!("Cn(bird) is an extension: {}", is_extension(&dt, &grounded));
    Ok(())
}

//! A theory whose extensions are a given family.
//!
//!     cargo run --example represent_family

use std::path::Path;

use deflog::cli::format::{load_family, write_theory};
use deflog::defaults::enumerate_extensions;
use deflog::represent::{construct_representing, diagnose_family};
use deflog::{FinTheory, TheoryFamily};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let fam = load_family(&data.join("colors.dlf"))?;

    let diag = diagnose_family(&fam)?;
    println!("intersection: {}", diag.intersection.generators());
    println!("non-including: {}", diag.non_including);

    let dt = construct_representing(&fam)?;
    print!("{}", write_theory(&dt));
    let ext = enumerate_extensions(&dt);
    println!("round trip: {}", ext.same_as(fam.members()));

    // Families with a member inside another are rejected.
    let nested = TheoryFamily::new(vec![
        FinTheory::from_formulas([deflog::Formula::var("red")]),
        FinTheory::from_formulas([deflog::Formula::var("red"), deflog::Formula::var("blue")]),
    ])?;
    match construct_representing(&nested) {
        Ok(_) => println!("unexpected"),
        Err(e) => println!("nested family: {e}"),
    }
    Ok(())
}

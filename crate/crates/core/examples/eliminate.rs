//! Dropping extensions: a single formula, then any subfamily.
//!
//!     cargo run --example eliminate

use std::path::Path;

use deflog::cli::format::load_theory;
use deflog::defaults::enumerate_extensions;
use deflog::logic::parse_formula;
use deflog::transform::{eliminate_formula, find_ssdr, represent_subfamily};
use deflog::TheoryFamily;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let dt = load_theory(&data.join("nixon.dlt"))?;

    let without = eliminate_formula(&dt, &parse_formula("pacifist")?);
    println!("without pacifist: {:?}", enumerate_extensions(&without));

    let fam = TheoryFamily::from(enumerate_extensions(&dt));
    println!("representatives: {:?}", find_ssdr(&fam));
    for keep in [vec![0], vec![1], vec![0, 1], vec![]] {
        let sub = represent_subfamily(&dt, &fam, &keep)?;
        println!("keep {keep:?}: {:?}", enumerate_extensions(&sub));
    }
    Ok(())
}

//! Removing prerequisites while keeping the extensions.
//!
//!     cargo run --example prerequisite_free

use std::path::Path;

use deflog::cli::format::{load_theory, write_theory};
use deflog::defaults::{enumerate_extensions, equivalent};
use deflog::transform::{normal_prereq_free, prereq_free, realizable_subsets};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let dt = load_theory(&data.join("chain.dlt"))?;

    for s in realizable_subsets(&dt) {
        println!("realizable: {:?} (order {:?})", s.members, s.order);
    }
    let pf = prereq_free(&dt);
    print!("{}", write_theory(&pf));
    println!("equivalent: {}", equivalent(&dt, &pf));
    println!("extensions: {:?}", enumerate_extensions(&pf));

    // Normal theories stay normal.
    let nixon = load_theory(&data.join("nixon.dlt"))?;
    let hat = normal_prereq_free(&nixon)?;
    print!("{}", write_theory(&hat));
    println!("normal: {}, equivalent: {}", hat.is_normal(), equivalent(&nixon, &hat));
    Ok(())
}

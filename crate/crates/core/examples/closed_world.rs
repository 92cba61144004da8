//! Translating a normal theory to closed-world defaults over fresh atoms.
//!
//!     cargo run --example closed_world

use std::path::Path;

use deflog::cli::format::{load_theory, write_theory};
use deflog::cwa::{cwa_translate, verify_cwa};
use deflog::defaults::{enumerate_extensions, project_extensions, same_theories};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let dt = load_theory(&data.join("nixon.dlt"))?;

    let tr = cwa_translate(&dt)?;
    for (psi, atom) in &tr.fresh_atoms {
        println!("{atom} stands for !({psi})");
    }
    print!("{}", write_theory(&tr.result));

    let projected = project_extensions(&enumerate_extensions(&tr.result), &tr.base_atoms);
    for t in &projected {
        println!("projected: {}", t.generators());
    }
    let original = enumerate_extensions(&dt);
    println!(
        "same as the source extensions: {}",
        same_theories(&projected, original.members())
    );
    println!("verified: {}", verify_cwa(&dt, &tr));
    Ok(())
}

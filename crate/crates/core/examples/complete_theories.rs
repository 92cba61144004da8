//! Extensions that decide a chosen set of atoms.
//!
//!     cargo run --example complete_theories

use std::path::Path;

use deflog::cli::format::{load_theory, write_theory};
use deflog::defaults::enumerate_extensions;
use deflog::represent::{comp_defaults, minimal_p_complete, tree_defaults};
use deflog::{Atom, DefaultTheory};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/data");
    let w = load_theory(&data.join("world.dlt"))?.world().clone();
    let atoms = vec![Atom::new("p")?, Atom::new("q")?];

    let comp = DefaultTheory::new(comp_defaults(&atoms)?, w.clone());
    let ext = enumerate_extensions(&comp);
    println!("completion: {ext:?}");
    println!(
        "matches minimal complete theories: {}",
        ext.same_as(minimal_p_complete(&w, &atoms)?.members())
    );

    let tree = tree_defaults(&w, &atoms)?;
    print!("{}", write_theory(&tree));
    println!("tree: {:?}", enumerate_extensions(&tree));
    Ok(())
}

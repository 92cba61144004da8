//! Normal theories: maximal consistent subsets and moving the world into
//! the defaults.
//!
//!     cargo run --example normal_theories

use deflog::cli::format::write_theory;
use deflog::defaults::{enumerate_extensions, equivalent};
use deflog::logic::parse_formula;
use deflog::represent::{construct_normal_representing, maximal_consistent_subsets};
use deflog::transform::to_empty_w;
use deflog::FormulaSet;

fn set(texts: &[&str]) -> FormulaSet {
    texts.iter().map(|t| parse_formula(t).unwrap()).collect()
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = set(&["p -> q"]);
    let psi = set(&["p", "!q", "r"]);

    for phi in maximal_consistent_subsets(&w, &psi)? {
        println!("maximal: {phi}");
    }
    let dt = construct_normal_representing(&w, &psi);
    println!("extensions: {:?}", enumerate_extensions(&dt));

    let moved = to_empty_w(&dt)?;
    print!("{}", write_theory(&moved));
    println!("equivalent: {}", equivalent(&dt, &moved));

    // An unsatisfiable world leaves only the whole language.
    let broken = construct_normal_representing(&set(&["p", "!p"]), &psi);
    println!("inconsistent world: {:?}", enumerate_extensions(&broken));
    Ok(())
}

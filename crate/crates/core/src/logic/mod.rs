//! Propositional logic: formulas, parsing, satisfiability and finitely
//! generated theories.

pub mod formula;
pub mod parse;
pub mod sat;
pub mod theory;

pub use formula::{Atom, Formula, RESERVED_PREFIX};
pub use parse::{parse_formula, ParseError};
pub use theory::{entails, forget, is_satisfiable, theory_equal, FinTheory, FormulaSet};

//! Propositional default logic.
//!
//! Extensions of finite default theories, equivalence-preserving
//! transformations, representability constructions for finite families of
//! theories, and the closed-world translation of normal theories.
//!
//! ```
//! use deflog::defaults::enumerate_extensions;
//! use deflog::logic::parse_formula;
//! use deflog::{DefaultRule, DefaultTheory, FormulaSet};
//!
//! let p = parse_formula("p").unwrap();
//! let not_p = parse_formula("!p").unwrap();
//! let dt = DefaultTheory::new(
//!     [DefaultRule::supernormal(p), DefaultRule::supernormal(not_p)],
//!     FormulaSet::new(),
//! );
//! assert_eq!(enumerate_extensions(&dt).len(), 2);
//! ```

pub mod cli;
pub mod cwa;
pub mod defaults;
mod error;
pub mod logic;
pub mod represent;
pub mod transform;

pub use defaults::{DefaultRule, DefaultTheory, ExtensionSet, MonotoneRule};
pub use error::Error;
pub use logic::{Atom, FinTheory, Formula, FormulaSet};
pub use represent::TheoryFamily;

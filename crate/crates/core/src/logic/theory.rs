//! Finite formula sets and the deductively closed theories they generate.

use std::collections::BTreeSet;
use std::fmt;

use indexmap::IndexSet;

use super::formula::{Atom, Formula};
use super::sat::{satisfiable, Cnf};

/// Insertion-ordered set of formulas, deduplicated structurally.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FormulaSet(IndexSet<Formula>);

impl FormulaSet {
    pub fn new() -> Self {
        FormulaSet(IndexSet::new())
    }

    pub fn insert(&mut self, f: Formula) -> bool {
        self.0.insert(f)
    }

    pub fn extend<I: IntoIterator<Item = Formula>>(&mut self, items: I) {
        self.0.extend(items)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.0.contains(f)
    }

    pub fn get(&self, index: usize) -> Option<&Formula> {
        self.0.get_index(index)
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = &Formula> + '_ {
        self.0.iter()
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        for f in &self.0 {
            f.collect_atoms(&mut out);
        }
        out
    }

    /// The conjunction of the members, `true` when empty.
    pub fn conjunction(&self) -> Formula {
        Formula::conjunction(self.0.iter().cloned())
    }

    pub fn union(&self, other: &FormulaSet) -> FormulaSet {
        let mut out = self.clone();
        out.extend(other.iter().cloned());
        out
    }

    pub fn with(&self, f: Formula) -> FormulaSet {
        let mut out = self.clone();
        out.insert(f);
        out
    }
}

impl FromIterator<Formula> for FormulaSet {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        FormulaSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a FormulaSet {
    type Item = &'a Formula;
    type IntoIter = indexmap::set::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl IntoIterator for FormulaSet {
    type Item = Formula;
    type IntoIter = indexmap::set::IntoIter<Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.into_iter()
    }
}

impl fmt::Debug for FormulaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl fmt::Display for FormulaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

/// `true` iff some valuation satisfies every member of `fs`.
pub fn is_satisfiable(fs: &FormulaSet) -> bool {
    satisfiable(fs.iter())
}

/// `fs ⊢ f`, decided as unsatisfiability of `fs ∪ {¬f}`.
pub fn entails(fs: &FormulaSet, f: &Formula) -> bool {
    entails_all(fs.iter(), f)
}

pub(crate) fn entails_all<'a, I: IntoIterator<Item = &'a Formula>>(premises: I, f: &Formula) -> bool {
    let mut cnf = Cnf::new();
    for p in premises {
        cnf.assert(p);
    }
    cnf.assert(&Formula::not(f.clone()));
    !cnf.is_satisfiable()
}

/// Formula over the atoms of `fs` minus `atom` whose consequences are
/// exactly the consequences of `fs` that do not mention `atom`.
pub fn forget(fs: &FormulaSet, atom: &Atom) -> Formula {
    forget_formula(&fs.conjunction(), atom)
}

pub(crate) fn forget_formula(f: &Formula, atom: &Atom) -> Formula {
    let f = f.simplify();
    if !f.mentions(atom) {
        return f;
    }
    let hi = f.substitute(atom, true);
    let lo = f.substitute(atom, false);
    if hi == lo {
        return hi;
    }
    Formula::or(hi, lo).simplify()
}

/// `Cn(generators)`; the whole language when the generators are unsatisfiable.
#[derive(Clone)]
pub struct FinTheory {
    generators: FormulaSet,
    inconsistent: bool,
}

impl FinTheory {
    pub fn new(generators: FormulaSet) -> Self {
        let inconsistent = !is_satisfiable(&generators);
        FinTheory {
            generators,
            inconsistent,
        }
    }

    pub fn from_formulas<I: IntoIterator<Item = Formula>>(items: I) -> Self {
        FinTheory::new(items.into_iter().collect())
    }

    /// `Cn(∅)`, the tautologies.
    pub fn tautologies() -> Self {
        FinTheory {
            generators: FormulaSet::new(),
            inconsistent: false,
        }
    }

    /// The whole language, generated by `false`.
    pub fn inconsistent_theory() -> Self {
        FinTheory {
            generators: std::iter::once(Formula::Bottom).collect(),
            inconsistent: true,
        }
    }

    pub fn generators(&self) -> &FormulaSet {
        &self.generators
    }

    pub fn into_generators(self) -> FormulaSet {
        self.generators
    }

    pub fn is_inconsistent(&self) -> bool {
        self.inconsistent
    }

    pub fn entails(&self, f: &Formula) -> bool {
        self.inconsistent || entails(&self.generators, f)
    }

    /// `self ⊆ other` as closed theories.
    pub fn is_subset_of(&self, other: &FinTheory) -> bool {
        if other.inconsistent {
            return true;
        }
        if self.inconsistent {
            return false;
        }
        self.generators.iter().all(|g| other.entails(g))
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        self.generators.atoms()
    }

    /// Projection onto the sublanguage of `keep`: forgets every other atom.
    pub fn project(&self, keep: &BTreeSet<Atom>) -> FinTheory {
        if self.inconsistent {
            return FinTheory::inconsistent_theory();
        }
        let mut f = self.generators.conjunction();
        for atom in self.atoms().difference(keep) {
            f = forget_formula(&f, atom);
        }
        match f {
            Formula::Top => FinTheory::tautologies(),
            f => FinTheory::from_formulas([f]),
        }
    }

    /// Canonical text of the generator conjunction; used as a sort key.
    pub fn sort_key(&self) -> String {
        if self.inconsistent {
            return Formula::Bottom.to_string();
        }
        self.generators.conjunction().to_string()
    }
}

/// Equality of the generated closed theories. All inconsistent theories
/// are equal.
pub fn theory_equal(t1: &FinTheory, t2: &FinTheory) -> bool {
    match (t1.inconsistent, t2.inconsistent) {
        (true, true) => true,
        (false, false) => t1.is_subset_of(t2) && t2.is_subset_of(t1),
        _ => false,
    }
}

impl PartialEq for FinTheory {
    fn eq(&self, other: &Self) -> bool {
        theory_equal(self, other)
    }
}

impl fmt::Debug for FinTheory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cn({:?})", self.generators)
    }
}

impl fmt::Display for FinTheory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cn({})", self.generators)
    }
}

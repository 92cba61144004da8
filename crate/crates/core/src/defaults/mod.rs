//! Default theories and their extensions.
//!
//! A theory `S` is an extension of `(D, W)` when `S` equals the closure of
//! `W` under propositional consequence and the monotone rules `p(d)/c(d)`
//! of the defaults whose justifications are all consistent with `S`.

mod search;

use std::collections::BTreeSet;
use std::fmt;

use crate::logic::theory::entails_all;
use crate::logic::{entails, Atom, FinTheory, Formula, FormulaSet};

pub use search::{enumerate_extensions, enumerate_extensions_by_subsets};

/// A default `prereq : justifications / consequent`.
#[derive(Clone, PartialEq, Eq)]
pub struct DefaultRule {
    pub prereq: Formula,
    pub justifications: FormulaSet,
    pub consequent: Formula,
}

impl DefaultRule {
    pub fn new(prereq: Formula, justifications: FormulaSet, consequent: Formula) -> Self {
        DefaultRule {
            prereq,
            justifications,
            consequent,
        }
    }

    /// `:justifications/consequent` with prerequisite `true`.
    pub fn prerequisite_free<I: IntoIterator<Item = Formula>>(justifications: I, consequent: Formula) -> Self {
        DefaultRule::new(Formula::Top, justifications.into_iter().collect(), consequent)
    }

    /// The normal default `prereq : f / f`.
    pub fn normal(prereq: Formula, f: Formula) -> Self {
        DefaultRule::new(prereq, std::iter::once(f.clone()).collect(), f)
    }

    /// The normal prerequisite-free default `:f/f`.
    pub fn supernormal(f: Formula) -> Self {
        DefaultRule::normal(Formula::Top, f)
    }

    /// Prerequisite is a tautology.
    pub fn is_prerequisite_free(&self) -> bool {
        matches!(self.prereq, Formula::Top) || entails(&FormulaSet::new(), &self.prereq)
    }

    /// Single justification, structurally equal to the consequent.
    pub fn is_normal(&self) -> bool {
        self.justifications.len() == 1 && self.justifications.get(0) == Some(&self.consequent)
    }

    pub fn monotone_rule(&self) -> MonotoneRule {
        MonotoneRule {
            premise: self.prereq.clone(),
            conclusion: self.consequent.clone(),
        }
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = self.justifications.atoms();
        self.prereq.collect_atoms(&mut out);
        self.consequent.collect_atoms(&mut out);
        out
    }
}

// Same layout as a `d` statement of a theory file, without the keyword.
impl fmt::Display for DefaultRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.prereq != Formula::Top {
            write!(f, "{} ", self.prereq)?;
        }
        f.write_str(":")?;
        for (i, j) in self.justifications.iter().enumerate() {
            f.write_str(if i == 0 { " " } else { ", " })?;
            write!(f, "{j}")?;
        }
        write!(f, " / {}", self.consequent)
    }
}

impl fmt::Debug for DefaultRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A default theory `(D, W)`. Defaults keep their input order, with
/// structural duplicates dropped; order never affects the extensions.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DefaultTheory {
    defaults: Vec<DefaultRule>,
    world: FormulaSet,
}

impl DefaultTheory {
    pub fn new<I: IntoIterator<Item = DefaultRule>>(defaults: I, world: FormulaSet) -> Self {
        let mut out: Vec<DefaultRule> = Vec::new();
        for d in defaults {
            if !out.contains(&d) {
                out.push(d);
            }
        }
        DefaultTheory { defaults: out, world }
    }

    pub fn defaults(&self) -> &[DefaultRule] {
        &self.defaults
    }

    pub fn world(&self) -> &FormulaSet {
        &self.world
    }

    pub fn is_normal(&self) -> bool {
        self.defaults.iter().all(DefaultRule::is_normal)
    }

    pub fn is_prerequisite_free(&self) -> bool {
        self.defaults.iter().all(DefaultRule::is_prerequisite_free)
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = self.world.atoms();
        for d in &self.defaults {
            out.extend(d.atoms());
        }
        out
    }

    /// Same world, defaults extended by `extra`.
    pub fn with_defaults<I: IntoIterator<Item = DefaultRule>>(&self, extra: I) -> DefaultTheory {
        DefaultTheory::new(self.defaults.iter().cloned().chain(extra), self.world.clone())
    }
}

impl fmt::Debug for DefaultTheory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DefaultTheory")
            .field("defaults", &self.defaults)
            .field("world", &self.world)
            .finish()
    }
}

/// A monotone inference rule `premise / conclusion`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneRule {
    pub premise: Formula,
    pub conclusion: Formula,
}

/// The extensions of a default theory: pairwise distinct theories sorted by
/// the canonical text of their generator conjunction.
#[derive(Clone, Debug, Default)]
pub struct ExtensionSet {
    members: Vec<FinTheory>,
}

impl ExtensionSet {
    /// Deduplicates under theory equality and sorts. Among equal theories
    /// the one with the smallest sort key is kept.
    pub fn from_theories<I: IntoIterator<Item = FinTheory>>(theories: I) -> Self {
        let mut all: Vec<(String, FinTheory)> = theories
            .into_iter()
            .map(|t| {
                let t = if t.is_inconsistent() {
                    FinTheory::inconsistent_theory()
                } else {
                    t
                };
                (t.sort_key(), t)
            })
            .collect();
        all.sort_by(|a, b| a.0.cmp(&b.0));
        let mut members: Vec<FinTheory> = Vec::new();
        for (_, t) in all {
            if !members.iter().any(|m| m == &t) {
                members.push(t);
            }
        }
        ExtensionSet { members }
    }

    pub fn members(&self) -> &[FinTheory] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, FinTheory> {
        self.members.iter()
    }

    pub fn contains(&self, t: &FinTheory) -> bool {
        self.members.iter().any(|m| m == t)
    }

    /// Set equality under theory equality.
    pub fn same_as(&self, other: &[FinTheory]) -> bool {
        same_theories(&self.members, other)
    }

    /// No member is strictly included in another.
    pub fn is_antichain(&self) -> bool {
        self.members.iter().enumerate().all(|(i, a)| {
            self.members
                .iter()
                .enumerate()
                .all(|(j, b)| i == j || !a.is_subset_of(b))
        })
    }

    pub fn into_vec(self) -> Vec<FinTheory> {
        self.members
    }
}

impl<'a> IntoIterator for &'a ExtensionSet {
    type Item = &'a FinTheory;
    type IntoIter = std::slice::Iter<'a, FinTheory>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

/// Equality of two lists of theories read as sets.
pub fn same_theories(a: &[FinTheory], b: &[FinTheory]) -> bool {
    a.iter().all(|t| b.contains(t)) && b.iter().all(|t| a.contains(t))
}

/// No justification of `d` is refuted by `s`.
pub fn is_applicable(d: &DefaultRule, s: &FinTheory) -> bool {
    if d.justifications.is_empty() {
        return true;
    }
    if s.is_inconsistent() {
        return false;
    }
    d.justifications
        .iter()
        .all(|g| !entails(s.generators(), &Formula::not(g.clone())))
}

/// `D_S`: monotone images of the `s`-applicable defaults, in input order.
pub fn reduct(dt: &DefaultTheory, s: &FinTheory) -> Vec<MonotoneRule> {
    dt.defaults()
        .iter()
        .filter(|d| is_applicable(d, s))
        .map(DefaultRule::monotone_rule)
        .collect()
}

/// Least theory containing `w` and closed under the rules.
///
/// The generators of the result are `w` followed by the conclusions of the
/// fired rules, in firing order.
pub fn monotone_closure(w: &FormulaSet, rules: &[MonotoneRule]) -> FinTheory {
    let mut generators = w.clone();
    let mut pending: Vec<&MonotoneRule> = rules.iter().collect();
    loop {
        let mut fired = false;
        let mut i = 0;
        while i < pending.len() {
            if entails_all(generators.iter(), &pending[i].premise) {
                generators.insert(pending[i].conclusion.clone());
                pending.remove(i);
                fired = true;
            } else {
                i += 1;
            }
        }
        if !fired {
            break;
        }
    }
    FinTheory::new(generators)
}

/// `s` is a fixpoint: `s = Cn^{D_S}(W)`.
pub fn is_extension(dt: &DefaultTheory, s: &FinTheory) -> bool {
    monotone_closure(dt.world(), &reduct(dt, s)) == *s
}

/// Defaults applicable with respect to `s` whose prerequisite `s` proves.
pub fn generating_defaults<'a>(dt: &'a DefaultTheory, s: &FinTheory) -> Vec<&'a DefaultRule> {
    dt.defaults()
        .iter()
        .filter(|d| is_applicable(d, s) && s.entails(&d.prereq))
        .collect()
}

/// Both theories have the same extensions.
pub fn equivalent(dt1: &DefaultTheory, dt2: &DefaultTheory) -> bool {
    let e1 = enumerate_extensions(dt1);
    let e2 = enumerate_extensions(dt2);
    e1.same_as(e2.members())
}

/// The extensions of `dt` are exactly the projections onto `base_atoms` of
/// the extensions of `dt_prime`.
pub fn semi_equivalent(dt: &DefaultTheory, dt_prime: &DefaultTheory, base_atoms: &BTreeSet<Atom>) -> bool {
    let projected = project_extensions(&enumerate_extensions(dt_prime), base_atoms);
    enumerate_extensions(dt).same_as(&projected)
}

/// Projects each member onto `keep` and deduplicates.
pub fn project_extensions(ext: &ExtensionSet, keep: &BTreeSet<Atom>) -> Vec<FinTheory> {
    let mut out: Vec<FinTheory> = Vec::new();
    for t in ext {
        let p = t.project(keep);
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

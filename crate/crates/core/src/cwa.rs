//! Closed-world translation of normal default theories.
//!
//! Each distinct consequent `ψ` of the normal prerequisite-free form gets a
//! fresh atom `p_ψ` with the bridge axiom `¬p_ψ ↔ ψ`. The defaults become
//! `:¬p/¬p` for the fresh atoms, and the extensions of the result restrict
//! to the extensions of the source theory on the source atoms.

use std::collections::BTreeSet;

use indexmap::IndexMap;

use crate::defaults::{semi_equivalent, DefaultRule, DefaultTheory};
use crate::error::Error;
use crate::logic::{is_satisfiable, Atom, Formula, FormulaSet, RESERVED_PREFIX};
use crate::represent::maximal_consistent_subsets;
use crate::transform::{normal_prereq_free, prune_blocked};

/// `:¬p/¬p` for each atom.
pub fn cwa_defaults(atoms: &[Atom]) -> Vec<DefaultRule> {
    atoms
        .iter()
        .map(|a| DefaultRule::supernormal(Formula::not(Formula::atom(a.clone()))))
        .collect()
}

#[derive(Clone, Debug)]
pub struct CwaTranslation {
    /// Consequent to fresh atom, in discovery order.
    pub fresh_atoms: IndexMap<Formula, Atom>,
    /// `¬p_ψ ↔ ψ` for each consequent.
    pub bridge: FormulaSet,
    pub result: DefaultTheory,
    /// Atoms of the source theory.
    pub base_atoms: BTreeSet<Atom>,
}

impl CwaTranslation {
    fn fresh_literals(&self, phi: &[&Formula]) -> FormulaSet {
        phi.iter()
            .map(|psi| Formula::not(Formula::atom(self.fresh_atoms[*psi].clone())))
            .collect()
    }

    /// For every `Φ ⊆ Ψ`: `w ∪ Φ` is satisfiable iff
    /// `w ∪ V ∪ {¬p_ψ : ψ ∈ Φ}` is.
    pub fn check_bridge_consistency(&self, w: &FormulaSet) -> bool {
        let psi: Vec<&Formula> = self.fresh_atoms.keys().collect();
        let n = psi.len();
        let with_bridge = w.union(&self.bridge);
        (0usize..(1 << n)).all(|mask| {
            let phi: Vec<&Formula> = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| psi[i]).collect();
            let plain = w.union(&phi.iter().map(|f| (*f).clone()).collect());
            let bridged = with_bridge.union(&self.fresh_literals(&phi));
            is_satisfiable(&plain) == is_satisfiable(&bridged)
        })
    }

    /// Maximal `Φ ⊆ Ψ` consistent with `w` correspond exactly to maximal
    /// `{¬p_ψ : ψ ∈ Φ}` consistent with `w ∪ V`.
    pub fn check_maximal_correspondence(&self, w: &FormulaSet) -> bool {
        let psi: FormulaSet = self.fresh_atoms.keys().cloned().collect();
        let fresh: FormulaSet = self
            .fresh_atoms
            .values()
            .map(|a| Formula::not(Formula::atom(a.clone())))
            .collect();
        let (Ok(plain), Ok(bridged)) = (
            maximal_consistent_subsets(w, &psi),
            maximal_consistent_subsets(&w.union(&self.bridge), &fresh),
        ) else {
            // Unsatisfiable worlds have no consistent subsets on either side.
            return !is_satisfiable(w) && !is_satisfiable(&w.union(&self.bridge));
        };
        let translate = |phi: &FormulaSet| -> FormulaSet {
            phi.iter()
                .map(|f| Formula::not(Formula::atom(self.fresh_atoms[f].clone())))
                .collect()
        };
        let mapped: Vec<FormulaSet> = plain.iter().map(translate).collect();
        mapped.len() == bridged.len() && mapped.iter().all(|m| bridged.iter().any(|b| same_members(m, b)))
    }
}

fn same_members(a: &FormulaSet, b: &FormulaSet) -> bool {
    a.len() == b.len() && a.iter().all(|f| b.contains(f))
}

/// Builds `(D^CWA_P, W ∪ V)` for a normal theory.
pub fn cwa_translate(dt: &DefaultTheory) -> Result<CwaTranslation, Error> {
    let base_atoms = dt.atoms();
    let normal = prune_blocked(&normal_prereq_free(dt)?);
    let mut fresh_atoms: IndexMap<Formula, Atom> = IndexMap::new();
    let mut counter = 0usize;
    for d in normal.defaults() {
        if fresh_atoms.contains_key(&d.consequent) {
            continue;
        }
        let atom = loop {
            let candidate = Atom::new(&format!("{RESERVED_PREFIX}{counter}"))?;
            counter += 1;
            if !base_atoms.contains(&candidate) {
                break candidate;
            }
        };
        fresh_atoms.insert(d.consequent.clone(), atom);
    }
    let bridge: FormulaSet = fresh_atoms
        .iter()
        .map(|(psi, p)| Formula::iff(Formula::not(Formula::atom(p.clone())), psi.clone()))
        .collect();
    let atoms: Vec<Atom> = fresh_atoms.values().cloned().collect();
    let result = DefaultTheory::new(cwa_defaults(&atoms), dt.world().union(&bridge));
    Ok(CwaTranslation {
        fresh_atoms,
        bridge,
        result,
        base_atoms,
    })
}

/// `dt` is semi-equivalent to the translation's theory over the source
/// atoms, and the maximal consistent subsets correspond.
pub fn verify_cwa(dt: &DefaultTheory, tr: &CwaTranslation) -> bool {
    if !dt.atoms().is_subset(&tr.base_atoms) {
        return false;
    }
    semi_equivalent(dt, &tr.result, &tr.base_atoms) && tr.check_maximal_correspondence(dt.world())
}

//! Default theories realizing a prescribed family of extensions.

use std::collections::BTreeSet;

use crate::defaults::{DefaultRule, DefaultTheory, ExtensionSet};
use crate::error::Error;
use crate::logic::{is_satisfiable, Atom, FinTheory, Formula, FormulaSet};

/// A finite family of pairwise distinct theories.
#[derive(Clone, Debug, Default)]
pub struct TheoryFamily {
    members: Vec<FinTheory>,
}

impl TheoryFamily {
    /// Rejects members equal to an earlier one.
    pub fn new(members: Vec<FinTheory>) -> Result<Self, Error> {
        for (index, t) in members.iter().enumerate() {
            if members[..index].contains(t) {
                return Err(Error::DuplicateMember { index });
            }
        }
        Ok(TheoryFamily { members })
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

    /// Set equality under theory equality.
    pub fn same_as(&self, other: &[FinTheory]) -> bool {
        crate::defaults::same_theories(&self.members, other)
    }
}

impl From<ExtensionSet> for TheoryFamily {
    fn from(ext: ExtensionSet) -> Self {
        TheoryFamily {
            members: ext.into_vec(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct FamilyDiagnosis {
    pub non_including: bool,
    /// First offending pair `(sub, sup)` when not non-including.
    pub inclusion: Option<(usize, usize)>,
    pub intersection: FinTheory,
    /// `members[i] = Cn(intersection ∪ {witnesses[i]})`.
    pub witnesses: Vec<Formula>,
}

/// The intersection of the members: `Cn(⋁ᵢ ⋀Gᵢ)`.
pub fn intersect_theories(fam: &TheoryFamily) -> Result<FinTheory, Error> {
    match fam.members() {
        [] => Err(Error::EmptyFamily),
        [only] => Ok(only.clone()),
        members => Ok(FinTheory::from_formulas([Formula::disjunction(
            members.iter().map(|t| t.generators().conjunction()),
        )])),
    }
}

fn first_inclusion(fam: &TheoryFamily) -> Option<(usize, usize)> {
    let m = fam.members();
    (0..m.len())
        .flat_map(|i| (0..m.len()).map(move |j| (i, j)))
        .find(|&(i, j)| i != j && m[i].is_subset_of(&m[j]))
}

pub fn diagnose_family(fam: &TheoryFamily) -> Result<FamilyDiagnosis, Error> {
    let intersection = intersect_theories(fam)?;
    let inclusion = first_inclusion(fam);
    Ok(FamilyDiagnosis {
        non_including: inclusion.is_none(),
        inclusion,
        intersection,
        witnesses: fam.members().iter().map(|t| t.generators().conjunction()).collect(),
    })
}

/// A default theory whose extensions are exactly the members of a finite
/// non-including family.
///
/// With witnesses `φ₁..φₖ` over the intersection `U`, the theory is
/// `({dᵢ}, U)` where `dᵢ = :{¬φⱼ : j ≠ i}/φᵢ`; a single member `T` gives
/// `(∅, T)`.
pub fn construct_representing(fam: &TheoryFamily) -> Result<DefaultTheory, Error> {
    let diag = diagnose_family(fam)?;
    if let Some((sub, sup)) = diag.inclusion {
        return Err(Error::InclusionViolation { sub, sup });
    }
    if fam.len() == 1 {
        return Ok(DefaultTheory::new([], fam.members()[0].generators().clone()));
    }
    let phis = &diag.witnesses;
    let defaults = phis.iter().enumerate().map(|(i, phi)| {
        let others = phis
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, other)| Formula::not(other.clone()));
        DefaultRule::prerequisite_free(others, phi.clone())
    });
    Ok(DefaultTheory::new(defaults, diag.intersection.into_generators()))
}

/// All ⊆-maximal `Φ ⊆ psi` with `w ∪ Φ` satisfiable, in ascending bitmask
/// order over the positions of `psi`.
pub fn maximal_consistent_subsets(w: &FormulaSet, psi: &FormulaSet) -> Result<Vec<FormulaSet>, Error> {
    if !is_satisfiable(w) {
        return Err(Error::UnsatisfiableWorld);
    }
    let n = psi.len();
    assert!(n < usize::BITS as usize, "too many formulas to enumerate");
    let consistent: Vec<usize> = (0usize..(1 << n))
        .filter(|&mask| {
            let chosen = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .filter_map(|i| psi.get(i))
                .cloned();
            is_satisfiable(&w.union(&chosen.collect()))
        })
        .collect();
    let maximal = consistent
        .iter()
        .filter(|&&m| !consistent.iter().any(|&o| o != m && o & m == m))
        .map(|&m| {
            (0..n)
                .filter(|i| m & (1 << i) != 0)
                .filter_map(|i| psi.get(i))
                .cloned()
                .collect()
        })
        .collect();
    Ok(maximal)
}

/// `({:φ/φ : φ ∈ psi}, w)`; its extensions are `Cn(w ∪ Φ)` for the maximal
/// consistent `Φ`, or the whole language when `w` is unsatisfiable.
pub fn construct_normal_representing(w: &FormulaSet, psi: &FormulaSet) -> DefaultTheory {
    DefaultTheory::new(psi.iter().cloned().map(DefaultRule::supernormal), w.clone())
}

/// `:q/q` for every literal `q` over `atoms`, positive before negative.
pub fn comp_defaults(atoms: &[Atom]) -> Result<Vec<DefaultRule>, Error> {
    if atoms.is_empty() {
        return Err(Error::EmptyAtomSet);
    }
    Ok(atoms
        .iter()
        .flat_map(|a| {
            let pos = Formula::atom(a.clone());
            [
                DefaultRule::supernormal(pos.clone()),
                DefaultRule::supernormal(Formula::not(pos)),
            ]
        })
        .collect())
}

fn literal(a: &Atom, positive: bool) -> Formula {
    let v = Formula::atom(a.clone());
    if positive {
        v
    } else {
        Formula::not(v)
    }
}

/// Inclusion-minimal theories that contain `w` and decide every atom of
/// `atoms`, found by trying all sign assignments.
pub fn minimal_p_complete(w: &FormulaSet, atoms: &[Atom]) -> Result<TheoryFamily, Error> {
    if !is_satisfiable(w) {
        return Err(Error::UnsatisfiableWorld);
    }
    let atoms: Vec<Atom> = atoms.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    let n = atoms.len();
    let candidates: Vec<FinTheory> = (0usize..(1 << n))
        .map(|mask| {
            let signs = atoms.iter().enumerate().map(|(i, a)| literal(a, mask & (1 << i) == 0));
            FinTheory::new(w.union(&signs.collect()))
        })
        .filter(|t| !t.is_inconsistent())
        .collect();
    let mut minimal: Vec<FinTheory> = Vec::new();
    for t in &candidates {
        let dominated = candidates.iter().any(|o| o.is_subset_of(t) && o != t);
        if !dominated && !minimal.contains(t) {
            minimal.push(t.clone());
        }
    }
    TheoryFamily::new(minimal)
}

/// One default `:ℓ₀∧…∧ℓₙ/ℓ₀∧…∧ℓₙ` for every sign prefix of `order` that is
/// consistent with `w`, level by level with the positive sign first. The
/// world of the result is empty.
pub fn tree_defaults(w: &FormulaSet, order: &[Atom]) -> Result<DefaultTheory, Error> {
    if !is_satisfiable(w) {
        return Err(Error::UnsatisfiableWorld);
    }
    let mut defaults = Vec::new();
    let mut level: Vec<Vec<Formula>> = vec![Vec::new()];
    for atom in order {
        let mut next = Vec::new();
        for prefix in &level {
            for positive in [true, false] {
                let mut extended = prefix.clone();
                extended.push(literal(atom, positive));
                let with_world = w.union(&extended.iter().cloned().collect());
                if is_satisfiable(&with_world) {
                    defaults.push(DefaultRule::supernormal(Formula::conjunction(extended.iter().cloned())));
                    next.push(extended);
                }
            }
        }
        level = next;
    }
    Ok(DefaultTheory::new(defaults, FormulaSet::new()))
}

/// `Cn` of each full sign assignment over `order` consistent with `w`.
pub fn complete_branches(w: &FormulaSet, order: &[Atom]) -> Vec<FinTheory> {
    let n = order.len();
    (0usize..(1 << n))
        .map(|mask| {
            order
                .iter()
                .enumerate()
                .map(|(i, a)| literal(a, mask & (1 << i) == 0))
                .collect::<FormulaSet>()
        })
        .filter(|signs| is_satisfiable(&w.union(signs)))
        .map(FinTheory::new)
        .collect()
}

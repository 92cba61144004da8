//! Equivalence-preserving transformations of default theories.

use log::debug;

use crate::defaults::{enumerate_extensions, DefaultRule, DefaultTheory};
use crate::error::Error;
use crate::logic::theory::entails_all;
use crate::logic::{is_satisfiable, FinTheory, Formula, FormulaSet};
use crate::represent::TheoryFamily;

/// A subset of the defaults that some derivation from `W` in propositional
/// logic plus the monotone rules `p(d)/c(d)` uses completely.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizableSubset {
    /// Indices into the theory's defaults, ascending.
    pub members: Vec<usize>,
    /// The same indices in an order where each prerequisite follows from
    /// `W` and the consequents before it.
    pub order: Vec<usize>,
}

impl RealizableSubset {
    pub fn defaults<'a>(&self, dt: &'a DefaultTheory) -> Vec<&'a DefaultRule> {
        self.members.iter().map(|&i| &dt.defaults()[i]).collect()
    }
}

/// Drops defaults with an unsatisfiable justification; they are never
/// applicable to any theory.
pub fn prune_blocked(dt: &DefaultTheory) -> DefaultTheory {
    let kept = dt.defaults().iter().filter(|d| {
        let live = d
            .justifications
            .iter()
            .all(|g| is_satisfiable(&std::iter::once(g.clone()).collect()));
        if !live {
            debug!("pruning default `{d}`: unsatisfiable justification");
        }
        live
    });
    DefaultTheory::new(kept.cloned(), dt.world().clone())
}

/// Every realizable subset of the defaults, the empty one included, in
/// ascending bitmask order.
///
/// Each subset is decided by greedy saturation; admitting a default only
/// adds consequents, so greedy admission finds an order whenever one exists.
pub fn realizable_subsets(dt: &DefaultTheory) -> Vec<RealizableSubset> {
    let n = dt.defaults().len();
    assert!(n < usize::BITS as usize, "too many defaults to enumerate");
    let mut out = Vec::new();
    for mask in 0usize..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if let Some(order) = application_order(dt, &members) {
            out.push(RealizableSubset { members, order });
        }
    }
    out
}

fn application_order(dt: &DefaultTheory, members: &[usize]) -> Option<Vec<usize>> {
    let mut derived: Vec<Formula> = dt.world().iter().cloned().collect();
    let mut pending: Vec<usize> = members.to_vec();
    let mut order = Vec::with_capacity(members.len());
    while !pending.is_empty() {
        let next = pending
            .iter()
            .position(|&i| entails_all(derived.iter(), &dt.defaults()[i].prereq))?;
        let i = pending.remove(next);
        derived.push(dt.defaults()[i].consequent.clone());
        order.push(i);
    }
    Some(order)
}

/// An equivalent theory whose defaults are all prerequisite-free: one
/// default `:j(D')/⋀c(D')` per nonempty realizable subset `D'`.
pub fn prereq_free(dt: &DefaultTheory) -> DefaultTheory {
    let pruned = prune_blocked(dt);
    let emitted = realizable_subsets(&pruned)
        .into_iter()
        .filter(|s| !s.members.is_empty())
        .map(|s| {
            let members = s.defaults(&pruned);
            let justifications: FormulaSet = members.iter().flat_map(|d| d.justifications.iter().cloned()).collect();
            let consequent = Formula::conjunction(members.iter().map(|d| d.consequent.clone()));
            DefaultRule::new(Formula::Top, justifications, consequent)
        });
    DefaultTheory::new(emitted, dt.world().clone())
}

/// Replaces each `:Γ/⋀Γ` by the normal default `:⋀Γ/⋀Γ`.
pub fn normalize_hat(dt: &DefaultTheory) -> Result<DefaultTheory, Error> {
    let mut out = Vec::with_capacity(dt.defaults().len());
    for (index, d) in dt.defaults().iter().enumerate() {
        let conj = d.justifications.conjunction();
        let shaped = d.is_prerequisite_free()
            && FinTheory::from_formulas([conj.clone()]) == FinTheory::from_formulas([d.consequent.clone()]);
        if !shaped {
            return Err(Error::NotHatShape { index });
        }
        out.push(DefaultRule::supernormal(conj));
    }
    Ok(DefaultTheory::new(out, dt.world().clone()))
}

/// `prereq_free` followed by `normalize_hat`, for normal theories.
pub fn normal_prereq_free(dt: &DefaultTheory) -> Result<DefaultTheory, Error> {
    if let Some(index) = dt.defaults().iter().position(|d| !d.is_normal()) {
        return Err(Error::NotNormal { index });
    }
    normalize_hat(&prereq_free(dt))
}

/// The default `f : / false`.
pub fn blocking_default(f: Formula) -> DefaultRule {
    DefaultRule::new(f, FormulaSet::new(), Formula::Bottom)
}

/// Adds `f : / false`, which kills every consistent extension containing
/// `f` and keeps the others.
pub fn eliminate_formula(dt: &DefaultTheory, f: &Formula) -> DefaultTheory {
    dt.with_defaults([blocking_default(f.clone())])
}

/// For each member, a formula it contains that no other member contains.
///
/// Candidates for a member are its generators, then the conjunction of its
/// generators. `None` means nothing in that space works, not that no
/// representative exists.
pub fn find_ssdr(fam: &TheoryFamily) -> Option<Vec<Formula>> {
    let members = fam.members();
    members
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let mut candidates: Vec<Formula> = t.generators().iter().cloned().collect();
            candidates.push(t.generators().conjunction());
            candidates.into_iter().find(|phi| {
                members
                    .iter()
                    .enumerate()
                    .all(|(j, other)| i == j || !other.entails(phi))
            })
        })
        .collect()
}

/// A theory whose extensions are the members of `fam` at positions `keep`,
/// given that `dt` represents `fam`.
pub fn represent_subfamily(dt: &DefaultTheory, fam: &TheoryFamily, keep: &[usize]) -> Result<DefaultTheory, Error> {
    let len = fam.len();
    if let Some(&index) = keep.iter().find(|&&i| i >= len) {
        return Err(Error::IndexOutOfRange { index, len });
    }
    if !enumerate_extensions(dt).same_as(fam.members()) {
        return Err(Error::NotRepresenting);
    }
    if fam.members().iter().any(FinTheory::is_inconsistent) {
        // An antichain containing the whole language has no other member.
        if (0..len).all(|i| keep.contains(&i)) {
            return Ok(dt.clone());
        }
        return Err(Error::InconsistentMember);
    }
    let reps = find_ssdr(fam).ok_or(Error::NoSsdr)?;
    let blockers: Vec<DefaultRule> = reps
        .into_iter()
        .enumerate()
        .filter(|(i, _)| !keep.contains(i))
        .map(|(_, phi)| blocking_default(phi))
        .collect();
    let result = dt.with_defaults(blockers);
    if keep.is_empty() && derives_contradiction_monotonically(&result) {
        // Justification-free rules apply to the whole language as well, so
        // here it would come back as the single extension.
        debug!("empty subfamily: replacing the construction by a theory without extensions");
        let self_defeating = DefaultRule::prerequisite_free([Formula::Top], Formula::Bottom);
        return Ok(DefaultTheory::new([self_defeating], dt.world().clone()));
    }
    Ok(result)
}

/// Closing `W` under the justification-free defaults gives a contradiction;
/// this is exactly when the whole language is an extension.
pub fn derives_contradiction_monotonically(dt: &DefaultTheory) -> bool {
    let rules: Vec<_> = dt
        .defaults()
        .iter()
        .filter(|d| d.justifications.is_empty())
        .map(DefaultRule::monotone_rule)
        .collect();
    crate::defaults::monotone_closure(dt.world(), &rules).is_inconsistent()
}

/// An equivalent normal prerequisite-free theory with an empty world, for a
/// normal theory with a satisfiable world.
pub fn to_empty_w(dt: &DefaultTheory) -> Result<DefaultTheory, Error> {
    if !is_satisfiable(dt.world()) {
        return Err(Error::UnsatisfiableWorld);
    }
    let normal = normal_prereq_free(dt)?;
    let omega = dt.world().conjunction();
    let with_omega = |f: &Formula| match omega {
        Formula::Top => f.clone(),
        _ => Formula::and(f.clone(), omega.clone()),
    };
    let lifted: Vec<DefaultRule> = normal
        .defaults()
        .iter()
        .map(|d| DefaultRule::supernormal(with_omega(&d.consequent)))
        .collect();
    let live = prune_blocked(&DefaultTheory::new(lifted, FormulaSet::new()));
    if live.defaults().is_empty() {
        return Ok(DefaultTheory::new([DefaultRule::supernormal(omega)], FormulaSet::new()));
    }
    Ok(live)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defaults::{equivalent, is_extension};
    use crate::logic::parse_formula;

    fn f(t: &str) -> Formula {
        parse_formula(t).unwrap()
    }

    fn set(texts: &[&str]) -> FormulaSet {
        texts.iter().map(|t| f(t)).collect()
    }

    fn th(texts: &[&str]) -> FinTheory {
        FinTheory::new(set(texts))
    }

    fn d(pre: &str, just: &[&str], cons: &str) -> DefaultRule {
        DefaultRule::new(f(pre), set(just), f(cons))
    }

    fn sn(x: &str) -> DefaultRule {
        DefaultRule::supernormal(f(x))
    }

    fn members(subsets: &[RealizableSubset]) -> Vec<Vec<usize>> {
        subsets.iter().map(|s| s.members.clone()).collect()
    }

    #[test]
    fn realizable_subset_examples() {
        let dt = DefaultTheory::new([d("a", &[], "b")], set(&["a"]));
        assert_eq!(members(&realizable_subsets(&dt)), vec![vec![], vec![0]]);
        let dt = DefaultTheory::new([d("a", &[], "b")], set(&[]));
        assert_eq!(members(&realizable_subsets(&dt)), vec![Vec::<usize>::new()]);
        let dt = DefaultTheory::new([d("true", &[], "a"), d("a", &[], "b")], set(&[]));
        let subsets = realizable_subsets(&dt);
        assert_eq!(members(&subsets), vec![vec![], vec![0], vec![0, 1]]);
        assert_eq!(subsets[2].order, vec![0, 1]);
    }

    #[test]
    fn application_order_is_a_witness() {
        let dt = DefaultTheory::new([d("b", &[], "c"), d("a", &[], "b"), d("true", &[], "a")], set(&[]));
        let full = realizable_subsets(&dt).pop().unwrap();
        assert_eq!(full.order, vec![2, 1, 0]);
    }

    #[test]
    fn prereq_free_examples() {
        let dt = DefaultTheory::new([d("p", &["q"], "r")], set(&["p"]));
        let out = prereq_free(&dt);
        assert_eq!(out, DefaultTheory::new([d("true", &["q"], "r")], set(&["p"])));
        assert!(equivalent(&dt, &out));

        let dt = DefaultTheory::new([d("true", &["q"], "r")], set(&[]));
        assert_eq!(prereq_free(&dt), dt);

        let dt = DefaultTheory::new([d("true", &[], "a"), d("a", &[], "b")], set(&[]));
        assert_eq!(
            prereq_free(&dt),
            DefaultTheory::new([d("true", &[], "a"), d("true", &[], "a & b")], set(&[]))
        );
    }

    #[test]
    fn prereq_free_prunes_dead_defaults() {
        let dt = DefaultTheory::new([d("true", &["p & !p"], "q"), sn("r")], set(&[]));
        let out = prereq_free(&dt);
        assert_eq!(out.defaults(), &[sn("r")]);
    }

    #[test]
    fn normalize_hat_examples() {
        let dt = DefaultTheory::new([d("true", &["a", "b"], "a & b")], set(&[]));
        assert_eq!(normalize_hat(&dt).unwrap().defaults(), &[sn("a & b")]);
        let dt = DefaultTheory::new([d("true", &["a"], "a")], set(&[]));
        assert_eq!(normalize_hat(&dt).unwrap().defaults(), &[sn("a")]);
        let dt = DefaultTheory::new([d("true", &["a", "b"], "a & b")], set(&["!a"]));
        let hat = normalize_hat(&dt).unwrap();
        assert!(equivalent(&dt, &hat));
        assert!(crate::defaults::enumerate_extensions(&hat).same_as(&[th(&["!a"])]));
        let bad = DefaultTheory::new([sn("p"), d("true", &["a"], "b")], set(&[]));
        assert!(matches!(normalize_hat(&bad), Err(Error::NotHatShape { index: 1 })));
        let bad = DefaultTheory::new([d("q", &["a"], "a")], set(&[]));
        assert!(matches!(normalize_hat(&bad), Err(Error::NotHatShape { index: 0 })));
    }

    #[test]
    fn eliminate_examples() {
        let nixon = DefaultTheory::new([sn("p"), sn("!p")], set(&[]));
        let out = crate::defaults::enumerate_extensions(&eliminate_formula(&nixon, &f("p")));
        assert!(out.same_as(&[th(&["!p"])]));

        let single = DefaultTheory::new([sn("p")], set(&[]));
        let out = crate::defaults::enumerate_extensions(&eliminate_formula(&single, &f("q")));
        assert!(out.same_as(&[th(&["p"])]));

        // The only extension contains q. No consistent extension survives,
        // but the justification-free rule q/false makes L a fixpoint.
        let fact = DefaultTheory::new([], set(&["q"]));
        let out = crate::defaults::enumerate_extensions(&eliminate_formula(&fact, &f("q")));
        assert_eq!(out.len(), 1);
        assert!(out.members()[0].is_inconsistent());
    }

    #[test]
    fn ssdr_examples() {
        let fam = TheoryFamily::new(vec![th(&["p"]), th(&["q"])]).unwrap();
        assert_eq!(find_ssdr(&fam), Some(vec![f("p"), f("q")]));
        let fam = TheoryFamily::new(vec![th(&["p"]), th(&["p & q"])]).unwrap();
        assert_eq!(find_ssdr(&fam), None);
        let fam = TheoryFamily::new(vec![th(&["p"]), th(&["!p"])]).unwrap();
        assert_eq!(find_ssdr(&fam), Some(vec![f("p"), f("!p")]));
        // no single generator separates, the conjunction does
        let fam = TheoryFamily::new(vec![th(&["p", "q"]), th(&["p", "r"]), th(&["q", "r"])]).unwrap();
        assert_eq!(find_ssdr(&fam), Some(vec![f("p & q"), f("p & r"), f("q & r")]));
    }

    #[test]
    fn subfamily_examples() {
        let nixon = DefaultTheory::new([sn("p"), sn("!p")], set(&[]));
        let fam = TheoryFamily::new(vec![th(&["p"]), th(&["!p"])]).unwrap();
        let out = represent_subfamily(&nixon, &fam, &[0]).unwrap();
        assert!(crate::defaults::enumerate_extensions(&out).same_as(&[th(&["p"])]));
        let all = represent_subfamily(&nixon, &fam, &[0, 1]).unwrap();
        assert!(equivalent(&all, &nixon));
        let none = represent_subfamily(&nixon, &fam, &[]).unwrap();
        assert!(crate::defaults::enumerate_extensions(&none).is_empty());

        let fact = DefaultTheory::new([], set(&["q"]));
        let fam = TheoryFamily::new(vec![th(&["q"])]).unwrap();
        let none = represent_subfamily(&fact, &fam, &[]).unwrap();
        assert!(crate::defaults::enumerate_extensions(&none).is_empty());
    }

    #[test]
    fn subfamily_errors() {
        let nixon = DefaultTheory::new([sn("p"), sn("!p")], set(&[]));
        let wrong = TheoryFamily::new(vec![th(&["p"])]).unwrap();
        assert!(matches!(
            represent_subfamily(&nixon, &wrong, &[0]),
            Err(Error::NotRepresenting)
        ));
        let fam = TheoryFamily::new(vec![th(&["p"]), th(&["!p"])]).unwrap();
        assert!(matches!(
            represent_subfamily(&nixon, &fam, &[5]),
            Err(Error::IndexOutOfRange { index: 5, len: 2 })
        ));
        let contradictory = DefaultTheory::new([sn("p")], set(&["false"]));
        let whole = TheoryFamily::new(vec![FinTheory::inconsistent_theory()]).unwrap();
        assert!(represent_subfamily(&contradictory, &whole, &[0]).is_ok());
        assert!(matches!(
            represent_subfamily(&contradictory, &whole, &[]),
            Err(Error::InconsistentMember)
        ));
        // three pairwise exclusive choices, keep one
        let dt = DefaultTheory::new(
            [
                d("true", &["!q & !r"], "p"),
                d("true", &["!p & !r"], "q"),
                d("true", &["!p & !q"], "r"),
            ],
            set(&["p | q | r"]),
        );
        let fam = TheoryFamily::new(crate::defaults::enumerate_extensions(&dt).into_vec()).unwrap();
        assert_eq!(fam.len(), 3);
        let one = represent_subfamily(&dt, &fam, &[0]).unwrap();
        assert!(crate::defaults::enumerate_extensions(&one).same_as(&fam.members()[..1]));
    }

    #[test]
    fn to_empty_w_examples() {
        let dt = DefaultTheory::new([sn("p")], set(&["q"]));
        let out = to_empty_w(&dt).unwrap();
        assert_eq!(out, DefaultTheory::new([sn("p & q")], set(&[])));
        assert!(equivalent(&dt, &out));

        let dt = DefaultTheory::new([sn("!q")], set(&["q"]));
        let out = to_empty_w(&dt).unwrap();
        assert_eq!(out, DefaultTheory::new([sn("q")], set(&[])));
        assert!(crate::defaults::enumerate_extensions(&out).same_as(&[th(&["q"])]));

        let dt = DefaultTheory::new([sn("p"), sn("!p")], set(&["r"]));
        let out = to_empty_w(&dt).unwrap();
        assert_eq!(out, DefaultTheory::new([sn("p & r"), sn("!p & r")], set(&[])));
        assert!(crate::defaults::enumerate_extensions(&out).same_as(&[th(&["p", "r"]), th(&["!p", "r"])]));
    }

    #[test]
    fn to_empty_w_errors() {
        let dt = DefaultTheory::new([sn("p")], set(&["q", "!q"]));
        assert!(matches!(to_empty_w(&dt), Err(Error::UnsatisfiableWorld)));
        let dt = DefaultTheory::new([d("true", &["p"], "q")], set(&[]));
        assert!(matches!(to_empty_w(&dt), Err(Error::NotNormal { index: 0 })));
    }

    #[test]
    fn blocking_default_fires_without_justifications() {
        let dt = eliminate_formula(&DefaultTheory::new([sn("p")], set(&[])), &f("p"));
        assert!(!is_extension(&dt, &th(&["p"])));
    }
}

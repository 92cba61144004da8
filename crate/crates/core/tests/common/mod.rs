//! Seeded random corpora and a truth-table oracle.
//!
//! The oracle never touches the SAT solver or the extension search: a
//! theory is represented by its set of models over a fixed list of atoms.

#![allow(dead_code)]

use std::collections::BTreeSet;

use deflog::{Atom, DefaultRule, DefaultTheory, FinTheory, Formula, FormulaSet};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const ATOM_NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "g"];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn atoms(n: usize) -> Vec<Atom> {
    ATOM_NAMES[..n].iter().map(|s| Atom::new(s).unwrap()).collect()
}

pub fn f(text: &str) -> Formula {
    deflog::logic::parse_formula(text).unwrap()
}

pub fn set(texts: &[&str]) -> FormulaSet {
    texts.iter().map(|t| f(t)).collect()
}

// ---------------------------------------------------------------- generation

pub fn random_formula<R: Rng>(rng: &mut R, atoms: &[Atom], depth: u32) -> Formula {
    if depth == 0 || rng.gen_ratio(1, 3) {
        if rng.gen_ratio(1, 25) {
            return if rng.gen() { Formula::Top } else { Formula::Bottom };
        }
        let v = Formula::atom(atoms.choose(rng).unwrap().clone());
        return if rng.gen() { v } else { Formula::not(v) };
    }
    let a = random_formula(rng, atoms, depth - 1);
    match rng.gen_range(0..5) {
        0 => Formula::not(a),
        1 => Formula::and(a, random_formula(rng, atoms, depth - 1)),
        2 => Formula::or(a, random_formula(rng, atoms, depth - 1)),
        3 => Formula::implies(a, random_formula(rng, atoms, depth - 1)),
        _ => Formula::iff(a, random_formula(rng, atoms, depth - 1)),
    }
}

/// Size limits for random theories.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub atoms: usize,
    pub defaults: usize,
    pub justifications: usize,
    pub world: usize,
}

pub const CORPUS: Shape = Shape {
    atoms: 5,
    defaults: 4,
    justifications: 2,
    world: 2,
};

fn pick_atoms<R: Rng>(rng: &mut R, max: usize) -> Vec<Atom> {
    let n = rng.gen_range(1..=max);
    atoms(n)
}

fn prerequisite<R: Rng>(rng: &mut R, atoms: &[Atom]) -> Formula {
    if rng.gen() {
        Formula::Top
    } else {
        random_formula(rng, atoms, 1)
    }
}

fn world<R: Rng>(rng: &mut R, atoms: &[Atom], max: usize) -> FormulaSet {
    let n = rng.gen_range(0..=max);
    (0..n).map(|_| random_formula(rng, atoms, 2)).collect()
}

pub fn random_theory<R: Rng>(rng: &mut R, shape: Shape) -> DefaultTheory {
    let atoms = pick_atoms(rng, shape.atoms);
    let n = rng.gen_range(0..=shape.defaults);
    let defaults: Vec<DefaultRule> = (0..n)
        .map(|_| {
            let prereq = prerequisite(rng, &atoms);
            let k = if rng.gen_ratio(1, 6) {
                0
            } else {
                rng.gen_range(1..=shape.justifications)
            };
            let justifications = (0..k).map(|_| random_formula(rng, &atoms, 2)).collect();
            DefaultRule::new(prereq, justifications, random_formula(rng, &atoms, 2))
        })
        .collect();
    DefaultTheory::new(defaults, world(rng, &atoms, shape.world))
}

pub fn random_normal_theory<R: Rng>(rng: &mut R, shape: Shape) -> DefaultTheory {
    let atoms = pick_atoms(rng, shape.atoms);
    let n = rng.gen_range(0..=shape.defaults);
    let defaults: Vec<DefaultRule> = (0..n)
        .map(|_| {
            let prereq = prerequisite(rng, &atoms);
            DefaultRule::normal(prereq, random_formula(rng, &atoms, 2))
        })
        .collect();
    DefaultTheory::new(defaults, world(rng, &atoms, shape.world))
}

pub fn corpus(seed: u64, n: usize) -> Vec<DefaultTheory> {
    let mut r = rng(seed);
    (0..n).map(|_| random_theory(&mut r, CORPUS)).collect()
}

pub fn normal_corpus(seed: u64, n: usize, shape: Shape) -> Vec<DefaultTheory> {
    let mut r = rng(seed);
    (0..n).map(|_| random_normal_theory(&mut r, shape)).collect()
}

/// A satisfiable set of up to `max` formulas over `atoms`.
pub fn satisfiable_world<R: Rng>(rng: &mut R, atoms: &[Atom], max: usize) -> FormulaSet {
    let u = Universe::new(atoms.to_vec());
    loop {
        let w = world(rng, atoms, max);
        if !u.models_of_set(&w).is_empty() {
            return w;
        }
    }
}

/// Up to `max_members` distinct consistent theories, none contained in
/// another.
pub fn random_family<R: Rng>(rng: &mut R, atoms: &[Atom], max_members: usize) -> Vec<FinTheory> {
    let u = Universe::new(atoms.to_vec());
    'retry: loop {
        let k = rng.gen_range(1..=max_members);
        let mut members: Vec<FinTheory> = Vec::with_capacity(k);
        let mut models: Vec<Models> = Vec::with_capacity(k);
        for _ in 0..k {
            let g = rng.gen_range(1..=2);
            let t = FinTheory::new((0..g).map(|_| random_formula(rng, atoms, 2)).collect());
            let m = u.models_of_set(t.generators());
            // theory inclusion is reverse model inclusion
            if m.is_empty() || models.iter().any(|o| o.is_subset(&m) || m.is_subset(o)) {
                continue 'retry;
            }
            members.push(t);
            models.push(m);
        }
        return members;
    }
}

// ---------------------------------------------------------------- proptest

pub fn arb_formula(n_atoms: usize) -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        1 => Just(Formula::Top),
        1 => Just(Formula::Bottom),
        12 => (0..n_atoms).prop_map(|i| Formula::var(ATOM_NAMES[i])),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::implies(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::iff(a, b)),
        ]
    })
}

pub fn arb_theory() -> impl Strategy<Value = DefaultTheory> {
    any::<u64>().prop_map(|s| random_theory(&mut rng(s), CORPUS))
}

pub fn arb_normal_theory(shape: Shape) -> impl Strategy<Value = DefaultTheory> {
    any::<u64>().prop_map(move |s| random_normal_theory(&mut rng(s), shape))
}

// ---------------------------------------------------------------- oracle

/// A set of valuations over a universe, indexed by bitmask.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Models(Vec<bool>);

impl Models {
    pub fn is_empty(&self) -> bool {
        !self.0.iter().any(|&b| b)
    }

    pub fn is_subset(&self, other: &Models) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| !a || b)
    }

    pub fn intersects(&self, other: &Models) -> bool {
        self.0.iter().zip(&other.0).any(|(&a, &b)| a && b)
    }

    pub fn and(&self, other: &Models) -> Models {
        Models(self.0.iter().zip(&other.0).map(|(&a, &b)| a && b).collect())
    }

    pub fn or(&self, other: &Models) -> Models {
        Models(self.0.iter().zip(&other.0).map(|(&a, &b)| a || b).collect())
    }
}

#[derive(Clone, Debug)]
pub struct Universe {
    pub atoms: Vec<Atom>,
}

impl Universe {
    pub fn new(atoms: Vec<Atom>) -> Self {
        assert!(atoms.len() <= 14, "universe too large for truth tables");
        Universe { atoms }
    }

    pub fn of_theory(dt: &DefaultTheory) -> Self {
        Universe::new(dt.atoms().into_iter().collect())
    }

    pub fn with(atoms: &BTreeSet<Atom>) -> Self {
        Universe::new(atoms.iter().cloned().collect())
    }

    fn valuations(&self) -> usize {
        1 << self.atoms.len()
    }

    pub fn models(&self, f: &Formula) -> Models {
        let extra: Vec<Atom> = f.atoms().into_iter().filter(|a| !self.atoms.contains(a)).collect();
        assert!(extra.is_empty(), "formula {f} leaves the universe: {extra:?}");
        Models(
            (0..self.valuations())
                .map(|v| {
                    f.eval(|a| {
                        let i = self.atoms.iter().position(|b| b == a).unwrap();
                        v & (1 << i) != 0
                    })
                })
                .collect(),
        )
    }

    pub fn all(&self) -> Models {
        Models(vec![true; self.valuations()])
    }

    pub fn models_of_set(&self, fs: &FormulaSet) -> Models {
        fs.iter().fold(self.all(), |m, f| m.and(&self.models(f)))
    }

    pub fn models_of_theory(&self, t: &FinTheory) -> Models {
        self.models_of_set(t.generators())
    }

    pub fn satisfiable(&self, fs: &FormulaSet) -> bool {
        !self.models_of_set(fs).is_empty()
    }

    pub fn entails(&self, fs: &FormulaSet, f: &Formula) -> bool {
        self.models_of_set(fs).is_subset(&self.models(f))
    }

    pub fn theory_equal(&self, a: &FinTheory, b: &FinTheory) -> bool {
        self.models_of_theory(a) == self.models_of_theory(b)
    }

    /// Restricts to the first `n` atoms: a valuation of those survives
    /// when some extension of it is in `m`.
    pub fn project(&self, m: &Models, n: usize) -> Models {
        let mask = (1usize << n) - 1;
        let mut out = vec![false; 1 << n];
        for (v, &inside) in m.0.iter().enumerate() {
            if inside {
                out[v & mask] = true;
            }
        }
        Models(out)
    }

    /// Sorted model sets, one per member.
    pub fn family(&self, theories: &[FinTheory]) -> Vec<Models> {
        let mut out: Vec<Models> = theories.iter().map(|t| self.models_of_theory(t)).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Extensions by brute force: the candidate `Cn(W ∪ c(D'))` of every
    /// `D' ⊆ D`, kept when it is a fixpoint of the reduct closure.
    pub fn extensions(&self, dt: &DefaultTheory) -> Vec<Models> {
        let world = self.models_of_set(dt.world());
        let rules: Vec<(Models, Vec<Models>, Models)> = dt
            .defaults()
            .iter()
            .map(|d| {
                (
                    self.models(&d.prereq),
                    d.justifications.iter().map(|j| self.models(j)).collect(),
                    self.models(&d.consequent),
                )
            })
            .collect();
        let n = rules.len();
        let mut out = Vec::new();
        for mask in 0usize..(1 << n) {
            let candidate = (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .fold(world.clone(), |m, i| m.and(&rules[i].2));
            let mut closure = world.clone();
            let mut fired = vec![false; n];
            loop {
                let mut changed = false;
                for (i, (pre, just, cons)) in rules.iter().enumerate() {
                    if !fired[i] && closure.is_subset(pre) && just.iter().all(|j| j.intersects(&candidate)) {
                        closure = closure.and(cons);
                        fired[i] = true;
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
            if closure == candidate {
                out.push(candidate);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Maximal `Φ ⊆ psi` with `w ∪ Φ` satisfiable, as index sets.
    pub fn maximal_consistent(&self, w: &FormulaSet, psi: &[Formula]) -> Vec<Vec<usize>> {
        let base = self.models_of_set(w);
        if base.is_empty() {
            return Vec::new();
        }
        let n = psi.len();
        let ms: Vec<Models> = psi.iter().map(|p| self.models(p)).collect();
        let consistent: Vec<usize> = (0usize..(1 << n))
            .filter(|&mask| {
                !(0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .fold(base.clone(), |m, i| m.and(&ms[i]))
                    .is_empty()
            })
            .collect();
        consistent
            .iter()
            .filter(|&&m| !consistent.iter().any(|&o| o != m && o & m == m))
            .map(|&m| (0..n).filter(|i| m & (1 << i) != 0).collect())
            .collect()
    }

    /// `Cn(w ∪ σ)` for each sign assignment `σ` to `atoms` consistent
    /// with `w`.
    pub fn complete_over(&self, w: &FormulaSet, atoms: &[Atom]) -> Vec<Models> {
        let base = self.models_of_set(w);
        let mut out: Vec<Models> = (0usize..(1 << atoms.len()))
            .map(|signs| {
                atoms.iter().enumerate().fold(base.clone(), |m, (i, a)| {
                    let lit = Formula::atom(a.clone());
                    let lit = if signs & (1 << i) != 0 { lit } else { Formula::not(lit) };
                    m.and(&self.models(&lit))
                })
            })
            .filter(|m| !m.is_empty())
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

//! Extension enumeration.
//!
//! An extension is fixed by its reduct, so the search branches on which
//! defaults are applicable. For a partial choice (`In`, `Out`, undecided)
//! any extension compatible with it lies between
//!
//! * `lo` = closure of `W` under the `In` rules, and
//! * `hi` = closure of `W` under the `In` and undecided rules.
//!
//! A default blocked by `lo` is blocked by every candidate and one
//! applicable for `hi` is applicable for every candidate, which decides
//! many defaults without branching. Once nothing is undecided, `lo` is an
//! extension exactly when every `In` default is applicable and every `Out`
//! default is blocked for it, which propagation has already checked.

use super::{is_applicable, is_extension, monotone_closure, DefaultRule, DefaultTheory, ExtensionSet, MonotoneRule};
use crate::logic::{FinTheory, FormulaSet};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Choice {
    In,
    Out,
    Open,
}

struct Search<'a> {
    defaults: &'a [DefaultRule],
    rules: Vec<MonotoneRule>,
    world: &'a FormulaSet,
    found: Vec<FinTheory>,
}

impl Search<'_> {
    fn closure(&self, choices: &[Choice], include_open: bool) -> FinTheory {
        let rules: Vec<MonotoneRule> = self
            .rules
            .iter()
            .zip(choices)
            .filter(|(_, c)| **c == Choice::In || (include_open && **c == Choice::Open))
            .map(|(r, _)| r.clone())
            .collect();
        monotone_closure(self.world, &rules)
    }

    // Returns the lower bound when consistent with the choices, `None` on conflict.
    fn propagate(&self, choices: &mut [Choice]) -> Option<FinTheory> {
        loop {
            let lo = self.closure(choices, false);
            let has_open = choices.contains(&Choice::Open);
            let hi = if has_open {
                self.closure(choices, true)
            } else {
                lo.clone()
            };
            let mut changed = false;
            for (d, c) in self.defaults.iter().zip(choices.iter_mut()) {
                match *c {
                    Choice::In => {
                        if !is_applicable(d, &lo) {
                            return None;
                        }
                    }
                    Choice::Out => {
                        if is_applicable(d, &hi) {
                            return None;
                        }
                    }
                    Choice::Open => {
                        if !is_applicable(d, &lo) {
                            *c = Choice::Out;
                            changed = true;
                        } else if is_applicable(d, &hi) {
                            *c = Choice::In;
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return Some(lo);
            }
        }
    }

    fn run(&mut self, mut choices: Vec<Choice>) {
        let Some(lo) = self.propagate(&mut choices) else {
            return;
        };
        match choices.iter().position(|c| *c == Choice::Open) {
            None => self.found.push(lo),
            Some(i) => {
                let mut with = choices.clone();
                with[i] = Choice::In;
                self.run(with);
                choices[i] = Choice::Out;
                self.run(choices);
            }
        }
    }
}

/// All extensions of `dt`.
pub fn enumerate_extensions(dt: &DefaultTheory) -> ExtensionSet {
    let defaults = dt.defaults();
    let mut search = Search {
        defaults,
        rules: defaults.iter().map(DefaultRule::monotone_rule).collect(),
        world: dt.world(),
        found: Vec::new(),
    };
    let initial = defaults
        .iter()
        .map(|d| {
            if d.justifications.is_empty() {
                Choice::In
            } else {
                Choice::Open
            }
        })
        .collect();
    search.run(initial);
    ExtensionSet::from_theories(search.found)
}

/// Reference enumeration: every extension is `Cn(W ∪ c(D'))` for some
/// `D' ⊆ D`, so test the candidate of each of the `2^|D|` subsets.
pub fn enumerate_extensions_by_subsets(dt: &DefaultTheory) -> ExtensionSet {
    let defaults = dt.defaults();
    assert!(defaults.len() < usize::BITS as usize, "too many defaults to enumerate");
    let mut found = Vec::new();
    for mask in 0usize..(1 << defaults.len()) {
        let mut generators = dt.world().clone();
        for (i, d) in defaults.iter().enumerate() {
            if mask & (1 << i) != 0 {
                generators.insert(d.consequent.clone());
            }
        }
        let candidate = FinTheory::new(generators);
        if is_extension(dt, &candidate) {
            found.push(candidate);
        }
    }
    ExtensionSet::from_theories(found)
}

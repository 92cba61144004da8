//! Clausal form and a DPLL satisfiability search.
//!
//! Formulas are constant-folded, then Tseitin-encoded: each compound
//! subformula gets a definitional variable. The search is plain
//! backtracking with unit propagation, enough for a few dozen atoms.

use std::collections::HashMap;

use super::formula::{Atom, Formula};

/// A literal: variable index (from 1) with a sign.
type Lit = i32;

#[derive(Debug, Default)]
pub struct Cnf {
    num_vars: usize,
    clauses: Vec<Vec<Lit>>,
    atoms: HashMap<Atom, i32>,
    trivially_false: bool,
}

impl Cnf {
    pub fn new() -> Self {
        Cnf::default()
    }

    fn fresh(&mut self) -> i32 {
        self.num_vars += 1;
        self.num_vars as i32
    }

    fn atom_var(&mut self, a: &Atom) -> i32 {
        if let Some(&v) = self.atoms.get(a) {
            return v;
        }
        let v = self.fresh();
        self.atoms.insert(a.clone(), v);
        v
    }

    /// Asserts `f` as a top-level constraint.
    pub fn assert(&mut self, f: &Formula) {
        match f.simplify() {
            Formula::Top => {}
            Formula::Bottom => self.trivially_false = true,
            g => self.assert_simplified(&g),
        }
    }

    fn assert_simplified(&mut self, f: &Formula) {
        match f {
            Formula::And(a, b) => {
                self.assert_simplified(a);
                self.assert_simplified(b);
            }
            Formula::Not(inner) => match inner.as_ref() {
                Formula::Or(a, b) => {
                    self.assert_simplified(&Formula::not((**a).clone()));
                    self.assert_simplified(&Formula::not((**b).clone()));
                }
                Formula::Not(g) => self.assert_simplified(g),
                _ => {
                    let l = self.encode(f);
                    self.clauses.push(vec![l]);
                }
            },
            _ => {
                let l = self.encode(f);
                self.clauses.push(vec![l]);
            }
        }
    }

    // Returns a literal equivalent to `f`. `f` must be constant-free.
    fn encode(&mut self, f: &Formula) -> Lit {
        match f {
            Formula::Var(a) => self.atom_var(a),
            Formula::Not(g) => -self.encode(g),
            Formula::And(a, b) => {
                let (x, y) = (self.encode(a), self.encode(b));
                let v = self.fresh();
                self.clauses.push(vec![-v, x]);
                self.clauses.push(vec![-v, y]);
                self.clauses.push(vec![v, -x, -y]);
                v
            }
            Formula::Or(a, b) => {
                let (x, y) = (self.encode(a), self.encode(b));
                let v = self.fresh();
                self.clauses.push(vec![-v, x, y]);
                self.clauses.push(vec![v, -x]);
                self.clauses.push(vec![v, -y]);
                v
            }
            Formula::Implies(a, b) => {
                let (x, y) = (self.encode(a), self.encode(b));
                let v = self.fresh();
                self.clauses.push(vec![-v, -x, y]);
                self.clauses.push(vec![v, x]);
                self.clauses.push(vec![v, -y]);
                v
            }
            Formula::Iff(a, b) => {
                let (x, y) = (self.encode(a), self.encode(b));
                let v = self.fresh();
                self.clauses.push(vec![-v, -x, y]);
                self.clauses.push(vec![-v, x, -y]);
                self.clauses.push(vec![v, x, y]);
                self.clauses.push(vec![v, -x, -y]);
                v
            }
            Formula::Top | Formula::Bottom => unreachable!("constants are folded before encoding"),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Runs the search. Returns a model over the source atoms when satisfiable.
    pub fn solve(&self) -> Option<HashMap<Atom, bool>> {
        if self.trivially_false {
            return None;
        }
        let mut assignment = vec![Value::Unset; self.num_vars + 1];
        if !dpll(&self.clauses, &mut assignment) {
            return None;
        }
        Some(
            self.atoms
                .iter()
                .map(|(a, &v)| (a.clone(), assignment[v as usize] == Value::True))
                .collect(),
        )
    }

    pub fn is_satisfiable(&self) -> bool {
        if self.trivially_false {
            return false;
        }
        let mut assignment = vec![Value::Unset; self.num_vars + 1];
        dpll(&self.clauses, &mut assignment)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Value {
    Unset,
    True,
    False,
}

fn lit_value(assignment: &[Value], lit: Lit) -> Value {
    match (assignment[lit.unsigned_abs() as usize], lit > 0) {
        (Value::Unset, _) => Value::Unset,
        (Value::True, true) | (Value::False, false) => Value::True,
        _ => Value::False,
    }
}

fn set_lit(assignment: &mut [Value], lit: Lit) {
    assignment[lit.unsigned_abs() as usize] = if lit > 0 { Value::True } else { Value::False };
}

enum Propagation {
    Conflict,
    Done(Option<Lit>),
}

// Unit propagation to a fixpoint. On success returns a literal from some
// unsatisfied clause to branch on, or `None` when every clause is satisfied.
fn propagate(clauses: &[Vec<Lit>], assignment: &mut [Value]) -> Propagation {
    loop {
        let mut changed = false;
        let mut branch = None;
        for clause in clauses {
            let mut unset = None;
            let mut unset_count = 0;
            let mut satisfied = false;
            for &lit in clause {
                match lit_value(assignment, lit) {
                    Value::True => {
                        satisfied = true;
                        break;
                    }
                    Value::Unset => {
                        unset_count += 1;
                        unset = Some(lit);
                    }
                    Value::False => {}
                }
            }
            if satisfied {
                continue;
            }
            match unset_count {
                0 => return Propagation::Conflict,
                1 => {
                    set_lit(assignment, unset.expect("one unset literal"));
                    changed = true;
                }
                _ => {
                    if branch.is_none() {
                        branch = unset;
                    }
                }
            }
        }
        if !changed {
            return Propagation::Done(branch);
        }
    }
}

fn dpll(clauses: &[Vec<Lit>], assignment: &mut Vec<Value>) -> bool {
    let lit = match propagate(clauses, assignment) {
        Propagation::Conflict => return false,
        Propagation::Done(None) => return true,
        Propagation::Done(Some(lit)) => lit,
    };
    let saved = assignment.clone();
    set_lit(assignment, lit);
    if dpll(clauses, assignment) {
        return true;
    }
    assignment.copy_from_slice(&saved);
    set_lit(assignment, -lit);
    dpll(clauses, assignment)
}

/// Satisfiability of the conjunction of `formulas`.
pub fn satisfiable<'a, I: IntoIterator<Item = &'a Formula>>(formulas: I) -> bool {
    let mut cnf = Cnf::new();
    for f in formulas {
        cnf.assert(f);
    }
    cnf.is_satisfiable()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::parse::parse_formula;

    fn sat(texts: &[&str]) -> bool {
        let fs: Vec<Formula> = texts.iter().map(|t| parse_formula(t).unwrap()).collect();
        satisfiable(&fs)
    }

    #[test]
    fn small_cases() {
        assert!(!sat(&["p", "!p"]));
        assert!(sat(&[]));
        assert!(!sat(&["p <-> q", "p", "!q"]));
        assert!(sat(&["p <-> q", "p", "q"]));
        assert!(!sat(&["false"]));
        assert!(sat(&["true"]));
        assert!(!sat(&["!(p | !p)"]));
        assert!(sat(&["(a -> b) & (b -> c) & a", "c"]));
        assert!(!sat(&["(a -> b) & (b -> c) & a", "!c"]));
    }

    #[test]
    fn pigeonhole_three_into_two_is_unsat() {
        // p_i_j: pigeon i sits in hole j
        let mut fs = Vec::new();
        for i in 0..3 {
            fs.push(format!("p{i}0 | p{i}1"));
        }
        for j in 0..2 {
            for a in 0..3 {
                for b in (a + 1)..3 {
                    fs.push(format!("!(p{a}{j} & p{b}{j})"));
                }
            }
        }
        let refs: Vec<&str> = fs.iter().map(String::as_str).collect();
        assert!(!sat(&refs));
    }

    #[test]
    fn model_satisfies_formulas() {
        let f = parse_formula("(a | b) & (!a | c) & (!c | !b)").unwrap();
        let mut cnf = Cnf::new();
        cnf.assert(&f);
        let model = cnf.solve().expect("satisfiable");
        assert!(f.eval(|a| model.get(a).copied().unwrap_or(false)));
    }
}

//! Propositional formulas over named atoms.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::Error;

/// Prefix reserved for atoms allocated by the engine itself.
pub const RESERVED_PREFIX: &str = "_j_";

/// A propositional atom, identified by its source spelling.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    /// Creates an atom, checking the identifier pattern `[A-Za-z_][A-Za-z0-9_]*`.
    pub fn new(name: &str) -> Result<Self, Error> {
        if is_identifier(name) {
            Ok(Atom(Arc::from(name)))
        } else {
            Err(Error::InvalidAtom(name.to_string()))
        }
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub fn is_reserved(&self) -> bool {
        self.0.starts_with(RESERVED_PREFIX)
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    Top,
    Bottom,
    Var(Atom),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
}

impl Formula {
    /// Variable for `name`.
    ///
    /// Panics if `name` is not a valid identifier; use [`Atom::new`] for
    /// untrusted input.
    pub fn var(name: &str) -> Formula {
        Formula::Var(Atom::new(name).expect("invalid atom name"))
    }

    pub fn atom(a: Atom) -> Formula {
        Formula::Var(a)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Formula {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::Iff(Box::new(a), Box::new(b))
    }

    /// Left-folded conjunction; `true` for an empty sequence.
    pub fn conjunction<I: IntoIterator<Item = Formula>>(items: I) -> Formula {
        let mut iter = items.into_iter();
        match iter.next() {
            None => Formula::Top,
            Some(first) => iter.fold(first, Formula::and),
        }
    }

    /// Left-folded disjunction; `false` for an empty sequence.
    pub fn disjunction<I: IntoIterator<Item = Formula>>(items: I) -> Formula {
        let mut iter = items.into_iter();
        match iter.next() {
            None => Formula::Bottom,
            Some(first) => iter.fold(first, Formula::or),
        }
    }

    pub fn atoms(&self) -> BTreeSet<Atom> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    pub(crate) fn collect_atoms(&self, out: &mut BTreeSet<Atom>) {
        match self {
            Formula::Top | Formula::Bottom => {}
            Formula::Var(a) => {
                out.insert(a.clone());
            }
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    pub fn mentions(&self, atom: &Atom) -> bool {
        match self {
            Formula::Top | Formula::Bottom => false,
            Formula::Var(a) => a == atom,
            Formula::Not(f) => f.mentions(atom),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                a.mentions(atom) || b.mentions(atom)
            }
        }
    }

    /// Evaluates under a valuation given as a predicate on atoms.
    pub fn eval<F: Fn(&Atom) -> bool + Copy>(&self, val: F) -> bool {
        match self {
            Formula::Top => true,
            Formula::Bottom => false,
            Formula::Var(a) => val(a),
            Formula::Not(f) => !f.eval(val),
            Formula::And(a, b) => a.eval(val) && b.eval(val),
            Formula::Or(a, b) => a.eval(val) || b.eval(val),
            Formula::Implies(a, b) => !a.eval(val) || b.eval(val),
            Formula::Iff(a, b) => a.eval(val) == b.eval(val),
        }
    }

    /// Replaces `atom` by a truth constant and folds constants away.
    pub fn substitute(&self, atom: &Atom, value: bool) -> Formula {
        match self {
            Formula::Top | Formula::Bottom => self.clone(),
            Formula::Var(a) if a == atom => {
                if value {
                    Formula::Top
                } else {
                    Formula::Bottom
                }
            }
            Formula::Var(_) => self.clone(),
            Formula::Not(f) => mk_not(f.substitute(atom, value)),
            Formula::And(a, b) => mk_and(a.substitute(atom, value), b.substitute(atom, value)),
            Formula::Or(a, b) => mk_or(a.substitute(atom, value), b.substitute(atom, value)),
            Formula::Implies(a, b) => mk_implies(a.substitute(atom, value), b.substitute(atom, value)),
            Formula::Iff(a, b) => mk_iff(a.substitute(atom, value), b.substitute(atom, value)),
        }
    }

    /// Constant folding. The result is either `Top`, `Bottom`, or free of
    /// truth constants.
    pub fn simplify(&self) -> Formula {
        match self {
            Formula::Top | Formula::Bottom | Formula::Var(_) => self.clone(),
            Formula::Not(f) => mk_not(f.simplify()),
            Formula::And(a, b) => mk_and(a.simplify(), b.simplify()),
            Formula::Or(a, b) => mk_or(a.simplify(), b.simplify()),
            Formula::Implies(a, b) => mk_implies(a.simplify(), b.simplify()),
            Formula::Iff(a, b) => mk_iff(a.simplify(), b.simplify()),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Formula::Top | Formula::Bottom | Formula::Var(_) => 1,
            Formula::Not(f) => 1 + f.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) | Formula::Iff(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Top | Formula::Bottom | Formula::Var(_) | Formula::Not(_) => 5,
            Formula::And(..) => 4,
            Formula::Or(..) => 3,
            Formula::Implies(..) => 2,
            Formula::Iff(..) => 1,
        }
    }
}

fn mk_not(f: Formula) -> Formula {
    match f {
        Formula::Top => Formula::Bottom,
        Formula::Bottom => Formula::Top,
        f => Formula::not(f),
    }
}

fn mk_and(a: Formula, b: Formula) -> Formula {
    match (a, b) {
        (Formula::Bottom, _) | (_, Formula::Bottom) => Formula::Bottom,
        (Formula::Top, f) | (f, Formula::Top) => f,
        (a, b) => Formula::and(a, b),
    }
}

fn mk_or(a: Formula, b: Formula) -> Formula {
    match (a, b) {
        (Formula::Top, _) | (_, Formula::Top) => Formula::Top,
        (Formula::Bottom, f) | (f, Formula::Bottom) => f,
        (a, b) => Formula::or(a, b),
    }
}

fn mk_implies(a: Formula, b: Formula) -> Formula {
    match (a, b) {
        (Formula::Bottom, _) | (_, Formula::Top) => Formula::Top,
        (Formula::Top, f) => f,
        (f, Formula::Bottom) => mk_not(f),
        (a, b) => Formula::implies(a, b),
    }
}

fn mk_iff(a: Formula, b: Formula) -> Formula {
    match (a, b) {
        (Formula::Top, f) | (f, Formula::Top) => f,
        (Formula::Bottom, f) | (f, Formula::Bottom) => mk_not(f),
        (a, b) => Formula::iff(a, b),
    }
}

// Binary operators: `&` and `|` associate to the left, `->` to the right,
// `<->` to the left. The printer only adds parentheses the parser needs.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Top => f.write_str("true"),
            Formula::Bottom => f.write_str("false"),
            Formula::Var(a) => write!(f, "{a}"),
            Formula::Not(inner) => {
                f.write_str("!")?;
                write_operand(f, inner, inner.precedence() < 5)
            }
            Formula::And(a, b) => write_binary(f, self, a, b, "&", Assoc::Left),
            Formula::Or(a, b) => write_binary(f, self, a, b, "|", Assoc::Left),
            Formula::Implies(a, b) => write_binary(f, self, a, b, "->", Assoc::Right),
            Formula::Iff(a, b) => write_binary(f, self, a, b, "<->", Assoc::Left),
        }
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(PartialEq)]
enum Assoc {
    Left,
    Right,
}

fn write_binary(
    f: &mut fmt::Formatter<'_>,
    whole: &Formula,
    lhs: &Formula,
    rhs: &Formula,
    op: &str,
    assoc: Assoc,
) -> fmt::Result {
    let p = whole.precedence();
    let lhs_parens = lhs.precedence() < p || (lhs.precedence() == p && assoc == Assoc::Right);
    let rhs_parens = rhs.precedence() < p || (rhs.precedence() == p && assoc == Assoc::Left);
    write_operand(f, lhs, lhs_parens)?;
    write!(f, " {op} ")?;
    write_operand(f, rhs, rhs_parens)
}

fn write_operand(f: &mut fmt::Formatter<'_>, g: &Formula, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({g})")
    } else {
        write!(f, "{g}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: &str) -> Formula {
        Formula::var(n)
    }

    #[test]
    fn atom_names() {
        assert!(Atom::new("p").is_ok());
        assert!(Atom::new("_x1").is_ok());
        assert!(Atom::new("1p").is_err());
        assert!(Atom::new("").is_err());
        assert!(Atom::new("a-b").is_err());
        assert!(Atom::new("_j_3").unwrap().is_reserved());
    }

    #[test]
    fn printing_uses_minimal_parentheses() {
        let f = Formula::implies(Formula::and(v("p"), v("q")), v("r"));
        assert_eq!(f.to_string(), "p & q -> r");
        let g = Formula::implies(Formula::implies(v("a"), v("b")), v("c"));
        assert_eq!(g.to_string(), "(a -> b) -> c");
        let h = Formula::implies(v("a"), Formula::implies(v("b"), v("c")));
        assert_eq!(h.to_string(), "a -> b -> c");
        let k = Formula::and(v("a"), Formula::and(v("b"), v("c")));
        assert_eq!(k.to_string(), "a & (b & c)");
        let n = Formula::not(Formula::or(v("a"), Formula::Top));
        assert_eq!(n.to_string(), "!(a | true)");
        let i = Formula::iff(Formula::not(v("x")), v("p"));
        assert_eq!(i.to_string(), "!x <-> p");
    }

    #[test]
    fn substitution_folds_constants() {
        let f = Formula::and(v("p"), v("q"));
        assert_eq!(f.substitute(&Atom::new("p").unwrap(), true), v("q"));
        assert_eq!(f.substitute(&Atom::new("p").unwrap(), false), Formula::Bottom);
        let g = Formula::iff(v("p"), v("q"));
        assert_eq!(g.substitute(&Atom::new("q").unwrap(), false), Formula::not(v("p")));
    }

    #[test]
    fn conjunction_of_nothing_is_true() {
        assert_eq!(Formula::conjunction(vec![]), Formula::Top);
        assert_eq!(Formula::disjunction(vec![]), Formula::Bottom);
        assert_eq!(
            Formula::conjunction(vec![v("a"), v("b"), v("c")]).to_string(),
            "a & b & c"
        );
    }
}

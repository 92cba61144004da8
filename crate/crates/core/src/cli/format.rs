//! Theory (`.dlt`) and family (`.dlf`) files.
//!
//! A theory file holds one statement per line, each ending with `.`:
//!
//! ```text
//! w p | q .              # adds p | q to the world
//! d a : b, c / e .       # default with prerequisite a
//! d : !p / q .           # prerequisite-free default
//! d a : / b .            # empty justification set
//! ```
//!
//! A family file holds one or more `theory { f1 . f2 . }` blocks, each
//! listing the generators of one theory.

use std::fmt::Write as _;
use std::path::Path;

use crate::defaults::{DefaultRule, DefaultTheory};
use crate::logic::parse::{tokenize, Token, TokenStream};
use crate::logic::{FinTheory, Formula, FormulaSet, ParseError};
use crate::represent::TheoryFamily;

/// One-based line and column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl Location {
    fn of(text: &str, offset: usize) -> Self {
        let before = &text[..offset.min(text.len())];
        let line = before.matches('\n').count() + 1;
        let column = before.rfind('\n').map_or(before.len(), |nl| before.len() - nl - 1) + 1;
        Location { line, column }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {}, column {}: {message}", location.line, location.column)]
    Syntax { location: Location, message: String },
    #[error("theory block {index} repeats an earlier block")]
    DuplicateBlock { index: usize },
}

impl FormatError {
    fn syntax(text: &str, err: ParseError) -> Self {
        FormatError::Syntax {
            location: Location::of(text, err.offset),
            message: err.message,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct TheoryDocument {
    pub world_lines: Vec<(Formula, Location)>,
    pub default_lines: Vec<(DefaultRule, Location)>,
}

impl TheoryDocument {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        parse_theory_tokens(text).map_err(|e| FormatError::syntax(text, e))
    }

    pub fn into_theory(self) -> DefaultTheory {
        DefaultTheory::new(
            self.default_lines.into_iter().map(|(d, _)| d),
            self.world_lines.into_iter().map(|(f, _)| f).collect(),
        )
    }
}

fn parse_theory_tokens(text: &str) -> Result<TheoryDocument, ParseError> {
    let tokens = tokenize(text)?;
    let mut s = TokenStream::new(&tokens, text.len());
    let mut doc = TheoryDocument::default();
    while !s.at_end() {
        let start = s.offset();
        let location = Location::of(text, start);
        match s.bump() {
            Some(Token::Ident(k)) if k == "w" => {
                let f = s.formula()?;
                s.expect(&Token::Dot)?;
                doc.world_lines.push((f, location));
            }
            Some(Token::Ident(k)) if k == "d" => {
                let d = parse_default(&mut s)?;
                s.expect(&Token::Dot)?;
                doc.default_lines.push((d, location));
            }
            _ => {
                return Err(ParseError::new(start, "expected a statement starting with `w` or `d`"));
            }
        }
    }
    Ok(doc)
}

fn parse_default(s: &mut TokenStream<'_>) -> Result<DefaultRule, ParseError> {
    let prereq = if s.peek() == Some(&Token::Colon) {
        Formula::Top
    } else {
        s.formula()?
    };
    s.expect(&Token::Colon)?;
    let mut justifications = FormulaSet::new();
    if s.starts_formula() {
        justifications.insert(s.formula()?);
        while s.eat(&Token::Comma) {
            justifications.insert(s.formula()?);
        }
    }
    s.expect(&Token::Slash)?;
    let consequent = s.formula()?;
    Ok(DefaultRule::new(prereq, justifications, consequent))
}

pub fn parse_theory(text: &str) -> Result<DefaultTheory, FormatError> {
    Ok(TheoryDocument::parse(text)?.into_theory())
}

fn read(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_theory(path: &Path) -> Result<DefaultTheory, FormatError> {
    parse_theory(&read(path)?)
}

pub fn write_theory(dt: &DefaultTheory) -> String {
    let mut out = String::new();
    for f in dt.world() {
        let _ = writeln!(out, "w {f} .");
    }
    for d in dt.defaults() {
        let _ = writeln!(out, "d {d} .");
    }
    out
}

/// Generator sets of the blocks of a family file, in file order.
pub fn parse_family_blocks(text: &str) -> Result<Vec<FormulaSet>, FormatError> {
    parse_family_tokens(text).map_err(|e| FormatError::syntax(text, e))
}

fn parse_family_tokens(text: &str) -> Result<Vec<FormulaSet>, ParseError> {
    let tokens = tokenize(text)?;
    let mut s = TokenStream::new(&tokens, text.len());
    let mut blocks = Vec::new();
    loop {
        let start = s.offset();
        match s.bump() {
            Some(Token::Ident(k)) if k == "theory" => {}
            None if !blocks.is_empty() => break,
            _ => return Err(ParseError::new(start, "expected `theory {`")),
        }
        s.expect(&Token::LBrace)?;
        let mut generators = FormulaSet::new();
        while !s.eat(&Token::RBrace) {
            generators.insert(s.formula()?);
            s.expect(&Token::Dot)?;
        }
        blocks.push(generators);
    }
    Ok(blocks)
}

pub fn parse_family(text: &str) -> Result<TheoryFamily, FormatError> {
    let members: Vec<FinTheory> = parse_family_blocks(text)?.into_iter().map(FinTheory::new).collect();
    TheoryFamily::new(members).map_err(|e| match e {
        crate::Error::DuplicateMember { index } => FormatError::DuplicateBlock { index },
        other => unreachable!("family construction only rejects duplicates: {other}"),
    })
}

pub fn load_family(path: &Path) -> Result<TheoryFamily, FormatError> {
    parse_family(&read(path)?)
}

pub fn write_family(fam: &TheoryFamily) -> String {
    let mut out = String::new();
    for t in fam.members() {
        out.push_str("theory {\n");
        for g in t.generators() {
            let _ = writeln!(out, "  {g} .");
        }
        out.push_str("}\n");
    }
    out
}

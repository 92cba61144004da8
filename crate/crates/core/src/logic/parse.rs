//! Lexer and recursive-descent parser for the ASCII formula syntax.
//!
//! Precedence, tightest first: `!`, `&`, `|`, `->` (right associative),
//! `<->` (left associative). `&` and `|` associate to the left.

use super::formula::{Atom, Formula};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    True,
    False,
    Not,
    And,
    Or,
    Implies,
    Iff,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Colon,
    Comma,
    Slash,
    Dot,
}

impl Token {
    pub fn describe(&self) -> String {
        match self {
            Token::Ident(s) => format!("identifier `{s}`"),
            Token::True => "`true`".into(),
            Token::False => "`false`".into(),
            Token::Not => "`!`".into(),
            Token::And => "`&`".into(),
            Token::Or => "`|`".into(),
            Token::Implies => "`->`".into(),
            Token::Iff => "`<->`".into(),
            Token::LParen => "`(`".into(),
            Token::RParen => "`)`".into(),
            Token::LBrace => "`{`".into(),
            Token::RBrace => "`}`".into(),
            Token::Colon => "`:`".into(),
            Token::Comma => "`,`".into(),
            Token::Slash => "`/`".into(),
            Token::Dot => "`.`".into(),
        }
    }
}

/// A syntax error at a byte offset of the parsed text.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

/// Splits `text` into tokens paired with their byte offsets. `#` starts a
/// comment running to the end of the line.
pub fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        match c {
            b' ' | b'\t' | b'\r' | b'\n' => {
                i += 1;
                continue;
            }
            b'#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
                continue;
            }
            b'!' => out.push((Token::Not, start)),
            b'&' => out.push((Token::And, start)),
            b'|' => out.push((Token::Or, start)),
            b'(' => out.push((Token::LParen, start)),
            b')' => out.push((Token::RParen, start)),
            b'{' => out.push((Token::LBrace, start)),
            b'}' => out.push((Token::RBrace, start)),
            b':' => out.push((Token::Colon, start)),
            b',' => out.push((Token::Comma, start)),
            b'/' => out.push((Token::Slash, start)),
            b'.' => out.push((Token::Dot, start)),
            b'-' => {
                if bytes.get(i + 1) == Some(&b'>') {
                    out.push((Token::Implies, start));
                    i += 2;
                    continue;
                }
                return Err(ParseError::new(start, "expected `->`"));
            }
            b'<' => {
                if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                    out.push((Token::Iff, start));
                    i += 3;
                    continue;
                }
                return Err(ParseError::new(start, "expected `<->`"));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                let tok = match word {
                    "true" => Token::True,
                    "false" => Token::False,
                    _ => Token::Ident(word.to_string()),
                };
                out.push((tok, start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ParseError::new(start, format!("unexpected character `{ch}`")));
            }
        }
        i += 1;
    }
    Ok(out)
}

/// Cursor over a token stream, shared by the formula grammar and the file
/// formats built on top of it.
pub struct TokenStream<'a> {
    tokens: &'a [(Token, usize)],
    pos: usize,
    end_offset: usize,
}

impl<'a> TokenStream<'a> {
    pub fn new(tokens: &'a [(Token, usize)], end_offset: usize) -> Self {
        TokenStream {
            tokens,
            pos: 0,
            end_offset,
        }
    }

    pub fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    pub fn offset(&self) -> usize {
        self.tokens.get(self.pos).map(|(_, o)| *o).unwrap_or(self.end_offset)
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    pub fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect(&mut self, tok: &Token) -> Result<(), ParseError> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.unexpected(&tok.describe()))
        }
    }

    pub fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => ParseError::new(self.offset(), format!("expected {wanted}, found {}", t.describe())),
            None => ParseError::new(self.offset(), format!("expected {wanted}, found end of input")),
        }
    }

    /// True when the next token can begin a formula.
    pub fn starts_formula(&self) -> bool {
        matches!(
            self.peek(),
            Some(Token::Ident(_) | Token::True | Token::False | Token::Not | Token::LParen)
        )
    }

    pub fn formula(&mut self) -> Result<Formula, ParseError> {
        self.iff()
    }

    fn iff(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.implication()?;
        while self.eat(&Token::Iff) {
            let rhs = self.implication()?;
            lhs = Formula::iff(lhs, rhs);
        }
        Ok(lhs)
    }

    fn implication(&mut self) -> Result<Formula, ParseError> {
        let lhs = self.disjunction()?;
        if self.eat(&Token::Implies) {
            let rhs = self.implication()?;
            return Ok(Formula::implies(lhs, rhs));
        }
        Ok(lhs)
    }

    fn disjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.conjunction()?;
        while self.eat(&Token::Or) {
            let rhs = self.conjunction()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn conjunction(&mut self) -> Result<Formula, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat(&Token::And) {
            let rhs = self.unary()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseError> {
        let offset = self.offset();
        match self.bump().cloned() {
            Some(Token::Not) => Ok(Formula::not(self.unary()?)),
            Some(Token::True) => Ok(Formula::Top),
            Some(Token::False) => Ok(Formula::Bottom),
            Some(Token::Ident(name)) => {
                let atom = Atom::new(&name).map_err(|_| ParseError::new(offset, "invalid atom"))?;
                Ok(Formula::Var(atom))
            }
            Some(Token::LParen) => {
                let inner = self.formula()?;
                self.expect(&Token::RParen)?;
                Ok(inner)
            }
            Some(_) => {
                self.pos -= 1;
                Err(self.unexpected("a formula"))
            }
            None => Err(self.unexpected("a formula")),
        }
    }
}

/// Parses a complete formula from `text`.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(ParseError::new(0, "empty formula"));
    }
    let mut stream = TokenStream::new(&tokens, text.len());
    let f = stream.formula()?;
    if !stream.at_end() {
        return Err(stream.unexpected("end of input"));
    }
    Ok(f)
}

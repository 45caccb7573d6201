//! Text syntax for algebra elements.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '·' | '/' | <juxtaposition>) unary)*
//! unary   := '-' unary | power
//! power   := atom ('^' INT)?
//! atom    := INT | NAME | '(' expr ')'
//! ```
//!
//! Products are noncommutative and left-associative. The right operand of `/`
//! must evaluate to a nonzero scalar.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::coeff::Coefficient;
use crate::element::Element;
use crate::error::AlgebraError;
use crate::generator::SharedTable;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ExprError {
    #[error("unexpected character `{ch}` at position {pos}")]
    Lex { pos: usize, ch: char },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown symbol `{name}` at position {pos}{}", suggestion_text(.suggestion))]
    UnknownSymbol {
        name: String,
        pos: usize,
        suggestion: Option<String>,
    },
    #[error("divisor `{0}` is not a nonzero scalar")]
    BadDivisor(String),
    #[error("exponent too large: {0}")]
    Exponent(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn suggestion_text(s: &Option<String>) -> String {
    match s {
        Some(s) => format!(" (did you mean `{s}`?)"),
        None => String::new(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

/// Tokens with their 1-based character positions.
fn lex(src: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push((Tok::Int(chars[start..i].iter().collect()), pos));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((Tok::Name(chars[start..i].iter().collect()), pos));
            continue;
        }
        let tok = match c {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err(ExprError::Lex { pos, ch: c }),
        };
        out.push((tok, pos));
        i += 1;
    }
    Ok(out)
}

/// Parsed expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(u64),
    Sym { name: String, pos: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.at += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.at += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Int(_) | Tok::Name(_) | Tok::LParen) => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek() == Some(&Tok::Minus) {
            self.at += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.at += 1;
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                let e: u32 = n.parse().map_err(|_| ExprError::Exponent(n.clone()))?;
                self.at += 1;
                Ok(Expr::Pow(Box::new(base), e))
            }
            _ => self.err("expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.at += 1;
                n.parse()
                    .map(Expr::Int)
                    .map_err(|_| ExprError::Parse { pos, msg: format!("integer `{n}` too large") })
            }
            Some(Tok::Name(name)) => {
                self.at += 1;
                Ok(Expr::Sym { name, pos })
            }
            Some(Tok::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.at += 1;
                Ok(inner)
            }
            Some(t) => self.err(format!("unexpected {}", describe(&t))),
            None => self.err("unexpected end of input"),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("`{n}`"),
        Tok::Name(n) => format!("`{n}`"),
        Tok::Plus => "`+`".into(),
        Tok::Minus => "`-`".into(),
        Tok::Star => "`*`".into(),
        Tok::Slash => "`/`".into(),
        Tok::Caret => "`^`".into(),
        Tok::LParen => "`(`".into(),
        Tok::RParen => "`)`".into(),
    }
}

pub fn parse(src: &str) -> Result<Expr, ExprError> {
    let toks = lex(src)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: src.chars().count() + 1,
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        let t = p.toks[p.at].0.clone();
        return p.err(format!("unexpected {}", describe(&t)));
    }
    Ok(e)
}

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Pow(..) => 4,
        Expr::Int(_) | Expr::Sym { .. } => 5,
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |f: &mut fmt::Formatter<'_>, e: &Expr, min: u8| {
            if prec(e) < min {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        };
        match self {
            Expr::Int(n) => write!(f, "{n}"),
            Expr::Sym { name, .. } => f.write_str(name),
            Expr::Neg(x) => {
                f.write_str("-")?;
                wrap(f, x, 3)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                wrap(f, a, 1)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                wrap(f, b, 2)
            }
            Expr::Mul(a, b) | Expr::Div(a, b) => {
                wrap(f, a, 2)?;
                f.write_str(if matches!(self, Expr::Mul(..)) { "*" } else { "/" })?;
                wrap(f, b, 3)
            }
            Expr::Pow(a, n) => {
                wrap(f, a, 5)?;
                write!(f, "^{n}")
            }
        }
    }
}

/// Names an expression may refer to: the generators of a table, `h`, and any
/// extra bindings (composites, `q`, …). Bindings shadow generators.
#[derive(Clone, Debug)]
pub struct Scope<K: Coefficient> {
    table: SharedTable,
    bindings: BTreeMap<String, Element<K>>,
}

impl<K: Coefficient> Scope<K> {
    pub fn new(table: &SharedTable) -> Self {
        Scope {
            table: table.clone(),
            bindings: BTreeMap::new(),
        }
    }

    pub fn table(&self) -> &SharedTable {
        &self.table
    }

    pub fn bind(&mut self, name: impl Into<String>, value: Element<K>) -> &mut Self {
        self.bindings.insert(name.into(), value);
        self
    }

    pub fn with(mut self, name: impl Into<String>, value: Element<K>) -> Self {
        self.bind(name, value);
        self
    }

    pub fn lookup(&self, name: &str) -> Option<Element<K>> {
        if let Some(v) = self.bindings.get(name) {
            return Some(v.clone());
        }
        if name == "h" {
            return Some(Element::h(&self.table));
        }
        self.table.lookup(name).map(|id| Element::gen(&self.table, id))
    }

    /// Every name the scope resolves.
    pub fn names(&self) -> Vec<String> {
        let mut v: Vec<String> = self.table.names().map(str::to_string).collect();
        v.push("h".into());
        v.extend(self.bindings.keys().cloned());
        v.sort();
        v.dedup();
        v
    }

    /// Closest known name to `name`, if any is reasonably close.
    pub fn suggest(&self, name: &str) -> Option<String> {
        let mut best: Option<(usize, String)> = None;
        for cand in self.names() {
            let d = strsim::levenshtein(name, &cand);
            if best.as_ref().is_none_or(|(bd, _)| d < *bd) {
                best = Some((d, cand));
            }
        }
        let limit = (name.chars().count() / 2).max(2);
        best.filter(|(d, _)| *d <= limit).map(|(_, s)| s)
    }

    pub fn eval(&self, e: &Expr) -> Result<Element<K>, ExprError> {
        Ok(match e {
            Expr::Int(n) => {
                let n = i64::try_from(*n).map_err(|_| ExprError::Exponent(n.to_string()))?;
                Element::scalar(&self.table, K::from_int(n))
            }
            Expr::Sym { name, pos } => self.lookup(name).ok_or_else(|| ExprError::UnknownSymbol {
                name: name.clone(),
                pos: *pos,
                suggestion: self.suggest(name),
            })?,
            Expr::Neg(x) => -self.eval(x)?,
            Expr::Add(a, b) => self.eval(a)?.try_add(&self.eval(b)?)?,
            Expr::Sub(a, b) => self.eval(a)?.try_sub(&self.eval(b)?)?,
            Expr::Mul(a, b) => self.eval(a)?.try_mul(&self.eval(b)?)?,
            Expr::Div(a, b) => {
                let d = self.eval(b)?;
                let inv = d
                    .as_scalar()
                    .and_then(|k| k.try_inv())
                    .ok_or_else(|| ExprError::BadDivisor(b.to_string()))?;
                self.eval(a)?.scale(&inv)
            }
            Expr::Pow(a, n) => self.eval(a)?.pow(*n),
        })
    }

    pub fn parse_eval(&self, src: &str) -> Result<Element<K>, ExprError> {
        self.eval(&parse(src)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::element::shared;
    use crate::generator::{Generator, GeneratorTable};
    use crate::Scalar;

    fn scope() -> Scope<Scalar> {
        let t = shared(
            GeneratorTable::from_generators([
                Generator::even("a"),
                Generator::odd("beta"),
                Generator::odd("gamma"),
                Generator::even("d"),
            ])
            .unwrap(),
        );
        let q = Element::scalar(&t, Scalar::q());
        Scope::new(&t).with("q", q)
    }

    #[test]
    fn difference_of_products() {
        let s = scope();
        let e = parse("a*beta - beta*a").unwrap();
        assert!(matches!(e, Expr::Sub(..)));
        let v = s.eval(&e).unwrap();
        assert_eq!(v.render(true), "a*beta - beta*a");
    }

    #[test]
    fn h_squared_vanishes() {
        let s = scope();
        assert!(s.parse_eval("h^2 * a").unwrap().is_zero());
    }

    #[test]
    fn lex_error_position() {
        assert_eq!(parse("gamma@a"), Err(ExprError::Lex { pos: 6, ch: '@' }));
    }

    #[test]
    fn unknown_symbol_suggests() {
        let s = scope();
        match s.parse_eval("a*gama") {
            Err(ExprError::UnknownSymbol { name, pos, suggestion }) => {
                assert_eq!(name, "gama");
                assert_eq!(pos, 3);
                assert_eq!(suggestion.as_deref(), Some("gamma"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn juxtaposition_and_division() {
        let s = scope();
        let a = s.parse_eval("2 a beta / 4").unwrap();
        let b = s.parse_eval("1/2*a*beta").unwrap();
        assert_eq!(a, b);
        assert!(matches!(s.parse_eval("a/beta"), Err(ExprError::BadDivisor(_))));
        assert!(matches!(s.parse_eval("a/0"), Err(ExprError::BadDivisor(_))));
    }

    #[test]
    fn print_parse_round_trip() {
        let s = scope();
        for src in ["(q^2 - 1)/q*a*beta + h*gamma", "-a*a - 1/(q - 1)*h*d", "3*h - beta*gamma"] {
            let v = s.parse_eval(src).unwrap();
            let again = s.parse_eval(&v.render(true)).unwrap();
            assert_eq!(v, again, "{src}");
        }
    }
}

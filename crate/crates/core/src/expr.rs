//! Expression syntax for elements of a truncated free Poisson algebra.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary ('*' unary)*
//! unary  := '-' unary | atom
//! atom   := scalar | name | '{' expr ',' expr '}' | '[' expr ',' expr ']' | '(' expr ')'
//! scalar := digits ('/' digits)?
//! ```
//!
//! Braces and square brackets both denote the Poisson bracket, so rendered
//! monomials such as `a*[a,b]` parse back to themselves.

use std::fmt;

use crate::error::{Error, Result};
use crate::linear::{format_scalar, parse_scalar, Scalar};
use crate::poisson::{Ambient, PoissElt};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Scalar(Scalar),
    /// Generator name with its byte offset in the source text.
    Gen(String, usize),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Bracket(Box<Expr>, Box<Expr>),
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += c.len_utf8();
                Ok(())
            }
            Some(c) => Err(syntax(self.pos, format!("expected `{want}`, found `{c}`"))),
            None => Err(syntax(self.pos, format!("expected `{want}`, found end of input"))),
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some('-') => {
                    self.pos += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.atom()
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.text[self.pos..].starts_with(|c: char| c.is_ascii_digit()) {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn atom(&mut self) -> Result<Expr> {
        let start = match self.peek() {
            None => return Err(syntax(self.pos, "unexpected end of input")),
            Some(_) => self.pos,
        };
        let c = self.text[start..].chars().next().unwrap();
        match c {
            '{' | '[' => {
                let close = if c == '{' { '}' } else { ']' };
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(close)?;
                Ok(Expr::Bracket(Box::new(a), Box::new(b)))
            }
            '(' => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            '0'..='9' => {
                let num = self.digits();
                let mut text = num.to_string();
                if self.text[self.pos..].starts_with('/') {
                    self.pos += 1;
                    let den = self.digits();
                    if den.is_empty() {
                        return Err(syntax(self.pos, "expected denominator digits"));
                    }
                    text = format!("{num}/{den}");
                }
                let value = parse_scalar(&text).map_err(|e| syntax(start, e.to_string()))?;
                Ok(Expr::Scalar(value))
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while self.text[self.pos..].starts_with(|c: char| c.is_ascii_alphanumeric() || c == '_') {
                    self.pos += 1;
                }
                Ok(Expr::Gen(self.text[start..self.pos].to_string(), start))
            }
            other => Err(syntax(start, format!("unexpected `{other}`"))),
        }
    }
}

pub fn parse(text: &str) -> Result<Expr> {
    let mut p = Parser { text, pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(c) => Err(syntax(p.pos, format!("unexpected `{c}`"))),
    }
}

impl Expr {
    /// Evaluates in `ambient`, resolving generator names.
    pub fn eval(&self, ambient: &Ambient) -> Result<PoissElt> {
        Ok(match self {
            Expr::Scalar(c) => ambient.scalar(c.clone()),
            Expr::Gen(name, offset) => ambient.generator(name).ok_or_else(|| Error::UnknownGenerator {
                name: name.clone(),
                offset: *offset,
            })?,
            Expr::Add(a, b) => a.eval(ambient)?.add(&b.eval(ambient)?)?,
            Expr::Sub(a, b) => a.eval(ambient)?.sub(&b.eval(ambient)?)?,
            Expr::Neg(a) => a.eval(ambient)?.neg(),
            Expr::Mul(a, b) => a.eval(ambient)?.product(&b.eval(ambient)?)?,
            Expr::Bracket(a, b) => a.eval(ambient)?.bracket(&b.eval(ambient)?)?,
        })
    }

    /// Structural equality ignoring source offsets.
    pub fn same_shape(&self, other: &Expr) -> bool {
        use Expr::*;
        match (self, other) {
            (Scalar(a), Scalar(b)) => a == b,
            (Gen(a, _), Gen(b, _)) => a == b,
            (Neg(a), Neg(b)) => a.same_shape(b),
            (Add(a, b), Add(c, d)) | (Sub(a, b), Sub(c, d)) | (Mul(a, b), Mul(c, d)) | (Bracket(a, b), Bracket(c, d)) => {
                a.same_shape(c) && b.same_shape(d)
            }
            _ => false,
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 0,
            Expr::Mul(..) => 1,
            Expr::Neg(..) => 2,
            Expr::Scalar(c) if !c.is_integer() || c < &Scalar::from_integer(0.into()) => 1,
            _ => 3,
        }
    }

    fn write_at(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        let wrap = self.precedence() < min;
        if wrap {
            f.write_str("(")?;
        }
        match self {
            Expr::Scalar(c) => {
                if c < &Scalar::from_integer(0.into()) {
                    write!(f, "-{}", format_scalar(&-c))?;
                } else {
                    f.write_str(&format_scalar(c))?;
                }
            }
            Expr::Gen(name, _) => f.write_str(name)?,
            Expr::Add(a, b) => {
                a.write_at(f, 0)?;
                f.write_str(" + ")?;
                b.write_at(f, 1)?;
            }
            Expr::Sub(a, b) => {
                a.write_at(f, 0)?;
                f.write_str(" - ")?;
                b.write_at(f, 1)?;
            }
            Expr::Mul(a, b) => {
                a.write_at(f, 1)?;
                f.write_str("*")?;
                b.write_at(f, 2)?;
            }
            Expr::Neg(a) => {
                f.write_str("-")?;
                a.write_at(f, 2)?;
            }
            Expr::Bracket(a, b) => {
                f.write_str("{")?;
                a.write_at(f, 0)?;
                f.write_str(", ")?;
                b.write_at(f, 0)?;
                f.write_str("}")?;
            }
        }
        if wrap {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_at(f, 0)
    }
}

/// Parses and evaluates in one step.
pub fn eval_str(text: &str, ambient: &Ambient) -> Result<PoissElt> {
    parse(text)?.eval(ambient)
}

//! Text form of polynomials.
//!
//! Grammar: identifiers `[A-Za-z_][A-Za-z0-9_]*`, literals `p` or `p/q`,
//! binary `+ - *`, postfix `^n` with a nonnegative integer literal `n`
//! binding tightest, unary minus and parentheses. Multiplication is always
//! explicit.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Integer(BigInt),
    Literal(Rational),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn syntax(position: usize, message: impl Into<String>) -> Error {
    Error::Syntax { position, message: message.into() }
}

pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let start = i;
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => tokens.push((start, Token::Plus)),
            b'-' => tokens.push((start, Token::Minus)),
            b'*' => tokens.push((start, Token::Star)),
            b'^' => tokens.push((start, Token::Caret)),
            b'(' => tokens.push((start, Token::LParen)),
            b')' => tokens.push((start, Token::RParen)),
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let numer: BigInt = text[start..i].parse().expect("digits");
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    let denom_start = i + 1;
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    let denom: BigInt = text[denom_start..i].parse().expect("digits");
                    if denom.is_zero() {
                        return Err(syntax(denom_start, "zero denominator"));
                    }
                    tokens.push((start, Token::Literal(Rational::new(numer, denom))));
                } else {
                    tokens.push((start, Token::Integer(numer)));
                }
                continue;
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                tokens.push((start, Token::Ident(text[start..i].to_string())));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character `{ch}`")));
            }
        }
        i += 1;
    }
    Ok(tokens)
}

struct Parser<'a, S> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    vars: &'a [S],
}

impl<S: AsRef<str>> Parser<'_, S> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn arity(&self) -> usize {
        self.vars.len()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                    acc = acc.try_add(&self.term()?)?;
                }
                Some(Token::Minus) => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while let Some(Token::Star) = self.peek() {
            self.bump();
            acc = acc.try_mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if let Some(Token::Minus) = self.peek() {
            self.bump();
            return Ok(-self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if let Some(Token::Caret) = self.peek() {
            self.bump();
            let at = self.offset();
            let exp = match self.bump() {
                Some(Token::Integer(n)) => u32::try_from(n).map_err(|_| Error::ExponentOverflow)?,
                _ => return Err(syntax(at, "expected a nonnegative integer exponent")),
            };
            if let Some(Token::Caret) = self.peek() {
                return Err(syntax(self.offset(), "chained exponent needs parentheses"));
            }
            return base.try_pow(exp);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial> {
        let at = self.offset();
        match self.bump() {
            Some(Token::Integer(n)) => Ok(Polynomial::constant(self.arity(), Rational::from_integer(n))),
            Some(Token::Literal(q)) => Ok(Polynomial::constant(self.arity(), q)),
            Some(Token::Ident(name)) => match self.vars.iter().position(|v| v.as_ref() == name) {
                Some(index) => Ok(Polynomial::variable(self.arity(), index)),
                None => Err(Error::UnknownVariable(name)),
            },
            Some(Token::LParen) => {
                let inner = self.expr()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(syntax(self.tokens.get(self.pos - 1).map_or(self.end, |(o, _)| *o), "expected `)`")),
                }
            }
            Some(_) => Err(syntax(at, "expected a number, variable or `(`")),
            None => Err(syntax(at, "unexpected end of input")),
        }
    }
}

/// Parses `text` over the ordered variable list `vars`.
pub fn parse_poly<S: AsRef<str>>(text: &str, vars: &[S]) -> Result<Polynomial> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0, end: text.len(), vars };
    let poly = parser.expr()?;
    if parser.pos < parser.tokens.len() {
        return Err(syntax(parser.offset(), "unexpected token (multiplication must be explicit)"));
    }
    Ok(poly)
}

fn write_var(f: &mut fmt::Formatter<'_>, names: Option<&[String]>, index: usize) -> fmt::Result {
    match names.and_then(|n| n.get(index)) {
        Some(name) => f.write_str(name),
        None => write!(f, "x{index}"),
    }
}

/// Prints terms from the largest to the smallest in grevlex.
pub(crate) fn write_polynomial(f: &mut fmt::Formatter<'_>, poly: &Polynomial, names: Option<&[String]>) -> fmt::Result {
    if poly.is_zero() {
        return f.write_str("0");
    }
    for (k, (m, c)) in poly.terms().iter().rev().enumerate() {
        let negative = c.is_negative();
        match (k, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let magnitude = c.abs();
        let mut first = true;
        if m.is_one() || !magnitude.is_one() {
            write!(f, "{magnitude}")?;
            first = false;
        }
        for (index, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write_var(f, names, index)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
    }
    Ok(())
}

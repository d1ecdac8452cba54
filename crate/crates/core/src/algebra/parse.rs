//! Parser for ring-element expressions such as `4*a^3 - t2*a - b^2` or `(c + 1)/a^1/Delta^2`.
//!
//! Identifiers: `a b c t1 t2` plus the abbreviations `t3` and `Delta`, which are
//! expanded on the spot. Division is accepted only by units of the localized ring.

use std::str::FromStr;

use num_bigint::BigInt;

use super::poly::{Poly, Var};
use super::ring::RingElem;
use super::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let ch = bytes[i] as char;
        if ch.is_ascii_whitespace() {
            i += 1;
        } else if ch.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = s[start..i].parse::<BigInt>().expect("digits");
            out.push((start, Tok::Num(n)));
        } else if ch.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(s[start..i].to_string())));
        } else if "+-*/^()".contains(ch) {
            out.push((i, Tok::Op(ch)));
            i += 1;
        } else {
            return Err(ParseError { pos: i, msg: format!("unexpected character {ch:?}") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<RingElem, ParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RingElem, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let pos = self.pos();
                let d = self.unary()?;
                acc = match acc.checked_div(&d) {
                    Some(q) => q,
                    None => {
                        return Err(ParseError {
                            pos,
                            msg: format!("division by {d}, which is not a unit of the localized ring"),
                        })
                    }
                };
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RingElem, ParseError> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<RingElem, ParseError> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.at += 1;
                    let e: u32 = match n.try_into() {
                        Ok(e) => e,
                        Err(_) => return self.err("exponent too large"),
                    };
                    Ok(base.pow(e))
                }
                _ => self.err("expected a non-negative integer exponent"),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<RingElem, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(RingElem::constant(Rational::from_integer(n)))
            }
            Some(Tok::Ident(id)) => {
                self.at += 1;
                if let Some(v) = Var::from_name(&id) {
                    return Ok(RingElem::var(v));
                }
                match id.as_str() {
                    "t3" => Ok(RingElem::t3()),
                    "Delta" => Ok(RingElem::delta()),
                    _ => {
                        self.at -= 1;
                        self.err(format!("unknown identifier {id:?}"))
                    }
                }
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            _ => self.err("expected a number, identifier or '('"),
        }
    }
}

pub fn parse_ring_elem(s: &str) -> Result<RingElem, ParseError> {
    let toks = lex(s)?;
    let mut p = Parser { toks, at: 0, end: s.len() };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

pub fn parse_poly(s: &str) -> Result<Poly, ParseError> {
    let e = parse_ring_elem(s)?;
    match e.as_poly() {
        Some(p) => Ok(p.clone()),
        None => Err(ParseError { pos: 0, msg: format!("{e} is not a polynomial") }),
    }
}

impl FromStr for RingElem {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ring_elem(s)
    }
}

impl FromStr for Poly {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

//! Reader for the canonical polynomial syntax, e.g. `3/2*x^2*y - 1`.
//!
//! Accepts sums, products, integer powers, parentheses, integer literals,
//! division by nonzero constants and (over cyclotomic fields) the symbol `zeta`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::field::Coeff;

use super::polynomial::{Polynomial, Ring};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            out.push((start, Tok::Num(s.parse().expect("digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((start, Tok::Ident(chars[start..i].iter().collect())));
        } else if "+-*/^()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(parse_error(text, i, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

fn parse_error(text: &str, offset: usize, message: String) -> Error {
    let before: String = text.chars().take(offset).collect();
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Error::Parse {
        line,
        column,
        message,
    }
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    text: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.pos)
            .map_or(self.text.chars().count(), |(o, _)| *o)
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        parse_error(self.text, self.offset(), msg.into())
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.eat('+');
            self.term()?
        };
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

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.factor()?;
            } else if self.eat('/') {
                let at = self.offset();
                let d = self.factor()?;
                if !d.is_constant() || d.is_zero() {
                    return Err(parse_error(self.text, at, "division by a non-constant or zero".into()));
                }
                acc = acc.scale(&d.constant_term().inv().expect("nonzero"));
            } else {
                return Ok(acc);
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if self.eat('^') {
            match self.peek().cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    let e: u32 = u32::try_from(&n).map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => Err(self.err("expected a nonnegative integer exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(self.ring.constant(Coeff::from_rational(BigRational::from_integer(n))))
            }
            Some(Tok::Ident(name)) => {
                if let Some(i) = self.ring.var_index(&name) {
                    self.pos += 1;
                    Ok(self.ring.var(i))
                } else if name == "zeta" {
                    if self.ring.field().ell().is_none() {
                        return Err(self.err("`zeta` is only available over a cyclotomic field"));
                    }
                    self.pos += 1;
                    Ok(self.ring.constant(self.ring.field().zeta()))
                } else {
                    Err(self.err(format!("unknown variable `{name}`")))
                }
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(-self.factor()?)
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

pub(crate) fn parse_polynomial(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        ring,
        text,
        toks,
        pos: 0,
    };
    if p.toks.is_empty() {
        return Err(p.err("empty polynomial"));
    }
    let out = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(out)
}

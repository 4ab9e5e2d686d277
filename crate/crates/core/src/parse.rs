//! A small parser for expressions in `q` and `u`, used for golden tables and
//! command-line input.
//!
//! Grammar: integers, the variables `q` and `u`, parentheses, binary `+ - * /`,
//! unary minus, integer powers `x^k` (also `x^{k}` and `x^-k`), and implicit
//! multiplication by juxtaposition (`2q^3`, `u^2(u-1)`). Division is only
//! allowed by expressions that are invertible in `Q(q)[u, u^-1]`, i.e.
//! monomials in `u` with a nonzero coefficient in `Q(q)`.

use crate::algebra::{QPoly, QRatFunc, Rational, UPoly};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Var(char),
    Op(char),
    Open,
    Close,
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut chars = s.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '0'..='9' => {
                let mut v: i64 = 0;
                while let Some(&d) = chars.peek() {
                    let Some(dv) = d.to_digit(10) else { break };
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(dv as i64))
                        .ok_or_else(|| Error::Parse("integer literal too large".into()))?;
                    chars.next();
                }
                out.push(Tok::Num(v));
            }
            'q' | 'u' => {
                out.push(Tok::Var(c));
                chars.next();
            }
            '+' | '-' | '*' | '/' | '^' => {
                out.push(Tok::Op(c));
                chars.next();
            }
            '(' | '{' => {
                out.push(Tok::Open);
                chars.next();
            }
            ')' | '}' => {
                out.push(Tok::Close);
                chars.next();
            }
            '\\' => {
                // LaTeX spacing and \cdot
                chars.next();
                let mut word = String::new();
                while let Some(&a) = chars.peek() {
                    if a.is_ascii_alphabetic() {
                        word.push(a);
                        chars.next();
                    } else {
                        break;
                    }
                }
                match word.as_str() {
                    "cdot" => out.push(Tok::Op('*')),
                    "" | "left" | "right" => {
                        // "\," or "\ " spacing: skip one punctuation char
                        if word.is_empty() {
                            chars.next();
                        }
                    }
                    w => return Err(Error::Parse(format!("unsupported command \\{w}"))),
                }
            }
            other => return Err(Error::Parse(format!("unexpected character {other:?}"))),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<UPoly> {
        let mut acc = self.term()?;
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.pos += 1;
            let rhs = self.term()?;
            acc = if c == '+' { acc.add(&rhs) } else { acc.sub(&rhs) };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<UPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Op('*')) => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                Some(Tok::Op('/')) => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = acc.mul(&invert(&rhs)?);
                }
                Some(Tok::Num(_) | Tok::Var(_) | Tok::Open) => {
                    acc = acc.mul(&self.power()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<UPoly> {
        match self.peek() {
            Some(Tok::Op('-')) => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some(Tok::Op('+')) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<UPoly> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Op('^')) {
            return Ok(base);
        }
        self.pos += 1;
        let braced = self.peek() == Some(&Tok::Open);
        if braced {
            self.pos += 1;
        }
        let neg = if self.peek() == Some(&Tok::Op('-')) {
            self.pos += 1;
            true
        } else {
            false
        };
        let e = match self.next() {
            Some(Tok::Num(e)) => e,
            other => return Err(Error::Parse(format!("expected exponent, found {other:?}"))),
        };
        if braced && self.next() != Some(Tok::Close) {
            return Err(Error::Parse("unclosed exponent".into()));
        }
        let e = u32::try_from(e).map_err(|_| Error::Parse("exponent too large".into()))?;
        let p = base.pow(e);
        if neg {
            invert(&p)
        } else {
            Ok(p)
        }
    }

    fn atom(&mut self) -> Result<UPoly> {
        match self.next() {
            Some(Tok::Num(v)) => Ok(UPoly::constant(QRatFunc::from_int(v))),
            Some(Tok::Var('q')) => Ok(UPoly::constant(QRatFunc::q())),
            Some(Tok::Var(_)) => Ok(UPoly::u()),
            Some(Tok::Open) => {
                let e = self.expr()?;
                match self.next() {
                    Some(Tok::Close) => Ok(e),
                    _ => Err(Error::Parse("missing closing parenthesis".into())),
                }
            }
            other => Err(Error::Parse(format!("unexpected token {other:?}"))),
        }
    }
}

fn invert(p: &UPoly) -> Result<UPoly> {
    if p.is_zero() {
        return Err(Error::DivisionByZero);
    }
    p.inverse()
        .ok_or_else(|| Error::Parse(format!("cannot divide by {p}, which is not a monomial in u")))
}

/// Parses an expression in `q` and `u`.
pub fn parse_expr(s: &str) -> Result<UPoly> {
    let toks = tokenize(s)?;
    if toks.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut p = Parser { toks, pos: 0 };
    let v = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Parse(format!("trailing input at token {}", p.pos)));
    }
    Ok(v)
}

/// Parses an element of `Q(q)`.
pub fn parse_ratfunc(s: &str) -> Result<QRatFunc> {
    let v = parse_expr(s)?;
    if v.is_zero() {
        return Ok(QRatFunc::zero());
    }
    if v.valuation() != 0 || v.degree() != Some(0) {
        return Err(Error::Parse(format!("{s:?} depends on u")));
    }
    Ok(v.coeff(0))
}

/// Parses a polynomial in `q` with rational coefficients.
pub fn parse_qpoly(s: &str) -> Result<QPoly> {
    parse_ratfunc(s)?
        .to_poly()
        .ok_or_else(|| Error::Parse(format!("{s:?} is not a polynomial in q")))
}

/// Parses a rational number like `-3/4`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    parse_ratfunc(s)?
        .as_constant()
        .ok_or_else(|| Error::Parse(format!("{s:?} is not a constant")))
}

//! Infix polynomial expressions: `+ - * / ^`, parentheses, rational
//! literals and the variables `x y z w t u`.

use num_bigint::BigInt;
use num_traits::Zero;

use super::exponent::ExponentVector;
use super::polynomial::{Polynomial, VAR_NAMES};
use super::rational::Rational;
use crate::error::{Error, Result};

pub fn parse_polynomial(nvars: usize, src: &str) -> Result<Polynomial> {
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        nvars,
    };
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        let before = &self.src[..self.pos.min(self.src.len())];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let col = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        Error::Parse {
            line,
            col,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.nvars);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                _ if first => 1,
                _ => break,
            };
            let t = self.term()?;
            acc = if sign > 0 { &acc + &t } else { &acc - &t };
            first = false;
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                Some(b'/') => {
                    self.pos += 1;
                    let f = self.power()?;
                    if !f.is_constant() || f.is_zero() {
                        return Err(self.error("division only by nonzero constants"));
                    }
                    acc = acc.scale(&f.constant_term().recip());
                }
                Some(c) if c == b'(' || c.is_ascii_alphanumeric() => {
                    let f = self.power()?;
                    acc = &acc * &f;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let n = self.integer()?;
            let n: u32 = n
                .try_into()
                .map_err(|_| self.error("exponent must be a small non-negative integer"))?;
            return Ok(base.pow(n));
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.error("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(Polynomial::constant(self.nvars, Rational::from_integer(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = (c as char).to_string();
                let idx = VAR_NAMES
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| self.error("unknown variable"))?;
                if idx >= self.nvars {
                    return Err(self.error("variable outside the declared variable count"));
                }
                self.pos += 1;
                Ok(Polynomial::monomial(
                    self.nvars,
                    ExponentVector::unit(idx),
                    Rational::from_integer(1.into()),
                ))
            }
            _ => Err(self.error("expected a number, variable or '('")),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let n: BigInt = s.parse().map_err(|_| self.error("bad integer"))?;
        debug_assert!(!n.is_zero() || s.chars().all(|c| c == '0'));
        Ok(n)
    }
}

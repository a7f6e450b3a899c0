//! Parser for the canonical text form, e.g. `x1*y2 - 1/2*x2^3*y1 + 4`.
//!
//! Also accepts parentheses and repeated factors, so `(b - d)*(b*d - a*e)` parses.

use std::sync::Arc;

use num_bigint::BigInt;

use super::{Monomial, Polynomial, Ring};
use crate::error::{Error, Result};

pub(crate) fn parse_polynomial(ring: &Arc<Ring>, text: &str) -> Result<Polynomial> {
    let mut p = Parser { ring, src: text.as_bytes(), pos: 0 };
    let f = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(f)
}

struct Parser<'a> {
    ring: &'a Arc<Ring>,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {}", self.pos))
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

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = acc.add(&self.term()?)?;
            } else if self.eat(b'-') {
                acc = acc.sub(&self.term()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        while self.eat(b'*') {
            acc = acc.mul(&self.unary()?)?;
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Polynomial> {
        if self.eat(b'-') {
            return Ok(self.unary()?.neg());
        }
        if self.eat(b'+') {
            return self.unary();
        }
        let base = self.atom()?;
        if self.eat(b'^') {
            let k = self.integer()?;
            let k = u32::try_from(k).map_err(|_| self.error("exponent out of range"))?;
            return Ok(base.pow(k));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse"))
    }

    fn atom(&mut self) -> Result<Polynomial> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let f = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(f)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let den = if self.eat(b'/') { self.integer()? } else { BigInt::from(1) };
                let c = self.ring.field().from_fraction(&num, &den)?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii name");
                let i = self.ring.var_index(name)?;
                Ok(Polynomial::monomial(self.ring, Monomial::var(self.ring.nvars(), i)))
            }
            _ => Err(self.error("expected a number, variable or `(`")),
        }
    }
}

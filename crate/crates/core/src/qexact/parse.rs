//! Parser for the canonical text form, e.g. `(Q^4 - 1)/(Q^4 + 1)`.
//!
//! Grammar (whitespace insignificant):
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | atom
//! atom  := integer | 'Q' ('^' '-'? integer)? | '(' expr ')'
//! ```
//!
//! `3/2*Q^2` reads as `(3/2)*Q^2`, so every printed value parses back to itself.

use std::str::FromStr;

use num::{BigInt, BigRational};

use super::rational::QRational;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&mut self) -> Option<u8> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.src.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {}", self.pos))
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected '{}'", c as char)))
        }
    }

    fn expr(&mut self) -> Result<QRational> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<QRational> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = &acc * &self.unary()?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = acc.checked_div(&self.unary()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<QRational> {
        if self.peek() == Some(b'-') {
            self.pos += 1;
            return Ok(-self.unary()?);
        }
        self.atom()
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.peek();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        s.parse().map_err(|_| self.err("bad integer"))
    }

    fn atom(&mut self) -> Result<QRational> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.expect(b')')?;
                Ok(v)
            }
            Some(b'Q') => {
                self.pos += 1;
                let mut exp = 1i64;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let neg = if self.peek() == Some(b'-') {
                        self.pos += 1;
                        true
                    } else {
                        false
                    };
                    let e: i64 = self
                        .integer()?
                        .try_into()
                        .map_err(|_| self.err("exponent too large"))?;
                    exp = if neg { -e } else { e };
                }
                Ok(QRational::q_half_pow(exp))
            }
            Some(c) if c.is_ascii_digit() => {
                let n = self.integer()?;
                Ok(QRational::rational(BigRational::from_integer(n)))
            }
            _ => Err(self.err("unexpected input")),
        }
    }
}

impl FromStr for QRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser {
            src: s.as_bytes(),
            pos: 0,
        };
        let v = p.expr()?;
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        Ok(v)
    }
}

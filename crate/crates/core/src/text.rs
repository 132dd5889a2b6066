//! Term-level reader shared by the multivariate and univariate polynomial
//! grammars: signed sums of terms, each term a product of rational numbers
//! and `name^exp` factors joined by spaces or `*`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Debug, Clone)]
pub(crate) struct RawTerm {
    pub coeff: Rational,
    /// (variable name, exponent) in the order written.
    pub factors: Vec<(String, u32)>,
    pub pos: usize,
}

impl RawTerm {
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(s.parse().expect("digit string"))
    }

    fn ident(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }
}

pub(crate) fn read_terms(text: &str) -> Result<Vec<RawTerm>> {
    let mut cur = Cursor {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match cur.peek() {
            None if first => return Err(cur.err("empty polynomial")),
            None => return Err(cur.err("expected a term after sign")),
            Some(b'+') => cur.pos += 1,
            Some(b'-') => {
                negative = true;
                cur.pos += 1;
            }
            Some(_) if first => {}
            Some(c) => return Err(cur.err(format!("expected `+` or `-`, found `{}`", c as char))),
        }
        first = false;
        let term_pos = cur.pos;
        let mut coeff = Rational::one();
        let mut factors = Vec::new();
        let mut any = false;
        loop {
            match cur.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let p = cur.digits()?;
                    let mut value = Rational::from_integer(p);
                    if cur.peek() == Some(b'/') {
                        cur.pos += 1;
                        let q = cur.digits()?;
                        if q.is_zero() {
                            return Err(cur.err("zero denominator"));
                        }
                        value /= Rational::from_integer(q);
                    }
                    coeff *= value;
                }
                Some(c) if c.is_ascii_alphabetic() => {
                    let name = cur.ident();
                    let mut exp = 1u32;
                    if cur.peek() == Some(b'^') {
                        cur.pos += 1;
                        let e = cur.digits()?;
                        exp = u32::try_from(e).map_err(|_| cur.err("exponent too large"))?;
                    }
                    factors.push((name, exp));
                }
                _ => {
                    if !any {
                        return Err(cur.err("expected a coefficient or variable"));
                    }
                    break;
                }
            }
            any = true;
            if cur.peek() == Some(b'*') {
                cur.pos += 1;
                match cur.peek() {
                    Some(c) if c.is_ascii_alphanumeric() => {}
                    _ => return Err(cur.err("dangling `*`")),
                }
            }
        }
        if negative {
            coeff = -coeff;
        }
        terms.push(RawTerm {
            coeff,
            factors,
            pos: term_pos,
        });
        if cur.peek().is_none() {
            return Ok(terms);
        }
    }
}

//! Recursive-descent parser for the polynomial expression grammar.
//!
//! ```text
//! expression ::= ('+' | '-')? term (('+' | '-') term)*
//! term       ::= factor ('*' factor)*
//! factor     ::= rational | variable ('^' signed-integer)? | '(' expression ')'
//! rational   ::= digits ('/' digits)?
//! ```
//!
//! Whitespace is insignificant. Variables must belong to the supplied
//! [`VarSet`]. Printing a polynomial and re-parsing it is a fixed point.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Rat, VarSet};

/// Parse `text` into a canonical polynomial over `vars`.
pub fn parse_poly(text: &str, vars: &VarSet) -> Result<LaurentPoly> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
        vars,
    };
    let poly = p.expression()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.err("unexpected trailing input"));
    }
    Ok(poly)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    vars: &'a VarSet,
}

impl<'a> Parser<'a> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.peek()?;
        self.pos += 1;
        Some(c)
    }

    fn expression(&mut self) -> Result<LaurentPoly> {
        let mut negate = false;
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
            }
            Some(b'-') => {
                self.pos += 1;
                negate = true;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = acc.neg();
        }
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.add(&t)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    let t = self.term()?;
                    acc = acc.sub(&t)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<LaurentPoly> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expression()?;
                if self.bump() != Some(b')') {
                    self.pos -= 1;
                    return Err(self.err("expected `)`"));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.digits()?;
                    if d == BigInt::from(0) {
                        return Err(self.err("zero denominator"));
                    }
                    d
                } else {
                    BigInt::one()
                };
                Ok(LaurentPoly::constant(self.vars.clone(), Rat::new(num, den)))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                let name = self.identifier();
                if self.vars.index_of(&name).is_none() {
                    self.pos = start;
                    return Err(self.err(&format!("unknown variable `{name}`")));
                }
                let exp = if self.peek() == Some(b'^') {
                    self.pos += 1;
                    self.signed_integer()?
                } else {
                    1
                };
                let m = self.vars.monomial(&[(&name, exp)]).expect("checked name");
                Ok(LaurentPoly::term(self.vars.clone(), m, Rat::one()))
            }
            _ => Err(self.err("expected a rational, a variable, or `(`")),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected digits"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse::<BigInt>().unwrap())
    }

    fn identifier(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len()
            && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
        {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned()
    }

    fn signed_integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("malformed exponent"));
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        let v: i64 = s
            .parse()
            .map_err(|_| self.err("exponent out of range"))?;
        Ok(if neg { -v } else { v })
    }
}

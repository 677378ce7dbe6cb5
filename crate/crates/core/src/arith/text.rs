//! Canonical text form of (Laurent) polynomials.
//!
//! Rendering lists terms in ascending exponent order with explicit signs,
//! `q^e` tokens and `*` products, e.g. `1 - q + 3*q^2`. Laurent polynomials
//! with negative exponents factor out their lowest power: `q^-6*(1 - q + q^3)`.
//! The parser accepts any sum of products of integers, `q^e` powers and
//! parenthesised subexpressions, which covers everything the renderer emits.

use std::fmt::{self, Write};
use std::str::FromStr;

use num_traits::{One, Signed};

use super::{Integer, Laurent, Poly};
use crate::error::{Error, Result};

fn write_terms<'a>(f: &mut impl Write, terms: impl Iterator<Item = (i64, &'a Integer)>) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let mag = c.abs();
        match (first, c.is_negative()) {
            (true, true) => f.write_char('-')?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let mono = match e {
            0 => None,
            1 => Some("q".to_string()),
            e => Some(format!("q^{e}")),
        };
        match mono {
            None => write!(f, "{mag}")?,
            Some(m) if mag.is_one() => f.write_str(&m)?,
            Some(m) => write!(f, "{mag}*{m}")?,
        }
    }
    if first {
        f.write_char('0')?;
    }
    Ok(())
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Laurent::from(self))
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.offset() >= 0 || self.body().coeffs().len() == 1 {
            return write_terms(f, self.terms());
        }
        write!(f, "q^{}*(", self.offset())?;
        write_terms(f, self.terms().map(|(e, c)| (e - self.offset(), c)))?;
        f.write_char(')')
    }
}

impl FromStr for Laurent {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_laurent(s)
    }
}

pub fn parse_laurent(s: &str) -> Result<Laurent> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let v = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at byte {} of polynomial text", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Laurent> {
        let mut acc = if self.eat(b'-') {
            -self.term()?
        } else {
            self.eat(b'+');
            self.term()?
        };
        loop {
            if self.eat(b'+') {
                acc = acc + self.term()?;
            } else if self.eat(b'-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Laurent> {
        let mut acc = self.factor()?;
        while self.eat(b'*') {
            acc = acc * self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Laurent> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(b')') {
                    return Err(self.error("expected `)`"));
                }
                Ok(v)
            }
            Some(b'q') => {
                self.pos += 1;
                if !self.eat(b'^') {
                    return Ok(Laurent::q_power(1));
                }
                let neg = self.eat(b'-');
                let e: i64 = self.digits()?.parse().map_err(|_| self.error("exponent out of range"))?;
                Ok(Laurent::q_power(if neg { -e } else { e }))
            }
            Some(b'0'..=b'9') => {
                let d = self.digits()?;
                let c: Integer = d.parse().map_err(|_| self.error("bad integer"))?;
                Ok(Laurent::monomial(c, 0))
            }
            _ => Err(self.error("expected integer, `q` or `(`")),
        }
    }

    fn digits(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }
}

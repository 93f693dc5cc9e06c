//! Ring specification grammar:
//!
//! ```text
//! spec   := factor ('x' factor)*
//! factor := 'Z' n | 'Z[' p '^' r ']' | 'GF(' q ')'
//! ```
//!
//! Letters are case-insensitive and whitespace is ignored. `Z n` with composite
//! `n` expands into its prime-power factors. Error positions are byte offsets
//! into the original text.

use crate::error::{Error, Result};
use crate::ring::arith::{checked_pow, factorize, is_prime, prime_power};
use crate::ring::{FactorSpec, RingSpec, DEFAULT_MAX_ORDER};

struct Parser<'a> {
    tokens: Vec<(usize, char)>,
    pos: usize,
    text: &'a str,
    max_order: u64,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, max_order: u64) -> Self {
        let tokens = text.char_indices().filter(|(_, c)| !c.is_whitespace()).collect();
        Parser { tokens, pos: 0, text, max_order }
    }

    fn within_cap(&self, order: Option<u64>) -> Result<()> {
        match order {
            Some(o) if o <= self.max_order => Ok(()),
            o => Err(Error::ResourceLimit { order: o.unwrap_or(u64::MAX), cap: self.max_order }),
        }
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.text.len(), |&(i, _)| i)
    }

    fn peek(&self) -> Option<char> {
        self.tokens.get(self.pos).map(|&(_, c)| c.to_ascii_lowercase())
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { position: self.offset(), message: message.into() })
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.error(format!("expected '{want}', found '{c}'")),
            None => self.error(format!("expected '{want}', found end of input")),
        }
    }

    fn number(&mut self) -> Result<(usize, u64)> {
        let start = self.offset();
        let mut value: u64 = 0;
        let mut digits = 0;
        while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
            value = match value.checked_mul(10).and_then(|v| v.checked_add(d as u64)) {
                Some(v) => v,
                None => return Err(Error::Syntax { position: start, message: "number too large".into() }),
            };
            digits += 1;
            self.pos += 1;
        }
        if digits == 0 {
            return self.error("expected a number");
        }
        Ok((start, value))
    }

    fn factor(&mut self, out: &mut Vec<FactorSpec>) -> Result<()> {
        match self.peek() {
            Some('z') => {
                self.pos += 1;
                if self.peek() == Some('[') {
                    self.pos += 1;
                    let (at, p) = self.number()?;
                    self.expect('^')?;
                    let (_, r) = self.number()?;
                    self.expect(']')?;
                    if !is_prime(p) {
                        return Err(Error::InvalidInput(format!("{p} at position {at} is not prime")));
                    }
                    let r = u32::try_from(r).map_err(|_| Error::InvalidInput(format!("exponent {r} too large")))?;
                    self.within_cap(checked_pow(p, r))?;
                    out.push(FactorSpec::local_z(p, r)?);
                } else {
                    let (_, n) = self.number()?;
                    if n < 2 {
                        return Err(Error::InvalidInput(format!("Z{n} needs n >= 2")));
                    }
                    self.within_cap(Some(n))?;
                    for (p, r) in factorize(n) {
                        out.push(FactorSpec::local_z(p, r)?);
                    }
                }
                Ok(())
            }
            Some('g') => {
                self.pos += 1;
                self.expect('f')?;
                self.expect('(')?;
                let (at, q) = self.number()?;
                self.expect(')')?;
                self.within_cap(Some(q))?;
                let (p, k) = prime_power(q).ok_or_else(|| {
                    Error::InvalidInput(format!("GF({q}) at position {at}: {q} is not a prime power"))
                })?;
                out.push(FactorSpec::galois_field(p, k)?);
                Ok(())
            }
            Some(c) => self.error(format!("expected 'Z' or 'GF', found '{c}'")),
            None => self.error("expected a factor, found end of input"),
        }
    }
}

pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    parse_ring_spec_with_cap(text, DEFAULT_MAX_ORDER)
}

pub fn parse_ring_spec_with_cap(text: &str, max_order: u64) -> Result<RingSpec> {
    let mut parser = Parser::new(text, max_order);
    let mut factors = Vec::new();
    parser.factor(&mut factors)?;
    while parser.peek().is_some() {
        parser.expect('x')?;
        parser.factor(&mut factors)?;
    }
    RingSpec::with_max_order(factors, max_order)
}

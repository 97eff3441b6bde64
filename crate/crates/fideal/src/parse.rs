//! The ideal input language: `n=4; x1*x2, x2*x3` and the equivalent JSON
//! form `{"n": 4, "generators": [[1,2],[2,3]]}`.

use crate::error::Error;
use crate::ideal::{Ideal, RawIdeal, DEFAULT_AMBIENT_LIMIT};
use crate::subset::VertexSubset;

/// Parse the text grammar under the default ambient limit.
pub fn parse_ideal(text: &str) -> Result<Ideal, Error> {
    parse_ideal_with_limit(text, DEFAULT_AMBIENT_LIMIT)
}

/// Parse the text grammar with an explicit ambient limit.
pub fn parse_ideal_with_limit(text: &str, limit: u32) -> Result<Ideal, Error> {
    Parser::new(text).parse(limit)
}

/// Accept either input form: JSON when the first non-space byte is `{`,
/// the text grammar otherwise.
pub fn read_ideal(text: &str) -> Result<Ideal, Error> {
    read_ideal_with_limit(text, DEFAULT_AMBIENT_LIMIT)
}

/// Limit-aware version of [`read_ideal`].
pub fn read_ideal_with_limit(text: &str, limit: u32) -> Result<Ideal, Error> {
    if text.trim_start().starts_with('{') {
        let raw: RawIdeal = serde_json::from_str(text)?;
        raw.validate(limit)
    } else {
        parse_ideal_with_limit(text, limit)
    }
}

struct Parser<'a> {
    rest: &'a str,
    line: usize,
    col: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            rest: text,
            line: 1,
            col: 1,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.rest.chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.advance(c);
        }
    }

    fn advance(&mut self, c: char) {
        self.rest = &self.rest[c.len_utf8()..];
        if c == '\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest.chars().next()
    }

    fn expect(&mut self, want: char) -> Result<(), Error> {
        match self.peek() {
            Some(c) if c == want => {
                self.advance(c);
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected '{want}', found '{c}'"))),
            None => Err(self.err(format!("expected '{want}', found end of input"))),
        }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::parse_at(self.line, self.col, msg)
    }

    /// An unsigned integer; `u64` so absurd indices still report their value.
    fn integer(&mut self) -> Result<u64, Error> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {}
            Some(c) => return Err(self.err(format!("expected a number, found '{c}'"))),
            None => return Err(self.err("expected a number, found end of input")),
        }
        let mut value: u64 = 0;
        while let Some(c) = self.rest.chars().next() {
            let Some(d) = c.to_digit(10) else { break };
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(d as u64))
                .ok_or_else(|| self.err("number too large"))?;
            self.advance(c);
        }
        Ok(value)
    }

    /// `"x" INT`, checked against the ambient size.
    fn variable(&mut self, n: u32) -> Result<u32, Error> {
        match self.peek() {
            Some('x') => self.advance('x'),
            Some(c) => return Err(self.err(format!("expected a variable like x1, found '{c}'"))),
            None => return Err(self.err("expected a variable like x1, found end of input")),
        }
        let at = (self.line, self.col);
        let index = self.integer()?;
        if index == 0 || index > n as u64 {
            return Err(Error::IndexOutOfRange {
                index,
                n,
                at: Some(at),
            });
        }
        Ok(index as u32)
    }

    /// `gen = "x" INT ("*" "x" INT)*`; a repeated variable is malformed input
    /// (the monomial would not be square-free).
    fn generator(&mut self, n: u32) -> Result<VertexSubset, Error> {
        let mut g = VertexSubset::EMPTY;
        loop {
            let pos = (self.line, self.col);
            let v = self.variable(n)?;
            if g.contains(v) {
                return Err(Error::parse_at(
                    pos.0,
                    pos.1,
                    format!("repeated variable x{v} in a generator"),
                ));
            }
            g = g.with(v);
            match self.peek() {
                Some('*') => self.advance('*'),
                _ => return Ok(g),
            }
        }
    }

    fn parse(&mut self, limit: u32) -> Result<Ideal, Error> {
        self.expect('n')?;
        self.expect('=')?;
        let n64 = self.integer()?;
        let limit = limit.min(crate::ideal::MAX_AMBIENT);
        if n64 == 0 || n64 > limit as u64 {
            return Err(Error::AmbientTooLarge {
                n: n64.min(u32::MAX as u64) as u32,
                limit,
            });
        }
        let n = n64 as u32;
        self.expect(';')?;
        if self.peek().is_none() {
            return Err(Error::EmptyIdeal);
        }
        let mut gens = vec![self.generator(n)?];
        while let Some(c) = self.peek() {
            match c {
                ',' => {
                    self.advance(',');
                    gens.push(self.generator(n)?);
                }
                other => {
                    return Err(self.err(format!("unexpected '{other}' after generator list")))
                }
            }
        }
        Ideal::with_limit(n, gens, limit)
    }
}

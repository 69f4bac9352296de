//! Text grammar for Seifert data, `[g,n;(a1,b1),(a2,b2),...]`, and the
//! Chern-Simons value file format.

use crate::error::{Error, Result};
use crate::seifert::{validate_seifert, RawSeifert, SeifertData};

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        Cursor { text: text.as_bytes(), pos: 0 }
    }

    fn fail<T>(&self, expected: &str) -> Result<T> {
        Err(Error::Parse { offset: self.pos, expected: expected.to_string() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail(&format!("'{}'", byte as char))
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.text.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return self.fail("integer");
        }
        let lexeme = std::str::from_utf8(&self.text[start..self.pos]).expect("ascii digits");
        lexeme.parse().or_else(|_| {
            self.pos = start;
            self.fail("integer within 64-bit range")
        })
    }

    fn pair(&mut self) -> Result<(i64, i64)> {
        self.expect(b'(')?;
        let alpha = self.integer()?;
        self.expect(b',')?;
        let beta = self.integer()?;
        self.expect(b')')?;
        Ok((alpha, beta))
    }
}

/// Parses the grammar without checking the Seifert invariants.
pub fn parse_raw(text: &str) -> Result<RawSeifert> {
    let mut c = Cursor::new(text);
    c.expect(b'[')?;
    let genus = c.integer()?;
    c.expect(b',')?;
    let euler = c.integer()?;
    let mut pairs = Vec::new();
    match c.peek() {
        Some(b';') => {
            c.pos += 1;
            if c.peek() != Some(b']') {
                pairs.push(c.pair()?);
                while c.peek() == Some(b',') {
                    c.pos += 1;
                    pairs.push(c.pair()?);
                }
            }
            c.expect(b']')?;
        }
        Some(b']') => c.pos += 1,
        _ => return c.fail("';' or ']'"),
    }
    if c.peek().is_some() {
        return c.fail("end of input");
    }
    Ok(RawSeifert { genus, euler, pairs })
}

/// Parses and validates Seifert data.
pub fn parse_seifert(text: &str) -> Result<SeifertData> {
    validate_seifert(parse_raw(text)?)
}

/// Chern-Simons values in radians: a JSON array of numbers, or one decimal per line.
pub fn parse_cs_values(text: &str) -> Result<Vec<f64>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        return serde_json::from_str::<Vec<f64>>(text).map_err(|e| Error::Parse {
            offset: byte_offset(text, e.line(), e.column()),
            expected: "JSON array of numbers".to_string(),
        });
    }
    let mut values = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.trim();
        if !body.is_empty() {
            let lead = line.len() - line.trim_start().len();
            let v: f64 = body.parse().map_err(|_| Error::Parse {
                offset: offset + lead,
                expected: "decimal number".to_string(),
            })?;
            values.push(v);
        }
        offset += line.len();
    }
    Ok(values)
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let before: usize = text.split_inclusive('\n').take(line.saturating_sub(1)).map(str::len).sum();
    before + column.saturating_sub(1)
}

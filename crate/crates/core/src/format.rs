//! Plain-text ideal files.
//!
//! ```text
//! # comment
//! ring 32003 3 grevlex x y z
//! x^2 - 3*y*z
//! x*y + z^2    # trailing comments are fine
//! ```
//!
//! The header fixes the prime, the variable count, the monomial order and the
//! variable names. Every following non-blank line is one polynomial with
//! integer coefficients, `*` for products, `^` for powers and `+`/`-`.
//! Coefficients are reduced modulo the prime.

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::{PolyRing, RingRef};
use std::fmt::Write as _;

#[derive(Debug, Clone)]
pub struct IdealFile {
    pub ring: RingRef,
    pub polys: Vec<Polynomial>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Header fields that replace the ones written in a file.
#[derive(Debug, Clone, Default)]
pub struct HeaderOverrides {
    pub prime: Option<u64>,
    pub order: Option<MonomialOrder>,
}

/// Parses a whole ideal file.
pub fn parse_ideal_file(src: &str) -> Result<IdealFile> {
    parse_ideal_file_with(src, &HeaderOverrides::default())
}

/// Parses an ideal file, substituting the prime and order from `overrides`.
/// Coefficients are reduced modulo the substituted prime.
pub fn parse_ideal_file_with(src: &str, overrides: &HeaderOverrides) -> Result<IdealFile> {
    let mut ring: Option<RingRef> = None;
    let mut polys = Vec::new();
    for (idx, raw) in src.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(raw);
        if line.trim().is_empty() {
            continue;
        }
        match &ring {
            None => ring = Some(parse_header(line, lineno, overrides)?),
            Some(r) => polys.push(parse_polynomial_at(r, line, lineno)?),
        }
    }
    let ring = ring.ok_or_else(|| err(1, 1, "missing 'ring' header"))?;
    Ok(IdealFile { ring, polys })
}

fn parse_header(line: &str, lineno: usize, overrides: &HeaderOverrides) -> Result<RingRef> {
    let mut fields = Vec::new();
    let mut rest = line;
    let mut offset = 0;
    while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
        let tail = &rest[start..];
        let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
        fields.push((offset + start + 1, &tail[..len]));
        offset += start + len;
        rest = &tail[len..];
    }
    let col_at = |i: usize| fields.get(i).map(|f| f.0).unwrap_or(line.len() + 1);
    match fields.first() {
        Some((_, "ring")) => {}
        _ => {
            return Err(err(
                lineno,
                col_at(0),
                "expected header 'ring <p> <n> <order> <names...>'",
            ))
        }
    }
    let p: u64 = fields
        .get(1)
        .and_then(|f| f.1.parse().ok())
        .ok_or_else(|| err(lineno, col_at(1), "expected a prime"))?;
    let n: usize = fields
        .get(2)
        .and_then(|f| f.1.parse().ok())
        .ok_or_else(|| err(lineno, col_at(2), "expected a variable count"))?;
    let order: MonomialOrder = match fields.get(3) {
        Some((_, s)) => s.parse().map_err(|m: String| err(lineno, col_at(3), m))?,
        None => return Err(err(lineno, col_at(3), "expected a monomial order")),
    };
    let names: Vec<&str> = fields.iter().skip(4).map(|f| f.1).collect();
    if names.len() != n {
        return Err(err(
            lineno,
            col_at(4 + names.len().min(n)),
            format!("header declares {n} variables but names {}", names.len()),
        ));
    }
    for (k, name) in names.iter().enumerate() {
        if !crate::ring::valid_user_name(name) {
            return Err(err(lineno, col_at(4 + k), format!("invalid variable name '{name}'")));
        }
    }
    let p = overrides.prime.unwrap_or(p);
    let order = overrides.order.clone().unwrap_or(order);
    PolyRing::new(p, &names, order).map_err(|e| err(lineno, col_at(1), e.to_string()))
}

/// Parses a single polynomial over `ring`.
pub fn parse_polynomial(ring: &RingRef, src: &str) -> Result<Polynomial> {
    parse_polynomial_at(ring, src, 1)
}

fn parse_polynomial_at(ring: &RingRef, src: &str, line: usize) -> Result<Polynomial> {
    let mut parser = Parser {
        ring,
        src: src.as_bytes(),
        pos: 0,
        line,
    };
    let poly = parser.poly()?;
    parser.skip_ws();
    if parser.pos < parser.src.len() {
        return Err(parser.error("unexpected character"));
    }
    Ok(poly)
}

struct Parser<'a> {
    ring: &'a RingRef,
    src: &'a [u8],
    pos: usize,
    line: usize,
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        let found = match self.src.get(self.pos) {
            Some(&b) if b.is_ascii_graphic() => format!(" '{}'", b as char),
            Some(_) => " (non-printable byte)".into(),
            None => " (end of line)".into(),
        };
        err(self.line, self.pos + 1, format!("{msg}{found}"))
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

    fn poly(&mut self) -> Result<Polynomial> {
        let field = *self.ring.field();
        let mut terms: Vec<(Fp, Monomial)> = Vec::new();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            None => return Err(self.error("empty polynomial")),
            _ => false,
        };
        loop {
            let (c, m) = self.term()?;
            terms.push((if sign { field.neg(c) } else { c }, m));
            match self.peek() {
                Some(b'+') => sign = false,
                Some(b'-') => sign = true,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(Polynomial::from_terms(self.ring, terms))
    }

    fn term(&mut self) -> Result<(Fp, Monomial)> {
        let field = *self.ring.field();
        let n = self.ring.nvars();
        let mut coef: Fp = 1 % field.characteristic();
        let mut exps = vec![0u16; n];
        loop {
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    let c = self.integer_mod()?;
                    let e = self.exponent()?;
                    coef = field.mul(coef, field.pow(c, e as u64));
                }
                Some(b) if b.is_ascii_alphabetic() => {
                    let start = self.pos;
                    while self.pos < self.src.len()
                        && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                    {
                        self.pos += 1;
                    }
                    let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                    let Some(i) = self.ring.var_index(name) else {
                        return Err(err(self.line, start + 1, format!("unknown variable '{name}'")));
                    };
                    let e = self.exponent()?;
                    exps[i] = exps[i]
                        .checked_add(e)
                        .ok_or_else(|| err(self.line, start + 1, "exponent exceeds 65535"))?;
                }
                _ => return Err(self.error("expected a coefficient or variable")),
            }
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok((coef, Monomial::from_exponents(&exps)))
    }

    fn exponent(&mut self) -> Result<u16> {
        if self.peek() != Some(b'^') {
            return Ok(1);
        }
        self.pos += 1;
        if !matches!(self.peek(), Some(b) if b.is_ascii_digit()) {
            return Err(self.error("expected an exponent"));
        }
        let start = self.pos;
        let mut v: u32 = 0;
        while let Some(&b) = self.src.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            v = v * 10 + (b - b'0') as u32;
            if v > u16::MAX as u32 {
                return Err(err(self.line, start + 1, "exponent exceeds 65535"));
            }
            self.pos += 1;
        }
        Ok(v as u16)
    }

    fn integer_mod(&mut self) -> Result<Fp> {
        let p = self.ring.characteristic() as u64;
        let mut v: u64 = 0;
        while let Some(&b) = self.src.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            v = (v * 10 + (b - b'0') as u64) % p;
            self.pos += 1;
        }
        Ok(v as Fp)
    }
}

/// Renders an ideal file that [`parse_ideal_file`] reads back.
pub fn write_ideal_file(ring: &PolyRing, polys: &[Polynomial]) -> String {
    let mut out = format!(
        "ring {} {} {}",
        ring.characteristic(),
        ring.nvars(),
        ring.order().name()
    );
    for name in ring.names() {
        out.push(' ');
        out.push_str(name);
    }
    out.push('\n');
    for f in polys {
        let _ = writeln!(out, "{f}");
    }
    out
}

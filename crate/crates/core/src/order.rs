//! Global monomial orders on exponent vectors.
//!
//! Graded orders compare the plain total degree first. Variable weights of a
//! ring only affect its grading (homogeneity, sugar, Hilbert series), never
//! the order itself, so every order here stays a well-order.

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use serde::Serialize;
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Default)]
pub enum MonomialOrder {
    #[default]
    GRevLex,
    Lex,
    GrLex,
    /// Compares the first `split` variables under `first`; ties are broken on
    /// the remaining variables under `second`. An elimination order for the
    /// leading block.
    Block {
        split: usize,
        first: Box<MonomialOrder>,
        second: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn block(split: usize, first: MonomialOrder, second: MonomialOrder) -> Self {
        MonomialOrder::Block {
            split,
            first: Box::new(first),
            second: Box::new(second),
        }
    }

    /// Checked comparison; rejects vectors of different length.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::ArityError {
                expected: a.nvars(),
                found: b.nvars(),
            });
        }
        if let MonomialOrder::Block { split, .. } = self {
            if *split > a.nvars() {
                return Err(Error::ArityError {
                    expected: *split,
                    found: a.nvars(),
                });
            }
        }
        Ok(self.cmp(a, b))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::GRevLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| revlex(a.exponents(), b.exponents())),
            MonomialOrder::GrLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.exponents().cmp(b.exponents())),
            MonomialOrder::Lex => a.exponents().cmp(b.exponents()),
            _ => self.cmp_slices(a.exponents(), b.exponents()),
        }
    }

    fn cmp_slices(&self, a: &[u16], b: &[u16]) -> Ordering {
        let deg = |v: &[u16]| v.iter().map(|&e| e as u32).sum::<u32>();
        match self {
            MonomialOrder::GRevLex => deg(a).cmp(&deg(b)).then_with(|| revlex(a, b)),
            MonomialOrder::GrLex => deg(a).cmp(&deg(b)).then_with(|| a.cmp(b)),
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Block { split, first, second } => first
                .cmp_slices(&a[..*split], &b[..*split])
                .then_with(|| second.cmp_slices(&a[*split..], &b[*split..])),
        }
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::GRevLex => "grevlex".into(),
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::GrLex => "grlex".into(),
            MonomialOrder::Block { split, first, second } => {
                format!("block({split},{},{})", first.name(), second.name())
            }
        }
    }
}

/// Reverse-lexicographic tie-break: the vector whose last differing entry is
/// smaller is the bigger monomial.
#[inline]
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "grevlex" => Ok(MonomialOrder::GRevLex),
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::GrLex),
            other => Err(format!(
                "unknown monomial order '{other}' (expected grevlex, lex or grlex)"
            )),
        }
    }
}

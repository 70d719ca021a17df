use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use std::cmp::Ordering;
use std::sync::Arc;

/// Reserved prefix for auxiliary variables introduced by elimination.
pub const AUX_PREFIX: char = '@';

/// A graded polynomial ring `F_p[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    field: PrimeField,
    names: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

/// Shared handle; polynomials keep one of these.
pub type RingRef = Arc<PolyRing>;

pub(crate) fn valid_user_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    /// A standard-graded ring with user-visible variable names.
    pub fn new(p: u64, names: &[&str], order: MonomialOrder) -> Result<RingRef> {
        for name in names {
            if !valid_user_name(name) {
                return Err(Error::InvalidRing(format!("bad variable name '{name}'")));
            }
        }
        let names: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        Self::build(PrimeField::new(p)?, names, vec![1; 0], order)
    }

    /// `x0, ..., x{n-1}` under grevlex.
    pub fn with_vars(p: u64, prefix: &str, n: usize) -> Result<RingRef> {
        let names: Vec<String> = (0..n).map(|i| format!("{prefix}{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        Self::new(p, &refs, MonomialOrder::GRevLex)
    }

    /// Internal constructor: allows reserved names and non-unit weights.
    pub(crate) fn build(
        field: PrimeField,
        names: Vec<String>,
        weights: Vec<u32>,
        order: MonomialOrder,
    ) -> Result<RingRef> {
        let n = names.len();
        let weights = if weights.is_empty() { vec![1; n] } else { weights };
        if weights.len() != n {
            return Err(Error::ArityError {
                expected: n,
                found: weights.len(),
            });
        }
        let mut seen = std::collections::HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable '{name}'")));
            }
        }
        if let MonomialOrder::Block { split, .. } = &order {
            if *split > n {
                return Err(Error::InvalidRing(format!("block split {split} exceeds {n} variables")));
            }
        }
        Ok(Arc::new(PolyRing {
            field,
            names,
            weights,
            order,
        }))
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn is_standard_graded(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Same variables and field, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<RingRef> {
        Self::build(self.field, self.names.clone(), self.weights.clone(), order)
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// Degree in the ring's grading.
    #[inline]
    pub fn degree_of(&self, m: &Monomial) -> u32 {
        if self.is_standard_graded() {
            m.degree()
        } else {
            m.weighted_degree(&self.weights)
        }
    }

    #[inline]
    pub fn normalize(&self, c: i64) -> Fp {
        self.field.from_i64(c)
    }
}

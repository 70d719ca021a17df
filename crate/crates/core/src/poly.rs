//! Sparse polynomials in canonical form.

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::Monomial;
use crate::ring::{PolyRing, RingRef};
use crate::rng::SeededRng;
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coef: Fp,
    pub mono: Monomial,
}

/// A polynomial over `F_p`: terms strictly descending in the ring's order,
/// no zero coefficients. Equal polynomials have identical term sequences.
#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

#[inline]
pub(crate) fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &RingRef, c: i64) -> Self {
        let c = ring.normalize(c);
        Self::monomial(ring, c, Monomial::one(ring.nvars()))
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, 1, Monomial::var(ring.nvars(), i))
    }

    pub fn monomial(ring: &RingRef, coef: Fp, mono: Monomial) -> Self {
        let terms = if coef.is_multiple_of(ring.characteristic()) {
            Vec::new()
        } else {
            vec![Term {
                coef: coef % ring.characteristic(),
                mono,
            }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a polynomial from arbitrary (unsorted, possibly repeated) terms.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Fp, Monomial)>) -> Self {
        let field = *ring.field();
        let mut raw: Vec<Term> = terms
            .into_iter()
            .map(|(c, m)| Term {
                coef: c % field.characteristic(),
                mono: m,
            })
            .collect();
        raw.sort_by(|a, b| ring.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(raw.len());
        for t in raw {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coef = field.add(last.coef, t.coef),
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coef != 0);
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Wraps terms already in canonical order. Only for kernel code.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<Term>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| t.coef != 0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    #[inline]
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub(crate) fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Leading monomial. Panics on the zero polynomial.
    #[inline]
    pub fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }

    #[inline]
    pub fn lc(&self) -> Fp {
        self.terms[0].coef
    }

    /// Nonzero constant?
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    /// Largest degree of a term in the ring's grading.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| self.ring.degree_of(&t.mono)).max()
    }

    /// `Some(d)` iff every term has degree `d`; the zero polynomial gives `None`
    /// together with `true` from [`Polynomial::is_homogeneous`].
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.ring.degree_of(&self.terms.first()?.mono);
        self.terms
            .iter()
            .all(|t| self.ring.degree_of(&t.mono) == d)
            .then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.combine(other, 1, &Monomial::one(self.ring.nvars())))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let minus_one = self.ring.field().neg(1);
        Ok(self.combine(other, minus_one, &Monomial::one(self.ring.nvars())))
    }

    pub fn neg(&self) -> Polynomial {
        let f = *self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: f.neg(t.coef),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn scale(&self, c: Fp) -> Polynomial {
        let f = *self.ring.field();
        let c = c % f.characteristic();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: f.mul(t.coef, c),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn mul_term(&self, c: Fp, m: &Monomial) -> Polynomial {
        let f = *self.ring.field();
        if c.is_multiple_of(f.characteristic()) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coef: f.mul(t.coef, c),
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for t in &small.terms {
            acc = acc.combine(big, t.coef, &t.mono);
        }
        Ok(acc)
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some(t) if t.coef == 1 => self.clone(),
            Some(t) => {
                let inv = self.ring.field().inv(t.coef).expect("nonzero leading coefficient");
                self.scale(inv)
            }
        }
    }

    /// `self + c * m * other`, merging two sorted term lists.
    pub(crate) fn combine(&self, other: &Polynomial, c: Fp, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: merge_add(&self.ring, &self.terms, &other.terms, c, m),
        }
    }

    /// Exact division by `g`; `None` if `g` does not divide `self`.
    pub fn exact_div(&self, g: &Polynomial) -> Result<Option<Polynomial>> {
        self.check_ring(g)?;
        if g.is_zero() {
            return Err(Error::DivisionByZero(self.ring.characteristic()));
        }
        let field = *self.ring.field();
        let inv = field.inv(g.lc())?;
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some(lt) = rem.terms.first() {
            let Some(q) = g.lm().quotient_of(&lt.mono) else {
                return Ok(None);
            };
            let c = field.mul(lt.coef, inv);
            rem = rem.combine(g, field.neg(c), &q);
            quotient.push(Term { coef: c, mono: q });
        }
        Ok(Some(Polynomial::from_sorted(&self.ring, quotient)))
    }

    /// Re-expresses the polynomial in another ring with the same number of
    /// variables (typically the same variables under a different order).
    pub fn to_ring(&self, target: &RingRef) -> Result<Polynomial> {
        if target.nvars() != self.ring.nvars() {
            return Err(Error::ArityError {
                expected: target.nvars(),
                found: self.ring.nvars(),
            });
        }
        if target.characteristic() != self.ring.characteristic() {
            return Err(Error::RingMismatch);
        }
        Ok(Polynomial::from_terms(
            target,
            self.terms.iter().map(|t| (t.coef, t.mono.clone())),
        ))
    }

    /// Maps variable `i` to variable `map[i]` of `target`.
    pub fn relabel(&self, target: &RingRef, map: &[usize]) -> Polynomial {
        let n = target.nvars();
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|t| {
                let mut e = vec![0u16; n];
                for (i, &x) in t.mono.exponents().iter().enumerate() {
                    e[map[i]] += x;
                }
                (t.coef, Monomial::from_exponents(&e))
            }),
        )
    }

    /// Variables that actually occur.
    pub fn support(&self) -> Vec<bool> {
        let mut used = vec![false; self.ring.nvars()];
        for t in &self.terms {
            for (u, &e) in used.iter_mut().zip(t.mono.exponents()) {
                *u |= e > 0;
            }
        }
        used
    }

    /// Evaluates at a point of `F_p^n`.
    pub fn eval(&self, point: &[Fp]) -> Fp {
        let f = *self.ring.field();
        self.terms.iter().fold(0, |acc, t| {
            let v = t
                .mono
                .exponents()
                .iter()
                .zip(point)
                .fold(t.coef, |v, (&e, &x)| f.mul(v, f.pow(x, e as u64)));
            f.add(acc, v)
        })
    }
}

/// `a + c * m * b` for sorted term lists.
pub(crate) fn merge_add(ring: &PolyRing, a: &[Term], b: &[Term], c: Fp, m: &Monomial) -> Vec<Term> {
    let field = *ring.field();
    if c == 0 || b.is_empty() {
        return a.to_vec();
    }
    let unit_shift = m.is_one();
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut j = 0;
    let mut pending: Option<Term> = None;
    let next_b = |j: usize| -> Option<Term> {
        b.get(j).map(|t| Term {
            coef: field.mul(t.coef, c),
            mono: if unit_shift { t.mono.clone() } else { t.mono.mul(m) },
        })
    };
    if j < b.len() {
        pending = next_b(j);
    }
    while i < a.len() {
        let Some(pb) = pending.as_ref() else { break };
        match ring.cmp(&a[i].mono, &pb.mono) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(pending.take().unwrap());
                j += 1;
                pending = next_b(j);
            }
            Ordering::Equal => {
                let s = field.add(a[i].coef, pb.coef);
                if s != 0 {
                    out.push(Term {
                        coef: s,
                        mono: a[i].mono.clone(),
                    });
                }
                i += 1;
                j += 1;
                pending = next_b(j);
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    while let Some(t) = pending.take() {
        out.push(t);
        j += 1;
        pending = next_b(j);
    }
    out
}

/// `count` random `F_p`-linear combinations of `gens`, which must share one degree.
pub fn random_combinations(gens: &[Polynomial], count: usize, rng: &mut SeededRng) -> Result<Vec<Polynomial>> {
    let Some(first) = gens.first() else {
        return Err(Error::ContractViolation("no generators to combine".into()));
    };
    if count == 0 {
        return Err(Error::ContractViolation("count must be at least 1".into()));
    }
    let ring = first.ring().clone();
    let mut deg = None;
    for g in gens {
        if !same_ring(g.ring(), &ring) {
            return Err(Error::RingMismatch);
        }
        let Some(d) = g.homogeneous_degree() else {
            if g.is_zero() {
                continue;
            }
            return Err(Error::NotHomogeneous(g.to_string()));
        };
        match deg {
            None => deg = Some(d),
            Some(d0) if d0 != d => return Err(Error::DegreeMismatch(d0, d)),
            _ => {}
        }
    }
    let p = ring.characteristic();
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut acc = Polynomial::zero(&ring);
        for g in gens {
            let c = rng.below(p);
            acc = acc.combine(g, c, &Monomial::one(ring.nvars()));
        }
        out.push(acc);
    }
    Ok(out)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.ring.field();
        for (k, t) in self.terms.iter().enumerate() {
            let c = field.signed(t.coef);
            let (neg, abs) = (c < 0, c.unsigned_abs());
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mut factors = Vec::new();
            if abs != 1 || t.mono.is_one() {
                factors.push(abs.to_string());
            }
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.names()[i].clone()),
                    _ => factors.push(format!("{}^{}", self.ring.names()[i], e)),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

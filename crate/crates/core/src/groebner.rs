//! Division with remainder and Buchberger's algorithm.
//!
//! Pairs are selected by (sugar, lcm degree, creation index). Both Buchberger
//! criteria are applied through the Gebauer-Moeller update. During pair
//! processing S-polynomials are only top-reduced; the final basis is
//! interreduced, made monic and sorted by leading monomial, ascending.

use crate::error::{Error, Result};
use crate::field::Fp;
use crate::monomial::Monomial;
use crate::poly::{merge_add, same_ring, Polynomial, Term};
use crate::ring::{PolyRing, RingRef};

/// A reduced Groebner basis with respect to the order of its ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingRef,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Basis of the unit ideal?
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements.iter().map(|g| g.lm().clone()).collect()
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }
}

/// Bitmask filter for divisibility: bit `i % 64` is set when variable `i` occurs.
#[inline]
fn support_mask(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &e)| if e > 0 { acc | 1 << (i % 64) } else { acc })
}

struct Reducers<'a> {
    polys: Vec<&'a Polynomial>,
    masks: Vec<u64>,
}

impl<'a> Reducers<'a> {
    fn new(polys: impl IntoIterator<Item = &'a Polynomial>) -> Self {
        let polys: Vec<&Polynomial> = polys.into_iter().filter(|g| !g.is_zero()).collect();
        let masks = polys.iter().map(|g| support_mask(g.lm())).collect();
        Reducers { polys, masks }
    }

    #[inline]
    fn find(&self, m: &Monomial) -> Option<(&'a Polynomial, Monomial)> {
        let mask = support_mask(m);
        for (g, &gm) in self.polys.iter().zip(&self.masks) {
            if gm & !mask != 0 {
                continue;
            }
            if let Some(q) = g.lm().quotient_of(m) {
                return Some((g, q));
            }
        }
        None
    }
}

/// Fully reduces `f` modulo `divisors`. The largest reducible term is always
/// eliminated first, using the first divisor (in the given sequence) whose
/// leading monomial divides it.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let reducers = Reducers::new(divisors.iter());
    reduce_full(f, &reducers)
}

fn reduce_full(f: &Polynomial, reducers: &Reducers<'_>) -> Polynomial {
    let ring = f.ring().clone();
    let field = *ring.field();
    let mut rem: Vec<Term> = f.terms().to_vec();
    let mut start = 0;
    let mut out: Vec<Term> = Vec::new();
    while start < rem.len() {
        let lead = &rem[start];
        match reducers.find(&lead.mono) {
            Some((g, q)) => {
                let c = field.mul(lead.coef, field.inv(g.lc()).expect("nonzero lc"));
                rem = merge_add(&ring, &rem[start..], g.terms(), field.neg(c), &q);
                start = 0;
            }
            None => {
                out.push(lead.clone());
                start += 1;
            }
        }
    }
    Polynomial::from_sorted(&ring, out)
}

fn reduce_top(f: Polynomial, reducers: &Reducers<'_>) -> Polynomial {
    let ring = f.ring().clone();
    let field = *ring.field();
    let mut rem = f.into_terms();
    while let Some(lead) = rem.first() {
        match reducers.find(&lead.mono) {
            Some((g, q)) => {
                let c = field.mul(lead.coef, field.inv(g.lc()).expect("nonzero lc"));
                rem = merge_add(&ring, &rem, g.terms(), field.neg(c), &q);
            }
            None => break,
        }
    }
    Polynomial::from_sorted(&ring, rem)
}

/// Options for [`buchberger_with`].
#[derive(Debug, Clone, Copy)]
pub struct BuchbergerOptions {
    /// Apply the coprime and chain criteria.
    pub criteria: bool,
    /// Skip pairs of sugar above this bound. Only meaningful for homogeneous
    /// input, where the result is then a basis up to that degree.
    pub degree_bound: Option<u32>,
}

impl Default for BuchbergerOptions {
    fn default() -> Self {
        BuchbergerOptions {
            criteria: true,
            degree_bound: None,
        }
    }
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
    index: usize,
}

impl Pair {
    fn key(&self) -> (u32, u32, usize) {
        (self.sugar, self.lcm.degree(), self.index)
    }
}

/// Reduced Groebner basis of the ideal generated by `gens` under the order of
/// their ring.
pub fn buchberger(gens: &[Polynomial]) -> Result<GroebnerBasis> {
    buchberger_with(gens, BuchbergerOptions::default())
}

pub fn buchberger_with(gens: &[Polynomial], opts: BuchbergerOptions) -> Result<GroebnerBasis> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => {
            return Err(Error::ContractViolation(
                "Groebner basis of an empty generator list".into(),
            ))
        }
    };
    if gens.iter().any(|g| !same_ring(g.ring(), &ring)) {
        return Err(Error::RingMismatch);
    }
    let mut state = State {
        ring: ring.clone(),
        polys: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        pair_counter: 0,
        opts,
    };

    let mut input: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if input.is_empty() {
        return Ok(GroebnerBasis {
            ring,
            elements: Vec::new(),
        });
    }
    input.sort_by(|a, b| {
        let da = a.degree().unwrap_or(0);
        let db = b.degree().unwrap_or(0);
        da.cmp(&db).then_with(|| ring.cmp(a.lm(), b.lm()))
    });
    for g in input {
        let sugar = g.degree().unwrap_or(0);
        let reducers = Reducers::new(state.active_polys());
        let h = reduce_top(g, &reducers);
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(unit_basis(&ring));
        }
        state.insert(h.monic(), sugar);
    }

    while let Some(pair) = state.pop_pair() {
        let spoly = state.s_polynomial(&pair);
        let reducers = Reducers::new(state.active_polys());
        let h = reduce_top(spoly, &reducers);
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(unit_basis(&ring));
        }
        state.insert(h.monic(), pair.sugar);
    }

    Ok(interreduce(&ring, state.active_polys().cloned().collect()))
}

fn unit_basis(ring: &RingRef) -> GroebnerBasis {
    GroebnerBasis {
        ring: ring.clone(),
        elements: vec![Polynomial::one(ring)],
    }
}

/// Turns a Groebner basis into the reduced one.
fn interreduce(ring: &RingRef, mut polys: Vec<Polynomial>) -> GroebnerBasis {
    polys.sort_by(|a, b| ring.cmp(a.lm(), b.lm()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for g in polys {
        if !minimal.iter().any(|h| h.lm().divides(g.lm())) {
            minimal.retain(|h| !g.lm().divides(h.lm()));
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others = Reducers::new(minimal.iter().enumerate().filter(|&(l, _)| l != k).map(|(_, g)| g));
        let g = &minimal[k];
        let lead = Polynomial::from_sorted(ring, vec![g.terms()[0].clone()]);
        let tail = Polynomial::from_sorted(ring, g.terms()[1..].to_vec());
        let tail = reduce_full(&tail, &others);
        reduced.push(lead.add(&tail).expect("same ring").monic());
    }
    reduced.sort_by(|a, b| ring.cmp(a.lm(), b.lm()));
    GroebnerBasis {
        ring: ring.clone(),
        elements: reduced,
    }
}

struct State {
    ring: RingRef,
    polys: Vec<Polynomial>,
    sugar: Vec<u32>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    pair_counter: usize,
    opts: BuchbergerOptions,
}

impl State {
    fn active_polys(&self) -> impl Iterator<Item = &Polynomial> {
        self.polys.iter().zip(&self.active).filter(|(_, &a)| a).map(|(p, _)| p)
    }

    fn deg(&self, m: &Monomial) -> u32 {
        self.ring.degree_of(m)
    }

    fn make_pair(&mut self, i: usize, j: usize) -> Pair {
        let lcm = self.polys[i].lm().lcm(self.polys[j].lm());
        let ld = self.deg(&lcm);
        let si = self.sugar[i] + ld - self.deg(self.polys[i].lm());
        let sj = self.sugar[j] + ld - self.deg(self.polys[j].lm());
        self.pair_counter += 1;
        Pair {
            i,
            j,
            lcm,
            sugar: si.max(sj),
            index: self.pair_counter,
        }
    }

    fn insert(&mut self, h: Polynomial, sugar: u32) {
        let k = self.polys.len();
        self.polys.push(h);
        self.sugar.push(sugar);
        self.active.push(true);

        if !self.opts.criteria {
            for i in 0..k {
                let p = self.make_pair(i, k);
                self.pairs.push(p);
            }
            return;
        }

        let hk = self.polys[k].lm().clone();
        let olds: Vec<usize> = (0..k).filter(|&i| self.active[i]).collect();
        let candidates: Vec<Pair> = olds.into_iter().map(|i| self.make_pair(i, k)).collect();

        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        for (idx, p) in candidates.iter().enumerate() {
            let coprime = self.polys[p.i].lm().is_coprime(&hk);
            let dominated = candidates[idx + 1..].iter().any(|q| q.lcm.divides(&p.lcm))
                || kept.iter().any(|q| q.lcm.divides(&p.lcm));
            if coprime || !dominated {
                kept.push(p.clone());
            }
        }
        // coprime criterion
        kept.retain(|p| !self.polys[p.i].lm().is_coprime(&hk));

        // chain criterion on old pairs
        let polys = &self.polys;
        self.pairs.retain(|p| {
            !(hk.divides(&p.lcm) && polys[p.i].lm().lcm(&hk) != p.lcm && polys[p.j].lm().lcm(&hk) != p.lcm)
        });
        self.pairs.extend(kept);

        for i in 0..k {
            if self.active[i] && hk.divides(self.polys[i].lm()) {
                self.active[i] = false;
            }
        }
    }

    fn pop_pair(&mut self) -> Option<Pair> {
        if let Some(bound) = self.opts.degree_bound {
            self.pairs.retain(|p| p.sugar <= bound);
        }
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by_key(|(_, p)| p.key())
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_polynomial(&self, pair: &Pair) -> Polynomial {
        let f = &self.polys[pair.i];
        let g = &self.polys[pair.j];
        let field = *self.ring.field();
        let qf = f.lm().quotient_of(&pair.lcm).expect("lcm");
        let qg = g.lm().quotient_of(&pair.lcm).expect("lcm");
        // both monic: drop the leading terms and combine tails
        let tf = &f.terms()[1..];
        let tg = &g.terms()[1..];
        let a: Vec<Term> = tf
            .iter()
            .map(|t| Term {
                coef: t.coef,
                mono: t.mono.mul(&qf),
            })
            .collect();
        let terms = merge_add(&self.ring, &a, tg, field.neg(1), &qg);
        Polynomial::from_sorted(&self.ring, terms)
    }
}

/// Membership test through the reduced Groebner basis of `gens`.
pub fn ideal_membership(f: &Polynomial, gens: &[Polynomial]) -> Result<bool> {
    if gens.iter().all(Polynomial::is_zero) {
        return Ok(f.is_zero());
    }
    Ok(buchberger(gens)?.contains(f))
}

/// Minimal homogeneous generators of the ideal spanned by `gens`.
///
/// Generators are visited by ascending degree; a generator is dropped when it
/// lies in the ideal of the ones already kept. Within one degree this is a
/// linear-algebra check against the normal forms modulo the lower-degree part.
pub fn minimal_generators(gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let mut by_degree: Vec<(u32, Polynomial)> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let d = g
            .homogeneous_degree()
            .ok_or_else(|| Error::NotHomogeneous(g.to_string()))?;
        by_degree.push((d, g.clone()));
    }
    by_degree.sort_by_key(|(d, _)| *d);
    let Some(ring) = by_degree.first().map(|(_, g)| g.ring().clone()) else {
        return Ok(Vec::new());
    };

    let mut kept: Vec<Polynomial> = Vec::new();
    let mut idx = 0;
    while idx < by_degree.len() {
        let d = by_degree[idx].0;
        let end = idx + by_degree[idx..].iter().take_while(|(e, _)| *e == d).count();
        let lower = if kept.is_empty() {
            None
        } else {
            Some(buchberger_with(
                &kept,
                BuchbergerOptions {
                    criteria: true,
                    degree_bound: Some(d),
                },
            )?)
        };
        let mut echelon: Vec<Polynomial> = Vec::new();
        for (_, g) in &by_degree[idx..end] {
            let r = match &lower {
                Some(gb) => gb.normal_form(g),
                None => g.clone(),
            };
            let r = reduce_echelon(&ring, r, &echelon);
            if !r.is_zero() {
                echelon.push(r.monic());
                kept.push(g.clone());
            }
        }
        if kept.iter().any(Polynomial::is_unit) {
            return Ok(vec![Polynomial::one(&ring)]);
        }
        idx = end;
    }
    Ok(kept)
}

/// Reduces `r` against rows with pairwise distinct monic leading monomials.
fn reduce_echelon(ring: &PolyRing, mut r: Polynomial, rows: &[Polynomial]) -> Polynomial {
    let field = *ring.field();
    'outer: while !r.is_zero() {
        for row in rows {
            if row.lm() == r.lm() {
                let c: Fp = r.lc();
                r = r.combine(row, field.neg(c), &Monomial::one(ring.nvars()));
                continue 'outer;
            }
        }
        break;
    }
    r
}

/// True iff every S-polynomial of `basis` reduces to zero: the Buchberger test.
pub fn is_groebner_basis(basis: &[Polynomial]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (f, g) = (&basis[i], &basis[j]);
            let lcm = f.lm().lcm(g.lm());
            let ring = f.ring();
            let field = *ring.field();
            let sf = f.mul_term(field.inv(f.lc()).unwrap(), &f.lm().quotient_of(&lcm).unwrap());
            let sg = g.mul_term(field.inv(g.lc()).unwrap(), &g.lm().quotient_of(&lcm).unwrap());
            let s = sf.sub(&sg).unwrap();
            if !normal_form(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

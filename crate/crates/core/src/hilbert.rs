//! Hilbert series of `R/I` from the leading-term ideal.
//!
//! The numerator of the series of `R/M` for a monomial ideal `M` is computed by
//! the pivot recursion `N(M) = N(M + (x)) + t^deg(x) N(M : x)`, where `x` is
//! the variable occurring in the most minimal generators. Linear generators
//! and pairwise coprime generator sets are closed-form base cases.

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use serde::Serialize;
use std::collections::HashMap;

/// `numerator / (1 - t)^nvars` for a standard-graded ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    numerator: Vec<i64>,
    nvars: usize,
    reduced: Vec<i64>,
    dim: i64,
}

impl HilbertSeries {
    pub fn from_numerator(numerator: Vec<i64>, nvars: usize) -> Self {
        let numerator = trim(numerator);
        if numerator.is_empty() {
            return HilbertSeries {
                numerator,
                nvars,
                reduced: Vec::new(),
                dim: -1,
            };
        }
        let mut q = numerator.clone();
        let mut k = 0;
        while k < nvars && q.iter().sum::<i64>() == 0 {
            q = divide_by_one_minus_t(&q);
            k += 1;
        }
        HilbertSeries {
            numerator,
            nvars,
            reduced: q,
            dim: (nvars - k) as i64,
        }
    }

    /// Coefficients of the numerator, constant term first.
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn denominator_power(&self) -> usize {
        self.nvars
    }

    /// `Q(t)` with `series = Q(t) / (1 - t)^dimension` and `Q(1) != 0`.
    pub fn reduced_numerator(&self) -> &[i64] {
        &self.reduced
    }

    /// Krull dimension of `R/I`; `-1` for the unit ideal.
    pub fn dimension(&self) -> i64 {
        self.dim
    }

    pub fn codimension(&self) -> i64 {
        if self.dim < 0 {
            // convention: height of the unit ideal
            self.nvars as i64 + 1
        } else {
            self.nvars as i64 - self.dim
        }
    }

    /// Multiplicity `Q(1)`; `0` for the unit ideal.
    pub fn degree(&self) -> i64 {
        self.reduced.iter().sum()
    }

    /// `dim_k (R/I)_j`.
    pub fn hilbert_function(&self, j: i64) -> i64 {
        if j < 0 {
            return 0;
        }
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .map(|(k, &c)| c * monomials_of_degree(n, j - k as i64))
            .sum()
    }
}

/// Number of monomials of degree `d` in `n` variables.
pub fn monomials_of_degree(n: i64, d: i64) -> i64 {
    if d < 0 {
        return 0;
    }
    if n == 0 {
        return (d == 0) as i64;
    }
    binomial(d + n - 1, n - 1)
}

fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    i64::try_from(acc).expect("binomial overflows i64")
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn divide_by_one_minus_t(n: &[i64]) -> Vec<i64> {
    let mut q = Vec::with_capacity(n.len());
    let mut acc = 0i64;
    for &c in &n[..n.len().saturating_sub(1)] {
        acc = acc.checked_add(c).expect("Hilbert numerator overflow");
        q.push(acc);
    }
    trim(q)
}

fn add_into(acc: &mut Vec<i64>, other: &[i64], shift: usize) {
    if acc.len() < other.len() + shift {
        acc.resize(other.len() + shift, 0);
    }
    for (k, &c) in other.iter().enumerate() {
        acc[k + shift] = acc[k + shift].checked_add(c).expect("Hilbert numerator overflow");
    }
}

/// Multiplies by `(1 - t^w)`.
fn times_one_minus(p: &[i64], w: usize) -> Vec<i64> {
    let mut out = p.to_vec();
    out.resize(p.len() + w, 0);
    for (k, &c) in p.iter().enumerate() {
        out[k + w] = out[k + w].checked_sub(c).expect("Hilbert numerator overflow");
    }
    trim(out)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

struct Recursion<'a> {
    weights: &'a [u32],
    memo: HashMap<Vec<Monomial>, Vec<i64>>,
}

impl Recursion<'_> {
    fn wdeg(&self, m: &Monomial) -> usize {
        m.weighted_degree(self.weights) as usize
    }

    /// Numerator of the series of `R/M`, with `gens` already minimal and sorted.
    fn numerator(&mut self, gens: Vec<Monomial>) -> Vec<i64> {
        if gens.is_empty() {
            return vec![1];
        }
        if gens.iter().any(Monomial::is_one) {
            return Vec::new();
        }
        if let Some(hit) = self.memo.get(&gens) {
            return hit.clone();
        }
        let result = self.compute(&gens);
        self.memo.insert(gens, result.clone());
        result
    }

    fn compute(&mut self, gens: &[Monomial]) -> Vec<i64> {
        let n = gens[0].nvars();
        // split off linear generators
        let linear: Vec<usize> = gens
            .iter()
            .filter(|g| g.degree() == 1)
            .map(|g| g.exponents().iter().position(|&e| e == 1).unwrap())
            .collect();
        if !linear.is_empty() && linear.len() < gens.len() {
            let rest: Vec<Monomial> = gens.iter().filter(|g| g.degree() > 1).cloned().collect();
            let mut acc = self.numerator(rest);
            for &v in &linear {
                acc = times_one_minus(&acc, self.weights[v] as usize);
            }
            return acc;
        }
        // pairwise coprime generators
        let mut count = vec![0usize; n];
        for g in gens {
            for (c, &e) in count.iter_mut().zip(g.exponents()) {
                if e > 0 {
                    *c += 1;
                }
            }
        }
        if count.iter().all(|&c| c <= 1) {
            let mut acc = vec![1i64];
            for g in gens {
                acc = times_one_minus(&acc, self.wdeg(g));
            }
            return acc;
        }
        let pivot = (0..n)
            .max_by(|&a, &b| count[a].cmp(&count[b]).then(b.cmp(&a)))
            .expect("nonempty ring");
        let x = Monomial::var(n, pivot);

        let mut with_x: Vec<Monomial> = gens.iter().filter(|g| g.exponents()[pivot] == 0).cloned().collect();
        with_x.push(x.clone());
        let with_x = minimalize(with_x);

        let colon: Vec<Monomial> = gens
            .iter()
            .map(|g| {
                if g.exponents()[pivot] > 0 {
                    x.quotient_of(g).expect("divisible")
                } else {
                    g.clone()
                }
            })
            .collect();
        let colon = minimalize(colon);

        let mut acc = self.numerator(with_x);
        let shifted = self.numerator(colon);
        add_into(&mut acc, &shifted, self.weights[pivot] as usize);
        trim(acc)
    }
}

/// Numerator of the Hilbert series of `R/(gens)` for monomial generators,
/// using the given variable weights.
pub fn monomial_numerator(gens: &[Monomial], weights: &[u32]) -> Vec<i64> {
    let mut rec = Recursion {
        weights,
        memo: HashMap::new(),
    };
    rec.numerator(minimalize(gens.to_vec()))
}

/// Leading monomials of the reduced Groebner basis, as a monomial ideal.
pub fn leading_term_ideal(ideal: &Ideal) -> Ideal {
    let ring = ideal.ring();
    let gens: Vec<Polynomial> = ideal
        .groebner_basis()
        .elements()
        .iter()
        .map(|g| Polynomial::monomial(ring, 1, g.lm().clone()))
        .collect();
    Ideal::new(ring, gens).expect("monomials are homogeneous")
}

pub fn hilbert_series(ideal: &Ideal) -> Result<HilbertSeries> {
    let ring = ideal.ring();
    if !ring.is_standard_graded() {
        return Err(Error::ContractViolation(
            "Hilbert series needs a standard-graded ring".into(),
        ));
    }
    let lms = ideal.groebner_basis().leading_monomials();
    let num = monomial_numerator(&lms, ring.weights());
    Ok(HilbertSeries::from_numerator(num, ring.nvars()))
}

/// Krull dimension of `R/I` (`-1` for the unit ideal).
pub fn dimension(ideal: &Ideal) -> Result<i64> {
    Ok(hilbert_series(ideal)?.dimension())
}

pub fn codimension(ideal: &Ideal) -> Result<i64> {
    Ok(hilbert_series(ideal)?.codimension())
}

/// Multiplicity `e(R/I)`.
pub fn degree(ideal: &Ideal) -> Result<i64> {
    Ok(hilbert_series(ideal)?.degree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_polynomial;
    use crate::order::MonomialOrder;
    use crate::ring::{PolyRing, RingRef};

    fn ring(names: &[&str]) -> RingRef {
        PolyRing::new(32003, names, MonomialOrder::GRevLex).unwrap()
    }

    fn ideal(r: &RingRef, src: &[&str]) -> Ideal {
        Ideal::new(r, src.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
    }

    /// Counts standard monomials degree by degree, independently of the recursion.
    fn brute_hilbert_function(lms: &[Monomial], n: usize, d: u32) -> i64 {
        fn rec(n: usize, d: u32, prefix: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if prefix.len() == n - 1 {
                prefix.push(d as u16);
                out.push(Monomial::from_exponents(prefix));
                prefix.pop();
                return;
            }
            for e in 0..=d {
                prefix.push(e as u16);
                rec(n, d - e, prefix, out);
                prefix.pop();
            }
        }
        let mut all = Vec::new();
        rec(n, d, &mut Vec::new(), &mut all);
        all.iter().filter(|m| !lms.iter().any(|g| g.divides(m))).count() as i64
    }

    #[test]
    fn square_of_maximal_ideal() {
        let r = ring(&["x", "y"]);
        let hs = hilbert_series(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap();
        assert_eq!(hs.numerator(), &[1, 0, -3, 2]);
        assert_eq!(hs.reduced_numerator(), &[1, 2]);
        assert_eq!(hs.dimension(), 0);
        assert_eq!(hs.degree(), 3);
        assert_eq!(
            (0..4).map(|j| hs.hilbert_function(j)).collect::<Vec<_>>(),
            vec![1, 2, 0, 0]
        );
    }

    #[test]
    fn zero_ideal() {
        let r = ring(&["a", "b", "c", "d"]);
        let hs = hilbert_series(&Ideal::zero(&r)).unwrap();
        assert_eq!(hs.numerator(), &[1]);
        assert_eq!(hs.dimension(), 4);
        assert_eq!(hs.degree(), 1);
    }

    #[test]
    fn unit_ideal_conventions() {
        let r = ring(&["a", "b"]);
        let hs = hilbert_series(&Ideal::unit(&r)).unwrap();
        assert_eq!(hs.dimension(), -1);
        assert_eq!(hs.degree(), 0);
    }

    #[test]
    fn leading_terms() {
        let r = ring(&["x", "y"]);
        let lt = leading_term_ideal(&ideal(&r, &["x + y"]));
        assert_eq!(lt.gens(), ideal(&r, &["x"]).gens());
        let i = ideal(&r, &["x^2", "x*y", "y^2"]);
        assert!(leading_term_ideal(&i).same_ideal(&i).unwrap());
    }

    #[test]
    fn square_in_more_variables_matches_brute_force() {
        for n in 2..=4usize {
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            let r = ring(&refs);
            let i = ideal(&r, &["v0^2", "v0*v1", "v1^2"]);
            let hs = hilbert_series(&i).unwrap();
            assert_eq!(hs.codimension(), 2);
            assert_eq!(hs.degree(), 3);
            let lms = i.groebner_basis().leading_monomials();
            for d in 0..8 {
                assert_eq!(hs.hilbert_function(d), brute_hilbert_function(&lms, n, d as u32));
            }
        }
    }

    #[test]
    fn recursion_matches_brute_force_on_mixed_monomials() {
        let r = ring(&["a", "b", "c", "d"]);
        let i = ideal(&r, &["a^2*b", "a*c^2", "b^3", "b*c*d", "d^4", "a*b*c"]);
        let hs = hilbert_series(&i).unwrap();
        let lms = i.groebner_basis().leading_monomials();
        for d in 0..10 {
            assert_eq!(
                hs.hilbert_function(d),
                brute_hilbert_function(&lms, 4, d as u32),
                "degree {d}"
            );
        }
    }
}

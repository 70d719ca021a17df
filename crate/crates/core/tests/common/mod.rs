#![allow(dead_code)]

use pd3c_core::field::Fp;
use pd3c_core::resolution::Resolution;
use pd3c_core::{Ideal, Monomial, MonomialOrder, PolyRing, Polynomial, RingRef, SeededRng};
use std::collections::BTreeMap;

pub fn ring(p: u64, n: usize) -> RingRef {
    PolyRing::with_vars(p, "x", n).unwrap()
}

pub fn ring_with(p: u64, n: usize, order: MonomialOrder) -> RingRef {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    PolyRing::new(p, &refs, order).unwrap()
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn exponent_vectors(n: usize, d: u32) -> Vec<Vec<u16>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in exponent_vectors(n - 1, d - first) {
            rest.insert(0, first as u16);
            out.push(rest);
        }
    }
    out
}

pub fn monomials(n: usize, d: u32) -> Vec<Monomial> {
    exponent_vectors(n, d)
        .iter()
        .map(|e| Monomial::from_exponents(e))
        .collect()
}

/// A random form of degree `d`; each monomial appears with probability
/// about `density` percent.
pub fn random_form(ring: &RingRef, d: u32, density: u32, rng: &mut SeededRng) -> Polynomial {
    let p = ring.characteristic();
    let terms: Vec<(Fp, Monomial)> = monomials(ring.nvars(), d)
        .into_iter()
        .filter_map(|m| (rng.below(100) < density).then(|| (rng.nonzero_below(p), m)))
        .collect();
    Polynomial::from_terms(ring, terms)
}

pub fn random_linear_form(ring: &RingRef, rng: &mut SeededRng) -> Polynomial {
    random_form(ring, 1, 100, rng)
}

/// Random combination of `gens` multiplied up to degree `d`.
pub fn random_element_of_degree(gens: &[Polynomial], d: u32, rng: &mut SeededRng) -> Polynomial {
    let ring = gens[0].ring().clone();
    let p = ring.characteristic();
    let mut acc = Polynomial::zero(&ring);
    for g in gens {
        let e = g.homogeneous_degree().unwrap();
        if e > d {
            continue;
        }
        for m in monomials(ring.nvars(), d - e) {
            let c = rng.below(p);
            let term = Polynomial::monomial(&ring, c, m);
            acc = acc.add(&g.mul(&term).unwrap()).unwrap();
        }
    }
    acc
}

pub fn ideal(ring: &RingRef, gens: Vec<Polynomial>) -> Ideal {
    Ideal::new(ring, gens).unwrap()
}

/// Rank of a dense matrix over `F_p`.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = pow_mod(rows[rank][c], p - 2, p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Betti numbers read off any (possibly non-minimal) graded free resolution:
/// `β_{i,j} = rank (F_i)_j - rank_j(d_i ⊗ k) - rank_j(d_{i+1} ⊗ k)`, where
/// `d ⊗ k` keeps only the constant entries, which join equal twists.
pub fn betti_by_ranks(res: &Resolution) -> BTreeMap<(usize, i32), u64> {
    let p = res.ring().characteristic() as u64;
    let len = res.steps().len();
    // constant rank of d_k restricted to source twist j
    let const_rank = |k: usize, j: i32| -> usize {
        if k == 0 || k > len {
            return 0;
        }
        let d = &res.steps()[k - 1];
        let cols: Vec<usize> = (0..d.ncols()).filter(|&c| d.source().twists()[c] == j).collect();
        let rows: Vec<usize> = (0..d.nrows()).filter(|&r| d.target().twists()[r] == j).collect();
        let dense: Vec<Vec<u64>> = rows
            .iter()
            .map(|&r| {
                cols.iter()
                    .map(|&c| {
                        let e = d.entry(r, c);
                        if e.is_zero() {
                            0
                        } else {
                            e.lc() as u64
                        }
                    })
                    .collect()
            })
            .collect();
        rank_mod_p(dense, p)
    };
    let mut out = BTreeMap::new();
    for i in 0..=len {
        let module = res.module(i);
        let mut counts: BTreeMap<i32, u64> = BTreeMap::new();
        for &t in module.twists() {
            *counts.entry(t).or_default() += 1;
        }
        for (j, f) in counts {
            let b = f as i64 - const_rank(i, j) as i64 - const_rank(i + 1, j) as i64;
            assert!(b >= 0, "negative Betti number at ({i}, {j})");
            if b > 0 {
                out.insert((i, j), b as u64);
            }
        }
    }
    out
}

/// Plain Buchberger: every S-pair, full reduction, no criteria, then
/// minimalize and interreduce.
pub fn naive_groebner(gens: &[Polynomial]) -> Vec<Polynomial> {
    let ring = gens[0].ring().clone();
    let field = *ring.field();
    let reduce = |f: &Polynomial, basis: &[Polynomial]| -> Polynomial {
        let mut f = f.clone();
        let mut rem = Polynomial::zero(&ring);
        while !f.is_zero() {
            let lt = f.leading_term().unwrap().clone();
            match basis.iter().find(|g| g.lm().divides(&lt.mono)) {
                Some(g) => {
                    let q = g.lm().quotient_of(&lt.mono).unwrap();
                    let c = field.mul(lt.coef, field.inv(g.lc()).unwrap());
                    f = f.sub(&g.mul_term(c, &q)).unwrap();
                }
                None => {
                    let t = Polynomial::monomial(&ring, lt.coef, lt.mono.clone());
                    rem = rem.add(&t).unwrap();
                    f = f.sub(&t).unwrap();
                }
            }
        }
        rem
    };
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    let mut pairs: Vec<(usize, usize)> = (0..basis.len()).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    while let Some((i, j)) = pairs.pop() {
        let (f, g) = (&basis[i], &basis[j]);
        let l = f.lm().lcm(g.lm());
        let s = f
            .mul_term(1, &f.lm().quotient_of(&l).unwrap())
            .sub(&g.mul_term(1, &g.lm().quotient_of(&l).unwrap()))
            .unwrap();
        let r = reduce(&s, &basis);
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic());
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    // drop redundant leading terms, then interreduce
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(l, h)| l != k && h.lm().divides(g.lm()) && (h.lm() != g.lm() || l < k));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(l, _)| l != k)
                .map(|(_, h)| h.clone())
                .collect();
            let g = &minimal[k];
            let lead = Polynomial::monomial(&ring, 1, g.lm().clone());
            lead.add(&reduce(&g.sub(&lead).unwrap(), &others)).unwrap()
        })
        .collect();
    reduced.sort_by(|a, b| ring.cmp(a.lm(), b.lm()));
    reduced
}

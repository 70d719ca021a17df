mod common;

use common::*;
use pd3c_core::hilbert::{hilbert_series, monomial_numerator, monomials_of_degree, HilbertSeries};
use pd3c_core::{Ideal, Monomial, MonomialOrder, Polynomial, SeededRng};
use proptest::prelude::*;
use std::collections::HashMap;

/// Multiply out `prod (1 - t^d)`.
fn ci_numerator(degrees: &[u32]) -> Vec<i64> {
    let mut acc = vec![1i64];
    for &d in degrees {
        let mut next = vec![0i64; acc.len() + d as usize];
        for (k, &c) in acc.iter().enumerate() {
            next[k] += c;
            next[k + d as usize] -= c;
        }
        acc = next;
    }
    acc
}

/// `dim_k (R/I)_j` by linear algebra on the degree-`j` part of `I`.
fn hf_by_rank(i: &Ideal, j: u32) -> i64 {
    let ring = i.ring();
    let n = ring.nvars();
    let basis = monomials(n, j);
    let index: HashMap<Monomial, usize> = basis.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
    let mut rows = Vec::new();
    for g in i.gens() {
        let e = g.homogeneous_degree().unwrap();
        if e > j {
            continue;
        }
        for m in monomials(n, j - e) {
            let h = g.mul(&Polynomial::monomial(ring, 1, m)).unwrap();
            let mut row = vec![0u64; basis.len()];
            for t in h.terms() {
                row[index[&t.mono]] = t.coef as u64;
            }
            rows.push(row);
        }
    }
    let rank = rank_mod_p(rows, ring.characteristic() as u64);
    basis.len() as i64 - rank as i64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn generic_complete_intersections(seed in any::<u64>(), k in 1usize..4) {
        let mut rng = SeededRng::new(seed);
        let r = ring(32003, 4);
        let degrees: Vec<u32> = (0..k).map(|_| 1 + rng.below(3)).collect();
        let gens = degrees.iter().map(|&d| random_form(&r, d, 100, &mut rng)).collect();
        let hs = hilbert_series(&ideal(&r, gens)).unwrap();
        prop_assert_eq!(hs.numerator().to_vec(), ci_numerator(&degrees));
        prop_assert_eq!(hs.dimension(), 4 - k as i64);
        prop_assert_eq!(hs.degree(), degrees.iter().map(|&d| d as i64).product::<i64>());
    }

    #[test]
    fn series_does_not_depend_on_the_order(seed in any::<u64>(), oi in 0usize..3) {
        let mut rng = SeededRng::new(seed);
        let r = ring(101, 4);
        let gens: Vec<Polynomial> = (0..3).map(|_| random_form(&r, 1 + rng.below(3), 40, &mut rng)).collect();
        let order = [
            MonomialOrder::Lex,
            MonomialOrder::GrLex,
            MonomialOrder::block(2, MonomialOrder::GRevLex, MonomialOrder::GRevLex),
        ][oi].clone();
        let other = r.with_order(order).unwrap();
        let moved: Vec<Polynomial> = gens.iter().map(|g| g.to_ring(&other).unwrap()).collect();
        let a = hilbert_series(&ideal(&r, gens)).unwrap();
        let b = hilbert_series(&ideal(&other, moved)).unwrap();
        prop_assert_eq!(a.numerator(), b.numerator());
    }

    #[test]
    fn function_matches_linear_algebra(seed in any::<u64>()) {
        let mut rng = SeededRng::new(seed);
        let r = ring(101, 3);
        let gens: Vec<Polynomial> = (0..3)
            .map(|_| random_form(&r, 1 + rng.below(3), 50, &mut rng))
            .filter(|g| !g.is_zero())
            .collect();
        prop_assume!(!gens.is_empty());
        let i = ideal(&r, gens);
        let hs = hilbert_series(&i).unwrap();
        for j in 0..=5 {
            prop_assert_eq!(hs.hilbert_function(j as i64), hf_by_rank(&i, j), "degree {}", j);
        }
    }
}

#[test]
fn standard_monomials_are_counted() {
    let mut rng = SeededRng::new(5);
    for _ in 0..40 {
        let gens: Vec<Monomial> = (0..1 + rng.below(4))
            .map(|_| Monomial::from_exponents(&(0..3).map(|_| rng.below(3) as u16).collect::<Vec<_>>()))
            .filter(|m| !m.is_one())
            .collect();
        let hs = HilbertSeries::from_numerator(monomial_numerator(&gens, &[1, 1, 1]), 3);
        for j in 0..6 {
            let standard = monomials(3, j)
                .iter()
                .filter(|m| !gens.iter().any(|g| g.divides(m)))
                .count();
            assert_eq!(hs.hilbert_function(j as i64), standard as i64, "{gens:?} in degree {j}");
        }
    }
}

#[test]
fn weighted_numerators() {
    // k[x,y] with deg y = 2: the ideal (y) leaves k[x]
    let y = Monomial::from_exponents(&[0, 1]);
    assert_eq!(monomial_numerator(&[y], &[1, 2]), vec![1, 0, -1]);
    let x2 = Monomial::from_exponents(&[2, 0]);
    assert_eq!(monomial_numerator(&[x2], &[1, 2]), vec![1, 0, -1]);
    assert_eq!(monomial_numerator(&[], &[1, 2]), vec![1]);
}

#[test]
fn monomial_counts() {
    for n in 1..6 {
        for d in 0..8 {
            assert_eq!(monomials_of_degree(n, d), monomials(n as usize, d as u32).len() as i64);
        }
    }
    assert_eq!(monomials_of_degree(3, -1), 0);
}

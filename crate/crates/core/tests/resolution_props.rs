mod common;

use common::*;
use pd3c_core::hilbert::{codimension, hilbert_series};
use pd3c_core::resolution::{betti_table, free_resolution, minimal_resolution, minimize, projective_dimension};
use pd3c_core::{Ideal, Monomial, Polynomial, RingRef, SeededRng};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn random_ideal(r: &RingRef, seed: u64) -> Option<Ideal> {
    let mut rng = SeededRng::new(seed);
    let gens: Vec<Polynomial> = (0..2 + rng.below(3))
        .map(|_| {
            let d = 1 + rng.below(3);
            random_form(r, d, 30, &mut rng)
        })
        .filter(|g| !g.is_zero())
        .collect();
    let i = Ideal::new(r, gens).ok()?;
    (!i.is_zero() && !i.is_unit()).then_some(i)
}

/// `Σ_i (-1)^i Σ_j β_{i,j} t^j`, constant term first.
fn alternating_sum(betti: &BTreeMap<(usize, i32), u64>) -> Vec<i64> {
    let top = betti.keys().map(|&(_, j)| j).max().unwrap_or(0) as usize;
    let mut out = vec![0i64; top + 1];
    for (&(i, j), &b) in betti {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        out[j as usize] += sign * b as i64;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Cohen-Macaulay test: cutting by `dim` generic linear forms must not
/// change the h-polynomial.
fn cohen_macaulay_by_hyperplanes(i: &Ideal, rng: &mut SeededRng) -> bool {
    let r = i.ring();
    let hs = hilbert_series(i).unwrap();
    let mut gens = i.gens().to_vec();
    gens.extend((0..hs.dimension()).map(|_| random_linear_form(r, rng)));
    let cut = hilbert_series(&ideal(r, gens)).unwrap();
    cut.dimension() == 0 && cut.reduced_numerator() == hs.reduced_numerator()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn minimized_betti_numbers_match_ranks(seed in any::<u64>(), n in 3usize..5) {
        let r = ring(32003, n);
        let i = random_ideal(&r, seed);
        prop_assume!(i.is_some());
        let i = i.unwrap();
        let frame = free_resolution(&i, n).unwrap();
        prop_assert!(frame.composites_vanish().unwrap());
        let min = minimize(&frame);
        prop_assert!(min.is_minimal());
        prop_assert!(min.composites_vanish().unwrap());
        let table = betti_table(&min).unwrap();
        prop_assert_eq!(table.entries(), &betti_by_ranks(&frame));
        prop_assert_eq!(alternating_sum(table.entries()), hilbert_series(&i).unwrap().numerator().to_vec());
    }

    #[test]
    fn projective_dimension_bounds(seed in any::<u64>()) {
        let r = ring(32003, 4);
        let i = random_ideal(&r, seed);
        prop_assume!(i.is_some());
        let i = i.unwrap();
        let pd = projective_dimension(&i).unwrap();
        let codim = codimension(&i).unwrap() as usize;
        prop_assert!(codim <= pd && pd <= 4);
        let mut rng = SeededRng::new(seed);
        prop_assert_eq!(pd == codim, cohen_macaulay_by_hyperplanes(&i, &mut rng));
    }
}

#[test]
fn koszul_complexes_of_powers() {
    let r = ring(101, 4);
    for a in [[1u16, 1, 1, 1], [1, 2, 3, 1], [2, 2, 1, 3]] {
        let gens = (0..4)
            .map(|k| {
                let mut e = [0u16; 4];
                e[k] = a[k];
                Polynomial::monomial(&r, 1, Monomial::from_exponents(&e))
            })
            .collect();
        let res = minimal_resolution(&ideal(&r, gens)).unwrap();
        let mut want: BTreeMap<(usize, i32), u64> = BTreeMap::new();
        for mask in 0u32..16 {
            let j: i32 = (0..4).filter(|k| mask >> k & 1 == 1).map(|k| a[k] as i32).sum();
            *want.entry((mask.count_ones() as usize, j)).or_default() += 1;
        }
        assert_eq!(betti_table(&res).unwrap().entries(), &want, "{a:?}");
        assert_eq!(res.length(), 4);
    }
}

#[test]
fn truncated_frames_stay_complexes() {
    let r = ring(32003, 4);
    for seed in 0..20 {
        let Some(i) = random_ideal(&r, seed) else { continue };
        let full = free_resolution(&i, 4).unwrap();
        for len in 1..4 {
            let cut = free_resolution(&i, len).unwrap();
            assert!(cut.steps().len() <= len);
            assert!(cut.composites_vanish().unwrap());
            assert_eq!(cut.ranks()[..], full.ranks()[..cut.ranks().len()], "seed {seed}");
        }
    }
}

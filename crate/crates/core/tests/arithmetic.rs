mod common;

use common::*;
use pd3c_core::format::{parse_ideal_file, parse_polynomial, write_ideal_file};
use pd3c_core::{Monomial, MonomialOrder, Polynomial, SeededRng};
use proptest::prelude::*;
use std::cmp::Ordering;

const PRIMES: [u64; 3] = [3, 101, 32003];

fn any_poly(p: u64, n: usize, seed: u64) -> Polynomial {
    let r = ring(p, n);
    let mut rng = SeededRng::new(seed);
    let mut f = Polynomial::zero(&r);
    for d in 0..=3 {
        f = f.add(&random_form(&r, d, 30, &mut rng)).unwrap();
    }
    f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(pi in 0usize..3, seed in any::<u64>()) {
        let p = PRIMES[pi];
        let a = any_poly(p, 3, seed);
        let b = any_poly(p, 3, seed.wrapping_add(1));
        let c = any_poly(p, 3, seed.wrapping_add(2));
        // each call builds its own ring handle
        let b = b.to_ring(a.ring()).unwrap();
        let c = c.to_ring(a.ring()).unwrap();
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        prop_assert_eq!(
            a.mul(&b.add(&c).unwrap()).unwrap(),
            a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
        );
        prop_assert!(a.sub(&a).unwrap().is_zero());
        prop_assert_eq!(a.mul(&Polynomial::one(a.ring())).unwrap(), a.clone());
        prop_assert_eq!(a.add(&a.neg()).unwrap(), Polynomial::zero(a.ring()));
    }

    #[test]
    fn evaluation_is_a_homomorphism(pi in 0usize..3, seed in any::<u64>()) {
        let p = PRIMES[pi];
        let a = any_poly(p, 3, seed);
        let b = any_poly(p, 3, seed ^ 0xabcdef).to_ring(a.ring()).unwrap();
        let mut rng = SeededRng::new(seed);
        let pt: Vec<u32> = (0..3).map(|_| rng.below(p as u32)).collect();
        let field = *a.ring().field();
        prop_assert_eq!(a.mul(&b).unwrap().eval(&pt), field.mul(a.eval(&pt), b.eval(&pt)));
        prop_assert_eq!(a.add(&b).unwrap().eval(&pt), field.add(a.eval(&pt), b.eval(&pt)));
    }

    #[test]
    fn orders_are_multiplicative(
        a in prop::collection::vec(0u16..5, 4),
        b in prop::collection::vec(0u16..5, 4),
        c in prop::collection::vec(0u16..5, 4),
        oi in 0usize..4,
    ) {
        let order = [
            MonomialOrder::GRevLex,
            MonomialOrder::Lex,
            MonomialOrder::GrLex,
            MonomialOrder::block(2, MonomialOrder::Lex, MonomialOrder::GRevLex),
        ][oi].clone();
        let (a, b, c) = (Monomial::from_exponents(&a), Monomial::from_exponents(&b), Monomial::from_exponents(&c));
        let ab = order.cmp(&a, &b);
        prop_assert_eq!(order.cmp(&a.mul(&c), &b.mul(&c)), ab);
        prop_assert_eq!(order.cmp(&b, &a), ab.reverse());
        prop_assert_ne!(order.cmp(&a.mul(&c), &a), Ordering::Less);
    }

    #[test]
    fn printed_polynomials_parse_back(pi in 0usize..3, seed in any::<u64>()) {
        let a = any_poly(PRIMES[pi], 4, seed);
        let back = parse_polynomial(a.ring(), &a.to_string()).unwrap();
        prop_assert_eq!(back, a.clone());
        let file = write_ideal_file(a.ring(), std::slice::from_ref(&a));
        let parsed = parse_ideal_file(&file).unwrap();
        prop_assert_eq!(parsed.polys[0].to_string(), a.to_string());
    }
}

/// Independent sort keys: a larger key means a larger monomial.
fn key(order: &str, e: &[u16]) -> Vec<i64> {
    let deg: i64 = e.iter().map(|&x| x as i64).sum();
    match order {
        "lex" => e.iter().map(|&x| x as i64).collect(),
        "grlex" => std::iter::once(deg).chain(e.iter().map(|&x| x as i64)).collect(),
        "grevlex" => std::iter::once(deg)
            .chain(e.iter().rev().map(|&x| -(x as i64)))
            .collect(),
        _ => unreachable!(),
    }
}

#[test]
fn exhaustive_order_table() {
    let mut all = Vec::new();
    for d in 0..=4 {
        all.extend(exponent_vectors(3, d));
    }
    for (name, order) in [
        ("lex", MonomialOrder::Lex),
        ("grlex", MonomialOrder::GrLex),
        ("grevlex", MonomialOrder::GRevLex),
    ] {
        for a in &all {
            for b in &all {
                let want = key(name, a).cmp(&key(name, b));
                let got = order.cmp(&Monomial::from_exponents(a), &Monomial::from_exponents(b));
                assert_eq!(got, want, "{name}: {a:?} vs {b:?}");
            }
        }
    }
}

#[test]
fn field_tables_in_small_characteristic() {
    for p in PRIMES {
        let f = pd3c_core::PrimeField::new(p).unwrap();
        let q = p as u32;
        for a in (0..q).step_by(1 + q as usize / 50) {
            for b in (0..q).step_by(1 + q as usize / 50) {
                assert_eq!(f.mul(a, b) as u64, a as u64 * b as u64 % p);
                assert_eq!(f.add(a, b) as u64, (a as u64 + b as u64) % p);
                assert_eq!(f.sub(a, b) as u64, (a as u64 + p - b as u64) % p);
            }
            if a != 0 {
                assert_eq!(f.inv(a).unwrap() as u64, pow_mod(a as u64, p - 2, p));
            }
        }
    }
}

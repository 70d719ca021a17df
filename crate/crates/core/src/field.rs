//! Arithmetic in the prime field `F_p`.
//!
//! Elements are plain `u32` values holding the canonical representative in
//! `[0, p)`. The field itself only carries the modulus.

use crate::error::{Error, Result};

/// An element of `F_p`, always reduced into `[0, p)`.
pub type Fp = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    /// Builds `F_p` for an odd prime `2 < p < 2^31`.
    pub fn new(p: u64) -> Result<Self> {
        if p <= 2 || p >= 1 << 31 || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Reduces a signed integer into the field.
    pub fn from_i64(&self, v: i64) -> Fp {
        v.rem_euclid(self.p as i64) as Fp
    }

    #[inline]
    pub fn add(&self, a: Fp, b: Fp) -> Fp {
        let s = a as u64 + b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as Fp
    }

    #[inline]
    pub fn sub(&self, a: Fp, b: Fp) -> Fp {
        if a >= b {
            a - b
        } else {
            a + (self.p - b)
        }
    }

    #[inline]
    pub fn neg(&self, a: Fp) -> Fp {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Fp, b: Fp) -> Fp {
        ((a as u64 * b as u64) % self.p as u64) as Fp
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(&self, a: Fp) -> Result<Fp> {
        if a.is_multiple_of(self.p) {
            return Err(Error::DivisionByZero(self.p));
        }
        Ok(self.pow(a, (self.p - 2) as u64))
    }

    pub fn pow(&self, mut base: Fp, mut exp: u64) -> Fp {
        let mut acc: Fp = 1 % self.p;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Symmetric representative in `(-p/2, p/2]`, used for printing.
    pub fn signed(&self, a: Fp) -> i64 {
        if a as u64 > (self.p as u64) / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

/// Deterministic Miller-Rabin; the witness set is exact for all `n < 3.3 * 10^24`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut r = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                r = mulmod(r, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        r
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ext_euclid_inverse(a: i64, p: i64) -> i64 {
        let (mut r0, mut r1) = (p, a);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        assert_eq!(r0, 1);
        t0.rem_euclid(p)
    }

    #[test]
    fn small_field_examples() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.add(2, 2), 1);
        assert_eq!(f.inv(2).unwrap(), 2);
        assert_eq!(f.neg(0), 0);
        assert_eq!(f.sub(0, 1), 2);
        assert_eq!(f.inv(0), Err(Error::DivisionByZero(3)));
    }

    #[test]
    fn inverse_matches_extended_euclid() {
        let f = PrimeField::new(32003).unwrap();
        let expected = ext_euclid_inverse(12345, 32003) as u32;
        let v = f.inv(12345).unwrap();
        assert_eq!(v, expected);
        assert_eq!(f.mul(12345, v), 1);
    }

    #[test]
    fn rejects_non_primes() {
        for n in [0u64, 1, 2, 4, 9, 32001, 1 << 31, 2147483647 * 2] {
            assert!(PrimeField::new(n).is_err(), "{n}");
        }
        assert!(PrimeField::new(2147483647).is_ok());
        assert!(PrimeField::new(101).is_ok());
    }

    #[test]
    fn primality_matches_trial_division() {
        let trial = |n: u64| n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d));
        for n in 0..5000u64 {
            assert_eq!(is_prime(n), trial(n), "{n}");
        }
    }

    #[test]
    fn signed_representative() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.signed(6), -1);
        assert_eq!(f.signed(3), 3);
        assert_eq!(f.signed(4), -3);
    }
}

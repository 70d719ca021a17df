use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Deterministic random source for every generic choice in the crate.
///
/// The stream is ChaCha8 keyed through `seed_from_u64`, so a seed produces the
/// same draws on every platform. Field elements are drawn by rejection
/// sampling on 64-bit outputs, which keeps them exactly uniform.
#[derive(Debug, Clone)]
pub struct SeededRng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        SeededRng {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform integer in `[0, bound)`.
    pub fn below(&mut self, bound: u32) -> u32 {
        assert!(bound > 0);
        let bound = bound as u64;
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.inner.next_u64();
            if v < zone {
                return (v % bound) as u32;
            }
        }
    }

    /// Uniform nonzero element of `F_p`.
    pub fn nonzero_below(&mut self, p: u32) -> u32 {
        1 + self.below(p - 1)
    }
}

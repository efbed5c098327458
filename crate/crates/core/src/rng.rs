//! Pinned pseudo-random generator.
//!
//! All randomized steps draw from xoshiro256++ seeded through splitmix64
//! (`Xoshiro256PlusPlus::seed_from_u64`). Bounded integers use Lemire's
//! widening-multiply method with rejection, computed on `u64` regardless of
//! the target's pointer width, so a seed yields the same stream everywhere.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

#[derive(Debug, Clone)]
pub struct PinnedRng(Xoshiro256PlusPlus);

impl PinnedRng {
    pub fn new(seed: u64) -> Self {
        Self(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform integer in `0..bound`. `bound` must be non-zero.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "empty range");
        let threshold = bound.wrapping_neg() % bound;
        loop {
            let m = u128::from(self.next_u64()) * u128::from(bound);
            if (m as u64) >= threshold {
                return (m >> 64) as u64;
            }
        }
    }

    /// Uniform float in `[0, 1)` with 53 bits of precision.
    pub fn unit_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// The first `amount` entries of a Fisher-Yates shuffle of `0..len`.
    pub fn sample_indices(&mut self, len: usize, amount: usize) -> Vec<usize> {
        assert!(amount <= len);
        let mut idx: Vec<usize> = (0..len).collect();
        for i in 0..amount {
            let j = i + self.below((len - i) as u64) as usize;
            idx.swap(i, j);
        }
        idx.truncate(amount);
        idx
    }
}

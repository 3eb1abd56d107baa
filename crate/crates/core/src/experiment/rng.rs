//! Seeded 64-bit generator used by every randomized audit.
//!
//! SplitMix64: the state advances by `0x9E3779B97F4A7C15` (wrapping), and
//! the output is the state passed through
//!
//! ```text
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z =  z ^ (z >> 31)
//! ```
//!
//! with wrapping multiplication. Bounded draws use rejection: with
//! `zone = floor(2^64 - 1 / n) * n`, outputs `x >= zone` are discarded and
//! `x mod n` is returned otherwise. Any implementation following these
//! rules reproduces the same streams.

use rand_core::{Rng, SeedableRng};

/// SplitMix64 stream with documented bounded draws.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    inner: rand_xoshiro::SplitMix64,
}

impl SplitMix64 {
    /// The seed is the initial state.
    pub fn new(seed: u64) -> Self {
        SplitMix64 {
            inner: rand_xoshiro::SplitMix64::seed_from_u64(seed),
        }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    /// Uniform in `0..n`, `n >= 1`.
    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0, "below(0)");
        let zone = (u64::MAX / n) * n;
        loop {
            let x = self.next_u64();
            if x < zone {
                return x % n;
            }
        }
    }

    /// Uniform in `lo..=hi`.
    pub fn range(&mut self, lo: u64, hi: u64) -> u64 {
        assert!(lo <= hi);
        lo + self.below(hi - lo + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_stream() {
        // published reference values for seed 1234567
        let mut g = SplitMix64::new(1234567);
        let got: Vec<u64> = (0..5).map(|_| g.next_u64()).collect();
        assert_eq!(
            got,
            vec![
                6457827717110365317,
                3203168211198807973,
                9817491932198370423,
                4593380528125082431,
                16408922859458223821
            ]
        );
    }

    #[test]
    fn bounded_draws_stay_in_range() {
        let mut g = SplitMix64::new(7);
        for n in [1u64, 2, 3, 10, 1 << 40, u64::MAX] {
            for _ in 0..100 {
                assert!(g.below(n) < n);
            }
        }
        for _ in 0..100 {
            let x = g.range(5, 9);
            assert!((5..=9).contains(&x));
        }
    }
}

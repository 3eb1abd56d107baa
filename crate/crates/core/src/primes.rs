//! The prime window: primes `p` with `N/2 <= p <= N` that do not divide a
//! given modulus `q`.

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrimeWindow {
    /// Window parameter `N`.
    pub n: u64,
    /// Primes dividing this modulus are left out.
    pub excluded_modulus: u64,
    /// Strictly increasing.
    pub primes: Vec<u64>,
}

/// Sieve of Eratosthenes over `[0, limit]`.
pub fn sieve_upto(limit: u64) -> Vec<bool> {
    let limit = limit as usize;
    let mut is_prime = vec![true; limit + 1];
    is_prime[0] = false;
    if limit >= 1 {
        is_prime[1] = false;
    }
    let mut i = 2;
    while i * i <= limit {
        if is_prime[i] {
            let mut j = i * i;
            while j <= limit {
                is_prime[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    is_prime
}

/// Lower end of the closed window `[N/2, N]` over the integers: the least
/// `p` with `2p >= N`.
pub fn window_start(n: u64) -> u64 {
    n.div_ceil(2)
}

impl PrimeWindow {
    /// Builds the window for `N` (floored to an integer by the caller) and
    /// drops primes dividing `q`. Fails for `N < 2`.
    pub fn sieve(n: u64, q: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::EmptyWindow(n));
        }
        if q == 0 {
            return Err(Error::InvalidInput("excluded modulus must be >= 1".into()));
        }
        let is_prime = sieve_upto(n);
        let primes = (window_start(n)..=n)
            .filter(|&p| is_prime[p as usize] && !q.is_multiple_of(p))
            .collect();
        Ok(PrimeWindow {
            n,
            excluded_modulus: q,
            primes,
        })
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.binary_search(&p).is_ok()
    }

    /// `N / (3 ln N)`, the lower bound the window size should clear.
    pub fn size_threshold(&self) -> f64 {
        let n = self.n as f64;
        n / (3.0 * n.ln())
    }

    /// True iff `|P| >= N / (3 ln N)`.
    pub fn size_check(&self) -> bool {
        self.len() as f64 >= self.size_threshold()
    }
}

pub fn sieve_window(n: u64, q: u64) -> Result<PrimeWindow> {
    PrimeWindow::sieve(n, q)
}

pub fn window_size_check(window: &PrimeWindow) -> bool {
    window.size_check()
}

#[cfg(test)]
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = 17u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// True when every pair of entries is coprime.
pub fn pairwise_coprime(xs: &[u64]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(i, x)| xs[i + 1..].iter().all(|y| x.gcd(y) == 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trial_division_window(n: u64, q: u64) -> Vec<u64> {
        (1..=n)
            .filter(|&p| {
                2 * p >= n && (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0) && p > 1
            })
            .filter(|&p| !q.is_multiple_of(p))
            .collect()
    }

    #[test]
    fn small_windows() {
        assert_eq!(sieve_window(10, 1).unwrap().primes, vec![5, 7]);
        assert_eq!(sieve_window(10, 7).unwrap().primes, vec![5]);
        assert_eq!(sieve_window(20, 1).unwrap().primes, vec![11, 13, 17, 19]);
        assert_eq!(sieve_window(2, 1).unwrap().primes, vec![2]);
        // odd N: ceil(N/2) is the first admissible value
        assert_eq!(sieve_window(11, 1).unwrap().primes, vec![7, 11]);
        assert_eq!(sieve_window(1, 1), Err(Error::EmptyWindow(1)));
        assert_eq!(sieve_window(0, 1), Err(Error::EmptyWindow(0)));
    }

    #[test]
    fn size_checks() {
        let w = sieve_window(100, 1).unwrap();
        assert_eq!(w.primes, vec![53, 59, 61, 67, 71, 73, 79, 83, 89, 97]);
        assert!((w.size_threshold() - 7.2382).abs() < 1e-3);
        assert!(window_size_check(&w));
        let w = sieve_window(10, 35).unwrap();
        assert!(w.is_empty());
        assert!(!window_size_check(&w));
        let w = sieve_window(2, 1).unwrap();
        assert!((w.size_threshold() - 0.9618).abs() < 1e-3);
        assert!(window_size_check(&w));
    }

    #[test]
    fn sieve_matches_trial_division() {
        for n in 2..=600u64 {
            for q in [1u64, 2, 30, 7 * 11 * 13, 9699690, 1_000_003] {
                assert_eq!(
                    sieve_window(n, q).unwrap().primes,
                    trial_division_window(n, q),
                    "N={n} q={q}"
                );
            }
        }
        for n in [10_000u64, 65_537, 1_000_000] {
            let w = sieve_window(n, 1).unwrap();
            let expect: Vec<u64> = (window_start(n)..=n).filter(|&p| is_prime_u64(p)).collect();
            assert_eq!(w.primes, expect);
        }
    }

    #[test]
    fn unrelated_modulus_changes_nothing() {
        // 2^10 * 3^4 has no prime factor in [50, 100]
        assert_eq!(
            sieve_window(100, 1024 * 81).unwrap().primes,
            sieve_window(100, 1).unwrap().primes
        );
    }
}

//! Exponential sums over products of window primes, evaluated by exact
//! residue grouping.
//!
//! Every sum of the form `sum_tuples e(l * a * prod / q)` depends on the
//! tuple only through the residue of `a * prod` modulo `q`. The tuples are
//! therefore first counted per residue class with integer arithmetic
//! ([`ResidueHistogram`]) and only then turned into complex numbers, as
//! `sum_r counts[r] * e(l r / q)`. The combinatorics stay exact and the
//! floating error is bounded by roughly `L * total_count * q * eps`.

mod audits;
mod sums;

pub use audits::{
    dr_coefficient_audit, erdos_turan_check, orthogonality_sum, vinogradov_majorant,
    vinogradov_sum, DrAudit, EtReport, OrthogonalityTable, VinogradovReport,
};
pub use sums::{
    distinct_sum_s, lemma1_lhs, lemma2_lhs, lemma_majorant, DistinctSumReport, ExpSumReport,
    SumKind, ThresholdForm,
};

use num_bigint::BigUint;
use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::primes::PrimeWindow;

/// Parameters shared by the lemma-style sums.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpSumParams {
    pub a: i64,
    pub q: u64,
    pub n: u32,
    pub k: u32,
    #[serde(rename = "L")]
    pub big_l: u64,
    #[serde(rename = "N")]
    pub big_n: u64,
    /// Exponents `r_1..r_m` with `sum r_i = n`; `None` means all ones.
    pub pattern: Option<Vec<u32>>,
}

impl ExpSumParams {
    pub fn new(a: i64, q: u64, n: u32, k: u32, big_l: u64, big_n: u64) -> Self {
        ExpSumParams {
            a,
            q,
            n,
            k,
            big_l,
            big_n,
            pattern: None,
        }
    }

    pub fn with_pattern(mut self, pattern: Vec<u32>) -> Self {
        self.pattern = Some(pattern);
        self
    }

    /// The exponent pattern actually summed over: the stored one or `n` ones.
    pub fn exponents(&self) -> Vec<u32> {
        self.pattern
            .clone()
            .unwrap_or_else(|| vec![1; self.n as usize])
    }

    pub fn check(&self) -> Result<()> {
        if self.q == 0 {
            return Err(Error::InvalidInput("q must be >= 1".into()));
        }
        if self.n == 0 || self.big_l == 0 || self.big_n == 0 {
            return Err(Error::InvalidInput("n, L and N must be >= 1".into()));
        }
        if !coprime(self.a, self.q) {
            return Err(Error::InvalidInput(format!(
                "gcd({}, {}) != 1",
                self.a, self.q
            )));
        }
        if let Some(pattern) = &self.pattern {
            let sum: u64 = pattern.iter().map(|&r| r as u64).sum();
            if pattern.is_empty() || pattern.contains(&0) || sum != self.n as u64 {
                return Err(Error::InvalidInput(format!(
                    "pattern {pattern:?} must be positive and sum to n = {}",
                    self.n
                )));
            }
        }
        Ok(())
    }
}

pub(crate) fn coprime(a: i64, q: u64) -> bool {
    (a.unsigned_abs() as u128).gcd(&(q as u128)) == 1
}

/// `L <= N^n`, `q <= L N^k` and `2^{n+k+1} < N`.
pub fn validate_conditions(p: &ExpSumParams) -> bool {
    let big_n = BigUint::from(p.big_n);
    let big_l = BigUint::from(p.big_l);
    let l_ok = big_l <= big_n.pow(p.n);
    let q_ok = BigUint::from(p.q) <= &big_l * big_n.pow(p.k);
    let two_ok = BigUint::from(2u32).pow(p.n + p.k + 1) < big_n;
    l_ok && q_ok && two_ok
}

/// Tuple counts per residue class modulo `q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResidueHistogram {
    pub modulus: u64,
    /// `counts[r]` tuples land in residue class `r`.
    pub counts: Vec<u128>,
}

impl ResidueHistogram {
    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    fn nonzero(&self) -> Vec<(u64, f64)> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(r, &c)| (r as u64, c as f64))
            .collect()
    }
}

pub(crate) fn mul_mod(x: u64, y: u64, m: u64) -> u64 {
    ((x as u128 * y as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(base: u64, mut exp: u32, m: u64) -> u64 {
    let mut result = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    result
}

pub(crate) fn residue_of(a: i64, q: u64) -> u64 {
    (a as i128).rem_euclid(q as i128) as u64
}

/// Counts `(q_1..q_m) in P^m` by the residue of `a * q_1^{r_1} ... q_m^{r_m}`
/// modulo `q`, one multiplicative convolution per factor.
pub fn product_residue_histogram(
    window: &PrimeWindow,
    pattern: &[u32],
    a: i64,
    q: u64,
) -> Result<ResidueHistogram> {
    if q == 0 {
        return Err(Error::InvalidInput("q must be >= 1".into()));
    }
    if !coprime(a, q) {
        return Err(Error::InvalidInput(format!("gcd({a}, {q}) != 1")));
    }
    if q > usize::MAX as u64 / 32 {
        return Err(Error::SizeGuard(format!(
            "modulus {q} too large for a histogram"
        )));
    }
    let mut counts = vec![0u128; q as usize];
    counts[residue_of(a, q) as usize] = 1;
    for &exp in pattern {
        let mut factor: std::collections::BTreeMap<u64, u128> = std::collections::BTreeMap::new();
        for &p in &window.primes {
            *factor.entry(pow_mod(p, exp, q)).or_insert(0) += 1;
        }
        let mut next = vec![0u128; q as usize];
        for (x, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (&s, &f) in &factor {
                let idx = mul_mod(x as u64, s, q) as usize;
                let add = c
                    .checked_mul(f)
                    .ok_or(Error::Overflow("residue histogram"))?;
                next[idx] = next[idx]
                    .checked_add(add)
                    .ok_or(Error::Overflow("residue histogram"))?;
            }
        }
        counts = next;
    }
    Ok(ResidueHistogram { modulus: q, counts })
}

/// `e(j/q)` for every `j`, or on demand when `q` is large.
pub(crate) struct UnitRoots {
    q: u64,
    table: Option<Vec<Complex64>>,
}

impl UnitRoots {
    pub(crate) fn new(q: u64) -> Self {
        let table = (q <= 1 << 20).then(|| (0..q).map(|j| Self::eval(j, q)).collect());
        UnitRoots { q, table }
    }

    fn eval(j: u64, q: u64) -> Complex64 {
        let phase = std::f64::consts::TAU * (j as f64 / q as f64);
        Complex64::new(phase.cos(), phase.sin())
    }

    /// `e(j / q)` for `0 <= j < q`.
    pub(crate) fn get(&self, j: u64) -> Complex64 {
        match &self.table {
            Some(t) => t[j as usize],
            None => Self::eval(j, self.q),
        }
    }
}

/// `sum_{l=1}^{L} |sum_r w_r e(l r / q)|` for a sparse weighted histogram.
pub(crate) fn abs_sum_over_l(q: u64, weights: &[(u64, f64)], big_l: u64) -> f64 {
    let roots = UnitRoots::new(q);
    let mut total = 0.0;
    for l in 1..=big_l {
        let lr = l % q;
        let mut acc = Complex64::new(0.0, 0.0);
        for &(r, w) in weights {
            acc += roots.get(mul_mod(lr, r, q)) * w;
        }
        total += acc.norm();
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::sieve_window;

    fn window(primes: &[u64]) -> PrimeWindow {
        PrimeWindow {
            n: *primes.last().unwrap(),
            excluded_modulus: 1,
            primes: primes.to_vec(),
        }
    }

    #[test]
    fn condition_examples() {
        assert!(validate_conditions(&ExpSumParams::new(1, 50, 2, 1, 10, 40)));
        assert!(!validate_conditions(&ExpSumParams::new(
            1, 50, 2, 0, 10, 40
        )));
        assert!(!validate_conditions(&ExpSumParams::new(
            1, 10, 3, 3, 5, 100
        )));
        // 2^{n+k+1} < N is strict
        assert!(!validate_conditions(&ExpSumParams::new(1, 1, 1, 2, 1, 16)));
        assert!(validate_conditions(&ExpSumParams::new(1, 1, 1, 2, 1, 17)));
    }

    #[test]
    fn param_checks() {
        assert!(ExpSumParams::new(2, 4, 2, 0, 1, 10).check().is_err());
        assert!(ExpSumParams::new(1, 4, 3, 0, 1, 10)
            .with_pattern(vec![1, 1])
            .check()
            .is_err());
        assert!(ExpSumParams::new(1, 4, 3, 0, 1, 10)
            .with_pattern(vec![2, 1])
            .check()
            .is_ok());
        assert!(ExpSumParams::new(1, 4, 3, 0, 1, 10)
            .with_pattern(vec![3, 0])
            .check()
            .is_err());
    }

    #[test]
    fn histogram_examples() {
        let w = window(&[5, 7]);
        let h = product_residue_histogram(&w, &[1], 1, 3).unwrap();
        assert_eq!(h.counts, vec![0, 1, 1]);
        let h = product_residue_histogram(&w, &[1, 1], 1, 3).unwrap();
        assert_eq!(h.counts, vec![0, 2, 2]);
        let w = sieve_window(50, 1).unwrap();
        let h = product_residue_histogram(&w, &[2, 1, 1], 5, 1).unwrap();
        assert_eq!(h.counts, vec![(w.len() as u128).pow(3)]);
        assert!(product_residue_histogram(&w, &[1], 2, 4).is_err());
    }

    #[test]
    fn negative_multiplier() {
        let w = window(&[5, 7]);
        // -1 * {5, 7} mod 3 = {1, 2}
        let h = product_residue_histogram(&w, &[1], -1, 3).unwrap();
        assert_eq!(h.counts, vec![0, 1, 1]);
        assert_eq!(residue_of(-7, 5), 3);
    }

    #[test]
    fn pow_mod_small() {
        assert_eq!(pow_mod(3, 4, 7), 81 % 7);
        assert_eq!(pow_mod(10, 0, 1), 0);
        // (-1)^3 mod m
        assert_eq!(pow_mod(u64::MAX - 1, 3, u64::MAX), u64::MAX - 1);
    }
}

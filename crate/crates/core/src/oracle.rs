//! Brute-force ground truth for `n`-term approximation.
//!
//! For fixed denominators the reachable values `sum a_i/q_i` are exactly the
//! multiples of `1/lcm(q_1..q_n)` (the cofactors `lcm/q_i` have gcd 1), so
//! the best error is `||alpha M|| / M` with `M` the lcm. The oracle scans a
//! denominator class, keeps one tuple per distinct `M`, and minimises that.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use crate::arith::{ln_bigint, Rational};
use crate::error::{check_budget, Error, Result};
use crate::primes::{pairwise_coprime, sieve_window};
use crate::search::{ApproxResult, Branch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    /// `n` distinct primes in `[N/2, N]`.
    PrimesInWindow,
    /// `n` integers in `[1, N]`, repetitions allowed.
    AllUpToN,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DenomClass {
    pub kind: ClassKind,
    #[serde(rename = "N")]
    pub big_n: u64,
    pub n: u32,
    /// Primes dividing this are left out of `PrimesInWindow` (1 keeps all).
    pub exclude: u64,
}

impl DenomClass {
    pub fn primes_in_window(big_n: u64, n: u32) -> Self {
        DenomClass {
            kind: ClassKind::PrimesInWindow,
            big_n,
            n,
            exclude: 1,
        }
    }

    pub fn all_up_to(big_n: u64, n: u32) -> Self {
        DenomClass {
            kind: ClassKind::AllUpToN,
            big_n,
            n,
            exclude: 1,
        }
    }

    /// Same window the searches use for hypothesis denominator `q`.
    pub fn excluding(mut self, q: u64) -> Self {
        self.exclude = q;
        self
    }
}

fn lcm_all(denoms: &[u64]) -> BigInt {
    denoms
        .iter()
        .fold(BigInt::one(), |acc, &q| acc.lcm(&BigInt::from(q)))
}

/// `||alpha M||` as the integer `min(r, d - r)` with `alpha = p/d`,
/// `r = p M mod d`; the error is this over `d M`.
fn residue_gap(alpha: &Rational, modulus: &BigInt) -> BigInt {
    let d = alpha.denom();
    let r = (alpha.numer() * modulus).mod_floor(d);
    let other = d - &r;
    if r <= other {
        r
    } else {
        other
    }
}

/// Numerators with `sum a_i/q_i = b/lcm`. Pairwise-coprime denominators go
/// through the CRT split; otherwise Bezout coefficients of the cofactors
/// `lcm/q_i` are built one at a time and reduced into `[0, q_i)` for `i > 1`.
pub fn numerators_for(b: &BigInt, denoms: &[u64]) -> Result<Vec<BigInt>> {
    if denoms.is_empty() || denoms.contains(&0) {
        return Err(Error::InvalidInput(
            "denominators must be non-empty and >= 1".into(),
        ));
    }
    if pairwise_coprime(denoms) {
        return crate::search::split_numerators_pub(b, denoms);
    }
    let m = lcm_all(denoms);
    let cof: Vec<BigInt> = denoms.iter().map(|&q| &m / BigInt::from(q)).collect();
    let mut g = cof[0].clone();
    let mut coeffs = vec![BigInt::one()];
    for c in &cof[1..] {
        let e = g.extended_gcd(c);
        for x in coeffs.iter_mut() {
            *x *= &e.x;
        }
        coeffs.push(e.y);
        g = e.gcd;
    }
    debug_assert!(g.is_one());
    let mut nums: Vec<BigInt> = coeffs.into_iter().map(|x| x * b).collect();
    let q0 = BigInt::from(denoms[0]);
    for i in 1..nums.len() {
        let qi = BigInt::from(denoms[i]);
        let (k, rem) = nums[i].div_mod_floor(&qi);
        nums[i] = rem;
        nums[0] += k * &q0;
    }
    Ok(nums)
}

/// Exact optimum for fixed denominators: `(||alpha M|| / M, numerators)`.
pub fn best_error_for_denoms(alpha: &Rational, denoms: &[u64]) -> Result<(Rational, Vec<BigInt>)> {
    if denoms.is_empty() {
        return Err(Error::InvalidInput("need at least one denominator".into()));
    }
    let m = lcm_all(denoms);
    let error = Rational::new(residue_gap(alpha, &m), alpha.denom() * &m)?;
    let b = (alpha * Rational::from(m.clone())).round_half_even();
    Ok((error, numerators_for(&b, denoms)?))
}

/// Best tuple among `tuples`: least error, then least `M`, then the first
/// tuple seen. Tuples should arrive in lexicographic order.
pub fn best_over_tuples<I>(alpha: &Rational, tuples: I) -> Result<Option<ApproxResult>>
where
    I: IntoIterator<Item = Vec<u64>>,
{
    let mut by_modulus: BTreeMap<BigInt, Vec<u64>> = BTreeMap::new();
    for t in tuples {
        by_modulus.entry(lcm_all(&t)).or_insert(t);
    }
    let mut best: Option<(BigInt, BigInt, &Vec<u64>)> = None;
    for (m, t) in &by_modulus {
        let gap = residue_gap(alpha, m);
        let better = match &best {
            None => true,
            // gap/m < best_gap/best_m; BTreeMap order gives smaller M first on ties
            Some((bg, bm, _)) => &gap * bm < bg * m,
        };
        if better {
            best = Some((gap, m.clone(), t));
        }
    }
    let Some((_, m, t)) = best else {
        return Ok(None);
    };
    let (error, numerators) = best_error_for_denoms(alpha, t)?;
    Ok(Some(ApproxResult {
        denominators: t.clone(),
        numerators,
        error,
        target_bound: Rational::new(1, m * 2)?,
        big_l: 1,
        met_target: true,
        branch: Branch::Oracle,
        skipped_tuples: 0,
    }))
}

fn class_size(cls: &DenomClass, universe: u128) -> u128 {
    let n = cls.n as u128;
    let (top, k) = match cls.kind {
        ClassKind::PrimesInWindow => (universe, n),
        ClassKind::AllUpToN => (universe + n - 1, n),
    };
    if k > top {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(top - i) / (i + 1))
}

/// Nondecreasing `k`-tuples from `items`, or strictly increasing ones, in
/// lexicographic order.
fn tuples(items: &[u64], k: usize, strict: bool) -> Vec<Vec<u64>> {
    if strict {
        items.iter().copied().combinations(k).collect()
    } else {
        items
            .iter()
            .copied()
            .combinations_with_replacement(k)
            .collect()
    }
}

/// Global optimum of `||alpha M|| / M` over the class.
pub fn best_multi_approx(alpha: &Rational, cls: &DenomClass, budget: u64) -> Result<ApproxResult> {
    if cls.n == 0 || cls.big_n == 0 {
        return Err(Error::InvalidInput("class needs n >= 1 and N >= 1".into()));
    }
    let items: Vec<u64> = match cls.kind {
        ClassKind::PrimesInWindow => sieve_window(cls.big_n, cls.exclude.max(1))?.primes,
        ClassKind::AllUpToN => (1..=cls.big_n).collect(),
    };
    check_budget(class_size(cls, items.len() as u128), budget)?;
    let strict = cls.kind == ClassKind::PrimesInWindow;
    let all = tuples(&items, cls.n as usize, strict);
    best_over_tuples(alpha, all)?.ok_or(Error::WindowTooSmall {
        need: cls.n as usize,
        have: items.len(),
    })
}

/// `phi` with `error = 1 / (q N^phi)`; `+inf` for zero error. Display only.
pub fn achieved_exponent(q: u64, error: &Rational, big_n: u64) -> f64 {
    if error.is_zero() {
        return f64::INFINITY;
    }
    let inv = error.recip().expect("nonzero") / Rational::from(q);
    let ln = ln_bigint(inv.numer().abs().magnitude()) - ln_bigint(inv.denom().magnitude());
    ln / (big_n as f64).ln()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn fixed_denominator_examples() {
        assert_eq!(
            best_error_for_denoms(&r("7/15"), &[3, 5]).unwrap().0,
            r("0")
        );
        let (e, nums) = best_error_for_denoms(&r("1/7"), &[5]).unwrap();
        assert_eq!(e, r("2/35"));
        assert_eq!(nums, vec![BigInt::from(1)]);
        assert_eq!(best_error_for_denoms(&r("1/2"), &[2, 4]).unwrap().0, r("0"));
    }

    #[test]
    fn numerators_realise_the_optimum() {
        for denoms in [vec![4u64, 6], vec![6, 10, 15], vec![12, 18, 8], vec![9, 9]] {
            for alpha in ["1/7", "-22/13", "355/113", "5"] {
                let alpha = r(alpha);
                let (e, nums) = best_error_for_denoms(&alpha, &denoms).unwrap();
                let value = nums
                    .iter()
                    .zip(&denoms)
                    .fold(Rational::zero(), |acc, (a, &q)| {
                        acc + Rational::new(a.clone(), q).unwrap()
                    });
                assert_eq!((&alpha - value).abs(), e, "{alpha} {denoms:?}");
                for (a, &q) in nums.iter().zip(&denoms).skip(1) {
                    assert!(*a >= BigInt::from(0) && *a < BigInt::from(q));
                }
            }
        }
    }

    #[test]
    fn pi_surrogate_single_denominator() {
        let res = best_multi_approx(&r("355/113"), &DenomClass::all_up_to(10, 1), 1000).unwrap();
        assert_eq!(res.denominators, vec![7]);
        assert_eq!(res.error, r("1/791"));
        assert!(res.verify(&r("355/113")));
    }

    #[test]
    fn exact_pair_of_window_primes_wins() {
        let alpha = Rational::new(29 * 31 - 1, 29 * 31).unwrap();
        let res = best_multi_approx(&alpha, &DenomClass::primes_in_window(50, 2), 1000).unwrap();
        assert_eq!(res.error, r("0"));
        assert_eq!(res.denominators, vec![29, 31]);
    }

    #[test]
    fn exclusion_and_budget() {
        let cls = DenomClass::primes_in_window(50, 2).excluding(29 * 31);
        let res = best_multi_approx(&r("17/899"), &cls, 1000).unwrap();
        assert!(!res.denominators.contains(&29) && !res.denominators.contains(&31));
        assert!(matches!(
            best_multi_approx(&r("1/3"), &DenomClass::all_up_to(100, 3), 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn exponent_inversion() {
        assert!((achieved_exponent(7, &r("1/700"), 10) - 2.0).abs() < 1e-12);
        assert!(achieved_exponent(7, &r("1/7"), 10).abs() < 1e-12);
        assert_eq!(achieved_exponent(7, &r("0"), 10), f64::INFINITY);
    }

    #[test]
    fn tuple_generation() {
        assert_eq!(
            tuples(&[1, 2, 3], 2, true),
            vec![vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(
            tuples(&[1, 2], 2, false),
            vec![vec![1, 1], vec![1, 2], vec![2, 2]]
        );
    }
}

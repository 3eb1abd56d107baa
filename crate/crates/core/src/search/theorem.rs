use std::cmp::Ordering;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;

use super::{choose_l, frac_lt, ApproxResult, Branch, SearchMode, SearchParams};
use crate::arith::{crt_partial_fractions, pow_upper_bound, scaled_pow_cmp_one, Rational};
use crate::error::{check_budget, Error, Result};
use crate::expsum::{mul_mod, residue_of};
use crate::primes::{sieve_window, window_start, PrimeWindow};

/// Writes `b / prod(denoms)` as `sum a_i / q_i`, folding the integer part of
/// the CRT split into the first numerator.
pub(crate) fn split_numerators(b: &BigInt, denoms: &[u64]) -> Result<Vec<BigInt>> {
    let d = crt_partial_fractions(b, denoms)?;
    let mut out: Vec<BigInt> = d.terms.iter().map(|&(a, _)| BigInt::from(a)).collect();
    if let Some(first) = out.first_mut() {
        *first += &d.integer_part * BigInt::from(denoms[0]);
    }
    Ok(out)
}

/// Nearest-integer numerator `b` for `alpha * M`, ties to even.
fn nearest_numerator(alpha: &Rational, modulus: &BigInt) -> BigInt {
    (alpha * Rational::from(modulus.clone())).round_half_even()
}

fn build_result(
    alpha: &Rational,
    denoms: Vec<u64>,
    b: &BigInt,
    target_bound: Rational,
    big_l: u64,
    branch: Branch,
) -> Result<ApproxResult> {
    let numerators = split_numerators(b, &denoms)?;
    let mut res = ApproxResult {
        denominators: denoms,
        numerators,
        error: Rational::zero(),
        met_target: false,
        target_bound,
        big_l,
        branch,
        skipped_tuples: 0,
    };
    res.error = res.recompute_error(alpha);
    res.met_target = res.error <= res.target_bound;
    Ok(res)
}

/// `1 / (q * ceil-ish(N^{phi - eps}))`, a rational no larger than
/// `1/(q N^{phi-eps})` so that meeting it implies the real inequality.
pub(crate) fn theorem_target(p: &SearchParams) -> Result<Rational> {
    let upper = pow_upper_bound(p.big_n, &(&p.phi - &p.epsilon))?;
    (Rational::from(p.q) * upper).recip()
}

/// Takes the `n` largest window primes and rounds `alpha` to the nearest
/// fraction with denominator `M = prod q_i`, so the error is at most
/// `1/(2M) <= 2^{n-1}/N^n`.
pub fn trivial_case(
    alpha: &Rational,
    big_n: u64,
    n: u32,
    window: &PrimeWindow,
) -> Result<ApproxResult> {
    let n = n as usize;
    if window.len() < n {
        return Err(Error::WindowTooSmall {
            need: n,
            have: window.len(),
        });
    }
    let _ = big_n;
    let denoms = window.primes[window.len() - n..].to_vec();
    let modulus: BigInt = denoms.iter().map(|&q| BigInt::from(q)).product();
    let b = nearest_numerator(alpha, &modulus);
    let bound = Rational::new(1, modulus * 2)?;
    build_result(alpha, denoms, &b, bound, 1, Branch::TrivialCase)
}

/// `q <= N^{n - phi}`: the hypothesis denominator is so small that rounding
/// to any product of `n` window primes already does the job.
fn in_trivial_regime(p: &SearchParams) -> Result<bool> {
    let e = &p.phi - Rational::from(p.n as i64);
    Ok(scaled_pow_cmp_one(&Rational::from(p.q), p.big_n, &e)? != Ordering::Greater)
}

fn delegate_trivial(p: &SearchParams, window: &PrimeWindow, big_l: u64) -> Result<ApproxResult> {
    let mut res = trivial_case(&p.alpha, p.big_n, p.n, window)?;
    res.target_bound = theorem_target(p)?;
    res.big_l = big_l;
    res.met_target = res.error <= res.target_bound;
    Ok(res)
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

struct ScanOutcome {
    denoms: Vec<u64>,
    early: bool,
}

/// Walks the tuples in order, stopping at the first with `||M a/q|| < 1/L`.
/// Otherwise keeps the tuple minimising `||M a/q|| / M = |a/q - b/M|`
/// (first one on ties).
fn scan<I>(tuples: I, a: i64, q: u64, big_l: u64) -> Result<Option<ScanOutcome>>
where
    I: Iterator<Item = Vec<u64>>,
{
    let a_res = residue_of(a, q);
    let mut best: Option<(u64, u128, Vec<u64>)> = None;
    for t in tuples {
        let residue = t.iter().fold(a_res, |acc, &d| mul_mod(acc, d, q));
        let value = residue.min(q - residue);
        if (value as u128) * (big_l as u128) < q as u128 {
            return Ok(Some(ScanOutcome {
                denoms: t,
                early: true,
            }));
        }
        let modulus = t
            .iter()
            .try_fold(1u128, |acc, &d| acc.checked_mul(d as u128))
            .ok_or(Error::Overflow("denominator product"))?;
        let better = match &best {
            None => true,
            Some((v, m, _)) => frac_lt(value as u128, modulus, *v as u128, *m),
        };
        if better {
            best = Some((value, modulus, t));
        }
    }
    Ok(best.map(|(_, _, denoms)| ScanOutcome {
        denoms,
        early: false,
    }))
}

fn finish(p: &SearchParams, denoms: Vec<u64>, big_l: u64, branch: Branch) -> Result<ApproxResult> {
    let modulus: BigInt = denoms.iter().map(|&d| BigInt::from(d)).product();
    let b = nearest_numerator(&Rational::new(p.a, p.q)?, &modulus);
    build_result(&p.alpha, denoms, &b, theorem_target(p)?, big_l, branch)
}

/// When `q` is a product of at most `n` distinct window primes, `a/q` itself
/// is reachable: those primes (absent from the window, which drops divisors
/// of `q`) plus the smallest remaining window primes.
fn exact_theorem1(p: &SearchParams, window: &PrimeWindow) -> Result<Option<Vec<u64>>> {
    let full = sieve_window(p.big_n, 1)?;
    let mut rest = p.q;
    let mut used = Vec::new();
    for &prime in &full.primes {
        if rest.is_multiple_of(prime) {
            used.push(prime);
            rest /= prime;
        }
    }
    let n = p.n as usize;
    if rest != 1 || used.len() > n || window.len() < n - used.len() {
        return Ok(None);
    }
    let mut denoms = used;
    denoms.extend(window.primes.iter().take(n - denoms.len()));
    denoms.sort_unstable();
    Ok(Some(denoms))
}

/// Searches `n` distinct primes `q_1 < ... < q_n` from the window for which
/// `a/q` is within `1/(q N^{phi - n - eps/2})` of `b/(q_1...q_n)`, then
/// certifies the resulting approximation of `alpha` exactly.
pub fn theorem1_search(p: &SearchParams, window: &PrimeWindow) -> Result<ApproxResult> {
    if p.mode != SearchMode::Theorem1 {
        return Err(Error::InvalidInput(
            "theorem1_search needs theorem1 mode".into(),
        ));
    }
    let n = p.n as usize;
    let phi_stop = &p.phi - &p.epsilon / Rational::from(2i64);
    let big_l = choose_l(p.q, p.big_n, &phi_stop, p.n)?;
    if in_trivial_regime(p)? {
        return delegate_trivial(p, window, big_l);
    }
    if let Some(denoms) = exact_theorem1(p, window)? {
        return finish(p, denoms, big_l, Branch::EtSearch);
    }
    if window.len() < n {
        return Err(Error::WindowTooSmall {
            need: n,
            have: window.len(),
        });
    }
    check_budget(binomial(window.len() as u128, n as u128), p.budget)?;
    let tuples = window.primes.iter().copied().combinations(n);
    let outcome = scan(tuples, p.a, p.q, big_l)?.expect("at least one tuple");
    let branch = if outcome.early {
        Branch::EtSearch
    } else {
        Branch::Exhausted
    };
    finish(p, outcome.denoms, big_l, branch)
}

/// `(q_1, q_2, q_3)` with `q_1 < q_2` window primes (divisors of `q`
/// allowed) and `q_3` in `[N/2, N]` coprime to both, such that `q | q_1 q_2 q_3`.
fn exact_theorem2(p: &SearchParams) -> Result<Option<Vec<u64>>> {
    let full = sieve_window(p.big_n, 1)?;
    let start = window_start(p.big_n);
    for (i, &q1) in full.primes.iter().enumerate() {
        for &q2 in &full.primes[i + 1..] {
            let pair = q1 as u128 * q2 as u128;
            let g = p.q as u128 / (p.q as u128).gcd(&pair);
            if g > p.big_n as u128 {
                continue;
            }
            let g = g as u64;
            let mut q3 = start.div_ceil(g) * g;
            while q3 <= p.big_n {
                if q3 != q1 && q3 != q2 && (q3 as u128).gcd(&pair) == 1 {
                    return Ok(Some(vec![q1, q2, q3]));
                }
                q3 += g;
            }
        }
    }
    Ok(None)
}

/// The three-term variant: `q_1 < q_2` distinct window primes and `q_3` any
/// integer of `[N/2, N]` other than them. Tuples where `q_3` shares a factor
/// with `q_1 q_2` are skipped (and counted) so the CRT split applies.
pub fn theorem2_search(p: &SearchParams, window: &PrimeWindow) -> Result<ApproxResult> {
    if p.mode != SearchMode::Theorem2 || p.n != 3 {
        return Err(Error::InvalidInput(
            "theorem2_search needs theorem2 mode with n = 3".into(),
        ));
    }
    if p.phi < Rational::new(3, 2)? || p.phi > Rational::from(2i64) {
        return Err(Error::InvalidInput(format!(
            "theorem2 needs 3/2 <= phi <= 2, got {}",
            p.phi
        )));
    }
    if window.len() < 2 {
        return Err(Error::WindowTooSmall {
            need: 2,
            have: window.len(),
        });
    }
    let phi_stop = &p.phi - &p.epsilon / Rational::from(2i64);
    let big_l = choose_l(p.q, p.big_n, &phi_stop, 3)?;
    if window.len() >= 3 && in_trivial_regime(p)? {
        return delegate_trivial(p, window, big_l);
    }
    if let Some(denoms) = exact_theorem2(p)? {
        return finish(p, denoms, big_l, Branch::EtSearch);
    }
    let start = window_start(p.big_n);
    let span = (p.big_n - start + 1) as u128;
    check_budget(
        binomial(window.len() as u128, 2).saturating_mul(span),
        p.budget,
    )?;

    let mut skipped = 0u64;
    let primes = &window.primes;
    let big_n = p.big_n;
    let tuples = primes
        .iter()
        .copied()
        .array_combinations()
        .flat_map(|[q1, q2]| (start..=big_n).map(move |q3| (q1, q2, q3)));
    let filtered = tuples.filter_map(|(q1, q2, q3)| {
        if q3 == q1 || q3 == q2 {
            return None;
        }
        if q3.gcd(&q1) != 1 || q3.gcd(&q2) != 1 {
            skipped += 1;
            return None;
        }
        Some(vec![q1, q2, q3])
    });
    let outcome = scan(filtered, p.a, p.q, big_l)?;
    let outcome = outcome.ok_or(Error::WindowTooSmall {
        need: 3,
        have: window.len(),
    })?;
    let branch = if outcome.early {
        Branch::EtSearch
    } else {
        Branch::Exhausted
    };
    let mut res = finish(p, outcome.denoms, big_l, branch)?;
    res.skipped_tuples = skipped;
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::SearchMode;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_half() {
        let w = PrimeWindow {
            n: 10,
            excluded_modulus: 1,
            primes: vec![5, 7],
        };
        let res = trivial_case(&r("1/2"), 10, 1, &w).unwrap();
        assert_eq!(res.denominators, vec![7]);
        assert_eq!(res.numerators, vec![BigInt::from(4)]);
        assert_eq!(res.error, r("1/14"));
        assert!(res.met_target);
        assert!(res.verify(&r("1/2")));
        let zero = trivial_case(&r("0"), 10, 2, &w).unwrap();
        assert_eq!(zero.error, r("0"));
        assert!(zero.numerators.iter().all(|a| *a == BigInt::from(0)));
        let one = trivial_case(&r("35/35"), 10, 2, &w).unwrap();
        assert_eq!(one.error, r("0"));
        assert_eq!(one.value(), r("1"));
        assert!(matches!(
            trivial_case(&r("1"), 10, 3, &w),
            Err(Error::WindowTooSmall { need: 3, have: 2 })
        ));
    }

    #[test]
    fn exact_product_of_window_primes() {
        // 29 * 31 = 899
        let alpha = r("100/899");
        let p = SearchParams::new(
            alpha.clone(),
            100,
            899,
            50,
            2,
            r("1/2"),
            r("5/4"),
            SearchMode::Theorem1,
        )
        .unwrap();
        let w = sieve_window(50, 899).unwrap();
        assert!(!w.contains(29) && !w.contains(31));
        let res = theorem1_search(&p, &w).unwrap();
        assert_eq!(res.error, r("0"));
        assert_eq!(res.denominators, vec![29, 31]);
        assert!(res.met_target && res.verify(&alpha));
    }

    #[test]
    fn integer_alpha_goes_trivial() {
        let p = SearchParams::new(
            r("3"),
            3,
            1,
            50,
            2,
            r("1/2"),
            r("5/4"),
            SearchMode::Theorem1,
        )
        .unwrap();
        let w = sieve_window(50, 1).unwrap();
        let res = theorem1_search(&p, &w).unwrap();
        assert_eq!(res.branch, Branch::TrivialCase);
        assert_eq!(res.error, r("0"));
        assert!(res.verify(&r("3")));
    }

    #[test]
    fn exhausts_when_threshold_unreachable() {
        // six window primes; the closest pair product gives ||377 M/610|| = 27/610 > 1/L
        let alpha = r("377/610");
        let p = SearchParams::new(
            alpha.clone(),
            377,
            610,
            50,
            2,
            r("1/2"),
            r("2"),
            SearchMode::Theorem1,
        )
        .unwrap();
        let w = sieve_window(50, 610).unwrap();
        let res = theorem1_search(&p, &w).unwrap();
        assert_eq!(res.branch, Branch::Exhausted);
        assert!(res.verify(&alpha));
    }

    #[test]
    fn theorem2_exact_with_composite_third() {
        // 31 * 37 * 40, third denominator composite and coprime to the primes
        let q = 31 * 37 * 40u64;
        let alpha = Rational::new(7, q).unwrap();
        let p = SearchParams::new(
            alpha.clone(),
            7,
            q,
            60,
            3,
            r("1/2"),
            r("2"),
            SearchMode::Theorem2,
        )
        .unwrap();
        let w = sieve_window(60, q).unwrap();
        let res = theorem2_search(&p, &w).unwrap();
        assert_eq!(res.error, r("0"));
        let d = &res.denominators;
        assert!(d[0] < d[1] && d[2] != d[0] && d[2] != d[1]);
        assert!(res.verify(&alpha));
    }

    #[test]
    fn theorem2_never_reuses_denominators() {
        let alpha = r("1234/3001");
        let p = SearchParams::new(
            alpha.clone(),
            1234,
            3001,
            60,
            3,
            r("1/4"),
            r("2"),
            SearchMode::Theorem2,
        )
        .unwrap();
        let w = sieve_window(60, 3001).unwrap();
        let res = theorem2_search(&p, &w).unwrap();
        let d = &res.denominators;
        assert!(w.contains(d[0]) && w.contains(d[1]) && d[0] < d[1]);
        assert!((30..=60).contains(&d[2]) && d[2] != d[0] && d[2] != d[1]);
        assert_eq!(d[2].gcd(&(d[0] * d[1])), 1);
        assert!(res.verify(&alpha));
        assert!(SearchParams::new(
            alpha.clone(),
            1234,
            3001,
            60,
            3,
            r("1/4"),
            r("7/5"),
            SearchMode::Theorem2
        )
        .is_err());
        let too_large = SearchParams::new(
            alpha,
            1234,
            3001,
            60,
            3,
            r("1/4"),
            r("5/2"),
            SearchMode::Theorem2,
        )
        .unwrap();
        assert!(theorem2_search(&too_large, &w).is_err());
    }
}

//! Ground truth by plain enumeration. Nothing here calls the histogram,
//! partition, CRT or lcm machinery of the library.
#![allow(dead_code)]

use std::f64::consts::TAU;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::Zero;
use primefrac::Rational;

pub fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Primes in `[ceil(N/2), N]` not dividing `q`, by trial division.
pub fn window_primes(big_n: u64, q: u64) -> Vec<u64> {
    (big_n.div_ceil(2)..=big_n)
        .filter(|&p| is_prime(p) && !q.is_multiple_of(p))
        .collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All ordered `m`-tuples over `items`.
pub fn tuples(items: &[u64], m: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t| {
                items.iter().map(move |&x| {
                    let mut u = t.clone();
                    u.push(x);
                    u
                })
            })
            .collect();
    }
    out
}

fn distinct(t: &[u64]) -> bool {
    t.iter().enumerate().all(|(i, x)| !t[..i].contains(x))
}

fn residue_of_tuple(a: i64, q: u64, t: &[u64], exps: &[u32]) -> u64 {
    let mut v = (a as i128).rem_euclid(q as i128) as u128;
    for (&p, &e) in t.iter().zip(exps) {
        for _ in 0..e {
            v = v * p as u128 % q as u128;
        }
    }
    v as u64
}

/// `sum_{l<=L} |sum_t e(l * phase_t / q)|` term by term.
fn abs_sum(q: u64, phases: &[u64], big_l: u64) -> f64 {
    let roots: Vec<Complex64> = (0..q)
        .map(|j| {
            let t = TAU * j as f64 / q as f64;
            Complex64::new(t.cos(), t.sin())
        })
        .collect();
    let mut total = 0.0;
    for l in 1..=big_l {
        let mut acc = Complex64::zero();
        for &ph in phases {
            acc += roots[((l as u128 * ph as u128) % q as u128) as usize];
        }
        total += acc.norm();
    }
    total
}

/// `sum_{l<=L} |sum_{tuples} e(l a q_1^{r_1}...q_m^{r_m} / q)|`.
pub fn direct_power_sum(a: i64, q: u64, primes: &[u64], exps: &[u32], big_l: u64) -> f64 {
    let phases: Vec<u64> = tuples(primes, exps.len())
        .iter()
        .map(|t| residue_of_tuple(a, q, t, exps))
        .collect();
    abs_sum(q, &phases, big_l)
}

/// Same, over pairwise-distinct `n`-tuples of plain products.
pub fn direct_distinct_sum(a: i64, q: u64, primes: &[u64], n: usize, big_l: u64) -> f64 {
    let ones = vec![1u32; n];
    let phases: Vec<u64> = tuples(primes, n)
        .iter()
        .filter(|t| distinct(t))
        .map(|t| residue_of_tuple(a, q, t, &ones))
        .collect();
    abs_sum(q, &phases, big_l)
}

/// `sum` of `f` over pairwise-distinct `n`-tuples of `domain`.
pub fn direct_distinct_total(f: impl Fn(&[u64]) -> i64, domain: &[u64], n: usize) -> i64 {
    tuples(domain, n)
        .iter()
        .filter(|t| distinct(t))
        .map(|t| f(t))
        .sum()
}

/// Best `|alpha - a1/q1 - a2/q2|` by looping over both numerators. Only
/// `a1 mod q1` matters; `a2` runs over every integer that can land within
/// 1 of the target.
pub fn naive_pair_error(alpha: &Rational, q1: u64, q2: u64) -> Rational {
    let mut best: Option<Rational> = None;
    for a1 in 0..q1 as i64 {
        let rest = alpha - Rational::new(a1, q1).unwrap();
        let centre = (&rest * Rational::from(q2)).floor();
        let mut a2 = &centre - BigInt::from(2);
        while a2 <= &centre + BigInt::from(2) {
            let v = Rational::new(a1, q1).unwrap() + Rational::new(a2.clone(), q2).unwrap();
            let e = (alpha - v).abs();
            if best.as_ref().is_none_or(|b| &e < b) {
                best = Some(e);
            }
            a2 += 1;
        }
    }
    best.unwrap()
}

/// Minimum of [`naive_pair_error`] over pairs drawn from `items`
/// (`q1 < q2` when `strict`, `q1 <= q2` otherwise).
pub fn naive_pair_optimum(alpha: &Rational, items: &[u64], strict: bool) -> Rational {
    let mut best: Option<Rational> = None;
    for (i, &q1) in items.iter().enumerate() {
        let start = if strict { i + 1 } else { i };
        for &q2 in &items[start..] {
            let e = naive_pair_error(alpha, q1, q2);
            if best.as_ref().is_none_or(|b| &e < b) {
                best = Some(e);
            }
        }
    }
    best.unwrap()
}

/// Exact `|alpha - sum a_i/q_i|` from decimal strings.
pub fn recompute_error(alpha: &Rational, numerators: &[BigInt], denominators: &[u64]) -> Rational {
    let mut v = Rational::zero();
    for (a, &q) in numerators.iter().zip(denominators) {
        v = v + Rational::new(a.clone(), q).unwrap();
    }
    (alpha - v).abs()
}

/// `d_r` maximum by listing every product and counting repeats.
pub fn direct_max_dr(big_l: u64, primes: &[u64], k: usize) -> u64 {
    let mut all: Vec<u128> = Vec::new();
    for t in tuples(primes, k) {
        let prod: u128 = t.iter().map(|&p| p as u128).product();
        for l in 1..=big_l as u128 {
            all.push(l * prod);
        }
    }
    all.sort_unstable();
    let mut best = 0u64;
    let mut i = 0;
    while i < all.len() {
        let j = all[i..].iter().take_while(|&&x| x == all[i]).count();
        best = best.max(j as u64);
        i += j;
    }
    best
}

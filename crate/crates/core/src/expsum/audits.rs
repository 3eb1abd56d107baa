use std::collections::HashMap;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use super::{mul_mod, residue_of, UnitRoots};
use crate::arith::Rational;
use crate::error::{check_budget, Error, Result};
use crate::primes::PrimeWindow;

/// `sum_{r=1}^{q} e(a m r / q)`.
///
/// For `gcd(a, q) = 1` this is `q` when `q | m` and `0` otherwise; the
/// phases are reduced modulo `q` in integers before any trigonometry.
pub fn orthogonality_sum(a: i64, q: u64, m: i64) -> Complex64 {
    OrthogonalityTable::new(q).sum(a, m)
}

/// Unit roots of one modulus, shared across many `(a, m)` evaluations.
pub struct OrthogonalityTable {
    q: u64,
    roots: UnitRoots,
}

impl OrthogonalityTable {
    /// `q >= 1`.
    pub fn new(q: u64) -> Self {
        assert!(q >= 1, "modulus must be positive");
        OrthogonalityTable {
            q,
            roots: UnitRoots::new(q),
        }
    }

    pub fn sum(&self, a: i64, m: i64) -> Complex64 {
        let q = self.q;
        let step = mul_mod(residue_of(a, q), residue_of(m, q), q);
        let mut acc = Complex64::new(0.0, 0.0);
        let mut phase = 0u64;
        for _ in 1..=q {
            phase += step;
            if phase >= q {
                phase -= q;
            }
            acc += self.roots.get(phase);
        }
        acc
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DrAudit {
    pub max_dr: u64,
    pub bound: u128,
    pub ok: bool,
    /// The `r` attaining `max_dr` (smallest such).
    pub argmax: u128,
}

/// Counts `d_r = #{(l, q_1..q_k): l <= L, q_i in P, l q_1 ... q_k = r}` for
/// every `r` by direct enumeration and compares `max_r d_r` with
/// `2^{n+k+1} k^k` (`0^0 = 1`).
pub fn dr_coefficient_audit(
    big_l: u64,
    window: &PrimeWindow,
    k: u32,
    n: u32,
    budget: u64,
) -> Result<DrAudit> {
    let tuples = (window.len() as u128)
        .checked_pow(k)
        .and_then(|t| t.checked_mul(big_l as u128))
        .unwrap_or(u128::MAX);
    check_budget(tuples, budget)?;
    let mut products: Vec<u128> = vec![1];
    for _ in 0..k {
        products = products
            .iter()
            .flat_map(|&x| window.primes.iter().map(move |&p| x * p as u128))
            .collect();
    }
    let mut d: HashMap<u128, u64> = HashMap::new();
    for l in 1..=big_l as u128 {
        for &prod in &products {
            *d.entry(l * prod).or_insert(0) += 1;
        }
    }
    let (argmax, max_dr) = d
        .iter()
        .map(|(&r, &c)| (r, c))
        .max_by(|x, y| x.1.cmp(&y.1).then(y.0.cmp(&x.0)))
        .unwrap_or((0, 0));
    let bound = 2u128
        .checked_pow(n + k + 1)
        .and_then(|b| b.checked_mul((k as u128).pow(k)))
        .ok_or(Error::Overflow("d_r bound"))?;
    Ok(DrAudit {
        max_dr,
        bound,
        ok: max_dr as u128 <= bound,
        argmax,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VinogradovReport {
    /// Exact `sum_{r=1}^{q} min(N, 1/||a r / q||)`.
    pub lhs: Rational,
    /// `N + 2 q (1 + ln q)`.
    pub bound: f64,
    pub ratio: f64,
    pub a: i64,
    pub q: u64,
    #[serde(rename = "N")]
    pub big_n: u64,
}

/// `N + 2q(1 + ln q)`: the zero residue contributes `N`, and the residues
/// `s` and `q - s` contribute at most `q/s` each.
pub fn vinogradov_majorant(q: u64, big_n: u64) -> f64 {
    big_n as f64 + 2.0 * q as f64 * (1.0 + (q as f64).ln())
}

/// `sum_{r=1}^{q} min(N, 1/||a r/q||)` in exact arithmetic; the `r' = 0`
/// term is `N`.
pub fn vinogradov_sum(a: i64, q: u64, big_n: u64) -> Result<VinogradovReport> {
    if q == 0 || big_n == 0 {
        return Err(Error::InvalidInput("q and N must be >= 1".into()));
    }
    if !super::coprime(a, q) {
        return Err(Error::InvalidInput(format!("gcd({a}, {q}) != 1")));
    }
    let a_res = residue_of(a, q);
    // integer part (terms equal to N) and a count per denominator s for the q/s terms
    let mut capped: u128 = 0;
    let mut per_s: HashMap<u64, u64> = HashMap::new();
    for r in 1..=q {
        let rp = mul_mod(a_res, r % q, q);
        let s = rp.min(q - rp);
        // q/s < N  <=>  q < N s
        if s == 0 || (q as u128) >= big_n as u128 * s as u128 {
            capped += 1;
        } else {
            *per_s.entry(s).or_insert(0) += 1;
        }
    }
    // common denominator for the q/s terms
    let mut den = BigInt::from(1);
    let mut keys: Vec<u64> = per_s.keys().copied().collect();
    keys.sort_unstable();
    for &s in &keys {
        den = den.lcm(&BigInt::from(s));
    }
    let mut num = BigInt::from(capped) * BigInt::from(big_n) * &den;
    for &s in &keys {
        num += BigInt::from(per_s[&s]) * BigInt::from(q) * (&den / BigInt::from(s));
    }
    let lhs = Rational::new(num, den)?;
    let bound = vinogradov_majorant(q, big_n);
    let ratio = lhs.to_f64() / bound;
    Ok(VinogradovReport {
        lhs,
        bound,
        ratio,
        a,
        q,
        big_n,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EtReport {
    /// `sum_{l=1}^{L} |sum_j e(l x_j)|`.
    pub s: f64,
    /// `J / 6`.
    pub threshold: f64,
    /// `S <= J/6`, which forces some `||x_j|| < 1/L`.
    pub conclusion: bool,
    pub points: usize,
    #[serde(rename = "L")]
    pub big_l: u64,
}

/// Evaluates the averaged exponential sum of a finite point set against
/// `J/6`. If every `||x_j|| >= 1/L`, the sum exceeds `J/6`; so `S <= J/6`
/// certifies a point within `1/L` of an integer.
pub fn erdos_turan_check(points: &[Rational], big_l: u64) -> Result<EtReport> {
    if big_l == 0 {
        return Err(Error::InvalidInput("L must be >= 1".into()));
    }
    // reduce each point to (p mod d, d) once; phases are then exact integer residues
    let reduced: Vec<(BigInt, BigInt)> = points
        .iter()
        .map(|x| (x.numer().mod_floor(x.denom()), x.denom().clone()))
        .collect();
    let mut s = 0.0;
    for l in 1..=big_l {
        let lb = BigInt::from(l);
        let mut acc = Complex64::new(0.0, 0.0);
        for (p, d) in &reduced {
            let ph = (&lb * p).mod_floor(d);
            let frac = Rational::new(ph, d.clone())?.to_f64();
            let t = std::f64::consts::TAU * frac;
            acc += Complex64::new(t.cos(), t.sin());
        }
        s += acc.norm();
    }
    let threshold = points.len() as f64 / 6.0;
    Ok(EtReport {
        s,
        threshold,
        conclusion: s <= threshold,
        points: points.len(),
        big_l,
    })
}

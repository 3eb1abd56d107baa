use std::cmp::Ordering;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::{kappa, omega, theorem1_search, ApproxResult, SearchMode, SearchParams};
use crate::arith::{
    best_single_approx, floor_scaled_pow, pow_upper_bound, scaled_pow_cmp_one, Rational,
};
use crate::error::{Error, Result};
use crate::oracle::achieved_exponent;
use crate::primes::sieve_window;

/// Outcome of turning an `n`-term approximation into one fraction `A/Q`
/// whose denominator has `n` distinct prime factors.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Corollary2Report {
    pub n: u32,
    pub kappa: Rational,
    #[serde(rename = "X")]
    pub big_x: u64,
    #[serde(rename = "N")]
    pub big_n: u64,
    pub result: ApproxResult,
    /// `A/Q` with `Q` the product of the denominators.
    #[serde(rename = "A", serialize_with = "crate::arith::serialize_display")]
    pub big_a: BigInt,
    #[serde(rename = "Q", serialize_with = "crate::arith::serialize_display")]
    pub big_q: BigInt,
    pub omega_q: u32,
    /// `A/Q` in lowest terms.
    pub reduced: Rational,
    /// `Q <= X^{n/kappa(n)}`, exact.
    pub q_within_bound: bool,
    /// A rational no larger than `1/(q X^{1-eps})`.
    pub error_target: Rational,
    pub error_within_target: bool,
}

/// Sets `N = floor(X^{1/kappa(n)})`, searches with `phi = kappa(n)`, and
/// combines the `n` fractions into `A/Q`.
#[allow(clippy::too_many_arguments)]
pub fn corollary2_probe(
    alpha: &Rational,
    a: i64,
    q: u64,
    big_x: u64,
    n: u32,
    epsilon: &Rational,
    budget: u64,
) -> Result<Corollary2Report> {
    if big_x == 0 || q == 0 || q > big_x {
        return Err(Error::InvalidInput(format!(
            "need 1 <= q <= X, got q = {q}, X = {big_x}"
        )));
    }
    let dist = (alpha - Rational::new(a, q)?).abs();
    if dist * Rational::from(q) * Rational::from(big_x) > Rational::one() {
        return Err(Error::InvalidInput(format!(
            "|alpha - {a}/{q}| exceeds 1/(q X)"
        )));
    }
    let k = kappa(n);
    let big_n = floor_scaled_pow(&Rational::one(), big_x, &k.recip()?)?
        .to_u64()
        .ok_or(Error::Overflow("N"))?;
    if big_n < 2 {
        return Err(Error::EmptyWindow(big_n));
    }
    let params = SearchParams::new(
        alpha.clone(),
        a,
        q,
        big_n,
        n,
        epsilon.clone(),
        k.clone(),
        SearchMode::Theorem1,
    )?
    .with_budget(budget);
    let window = sieve_window(big_n, q)?;
    let result = theorem1_search(&params, &window)?;

    let big_q = result.modulus();
    let value = result.value();
    let big_a = (&value * Rational::from(big_q.clone())).floor();
    let q_u64 = big_q.to_u64().ok_or(Error::Overflow("Q"))?;
    let omega_q = omega(q_u64)?;
    // Q <= X^{n/kappa}  <=>  Q * X^{-n/kappa} <= 1
    let exp = -(Rational::from(n as i64) / &k);
    let q_within_bound =
        scaled_pow_cmp_one(&Rational::from(big_q.clone()), big_x, &exp)? != Ordering::Greater;
    let one_minus_eps = Rational::one() - epsilon;
    let error_target = (Rational::from(q) * pow_upper_bound(big_x, &one_minus_eps)?).recip()?;
    let error_within_target = result.error <= error_target;
    Ok(Corollary2Report {
        n,
        kappa: k,
        big_x,
        big_n,
        big_a,
        big_q,
        omega_q,
        reduced: value,
        q_within_bound,
        error_target,
        error_within_target,
        result,
    })
}

/// One search of the exponent scan.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRow {
    pub alpha: Rational,
    pub a: i64,
    pub q: u64,
    #[serde(rename = "N")]
    pub big_n: u64,
    pub n: u32,
    pub phi: Rational,
    pub epsilon: Rational,
    pub result: ApproxResult,
    /// `phi` with `error = 1/(q N^phi)`; display only.
    pub achieved_exponent: f64,
    pub wall_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanSummary {
    pub alpha: Rational,
    #[serde(rename = "N")]
    pub big_n: u64,
    /// Largest grid `phi` whose target was met.
    pub empirical_phi: Option<Rational>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanTable {
    pub rows: Vec<ScanRow>,
    pub summary: Vec<ScanSummary>,
}

/// `n/2, n/2 + 1/8, ..., n`.
pub fn default_phi_grid(n: u32) -> Vec<Rational> {
    (4 * n..=8 * n)
        .map(|i| Rational::new(i as i64, 8).expect("nonzero"))
        .collect()
}

/// Runs the prime-denominator search for every `(alpha, N, phi)` and records
/// which exponents were reached. The hypothesis approximation for each `phi`
/// is the convergent of `alpha` with the largest denominator `<= N^phi`.
/// Purely descriptive: no claim is checked.
pub fn conjecture_scan(
    alphas: &[Rational],
    big_ns: &[u64],
    n: u32,
    epsilon: &Rational,
    phi_grid: &[Rational],
    budget: u64,
    timing: bool,
) -> Result<ScanTable> {
    let mut rows = Vec::new();
    let mut summary = Vec::new();
    for alpha in alphas {
        for &big_n in big_ns {
            let mut empirical: Option<Rational> = None;
            for phi in phi_grid {
                let started = Instant::now();
                let x = floor_scaled_pow(&Rational::one(), big_n, phi)?.max(BigInt::from(1));
                let (a, q) = best_single_approx(alpha, &x);
                let a = a.to_i64().ok_or(Error::Overflow("hypothesis numerator"))?;
                let q = q
                    .to_u64()
                    .ok_or(Error::Overflow("hypothesis denominator"))?;
                let params = SearchParams::new(
                    alpha.clone(),
                    a,
                    q,
                    big_n,
                    n,
                    epsilon.clone(),
                    phi.clone(),
                    SearchMode::Theorem1,
                )?
                .with_budget(budget);
                let window = sieve_window(big_n, q)?;
                let result = theorem1_search(&params, &window)?;
                if result.met_target && empirical.as_ref().is_none_or(|e| phi > e) {
                    empirical = Some(phi.clone());
                }
                let wall_ms = if timing {
                    started.elapsed().as_millis() as u64
                } else {
                    0
                };
                rows.push(ScanRow {
                    alpha: alpha.clone(),
                    a,
                    q,
                    big_n,
                    n,
                    phi: phi.clone(),
                    epsilon: epsilon.clone(),
                    achieved_exponent: achieved_exponent(q, &result.error, big_n),
                    result,
                    wall_ms,
                });
            }
            summary.push(ScanSummary {
                alpha: alpha.clone(),
                big_n,
                empirical_phi: empirical,
            });
        }
    }
    Ok(ScanTable { rows, summary })
}

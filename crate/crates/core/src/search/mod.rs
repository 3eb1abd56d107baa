//! Constructive searches for `n`-term approximations `sum a_i/q_i` of a
//! rational `alpha`, with denominators drawn from the prime window, and
//! exact certificates for every answer.

mod probe;
mod theorem;

pub use probe::{
    conjecture_scan, corollary2_probe, default_phi_grid, Corollary2Report, ScanRow, ScanSummary,
    ScanTable,
};
pub(crate) use theorem::split_numerators as split_numerators_pub;
pub use theorem::{theorem1_search, theorem2_search, trivial_case};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::arith::{floor_scaled_pow, ln_bigint, scaled_pow_cmp_one, Rational};
use crate::error::{Error, Result, DEFAULT_WORK_BUDGET};

/// `kappa(n) = 3n/4 - (floor(n/3) + 1)/4`.
pub fn kappa(n: u32) -> Rational {
    Rational::new(3 * n as i64 - (n / 3) as i64 - 1, 4).expect("nonzero denominator")
}

/// `n <= eps ln N / (6 ln ln N)`. Advisory only; fails with
/// [`Error::SmallNRegime`] when `N < 16`.
pub fn n_bound_check(n: u32, big_n: &BigUint, epsilon: &Rational) -> Result<bool> {
    if *big_n < BigUint::from(16u32) {
        return Err(Error::SmallNRegime(big_n.to_string()));
    }
    let ln_n = ln_bigint(big_n);
    let bound = epsilon.to_f64() * ln_n / (6.0 * ln_n.ln());
    Ok(n as f64 <= bound)
}

/// `L = floor(q N^{phi - n}) + 1`, exact.
pub fn choose_l(q: u64, big_n: u64, phi: &Rational, n: u32) -> Result<u64> {
    let e = phi - Rational::from(n as i64);
    let fl = floor_scaled_pow(&Rational::from(q), big_n, &e)?;
    (fl + 1u32).to_u64().ok_or(Error::Overflow("L"))
}

/// Sum of fractions as one reduced fraction `(A, Q)`.
pub fn combine_fractions(parts: &[(BigInt, u64)]) -> Result<(BigInt, BigInt)> {
    let mut acc = Rational::zero();
    for (a, q) in parts {
        acc = acc + Rational::new(a.clone(), *q)?;
    }
    Ok(acc.into_parts())
}

/// Largest argument [`omega`] accepts.
pub const OMEGA_LIMIT: u64 = 1_000_000_000_000_000_000;

/// Number of distinct prime factors, by trial division.
pub fn omega(mut big_q: u64) -> Result<u32> {
    if big_q == 0 {
        return Err(Error::InvalidInput("omega(0) is undefined".into()));
    }
    if big_q > OMEGA_LIMIT {
        return Err(Error::BudgetExceeded {
            needed: big_q as u128,
            budget: OMEGA_LIMIT,
        });
    }
    let mut count = 0;
    let mut d = 2u64;
    while d * d <= big_q {
        if big_q.is_multiple_of(d) {
            count += 1;
            while big_q.is_multiple_of(d) {
                big_q /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if big_q > 1 {
        count += 1;
    }
    Ok(count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// `n` distinct window primes.
    Theorem1,
    /// Two distinct window primes and one integer from `[N/2, N]`.
    Theorem2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    TrivialCase,
    EtSearch,
    Exhausted,
    Oracle,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::TrivialCase => "trivial_case",
            Branch::EtSearch => "et_search",
            Branch::Exhausted => "exhausted",
            Branch::Oracle => "oracle",
        })
    }
}

/// Inputs of a search. The hypothesis `|alpha - a/q| <= 1/(q N^phi)` is
/// checked exactly on construction.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchParams {
    pub alpha: Rational,
    pub a: i64,
    pub q: u64,
    #[serde(rename = "N")]
    pub big_n: u64,
    pub n: u32,
    pub epsilon: Rational,
    pub phi: Rational,
    pub mode: SearchMode,
    #[serde(skip)]
    pub budget: u64,
}

impl SearchParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        alpha: Rational,
        a: i64,
        q: u64,
        big_n: u64,
        n: u32,
        epsilon: Rational,
        phi: Rational,
        mode: SearchMode,
    ) -> Result<Self> {
        if q == 0 || n == 0 {
            return Err(Error::InvalidInput("q and n must be >= 1".into()));
        }
        if (a.unsigned_abs()).gcd(&q) != 1 {
            return Err(Error::InvalidInput(format!("gcd({a}, {q}) != 1")));
        }
        if epsilon <= Rational::zero() {
            return Err(Error::InvalidInput("epsilon must be > 0".into()));
        }
        let nr = Rational::from(n as i64);
        if phi < &nr / Rational::from(2i64) || phi > nr {
            return Err(Error::InvalidInput(format!(
                "phi = {phi} outside [n/2, n] for n = {n}"
            )));
        }
        if mode == SearchMode::Theorem2 && n != 3 {
            return Err(Error::InvalidInput("theorem2 mode needs n = 3".into()));
        }
        let dist = (&alpha - Rational::new(a, q)?).abs();
        if scaled_pow_cmp_one(&(dist * Rational::from(q)), big_n, &phi)? == Ordering::Greater {
            return Err(Error::InvalidInput(format!(
                "hypothesis |alpha - {a}/{q}| <= 1/(q N^{phi}) fails for alpha = {alpha}, N = {big_n}"
            )));
        }
        Ok(SearchParams {
            alpha,
            a,
            q,
            big_n,
            n,
            epsilon,
            phi,
            mode,
            budget: DEFAULT_WORK_BUDGET,
        })
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }
}

/// A found approximation together with its exact certificate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApproxResult {
    pub denominators: Vec<u64>,
    #[serde(serialize_with = "bigints_as_numbers")]
    pub numerators: Vec<BigInt>,
    /// Exact `|alpha - sum a_i/q_i|`.
    pub error: Rational,
    pub target_bound: Rational,
    #[serde(rename = "L")]
    pub big_l: u64,
    pub met_target: bool,
    pub branch: Branch,
    /// Tuples passed over because `q_3` shared a factor with `q_1 q_2`.
    #[serde(skip)]
    pub skipped_tuples: u64,
}

fn bigints_as_numbers<S: serde::Serializer>(
    v: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        let n = x
            .to_i128()
            .ok_or_else(|| serde::ser::Error::custom(format!("numerator {x} exceeds i128")))?;
        seq.serialize_element(&n)?;
    }
    seq.end()
}

impl ApproxResult {
    /// `sum a_i / q_i`.
    pub fn value(&self) -> Rational {
        self.numerators
            .iter()
            .zip(&self.denominators)
            .fold(Rational::zero(), |acc, (a, &q)| {
                acc + Rational::new(a.clone(), q).expect("q >= 1")
            })
    }

    pub fn recompute_error(&self, alpha: &Rational) -> Rational {
        (alpha - self.value()).abs()
    }

    /// Product of the denominators.
    pub fn modulus(&self) -> BigInt {
        self.denominators.iter().map(|&q| BigInt::from(q)).product()
    }

    /// Exact re-check of the stored error and of `met_target`.
    pub fn verify(&self, alpha: &Rational) -> bool {
        self.numerators.len() == self.denominators.len()
            && self.recompute_error(alpha) == self.error
            && self.met_target == (self.error <= self.target_bound)
    }
}

/// `num1/den1 < num2/den2` for non-negative values and positive denominators.
pub(crate) fn frac_lt(num1: u128, den1: u128, num2: u128, den2: u128) -> bool {
    match (num1.checked_mul(den2), num2.checked_mul(den1)) {
        (Some(x), Some(y)) => x < y,
        _ => BigUint::from(num1) * BigUint::from(den2) < BigUint::from(num2) * BigUint::from(den1),
    }
}

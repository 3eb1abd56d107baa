use serde::Serialize;

use super::{
    abs_sum_over_l, product_residue_histogram, validate_conditions, ExpSumParams, ResidueHistogram,
};
use crate::error::{check_budget, Error, Result};
use crate::partition::shape_weights;
use crate::primes::PrimeWindow;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SumKind {
    /// Plain products `q_1 ... q_n`, tuples not required distinct.
    Lemma1,
    /// Powered products `q_1^{r_1} ... q_m^{r_m}`.
    Lemma2,
}

/// One evaluated exponential sum next to its majorant with implied
/// constant 1. The ratio is data: the majorant is asymptotic and nothing
/// here asserts it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExpSumReport {
    pub kind: SumKind,
    pub lhs: f64,
    pub rhs_bound: f64,
    /// `lhs / rhs_bound`, absent when the bound is not positive and finite.
    pub ratio: Option<f64>,
    /// Whether `L <= N^n`, `q <= L N^k`, `2^{n+k+1} < N` hold.
    pub condition_ok: bool,
    /// Number of `(l, tuple)` terms the sum represents.
    pub term_count: u128,
    /// Crude a-priori bound on accumulated floating error in `lhs`.
    pub float_error_bound: f64,
    pub params: ExpSumParams,
}

/// `2^{n+k} n^n max(L N^{n/2+k/2}, L N^n / q^{1/2})`.
pub fn lemma_majorant(n: u32, k: u32, big_l: u64, big_n: u64, q: u64) -> f64 {
    let (nf, kf, lf, bn) = (n as f64, k as f64, big_l as f64, big_n as f64);
    let first = lf * bn.powf(nf / 2.0 + kf / 2.0);
    let second = lf * bn.powf(nf) / (q as f64).sqrt();
    2f64.powf(nf + kf) * nf.powf(nf) * first.max(second)
}

fn ratio(lhs: f64, rhs: f64) -> Option<f64> {
    (rhs > 0.0 && rhs.is_finite()).then(|| lhs / rhs)
}

fn float_error(big_l: u64, total: f64, q: u64) -> f64 {
    big_l as f64 * total * q as f64 * f64::EPSILON
}

fn tuple_count(window: &PrimeWindow, m: usize, big_l: u64) -> Result<u128> {
    (window.len() as u128)
        .checked_pow(m as u32)
        .and_then(|c| c.checked_mul(big_l as u128))
        .ok_or(Error::Overflow("term count"))
}

fn histogram_work(window: &PrimeWindow, m: usize, q: u64, big_l: u64) -> u128 {
    let conv = m as u128 * q as u128 * (window.len() as u128).min(q as u128).max(1);
    let eval = big_l as u128 * q as u128;
    conv.saturating_add(eval)
}

fn evaluate(
    kind: SumKind,
    p: &ExpSumParams,
    window: &PrimeWindow,
    exponents: &[u32],
    budget: u64,
) -> Result<ExpSumReport> {
    p.check()?;
    if window.is_empty() {
        return Err(Error::EmptyWindow(window.n));
    }
    check_budget(
        histogram_work(window, exponents.len(), p.q, p.big_l),
        budget,
    )?;
    let hist: ResidueHistogram = product_residue_histogram(window, exponents, p.a, p.q)?;
    let weights = hist.nonzero();
    let lhs = abs_sum_over_l(p.q, &weights, p.big_l);
    let rhs_bound = lemma_majorant(p.n, p.k, p.big_l, p.big_n, p.q);
    Ok(ExpSumReport {
        kind,
        lhs,
        rhs_bound,
        ratio: ratio(lhs, rhs_bound),
        condition_ok: validate_conditions(p),
        term_count: tuple_count(window, exponents.len(), p.big_l)?,
        float_error_bound: float_error(p.big_l, hist.total() as f64, p.q),
        params: p.clone(),
    })
}

/// `sum_{l<=L} |sum_{q_i in P} e(l q_1...q_n a/q)|` with all tuples counted.
/// Any pattern stored in `p` is ignored.
pub fn lemma1_lhs(p: &ExpSumParams, window: &PrimeWindow, budget: u64) -> Result<ExpSumReport> {
    let mut plain = p.clone();
    plain.pattern = None;
    let exponents = plain.exponents();
    evaluate(SumKind::Lemma1, &plain, window, &exponents, budget)
}

/// `sum_{l<=L} |sum_{q_i in P} e(l q_1^{r_1}...q_m^{r_m} a/q)|`.
pub fn lemma2_lhs(p: &ExpSumParams, window: &PrimeWindow, budget: u64) -> Result<ExpSumReport> {
    let exponents = p
        .pattern
        .clone()
        .ok_or_else(|| Error::InvalidInput("lemma2 sums need an exponent pattern".into()))?;
    evaluate(SumKind::Lemma2, p, window, &exponents, budget)
}

/// Which lower count of distinct products the threshold subtracts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ThresholdForm {
    /// `(|P|^n - n^2 |P|^{n-1}) / 6`
    #[default]
    NSquared,
    /// `(|P|^n - C(n,2) |P|^{n-1}) / 6`
    Binomial,
}

impl ThresholdForm {
    pub fn threshold(self, size: usize, n: u32) -> f64 {
        let p = size as f64;
        let nf = n as f64;
        let coeff = match self {
            ThresholdForm::NSquared => nf * nf,
            ThresholdForm::Binomial => nf * (nf - 1.0) / 2.0,
        };
        (p.powf(nf) - coeff * p.powf(nf - 1.0)) / 6.0
    }
}

/// The distinct-tuple sum together with the level it has to stay under for
/// the pigeonhole step to go through.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistinctSumReport {
    pub lhs: f64,
    pub threshold: f64,
    pub threshold_form: ThresholdForm,
    /// `lhs <= threshold`.
    pub s_holds: bool,
    /// `L * |P| (|P|-1) ... (|P|-n+1)`.
    pub term_count: u128,
    pub float_error_bound: f64,
    pub a: i64,
    pub q: u64,
    pub n: u32,
    #[serde(rename = "L")]
    pub big_l: u64,
    #[serde(rename = "N")]
    pub big_n: u64,
}

/// Residue histogram of `a * q_1 ... q_n` over pairwise-distinct tuples from
/// the window, assembled from the Möbius-weighted restricted histograms
/// (one per partition shape, exponent pattern = block sizes).
pub fn distinct_histogram(window: &PrimeWindow, n: u32, a: i64, q: u64) -> Result<Vec<u128>> {
    let weights = shape_weights(n as usize)?;
    let mut signed = vec![0i128; q as usize];
    for (shape, w) in &weights {
        if *w == 0 {
            continue;
        }
        let pattern: Vec<u32> = shape.iter().map(|&s| s as u32).collect();
        let hist = product_residue_histogram(window, &pattern, a, q)?;
        for (slot, &c) in signed.iter_mut().zip(&hist.counts) {
            let c = i128::try_from(c).map_err(|_| Error::Overflow("distinct histogram"))?;
            let term = c
                .checked_mul(*w as i128)
                .ok_or(Error::Overflow("distinct histogram"))?;
            *slot = slot
                .checked_add(term)
                .ok_or(Error::Overflow("distinct histogram"))?;
        }
    }
    signed
        .into_iter()
        .map(|c| u128::try_from(c).map_err(|_| Error::Overflow("negative distinct count")))
        .collect()
}

/// `sum_{l<=L} |sum_{distinct q_i in P} e(l q_1...q_n a/q)|`.
pub fn distinct_sum_s(
    a: i64,
    q: u64,
    n: u32,
    big_l: u64,
    window: &PrimeWindow,
    form: ThresholdForm,
    budget: u64,
) -> Result<DistinctSumReport> {
    ExpSumParams::new(a, q, n, 0, big_l, window.n.max(1)).check()?;
    if window.is_empty() {
        return Err(Error::EmptyWindow(window.n));
    }
    let shapes = crate::partition::bell(n as usize).min(64);
    let work = histogram_work(window, n as usize, q, big_l).saturating_mul(shapes);
    check_budget(work, budget)?;
    let counts = distinct_histogram(window, n, a, q)?;
    let total: u128 = counts.iter().sum();
    let weights: Vec<(u64, f64)> = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(r, &c)| (r as u64, c as f64))
        .collect();
    let lhs = abs_sum_over_l(q, &weights, big_l);
    let threshold = form.threshold(window.len(), n);
    Ok(DistinctSumReport {
        lhs,
        threshold,
        threshold_form: form,
        s_holds: lhs <= threshold,
        term_count: total
            .checked_mul(big_l as u128)
            .ok_or(Error::Overflow("term count"))?,
        float_error_bound: float_error(big_l, total as f64, q),
        a,
        q,
        n,
        big_l,
        big_n: window.n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::DEFAULT_WORK_BUDGET;
    use crate::primes::sieve_window;

    fn window(primes: &[u64]) -> PrimeWindow {
        PrimeWindow {
            n: *primes.last().unwrap(),
            excluded_modulus: 1,
            primes: primes.to_vec(),
        }
    }

    const B: u64 = DEFAULT_WORK_BUDGET;

    #[test]
    fn single_prime_gives_l() {
        let w = window(&[7]);
        let r = lemma1_lhs(&ExpSumParams::new(3, 11, 1, 0, 9, 7), &w, B).unwrap();
        assert!((r.lhs - 9.0).abs() < 1e-9);
        assert_eq!(r.term_count, 9);
    }

    #[test]
    fn pair_mod_three() {
        let w = window(&[5, 7]);
        let r = lemma1_lhs(&ExpSumParams::new(1, 3, 2, 0, 1, 7), &w, B).unwrap();
        assert!((r.lhs - 2.0).abs() < 1e-12);
    }

    #[test]
    fn trivial_modulus() {
        let w = sieve_window(60, 1).unwrap();
        let r = lemma1_lhs(&ExpSumParams::new(0, 1, 3, 1, 4, 60), &w, B).unwrap();
        assert_eq!(r.lhs, 4.0 * (w.len() as f64).powi(3));
        let r = lemma2_lhs(
            &ExpSumParams::new(0, 1, 3, 1, 4, 60).with_pattern(vec![2, 1]),
            &w,
            B,
        )
        .unwrap();
        assert_eq!(r.lhs, 4.0 * (w.len() as f64).powi(2));
        let d = distinct_sum_s(0, 1, 3, 4, &w, ThresholdForm::NSquared, B).unwrap();
        let s = w.len() as f64;
        assert_eq!(d.lhs, 4.0 * s * (s - 1.0) * (s - 2.0));
    }

    #[test]
    fn all_ones_pattern_matches_lemma1() {
        let w = sieve_window(80, 1).unwrap();
        let p = ExpSumParams::new(5, 97, 3, 1, 20, 80);
        let a = lemma1_lhs(&p, &w, B).unwrap();
        let b = lemma2_lhs(&p.clone().with_pattern(vec![1, 1, 1]), &w, B).unwrap();
        assert_eq!(a.lhs.to_bits(), b.lhs.to_bits());
    }

    #[test]
    fn distinct_pair_mod_three() {
        let w = window(&[5, 7]);
        let d = distinct_sum_s(1, 3, 2, 1, &w, ThresholdForm::NSquared, B).unwrap();
        assert!((d.lhs - 2.0).abs() < 1e-12);
        assert_eq!(d.term_count, 2);
        let one = distinct_sum_s(4, 13, 1, 5, &w, ThresholdForm::NSquared, B).unwrap();
        let plain = lemma1_lhs(&ExpSumParams::new(4, 13, 1, 0, 5, 7), &w, B).unwrap();
        assert!((one.lhs - plain.lhs).abs() < 1e-12);
    }

    #[test]
    fn thresholds() {
        assert_eq!(
            ThresholdForm::NSquared.threshold(10, 2),
            (100.0 - 40.0) / 6.0
        );
        assert_eq!(
            ThresholdForm::Binomial.threshold(10, 2),
            (100.0 - 10.0) / 6.0
        );
    }

    #[test]
    fn majorant_formula() {
        // n=2, k=1, L=10, N=40, q=50: 2^3 * 4 * max(10 * 40^{1.5}, 10 * 1600 / sqrt 50)
        let expect = 32.0 * f64::max(10.0 * 40f64.powf(1.5), 16000.0 / 50f64.sqrt());
        assert!((lemma_majorant(2, 1, 10, 40, 50) - expect).abs() < 1e-6 * expect);
    }

    #[test]
    fn errors() {
        let w = window(&[5, 7]);
        let empty = PrimeWindow {
            n: 10,
            excluded_modulus: 35,
            primes: vec![],
        };
        assert!(matches!(
            lemma1_lhs(&ExpSumParams::new(1, 3, 2, 0, 1, 10), &empty, B),
            Err(Error::EmptyWindow(10))
        ));
        assert!(lemma2_lhs(&ExpSumParams::new(1, 3, 2, 0, 1, 10), &w, B).is_err());
        assert!(matches!(
            lemma1_lhs(&ExpSumParams::new(1, 1_000_003, 2, 0, 1_000, 10), &w, 1000),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}

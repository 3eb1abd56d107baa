use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;

/// Finite simple continued fraction of a rational, with its convergents.
///
/// The expansion is canonical: when there are at least two partial
/// quotients the last one is at least 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContinuedFraction {
    pub partial_quotients: Vec<BigInt>,
    pub convergents: Vec<Rational>,
}

pub fn continued_fraction(x: &Rational) -> ContinuedFraction {
    let mut quotients = Vec::new();
    let mut num = x.numer().clone();
    let mut den = x.denom().clone();
    while !den.is_zero() {
        let (q, r) = num.div_mod_floor(&den);
        quotients.push(q);
        num = std::mem::replace(&mut den, r);
    }
    let convergents = convergents_of(&quotients);
    ContinuedFraction {
        partial_quotients: quotients,
        convergents,
    }
}

/// Convergents `p_k / q_k` from the standard recurrence
/// `p_k = a_k p_{k-1} + p_{k-2}`, `q_k = a_k q_{k-1} + q_{k-2}`.
pub fn convergents_of(quotients: &[BigInt]) -> Vec<Rational> {
    let (mut p_prev, mut p) = (BigInt::zero(), BigInt::one());
    let (mut q_prev, mut q) = (BigInt::one(), BigInt::zero());
    let mut out = Vec::with_capacity(quotients.len());
    for a in quotients {
        let p_next = a * &p + &p_prev;
        let q_next = a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
        out.push(
            Rational::new(p.clone(), q.clone()).expect("convergent denominators are positive"),
        );
    }
    out
}

/// The convergent of `alpha` with the largest denominator not exceeding
/// `max_den`. Returns `(a, q)` with `gcd(a, q) = 1`.
pub fn best_single_approx(alpha: &Rational, max_den: &BigInt) -> (BigInt, BigInt) {
    assert!(
        *max_den >= BigInt::one(),
        "best_single_approx needs max_den >= 1"
    );
    let cf = continued_fraction(alpha);
    let best = cf
        .convergents
        .iter()
        .take_while(|c| c.denom() <= max_den)
        .last()
        .expect("the first convergent has denominator 1");
    (best.numer().clone(), best.denom().clone())
}

//! Named real constants as continued-fraction sources, and the `alpha`
//! text format used on the command line.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{continued_fraction, convergents_of, Rational};
use crate::error::{Error, Result};

/// Convergents are generated until the denominator passes this many digits.
const MAX_DIGITS: usize = 2000;

fn patterned_quotients(name: &str, count: usize) -> Option<Vec<BigInt>> {
    let q = |i: usize| -> i64 {
        match name {
            "golden" => 1,
            "sqrt2" => {
                if i == 0 {
                    1
                } else {
                    2
                }
            }
            // e = [2; 1, 2, 1, 1, 4, 1, 1, 6, ...]
            "e" => {
                if i == 0 {
                    2
                } else if i % 3 == 2 {
                    2 * (i as i64 + 1) / 3
                } else {
                    1
                }
            }
            _ => unreachable!(),
        }
    };
    matches!(name, "golden" | "sqrt2" | "e")
        .then(|| (0..count).map(|i| BigInt::from(q(i))).collect())
}

fn arctan_inv(x: u64, scale: &BigInt) -> BigInt {
    // sum_k (-1)^k scale / ((2k+1) x^{2k+1}), each term floored
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut power = scale / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k = 0u64;
    while !power.is_zero() {
        let term = &power / BigInt::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    sum
}

/// Partial quotients of pi that are certain at `digits` decimal digits of
/// precision: pi is bracketed by Machin's formula and only the quotients
/// shared by both bracket ends (minus the last) are kept.
fn pi_quotients(digits: u32) -> Vec<BigInt> {
    let scale = BigInt::from(10).pow(digits);
    let pi = arctan_inv(5, &scale) * 16 - arctan_inv(239, &scale) * 4;
    let slack = BigInt::from(4 * digits as u64 + 64);
    let lo = continued_fraction(&Rational::new(&pi - &slack, scale.clone()).expect("nonzero"));
    let hi = continued_fraction(&Rational::new(&pi + &slack, scale).expect("nonzero"));
    let mut common: Vec<BigInt> = lo
        .partial_quotients
        .iter()
        .zip(&hi.partial_quotients)
        .take_while(|(a, b)| a == b)
        .map(|(a, _)| a.clone())
        .collect();
    common.pop();
    common
}

/// First convergent of the named constant whose denominator is at least
/// `min_den`. Names: `golden`, `sqrt2`, `e`, `pi`.
pub fn named_convergent(name: &str, min_den: &BigInt) -> Result<Rational> {
    let digits = min_den.to_string().len();
    if digits > MAX_DIGITS {
        return Err(Error::InvalidInput(format!(
            "min denominator {min_den} too large"
        )));
    }
    let quotients = match name {
        "pi" => pi_quotients((2 * digits + 40) as u32),
        // each quotient at least doubles the denominator every two steps
        _ => patterned_quotients(name, 6 * digits + 10)
            .ok_or_else(|| Error::UnknownConstant(name.to_string()))?,
    };
    convergents_of(&quotients)
        .into_iter()
        .find(|c| c.denom() >= min_den)
        .ok_or_else(|| {
            Error::InvalidInput(format!(
                "no certified convergent of {name} reaches {min_den}"
            ))
        })
}

/// `p/q`, an integer, or `convergent:<name>:<min_denominator>`.
pub fn parse_alpha(spec: &str) -> Result<Rational> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("convergent:") {
        let (name, min) = rest
            .split_once(':')
            .ok_or_else(|| Error::Parse(spec.to_string()))?;
        let min_den: BigInt = min
            .trim()
            .parse()
            .map_err(|_| Error::Parse(spec.to_string()))?;
        if min_den < BigInt::one() {
            return Err(Error::Parse(spec.to_string()));
        }
        return named_convergent(name.trim(), &min_den);
    }
    spec.parse()
}

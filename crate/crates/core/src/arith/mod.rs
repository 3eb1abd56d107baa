//! Exact arithmetic substrate: rationals, continued fractions, CRT partial
//! fractions and exact rational powers of integers.

mod cf;
mod crt;
mod power;
mod rational;

pub use cf::{best_single_approx, continued_fraction, convergents_of, ContinuedFraction};
pub use crt::{crt_partial_fractions, mod_inverse, PartialFractionDecomposition};
pub use power::{
    ceil_scaled_pow, floor_scaled_pow, pow_lower_bound, pow_upper_bound, scaled_pow_cmp_one,
};
pub use rational::Rational;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

/// `||x||` for an exact rational.
pub fn dist_nearest_int(x: &Rational) -> Rational {
    x.dist_nearest_int()
}

/// Natural logarithm of an arbitrary-size positive integer.
pub fn ln_bigint(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return n.to_f64().map(f64::ln).unwrap_or(f64::INFINITY);
    }
    let shift = bits - 64;
    let top = (n >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Serializes through `Display`, e.g. big integers as decimal strings.
pub fn serialize_display<T: std::fmt::Display, S: serde::Serializer>(
    x: &T,
    s: S,
) -> Result<S::Ok, S::Error> {
    s.collect_str(x)
}

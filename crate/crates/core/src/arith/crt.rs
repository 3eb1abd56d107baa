use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// `integer_part + sum(a_i / q_i)` with `0 <= a_i < q_i` and pairwise
/// coprime `q_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFractionDecomposition {
    pub integer_part: BigInt,
    /// `(a_i, q_i)` in the order the denominators were given.
    pub terms: Vec<(u64, u64)>,
}

impl PartialFractionDecomposition {
    pub fn recompose(&self) -> Rational {
        self.terms.iter().fold(
            Rational::from_integer(self.integer_part.clone()),
            |acc, &(a, q)| acc + Rational::new(a, q).expect("denominators are >= 1"),
        )
    }
}

/// Inverse of `x` modulo `m`, or `None` when `gcd(x, m) != 1`.
pub fn mod_inverse(x: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = x.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Split `b / (q_1 ... q_n)` into an integer plus `sum(a_i / q_i)`.
///
/// Each `a_i = b * (M/q_i)^{-1} mod q_i` with `M = prod q_i`; the integer
/// part absorbs the rest.
pub fn crt_partial_fractions(b: &BigInt, denoms: &[u64]) -> Result<PartialFractionDecomposition> {
    if denoms.contains(&0) {
        return Err(Error::InvalidInput("denominators must be >= 1".into()));
    }
    for (i, &x) in denoms.iter().enumerate() {
        for &y in &denoms[i + 1..] {
            if x.gcd(&y) != 1 {
                return Err(Error::NotCoprime(x.to_string(), y.to_string()));
            }
        }
    }
    let modulus: BigInt = denoms.iter().map(|&q| BigInt::from(q)).product();
    let mut terms = Vec::with_capacity(denoms.len());
    let mut covered = BigInt::zero();
    for &q in denoms {
        let qb = BigInt::from(q);
        let cofactor = &modulus / &qb;
        let inv = mod_inverse(&cofactor, &qb).expect("pairwise coprime");
        let a = (b * inv).mod_floor(&qb);
        covered += &a * &cofactor;
        terms.push((u64::try_from(&a).expect("a < q fits u64"), q));
    }
    let (integer_part, rem) = (b - covered).div_rem(&modulus);
    debug_assert!(rem.is_zero());
    Ok(PartialFractionDecomposition {
        integer_part,
        terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn one_over_fifteen() {
        let d = crt_partial_fractions(&BigInt::from(1), &[3, 5]).unwrap();
        assert_eq!(d.integer_part, BigInt::from(-1));
        assert_eq!(d.terms, vec![(2, 3), (2, 5)]);
    }

    #[test]
    fn zero_numerator() {
        let d = crt_partial_fractions(&BigInt::zero(), &[3, 5]).unwrap();
        assert_eq!(d.integer_part, BigInt::zero());
        assert_eq!(d.terms, vec![(0, 3), (0, 5)]);
    }

    #[test]
    fn seven_thirtieths() {
        let d = crt_partial_fractions(&BigInt::from(7), &[2, 3, 5]).unwrap();
        // 15 a1 + 10 a2 + 6 a3 = 7 (mod 30): a1 = 1, a2 = 1, a3 = 2 -> 15+10+12 = 37
        assert_eq!(d.terms, vec![(1, 2), (1, 3), (2, 5)]);
        assert_eq!(d.integer_part, BigInt::from(-1));
        assert_eq!(d.recompose(), Rational::new(7, 30).unwrap());
    }

    #[test]
    fn rejects_common_factors() {
        assert!(matches!(
            crt_partial_fractions(&BigInt::one(), &[6, 9]),
            Err(Error::NotCoprime(_, _))
        ));
        assert!(crt_partial_fractions(&BigInt::one(), &[0, 3]).is_err());
    }

    #[test]
    fn unit_denominator_is_allowed() {
        let d = crt_partial_fractions(&BigInt::from(11), &[1, 4]).unwrap();
        assert_eq!(d.terms, vec![(0, 1), (3, 4)]);
        assert_eq!(d.recompose(), Rational::new(11, 4).unwrap());
    }

    fn coprime_set() -> impl Strategy<Value = Vec<u64>> {
        prop::collection::vec(1u64..200, 1..5).prop_map(|mut v| {
            let mut out: Vec<u64> = Vec::new();
            v.sort_unstable();
            for x in v {
                if out.iter().all(|&y| y.gcd(&x) == 1) {
                    out.push(x);
                }
            }
            out
        })
    }

    proptest! {
        #[test]
        fn recomposes_exactly(b in -1_000_000i64..1_000_000, denoms in coprime_set()) {
            let d = crt_partial_fractions(&BigInt::from(b), &denoms).unwrap();
            let m: u64 = denoms.iter().product();
            prop_assert_eq!(d.recompose(), Rational::new(b, m).unwrap());
            for &(a, q) in &d.terms {
                prop_assert!(a < q);
            }
        }
    }
}

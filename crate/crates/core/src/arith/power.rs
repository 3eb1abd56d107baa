//! Exact comparisons against `N^e` for rational exponents `e = s/t`.
//!
//! Every routine raises both sides to the `t`-th power so only integer
//! arithmetic and integer root extraction are involved.

use std::cmp::Ordering;

use num_bigint::BigInt;

use super::Rational;
use crate::error::{Error, Result};

fn split(e: &Rational) -> Result<(i32, u32)> {
    let s = i32::try_from(e.numer()).map_err(|_| Error::Overflow("exponent numerator"))?;
    let t = u32::try_from(e.denom()).map_err(|_| Error::Overflow("exponent denominator"))?;
    Ok((s, t))
}

/// `coef^t * N^s` as an exact rational.
fn raised(coef: &Rational, base: u64, s: i32, t: u32) -> Rational {
    let c = coef.pow(t as i32);
    let b = Rational::from_integer(base).pow(s);
    c * b
}

fn nonneg(coef: &Rational) -> Result<()> {
    if coef.is_negative() {
        Err(Error::InvalidInput(format!(
            "coefficient {coef} must be >= 0"
        )))
    } else {
        Ok(())
    }
}

/// `floor(coef * N^e)` for `coef >= 0`, `N >= 1`.
pub fn floor_scaled_pow(coef: &Rational, base: u64, e: &Rational) -> Result<BigInt> {
    nonneg(coef)?;
    if base == 0 {
        return Err(Error::InvalidInput("power base must be >= 1".into()));
    }
    let (s, t) = split(e)?;
    let x = raised(coef, base, s, t);
    let fl = x.floor().to_biguint().expect("non-negative");
    Ok(BigInt::from(fl.nth_root(t)))
}

/// `ceil(coef * N^e)` for `coef >= 0`, `N >= 1`.
pub fn ceil_scaled_pow(coef: &Rational, base: u64, e: &Rational) -> Result<BigInt> {
    let fl = floor_scaled_pow(coef, base, e)?;
    let (s, t) = split(e)?;
    let x = raised(coef, base, s, t);
    let exact = x.is_integer() && BigInt::from(fl.magnitude().pow(t)) == *x.numer();
    Ok(if exact { fl } else { fl + 1 })
}

/// Exact sign of `coef * N^e - 1`, for `coef >= 0`.
pub fn scaled_pow_cmp_one(coef: &Rational, base: u64, e: &Rational) -> Result<Ordering> {
    nonneg(coef)?;
    let (s, t) = split(e)?;
    Ok(raised(coef, base, s, t).cmp(&Rational::one()))
}

/// A rational `u >= N^e`, tight: `ceil(N^e)` for `e >= 0`,
/// `1 / floor(N^{-e})` otherwise.
pub fn pow_upper_bound(base: u64, e: &Rational) -> Result<Rational> {
    if !e.is_negative() {
        Ok(Rational::from_integer(ceil_scaled_pow(
            &Rational::one(),
            base,
            e,
        )?))
    } else {
        let fl = floor_scaled_pow(&Rational::one(), base, &-e)?;
        Rational::new(1, fl)
    }
}

/// A rational `l <= N^e`, tight in the same sense as [`pow_upper_bound`].
pub fn pow_lower_bound(base: u64, e: &Rational) -> Result<Rational> {
    if !e.is_negative() {
        Ok(Rational::from_integer(floor_scaled_pow(
            &Rational::one(),
            base,
            e,
        )?))
    } else {
        let cl = ceil_scaled_pow(&Rational::one(), base, &-e)?;
        Rational::new(1, cl)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn floors_and_ceils() {
        assert_eq!(
            floor_scaled_pow(&r("300"), 100, &r("-1/2")).unwrap(),
            BigInt::from(30)
        );
        assert_eq!(
            ceil_scaled_pow(&r("300"), 100, &r("-1/2")).unwrap(),
            BigInt::from(30)
        );
        assert_eq!(
            floor_scaled_pow(&r("5"), 100, &r("-1")).unwrap(),
            BigInt::from(0)
        );
        assert_eq!(
            ceil_scaled_pow(&r("5"), 100, &r("-1")).unwrap(),
            BigInt::from(1)
        );
        // 2^{1/2} = 1.414...
        assert_eq!(
            floor_scaled_pow(&r("1"), 2, &r("1/2")).unwrap(),
            BigInt::from(1)
        );
        assert_eq!(
            ceil_scaled_pow(&r("1"), 2, &r("1/2")).unwrap(),
            BigInt::from(2)
        );
        // 1000 * 10^{5/4} = 17782.79...
        assert_eq!(
            floor_scaled_pow(&r("1000"), 10, &r("5/4")).unwrap(),
            BigInt::from(17782)
        );
        assert_eq!(
            floor_scaled_pow(&r("0"), 10, &r("5/4")).unwrap(),
            BigInt::from(0)
        );
    }

    #[test]
    fn matches_float_on_a_grid() {
        for base in [2u64, 3, 10, 40, 97] {
            for num in -8i32..=16 {
                for den in [1u32, 2, 3, 4, 8] {
                    let e = Rational::new(num, den).unwrap();
                    let v = (base as f64).powf(num as f64 / den as f64);
                    let lo = pow_lower_bound(base, &e).unwrap().to_f64();
                    let hi = pow_upper_bound(base, &e).unwrap().to_f64();
                    assert!(
                        lo <= v * (1.0 + 1e-12) && v <= hi * (1.0 + 1e-12),
                        "{base}^{e}: {lo} {v} {hi}"
                    );
                    if num >= 0 {
                        assert!(hi - lo <= 1.0);
                    }
                }
            }
        }
    }

    #[test]
    fn compare_with_one() {
        // (1/10) * 100^{1/2} = 1
        assert_eq!(
            scaled_pow_cmp_one(&r("1/10"), 100, &r("1/2")).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            scaled_pow_cmp_one(&r("1/11"), 100, &r("1/2")).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            scaled_pow_cmp_one(&r("1/9"), 100, &r("1/2")).unwrap(),
            Ordering::Greater
        );
        assert!(scaled_pow_cmp_one(&r("-1"), 100, &r("1/2")).is_err());
    }
}

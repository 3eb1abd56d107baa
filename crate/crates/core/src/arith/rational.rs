use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always kept in reduced form with a positive
/// denominator. The sign lives on the numerator.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    /// `1 / d` for a nonzero integer `d`.
    pub fn unit_fraction(d: impl Into<BigInt>) -> Result<Self> {
        Rational::new(1, d)
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn floor(&self) -> BigInt {
        self.numer().div_floor(self.denom())
    }

    pub fn ceil(&self) -> BigInt {
        -((-self.numer()).div_floor(self.denom()))
    }

    /// Nearest integer, ties going to the even neighbour.
    pub fn round_half_even(&self) -> BigInt {
        let fl = self.floor();
        let frac2: BigInt = (self.numer() - &fl * self.denom()) * 2u32;
        match frac2.cmp(self.denom()) {
            Ordering::Less => fl,
            Ordering::Greater => fl + 1u32,
            Ordering::Equal => {
                if fl.is_even() {
                    fl
                } else {
                    fl + 1u32
                }
            }
        }
    }

    /// Distance to the nearest integer, `||x||`, in `[0, 1/2]`.
    pub fn dist_nearest_int(&self) -> Rational {
        let den = self.denom();
        let r = self.numer().mod_floor(den);
        let other = den - &r;
        let near = if r <= other { r } else { other };
        Rational(BigRational::new(near, den.clone()))
    }

    pub fn pow(&self, exp: i32) -> Rational {
        Rational(num_traits::Pow::pow(&self.0, exp))
    }

    /// Approximate value. Never used on a certificate path.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            // Both parts overflow f64; scale through logarithms.
            let ln = crate::arith::ln_bigint(self.numer().magnitude())
                - crate::arith::ln_bigint(self.denom().magnitude());
            let v = ln.exp();
            if self.is_negative() {
                -v
            } else {
                v
            }
        })
    }

    pub fn as_big_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_parts(self) -> (BigInt, BigInt) {
        self.0.into_raw()
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_integer(n)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl From<u64> for Rational {
    fn from(n: u64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
// Division by zero panics, like integer division; use `recip` for a checked path.
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom().is_one() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Accepts `p/q` or a plain integer `p`, with an optional leading minus.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            let t = t.trim();
            let digits = t
                .strip_prefix('-')
                .or_else(|| t.strip_prefix('+'))
                .unwrap_or(t);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse(s.to_string()));
            }
            t.parse::<BigInt>().map_err(|_| Error::Parse(s.to_string()))
        };
        match s.split_once('/') {
            Some((p, q)) => Rational::new(parse_int(p)?, parse_int(q)?),
            None => Ok(Rational::from_integer(parse_int(s)?)),
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn construction_reduces() {
        assert_eq!(Rational::new(6, 15).unwrap(), r("2/5"));
        let neg = Rational::new(3, -6).unwrap();
        assert_eq!(neg.to_string(), "-1/2");
        assert_eq!(Rational::new(0, 7).unwrap().to_string(), "0");
        assert_eq!(*Rational::new(0, 7).unwrap().denom(), BigInt::one());
        assert_eq!(Rational::new(1, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn nearest_integer_distance() {
        assert_eq!(r("7/15").dist_nearest_int(), r("7/15"));
        assert_eq!(r("19/15").dist_nearest_int(), r("4/15"));
        assert_eq!(r("1/2").dist_nearest_int(), r("1/2"));
        assert_eq!(r("-1/3").dist_nearest_int(), r("1/3"));
        assert_eq!(r("5").dist_nearest_int(), Rational::zero());
    }

    #[test]
    fn rounding_ties_to_even() {
        assert_eq!(r("7/2").round_half_even(), BigInt::from(4));
        assert_eq!(r("5/2").round_half_even(), BigInt::from(2));
        assert_eq!(r("-5/2").round_half_even(), BigInt::from(-2));
        assert_eq!(r("-7/3").round_half_even(), BigInt::from(-2));
        assert_eq!(r("8/3").round_half_even(), BigInt::from(3));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "1/", "/2", "a/b", "1/2/3", "--1", "1.5", "3/0"] {
            assert!(bad.parse::<Rational>().is_err(), "{bad:?} parsed");
        }
        assert_eq!(r("-12"), Rational::from_integer(-12));
        assert_eq!(r(" 4/-8 "), r("-1/2"));
    }

    #[test]
    fn serde_uses_text_form() {
        let json = serde_json::to_string(&r("-3/9")).unwrap();
        assert_eq!(json, "\"-1/3\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r("-1/3"));
    }

    #[test]
    fn huge_values_still_convert() {
        let big = Rational::new(
            BigInt::from(10).pow(400u32) * 3,
            BigInt::from(10).pow(400u32),
        )
        .unwrap();
        assert!((big.to_f64() - 3.0).abs() < 1e-12);
        let huge = Rational::new(BigInt::from(10).pow(500u32), BigInt::from(7)).unwrap();
        assert!(huge.to_f64().is_infinite() || huge.to_f64() > 1e300);
    }
}

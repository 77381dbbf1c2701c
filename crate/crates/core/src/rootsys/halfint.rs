//! Exact half-integer scalar, stored as twice its value.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A scalar in (1/2)Z. All arithmetic is exact integer arithmetic on
/// `twice`, so there is no rounding anywhere.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };

    /// The half-integer `twice / 2`.
    pub fn from_twice(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub fn from_int(value: i64) -> Self {
        HalfInt { twice: 2 * value }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn is_negative(self) -> bool {
        self.twice < 0
    }

    pub fn to_rational(self) -> Rational64 {
        Rational64::new(self.twice, 2)
    }
}

impl From<HalfInt> for Rational64 {
    fn from(h: HalfInt) -> Rational64 {
        h.to_rational()
    }
}

impl TryFrom<Rational64> for HalfInt {
    type Error = Error;

    fn try_from(r: Rational64) -> Result<Self, Error> {
        let doubled = r * Rational64::from_integer(2);
        if doubled.is_integer() {
            Ok(HalfInt::from_twice(doubled.to_integer()))
        } else {
            Err(Error::NotHalfInt(r.to_string()))
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl Mul<i64> for HalfInt {
    type Output = HalfInt;
    fn mul(self, rhs: i64) -> HalfInt {
        HalfInt::from_twice(self.twice * rhs)
    }
}

impl Sum for HalfInt {
    fn sum<I: Iterator<Item = HalfInt>>(iter: I) -> HalfInt {
        iter.fold(HalfInt::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts integer literals ("3", "-2") and halves ("p/2").
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        match s.split_once('/') {
            None => {
                let v: i64 = s
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad half-integer literal {s:?}")))?;
                Ok(HalfInt::from_int(v))
            }
            Some((num, den)) => {
                let num: i64 = num
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad half-integer literal {s:?}")))?;
                let den: i64 = den
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad half-integer literal {s:?}")))?;
                if den == 0 {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                HalfInt::try_from(Rational64::new(num, den))
            }
        }
    }
}

//! Weights on the Cartan subalgebra in epsilon coordinates.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::Zero;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rootsys::HalfInt;

/// A weight `sum_i c_i eps_i` with exact rational coordinates.
///
/// Coordinates are general rationals rather than half-integers because the
/// restriction to the semisimple Levi block introduces denominators dividing
/// `2k`. Weights that happen to be half-integral serialize coordinate-wise as
/// `{"twice": N}`; other coordinates fall back to `{"num": p, "den": q}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    coords: Vec<Rational64>,
}

impl Weight {
    pub fn new(coords: Vec<Rational64>) -> Self {
        Weight { coords }
    }

    pub fn zero(n: usize) -> Self {
        Weight {
            coords: vec![Rational64::zero(); n],
        }
    }

    pub fn from_half_ints(coords: &[HalfInt]) -> Self {
        Weight {
            coords: coords.iter().map(|&h| h.into()).collect(),
        }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight {
            coords: coords.iter().map(|&c| Rational64::from_integer(c)).collect(),
        }
    }

    /// Standard basis vector `eps_label` (1-based) in rank `n`.
    pub fn epsilon(label: usize, n: usize) -> Self {
        debug_assert!(1 <= label && label <= n);
        let mut w = Weight::zero(n);
        w.coords[label - 1] = Rational64::from_integer(1);
        w
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Rational64] {
        &self.coords
    }

    /// 1-based coordinate access, matching the indexing used everywhere in
    /// the documentation.
    pub fn coord(&self, label: usize) -> Rational64 {
        self.coords[label - 1]
    }

    pub fn set_coord(&mut self, label: usize, value: Rational64) {
        self.coords[label - 1] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// All coordinates half-integral?
    pub fn is_half_integral(&self) -> bool {
        self.coords.iter().all(|c| (*c * 2).is_integer())
    }

    pub fn to_half_ints(&self) -> Result<Vec<HalfInt>> {
        self.coords.iter().map(|&c| HalfInt::try_from(c)).collect()
    }

    pub fn check_len(&self, expected: usize) -> Result<()> {
        if self.len() == expected {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected,
                got: self.len(),
            })
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight::new(
            self.coords
                .iter()
                .zip(&rhs.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(self.coords.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoordRepr {
    Half { twice: i64 },
    Ratio { num: i64, den: i64 },
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let reprs: Vec<CoordRepr> = self
            .coords
            .iter()
            .map(|c| {
                let doubled = c * 2;
                if doubled.is_integer() {
                    CoordRepr::Half {
                        twice: doubled.to_integer(),
                    }
                } else {
                    CoordRepr::Ratio {
                        num: *c.numer(),
                        den: *c.denom(),
                    }
                }
            })
            .collect();
        reprs.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let reprs = Vec::<CoordRepr>::deserialize(deserializer)?;
        let coords = reprs
            .into_iter()
            .map(|r| match r {
                CoordRepr::Half { twice } => Ok(Rational64::new(twice, 2)),
                CoordRepr::Ratio { num, den } => {
                    if den == 0 {
                        Err(D::Error::custom("zero denominator in weight coordinate"))
                    } else {
                        Ok(Rational64::new(num, den))
                    }
                }
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Weight::new(coords))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = Weight::from_ints(&[1, 2, 3]);
        let b = Weight::from_half_ints(&[
            HalfInt::from_twice(1),
            HalfInt::from_twice(-1),
            HalfInt::ZERO,
        ]);
        let s = &a + &b;
        assert_eq!(s.coord(1), Rational64::new(3, 2));
        assert_eq!(s.coord(2), Rational64::new(3, 2));
        assert_eq!((&s - &a), b);
        assert_eq!((-&a).coord(3), Rational64::from_integer(-3));
    }

    #[test]
    fn json_half_integral() {
        let w = Weight::from_half_ints(&[HalfInt::ZERO, HalfInt::from_twice(2)]);
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"[{"twice":0},{"twice":2}]"#);
        let back: Weight = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn json_general_rational() {
        let w = Weight::new(vec![Rational64::new(2, 3), Rational64::new(-1, 3)]);
        let json = serde_json::to_string(&w).unwrap();
        assert_eq!(json, r#"[{"num":2,"den":3},{"num":-1,"den":3}]"#);
        let back: Weight = serde_json::from_str(&json).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn display() {
        let w = Weight::new(vec![Rational64::new(1, 2), Rational64::from_integer(-3)]);
        assert_eq!(w.to_string(), "(1/2, -3)");
    }
}

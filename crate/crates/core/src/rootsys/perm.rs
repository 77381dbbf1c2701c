//! Signed permutations: elements of the Weyl group of type B_n.

use std::fmt;

use crate::error::{Error, Result};
use crate::rootsys::Weight;

/// An element of the hyperoctahedral group, acting on weights by
/// `eps_i -> sign_i * eps_{target_i}`.
///
/// Targets are stored 0-based internally; every public surface (`Display`,
/// serialization, constructors taking labels) speaks 1-based.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    targets: Vec<usize>, // 0-based images
    signs: Vec<i8>,      // +1 or -1
}

impl SignedPermutation {
    /// Build from 1-based target labels and signs.
    pub fn new(targets_1based: &[usize], signs: &[i8]) -> Result<Self> {
        let n = targets_1based.len();
        if signs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: signs.len(),
            });
        }
        let mut seen = vec![false; n];
        for &t in targets_1based {
            if t < 1 || t > n {
                return Err(Error::InvalidPermutation(format!(
                    "target {t} outside 1..={n}"
                )));
            }
            if seen[t - 1] {
                return Err(Error::InvalidPermutation(format!("duplicate target {t}")));
            }
            seen[t - 1] = true;
        }
        if let Some(&s) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidPermutation(format!("sign {s} not in {{+1,-1}}")));
        }
        Ok(SignedPermutation {
            targets: targets_1based.iter().map(|&t| t - 1).collect(),
            signs: signs.to_vec(),
        })
    }

    pub(crate) fn from_parts_unchecked(targets: Vec<usize>, signs: Vec<i8>) -> Self {
        SignedPermutation { targets, signs }
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            targets: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    /// -1 on every coordinate.
    pub fn minus_identity(n: usize) -> Self {
        SignedPermutation {
            targets: (0..n).collect(),
            signs: vec![-1; n],
        }
    }

    pub fn rank(&self) -> usize {
        self.targets.len()
    }

    pub fn is_identity(&self) -> bool {
        self.targets.iter().enumerate().all(|(i, &t)| i == t) && self.signs.iter().all(|&s| s == 1)
    }

    /// 1-based image label of `eps_label`.
    pub fn target(&self, label: usize) -> usize {
        self.targets[label - 1] + 1
    }

    pub fn sign(&self, label: usize) -> i8 {
        self.signs[label - 1]
    }

    /// 1-based targets, for serialization.
    pub fn targets_1based(&self) -> Vec<usize> {
        self.targets.iter().map(|&t| t + 1).collect()
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Group law: `(self * other)` applies `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        if self.rank() != other.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        let n = self.rank();
        let mut targets = vec![0; n];
        let mut signs = vec![1i8; n];
        for i in 0..n {
            let mid = other.targets[i];
            targets[i] = self.targets[mid];
            signs[i] = other.signs[i] * self.signs[mid];
        }
        Ok(SignedPermutation { targets, signs })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.rank();
        let mut targets = vec![0; n];
        let mut signs = vec![1i8; n];
        for i in 0..n {
            targets[self.targets[i]] = i;
            signs[self.targets[i]] = self.signs[i];
        }
        SignedPermutation { targets, signs }
    }

    /// Apply to a weight: the image of `sum_i c_i eps_i` is
    /// `sum_i c_i sign_i eps_{target_i}`.
    pub fn act(&self, beta: &Weight) -> Result<Weight> {
        beta.check_len(self.rank())?;
        let mut out = Weight::zero(self.rank());
        for i in 0..self.rank() {
            let v = beta.coords()[i] * i64::from(self.signs[i]);
            out.set_coord(self.targets[i] + 1, v);
        }
        Ok(out)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rank() {
            if i > 0 {
                write!(f, " ")?;
            }
            let signed = (self.targets[i] as i64 + 1) * i64::from(self.signs[i]);
            write!(f, "{signed}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w_cycle() -> SignedPermutation {
        // eps_1 -> eps_2, eps_2 -> eps_3, eps_3 -> -eps_1
        SignedPermutation::new(&[2, 3, 1], &[1, 1, -1]).unwrap()
    }

    #[test]
    fn identity_acts_trivially() {
        let id = SignedPermutation::identity(3);
        let b = Weight::from_ints(&[1, 2, 3]);
        assert_eq!(id.act(&b).unwrap(), b);
        assert!(id.is_identity());
    }

    #[test]
    fn action_matches_coordinate_bookkeeping() {
        // eps_3 -> -eps_1, eps_1 -> eps_2, eps_2 -> eps_3 applied to rho(3)
        let w = w_cycle();
        let rho = Weight::from_half_ints(&[
            crate::rootsys::HalfInt::from_twice(5),
            crate::rootsys::HalfInt::from_twice(3),
            crate::rootsys::HalfInt::from_twice(1),
        ]);
        let img = w.act(&rho).unwrap();
        assert_eq!(
            img,
            Weight::from_half_ints(&[
                crate::rootsys::HalfInt::from_twice(-1),
                crate::rootsys::HalfInt::from_twice(5),
                crate::rootsys::HalfInt::from_twice(3),
            ])
        );
    }

    #[test]
    fn global_sign_flip() {
        let w = SignedPermutation::minus_identity(2);
        let b = Weight::from_ints(&[4, -7]);
        assert_eq!(w.act(&b).unwrap(), -&b);
    }

    #[test]
    fn compose_and_invert() {
        let w = w_cycle();
        let winv = w.inverse();
        assert!(w.compose(&winv).unwrap().is_identity());
        assert!(winv.compose(&w).unwrap().is_identity());

        let u = SignedPermutation::new(&[1, 3, 2], &[-1, 1, 1]).unwrap();
        let b = Weight::from_ints(&[1, 5, 9]);
        let lhs = w.compose(&u).unwrap().act(&b).unwrap();
        let rhs = w.act(&u.act(&b).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn rejects_garbage() {
        assert!(SignedPermutation::new(&[1, 1], &[1, 1]).is_err());
        assert!(SignedPermutation::new(&[0, 1], &[1, 1]).is_err());
        assert!(SignedPermutation::new(&[1, 2], &[1, 2]).is_err());
        assert!(SignedPermutation::new(&[1, 2], &[1]).is_err());
    }
}

//! Cohomology-degree bookkeeping: the cuspidal degree ranges of the Levi
//! factors, the residual degree rule q' = q + dim N - 2 l(w), and the
//! theorem-level degree windows for residual and regular classes.
//!
//! For reference: degree n is the lowest degree that can carry
//! square-integrable residual classes beyond those of the trivial
//! representation, and the window lower bounds stay at or above it
//! (n <= (n^2+n)/2 - ceil(k/2) for n >= 2, n <= (n^2+n)/2 - k for n >= 3
//! and even k). Whether the lower bounds are attained is open; the windows
//! are necessary ranges, not attained-degree claims.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{dim_nilradical, HalfInt, RankContext};

/// Inclusive range of cohomology degrees.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "DegreeRangeRepr")]
pub struct DegreeRange {
    lo: i64,
    hi: i64,
}

#[derive(Deserialize)]
struct DegreeRangeRepr {
    lo: i64,
    hi: i64,
}

impl TryFrom<DegreeRangeRepr> for DegreeRange {
    type Error = Error;

    fn try_from(r: DegreeRangeRepr) -> Result<Self> {
        DegreeRange::new(r.lo, r.hi)
    }
}

impl DegreeRange {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo < 0 || hi < lo {
            return Err(Error::Precondition(format!(
                "degree range [{lo}, {hi}] must satisfy 0 <= lo <= hi"
            )));
        }
        Ok(DegreeRange { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn contains(&self, q: i64) -> bool {
        self.lo <= q && q <= self.hi
    }

    pub fn shift(&self, by: i64) -> Result<DegreeRange> {
        DegreeRange::new(self.lo + by, self.hi + by)
    }
}

impl fmt::Display for DegreeRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

fn exact_half(value: i64, what: &str) -> i64 {
    assert!(
        value % 2 == 0,
        "{what} must be even before halving, got {value}"
    );
    value / 2
}

/// Degrees in which a cohomological cuspidal representation of GL_k can have
/// non-zero cohomology:
/// (1/2)(k(k-1)/2 + floor(k/2)) <= q <= (1/2)((k-1)(k+4)/2 - floor(k/2)).
pub fn gl_cusp_range(k: usize) -> Result<DegreeRange> {
    if k == 0 {
        return Err(Error::InvalidRank(0));
    }
    let k = k as i64;
    let lo = exact_half(k * (k - 1) / 2 + k / 2, "GL lower degree bound");
    let hi = exact_half((k - 1) * (k + 4) / 2 - k / 2, "GL upper degree bound");
    DegreeRange::new(lo, hi)
}

/// The single degree (l^2 + l)/2 carrying cuspidal cohomology on SO_{2l+1}.
pub fn so_cusp_degree(l: usize) -> i64 {
    let l = l as i64;
    l * (l + 1) / 2
}

/// Kunneth: the GL_k range shifted by the SO_{2l+1} degree.
pub fn levi_cusp_range(ctx: RankContext) -> Result<DegreeRange> {
    gl_cusp_range(ctx.k())?.shift(so_cusp_degree(ctx.l()))
}

/// Degree in which a residue class lands: q' = q + dim N - 2 l(w). The given
/// q already includes the l(w) shift from the Kostant decomposition, so
/// q >= l(w) is required.
pub fn residual_degree(q: i64, ctx: RankContext, lw: i64) -> Result<i64> {
    if lw < 0 || q < lw {
        return Err(Error::Precondition(format!(
            "residual degree rule needs q >= l(w) >= 0, got q = {q}, l(w) = {lw}"
        )));
    }
    Ok(q + dim_nilradical(ctx) as i64 - 2 * lw)
}

/// The theorem window for residual classes:
/// [(n^2+n)/2 - ceil(k/2), (n^2+n)/2 - 1] at t = k/2 (and at the Siegel
/// point t = n/2, where k = n), [(n^2+n)/2 - k, (n^2+n)/2 - 1] at t = k for
/// even k < n.
pub fn residual_window(ctx: RankContext, t: HalfInt) -> Result<DegreeRange> {
    let (n, k) = (ctx.n() as i64, ctx.k() as i64);
    let top = exact_half(n * n + n, "n^2 + n");
    if t == HalfInt::from_twice(k) {
        // covers both k < n and the forced Siegel point t = n/2
        DegreeRange::new(top - (k + 1) / 2, top - 1)
    } else if !ctx.is_siegel() && k % 2 == 0 && t == HalfInt::from_int(k) {
        DegreeRange::new(top - k, top - 1)
    } else {
        Err(Error::UnsupportedEvaluationPoint(t.to_string()))
    }
}

/// Degrees available to a regular (holomorphic-value) class of type (pi, w):
/// the Levi cuspidal range shifted by l(w).
pub fn regular_window(ctx: RankContext, lw: i64) -> Result<DegreeRange> {
    if lw < 0 {
        return Err(Error::Precondition(format!(
            "length must be nonnegative, got {lw}"
        )));
    }
    levi_cusp_range(ctx)?.shift(lw)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, k: usize) -> RankContext {
        RankContext::new(n, k).unwrap()
    }

    fn range(lo: i64, hi: i64) -> DegreeRange {
        DegreeRange::new(lo, hi).unwrap()
    }

    #[test]
    fn gl_ranges() {
        assert_eq!(gl_cusp_range(1).unwrap(), range(0, 0));
        assert_eq!(gl_cusp_range(2).unwrap(), range(1, 1));
        assert_eq!(gl_cusp_range(3).unwrap(), range(2, 3));
        assert!(gl_cusp_range(0).is_err());
    }

    #[test]
    fn so_degrees() {
        assert_eq!(so_cusp_degree(0), 0);
        assert_eq!(so_cusp_degree(2), 3);
        assert_eq!(so_cusp_degree(3), 6);
    }

    #[test]
    fn levi_ranges() {
        assert_eq!(levi_cusp_range(ctx(3, 1)).unwrap(), range(3, 3));
        assert_eq!(levi_cusp_range(ctx(4, 2)).unwrap(), range(4, 4));
        assert_eq!(levi_cusp_range(ctx(5, 3)).unwrap(), range(5, 6));
    }

    #[test]
    fn residual_degrees() {
        assert_eq!(residual_degree(6, ctx(3, 1), 3).unwrap(), 5);
        assert_eq!(
            residual_degree(3, ctx(3, 1), 3).unwrap(),
            dim_nilradical(ctx(3, 1)) as i64 - 3
        );
        // dim N(4,2) = 2*6 - 1 = 11 (brute root count agrees)
        assert_eq!(residual_degree(7, ctx(4, 2), 5).unwrap(), 8);
        assert!(residual_degree(2, ctx(3, 1), 3).is_err());
    }

    #[test]
    fn residual_windows() {
        assert_eq!(
            residual_window(ctx(3, 1), HalfInt::from_twice(1)).unwrap(),
            range(5, 5)
        );
        assert_eq!(
            residual_window(ctx(3, 3), HalfInt::from_twice(3)).unwrap(),
            range(4, 5)
        );
        assert_eq!(
            residual_window(ctx(4, 2), HalfInt::from_int(2)).unwrap(),
            range(8, 9)
        );
        // t = k is not a supported point at the Siegel parabolic
        assert!(residual_window(ctx(4, 4), HalfInt::from_int(4)).is_err());
        assert!(residual_window(ctx(3, 1), HalfInt::from_int(1)).is_err());
    }

    #[test]
    fn regular_windows() {
        assert_eq!(regular_window(ctx(3, 1), 3).unwrap(), range(6, 6));
        assert_eq!(regular_window(ctx(3, 1), 0).unwrap(), range(3, 3));
        assert_eq!(regular_window(ctx(5, 3), 4).unwrap(), range(9, 10));
        assert!(regular_window(ctx(3, 1), -1).is_err());
    }

    #[test]
    fn range_validation_and_json() {
        assert!(DegreeRange::new(3, 2).is_err());
        assert!(DegreeRange::new(-1, 2).is_err());
        let r = range(5, 5);
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"lo":5,"hi":5}"#);
        assert!(r.contains(5));
        assert!(!r.contains(4));
    }
}

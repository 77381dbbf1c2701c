//! Exact combinatorics of Kostant representatives for the maximal parabolic
//! subgroups of the split odd orthogonal groups SO(2n+1), together with the
//! spectral bookkeeping built on top of them: evaluation points of Eisenstein
//! series, restricted highest weights and their self-duality, pole decision
//! tables over caller-supplied analytic flags, and the residual/regular
//! cohomology degree windows.
//!
//! Everything is computed in exact arithmetic (half-integers and rationals;
//! no floats anywhere), and every closed formula is cross-checked against an
//! independent brute-force enumeration of the hyperoctahedral group in
//! [`oracle`].
//!
//! The crate ships a CLI (`kostant`) with subcommands `table`, `classify`,
//! `verdict`, `degrees` and `verify`; see [`cli`].
//!
//! ```
//! use kostant::{reps, classify, spectral};
//! use kostant::{CuspidalDatum, HighestWeight, RankContext, Rational64, VerdictKind};
//!
//! let ctx = RankContext::new(3, 1)?;
//! let lam = HighestWeight::zero(3);
//!
//! // 2^k (n choose k) minimal coset representatives, named by (I, J)
//! assert_eq!(reps::enumerate_kostant(ctx).len(), 6);
//!
//! // exactly one is self-dual at the evaluation point t = 1/2
//! let hits = classify::scan_t(ctx, &lam, Rational64::new(1, 2))?;
//! assert_eq!(hits.len(), 1);
//! assert_eq!(hits[0].rep.pair().i_set(), &[3]);
//!
//! // with favorable analytic flags its Eisenstein series has a pole there
//! let datum = CuspidalDatum::new(ctx, true, true, Some(true), Some(false), false)?;
//! let verdict = spectral::verdict(&datum, &lam, hits[0].rep.pair(), false)?;
//! assert_eq!(verdict.kind, VerdictKind::Residual);
//! assert_eq!(verdict.window.unwrap().lo(), 5);
//! # Ok::<(), kostant::Error>(())
//! ```

#![forbid(unsafe_code)]
// `k % 2 == 0` reads as the parity statement it is.
#![allow(clippy::manual_is_multiple_of)]

pub mod classify;
pub mod cli;
pub mod degrees;
pub mod error;
pub mod oracle;
pub mod reps;
pub mod rootsys;
pub mod spectral;

pub use classify::{ClassifiedRep, Family};
pub use degrees::DegreeRange;
pub use error::{Error, Result};
pub use reps::{HighestWeight, KostantPair, KostantRep};
pub use rootsys::{HalfInt, RankContext, SignedPermutation, Weight};
pub use spectral::{CuspidalDatum, PoleReport, Verdict, VerdictKind};

/// Exact rational scalar used throughout; re-exported because it appears in
/// public signatures.
pub use num_rational::Rational64;

//! Pole conditions and verdict assembly. Analytic facts about the cuspidal
//! support (self-duality of the GL factor, non-vanishing of the central
//! Rankin-Selberg value, a pole of the Rankin-Selberg L-function at 1, the
//! descent origin of the GL factor) enter as caller-supplied flags; no
//! L-function is ever evaluated here. Given the flags, the module decides
//! whether the Eisenstein series attached to a Kostant representative at its
//! evaluation point contributes a residual class, a regular class, or no
//! class at all, and reports the matching degree window.
//!
//! Only s = 1/2 and s = 1 can carry poles in the region s >= 1/2, and
//! self-dual data never evaluates inside 0 <= t < k/2, so nothing below
//! s = 1/2 is modeled; holomorphy statements there that depend on open
//! conjectures are out of scope.

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::degrees::{self, DegreeRange};
use crate::error::{Error, Result};
use crate::reps::{self, HighestWeight, KostantPair};
use crate::rootsys::{HalfInt, RankContext};

/// Analytic flags describing a cuspidal support sigma (x) tau of the Levi
/// GL_k x SO_{2l+1}. The two Rankin-Selberg flags concern tau and are
/// structurally absent at the Siegel parabolic k = n, where no tau exists
/// (they serialize as null and deserialization enforces the shape).
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(try_from = "CuspidalDatumRepr", into = "CuspidalDatumRepr")]
pub struct CuspidalDatum {
    ctx: RankContext,
    sigma_self_dual: bool,
    omega_sigma_trivial: bool,
    l_half_nonzero: Option<bool>,
    rs_pole_at_one: Option<bool>,
    lift_from_so_k: bool,
}

#[derive(Serialize, Deserialize)]
struct CuspidalDatumRepr {
    n: usize,
    k: usize,
    sigma_self_dual: bool,
    omega_sigma_trivial: bool,
    l_half_nonzero: Option<bool>,
    rs_pole_at_one: Option<bool>,
    lift_from_so_k: bool,
}

impl TryFrom<CuspidalDatumRepr> for CuspidalDatum {
    type Error = Error;

    fn try_from(r: CuspidalDatumRepr) -> Result<Self> {
        CuspidalDatum::new(
            RankContext::new(r.n, r.k)?,
            r.sigma_self_dual,
            r.omega_sigma_trivial,
            r.l_half_nonzero,
            r.rs_pole_at_one,
            r.lift_from_so_k,
        )
    }
}

impl From<CuspidalDatum> for CuspidalDatumRepr {
    fn from(d: CuspidalDatum) -> Self {
        CuspidalDatumRepr {
            n: d.ctx.n(),
            k: d.ctx.k(),
            sigma_self_dual: d.sigma_self_dual,
            omega_sigma_trivial: d.omega_sigma_trivial,
            l_half_nonzero: d.l_half_nonzero,
            rs_pole_at_one: d.rs_pole_at_one,
            lift_from_so_k: d.lift_from_so_k,
        }
    }
}

impl CuspidalDatum {
    pub fn new(
        ctx: RankContext,
        sigma_self_dual: bool,
        omega_sigma_trivial: bool,
        l_half_nonzero: Option<bool>,
        rs_pole_at_one: Option<bool>,
        lift_from_so_k: bool,
    ) -> Result<Self> {
        if ctx.is_siegel() {
            if l_half_nonzero.is_some() || rs_pole_at_one.is_some() {
                return Err(Error::WrongParabolic {
                    expected: "no Rankin-Selberg flags at k = n (there is no tau factor)",
                    n: ctx.n(),
                    k: ctx.k(),
                });
            }
        } else if l_half_nonzero.is_none() || rs_pole_at_one.is_none() {
            return Err(Error::WrongParabolic {
                expected: "both Rankin-Selberg flags for k < n",
                n: ctx.n(),
                k: ctx.k(),
            });
        }
        Ok(CuspidalDatum {
            ctx,
            sigma_self_dual,
            omega_sigma_trivial,
            l_half_nonzero,
            rs_pole_at_one,
            lift_from_so_k,
        })
    }

    pub fn ctx(&self) -> RankContext {
        self.ctx
    }

    pub fn sigma_self_dual(&self) -> bool {
        self.sigma_self_dual
    }

    pub fn omega_sigma_trivial(&self) -> bool {
        self.omega_sigma_trivial
    }

    pub fn l_half_nonzero(&self) -> Option<bool> {
        self.l_half_nonzero
    }

    pub fn rs_pole_at_one(&self) -> Option<bool> {
        self.rs_pole_at_one
    }

    pub fn lift_from_so_k(&self) -> bool {
        self.lift_from_so_k
    }
}

/// The complex parameter s attached to the evaluation coefficient t:
/// s = t/k for k < n and s = 2t/n at the Siegel parabolic.
pub fn s_of_t(t: HalfInt, ctx: RankContext) -> Rational64 {
    let t: Rational64 = t.into();
    if ctx.is_siegel() {
        t * Rational64::new(2, ctx.n() as i64)
    } else {
        t / Rational64::from_integer(ctx.k() as i64)
    }
}

/// Pole of the Eisenstein series at s = 1/2 (that is, t = k/2), for k < n.
///
/// For even k with trivial central character the pole needs k >= 4, the
/// descent origin from SO_k and a non-vanishing central Rankin-Selberg
/// value; in particular k = 2 with trivial central character never has one.
/// Otherwise self-duality and the non-vanishing suffice.
pub fn pole_at_half(d: &CuspidalDatum) -> Result<bool> {
    if d.ctx.is_siegel() {
        return Err(Error::WrongParabolic {
            expected: "k < n",
            n: d.ctx.n(),
            k: d.ctx.k(),
        });
    }
    let k = d.ctx.k();
    let l_half = d.l_half_nonzero.expect("validated at construction");
    Ok(if k % 2 == 0 && d.omega_sigma_trivial {
        k >= 4 && d.sigma_self_dual && d.lift_from_so_k && l_half
    } else {
        d.sigma_self_dual && l_half
    })
}

/// Pole at s = 1 (t = k), for k < n: sigma self-dual, k even, and the
/// Rankin-Selberg L-function has a pole at 1.
pub fn pole_at_one(d: &CuspidalDatum) -> Result<bool> {
    if d.ctx.is_siegel() {
        return Err(Error::WrongParabolic {
            expected: "k < n",
            n: d.ctx.n(),
            k: d.ctx.k(),
        });
    }
    let rs_pole = d.rs_pole_at_one.expect("validated at construction");
    Ok(d.sigma_self_dual && d.ctx.k() % 2 == 0 && rs_pole)
}

/// Pole at s = 1 (t = n/2) at the Siegel parabolic k = n: for even n with
/// trivial central character this needs n >= 4 and the descent origin;
/// otherwise self-duality suffices.
pub fn pole_siegel(d: &CuspidalDatum) -> Result<bool> {
    if !d.ctx.is_siegel() {
        return Err(Error::WrongParabolic {
            expected: "k = n",
            n: d.ctx.n(),
            k: d.ctx.k(),
        });
    }
    let n = d.ctx.n();
    Ok(if n % 2 == 0 && d.omega_sigma_trivial {
        n >= 4 && d.sigma_self_dual && d.lift_from_so_k
    } else {
        d.sigma_self_dual
    })
}

/// Both pole flags for a datum, shaped by the parabolic.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum PoleReport {
    /// k < n: poles possible at s = 1/2 and s = 1.
    Interior { pole_at_half: bool, pole_at_one: bool },
    /// k = n: the single Siegel pole point s = 1.
    Siegel { pole_at_one: bool },
}

pub fn pole_report(d: &CuspidalDatum) -> Result<PoleReport> {
    if d.ctx.is_siegel() {
        Ok(PoleReport::Siegel {
            pole_at_one: pole_siegel(d)?,
        })
    } else {
        Ok(PoleReport::Interior {
            pole_at_half: pole_at_half(d)?,
            pole_at_one: pole_at_one(d)?,
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum VerdictKind {
    Residual,
    Regular,
    NoClass,
}

/// Outcome for one (datum, lambda, pair) triple. `t` is reported for
/// residual verdicts; `window` is absent exactly when no class exists.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub t: Option<HalfInt>,
    pub window: Option<DegreeRange>,
    pub notes: Vec<String>,
}

/// Decide residual/regular/no-class for the Eisenstein series attached to
/// `pair` at its evaluation point, given the analytic flags.
///
/// `local_kernel` models a local component in the kernel of the relevant
/// local intertwining operator: the induced zero cancels the simple pole, so
/// an otherwise residual point yields a regular class.
pub fn verdict(
    d: &CuspidalDatum,
    lam: &HighestWeight,
    pair: &KostantPair,
    local_kernel: bool,
) -> Result<Verdict> {
    let ctx = d.ctx();
    if pair.ctx() != ctx {
        return Err(Error::Precondition(format!(
            "pair context ({}, {}) differs from datum context ({}, {})",
            pair.ctx().n(),
            pair.ctx().k(),
            ctx.n(),
            ctx.k()
        )));
    }
    let mut notes = Vec::new();
    if ctx.n() < 3 {
        notes.push(format!(
            "warning: rank n = {} is below the stated range n >= 3",
            ctx.n()
        ));
    }

    let t = reps::eval_t(pair, lam)?;
    let mu = reps::mu_w(pair, lam)?;
    let rep = reps::KostantRep::new(pair.clone());

    if !reps::is_self_dual(&mu, ctx)? {
        notes.push("coefficient module is not self-dual: no cuspidal support is cohomological with respect to it".to_string());
        return Ok(Verdict {
            kind: VerdictKind::NoClass,
            t: None,
            window: None,
            notes,
        });
    }
    if t < HalfInt::ZERO {
        notes.push(format!(
            "evaluation point t = {t} lies outside the closed positive chamber"
        ));
        return Ok(Verdict {
            kind: VerdictKind::NoClass,
            t: None,
            window: None,
            notes,
        });
    }

    let k = ctx.k() as i64;
    let pole = if ctx.is_siegel() {
        if t == HalfInt::from_twice(ctx.n() as i64) {
            notes.push("evaluation point s = 1 (Siegel, t = n/2)".to_string());
            Some(pole_siegel(d)?)
        } else {
            None
        }
    } else if t == HalfInt::from_twice(k) {
        notes.push("evaluation point s = 1/2 (t = k/2)".to_string());
        Some(pole_at_half(d)?)
    } else if t == HalfInt::from_int(k) {
        notes.push("evaluation point s = 1 (t = k)".to_string());
        Some(pole_at_one(d)?)
    } else {
        None
    };

    match pole {
        Some(true) if !local_kernel => {
            notes.push("pole conditions met: residue spans a square-integrable class".to_string());
            Ok(Verdict {
                kind: VerdictKind::Residual,
                t: Some(t),
                window: Some(degrees::residual_window(ctx, t)?),
                notes,
            })
        }
        Some(true) => {
            notes.push(
                "pole evaded: local kernel component cancels the pole, value is holomorphic"
                    .to_string(),
            );
            Ok(regular_verdict(ctx, rep.length() as i64, notes))
        }
        Some(false) => {
            notes.push("pole conditions not met: Eisenstein series is holomorphic".to_string());
            Ok(regular_verdict(ctx, rep.length() as i64, notes))
        }
        None => {
            notes.push(format!(
                "t = {t} is not a pole point: Eisenstein series is holomorphic"
            ));
            Ok(regular_verdict(ctx, rep.length() as i64, notes))
        }
    }
}

fn regular_verdict(ctx: RankContext, lw: i64, notes: Vec<String>) -> Verdict {
    Verdict {
        kind: VerdictKind::Regular,
        t: None,
        window: degrees::regular_window(ctx, lw).ok(),
        notes,
    }
}

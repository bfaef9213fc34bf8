//! Norm angles and the angular-comparison constant between two norms.
//!
//! The angle from x to y under a norm is θ ∈ [0, π] with
//! cos θ = g(x,y)/(‖x‖‖y‖); Cauchy–Schwarz for g keeps the quotient in
//! [−1, 1] up to rounding. Two norms are angularly equivalent when
//! tan(θ₂/2) ≤ C·tan(θ₁/2) uniformly over nonzero pairs — a strictly
//! stronger relation than topological equivalence. [`estimate_ae_constant`]
//! produces certified lower bounds on the best such C by sampling and
//! hill climbing; it can exhibit divergence (no finite C up to a cap) but
//! never proves equivalence.

use serde::Serialize;

use crate::gfunctional::g_raw;
use crate::norms::{sample_sphere, NormSpec};
use crate::search::refine_pair;
use crate::{Error, Result, Vector};

/// Tolerated numerical excess of |cos θ| beyond 1 before erroring.
const COS_CLAMP: f64 = 1e-12;

/// Rounding-scale snap: a cosine within a few ulp of ±1 is treated as exactly
/// ±1. Without this, g(x,x)/‖x‖² lands one ulp off 1 and the 0/0 ratio
/// convention for aligned pairs never fires.
const COS_SNAP: f64 = 16.0 * f64::EPSILON;

#[derive(Debug, Clone, Serialize)]
pub struct AngleReport {
    /// g(x,y)/(‖x‖‖y‖), clamped into [−1, 1].
    pub cos_theta: f64,
    /// Angle in [0, π].
    pub theta: f64,
    /// tan(θ/2) = √((1−cos θ)/(1+cos θ)); +∞ exactly when cos θ = −1.
    pub tan_half: f64,
}

pub(crate) fn tan_half_from_cos(c: f64) -> f64 {
    if c == -1.0 {
        f64::INFINITY
    } else {
        ((1.0 - c) / (1.0 + c)).sqrt()
    }
}

/// The norm angle from x to y. Errors on zero input or when the cosine falls
/// outside [−1, 1] by more than rounding allows.
pub fn cos_angle(spec: &NormSpec, x: &Vector, y: &Vector) -> Result<AngleReport> {
    for v in [x, y] {
        if v.dim() != spec.dim() {
            return Err(Error::DimensionMismatch {
                expected: spec.dim(),
                got: v.dim(),
            });
        }
        if v.is_zero() {
            return Err(Error::ZeroVector("norm angle needs nonzero vectors"));
        }
    }
    let denom = spec.eval_raw(x.as_slice()) * spec.eval_raw(y.as_slice());
    let raw = g_raw(spec, x.as_slice(), y.as_slice()) / denom;
    if raw.abs() > 1.0 + COS_CLAMP {
        return Err(Error::Numerics {
            op: "cos_angle",
            detail: format!("cosine {raw} outside [-1, 1] beyond rounding"),
        });
    }
    let mut cos_theta = raw.clamp(-1.0, 1.0);
    if 1.0 - cos_theta <= COS_SNAP {
        cos_theta = 1.0;
    } else if 1.0 + cos_theta <= COS_SNAP {
        cos_theta = -1.0;
    }
    Ok(AngleReport {
        cos_theta,
        theta: cos_theta.acos(),
        tan_half: tan_half_from_cos(cos_theta),
    })
}

/// Below this, a tangent half-angle is indistinguishable from zero: 1 − cos θ
/// is then a handful of ulps, so the tangent is pure quantization noise.
const TAN_FLOOR: f64 = 1e-7;

/// Above this, a tangent half-angle is indistinguishable from +∞ (1 + cos θ
/// is a handful of ulps).
const TAN_CEIL: f64 = 1e7;

/// tan(θ₂/2)/tan(θ₁/2) on the extended half-line, with the conventions that
/// make the quotient total: 0/0 and ∞/∞ give 1, a zero denominator gives +∞,
/// a zero numerator gives 0, and mixed ∞/finite cases follow the numerator.
///
/// The 0/0 and ∞/∞ clauses are widened to the rounding floor and ceiling:
/// when both tangents are numerically degenerate on the same end, the pair
/// is aligned (or antipodal) under both norms as far as doubles can tell and
/// the quotient carries no information. A genuine flat-versus-curved
/// divergence is unaffected — there the flat side is exactly 0 over an open
/// set while the curved side stays macroscopic.
pub(crate) fn ratio_conventions(t1: f64, t2: f64) -> f64 {
    if (t1 < TAN_FLOOR && t2 < TAN_FLOOR) || (t1 > TAN_CEIL && t2 > TAN_CEIL) {
        1.0
    } else if t2 == 0.0 {
        0.0
    } else if t1 == 0.0 || t2.is_infinite() {
        f64::INFINITY
    } else if t1.is_infinite() {
        0.0
    } else {
        t2 / t1
    }
}

/// The angular ratio tan(θ₂(x,y)/2)/tan(θ₁(x,y)/2) for one pair.
pub fn ae_ratio(spec1: &NormSpec, spec2: &NormSpec, x: &Vector, y: &Vector) -> Result<f64> {
    let t1 = cos_angle(spec1, x, y)?.tan_half;
    let t2 = cos_angle(spec2, x, y)?.tan_half;
    Ok(ratio_conventions(t1, t2))
}

/// The angular ratio with both tangents clamped into the band the floating
/// format can actually resolve, [2·10⁻⁷, 5·10⁶]; pairs degenerate on the same
/// end still give 1. The clamp makes every large value a certified lower
/// bound on the true ratio at the pair: a tangent that computes below the
/// floor is truly below 2·10⁻⁷, and one that computes above the ceiling is
/// truly above 5·10⁶. The estimator tracks maxima of this quotient so that a
/// single one-ulp rounding of a cosine can never fabricate an infinity.
pub fn ae_ratio_saturating(
    spec1: &NormSpec,
    spec2: &NormSpec,
    x: &Vector,
    y: &Vector,
) -> Result<f64> {
    let t1 = cos_angle(spec1, x, y)?.tan_half;
    let t2 = cos_angle(spec2, x, y)?.tan_half;
    if (t1 < TAN_FLOOR && t2 < TAN_FLOOR) || (t1 > TAN_CEIL && t2 > TAN_CEIL) {
        return Ok(1.0);
    }
    let clamp = |t: f64| t.clamp(2.0 * TAN_FLOOR, 0.5 * TAN_CEIL);
    Ok(clamp(t2) / clamp(t1))
}

/// A witnessed lower bound on the angular-comparison constant from norm 1 to
/// norm 2. `c_lower` is exactly the value of [`ae_ratio_saturating`] at
/// `witness_pair`; `diverged` only means no finite constant was found up to
/// the cap, never a proof of non-equivalence.
#[derive(Debug, Clone, Serialize)]
pub struct EquivEstimate {
    pub c_lower: f64,
    pub witness_pair: (Vector, Vector),
    pub diverged: bool,
    pub samples_used: usize,
    pub refine_iters: usize,
}

/// Estimate sup over nonzero pairs of the angular ratio by drawing pairs
/// from the unit sphere of `spec1` and hill-climbing the best one. The
/// sampled stage is monotone in `samples` for a fixed seed (prefix sampling).
pub fn estimate_ae_constant(
    spec1: &NormSpec,
    spec2: &NormSpec,
    samples: usize,
    seed: u64,
    refine_iters: usize,
    cap: f64,
) -> Result<EquivEstimate> {
    if spec1.dim() != spec2.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec1.dim(),
            got: spec2.dim(),
        });
    }
    if samples == 0 {
        return Err(Error::InvalidParameter("samples must be at least 1".into()));
    }
    if !(cap > 1.0) {
        return Err(Error::InvalidParameter("cap must exceed 1".into()));
    }
    let pts = sample_sphere(spec1, 2 * samples, seed)?;
    let mut best = f64::NEG_INFINITY;
    let mut pair = (pts[0].clone(), pts[1].clone());
    for chunk in pts.chunks_exact(2) {
        let r = ae_ratio_saturating(spec1, spec2, &chunk[0], &chunk[1])?;
        if r > best {
            best = r;
            pair = (chunk[0].clone(), chunk[1].clone());
        }
    }
    if refine_iters > 0 {
        let (rx, ry, rv) = refine_pair(spec1, pair.clone(), refine_iters, |x, y| {
            ae_ratio_saturating(spec1, spec2, x, y).ok()
        });
        if rv > best {
            best = rv;
            pair = (rx, ry);
        }
    }
    Ok(EquivEstimate {
        c_lower: best,
        witness_pair: pair,
        diverged: !(best <= cap),
        samples_used: samples,
        refine_iters,
    })
}

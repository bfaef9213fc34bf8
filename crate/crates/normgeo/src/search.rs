//! Deterministic coordinate hill climbing used by the estimators and probes.
//!
//! The searches are derivative-free on purpose: the objectives (tangent
//! half-angles, midpoint norms) are non-differentiable exactly where their
//! extrema live for non-smooth norms. Perturb one coordinate at a time,
//! renormalize back to the unit sphere, keep strict improvements, and shrink
//! the step after a round with no progress. No randomness: results are a pure
//! function of the start point.

use crate::norms::NormSpec;
use crate::Vector;

const STEP0: f64 = 0.25;
const MIN_STEP: f64 = 1e-13;

/// Renormalize a perturbed point onto the unit sphere of `spec`.
fn reproject(spec: &NormSpec, coords: &[f64]) -> Option<Vector> {
    let n = spec.eval_raw(coords);
    if !(n.is_finite() && n > 1e-12) {
        return None;
    }
    Vector::new(coords.iter().map(|c| c / n).collect()).ok()
}

/// Maximize `objective` over the unit sphere, starting from `start` (already
/// on the sphere). The objective returns `None` for infeasible points.
pub(crate) fn refine_point<F>(
    spec: &NormSpec,
    start: Vector,
    rounds: usize,
    objective: F,
) -> (Vector, f64)
where
    F: Fn(&Vector) -> Option<f64>,
{
    let mut best = start;
    let mut best_val = match objective(&best) {
        Some(v) => v,
        None => return (best, f64::NEG_INFINITY),
    };
    let mut step = STEP0;
    for _ in 0..rounds {
        let mut improved = false;
        for i in 0..best.dim() {
            for sign in [1.0, -1.0] {
                let mut coords = best.as_slice().to_vec();
                coords[i] += sign * step;
                let Some(cand) = reproject(spec, &coords) else { continue };
                if let Some(v) = objective(&cand) {
                    if v > best_val {
                        best = cand;
                        best_val = v;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            step *= 0.5;
            if step < MIN_STEP {
                break;
            }
        }
    }
    (best, best_val)
}

/// Maximize `objective` over pairs on the unit sphere.
pub(crate) fn refine_pair<F>(
    spec: &NormSpec,
    start: (Vector, Vector),
    rounds: usize,
    objective: F,
) -> (Vector, Vector, f64)
where
    F: Fn(&Vector, &Vector) -> Option<f64>,
{
    let (mut x, mut y) = start;
    let mut best_val = match objective(&x, &y) {
        Some(v) => v,
        None => return (x, y, f64::NEG_INFINITY),
    };
    let mut step = STEP0;
    for _ in 0..rounds {
        let mut improved = false;
        for which in 0..2 {
            for i in 0..x.dim() {
                for sign in [1.0, -1.0] {
                    let base = if which == 0 { &x } else { &y };
                    let mut coords = base.as_slice().to_vec();
                    coords[i] += sign * step;
                    let Some(cand) = reproject(spec, &coords) else { continue };
                    let v = if which == 0 {
                        objective(&cand, &y)
                    } else {
                        objective(&x, &cand)
                    };
                    if let Some(v) = v {
                        if v > best_val {
                            if which == 0 {
                                x = cand;
                            } else {
                                y = cand;
                            }
                            best_val = v;
                            improved = true;
                        }
                    }
                }
            }
        }
        if !improved {
            step *= 0.5;
            if step < MIN_STEP {
                break;
            }
        }
    }
    (x, y, best_val)
}

/// Maximize `objective` over points of R^n without reprojection (used for
/// ball searches where the iterate must not be forced onto the sphere).
pub(crate) fn refine_free<F>(start: Vector, rounds: usize, objective: F) -> (Vector, f64)
where
    F: Fn(&Vector) -> Option<f64>,
{
    let mut best = start;
    let mut best_val = match objective(&best) {
        Some(v) => v,
        None => return (best, f64::NEG_INFINITY),
    };
    let mut step = STEP0;
    for _ in 0..rounds {
        let mut improved = false;
        for i in 0..best.dim() {
            for sign in [1.0, -1.0] {
                let cand = best.with_coord(i, best[i] + sign * step);
                if let Some(v) = objective(&cand) {
                    if v > best_val {
                        best = cand;
                        best_val = v;
                        improved = true;
                    }
                }
            }
        }
        if !improved {
            step *= 0.5;
            if step < MIN_STEP {
                break;
            }
        }
    }
    (best, best_val)
}

/// Golden-section minimization of a convex function on [lo, hi].
pub(crate) fn golden_min<F>(f: F, mut lo: f64, mut hi: f64, tol: f64) -> (f64, f64)
where
    F: Fn(f64) -> f64,
{
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut a = hi - INV_PHI * (hi - lo);
    let mut b = lo + INV_PHI * (hi - lo);
    let mut fa = f(a);
    let mut fb = f(b);
    while hi - lo > tol {
        if fa <= fb {
            hi = b;
            b = a;
            fb = fa;
            a = hi - INV_PHI * (hi - lo);
            fa = f(a);
        } else {
            lo = a;
            a = b;
            fa = fb;
            b = lo + INV_PHI * (hi - lo);
            fb = f(b);
        }
    }
    let mid = 0.5 * (lo + hi);
    (mid, f(mid))
}

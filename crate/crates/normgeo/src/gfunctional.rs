//! One-sided directional derivatives of norms and the g-functional.
//!
//! For a norm ‖·‖ and x ≠ 0 the one-sided limits
//!
//!   G⁺(x,y) = lim_{t→0⁺} (‖x+ty‖ − ‖x‖)/t,   G⁻(x,y) = lim_{t→0⁻} (…)/t
//!
//! always exist by convexity, with G⁻ ≤ G⁺. The g-functional is
//!
//!   g(x,y) = ‖x‖ · (G⁺(x,y) + G⁻(x,y)) / 2,    g(0,y) = 0,
//!
//! and [y,x] := g(x,y) satisfies the semi-inner-product axioms except
//! additivity in the first slot, which holds exactly when the norm is smooth.
//!
//! Every catalog variant has an analytic derivative path (closed-form
//! gradients for the smooth variants; argmax/sign bookkeeping with
//! sgn(0) = 0 for ℓ¹, ℓ^∞, the λ-blend, and polyhedral gauges). The
//! finite-difference path is kept as an independent cross-check: one-sided
//! difference quotients of a convex norm converge monotonically, so it
//! evaluates at halving steps and stops at the requested tolerance, at the
//! first non-monotone step (rounding noise has taken over), or at the step
//! floor, whichever comes first.

use serde::Serialize;

use crate::norms::{signum0, Kind, NormSpec};
use crate::{Error, Exponent, Result, Vector};

/// How a derivative value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GMethod {
    Analytic,
    FiniteDifference,
}

/// The g-functional at (x, y) together with the underlying one-sided data.
#[derive(Debug, Clone, Serialize)]
pub struct GReport {
    /// G⁺(x,y); absent when x = 0 (no derivative of a norm at the origin).
    pub dir_deriv_plus: Option<f64>,
    /// G⁻(x,y); absent when x = 0.
    pub dir_deriv_minus: Option<f64>,
    /// g⁺(x,y) = ‖x‖·G⁺(x,y).
    pub g_plus: f64,
    /// g⁻(x,y) = ‖x‖·G⁻(x,y).
    pub g_minus: f64,
    /// g(x,y) = (g⁺ + g⁻)/2.
    pub g: f64,
    pub method: GMethod,
    /// Final step of the finite-difference path, when used.
    pub step_used: Option<f64>,
    /// Last successive-quotient delta of the finite-difference path; the
    /// one-sided error of the reported derivative is of this order.
    pub err_bound: Option<f64>,
}

fn check_dims(spec: &NormSpec, x: &Vector, y: &Vector) -> Result<()> {
    for v in [x, y] {
        if v.dim() != spec.dim() {
            return Err(Error::DimensionMismatch {
                expected: spec.dim(),
                got: v.dim(),
            });
        }
    }
    Ok(())
}

/// One-sided directional derivatives (G⁺, G⁻) of the norm at x in direction
/// y, by the analytic path. Errors when x = 0.
pub fn gateaux(spec: &NormSpec, x: &Vector, y: &Vector, _tol: f64) -> Result<(f64, f64)> {
    check_dims(spec, x, y)?;
    if x.is_zero() {
        return Err(Error::ZeroVector(
            "one-sided derivatives of a norm are not defined at the origin",
        ));
    }
    analytic_derivs(spec, x.as_slice(), y.as_slice())
}

/// Finite-difference (G⁺, G⁻) plus the step and last delta actually used.
pub fn gateaux_numeric(
    spec: &NormSpec,
    x: &Vector,
    y: &Vector,
    tol: f64,
) -> Result<(f64, f64, f64, f64)> {
    check_dims(spec, x, y)?;
    if x.is_zero() {
        return Err(Error::ZeroVector(
            "one-sided derivatives of a norm are not defined at the origin",
        ));
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter("tol must be positive".into()));
    }
    let plus = one_sided_quotient(spec, x, y, tol)?;
    // G⁻(x,y) = −G⁺(x,−y): the left quotients of y are the reflected right
    // quotients of −y, step for step.
    let minus = one_sided_quotient(spec, x, &y.scale(-1.0), tol)?;
    Ok((
        plus.0,
        -minus.0,
        plus.1.max(minus.1),
        plus.2.max(minus.2),
    ))
}

/// Descend t = 1, 1/2, 1/4, … and return (quotient, step, last delta).
fn one_sided_quotient(spec: &NormSpec, x: &Vector, y: &Vector, tol: f64) -> Result<(f64, f64, f64)> {
    const MAX_HALVINGS: i32 = 40; // 2^-40 ≈ 9.1e-13, just below the 1e-12 floor
    let nx = spec.eval_raw(x.as_slice());
    let ny = spec.eval_raw(y.as_slice());
    let quotient = |t: f64| -> Result<f64> {
        let q = (spec.eval_raw(x.axpy(t, y).as_slice()) - nx) / t;
        if q.is_finite() {
            Ok(q)
        } else {
            Err(Error::Numerics {
                op: "gateaux_numeric",
                detail: format!("non-finite difference quotient at step {t}"),
            })
        }
    };
    let mut prev = quotient(1.0)?;
    let mut step = 1.0;
    let mut delta = f64::INFINITY;
    for k in 1..=MAX_HALVINGS {
        let t = (2.0f64).powi(-k);
        let q = quotient(t)?;
        let d = prev - q;
        if d < 0.0 {
            // The true sequence is nonincreasing; an uptick means rounding
            // noise dominates, so the previous iterate is the best available.
            return Ok((prev, step, delta.min(-d)));
        }
        prev = q;
        step = t;
        delta = d;
        // The two norm evaluations quantize the quotient in steps of roughly
        // eps·‖x‖/t. Once successive deltas dip below that envelope, going
        // deeper only accumulates one-sided rounding drift, so stop there
        // even when the requested tol is smaller.
        let noise = 4.0 * f64::EPSILON * (nx + t * ny) / t;
        if d < tol.max(noise) {
            break;
        }
    }
    Ok((prev, step, delta))
}

/// The g-functional report at (x, y), analytic path. x = 0 yields g = 0 with
/// the derivatives unset.
pub fn g(spec: &NormSpec, x: &Vector, y: &Vector, tol: f64) -> Result<GReport> {
    check_dims(spec, x, y)?;
    if x.is_zero() {
        return Ok(zero_report());
    }
    let (dp, dm) = gateaux(spec, x, y, tol)?;
    Ok(assemble(spec, x, dp, dm, GMethod::Analytic, None, None))
}

/// The g-functional report computed by finite differences.
pub fn g_numeric(spec: &NormSpec, x: &Vector, y: &Vector, tol: f64) -> Result<GReport> {
    check_dims(spec, x, y)?;
    if x.is_zero() {
        return Ok(zero_report());
    }
    let (dp, dm, step, delta) = gateaux_numeric(spec, x, y, tol)?;
    Ok(assemble(
        spec,
        x,
        dp,
        dm,
        GMethod::FiniteDifference,
        Some(step),
        Some(delta),
    ))
}

fn zero_report() -> GReport {
    GReport {
        dir_deriv_plus: None,
        dir_deriv_minus: None,
        g_plus: 0.0,
        g_minus: 0.0,
        g: 0.0,
        method: GMethod::Analytic,
        step_used: None,
        err_bound: None,
    }
}

fn assemble(
    spec: &NormSpec,
    x: &Vector,
    dp: f64,
    dm: f64,
    method: GMethod,
    step_used: Option<f64>,
    err_bound: Option<f64>,
) -> GReport {
    let nx = spec.eval_raw(x.as_slice());
    let g_plus = nx * dp;
    let g_minus = nx * dm;
    GReport {
        dir_deriv_plus: Some(dp),
        dir_deriv_minus: Some(dm),
        g_plus,
        g_minus,
        g: 0.5 * (g_plus + g_minus),
        method,
        step_used,
        err_bound,
    }
}

/// Bare g(x,y) for internal hot loops; dimensions already checked by caller.
pub(crate) fn g_raw(spec: &NormSpec, x: &[f64], y: &[f64]) -> f64 {
    if x.iter().all(|&c| c == 0.0) {
        return 0.0;
    }
    let (dp, dm) = analytic_derivs(spec, x, y).expect("analytic path is total off the origin");
    spec.eval_raw(x) * 0.5 * (dp + dm)
}

fn analytic_derivs(spec: &NormSpec, x: &[f64], y: &[f64]) -> Result<(f64, f64)> {
    Ok(match spec.kind() {
        Kind::Lp { p: Exponent::One, .. } => l1_derivs(x, y, None),
        Kind::WeightedLp { p: Exponent::One, weights } => l1_derivs(x, y, Some(weights)),
        Kind::Lp { p: Exponent::Infinity, .. } => linf_derivs(x, y, None),
        Kind::WeightedLp { p: Exponent::Infinity, weights } => linf_derivs(x, y, Some(weights)),
        Kind::KtBlend { lambda } => {
            let euclid = (x[0] * x[0] + x[1] * x[1]).sqrt();
            let sup = lambda * x[0].abs().max(x[1].abs());
            let euclid_d = (x[0] * y[0] + x[1] * y[1]) / euclid;
            let (sp, sm) = linf_derivs(x, y, None);
            // Directional derivative of a max of convex functions: the active
            // branch rules; at a tie the one-sided envelopes combine.
            if euclid > sup {
                (euclid_d, euclid_d)
            } else if sup > euclid {
                (lambda * sp, lambda * sm)
            } else {
                (euclid_d.max(lambda * sp), euclid_d.min(lambda * sm))
            }
        }
        Kind::Polyhedral { rows, .. } => {
            let m = spec.eval_raw(x);
            let mut dp = f64::NEG_INFINITY;
            let mut dm = f64::INFINITY;
            for row in rows {
                let vx: f64 = row.iter().zip(x).map(|(a, xi)| a * xi).sum();
                let vy: f64 = row.iter().zip(y).map(|(a, yi)| a * yi).sum();
                if vx == m {
                    dp = dp.max(vy);
                    dm = dm.min(vy);
                }
                if -vx == m {
                    dp = dp.max(-vy);
                    dm = dm.min(-vy);
                }
            }
            (dp, dm)
        }
        // Smooth variants: the gradient is the unique supporting functional.
        _ => {
            let grad = spec.smooth_gradient(x)?;
            let d: f64 = grad.iter().zip(y).map(|(a, b)| a * b).sum();
            (d, d)
        }
    })
}

fn l1_derivs(x: &[f64], y: &[f64], weights: Option<&[f64]>) -> (f64, f64) {
    let w = |i: usize| weights.map_or(1.0, |w| w[i]);
    let mut base = 0.0;
    let mut zero_part = 0.0;
    for i in 0..x.len() {
        if x[i] == 0.0 {
            zero_part += w(i) * y[i].abs();
        } else {
            base += w(i) * signum0(x[i]) * y[i];
        }
    }
    (base + zero_part, base - zero_part)
}

fn linf_derivs(x: &[f64], y: &[f64], weights: Option<&[f64]>) -> (f64, f64) {
    let w = |i: usize| weights.map_or(1.0, |w| w[i]);
    let m = x
        .iter()
        .enumerate()
        .map(|(i, xi)| w(i) * xi.abs())
        .fold(0.0f64, f64::max);
    let mut dp = f64::NEG_INFINITY;
    let mut dm = f64::INFINITY;
    for i in 0..x.len() {
        if w(i) * x[i].abs() == m {
            let d = w(i) * signum0(x[i]) * y[i];
            dp = dp.max(d);
            dm = dm.min(d);
        }
    }
    (dp, dm)
}

/// Which semi-inner-product axiom a check row refers to, for [y,x] = g(x,y).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SipAxiom {
    /// [u+w, v] = [u,v] + [w,v], i.e. additivity of g in its second argument.
    Additivity,
    /// [αu, v] = α[u,v].
    HomogeneityFirstSlot,
    /// [u,u] ≥ 0 generating the norm: g(x,x) = ‖x‖².
    Positivity,
    /// |[u,v]|² ≤ [u,u][v,v], i.e. |g(x,y)| ≤ ‖x‖‖y‖.
    CauchySchwarz,
    /// [u, βv] = β[u,v] (real scalars).
    HomogeneitySecondSlot,
}

#[derive(Debug, Clone, Serialize)]
pub struct SipWitness {
    pub x: Vector,
    pub y: Vector,
    pub z: Option<Vector>,
    pub alpha: Option<f64>,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct AxiomCheck {
    pub axiom: SipAxiom,
    pub worst_violation: f64,
    pub witness: Option<SipWitness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SipReport {
    pub axioms: Vec<AxiomCheck>,
    pub trials: usize,
    pub seed: u64,
    pub tol: f64,
    /// True when every axiom's worst violation is within `tol`.
    pub pass: bool,
}

/// Exercise the semi-inner-product axioms for [y,x] := g(x,y) on random
/// tuples: additivity g(x,y+z) = g(x,y)+g(x,z), scalar homogeneity in both
/// slots, positivity g(x,x) = ‖x‖², and Cauchy–Schwarz |g| ≤ ‖x‖‖y‖.
/// Reports the worst violation and its witness per axiom.
pub fn sip_check(spec: &NormSpec, trials: usize, seed: u64, tol: f64) -> Result<SipReport> {
    if trials == 0 {
        return Err(Error::InvalidParameter("trials must be at least 1".into()));
    }
    use rand::Rng;
    let mut rng = crate::seeding::rng_from_seed(seed);
    let sphere = crate::norms::sample_sphere(spec, 3 * trials, seed.wrapping_add(1))?;

    let mut worst: Vec<(f64, Option<SipWitness>)> = vec![(0.0, None); 5];
    let mut record = |idx: usize, violation: f64, wit: SipWitness| {
        if violation > worst[idx].0 {
            worst[idx] = (violation, Some(wit));
        }
    };

    for k in 0..trials {
        // Random radii exercise the homogeneity axioms off the sphere.
        let rx = 0.5 + 1.5 * rng.random::<f64>();
        let ry = 0.5 + 1.5 * rng.random::<f64>();
        let x = sphere[3 * k].scale(rx);
        let y = sphere[3 * k + 1].scale(ry);
        let z = sphere[3 * k + 2].clone();
        let alpha = -2.0 + 4.0 * rng.random::<f64>();
        let nx = spec.eval_raw(x.as_slice());
        let ny = spec.eval_raw(y.as_slice());

        let gxy = g_raw(spec, x.as_slice(), y.as_slice());

        // Additivity in the second argument of g.
        let lhs = g_raw(spec, x.as_slice(), y.add(&z).as_slice());
        let rhs = gxy + g_raw(spec, x.as_slice(), z.as_slice());
        record(
            0,
            (lhs - rhs).abs(),
            SipWitness {
                x: x.clone(),
                y: y.clone(),
                z: Some(z.clone()),
                alpha: None,
                lhs,
                rhs,
            },
        );

        // g(x, αy) = α g(x,y).
        let lhs = g_raw(spec, x.as_slice(), y.scale(alpha).as_slice());
        let rhs = alpha * gxy;
        record(
            1,
            (lhs - rhs).abs(),
            SipWitness {
                x: x.clone(),
                y: y.clone(),
                z: None,
                alpha: Some(alpha),
                lhs,
                rhs,
            },
        );

        // g(x,x) = ‖x‖² ≥ 0.
        let lhs = g_raw(spec, x.as_slice(), x.as_slice());
        let rhs = nx * nx;
        record(
            2,
            (lhs - rhs).abs().max(-lhs),
            SipWitness {
                x: x.clone(),
                y: x.clone(),
                z: None,
                alpha: None,
                lhs,
                rhs,
            },
        );

        // |g(x,y)| ≤ ‖x‖‖y‖.
        record(
            3,
            (gxy.abs() - nx * ny).max(0.0),
            SipWitness {
                x: x.clone(),
                y: y.clone(),
                z: None,
                alpha: None,
                lhs: gxy.abs(),
                rhs: nx * ny,
            },
        );

        // g(αx, y) = α g(x,y).
        let lhs = g_raw(spec, x.scale(alpha).as_slice(), y.as_slice());
        let rhs = alpha * gxy;
        record(
            4,
            (lhs - rhs).abs(),
            SipWitness {
                x,
                y,
                z: None,
                alpha: Some(alpha),
                lhs,
                rhs,
            },
        );
    }

    let axioms: Vec<AxiomCheck> = [
        SipAxiom::Additivity,
        SipAxiom::HomogeneitySecondSlot,
        SipAxiom::Positivity,
        SipAxiom::CauchySchwarz,
        SipAxiom::HomogeneityFirstSlot,
    ]
    .into_iter()
    .zip(worst)
    .map(|(axiom, (worst_violation, witness))| AxiomCheck {
        axiom,
        worst_violation,
        witness,
    })
    .collect();
    let pass = axioms.iter().all(|a| a.worst_violation <= tol);
    Ok(SipReport {
        axioms,
        trials,
        seed,
        tol,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norms::sample_sphere;
    use approx::assert_abs_diff_eq;

    fn v(coords: &[f64]) -> Vector {
        Vector::new(coords.to_vec()).unwrap()
    }

    fn lp(p: f64, dim: usize) -> NormSpec {
        NormSpec::lp(Exponent::from_value(p).unwrap(), dim).unwrap()
    }

    #[test]
    fn euclidean_orthogonal_directions() {
        let l2 = lp(2.0, 2);
        let (dp, dm) = gateaux(&l2, &v(&[1.0, 0.0]), &v(&[0.0, 1.0]), 1e-9).unwrap();
        assert_eq!((dp, dm), (0.0, 0.0));
    }

    #[test]
    fn l1_kink_has_distinct_one_sided_derivatives() {
        let l1 = lp(1.0, 2);
        // ‖(1,0) + t(0,1)‖₁ = 1 + |t|.
        let (dp, dm) = gateaux(&l1, &v(&[1.0, 0.0]), &v(&[0.0, 1.0]), 1e-9).unwrap();
        assert_eq!((dp, dm), (1.0, -1.0));
        let (np, nm, _, _) =
            gateaux_numeric(&l1, &v(&[1.0, 0.0]), &v(&[0.0, 1.0]), 1e-9).unwrap();
        assert_abs_diff_eq!(np, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(nm, -1.0, epsilon = 1e-12);
    }

    #[test]
    fn linf_diagonal_kink() {
        let linf = lp(f64::INFINITY, 2);
        // ‖(1,1) + t(1,−1)‖_∞ = 1 + |t|.
        let (dp, dm) = gateaux(&linf, &v(&[1.0, 1.0]), &v(&[1.0, -1.0]), 1e-9).unwrap();
        assert_eq!((dp, dm), (1.0, -1.0));
        let (np, nm, _, _) =
            gateaux_numeric(&linf, &v(&[1.0, 1.0]), &v(&[1.0, -1.0]), 1e-9).unwrap();
        assert_abs_diff_eq!(np, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(nm, -1.0, epsilon = 1e-12);
    }

    #[test]
    fn gateaux_rejects_origin() {
        let l2 = lp(2.0, 2);
        assert!(matches!(
            gateaux(&l2, &Vector::zeros(2), &v(&[1.0, 0.0]), 1e-9),
            Err(Error::ZeroVector(_))
        ));
    }

    #[test]
    fn g_euclidean_is_inner_product() {
        let l2 = lp(2.0, 2);
        let rep = g(&l2, &v(&[3.0, 4.0]), &v(&[4.0, -3.0]), 1e-9).unwrap();
        assert_abs_diff_eq!(rep.g, 0.0, epsilon = 1e-12);
        assert_eq!(rep.method, GMethod::Analytic);
    }

    #[test]
    fn g_l3_closed_form() {
        let l3 = lp(3.0, 2);
        let rep = g(&l3, &v(&[1.0, 1.0]), &v(&[1.0, 0.0]), 1e-9).unwrap();
        // ‖x‖^{2−p} Σ |x_i|^{p−1} sgn(x_i) y_i = 2^{-1/3}.
        assert_abs_diff_eq!(rep.g, 2.0f64.powf(-1.0 / 3.0), epsilon = 1e-14);
    }

    #[test]
    fn g_at_origin_is_zero_with_derivs_unset() {
        let l3 = lp(3.0, 2);
        let rep = g(&l3, &Vector::zeros(2), &v(&[1.0, 2.0]), 1e-9).unwrap();
        assert_eq!(rep.g, 0.0);
        assert!(rep.dir_deriv_plus.is_none());
        assert_eq!(rep.method, GMethod::Analytic);
    }

    #[test]
    fn linf_additivity_violation_witness() {
        // The argmax set {1,2,3} makes g(x,·) genuinely nonlinear here.
        let linf = lp(f64::INFINITY, 3);
        let x = v(&[1.0, 1.0, 1.0]);
        let y = v(&[1.0, 0.0, 0.0]);
        let z = v(&[0.0, 1.0, 0.0]);
        let gy = g(&linf, &x, &y, 1e-9).unwrap().g;
        let gz = g(&linf, &x, &z, 1e-9).unwrap().g;
        let gyz = g(&linf, &x, &y.add(&z), 1e-9).unwrap().g;
        assert_eq!(gy, 0.5);
        assert_eq!(gz, 0.5);
        assert_eq!(gyz, 0.5); // ≠ gy + gz = 1
    }

    #[test]
    fn numeric_matches_analytic_across_catalog() {
        let specs = [
            lp(1.0, 3),
            lp(1.5, 3),
            lp(2.0, 3),
            lp(3.0, 3),
            lp(f64::INFINITY, 3),
            NormSpec::weighted_lp(Exponent::Finite(1.7), vec![1.0, 2.0, 0.5]).unwrap(),
            NormSpec::quadratic(vec![
                vec![2.0, 0.3, 0.0],
                vec![0.3, 1.0, 0.1],
                vec![0.0, 0.1, 1.5],
            ])
            .unwrap(),
        ];
        for (si, spec) in specs.iter().enumerate() {
            let xs = sample_sphere(spec, 40, 100 + si as u64).unwrap();
            let ys = sample_sphere(spec, 40, 200 + si as u64).unwrap();
            for (x, y) in xs.iter().zip(&ys) {
                let a = g(spec, x, y, 1e-9).unwrap();
                let n = g_numeric(spec, x, y, 1e-9).unwrap();
                assert!(
                    (a.g - n.g).abs() <= 1e-6,
                    "spec {si}: analytic {} vs numeric {}",
                    a.g,
                    n.g
                );
            }
        }
    }

    #[test]
    fn kt_and_stadium_analytic_agree_with_numeric() {
        for spec in [NormSpec::kt_blend(1.2).unwrap(), NormSpec::stadium(0.6).unwrap()] {
            let xs = sample_sphere(&spec, 60, 17).unwrap();
            let ys = sample_sphere(&spec, 60, 18).unwrap();
            for (x, y) in xs.iter().zip(&ys) {
                let a = g(&spec, x, y, 1e-9).unwrap();
                let n = g_numeric(&spec, x, y, 1e-9).unwrap();
                assert!(
                    (a.g - n.g).abs() <= 1e-6,
                    "analytic {} vs numeric {} at x={:?}, y={:?}",
                    a.g,
                    n.g,
                    x,
                    y
                );
            }
        }
    }

    #[test]
    fn report_invariants_hold_on_samples() {
        let spec = NormSpec::kt_blend(1.3).unwrap();
        let xs = sample_sphere(&spec, 50, 1).unwrap();
        let ys = sample_sphere(&spec, 50, 2).unwrap();
        for (x, y) in xs.iter().zip(&ys) {
            let rep = g(&spec, x, y, 1e-9).unwrap();
            let (dp, dm) = (rep.dir_deriv_plus.unwrap(), rep.dir_deriv_minus.unwrap());
            let ny = spec.evaluate(y).unwrap();
            assert!(dm <= dp + 1e-12);
            assert!(dp.abs() <= ny + 1e-9 && dm.abs() <= ny + 1e-9);
            assert!(rep.g_minus <= rep.g + 1e-12 && rep.g <= rep.g_plus + 1e-12);
        }
    }

    #[test]
    fn sip_axioms_pass_for_smooth_norm() {
        let l3 = lp(3.0, 3);
        let report = sip_check(&l3, 500, 42, 1e-8).unwrap();
        assert!(report.pass, "axioms: {:?}", report.axioms);
    }

    #[test]
    fn sip_cauchy_schwarz_never_violated_for_nonsmooth() {
        for spec in [lp(1.0, 2), lp(f64::INFINITY, 3), NormSpec::kt_blend(1.2).unwrap()] {
            let report = sip_check(&spec, 500, 43, 1e-8).unwrap();
            let cs = report
                .axioms
                .iter()
                .find(|a| a.axiom == SipAxiom::CauchySchwarz)
                .unwrap();
            assert!(cs.worst_violation <= 1e-10);
        }
    }
}

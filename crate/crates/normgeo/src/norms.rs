//! The norm catalog: construction, validation, evaluation, sphere sampling.
//!
//! Catalog variants and their closed forms (x ∈ R^n, a = |x₁|, b = |x₂| where
//! relevant):
//!
//! - `Lp`: ‖x‖_p = (Σ|x_i|^p)^{1/p}, with p = 1 and p = ∞ as explicit enum
//!   values routed to non-smooth code paths.
//! - `WeightedLp`: (Σ w_i|x_i|^p)^{1/p} with positive weights.
//! - `Quadratic`: √(xᵀAx) for symmetric positive-definite A.
//! - `KtBlend`: max{(x₁²+x₂²)^{1/2}, λ·max(|x₁|,|x₂|)} on R², 1 < λ < √2.
//!   Uniformly non-square but not strictly convex.
//! - `Polyhedral`: max_i |⟨a_i, x⟩| for a finite spanning set of functionals;
//!   the set is stored symmetrized (a_i and −a_i identified).
//! - `Stadium`: the gauge of the convex hull of the two unit disks centered
//!   (±c, 0) on R², 0 < c < 1. The hull is bounded by the flat faces y = ±1
//!   over |x| ≤ c and the outer arcs of the two disks, which join the faces
//!   tangentially; the faces' endpoints are extreme but not exposed. The
//!   gauge of (u, v) with a = |u|, b = |v| is piecewise:
//!     - if a ≤ c·b the ray meets a flat face at an interior point, and
//!       γ = b;
//!     - otherwise the ray meets an arc, and γ is the positive root of
//!       (a − cγ)² + b² = γ², i.e.
//!       γ = (−ac + √(a²c² + (1−c²)(a²+b²))) / (1−c²).
//!   The two branches agree to first order along a = c·b (the hull is C¹),
//!   so the gauge is smooth away from the origin, though not strictly convex.

use nalgebra::{DMatrix, DVector};
use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Serialize, Serializer};

use crate::seeding::rng_from_seed;
use crate::{Error, Result, Vector};

/// The exponent of an ℓ^p-type norm. `One` and `Infinity` are explicit so the
/// non-smooth endpoints never hide behind a float.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    One,
    /// Finite p with 1 < p < ∞.
    Finite(f64),
    Infinity,
}

impl Exponent {
    /// Classify a raw value, rejecting p < 1 and NaN.
    pub fn from_value(p: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidParameter(format!(
                "exponent p must satisfy p >= 1, got {p}"
            )));
        }
        Ok(if p == 1.0 {
            Exponent::One
        } else if p.is_infinite() {
            Exponent::Infinity
        } else {
            Exponent::Finite(p)
        })
    }

    /// The conjugate exponent p' with 1/p + 1/p' = 1.
    pub fn conjugate(self) -> Exponent {
        match self {
            Exponent::One => Exponent::Infinity,
            Exponent::Infinity => Exponent::One,
            Exponent::Finite(p) => Exponent::Finite(p / (p - 1.0)),
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Exponent::One => 1.0,
            Exponent::Finite(p) => p,
            Exponent::Infinity => f64::INFINITY,
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Infinity => serializer.serialize_str("inf"),
            other => serializer.serialize_str(&format!("{}", other.value())),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "variant")]
pub(crate) enum Kind {
    Lp {
        p: Exponent,
        dim: usize,
    },
    WeightedLp {
        p: Exponent,
        weights: Vec<f64>,
    },
    Quadratic {
        /// Row-major symmetric positive-definite matrix.
        matrix: Vec<Vec<f64>>,
    },
    KtBlend {
        lambda: f64,
    },
    Polyhedral {
        /// One functional per ± pair; evaluation takes absolute values.
        rows: Vec<Vec<f64>>,
        dim: usize,
    },
    Stadium {
        c: f64,
    },
}

/// An immutable, validated description of a norm from the catalog.
#[derive(Debug, Clone, Serialize)]
#[serde(transparent)]
pub struct NormSpec {
    kind: Kind,
}

impl NormSpec {
    /// ℓ^p norm on R^dim.
    pub fn lp(p: Exponent, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidSpec("dimension must be at least 1".into()));
        }
        if let Exponent::Finite(v) = p {
            if !(v > 1.0 && v.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "finite exponent must satisfy 1 < p < inf, got {v}"
                )));
            }
        }
        Ok(Self {
            kind: Kind::Lp { p, dim },
        })
    }

    /// Weighted ℓ^p norm; dimension is the number of weights.
    pub fn weighted_lp(p: Exponent, weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidSpec("weights must be nonempty".into()));
        }
        if weights.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
            return Err(Error::InvalidSpec("weights must be positive reals".into()));
        }
        if let Exponent::Finite(v) = p {
            if !(v > 1.0 && v.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "finite exponent must satisfy 1 < p < inf, got {v}"
                )));
            }
        }
        Ok(Self {
            kind: Kind::WeightedLp { p, weights },
        })
    }

    /// √(xᵀAx) for symmetric positive-definite A (given as rows).
    pub fn quadratic(matrix: Vec<Vec<f64>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidSpec("matrix must be square and nonempty".into()));
        }
        if matrix.iter().flatten().any(|a| !a.is_finite()) {
            return Err(Error::InvalidSpec("matrix entries must be finite".into()));
        }
        let scale = matrix
            .iter()
            .flatten()
            .fold(0.0f64, |m, a| m.max(a.abs()))
            .max(1.0);
        for i in 0..n {
            for j in (i + 1)..n {
                if (matrix[i][j] - matrix[j][i]).abs() > 1e-12 * scale {
                    return Err(Error::InvalidSpec(format!(
                        "matrix must be symmetric; entries ({i},{j}) and ({j},{i}) differ"
                    )));
                }
            }
        }
        let m = DMatrix::from_fn(n, n, |i, j| 0.5 * (matrix[i][j] + matrix[j][i]));
        if m.clone().cholesky().is_none() {
            return Err(Error::InvalidSpec("matrix must be positive definite".into()));
        }
        Ok(Self {
            kind: Kind::Quadratic { matrix },
        })
    }

    /// max{‖x‖₂, λ‖x‖_∞} on R², valid for 1 < λ < √2.
    pub fn kt_blend(lambda: f64) -> Result<Self> {
        if !(lambda > 1.0 && lambda < std::f64::consts::SQRT_2) {
            return Err(Error::InvalidParameter(
                "λ must lie in (1, √2)".into(),
            ));
        }
        Ok(Self {
            kind: Kind::KtBlend { lambda },
        })
    }

    /// max_i |⟨a_i, x⟩| for a finite set of functionals. The set is
    /// deduplicated up to sign (−a_i acts identically) and must span R^n.
    pub fn polyhedral(rows: Vec<Vec<f64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::InvalidSpec("functional set must be nonempty".into()));
        }
        let dim = rows[0].len();
        if dim == 0 || rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidSpec(
                "functionals must share a positive dimension".into(),
            ));
        }
        if rows.iter().flatten().any(|a| !a.is_finite()) {
            return Err(Error::InvalidSpec("functional entries must be finite".into()));
        }
        let mut dedup: Vec<Vec<f64>> = Vec::new();
        for row in rows {
            if row.iter().all(|&a| a == 0.0) {
                return Err(Error::InvalidSpec("zero functional not allowed".into()));
            }
            let dup = dedup.iter().any(|kept| {
                kept.iter().zip(&row).all(|(a, b)| a == b)
                    || kept.iter().zip(&row).all(|(a, b)| *a == -b)
            });
            if !dup {
                dedup.push(row);
            }
        }
        let m = DMatrix::from_fn(dedup.len(), dim, |i, j| dedup[i][j]);
        let scale = dedup
            .iter()
            .flatten()
            .fold(0.0f64, |m, a| m.max(a.abs()));
        if m.rank(1e-12 * scale.max(1.0)) < dim {
            return Err(Error::InvalidSpec(
                "functional set must span R^n (otherwise the gauge vanishes on a subspace)"
                    .into(),
            ));
        }
        Ok(Self {
            kind: Kind::Polyhedral { rows: dedup, dim },
        })
    }

    /// Gauge of the convex hull of unit disks centered (±c, 0), 0 < c < 1.
    pub fn stadium(c: f64) -> Result<Self> {
        if !(c > 0.0 && c < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "stadium half-length c must lie in (0, 1), got {c}"
            )));
        }
        Ok(Self {
            kind: Kind::Stadium { c },
        })
    }

    pub(crate) fn kind(&self) -> &Kind {
        &self.kind
    }

    pub fn dim(&self) -> usize {
        match &self.kind {
            Kind::Lp { dim, .. } => *dim,
            Kind::WeightedLp { weights, .. } => weights.len(),
            Kind::Quadratic { matrix } => matrix.len(),
            Kind::KtBlend { .. } => 2,
            Kind::Polyhedral { dim, .. } => *dim,
            Kind::Stadium { .. } => 2,
        }
    }

    /// True when the norm is Gâteaux differentiable away from the origin.
    pub fn is_smooth(&self) -> bool {
        match &self.kind {
            Kind::Lp { p, .. } | Kind::WeightedLp { p, .. } => matches!(p, Exponent::Finite(_)),
            Kind::Quadratic { .. } => true,
            Kind::KtBlend { .. } => false,
            Kind::Polyhedral { .. } => false,
            // The two-disk hull joins its faces tangentially, so the gauge
            // has a unique supporting functional everywhere on the sphere.
            Kind::Stadium { .. } => true,
        }
    }

    /// True when the unit sphere contains no line segment.
    pub fn is_strictly_convex(&self) -> bool {
        match &self.kind {
            Kind::Lp { p, .. } | Kind::WeightedLp { p, .. } => matches!(p, Exponent::Finite(_)),
            Kind::Quadratic { .. } => true,
            Kind::KtBlend { .. } => false,
            Kind::Polyhedral { .. } => false,
            Kind::Stadium { .. } => false,
        }
    }

    /// Evaluate ‖x‖.
    pub fn evaluate(&self, x: &Vector) -> Result<f64> {
        if x.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: x.dim(),
            });
        }
        Ok(self.eval_raw(x.as_slice()))
    }

    /// Evaluation kernel; callers guarantee the dimension matches.
    pub(crate) fn eval_raw(&self, x: &[f64]) -> f64 {
        match &self.kind {
            Kind::Lp { p, .. } => lp_norm(*p, x, None),
            Kind::WeightedLp { p, weights } => lp_norm(*p, x, Some(weights)),
            Kind::Quadratic { matrix } => {
                let mut q = 0.0;
                for (i, row) in matrix.iter().enumerate() {
                    let mut s = 0.0;
                    for (j, a) in row.iter().enumerate() {
                        s += a * x[j];
                    }
                    q += x[i] * s;
                }
                q.max(0.0).sqrt()
            }
            Kind::KtBlend { lambda } => {
                let euclid = (x[0] * x[0] + x[1] * x[1]).sqrt();
                euclid.max(lambda * x[0].abs().max(x[1].abs()))
            }
            Kind::Polyhedral { rows, .. } => rows
                .iter()
                .map(|row| row.iter().zip(x).map(|(a, xi)| a * xi).sum::<f64>().abs())
                .fold(0.0, f64::max),
            Kind::Stadium { c } => stadium_gauge(*c, x[0], x[1]),
        }
    }

    /// Gradient of the norm at x for the smooth catalog variants.
    ///
    /// The gradient is positively 0-homogeneous, satisfies ⟨∇‖·‖(x), x⟩ = ‖x‖,
    /// and has dual norm 1: it is the unique supporting functional at x/‖x‖.
    pub(crate) fn smooth_gradient(&self, x: &[f64]) -> Result<Vec<f64>> {
        if x.iter().all(|&c| c == 0.0) {
            return Err(Error::ZeroVector("norm gradient at the origin"));
        }
        match &self.kind {
            Kind::Lp { p: Exponent::Finite(p), .. } => {
                let m = self.eval_raw(x);
                Ok(x.iter()
                    .map(|&xi| signum0(xi) * (xi.abs() / m).powf(p - 1.0))
                    .collect())
            }
            Kind::WeightedLp { p: Exponent::Finite(p), weights } => {
                let m = self.eval_raw(x);
                Ok(x.iter()
                    .zip(weights)
                    .map(|(&xi, &w)| w * signum0(xi) * (xi.abs() / m).powf(p - 1.0))
                    .collect())
            }
            Kind::Quadratic { matrix } => {
                let m = self.eval_raw(x);
                Ok(matrix
                    .iter()
                    .map(|row| row.iter().zip(x).map(|(a, xi)| a * xi).sum::<f64>() / m)
                    .collect())
            }
            Kind::Stadium { c } => Ok(stadium_gradient(*c, x[0], x[1])),
            _ => Err(Error::UnsupportedSpec {
                op: "smooth_gradient",
                reason: format!("{:?} is not smooth", variant_name(&self.kind)),
            }),
        }
    }
}

fn variant_name(kind: &Kind) -> &'static str {
    match kind {
        Kind::Lp { .. } => "Lp",
        Kind::WeightedLp { .. } => "WeightedLp",
        Kind::Quadratic { .. } => "Quadratic",
        Kind::KtBlend { .. } => "KtBlend",
        Kind::Polyhedral { .. } => "Polyhedral",
        Kind::Stadium { .. } => "Stadium",
    }
}

/// sgn with sgn(0) = 0, used throughout the crate.
pub(crate) fn signum0(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        -1.0
    } else {
        0.0
    }
}

fn lp_norm(p: Exponent, x: &[f64], weights: Option<&[f64]>) -> f64 {
    let w = |i: usize| weights.map_or(1.0, |w| w[i]);
    match p {
        Exponent::One => x.iter().enumerate().map(|(i, xi)| w(i) * xi.abs()).sum(),
        Exponent::Infinity => x
            .iter()
            .enumerate()
            .map(|(i, xi)| w(i) * xi.abs())
            .fold(0.0, f64::max),
        Exponent::Finite(p) => {
            // Scale by the largest coordinate so large p cannot overflow.
            let m = x.iter().fold(0.0f64, |m, xi| m.max(xi.abs()));
            if m == 0.0 {
                return 0.0;
            }
            let s: f64 = x
                .iter()
                .enumerate()
                .map(|(i, xi)| w(i) * (xi.abs() / m).powf(p))
                .sum();
            m * s.powf(1.0 / p)
        }
    }
}

/// Stadium gauge closed form; see the module docs for the derivation.
fn stadium_gauge(c: f64, u: f64, v: f64) -> f64 {
    let a = u.abs();
    let b = v.abs();
    if a == 0.0 && b == 0.0 {
        return 0.0;
    }
    if a <= c * b {
        b
    } else {
        let one_minus_c2 = 1.0 - c * c;
        (-a * c + (a * a * c * c + one_minus_c2 * (a * a + b * b)).sqrt()) / one_minus_c2
    }
}

/// Gradient of the stadium gauge away from the origin.
fn stadium_gradient(c: f64, u: f64, v: f64) -> Vec<f64> {
    let a = u.abs();
    let b = v.abs();
    if a <= c * b {
        vec![0.0, signum0(v)]
    } else {
        // Implicit differentiation of (a − cγ)² + b² = γ²; the denominator
        // c(a − cγ) + γ is at least γ > 0 on this branch.
        let t = stadium_gauge(c, u, v);
        let r = a - c * t;
        let denom = c * r + t;
        vec![signum0(u) * r / denom, signum0(v) * b / denom]
    }
}

/// Draw `count` points on the unit sphere of `spec`, deterministically in
/// `seed`: isotropic Gaussian directions, near-zero draws rejected, then
/// normalized by the spec norm. The sequence for a given seed is a prefix of
/// the sequence for the same seed with a larger count.
pub fn sample_sphere(spec: &NormSpec, count: usize, seed: u64) -> Result<Vec<Vector>> {
    if count == 0 {
        return Err(Error::InvalidParameter("count must be at least 1".into()));
    }
    let dim = spec.dim();
    let mut rng = rng_from_seed(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let dir: Vec<f64> = (0..dim).map(|_| rng.sample::<f64, _>(StandardNormal)).collect();
        let euclid: f64 = dir.iter().map(|d| d * d).sum::<f64>().sqrt();
        if euclid < 1e-8 {
            continue;
        }
        let norm = spec.eval_raw(&dir);
        let v: Vec<f64> = dir.iter().map(|d| d / norm).collect();
        out.push(Vector::new(v).expect("normalized sample is finite"));
    }
    Ok(out)
}

/// Sampled estimate of the topological-equivalence constants m, M with
/// m‖x‖₁ ≤ ‖x‖₂ ≤ M‖x‖₁: the min and max of ‖v‖₂/‖v‖₁ over unit samples of
/// `spec1`. Returns (m_est, M_est).
pub fn equiv_bounds(
    spec1: &NormSpec,
    spec2: &NormSpec,
    count: usize,
    seed: u64,
) -> Result<(f64, f64)> {
    if spec1.dim() != spec2.dim() {
        return Err(Error::DimensionMismatch {
            expected: spec1.dim(),
            got: spec2.dim(),
        });
    }
    let samples = sample_sphere(spec1, count, seed)?;
    let mut lo = f64::INFINITY;
    let mut hi = 0.0f64;
    for v in &samples {
        let r = spec2.eval_raw(v.as_slice()) / spec1.eval_raw(v.as_slice());
        lo = lo.min(r);
        hi = hi.max(r);
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    pub(crate) fn vec2(a: f64, b: f64) -> Vector {
        Vector::new(vec![a, b]).unwrap()
    }

    #[test]
    fn lp_examples() {
        let l3 = NormSpec::lp(Exponent::Finite(3.0), 2).unwrap();
        assert_abs_diff_eq!(
            l3.evaluate(&vec2(1.0, 1.0)).unwrap(),
            2.0f64.powf(1.0 / 3.0),
            epsilon = 1e-14
        );
        let linf = NormSpec::lp(Exponent::Infinity, 2).unwrap();
        assert_eq!(linf.evaluate(&vec2(-2.0, 1.0)).unwrap(), 2.0);
        let l1 = NormSpec::lp(Exponent::One, 2).unwrap();
        assert_eq!(l1.evaluate(&vec2(-2.0, 1.0)).unwrap(), 3.0);
    }

    #[test]
    fn kt_blend_flat_face_value() {
        let kt = NormSpec::kt_blend(1.2).unwrap();
        // λ·max dominates: 1.2·(5/6) = 1 while the Euclidean part is ≈ 0.8857.
        assert_abs_diff_eq!(
            kt.evaluate(&vec2(5.0 / 6.0, 0.3)).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        assert!(matches!(
            NormSpec::kt_blend(1.5),
            Err(Error::InvalidParameter(_))
        ));
        assert!(NormSpec::kt_blend(1.0).is_err());
    }

    #[test]
    fn quadratic_requires_spd() {
        assert!(NormSpec::quadratic(vec![vec![2.0, 0.3], vec![0.3, 1.0]]).is_ok());
        assert!(NormSpec::quadratic(vec![vec![1.0, 2.0], vec![2.0, 1.0]]).is_err()); // indefinite
        assert!(NormSpec::quadratic(vec![vec![1.0, 0.5], vec![0.0, 1.0]]).is_err()); // asymmetric
        let q = NormSpec::quadratic(vec![vec![4.0, 0.0], vec![0.0, 9.0]]).unwrap();
        assert_abs_diff_eq!(q.evaluate(&vec2(1.0, 1.0)).unwrap(), 13.0f64.sqrt());
    }

    #[test]
    fn polyhedral_validation() {
        // Mirror rows are identified with their positives.
        let spec =
            NormSpec::polyhedral(vec![vec![1.0, 0.0], vec![-1.0, 0.0], vec![0.0, 1.0]]).unwrap();
        match spec.kind() {
            Kind::Polyhedral { rows, .. } => assert_eq!(rows.len(), 2),
            _ => unreachable!(),
        }
        assert_eq!(spec.evaluate(&vec2(-2.0, 1.0)).unwrap(), 2.0);
        // A non-spanning set vanishes on a subspace and is rejected.
        assert!(NormSpec::polyhedral(vec![vec![1.0, 0.0], vec![2.0, 0.0]]).is_err());
        assert!(NormSpec::polyhedral(vec![vec![0.0, 0.0]]).is_err());
    }

    #[test]
    fn stadium_gauge_branches() {
        let sp = NormSpec::stadium(0.6).unwrap();
        // Flat-face branch: junction point (c, 1) has gauge exactly 1.
        assert_eq!(sp.evaluate(&vec2(0.6, 1.0)).unwrap(), 1.0);
        assert_eq!(sp.evaluate(&vec2(0.3, 1.0)).unwrap(), 1.0);
        // Arc branch along the axis: gauge of (0.6, 0) solves the quadratic.
        assert_abs_diff_eq!(sp.evaluate(&vec2(0.6, 0.0)).unwrap(), 0.375, epsilon = 1e-15);
        // Rightmost point of the hull.
        assert_abs_diff_eq!(sp.evaluate(&vec2(1.6, 0.0)).unwrap(), 1.0, epsilon = 1e-15);
        assert!(NormSpec::stadium(1.0).is_err());
        assert!(NormSpec::stadium(0.0).is_err());
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let l2 = NormSpec::lp(Exponent::Finite(2.0), 3).unwrap();
        let err = l2.evaluate(&vec2(1.0, 0.0)).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { expected: 3, got: 2 }));
    }

    #[test]
    fn sphere_samples_are_unit_and_deterministic() {
        for spec in [
            NormSpec::lp(Exponent::One, 3).unwrap(),
            NormSpec::lp(Exponent::Finite(2.5), 3).unwrap(),
            NormSpec::lp(Exponent::Infinity, 3).unwrap(),
            NormSpec::kt_blend(1.2).unwrap(),
            NormSpec::stadium(0.4).unwrap(),
        ] {
            let a = sample_sphere(&spec, 50, 99).unwrap();
            let b = sample_sphere(&spec, 50, 99).unwrap();
            assert_eq!(a, b);
            for v in &a {
                assert!((spec.evaluate(v).unwrap() - 1.0).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn sphere_prefix_property() {
        let spec = NormSpec::lp(Exponent::Finite(2.0), 2).unwrap();
        let short = sample_sphere(&spec, 10, 7).unwrap();
        let long = sample_sphere(&spec, 25, 7).unwrap();
        assert_eq!(&long[..10], &short[..]);
    }

    #[test]
    fn sphere_dim_one_is_sign_pair() {
        let spec = NormSpec::lp(Exponent::Finite(3.0), 1).unwrap();
        for v in sample_sphere(&spec, 20, 3).unwrap() {
            assert!(v.as_slice() == [1.0] || v.as_slice() == [-1.0]);
        }
    }

    #[test]
    fn equiv_bounds_identical_specs_exact() {
        let l2 = NormSpec::lp(Exponent::Finite(2.0), 4).unwrap();
        let (m, big_m) = equiv_bounds(&l2, &l2.clone(), 200, 5).unwrap();
        assert_eq!((m, big_m), (1.0, 1.0));
    }

    #[test]
    fn equiv_bounds_linf_vs_l1() {
        let linf = NormSpec::lp(Exponent::Infinity, 2).unwrap();
        let l1 = NormSpec::lp(Exponent::One, 2).unwrap();
        let (m, big_m) = equiv_bounds(&linf, &l1, 10_000, 11).unwrap();
        // ‖x‖_∞ ≤ ‖x‖₁ ≤ 2‖x‖_∞ on R²; estimates approach the endpoints.
        assert!(m >= 1.0 && big_m <= 2.0, "({m}, {big_m}) out of [1, 2]");
        assert!(m < 1.01 && big_m > 1.99, "({m}, {big_m}) too loose");
    }
}

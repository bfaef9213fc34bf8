pub mod angles;
pub mod gfunctional;
pub mod norms;
pub mod seeding;
mod search;
mod vector;
pub use angles::{ae_ratio, ae_ratio_saturating, cos_angle, estimate_ae_constant, AngleReport, EquivEstimate};
pub use gfunctional::{g, g_numeric, gateaux, gateaux_numeric, sip_check, GMethod, GReport, SipReport};
pub use norms::{equiv_bounds, sample_sphere, Exponent, NormSpec};
pub use vector::Vector;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid vector: {0}")]
    InvalidVector(String),
    #[error("invalid norm spec: {0}")]
    InvalidSpec(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("zero vector not allowed: {0}")]
    ZeroVector(&'static str),
    #[error("point is not on the unit sphere (norm = {norm})")]
    NotOnUnitSphere { norm: f64 },
    #[error("{op} requires a smooth, strictly convex norm; {reason}")]
    UnsupportedSpec { op: &'static str, reason: String },
    #[error("numerical failure in {op}: {detail}")]
    Numerics { op: &'static str, detail: String },
    #[error("{op} failed to converge: {detail}")]
    Convergence { op: &'static str, detail: String },
}
pub type Result<T> = std::result::Result<T, Error>;

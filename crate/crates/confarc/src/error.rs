use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by geometric constructions and numerical routines.
///
/// Legitimate geometric outcomes (a point mapping to infinity under a
/// Moebius map, an empty sphere/circle intersection) are *values*, not
/// errors; the variants here signal violated preconditions or numerical
/// breakdown.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vector is not lightlike within tolerance (L(v) = {0:.3e})")]
    NotLightlike(f64),

    #[error("zero vector admits no chart projection")]
    ZeroVector,

    #[error("matrix is not pseudo-orthogonal: |A^T J A - J| = {0:.3e}")]
    NotPseudoOrthogonal(f64),

    #[error("trivector is not decomposable: Pluecker residual {0:.3e}")]
    NotDecomposable(f64),

    #[error("span is not timelike: <P, P> = {0:.3e}")]
    NotTimelike(f64),

    #[error("vector is not unit spacelike: L(v) = {0:.3e}")]
    NotUnitSpacelike(f64),

    #[error("curvature vanishes at t = {0}")]
    VanishingCurvature(f64),

    #[error("vertex at t = {0}: the conformal arc-length element vanishes")]
    Vertex(f64),

    #[error("curve passes through the point at infinity of the chart")]
    AtInfinity,

    #[error("family of circles is tangent at a constant point, not osculating")]
    TangentPencil,

    #[error("quadrature did not converge within the subdivision budget")]
    QuadratureDivergence,

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("invalid curve specification: {0}")]
    InvalidSpec(String),

    #[error("numerical failure: {0}")]
    Numerical(String),
}

impl Error {
    /// CLI exit code class: 2 for input errors, 3 for numerical errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidSpec(_) => 2,
            _ => 3,
        }
    }
}

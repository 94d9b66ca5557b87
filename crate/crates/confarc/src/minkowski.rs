//! Linear algebra of the Minkowski spaces R^{n+2}_1 (n = 1, 2, 3), the
//! light-cone charts realizing S^n and E^n, and the Moebius group O(4,1)
//! acting on R^3 (plus a point at infinity) through the light cone.
//!
//! Conventions: coordinate index 0 is the timelike direction, so the form is
//! `<x, y> = -x0 y0 + x1 y1 + ... + x_{n+1} y_{n+1}` and the metric matrix is
//! `J = diag(-1, 1, ..., 1)`. The Euclidean chart is the affine light-cone
//! section `E^n_0 = { (1 + x.x/4, -1 + x.x/4, x) }`; the spherical chart
//! `S^n(1)` is the section at coordinate `x0 = 1`.

use nalgebra::{SMatrix, SVector, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Result};

/// Vector of the Minkowski space `R^D_1` (index 0 timelike).
pub type MinkVec<const D: usize> = SVector<f64, D>;
/// Vector of `R^3_1` (ambient for 0-spheres on a circle).
pub type MinkVec3 = MinkVec<3>;
/// Vector of `R^4_1` (ambient for circles in S^2, plane-curve lifts).
pub type MinkVec4 = MinkVec<4>;
/// Vector of `R^5_1` (ambient for spheres in R^3 and the circle space).
pub type MinkVec5 = MinkVec<5>;

/// Relative tolerance for "is this lightlike" classifications.
pub const LIGHTLIKE_TOL: f64 = 1e-9;

/// The indefinite inner product `<u, v> = -u0 v0 + sum_{i>=1} u_i v_i`.
pub fn lorentz_form<const D: usize>(u: &MinkVec<D>, v: &MinkVec<D>) -> f64 {
    let mut acc = -u[0] * v[0];
    for i in 1..D {
        acc += u[i] * v[i];
    }
    acc
}

/// The Lorentz quadratic form `L(v) = <v, v>`.
pub fn lorentz_square<const D: usize>(v: &MinkVec<D>) -> f64 {
    lorentz_form(v, v)
}

/// Pseudo-norm `|v| = sqrt(|L(v)|)`.
pub fn pseudo_norm<const D: usize>(v: &MinkVec<D>) -> f64 {
    lorentz_square(v).abs().sqrt()
}

/// Metric matrix `J = diag(-1, 1, ..., 1)`.
pub fn metric<const D: usize>() -> SMatrix<f64, D, D> {
    let mut j = SMatrix::<f64, D, D>::identity();
    j[(0, 0)] = -1.0;
    j
}

/// Causal type of a vector. `Zero` is reserved for the zero vector, which
/// the lightlike class excludes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CausalClass {
    Spacelike,
    Lightlike,
    Timelike,
    Zero,
}

/// Classify `v` by the sign of `L(v)`, with `|L(v)| <= tol * |v|_eucl^2`
/// counting as lightlike. The tolerance is relative so the classification is
/// scale invariant.
pub fn causal_class<const D: usize>(v: &MinkVec<D>, tol: f64) -> CausalClass {
    let e2 = v.norm_squared();
    if e2 <= tol * tol {
        return CausalClass::Zero;
    }
    let l = lorentz_square(v);
    if l.abs() <= tol * e2 {
        CausalClass::Lightlike
    } else if l > 0.0 {
        CausalClass::Spacelike
    } else {
        CausalClass::Timelike
    }
}

/// Affine chart used to read light-cone points as points of the base space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chart {
    /// `E^3_0`: the section with `x0 - x1 = 2`; projection direction `n1`.
    Euclidean,
    /// `S^3(1)`: the section with `x0 = 1`.
    Spherical,
}

/// Result of projecting a light-cone vector to a chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ChartPoint {
    /// A finite point of the Euclidean chart.
    Euclidean(Vector3<f64>),
    /// A point of the unit 3-sphere in the spherical chart.
    Spherical(SVector<f64, 4>),
    /// The lightlike line of `n1 = (1, 1, 0, 0, 0)`: the north pole, i.e.
    /// the point at infinity of the Euclidean chart.
    AtInfinity,
}

impl ChartPoint {
    /// The Euclidean coordinates, if finite.
    pub fn euclidean(&self) -> Option<Vector3<f64>> {
        match self {
            ChartPoint::Euclidean(p) => Some(*p),
            _ => None,
        }
    }

    pub fn is_at_infinity(&self) -> bool {
        matches!(self, ChartPoint::AtInfinity)
    }
}

/// A light-cone point tagged with the chart it lives on.
#[derive(Debug, Clone, Copy)]
pub struct LiftPoint {
    vector: MinkVec5,
    chart: Chart,
}

impl LiftPoint {
    /// Wrap a raw vector, checking the light-cone and chart constraints.
    pub fn try_new(vector: MinkVec5, chart: Chart) -> Result<Self> {
        let e2 = vector.norm_squared();
        let l = lorentz_square(&vector);
        if e2 == 0.0 {
            return Err(Error::ZeroVector);
        }
        if l.abs() > 1e-10 * e2 {
            return Err(Error::NotLightlike(l));
        }
        let chart_residual = match chart {
            Chart::Euclidean => (vector[0] - vector[1] - 2.0).abs(),
            Chart::Spherical => (vector[0] - 1.0).abs(),
        };
        if chart_residual > 1e-9 * (1.0 + e2.sqrt()) {
            return Err(Error::Degenerate(format!(
                "vector violates the {chart:?} chart constraint by {chart_residual:.3e}"
            )));
        }
        Ok(Self { vector, chart })
    }

    pub fn vector(&self) -> &MinkVec5 {
        &self.vector
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }
}

/// Lift a point of R^3 to the Euclidean chart:
/// `(1 + x.x/4, -1 + x.x/4, x)`.
pub fn lift_euclidean(x: &Vector3<f64>) -> MinkVec5 {
    let q = x.norm_squared() / 4.0;
    MinkVec5::from([1.0 + q, -1.0 + q, x[0], x[1], x[2]])
}

/// Lift a unit vector of S^3 in R^4 to the spherical chart `(1, u)`.
pub fn lift_spherical(u: &SVector<f64, 4>) -> Result<MinkVec5> {
    if (u.norm_squared() - 1.0).abs() > 1e-9 {
        return Err(Error::Degenerate("spherical lift needs a unit vector".into()));
    }
    Ok(MinkVec5::from([1.0, u[0], u[1], u[2], u[3]]))
}

/// Project a light-cone vector to the given chart by rescaling along its
/// lightlike line.
///
/// In the Euclidean chart the scale is `2 / (v0 - v1)`; the line of
/// `n1 = (1, 1, 0, ..., 0)` has no finite representative and comes back as
/// [`ChartPoint::AtInfinity`].
pub fn project_to_chart(v: &MinkVec5, chart: Chart) -> Result<ChartPoint> {
    let e2 = v.norm_squared();
    if e2 == 0.0 {
        return Err(Error::ZeroVector);
    }
    let l = lorentz_square(v);
    if l.abs() > LIGHTLIKE_TOL * e2 {
        return Err(Error::NotLightlike(l));
    }
    match chart {
        Chart::Euclidean => {
            let denom = v[0] - v[1];
            if denom.abs() <= 1e-12 * e2.sqrt() {
                return Ok(ChartPoint::AtInfinity);
            }
            let s = 2.0 / denom;
            Ok(ChartPoint::Euclidean(Vector3::new(s * v[2], s * v[3], s * v[4])))
        }
        Chart::Spherical => {
            // v0^2 = v1^2 + ... + v4^2 > 0 on the cone minus the origin.
            let s = 1.0 / v[0];
            Ok(ChartPoint::Spherical(SVector::<f64, 4>::from([
                s * v[1],
                s * v[2],
                s * v[3],
                s * v[4],
            ])))
        }
    }
}

/// A Moebius transformation of `R^3 + {infinity}`, stored as a matrix of
/// O(4,1) acting on R^5_1.
#[derive(Debug, Clone, Copy)]
pub struct MoebiusMap {
    matrix: SMatrix<f64, 5, 5>,
}

impl MoebiusMap {
    /// Largest allowed `|A^T J A - J|` (Frobenius).
    pub const ORTHOGONALITY_TOL: f64 = 1e-9;

    /// Wrap a matrix after checking pseudo-orthogonality.
    pub fn try_new(matrix: SMatrix<f64, 5, 5>) -> Result<Self> {
        let residual = Self::orthogonality_residual(&matrix);
        if residual > Self::ORTHOGONALITY_TOL {
            return Err(Error::NotPseudoOrthogonal(residual));
        }
        Ok(Self { matrix })
    }

    /// Frobenius norm of `A^T J A - J`.
    pub fn orthogonality_residual(matrix: &SMatrix<f64, 5, 5>) -> f64 {
        let j = metric::<5>();
        (matrix.transpose() * j * matrix - j).norm()
    }

    pub fn identity() -> Self {
        Self { matrix: SMatrix::identity() }
    }

    pub fn matrix(&self) -> &SMatrix<f64, 5, 5> {
        &self.matrix
    }

    /// Group composition: `self` after `other`.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        MoebiusMap { matrix: self.matrix * other.matrix }
    }

    /// Inverse via `A^{-1} = J A^T J`.
    pub fn inverse(&self) -> MoebiusMap {
        let j = metric::<5>();
        MoebiusMap { matrix: j * self.matrix.transpose() * j }
    }

    /// Action on raw Minkowski vectors.
    pub fn apply_vec(&self, v: &MinkVec5) -> MinkVec5 {
        self.matrix * v
    }

    /// Conformal action on the Euclidean chart: lift, map, project.
    ///
    /// Points can legitimately land on the north pole; that is reported as
    /// [`ChartPoint::AtInfinity`], never as an error.
    pub fn apply_point(&self, x: &Vector3<f64>) -> ChartPoint {
        let w = self.matrix * lift_euclidean(x);
        // the image of a light-cone vector under O(4,1) stays on the cone
        project_to_chart(&w, Chart::Euclidean).expect("image of a lift stays lightlike")
    }

    /// Deterministic pseudo-random element of O(4,1).
    ///
    /// Draws an antisymmetric `S` with entries uniform in `[-scale, scale]`,
    /// forms the Lie-algebra element `M = J S` (so `M^T J + J M = 0`) and
    /// exponentiates. The group membership is checked a posteriori by the
    /// orthogonality residual rather than trusted from the approximant.
    pub fn random(seed: u64, scale: f64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut s = SMatrix::<f64, 5, 5>::zeros();
        for i in 0..5 {
            for k in (i + 1)..5 {
                let x = if scale > 0.0 { rng.gen_range(-scale..=scale) } else { 0.0 };
                s[(i, k)] = x;
                s[(k, i)] = -x;
            }
        }
        let m = metric::<5>() * s;
        let matrix = m.exp();
        debug_assert!(Self::orthogonality_residual(&matrix) < Self::ORTHOGONALITY_TOL);
        Self { matrix }
    }
}

/// Pseudo-orthonormalize a basis of a subspace with respect to the Lorentz
/// form, by diagonalizing the restricted Gram matrix.
///
/// Returns pseudo-orthonormal vectors together with their signs
/// `<u_i, u_i> = +/-1`, timelike vectors first. Works for bases made of
/// lightlike vectors (where naive Gram-Schmidt pivots fail); a genuinely
/// degenerate (isotropic) span is rejected at relative tolerance `1e-10`.
pub fn lorentz_orthonormalize<const D: usize>(
    vectors: &[MinkVec<D>],
) -> Result<Vec<(MinkVec<D>, f64)>> {
    let k = vectors.len();
    let gram = nalgebra::DMatrix::<f64>::from_fn(k, k, |i, j| lorentz_form(&vectors[i], &vectors[j]));
    let (eigenvalues, eigenvectors) = crate::numeric::jacobi_eigen(&gram);
    let scale = eigenvalues.iter().fold(0.0f64, |m, l| m.max(l.abs()));
    if scale == 0.0 {
        return Err(Error::Degenerate("zero span for Gram orthonormalization".into()));
    }
    let mut out: Vec<(MinkVec<D>, f64)> = Vec::with_capacity(k);
    for idx in 0..k {
        let lambda = eigenvalues[idx];
        if lambda.abs() <= 1e-10 * scale {
            return Err(Error::Degenerate(
                "span is degenerate (isotropic direction or dependent basis)".into(),
            ));
        }
        let mut u = MinkVec::<D>::zeros();
        for (j, v) in vectors.iter().enumerate() {
            u += v * eigenvectors[(j, idx)];
        }
        out.push((u / lambda.abs().sqrt(), lambda.signum()));
    }
    out.sort_by(|a, b| a.1.total_cmp(&b.1));
    Ok(out)
}

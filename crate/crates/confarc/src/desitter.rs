//! De Sitter space as the space of oriented codimension-1 spheres.
//!
//! A unit spacelike vector of `R^{n+2}_1` is the normal of an oriented
//! timelike hyperplane, whose light-cone trace is a sphere of the base
//! space; this is the bijection between `Lambda^{n+1}` and oriented
//! spheres. Geodesic separation in `Lambda` classifies sphere pairs:
//! `|<s1, s2>| < 1` means intersection (the value is `arccos` of the
//! intersection angle), `> 1` disjointness (`arccosh` gives the inversive
//! distance), `= 1` tangency.
//!
//! Orientation convention: `sphere_to_desitter` with orientation `+1` uses
//! the inward normal field, i.e. geodesic curvature `+1/r`; reversing the
//! orientation negates the de Sitter vector.

use nalgebra::Vector3;

use crate::minkowski::{
    lift_euclidean, lorentz_form, lorentz_orthonormalize, lorentz_square, metric, MinkVec,
    MinkVec3, MinkVec5,
};
use crate::{Error, Result};

/// A point of the de Sitter space `Lambda^{D-1}`: a unit spacelike vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeSitterPoint<const D: usize> {
    v: MinkVec<D>,
}

impl<const D: usize> DeSitterPoint<D> {
    /// Accept a vector with `<v, v> = 1` within `1e-9` and normalize it.
    pub fn try_new(v: MinkVec<D>) -> Result<Self> {
        let l = lorentz_square(&v);
        if (l - 1.0).abs() > 1e-9 {
            return Err(Error::NotUnitSpacelike(l));
        }
        Ok(Self { v: v / l.sqrt() })
    }

    /// Normalize any spacelike vector onto the unit pseudo-sphere.
    pub fn normalize(v: MinkVec<D>) -> Result<Self> {
        let l = lorentz_square(&v);
        if l <= 1e-12 * v.norm_squared() {
            return Err(Error::NotUnitSpacelike(l));
        }
        Ok(Self { v: v / l.sqrt() })
    }

    pub fn vector(&self) -> &MinkVec<D> {
        &self.v
    }

    /// The same sphere with reversed orientation.
    pub fn reversed(&self) -> Self {
        Self { v: -self.v }
    }
}

/// An oriented sphere or plane of R^3 in Euclidean terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EuclideanSphere {
    Sphere {
        center: Vector3<f64>,
        radius: f64,
        /// `+1` for the inward normal field (geodesic curvature `+1/r`),
        /// `-1` for the outward one.
        orientation: f64,
    },
    /// The plane `{ x : x . normal = offset }`, oriented by `normal`; the
    /// infinite-radius case.
    Plane { normal: Vector3<f64>, offset: f64 },
}

impl EuclideanSphere {
    pub fn sphere(center: Vector3<f64>, radius: f64) -> Result<Self> {
        Self::oriented_sphere(center, radius, 1.0)
    }

    pub fn oriented_sphere(center: Vector3<f64>, radius: f64, orientation: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::Degenerate(format!("sphere radius must be positive, got {radius}")));
        }
        if orientation != 1.0 && orientation != -1.0 {
            return Err(Error::Degenerate("orientation must be +1 or -1".into()));
        }
        Ok(Self::Sphere { center, radius, orientation })
    }

    pub fn plane(normal: Vector3<f64>, offset: f64) -> Result<Self> {
        let n = normal.norm();
        if n < 1e-12 {
            return Err(Error::Degenerate("plane normal must be nonzero".into()));
        }
        Ok(Self::Plane { normal: normal / n, offset: offset / n })
    }
}

/// `sigma = k_g m + n` for a lifted point `m`, lifted unit normal `n` and
/// geodesic curvature `k_g`; the unit-norm invariant holds automatically
/// because `L(m) = <m, n> = 0` and `L(n) = 1`.
pub fn sphere_from_curvature_normal<const D: usize>(
    m: &MinkVec<D>,
    n_lift: &MinkVec<D>,
    k_g: f64,
) -> Result<DeSitterPoint<D>> {
    let scale = m.norm_squared().max(1.0);
    if lorentz_square(m).abs() > 1e-9 * scale {
        return Err(Error::NotLightlike(lorentz_square(m)));
    }
    if lorentz_form(m, n_lift).abs() > 1e-9 * scale.sqrt() {
        return Err(Error::Degenerate("normal lift is not orthogonal to the point lift".into()));
    }
    if (lorentz_square(n_lift) - 1.0).abs() > 1e-9 {
        return Err(Error::Degenerate("normal lift is not unit spacelike".into()));
    }
    DeSitterPoint::try_new(m * k_g + n_lift)
}

/// Lift of a Euclidean unit normal `n` attached at the point `m`:
/// `((m.n)/2, (m.n)/2, n)`.
pub fn lift_normal(m: &Vector3<f64>, n: &Vector3<f64>) -> MinkVec5 {
    let half = m.dot(n) / 2.0;
    MinkVec5::from([half, half, n[0], n[1], n[2]])
}

/// The de Sitter point of an oriented Euclidean sphere or plane.
pub fn sphere_to_desitter(s: &EuclideanSphere) -> DeSitterPoint<5> {
    match s {
        EuclideanSphere::Sphere { center, radius, orientation } => {
            // any point of the sphere works; the result does not depend on it
            let m = center + Vector3::new(*radius, 0.0, 0.0);
            let n_in = (center - m) / *radius;
            let v = (lift_euclidean(&m) / *radius + lift_normal(&m, &n_in)) * *orientation;
            // analytically unit; renormalizing absorbs the roundoff that
            // tiny radii or far centers accumulate
            DeSitterPoint::normalize(v).expect("sphere lift is spacelike by construction")
        }
        EuclideanSphere::Plane { normal, offset } => {
            let m = normal * *offset;
            let v = lift_normal(&m, normal);
            DeSitterPoint::normalize(v).expect("plane lift is spacelike by construction")
        }
    }
}

/// Euclidean data of a de Sitter point: the inverse of
/// [`sphere_to_desitter`].
pub fn desitter_to_sphere(sigma: &DeSitterPoint<5>) -> Result<EuclideanSphere> {
    let v = sigma.vector();
    let denom = v[1] - v[0];
    let tail = Vector3::new(v[2], v[3], v[4]);
    if denom.abs() <= 1e-12 * v.norm() {
        // plane case: x . tail = v0 + v1
        return EuclideanSphere::plane(tail, v[0] + v[1]);
    }
    let center = -2.0 * tail / denom;
    let r2 = center.norm_squared() + 4.0 * (v[0] + v[1]) / denom;
    if r2 <= 0.0 {
        return Err(Error::Degenerate(format!("vector encodes no real sphere (r^2 = {r2:.3e})")));
    }
    let radius = r2.sqrt();
    let plus = sphere_to_desitter(&EuclideanSphere::Sphere { center, radius, orientation: 1.0 });
    let orientation = lorentz_form(v, plus.vector()).signum();
    EuclideanSphere::oriented_sphere(center, radius, orientation)
}

/// Kind of geodesic separating two sphere points in `Lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparationKind {
    Intersecting,
    Tangent,
    Disjoint,
}

/// Geodesic separation of two oriented spheres: the intersection angle in
/// `[0, pi]` when they meet, the inversive distance `arccosh |<s1, s2>|`
/// when they are disjoint, zero at tangency (lightlike geodesics have zero
/// length).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorentzSeparation {
    pub kind: SeparationKind,
    pub value: f64,
}

pub fn lorentz_separation<const D: usize>(
    s1: &DeSitterPoint<D>,
    s2: &DeSitterPoint<D>,
) -> LorentzSeparation {
    let c = lorentz_form(s1.vector(), s2.vector());
    let tol = 1e-9;
    // the same oriented sphere twice is a zero-angle intersection, not a
    // tangency, even though <s, s> = 1
    if (s1.vector() - s2.vector()).norm() < 1e-7 {
        return LorentzSeparation { kind: SeparationKind::Intersecting, value: 0.0 };
    }
    if c.abs() < 1.0 - tol {
        LorentzSeparation { kind: SeparationKind::Intersecting, value: c.clamp(-1.0, 1.0).acos() }
    } else if c.abs() <= 1.0 + tol {
        LorentzSeparation { kind: SeparationKind::Tangent, value: 0.0 }
    } else {
        LorentzSeparation { kind: SeparationKind::Disjoint, value: c.abs().acosh() }
    }
}

/// Light-cone trace of `span(subspace) ∩ sigma^perp`.
#[derive(Debug, Clone)]
pub enum Incidence {
    /// No real intersection.
    Empty,
    /// Two lightlike directions (e.g. circle meets sphere in two points).
    Pair([MinkVec5; 2]),
    /// Degenerate double root: tangency.
    Tangent(MinkVec5),
}

/// Intersect the light cone with `sigma^perp ∩ span(subspace)`.
///
/// A circle (3-space) cut by a sphere gives the quadratic branch with 0 or
/// 2 lightlike directions; a point pair (2-space) leaves a single line to
/// test. Each returned direction projects to the chart.
pub fn incidence_intersection(
    sigma: &DeSitterPoint<5>,
    subspace: &[MinkVec5],
) -> Result<Incidence> {
    if subspace.len() < 2 || subspace.len() > 3 {
        return Err(Error::Degenerate(format!(
            "subspace must have 2 or 3 spanning vectors, got {}",
            subspace.len()
        )));
    }
    // basis of the orthogonal slice inside the span
    let coeffs: Vec<f64> = subspace.iter().map(|b| lorentz_form(b, sigma.vector())).collect();
    let scale = coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs()));
    let mut slice: Vec<MinkVec5> = Vec::new();
    if scale < 1e-13 {
        // sigma orthogonal to the whole span
        slice.extend_from_slice(subspace);
    } else {
        let pivot = coeffs.iter().enumerate().max_by(|a, b| a.1.abs().total_cmp(&b.1.abs())).unwrap().0;
        for (i, b) in subspace.iter().enumerate() {
            if i != pivot {
                slice.push(b - subspace[pivot] * (coeffs[i] / coeffs[pivot]));
            }
        }
    }
    match slice.len() {
        1 => {
            let w = slice[0];
            if lorentz_square(&w).abs() <= 1e-9 * w.norm_squared() {
                Ok(Incidence::Tangent(w))
            } else {
                Ok(Incidence::Empty)
            }
        }
        2 => {
            let (u, w) = (slice[0], slice[1]);
            let a = lorentz_square(&u);
            let b = lorentz_form(&u, &w);
            let c = lorentz_square(&w);
            let disc = b * b - a * c;
            let mag = a.abs().max(b.abs()).max(c.abs());
            let tol = 1e-12 * mag * mag;
            if disc > tol {
                let root = disc.sqrt();
                // solve a x^2 + 2 b x + c = 0 along the better-conditioned slot
                let (d1, d2) = if a.abs() >= c.abs() {
                    (u * ((-b + root) / a) + w, u * ((-b - root) / a) + w)
                } else {
                    (u + w * ((-b + root) / c), u + w * ((-b - root) / c))
                };
                Ok(Incidence::Pair([d1, d2]))
            } else if disc >= -tol {
                let dir = if a.abs() >= c.abs() { u * (-b / a) + w } else { u + w * (-b / c) };
                Ok(Incidence::Tangent(dir))
            } else {
                Ok(Incidence::Empty)
            }
        }
        n => Err(Error::Degenerate(format!("unexpected slice dimension {n}"))),
    }
}

/// Pseudo-orthonormal frame of a timelike 3-space, the circle of light
/// directions `f0 + cos(theta) f1 + sin(theta) f2` it carries, and the de
/// Sitter plane `Lambda^2` of its 0-spheres.
#[derive(Debug, Clone)]
pub struct TimelikeFrame3 {
    /// `f[0]` timelike, `f[1]`, `f[2]` spacelike.
    pub f: [MinkVec5; 3],
}

impl TimelikeFrame3 {
    pub fn from_span(span: &[MinkVec5]) -> Result<Self> {
        let on = lorentz_orthonormalize(span)?;
        if on.len() != 3 || on[0].1 >= 0.0 || on[1].1 < 0.0 || on[2].1 < 0.0 {
            return Err(Error::NotTimelike(on.iter().map(|p| p.1).sum()));
        }
        Ok(Self { f: [on[0].0, on[1].0, on[2].0] })
    }

    /// The light direction at angle `theta` on the frame's circle.
    pub fn light_vector(&self, theta: f64) -> MinkVec5 {
        self.f[0] + self.f[1] * theta.cos() + self.f[2] * theta.sin()
    }

    /// Angle of a lightlike vector of the 3-space on the frame's circle.
    pub fn angle_of(&self, v: &MinkVec5) -> Result<f64> {
        let c0 = -lorentz_form(v, &self.f[0]);
        if c0.abs() < 1e-12 * v.norm() {
            return Err(Error::Degenerate("vector has no timelike frame component".into()));
        }
        let v = if c0 > 0.0 { *v } else { -*v };
        let c0 = c0.abs();
        Ok(f64::atan2(lorentz_form(&v, &self.f[2]) / c0, lorentz_form(&v, &self.f[1]) / c0))
    }

    /// The 0-sphere (point pair) with the given angles, as a point of the
    /// de Sitter plane `Lambda^2` in frame coordinates `R^3_1`.
    pub fn zero_sphere(&self, theta_a: f64, theta_b: f64) -> Result<DeSitterPoint<3>> {
        let pa = MinkVec3::from([1.0, theta_a.cos(), theta_a.sin()]);
        let pb = MinkVec3::from([1.0, theta_b.cos(), theta_b.sin()]);
        // Lorentz-orthogonal complement of span(pa, pb) via J (pa x pb)
        let cross = pa.cross(&pb);
        DeSitterPoint::normalize(metric::<3>() * cross)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::{Chart, ChartPoint, MinkVec4, MoebiusMap};
    use approx::assert_relative_eq;

    #[test]
    fn curvature_normal_formula_on_the_spherical_model() {
        // circle at latitude alpha on S^2(1) in R^4_1: sigma = (cot a, 1/sin a, 0, 0)
        for alpha in [0.3, 0.8, std::f64::consts::FRAC_PI_2] {
            let (sin, cos) = alpha.sin_cos();
            let m = MinkVec4::from([1.0, cos, sin, 0.0]);
            let n = MinkVec4::from([0.0, sin, -cos, 0.0]);
            let k_g = cos / sin;
            let sigma = sphere_from_curvature_normal(&m, &n, k_g).unwrap();
            let expected = MinkVec4::from([k_g, 1.0 / sin, 0.0, 0.0]);
            assert!((sigma.vector() - expected).norm() < 1e-12);
            assert_relative_eq!(lorentz_square(sigma.vector()), 1.0, epsilon = 1e-12);
        }
        // great circle: k_g = 0 gives sigma = n
        let m = MinkVec4::from([1.0, 0.0, 1.0, 0.0]);
        let n = MinkVec4::from([0.0, 1.0, 0.0, 0.0]);
        let sigma = sphere_from_curvature_normal(&m, &n, 0.0).unwrap();
        assert!((sigma.vector() - n).norm() < 1e-14);
    }

    #[test]
    fn unit_sphere_lift_is_incident_with_its_points() {
        let s = EuclideanSphere::sphere(Vector3::zeros(), 1.0).unwrap();
        let sigma = sphere_to_desitter(&s);
        assert_relative_eq!(lorentz_square(sigma.vector()), 1.0, epsilon = 1e-13);
        for p in [
            Vector3::new(1.0, 0.0, 0.0),
            Vector3::new(0.0, 0.0, 1.0),
            Vector3::new(0.6, 0.8, 0.0),
            Vector3::new(-0.36, 0.48, 0.8),
        ] {
            let inc = lorentz_form(&lift_euclidean(&p), sigma.vector());
            assert_relative_eq!(inc, 0.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn lift_does_not_depend_on_the_base_point() {
        let center = Vector3::new(0.4, -1.0, 2.0);
        let r = 1.7;
        let reference = sphere_to_desitter(&EuclideanSphere::sphere(center, r).unwrap());
        for dir in [Vector3::new(0.0, 1.0, 0.0), Vector3::new(0.0, 0.0, 1.0), Vector3::new(0.6, -0.8, 0.0)] {
            let m = center + dir * r;
            let n_in = (center - m) / r;
            let v = lift_euclidean(&m) / r + lift_normal(&m, &n_in);
            assert!((v - reference.vector()).norm() < 1e-9);
        }
    }

    #[test]
    fn plane_z_zero_lifts_to_last_axis() {
        let plane = EuclideanSphere::plane(Vector3::new(0.0, 0.0, 1.0), 0.0).unwrap();
        let sigma = sphere_to_desitter(&plane);
        assert!((sigma.vector() - MinkVec5::from([0.0, 0.0, 0.0, 0.0, 1.0])).norm() < 1e-14);
    }

    #[test]
    fn concentric_spheres_at_inversive_distance_cosh_one() {
        let s1 = sphere_to_desitter(&EuclideanSphere::sphere(Vector3::zeros(), 1.0).unwrap());
        let s2 = sphere_to_desitter(
            &EuclideanSphere::sphere(Vector3::zeros(), std::f64::consts::E).unwrap(),
        );
        assert_relative_eq!(
            lorentz_form(s1.vector(), s2.vector()),
            1.0f64.cosh(),
            epsilon = 1e-12
        );
        let sep = lorentz_separation(&s1, &s2);
        assert_eq!(sep.kind, SeparationKind::Disjoint);
        assert_relative_eq!(sep.value, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn separation_trivia() {
        let s = sphere_to_desitter(&EuclideanSphere::sphere(Vector3::zeros(), 2.0).unwrap());
        let same = lorentz_separation(&s, &s);
        assert_eq!(same.kind, SeparationKind::Intersecting);
        assert_relative_eq!(same.value, 0.0, epsilon = 1e-7);
        // orthogonal spheres: |centers|^2 = r1^2 + r2^2
        let a = sphere_to_desitter(&EuclideanSphere::sphere(Vector3::zeros(), 1.0).unwrap());
        let b = sphere_to_desitter(
            &EuclideanSphere::sphere(Vector3::new(5.0f64.sqrt(), 0.0, 0.0), 2.0).unwrap(),
        );
        let sep = lorentz_separation(&a, &b);
        assert_eq!(sep.kind, SeparationKind::Intersecting);
        assert_relative_eq!(sep.value, std::f64::consts::FRAC_PI_2, epsilon = 1e-12);
    }

    #[test]
    fn euclidean_round_trip() {
        let spheres = [
            EuclideanSphere::sphere(Vector3::new(1.0, -2.0, 0.5), 0.7).unwrap(),
            EuclideanSphere::oriented_sphere(Vector3::new(0.0, 3.0, 1.0), 2.2, -1.0).unwrap(),
            EuclideanSphere::plane(Vector3::new(1.0, 2.0, -1.0), 0.8).unwrap(),
        ];
        for s in &spheres {
            let sigma = sphere_to_desitter(s);
            let back = desitter_to_sphere(&sigma).unwrap();
            match (s, &back) {
                (
                    EuclideanSphere::Sphere { center, radius, orientation },
                    EuclideanSphere::Sphere { center: c2, radius: r2, orientation: o2 },
                ) => {
                    assert!((center - c2).norm() < 1e-10);
                    assert_relative_eq!(radius, r2, epsilon = 1e-10);
                    assert_eq!(orientation, o2);
                }
                (
                    EuclideanSphere::Plane { normal, offset },
                    EuclideanSphere::Plane { normal: n2, offset: o2 },
                ) => {
                    assert!((normal - n2).norm() < 1e-10);
                    assert_relative_eq!(offset, o2, epsilon = 1e-10);
                }
                _ => panic!("round trip changed the case"),
            }
        }
    }

    #[test]
    fn moebius_equivariance_of_the_sphere_lift() {
        // transform the sphere as a point set and compare lifts up to sign
        let s = EuclideanSphere::sphere(Vector3::new(0.5, 0.0, -0.3), 0.8).unwrap();
        let sigma = sphere_to_desitter(&s);
        let map = MoebiusMap::random(21, 0.4);
        let moved = DeSitterPoint::try_new(map.apply_vec(sigma.vector())).unwrap();
        let back = desitter_to_sphere(&moved).unwrap();
        // three points of the original sphere must land on the image sphere
        if let EuclideanSphere::Sphere { center, radius, .. } = s {
            for dir in [Vector3::x(), Vector3::y(), Vector3::z()] {
                let p = center + dir * radius;
                let q = map.apply_point(&p).euclidean().unwrap();
                match back {
                    EuclideanSphere::Sphere { center: c2, radius: r2, .. } => {
                        assert_relative_eq!((q - c2).norm(), r2, epsilon = 1e-9);
                    }
                    EuclideanSphere::Plane { normal, offset } => {
                        assert_relative_eq!(q.dot(&normal), offset, epsilon = 1e-9);
                    }
                }
            }
        }
    }

    #[test]
    fn x_axis_meets_the_unit_sphere_at_plus_minus_one() {
        let sigma = sphere_to_desitter(&EuclideanSphere::sphere(Vector3::zeros(), 1.0).unwrap());
        // the x axis as a line-circle: two of its points plus the pole
        let span = [
            lift_euclidean(&Vector3::zeros()),
            lift_euclidean(&Vector3::new(2.0, 0.0, 0.0)),
            MinkVec5::from([1.0, 1.0, 0.0, 0.0, 0.0]),
        ];
        match incidence_intersection(&sigma, &span).unwrap() {
            Incidence::Pair([d1, d2]) => {
                let mut pts: Vec<f64> = [d1, d2]
                    .iter()
                    .map(|d| {
                        crate::minkowski::project_to_chart(d, Chart::Euclidean)
                            .unwrap()
                            .euclidean()
                            .unwrap()[0]
                    })
                    .collect();
                pts.sort_by(f64::total_cmp);
                assert_relative_eq!(pts[0], -1.0, epsilon = 1e-10);
                assert_relative_eq!(pts[1], 1.0, epsilon = 1e-10);
            }
            other => panic!("expected two points, got {other:?}"),
        }
    }

    #[test]
    fn disjoint_line_and_tangent_line() {
        let sigma = sphere_to_desitter(&EuclideanSphere::sphere(Vector3::zeros(), 1.0).unwrap());
        // line x = (t, 3, 0): disjoint from the unit sphere
        let far = [
            lift_euclidean(&Vector3::new(0.0, 3.0, 0.0)),
            lift_euclidean(&Vector3::new(1.0, 3.0, 0.0)),
            MinkVec5::from([1.0, 1.0, 0.0, 0.0, 0.0]),
        ];
        assert!(matches!(incidence_intersection(&sigma, &far).unwrap(), Incidence::Empty));
        // line x = (t, 1, 0): tangent at (0, 1, 0)
        let touching = [
            lift_euclidean(&Vector3::new(0.0, 1.0, 0.0)),
            lift_euclidean(&Vector3::new(1.0, 1.0, 0.0)),
            MinkVec5::from([1.0, 1.0, 0.0, 0.0, 0.0]),
        ];
        match incidence_intersection(&sigma, &touching).unwrap() {
            Incidence::Tangent(d) => {
                let p = crate::minkowski::project_to_chart(&d, Chart::Euclidean).unwrap();
                let ChartPoint::Euclidean(p) = p else { panic!("tangent point at infinity") };
                assert!((p - Vector3::new(0.0, 1.0, 0.0)).norm() < 1e-6);
            }
            other => panic!("expected tangency, got {other:?}"),
        }
    }

    #[test]
    fn zero_spheres_on_a_line_measure_concentric_separation() {
        // radial line through concentric spheres of radii 1 and e: the point
        // pairs (+-1, +-e) in the line's own de Sitter plane sit at the same
        // Lorentz distance as the spheres, which is 1
        let frame = TimelikeFrame3::from_span(&[
            lift_euclidean(&Vector3::zeros()),
            lift_euclidean(&Vector3::new(1.0, 0.0, 0.0)),
            MinkVec5::from([1.0, 1.0, 0.0, 0.0, 0.0]),
        ])
        .unwrap();
        let angle = |x: f64| frame.angle_of(&lift_euclidean(&Vector3::new(x, 0.0, 0.0))).unwrap();
        let e = std::f64::consts::E;
        let p1 = frame.zero_sphere(angle(1.0), angle(-1.0)).unwrap();
        let p2 = frame.zero_sphere(angle(e), angle(-e)).unwrap();
        let c = lorentz_form(p1.vector(), p2.vector());
        assert_relative_eq!(c.abs(), 1.0f64.cosh(), epsilon = 1e-10);
    }
}

//! Conformal angle, cross ratios, and the infinitesimal cross-ratio
//! experiment.
//!
//! The conformal angle theta(x, y) between two curve points is the angle
//! between the tangent circles through (x, x, y) and (x, y, y); its leading
//! behaviour `theta = sqrt(kappa'^2 + kappa^2 tau^2)/6 |x - y|^2 + ...`
//! turns angle sweeps into a second, independent route to the conformal
//! arc-length element.
//!
//! Cross ratios of four points on a circle or sphere are evaluated through
//! complex coordinates. Two slot conventions circulate in conformal
//! geometry and differ by the Moebius-invariant rearrangement
//! `lambda -> 1 - lambda`; both are provided and every caller names the one
//! it means ([`CrossConvention`]).

use nalgebra::Vector3;
use num_complex::Complex64;

use crate::curve::Curve;
use crate::desitter::{
    incidence_intersection, sphere_to_desitter, EuclideanSphere, Incidence,
};
use crate::grassmann::tri_inner;
use crate::minkowski::{project_to_chart, Chart, ChartPoint, MinkVec5};
use crate::osculating::{circle_geometry, osculating_circle, tangent_circles, CircleGeometry};
use crate::{Error, Result};

/// Slot arrangement of the classic cross ratio
/// `cr(z1, z2; z3, z4) = (z1 - z3)(z2 - z4) / ((z1 - z4)(z2 - z3))`
/// applied to an argument quadruple `(P1, P2, P3, P4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CrossConvention {
    /// `cr(P1, P3; P2, P4)`: the contact pattern
    /// `(P1-P2)/(P1-P4) : (P3-P2)/(P3-P4)`, the one the infinitesimal
    /// experiment uses with `(m(t), y(t+h); m(t+h), y(t))`.
    Adjacent,
    /// `cr(P1, P2; P3, P4)`: pairs `(P1, P2)` and `(P3, P4)` split by
    /// sphere membership, the arrangement of the sphere-separation law
    /// `|cross| = ((e^l - 1)/(e^l + 1))^2`. Equals one minus the adjacent
    /// value.
    Paired,
}

/// The classic cross ratio of four complex numbers.
pub fn complex_cross_ratio(
    z1: Complex64,
    z2: Complex64,
    z3: Complex64,
    z4: Complex64,
) -> Complex64 {
    ((z1 - z3) * (z2 - z4)) / ((z1 - z4) * (z2 - z3))
}

fn arranged(points: [Complex64; 4], convention: CrossConvention) -> Complex64 {
    let [p1, p2, p3, p4] = points;
    match convention {
        CrossConvention::Adjacent => complex_cross_ratio(p1, p3, p2, p4),
        CrossConvention::Paired => complex_cross_ratio(p1, p2, p3, p4),
    }
}

/// Four points on a common oriented circle.
#[derive(Debug, Clone)]
pub struct ConcyclicQuad {
    points: [Vector3<f64>; 4],
    circle: CircleGeometry,
}

impl ConcyclicQuad {
    /// Validate incidence of all four points with the circle, within
    /// `1e-9` relative to the radius (or the line scale).
    pub fn try_new(points: [Vector3<f64>; 4], circle: CircleGeometry) -> Result<Self> {
        for p in &points {
            let defect = match &circle {
                CircleGeometry::Circle { center, radius, normal } => {
                    let d = p - center;
                    let off_plane = d.dot(normal).abs();
                    let off_radius = (d.norm() - radius).abs();
                    (off_plane + off_radius) / radius
                }
                CircleGeometry::Line { point, direction } => {
                    let d = p - point;
                    (d - direction * d.dot(direction)).norm() / (1.0 + d.norm())
                }
            };
            if defect > 1e-9 {
                return Err(Error::Degenerate(format!(
                    "point {p:?} is off the circle by {defect:.3e}"
                )));
            }
        }
        Ok(Self { points, circle })
    }

    /// Build the circle through the first three points and validate the
    /// fourth against it.
    pub fn through(points: [Vector3<f64>; 4]) -> Result<Self> {
        let circle = circle_geometry(&crate::osculating::circle_through(
            &points[0], &points[1], &points[2],
        )?)?;
        Self::try_new(points, circle)
    }

    pub fn points(&self) -> &[Vector3<f64>; 4] {
        &self.points
    }

    /// Complex coordinates of the four points in the circle's own plane
    /// frame (positively oriented around the circle normal).
    fn complex_coords(&self) -> [Complex64; 4] {
        match &self.circle {
            CircleGeometry::Circle { center, normal, .. } => {
                let n = normal.normalize();
                let seed = if n[0].abs() < 0.9 { Vector3::x() } else { Vector3::y() };
                let u = (seed - n * seed.dot(&n)).normalize();
                let w = n.cross(&u);
                self.points.map(|p| {
                    let d = p - center;
                    Complex64::new(d.dot(&u), d.dot(&w))
                })
            }
            CircleGeometry::Line { point, direction } => {
                self.points.map(|p| Complex64::new((p - point).dot(direction), 0.0))
            }
        }
    }
}

/// Cross ratio of a concyclic quadruple; real up to numerical noise, and
/// invariant under the plane-frame choice and under Moebius maps of the
/// quadruple.
pub fn cross_ratio(quad: &ConcyclicQuad, convention: CrossConvention) -> Result<Complex64> {
    let z = quad.complex_coords();
    for i in 0..4 {
        for j in (i + 1)..4 {
            if (z[i] - z[j]).norm() == 0.0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
        }
    }
    Ok(arranged(z, convention))
}

/// Cross ratio of four points on an oriented sphere, through an
/// orientation-preserving stereographic projection (Moebius-invariant, so
/// the pole choice does not matter).
pub fn sphere_cross_ratio(
    sphere: &EuclideanSphere,
    points: &[Vector3<f64>; 4],
    convention: CrossConvention,
) -> Result<Complex64> {
    let EuclideanSphere::Sphere { center, radius, .. } = sphere else {
        return Err(Error::Degenerate("stereographic projection needs a round sphere".into()));
    };
    for p in points {
        let defect = ((p - center).norm() - radius).abs() / radius;
        if defect > 1e-7 {
            return Err(Error::Degenerate(format!("point off the sphere by {defect:.3e}")));
        }
    }
    // pole: antipode of the points' mean direction, kept away from all four
    let mean: Vector3<f64> = points.iter().map(|p| (p - center).normalize()).sum();
    let pole_dir = if mean.norm() > 1e-6 {
        -mean.normalize()
    } else {
        // widely spread points: any direction far from all of them
        Vector3::z()
    };
    let pole = center + pole_dir * *radius;
    let n = pole_dir;
    let seed = if n[0].abs() < 0.9 { Vector3::x() } else { Vector3::y() };
    let u = (seed - n * seed.dot(&n)).normalize();
    let w = n.cross(&u);
    let mut z = [Complex64::new(0.0, 0.0); 4];
    for (zi, p) in z.iter_mut().zip(points) {
        let rel = p - pole;
        let denom = rel.dot(&n);
        if denom.abs() < 1e-12 * radius {
            return Err(Error::Degenerate("projection pole hit one of the points".into()));
        }
        // central projection from the pole onto the equatorial plane
        let lambda = -radius / denom;
        let q = rel * lambda;
        *zi = Complex64::new(q.dot(&u), q.dot(&w));
    }
    Ok(arranged(z, convention))
}

/// The conformal angle between the curve points at `t1` and `t2`: the
/// angle in `[0, pi]` between the tangent circles `(x, x, y)` and
/// `(x, y, y)`, read off the circle-space inner product.
///
/// The two circle points span a spacelike plane, so the angle is computed
/// from the chord `2 asin(|G1 - G2|/2)`, which keeps full precision for
/// the tiny angles the asymptotic sweeps probe (`acos` of an inner product
/// near 1 would not).
pub fn conformal_angle(curve: &Curve, t1: f64, t2: f64) -> Result<f64> {
    let (first, second) = tangent_circles(curve, t1, t2)?;
    let cos = tri_inner(first.tri(), second.tri());
    if cos < 0.0 {
        // obtuse: the chord of the reversed circle gives the complement
        let diff = first.tri() + second.tri();
        let q = tri_inner(&diff, &diff).max(0.0);
        return Ok(std::f64::consts::PI - 2.0 * (q.sqrt() / 2.0).clamp(0.0, 1.0).asin());
    }
    let diff = first.tri() - second.tri();
    let q = tri_inner(&diff, &diff).max(0.0);
    Ok(2.0 * (q.sqrt() / 2.0).clamp(0.0, 1.0).asin())
}

/// Euclidean cross-check of [`conformal_angle`]: the angle between the
/// oriented tangent directions of the two circles at the common point
/// `m(t1)`.
pub fn conformal_angle_via_tangents(curve: &Curve, t1: f64, t2: f64) -> Result<f64> {
    let (first, second) = tangent_circles(curve, t1, t2)?;
    let x = curve.point(t1)?;
    let d1 = tangent_direction_at(&circle_geometry(&first)?, &x)?;
    let d2 = tangent_direction_at(&circle_geometry(&second)?, &x)?;
    if d1.dot(&d2) < 0.0 {
        return Ok(std::f64::consts::PI - 2.0 * ((d1 + d2).norm() / 2.0).clamp(0.0, 1.0).asin());
    }
    Ok(2.0 * ((d1 - d2).norm() / 2.0).clamp(0.0, 1.0).asin())
}

fn tangent_direction_at(geom: &CircleGeometry, p: &Vector3<f64>) -> Result<Vector3<f64>> {
    match geom {
        CircleGeometry::Circle { center, normal, radius } => {
            let radial = p - center;
            if (radial.norm() - radius).abs() > 1e-6 * radius {
                return Err(Error::Degenerate("point is not on the circle".into()));
            }
            Ok(normal.cross(&radial).normalize())
        }
        CircleGeometry::Line { direction, .. } => Ok(*direction),
    }
}

/// Conformal arc-length element from an angle probe:
/// `sqrt(6 theta(t, t+h)) / delta_s`, which converges to `d rho/ds` as the
/// arc-length increment `delta_s` shrinks.
pub fn arclength_via_angle(curve: &Curve, t: f64, h: f64) -> Result<f64> {
    let theta = conformal_angle(curve, t, t + h)?;
    let ds = crate::numeric::adaptive_simpson(|u| Ok(curve.jet(u)?.speed()), t, t + h, 1e-13)?;
    Ok((6.0 * theta).sqrt() / ds)
}

/// Output of the infinitesimal cross-ratio probe.
#[derive(Debug, Clone, Copy)]
pub struct CrossRatioProbe {
    /// Cross ratio of `(m(t), y(t+h); m(t+h), y(t))` on the orthogonal
    /// sphere; real in the limit.
    pub cross: Complex64,
    /// `sqrt(6) |cross|^(1/4) / (rho(t+h) - rho(t))`; tends to 1.
    pub rho_ratio: f64,
}

/// Build the sphere orthogonal to the curve at `m(t)` through `m(t+h)`,
/// cut it with the two osculating circles, and evaluate the cross ratio of
/// the four intersection points.
pub fn infinitesimal_cross_ratio(curve: &Curve, t: f64, h: f64) -> Result<CrossRatioProbe> {
    let m1 = curve.point(t)?;
    let m2 = curve.point(t + h)?;
    let jet = curve.jet(t)?;
    let tangent = jet.d[1] / jet.speed();
    let delta = m2 - m1;
    let along = tangent.dot(&delta);
    if along.abs() < 1e-14 {
        return Err(Error::Degenerate("probe points are tangentially aligned".into()));
    }
    // center on the tangent line makes the sphere orthogonal to the curve
    let lambda = delta.norm_squared() / (2.0 * along);
    let center = m1 + tangent * lambda;
    let sphere = EuclideanSphere::sphere(center, lambda.abs())?;
    let sigma = sphere_to_desitter(&sphere);

    let y1 = second_intersection(&sigma, curve, t, &m1)?;
    let y2 = second_intersection(&sigma, curve, t + h, &m2)?;

    let cross = sphere_cross_ratio(&sphere, &[m1, y2, m2, y1], CrossConvention::Adjacent)?;
    let rho = curve.conformal_arclength(t, t + h, 1e-13)?;
    Ok(CrossRatioProbe { cross, rho_ratio: 6.0f64.sqrt() * cross.norm().powf(0.25) / rho })
}

/// The intersection point of the osculating circle at `t` with the sphere,
/// other than the curve point itself.
fn second_intersection(
    sigma: &crate::desitter::DeSitterPoint<5>,
    curve: &Curve,
    t: f64,
    curve_point: &Vector3<f64>,
) -> Result<Vector3<f64>> {
    let span = osculating_circle(curve, t)?.gamma.span_basis()?;
    match incidence_intersection(sigma, &span)? {
        Incidence::Pair(dirs) => {
            let mut best: Option<(f64, Vector3<f64>)> = None;
            for d in &dirs {
                let p = euclidean_point(d)?;
                let dist = (p - curve_point).norm();
                if best.is_none_or(|(b, _)| dist > b) {
                    best = Some((dist, p));
                }
            }
            Ok(best.expect("two directions").1)
        }
        _ => Err(Error::Degenerate(
            "osculating circle fails to cut the probe sphere twice (h too large?)".into(),
        )),
    }
}

fn euclidean_point(v: &MinkVec5) -> Result<Vector3<f64>> {
    match project_to_chart(v, Chart::Euclidean)? {
        ChartPoint::Euclidean(p) => Ok(p),
        _ => Err(Error::AtInfinity),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minkowski::MoebiusMap;
    use approx::assert_relative_eq;

    fn real_quad(xs: [f64; 4]) -> ConcyclicQuad {
        let points = xs.map(|x| Vector3::new(x, 0.0, 0.0));
        ConcyclicQuad::try_new(
            points,
            CircleGeometry::Line { point: Vector3::zeros(), direction: Vector3::x() },
        )
        .unwrap()
    }

    #[test]
    fn collinear_cross_ratio_example() {
        // (0-1)/(0-3) : (2-3)/(2-1) = -1/3 in the adjacent arrangement
        let q = real_quad([0.0, 1.0, 2.0, 3.0]);
        let v = cross_ratio(&q, CrossConvention::Adjacent).unwrap();
        assert_relative_eq!(v.re, -1.0 / 3.0, epsilon = 1e-14);
        assert_relative_eq!(v.im, 0.0, epsilon = 1e-14);
        // the paired arrangement is one minus the adjacent one
        let p = cross_ratio(&q, CrossConvention::Paired).unwrap();
        assert_relative_eq!(p.re, 4.0 / 3.0, epsilon = 1e-14);
    }

    #[test]
    fn coincident_points_collapse_to_zero() {
        let q = real_quad([0.0, 0.0, 2.0, 3.0]);
        assert_eq!(cross_ratio(&q, CrossConvention::Adjacent).unwrap(), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn cross_ratio_is_moebius_invariant() {
        let points = [
            Vector3::new(1.0, 0.0, 0.0),
            Vector3::new(0.0, 1.0, 0.0),
            Vector3::new(-1.0, 0.0, 0.0),
            Vector3::new(0.0, -1.0, 0.0),
        ];
        let q = ConcyclicQuad::through(points).unwrap();
        let reference = cross_ratio(&q, CrossConvention::Adjacent).unwrap();
        for seed in 0..10 {
            let map = MoebiusMap::random(seed, 0.4);
            let moved = points.map(|p| map.apply_point(&p).euclidean().unwrap());
            let mq = ConcyclicQuad::through(moved).unwrap();
            let v = cross_ratio(&mq, CrossConvention::Adjacent).unwrap();
            assert!((v - reference).norm() < 1e-9, "seed {seed}: {v} vs {reference}");
        }
    }

    #[test]
    fn quad_incidence_is_validated() {
        let points = [
            Vector3::new(1.0, 0.0, 0.0),
            Vector3::new(0.0, 1.0, 0.0),
            Vector3::new(-1.0, 0.0, 0.0),
            Vector3::new(0.1, -1.0, 0.0),
        ];
        assert!(ConcyclicQuad::through(points).is_err());
    }

    #[test]
    fn conformal_angle_of_a_circle_vanishes() {
        let c = Curve::circle(1.0).unwrap();
        let theta = conformal_angle(&c, 0.2, 1.9).unwrap();
        assert!(theta.abs() < 1e-7, "theta = {theta}");
    }

    #[test]
    fn conformal_angle_shrinks_with_the_gap() {
        let c = Curve::twisted_cubic().unwrap();
        let mut prev = f64::INFINITY;
        for k in 1..6 {
            let h = 0.2 * 0.5f64.powi(k);
            let theta = conformal_angle(&c, 0.1, 0.1 + h).unwrap();
            assert!(theta < prev);
            prev = theta;
        }
    }

    #[test]
    fn angle_asymptotics_match_the_element() {
        // theta ~ sqrt(kappa'^2 + kappa^2 tau^2)/6 |x - y|^2 at the twisted
        // cubic origin, where the factor is sqrt(36)/6 = 1
        let c = Curve::twisted_cubic().unwrap();
        let f = c.frenet(0.0).unwrap();
        let factor = f.element_fourth().sqrt() / 6.0;
        let mut ratios = Vec::new();
        for k in 0..6 {
            let h = 0.01 * 0.5f64.powi(k);
            let theta = conformal_angle(&c, 0.0, h).unwrap();
            let gap = (c.point(h).unwrap() - c.point(0.0).unwrap()).norm_squared();
            ratios.push(theta / (factor * gap));
        }
        let last = ratios.last().unwrap();
        assert!((last - 1.0).abs() < 2e-3, "ratios {ratios:?}");
    }

    #[test]
    fn two_angle_routes_agree() {
        let c = Curve::twisted_cubic().unwrap();
        for (t1, t2) in [(0.0, 0.4), (-0.3, 0.25), (0.1, 0.8)] {
            let a = conformal_angle(&c, t1, t2).unwrap();
            let b = conformal_angle_via_tangents(&c, t1, t2).unwrap();
            assert_relative_eq!(a, b, epsilon = 1e-8, max_relative = 1e-8);
        }
    }

    #[test]
    fn angle_element_limit_on_the_helix() {
        // d rho/ds = 1/2 for helix(1,1)
        let c = Curve::helix(1.0, 1.0).unwrap();
        let v = arclength_via_angle(&c, 0.7, 1e-3).unwrap();
        assert_relative_eq!(v, 0.5, epsilon = 1e-3);
        // circle: the probe vanishes
        let circ = Curve::circle(1.0).unwrap();
        let v = arclength_via_angle(&circ, 0.2, 1e-3).unwrap();
        assert!(v.abs() < 1e-4);
        // vertex of the ellipse: theta is cubic in h there, so the probe
        // decays like sqrt(h) to zero
        let ell = Curve::ellipse(2.0, 1.0).unwrap();
        let coarse = arclength_via_angle(&ell, 0.0, 1e-3).unwrap();
        let fine = arclength_via_angle(&ell, 0.0, 1e-5).unwrap();
        assert!(fine < coarse / 5.0, "probe not vanishing at the vertex: {coarse} -> {fine}");
        assert!(fine < 0.02, "probe too large at the vertex: {fine}");
    }

    #[test]
    fn planar_probe_is_real_to_machine_precision() {
        // tau = 0, kappa' != 0: the four points are exactly concyclic
        let ell = Curve::ellipse(2.0, 1.0).unwrap();
        let probe = infinitesimal_cross_ratio(&ell, 0.4, 1e-2).unwrap();
        assert!(
            probe.cross.im.abs() <= 1e-9 * probe.cross.re.abs(),
            "imaginary residue {:?}",
            probe.cross
        );
    }

    #[test]
    fn cross_ratio_probe_converges_on_the_twisted_cubic() {
        let c = Curve::twisted_cubic().unwrap();
        let mut hs = Vec::new();
        let mut im_over_re = Vec::new();
        let mut ratio_err = Vec::new();
        for k in 0..6 {
            let h = 0.1 * 0.5f64.powi(k);
            let probe = infinitesimal_cross_ratio(&c, 0.0, h).unwrap();
            hs.push(h);
            im_over_re.push((probe.cross.im / probe.cross.re).abs());
            ratio_err.push((probe.rho_ratio - 1.0).abs());
        }
        let im_order = crate::numeric::loglog_slope(&hs, &im_over_re);
        let ratio_order = crate::numeric::loglog_slope(&hs, &ratio_err);
        assert!(im_order >= 0.9, "im/re decays at order {im_order}: {im_over_re:?}");
        assert!(ratio_order >= 0.9, "rho ratio converges at order {ratio_order}: {ratio_err:?}");
    }
}

//! Osculating circles as points of Theta(1,3), the lightlike curve they
//! trace, and its inverse problem.
//!
//! With arc-length lifts, the osculating circle at `m(s)` is the plain
//! wedge `gamma = mbar ^ mbar' ^ mbar''` (already unit), its derivative is
//! `mbar ^ mbar' ^ mbar'''` (lightlike), and the second derivative is
//! `mbar ^ mbar' ^ mbar'''' + mbar ^ mbar'' ^ mbar'''` with
//! `L = kappa'^2 + kappa^2 tau^2`: the square of the conformal arc-length
//! element squared. Vertices are exactly the zeros of `gamma'`.
//!
//! The module also renders circle points back into Euclidean data, rebuilds
//! a curve from its family of osculating circles through the isotropic
//! 3-space of `gamma'`, carries the plane-curve analogue in `Lambda^3`, and
//! produces osculating spheres in `Lambda^4`.

use nalgebra::{SMatrix, Vector2, Vector3};

use crate::curve::{Curve, PlaneCurve};
use crate::desitter::{DeSitterPoint, TimelikeFrame3};
use crate::grassmann::{
    wedge3_stable,
    complement_basis_2, decomposability_residual, span_basis_of, tri_inner, wedge3, CirclePoint,
    TriVector,
};
use crate::minkowski::{
    lift_euclidean, lorentz_form, lorentz_square, metric, project_to_chart, Chart, ChartPoint,
    MinkVec4, MinkVec5,
};
use crate::{Error, Result};

/// The lightlike direction `n1`, the lift of the point at infinity.
fn n1() -> MinkVec5 {
    MinkVec5::from([1.0, 1.0, 0.0, 0.0, 0.0])
}

/// Osculating-circle data at one parameter value. Derivatives are taken in
/// the curve parameter `t`; arc-length versions follow from the stored
/// speed data.
#[derive(Debug, Clone, Copy)]
pub struct OsculatingSample {
    pub t: f64,
    pub gamma: CirclePoint,
    /// `d gamma / dt`
    pub gamma_dot: TriVector,
    /// `d^2 gamma / dt^2`
    pub gamma_ddot: TriVector,
    /// `ds/dt` of the underlying curve.
    pub speed: f64,
    /// `d^2 s/dt^2` of the underlying curve.
    pub speed_dot: f64,
}

impl OsculatingSample {
    /// `d gamma / ds`.
    pub fn gamma_prime(&self) -> TriVector {
        self.gamma_dot / self.speed
    }

    /// `d^2 gamma / ds^2`.
    pub fn gamma_pprime(&self) -> TriVector {
        (self.gamma_ddot - self.gamma_prime() * self.speed_dot) / (self.speed * self.speed)
    }
}

/// The osculating circle and its first two derivatives at `t`.
pub fn osculating_circle(curve: &Curve, t: f64) -> Result<OsculatingSample> {
    let arc = curve.jet(t)?.arc_jet()?;
    let l = arc.lift();
    let gamma = wedge3(&l[0], &l[1], &l[2]);
    let gamma_p = wedge3(&l[0], &l[1], &l[3]);
    let gamma_pp = wedge3(&l[0], &l[1], &l[4]) + wedge3(&l[0], &l[2], &l[3]);
    let v = arc.speed;
    let vd = arc.speed_dot;
    Ok(OsculatingSample {
        t,
        gamma: CirclePoint::try_new(gamma)?,
        gamma_dot: gamma_p * v,
        gamma_ddot: gamma_pp * (v * v) + gamma_p * vd,
        speed: v,
        speed_dot: vd,
    })
}

/// The circle through three mutually distinct points, oriented by their
/// cyclic order. Collinear points give the line through them.
pub fn circle_through(x: &Vector3<f64>, y: &Vector3<f64>, z: &Vector3<f64>) -> Result<CirclePoint> {
    let sep = (x - y).norm().min((y - z).norm()).min((x - z).norm());
    if sep < 1e-12 * (1.0 + x.norm().max(y.norm()).max(z.norm())) {
        return Err(Error::Degenerate("coincident points determine no circle".into()));
    }
    CirclePoint::from_span(&lift_euclidean(x), &lift_euclidean(y), &lift_euclidean(z))
}

/// The two tangent circles of a curve at a parameter pair: the circle
/// tangent at `m(t1)` through `m(t2)`, and the one through `m(t1)` tangent
/// at `m(t2)`. Signs follow the cyclic-order convention as the first-order
/// limits of the three-point circle.
pub fn tangent_circles(curve: &Curve, t1: f64, t2: f64) -> Result<(CirclePoint, CirclePoint)> {
    if t1 == t2 {
        return Err(Error::Degenerate("tangent circles need distinct parameters".into()));
    }
    let a1 = curve.jet(t1)?.arc_jet()?;
    let a2 = curve.jet(t2)?.arc_jet()?;
    let l1 = a1.lift();
    let l2 = a2.lift();
    // the stable wedge keeps precision when the parameter gap is tiny
    let first = CirclePoint::try_new(wedge3_stable(&l1[0], &l1[1], &l2[0]))?;
    let second = CirclePoint::try_new(wedge3_stable(&l1[0], &l2[0], &l2[1]))?;
    Ok((first, second))
}

/// Euclidean rendering of an oriented circle: a round circle or a line.
///
/// The circle's orientation is counterclockwise as seen from the tip of the
/// normal; a line is oriented along its direction.
#[derive(Debug, Clone, Copy)]
pub enum CircleGeometry {
    Circle { center: Vector3<f64>, radius: f64, normal: Vector3<f64> },
    Line { point: Vector3<f64>, direction: Vector3<f64> },
}

/// Extract Euclidean circle data from a circle point by tracing three light
/// directions of its 3-space. Round-trips with [`circle_through`] /
/// [`geometry_to_circle`].
pub fn circle_geometry(p: &CirclePoint) -> Result<CircleGeometry> {
    let span = p.span_basis()?;
    let frame = TimelikeFrame3::from_span(&span)?;
    let mut points = Vec::with_capacity(3);
    let mut infinite = None;
    for k in 0..3 {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / 3.0;
        match project_to_chart(&frame.light_vector(theta), Chart::Euclidean)? {
            ChartPoint::Euclidean(q) => points.push(q),
            ChartPoint::AtInfinity => infinite = Some(theta),
            ChartPoint::Spherical(_) => unreachable!("euclidean chart requested"),
        }
    }
    // near-infinity traces behave badly; detect the line case by testing
    // whether n1 lies in the span (its complement is orthogonal to n1)
    let is_line = infinite.is_some() || {
        let comp = complement_basis_2(&span)?;
        comp.iter().all(|u| lorentz_form(u, &n1()).abs() < 1e-8)
    };
    if is_line {
        // resample two finite, well-separated directions along the line
        let base = frame.angle_of(&n1())?;
        let p1 = chart_point(&frame.light_vector(base + std::f64::consts::PI))?;
        let p2 = chart_point(&frame.light_vector(base + 0.7 * std::f64::consts::PI))?;
        let dir = (p2 - p1).normalize();
        let oriented = geometry_to_circle(&CircleGeometry::Line { point: p1, direction: dir })?;
        let sign = tri_inner(oriented.tri(), p.tri());
        let direction = if sign >= 0.0 { dir } else { -dir };
        return Ok(CircleGeometry::Line { point: p1, direction });
    }
    let (a, b, c) = (points[0], points[1], points[2]);
    let ab = b - a;
    let ac = c - a;
    let n = ab.cross(&ac);
    let n2 = n.norm_squared();
    if n2 < 1e-20 {
        return Err(Error::Degenerate("circle trace degenerated to collinear points".into()));
    }
    let center = a + (ab.norm_squared() * ac - ac.norm_squared() * ab).cross(&n) / (2.0 * n2);
    let radius = (a - center).norm();
    let oriented = circle_through(&a, &b, &c)?;
    let sign = tri_inner(oriented.tri(), p.tri());
    let normal = n / n2.sqrt() * sign.signum();
    Ok(CircleGeometry::Circle { center, radius, normal })
}

fn chart_point(v: &MinkVec5) -> Result<Vector3<f64>> {
    match project_to_chart(v, Chart::Euclidean)? {
        ChartPoint::Euclidean(p) => Ok(p),
        _ => Err(Error::AtInfinity),
    }
}

/// The circle point of a Euclidean circle or line (inverse of
/// [`circle_geometry`]).
pub fn geometry_to_circle(geom: &CircleGeometry) -> Result<CirclePoint> {
    match geom {
        CircleGeometry::Circle { center, radius, normal } => {
            if !(radius.is_finite() && *radius > 0.0) {
                return Err(Error::Degenerate(format!("bad circle radius {radius}")));
            }
            let n = normal.normalize();
            // right-handed frame (u, w, n) so that u -> w is counterclockwise
            let seed = if n[0].abs() < 0.9 { Vector3::x() } else { Vector3::y() };
            let u = (seed - n * seed.dot(&n)).normalize();
            let w = n.cross(&u);
            let pt = |theta: f64| center + (u * theta.cos() + w * theta.sin()) * *radius;
            circle_through(&pt(0.0), &pt(2.0 * std::f64::consts::PI / 3.0), &pt(4.0 * std::f64::consts::PI / 3.0))
        }
        CircleGeometry::Line { point, direction } => {
            let d = direction.normalize();
            CirclePoint::from_span(&lift_euclidean(point), &lift_euclidean(&(point + d)), &n1())
        }
    }
}

/// Recover the curve point from the derivative of its osculating-circle
/// family: the isotropic 3-space of `gamma_dot` touches the light cone
/// along the lifted point.
///
/// `tol` bounds both the lightlike defect and the Pluecker residual of
/// `gamma_dot` relative to its Euclidean norm (finite-difference callers
/// pass a looser tolerance than analytic ones).
pub fn reconstruct_point(gamma_dot: &TriVector, tol: f64) -> Result<Vector3<f64>> {
    let e2 = gamma_dot.norm_squared();
    if e2 < 1e-16 {
        return Err(Error::Vertex(f64::NAN));
    }
    let light_defect = tri_inner(gamma_dot, gamma_dot).abs() / e2;
    if light_defect > tol {
        return Err(Error::NotLightlike(light_defect));
    }
    let decomp = decomposability_residual(gamma_dot);
    if decomp > tol {
        return Err(Error::NotDecomposable(decomp));
    }
    let span = span_basis_of_with_tol(gamma_dot)?;
    // restricted Gram matrix of the isotropic space: positive semidefinite
    // with a one-dimensional kernel along the lifted point
    let g = nalgebra::DMatrix::from_fn(3, 3, |i, k| lorentz_form(&span[i], &span[k]));
    let (eigenvalues, eigenvectors) = crate::numeric::jacobi_eigen(&g);
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|&a, &b| eigenvalues[a].abs().total_cmp(&eigenvalues[b].abs()));
    let smallest = eigenvalues[idx[0]].abs();
    let largest = eigenvalues[idx[2]].abs();
    // the kernel defect scales with the derivative noise the caller allows
    if smallest > 1e-6f64.max(tol) * largest {
        return Err(Error::Degenerate(format!(
            "span of gamma_dot is not isotropic (kernel ratio {:.3e})",
            smallest / largest
        )));
    }
    let c = eigenvectors.column(idx[0]);
    let dir = span[0] * c[0] + span[1] * c[1] + span[2] * c[2];
    // the extracted direction is lightlike only up to the derivative noise,
    // so rescale onto the chart directly instead of the strict projector
    let denom = dir[0] - dir[1];
    if denom.abs() <= 1e-9 * dir.norm() {
        return Err(Error::AtInfinity);
    }
    Ok(Vector3::new(dir[2], dir[3], dir[4]) * (2.0 / denom))
}

// span extraction without re-checking decomposability (already validated
// against the caller's tolerance)
fn span_basis_of_with_tol(p: &TriVector) -> Result<[MinkVec5; 3]> {
    span_basis_of(&(p / p.norm())).or_else(|_| {
        // fall back for loose tolerances: take the kernel anyway
        crate::grassmann::span_basis_relaxed(&(p / p.norm()))
    })
}

/// Rebuild curve points from a family of osculating circles, estimating
/// `gamma_dot` by centered differences after a sign-coherence pass.
///
/// Returns one point per interior sample. A vanishing derivative reports a
/// vertex; a derivative with a degenerate second difference reports a
/// tangent pencil (a family of circles through one fixed point, which is
/// not an osculating family).
pub fn reconstruct_curve(
    samples: &[(f64, CirclePoint)],
    tol: f64,
) -> Result<Vec<(f64, Vector3<f64>)>> {
    if samples.len() < 3 {
        return Err(Error::Degenerate("need at least 3 circle samples".into()));
    }
    let mut tris: Vec<TriVector> = samples.iter().map(|(_, c)| *c.tri()).collect();
    for k in 1..tris.len() {
        if tri_inner(&tris[k], &tris[k - 1]) < 0.0 {
            tris[k] = -tris[k];
        }
    }
    let mut out = Vec::with_capacity(samples.len() - 2);
    for k in 1..samples.len() - 1 {
        let dt = samples[k + 1].0 - samples[k - 1].0;
        let gd = (tris[k + 1] - tris[k - 1]) / dt;
        let gdd =
            (tris[k + 1] - tris[k] * 2.0 + tris[k - 1]) / (0.25 * dt * dt);
        if gd.norm() < 1e-8 {
            return Err(Error::Vertex(samples[k].0));
        }
        // rank of span(gamma_dot, gamma_ddot) by the 10x2 singular values
        let m = nalgebra::SMatrix::<f64, 10, 2>::from_columns(&[gd, gdd]);
        let svd = m.svd(false, false);
        if svd.singular_values[1] < 1e-6 * svd.singular_values[0] {
            return Err(Error::TangentPencil);
        }
        out.push((samples[k].0, reconstruct_point(&gd, tol)?));
    }
    Ok(out)
}

/// Orthonormal bases of the 3-space of a circle point and its complement,
/// the frame behind the `Hom(Pi, Pi_perp)` tangent picture.
pub struct TangentFrame {
    /// Basis of the circle's 3-space, timelike vector first.
    pub pi: [MinkVec5; 3],
    /// Spacelike basis of the complement.
    pub perp: [MinkVec5; 2],
}

impl TangentFrame {
    pub fn at(gamma: &CirclePoint) -> Result<Self> {
        let span = gamma.span_basis()?;
        let on = crate::minkowski::lorentz_orthonormalize(&span)?;
        if on.len() != 3 || on[0].1 >= 0.0 {
            return Err(Error::NotTimelike(0.0));
        }
        let pi = [on[0].0, on[1].0, on[2].0];
        let perp = complement_basis_2(&span)?;
        Ok(Self { pi, perp })
    }

    /// The basis trivector with slot `i` of the 3-space replaced by
    /// complement vector `j`, and its squared norm sign.
    fn slot(&self, i: usize, j: usize) -> (TriVector, f64) {
        let mut vecs = self.pi;
        vecs[i] = self.perp[j];
        let norm = if i == 0 { -1.0 } else { 1.0 };
        (wedge3(&vecs[0], &vecs[1], &vecs[2]), norm)
    }

    /// Represent a tangent trivector as the 2x3 matrix of
    /// `Hom(Pi, Pi_perp)`; rows correspond to the complement basis, columns
    /// to the (timelike, spacelike, spacelike) basis of the 3-space.
    pub fn hom_of(&self, tangent: &TriVector) -> SMatrix<f64, 2, 3> {
        SMatrix::<f64, 2, 3>::from_fn(|j, i| {
            let (b, norm) = self.slot(i, j);
            tri_inner(tangent, &b) / norm
        })
    }

    /// Inverse of [`Self::hom_of`] on the Hom image.
    pub fn tangent_of(&self, a: &SMatrix<f64, 2, 3>) -> TriVector {
        let mut out = TriVector::zeros();
        for i in 0..3 {
            for j in 0..2 {
                out += self.slot(i, j).0 * a[(j, i)];
            }
        }
        out
    }
}

/// The Burstall condition: a tangent vector of Theta(1,3) at `gamma` is
/// lightlike *and* decomposable exactly when its `Hom(Pi, Pi_perp)` rows
/// `a1, a2` satisfy `<a1,a1> = <a2,a2> = <a1,a2> = 0` in the Minkowski
/// `R^3_1` induced by the (timelike, spacelike, spacelike) column order.
pub fn burstall_check(gamma: &CirclePoint, gamma_dot: &TriVector, tol: f64) -> Result<bool> {
    let frame = TangentFrame::at(gamma)?;
    let a = frame.hom_of(gamma_dot);
    let form3 = |u: &nalgebra::RowSVector<f64, 3>, v: &nalgebra::RowSVector<f64, 3>| {
        -u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
    };
    let a1 = a.row(0).into_owned();
    let a2 = a.row(1).into_owned();
    Ok(form3(&a1, &a1).abs() <= tol && form3(&a2, &a2).abs() <= tol && form3(&a1, &a2).abs() <= tol)
}

/// Data of the plane-curve analogue: the osculating circle as a point of
/// `Lambda^3` in R^4_1, with its first two arc-length derivatives.
#[derive(Debug, Clone, Copy)]
pub struct PlanarOsculating {
    pub sigma: DeSitterPoint<4>,
    /// `d sigma / ds`; equals `k' mbar`, lightlike.
    pub prime: MinkVec4,
    /// `d^2 sigma / ds^2`; `L = k'^2`.
    pub pprime: MinkVec4,
    pub speed: f64,
    pub speed_dot: f64,
}

impl PlanarOsculating {
    /// `d^2 sigma / dt^2` for quadrature in the curve parameter.
    pub fn ddot_t(&self) -> MinkVec4 {
        self.pprime * (self.speed * self.speed) + self.prime * self.speed_dot
    }

    /// `d sigma / dt`.
    pub fn dot_t(&self) -> MinkVec4 {
        self.prime * self.speed
    }
}

/// Osculating circle of a plane curve as `sigma = k mbar + nbar` in R^4_1,
/// with the left normal `n = rot90(m')` and signed curvature `k`.
pub fn osculating_circle_2d(pc: &PlaneCurve, t: f64) -> Result<PlanarOsculating> {
    let d = pc.arc_data(t)?;
    let mbar = crate::curve::lift_plane_jets(&d.m);
    let rot = |v: Vector2<f64>| Vector2::new(-v[1], v[0]);
    let n: [Vector2<f64>; 3] = [rot(d.m[1]), rot(d.m[2]), rot(d.m[3])];
    // nbar^(r) from Leibniz on (m . n)/2
    let mut nbar = [MinkVec4::zeros(); 3];
    for (r, slot) in nbar.iter_mut().enumerate() {
        let mut q = 0.0;
        for j in 0..=r {
            let binom = [[1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [1.0, 2.0, 1.0]][r][j];
            q += binom * d.m[j].dot(&n[r - j]);
        }
        let half = q / 2.0;
        *slot = MinkVec4::from([half, half, n[r][0], n[r][1]]);
    }
    let k = [d.k, d.k_s, d.k_ss];
    let sigma = mbar[0] * k[0] + nbar[0];
    let prime = mbar[1] * k[0] + mbar[0] * k[1] + nbar[1];
    let pprime = mbar[2] * k[0] + mbar[1] * (2.0 * k[1]) + mbar[0] * k[2] + nbar[2];
    Ok(PlanarOsculating {
        sigma: DeSitterPoint::try_new(sigma)?,
        prime,
        pprime,
        speed: d.speed,
        speed_dot: d.speed_dot,
    })
}

/// The osculating sphere: the unit spacelike generator of the orthogonal
/// complement of `span(mbar, mbar', mbar'', mbar''')`.
///
/// At a vertex the span degenerates and the complement is no longer a
/// spacelike line; that is reported as a vertex error. The sign is fixed by
/// making the largest-magnitude coordinate positive; continuity along a
/// curve is the caller's concern (see the sphere-curve builder).
#[allow(clippy::needless_range_loop)]
pub fn osculating_sphere(curve: &Curve, t: f64) -> Result<DeSitterPoint<5>> {
    let arc = curve.jet(t)?.arc_jet()?;
    let l = arc.lift();
    let j = metric::<5>();
    let mut m = SMatrix::<f64, 5, 5>::zeros();
    for r in 0..4 {
        m.set_row(r, &(j * l[r]).transpose());
    }
    let svd = m.svd(false, true);
    let v_t = svd.v_t.expect("svd vectors");
    let mut order: Vec<usize> = (0..5).collect();
    order.sort_by(|&a, &b| svd.singular_values[a].total_cmp(&svd.singular_values[b]));
    // a 4-dimensional span leaves exactly one near-zero singular value
    if svd.singular_values[order[1]] < 1e-8 * svd.singular_values[order[4]] {
        return Err(Error::Vertex(t));
    }
    let mut sigma: MinkVec5 = v_t.row(order[0]).transpose();
    let l2 = lorentz_square(&sigma);
    if l2 <= 0.0 {
        return Err(Error::Vertex(t));
    }
    sigma /= l2.sqrt();
    let lead = sigma.iter().enumerate().max_by(|a, b| a.1.abs().total_cmp(&b.1.abs())).unwrap().0;
    if sigma[lead] < 0.0 {
        sigma = -sigma;
    }
    DeSitterPoint::try_new(sigma)
}

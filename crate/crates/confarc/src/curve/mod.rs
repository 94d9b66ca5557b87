//! Parametric curves in R^3 with exact derivative access up to order 4,
//! Frenet data, and the conformal arc-length machinery.
//!
//! Every curve evaluation produces a [`CurveJet`]: the position and its
//! first four `t`-derivatives. Arc-length reparametrization is virtual:
//! `s`-derivatives come out of the jet by the chain rule (never by
//! resampling), so fourth derivatives stay exact for the analytic families.
//! The light-cone lift `(1 + m.m/4, -1 + m.m/4, m)` and its derivative
//! table feed the osculating-circle constructions downstream.

mod spline;

pub use spline::SampledCurve;

use nalgebra::{SVector, Vector2, Vector3};
use serde::{Deserialize, Serialize};

use crate::minkowski::{MinkVec4, MinkVec5, MoebiusMap};
use crate::numeric::adaptive_simpson;
use crate::{Error, Result};

/// Binomial rows for Leibniz products up to order 4.
const BINOM: [[f64; 5]; 5] = [
    [1.0, 0.0, 0.0, 0.0, 0.0],
    [1.0, 1.0, 0.0, 0.0, 0.0],
    [1.0, 2.0, 1.0, 0.0, 0.0],
    [1.0, 3.0, 3.0, 1.0, 0.0],
    [1.0, 4.0, 6.0, 4.0, 1.0],
];

/// Position and derivatives with respect to the curve parameter `t`,
/// `d[k] = d^k m / dt^k` for `k = 0..=4`.
#[derive(Debug, Clone, Copy)]
pub struct CurveJet {
    pub d: [Vector3<f64>; 5],
}

/// Position and derivatives with respect to the arc length `s`, together
/// with the parametric speed data needed to convert back.
#[derive(Debug, Clone, Copy)]
pub struct ArcJet {
    /// `m, m', m'', m''', m''''` (derivatives in `s`).
    pub m: [Vector3<f64>; 5],
    /// `ds/dt` at the evaluation point.
    pub speed: f64,
    /// `d^2 s/dt^2` at the evaluation point.
    pub speed_dot: f64,
}

/// Chain-rule conversion of `t`-jets to arc-length jets, generic in the
/// ambient dimension.
pub fn arc_jets<const N: usize>(
    d: &[SVector<f64, N>; 5],
) -> Result<([SVector<f64, N>; 5], f64, f64)> {
    let v2 = d[1].norm_squared();
    if v2 <= 1e-24 {
        return Err(Error::Degenerate("curve is not regular: |m'(t)| vanishes".into()));
    }
    let v = v2.sqrt();
    let vd = d[1].dot(&d[2]) / v;
    let vdd = (d[2].dot(&d[2]) + d[1].dot(&d[3]) - vd * vd) / v;
    let vddd = (3.0 * d[2].dot(&d[3]) + d[1].dot(&d[4]) - 3.0 * vd * vdd) / v;
    // derivatives of the inverse parametrization t(s)
    let g1 = 1.0 / v;
    let g2 = -vd / v.powi(3);
    let g3 = -vdd / v.powi(4) + 3.0 * vd * vd / v.powi(5);
    let g4 = -vddd / v.powi(5) + 10.0 * vd * vdd / v.powi(6) - 15.0 * vd.powi(3) / v.powi(7);
    let s1 = d[1] * g1;
    let s2 = d[2] * (g1 * g1) + d[1] * g2;
    let s3 = d[3] * (g1 * g1 * g1) + d[2] * (3.0 * g1 * g2) + d[1] * g3;
    let s4 = d[4] * (g1 * g1 * g1 * g1)
        + d[3] * (6.0 * g1 * g1 * g2)
        + d[2] * (3.0 * g2 * g2 + 4.0 * g1 * g3)
        + d[1] * g4;
    Ok(([d[0], s1, s2, s3, s4], v, vd))
}

impl CurveJet {
    pub fn position(&self) -> Vector3<f64> {
        self.d[0]
    }

    pub fn speed(&self) -> f64 {
        self.d[1].norm()
    }

    pub fn arc_jet(&self) -> Result<ArcJet> {
        let (m, speed, speed_dot) = arc_jets(&self.d)?;
        Ok(ArcJet { m, speed, speed_dot })
    }

    /// `t`-derivatives of the light-cone lift, by the Leibniz rule on
    /// `m.m`.
    pub fn lift_t(&self) -> [MinkVec5; 5] {
        lift_jets(&self.d)
    }
}

impl ArcJet {
    /// Arc-length derivatives of the light-cone lift.
    pub fn lift(&self) -> [MinkVec5; 5] {
        lift_jets(&self.m)
    }
}

/// Derivatives of the lift `(1 + q/4, -1 + q/4, m)` with `q = m.m`, valid
/// for jets in either parametrization.
fn lift_jets(m: &[Vector3<f64>; 5]) -> [MinkVec5; 5] {
    let mut out = [MinkVec5::zeros(); 5];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut qk = 0.0;
        for j in 0..=k {
            qk += BINOM[k][j] * m[j].dot(&m[k - j]);
        }
        let head = qk / 4.0;
        let affine = if k == 0 { 1.0 } else { 0.0 };
        *slot = MinkVec5::from([head + affine, head - affine, m[k][0], m[k][1], m[k][2]]);
    }
    out
}

/// Frenet data at a point: parametric speed, curvature, torsion, and the
/// arc-length derivatives the conformal invariants need.
#[derive(Debug, Clone, Copy)]
pub struct FrenetData {
    pub speed: f64,
    pub kappa: f64,
    pub tau: f64,
    /// `d kappa / ds`
    pub kappa_s: f64,
    /// `d^2 kappa / ds^2`
    pub kappa_ss: f64,
    /// `d tau / ds`
    pub tau_s: f64,
}

impl FrenetData {
    /// The fourth power of the conformal arc-length element in arc-length
    /// parametrization: `kappa'^2 + kappa^2 tau^2`.
    ///
    /// Values below the roundoff floor of the contributing dot products are
    /// clamped to exact zero, so curves that are genuinely vertex-everywhere
    /// (circles, lines) report a vanishing element instead of fourth-root
    /// noise.
    pub fn element_fourth(&self) -> f64 {
        let w = self.kappa_s * self.kappa_s + self.kappa * self.kappa * self.tau * self.tau;
        // |kappa'| and |kappa tau| are both bounded by |m'''| and
        // F3 = kappa^4 + w is |m'''|^2, which sets the noise scale
        let f3 = self.kappa.powi(4) + w;
        if w < 1e-28 * f3 * f3 {
            0.0
        } else {
            w
        }
    }
}

fn det3(a: &Vector3<f64>, b: &Vector3<f64>, c: &Vector3<f64>) -> f64 {
    a.cross(b).dot(c)
}

/// Frenet data out of an arc jet. Fails when the curvature is below
/// `1e-12`, since every torsion-bearing formula divides by it.
pub fn frenet_from_arc(jet: &ArcJet) -> Result<FrenetData> {
    let m = &jet.m;
    let kappa2 = m[2].norm_squared();
    if kappa2 < 1e-24 {
        return Err(Error::VanishingCurvature(f64::NAN));
    }
    let kappa = kappa2.sqrt();
    let kappa_s = m[2].dot(&m[3]) / kappa;
    let kappa_ss = (m[3].norm_squared() + m[2].dot(&m[4]) - kappa_s * kappa_s) / kappa;
    let tau = det3(&m[1], &m[2], &m[3]) / kappa2;
    let tau_s = det3(&m[1], &m[2], &m[4]) / kappa2 - 2.0 * kappa_s * tau / kappa;
    Ok(FrenetData { speed: jet.speed, kappa, tau, kappa_s, kappa_ss, tau_s })
}

/// Serializable curve description, the wire format consumed by the CLI.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CurveSpec {
    Helix {
        a: f64,
        b: f64,
        #[serde(default)]
        domain: Option<[f64; 2]>,
    },
    Circle {
        r: f64,
        #[serde(default)]
        domain: Option<[f64; 2]>,
    },
    Ellipse {
        a: f64,
        b: f64,
        #[serde(default)]
        domain: Option<[f64; 2]>,
    },
    TwistedCubic {
        #[serde(default)]
        domain: Option<[f64; 2]>,
    },
    /// Component-wise polynomial `m_i(t) = sum_k coeffs[i][k] t^k`.
    Polynomial {
        coeffs: [Vec<f64>; 3],
        #[serde(default)]
        domain: Option<[f64; 2]>,
    },
    Samples {
        points: Vec<[f64; 3]>,
        #[serde(default)]
        closed: bool,
        #[serde(default)]
        domain: Option<[f64; 2]>,
    },
}

#[derive(Debug, Clone)]
enum CurveKind {
    Helix { a: f64, b: f64 },
    Circle { r: f64 },
    Ellipse { a: f64, b: f64 },
    TwistedCubic,
    Polynomial { coeffs: [Vec<f64>; 3] },
    Samples(SampledCurve),
    Transformed { base: Box<Curve>, map: MoebiusMap },
}

/// A parametric curve with derivative access up to order 4.
///
/// The domain is the default evaluation window; the analytic families are
/// defined on all of R and may be evaluated slightly outside it (finite
/// difference probes near the ends rely on this). Regularity `|m'| > 0` is
/// checked on a sample grid at construction.
#[derive(Debug, Clone)]
pub struct Curve {
    kind: CurveKind,
    domain: (f64, f64),
}

const TAU_FULL: f64 = 2.0 * std::f64::consts::PI;

impl Curve {
    pub fn helix(a: f64, b: f64) -> Result<Self> {
        Self::with_domain(CurveKind::Helix { a, b }, (0.0, TAU_FULL))
    }

    pub fn circle(r: f64) -> Result<Self> {
        Self::with_domain(CurveKind::Circle { r }, (0.0, TAU_FULL))
    }

    pub fn ellipse(a: f64, b: f64) -> Result<Self> {
        Self::with_domain(CurveKind::Ellipse { a, b }, (0.0, TAU_FULL))
    }

    pub fn twisted_cubic() -> Result<Self> {
        Self::with_domain(CurveKind::TwistedCubic, (-1.0, 1.0))
    }

    pub fn polynomial(coeffs: [Vec<f64>; 3]) -> Result<Self> {
        Self::with_domain(CurveKind::Polynomial { coeffs }, (-1.0, 1.0))
    }

    pub fn from_samples(points: &[[f64; 3]], closed: bool) -> Result<Self> {
        let spline = SampledCurve::fit(points, closed)?;
        let domain = spline.domain();
        Self::with_domain(CurveKind::Samples(spline), domain)
    }

    pub fn from_spec(spec: &CurveSpec) -> Result<Self> {
        let curve = match spec {
            CurveSpec::Helix { a, b, domain } => Self::helix(*a, *b)?.try_domain(*domain)?,
            CurveSpec::Circle { r, domain } => Self::circle(*r)?.try_domain(*domain)?,
            CurveSpec::Ellipse { a, b, domain } => Self::ellipse(*a, *b)?.try_domain(*domain)?,
            CurveSpec::TwistedCubic { domain } => Self::twisted_cubic()?.try_domain(*domain)?,
            CurveSpec::Polynomial { coeffs, domain } => {
                Self::polynomial(coeffs.clone())?.try_domain(*domain)?
            }
            CurveSpec::Samples { points, closed, domain } => {
                Self::from_samples(points, *closed)?.try_domain(*domain)?
            }
        };
        Ok(curve)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let spec: CurveSpec =
            serde_json::from_str(text).map_err(|e| Error::InvalidSpec(e.to_string()))?;
        Self::from_spec(&spec)
    }

    fn try_domain(self, domain: Option<[f64; 2]>) -> Result<Self> {
        match domain {
            None => Ok(self),
            Some([a, b]) => Self::with_domain(self.kind, (a, b)),
        }
    }

    fn with_domain(kind: CurveKind, domain: (f64, f64)) -> Result<Self> {
        if !(domain.0.is_finite() && domain.1.is_finite() && domain.0 < domain.1) {
            return Err(Error::InvalidSpec(format!("bad domain {domain:?}")));
        }
        let curve = Self { kind, domain };
        // regularity check on a coarse grid
        for k in 0..=64 {
            let t = domain.0 + (domain.1 - domain.0) * k as f64 / 64.0;
            let jet = curve.jet(t)?;
            if jet.speed() < 1e-12 {
                return Err(Error::InvalidSpec(format!("curve is singular near t = {t}")));
            }
        }
        Ok(curve)
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    /// Restrict or extend the evaluation window.
    pub fn set_domain(mut self, a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && a < b) {
            return Err(Error::InvalidSpec(format!("bad domain [{a}, {b}]")));
        }
        self.domain = (a, b);
        Ok(self)
    }

    /// The Moebius image of this curve (derivatives follow by the quotient
    /// rule through the chart; points crossing infinity make `jet` fail).
    pub fn transformed(&self, map: &MoebiusMap) -> Curve {
        Curve {
            kind: CurveKind::Transformed { base: Box::new(self.clone()), map: *map },
            domain: self.domain,
        }
    }

    pub fn point(&self, t: f64) -> Result<Vector3<f64>> {
        Ok(self.jet(t)?.position())
    }

    /// Position and derivatives to order 4 at `t`.
    pub fn jet(&self, t: f64) -> Result<CurveJet> {
        let d = match &self.kind {
            CurveKind::Helix { a, b } => {
                let (s, c) = t.sin_cos();
                [
                    Vector3::new(a * c, a * s, b * t),
                    Vector3::new(-a * s, a * c, *b),
                    Vector3::new(-a * c, -a * s, 0.0),
                    Vector3::new(a * s, -a * c, 0.0),
                    Vector3::new(a * c, a * s, 0.0),
                ]
            }
            CurveKind::Circle { r } => {
                let (s, c) = t.sin_cos();
                [
                    Vector3::new(r * c, r * s, 0.0),
                    Vector3::new(-r * s, r * c, 0.0),
                    Vector3::new(-r * c, -r * s, 0.0),
                    Vector3::new(r * s, -r * c, 0.0),
                    Vector3::new(r * c, r * s, 0.0),
                ]
            }
            CurveKind::Ellipse { a, b } => {
                let (s, c) = t.sin_cos();
                [
                    Vector3::new(a * c, b * s, 0.0),
                    Vector3::new(-a * s, b * c, 0.0),
                    Vector3::new(-a * c, -b * s, 0.0),
                    Vector3::new(a * s, -b * c, 0.0),
                    Vector3::new(a * c, b * s, 0.0),
                ]
            }
            CurveKind::TwistedCubic => [
                Vector3::new(t, t * t, t * t * t),
                Vector3::new(1.0, 2.0 * t, 3.0 * t * t),
                Vector3::new(0.0, 2.0, 6.0 * t),
                Vector3::new(0.0, 0.0, 6.0),
                Vector3::zeros(),
            ],
            CurveKind::Polynomial { coeffs } => {
                let mut d = [Vector3::zeros(); 5];
                for (axis, cs) in coeffs.iter().enumerate() {
                    for (order, slot) in d.iter_mut().enumerate() {
                        let mut acc = 0.0;
                        for (k, &c) in cs.iter().enumerate().skip(order) {
                            let mut fall = 1.0;
                            for j in 0..order {
                                fall *= (k - j) as f64;
                            }
                            acc += c * fall * t.powi((k - order) as i32);
                        }
                        slot[axis] = acc;
                    }
                }
                d
            }
            CurveKind::Samples(spline) => spline.jet(t)?,
            CurveKind::Transformed { base, map } => {
                let lift = base.jet(t)?.lift_t();
                let w: Vec<MinkVec5> = lift.iter().map(|v| map.apply_vec(v)).collect();
                return transformed_jet(&w);
            }
        };
        Ok(CurveJet { d })
    }

    /// Frenet data at `t`.
    pub fn frenet(&self, t: f64) -> Result<FrenetData> {
        frenet_from_arc(&self.jet(t)?.arc_jet()?)
    }

    /// The conformal arc-length element in the `t`-parametrization,
    /// `d rho/dt = (kappa'^2 + kappa^2 tau^2)^(1/4) |m'(t)|`.
    pub fn conformal_arclength_element(&self, t: f64) -> Result<f64> {
        let f = self.frenet(t)?;
        Ok(f.element_fourth().powf(0.25) * f.speed)
    }

    /// Conformal arc-length `rho(b) - rho(a)` by adaptive quadrature.
    pub fn conformal_arclength(&self, a: f64, b: f64, tol: f64) -> Result<f64> {
        adaptive_simpson(|t| self.conformal_arclength_element(t), a, b, tol)
    }

    /// Vertex test: `kappa'^2 + kappa^2 tau^2 < tol^2`.
    pub fn is_vertex(&self, t: f64, tol: f64) -> Result<bool> {
        Ok(self.frenet(t)?.element_fourth() < tol * tol)
    }

    /// Default vertex tolerance for a segment: `1e-6` times the largest
    /// conformal element (in arc-length scale) found on a 65-point grid.
    pub fn vertex_tolerance(&self, a: f64, b: f64) -> Result<f64> {
        let mut max_el = 0.0f64;
        for k in 0..=64 {
            let t = a + (b - a) * k as f64 / 64.0;
            let f = self.frenet(t)?;
            max_el = max_el.max(f.element_fourth().sqrt());
        }
        Ok(1e-6 * max_el.max(f64::MIN_POSITIVE))
    }

    /// The conformal torsion
    /// `T = (2 kappa'^2 tau + kappa^2 tau^3 + kappa kappa' tau' - kappa
    /// kappa'' tau) / (kappa'^2 + kappa^2 tau^2)^(5/4)`,
    /// the rate `d s~/d rho` of the osculating-sphere curve against the
    /// conformal arc-length. Undefined at vertices.
    pub fn conformal_torsion(&self, t: f64) -> Result<f64> {
        let f = self.frenet(t)?;
        let w = f.element_fourth();
        if w < 1e-28 {
            return Err(Error::Vertex(t));
        }
        let num = 2.0 * f.kappa_s * f.kappa_s * f.tau
            + f.kappa * f.kappa * f.tau.powi(3)
            + f.kappa * f.kappa_s * f.tau_s
            - f.kappa * f.kappa_ss * f.tau;
        Ok(num / w.powf(1.25))
    }

    /// The light-cone 1-form evaluated through the chart map:
    /// `(m'''.m''' - (m''.m'')^2)^(1/4) |m'(t)|`, an independent route to
    /// the conformal arc-length element.
    ///
    /// The radicand equals `kappa'^2 + kappa^2 tau^2 >= 0` analytically; a
    /// small negative value is clamped to zero, anything worse signals a
    /// derivative failure and errors out.
    pub fn omega_form(&self, t: f64) -> Result<f64> {
        let jet = self.jet(t)?.arc_jet()?;
        let f2 = jet.m[2].norm_squared();
        let f3 = jet.m[3].norm_squared();
        let mut radicand = f3 - f2 * f2;
        let guard = 1e-10 * (1.0 + f2 * f2);
        if radicand < -guard {
            return Err(Error::Numerical(format!(
                "omega form radicand {radicand:.3e} below the noise guard at t = {t}"
            )));
        }
        if radicand < 0.0 {
            radicand = 0.0;
        }
        Ok(radicand.powf(0.25) * jet.speed)
    }
}

/// Quotient-rule jet of the chart image `2 (w2, w3, w4) / (w0 - w1)` of a
/// transformed lift.
fn transformed_jet(w: &[MinkVec5]) -> Result<CurveJet> {
    let g: Vec<f64> = w.iter().map(|v| v[0] - v[1]).collect();
    if g[0].abs() < 1e-12 {
        return Err(Error::AtInfinity);
    }
    let f: Vec<Vector3<f64>> = w.iter().map(|v| 2.0 * Vector3::new(v[2], v[3], v[4])).collect();
    let mut q = [Vector3::zeros(); 5];
    for k in 0..5 {
        let mut acc = f[k];
        for j in 0..k {
            acc -= q[j] * (BINOM[k][j] * g[k - j]);
        }
        q[k] = acc / g[0];
    }
    Ok(CurveJet { d: q })
}

/// A curve constrained to the `z = 0` plane, with signed-curvature jets.
///
/// Carrier for the two-dimensional theory, where osculating circles live in
/// the de Sitter space of circles on S^2 (vectors of R^4_1).
#[derive(Debug, Clone)]
pub struct PlaneCurve {
    curve: Curve,
}

/// Arc-length data of a plane curve point: 2D jets, signed curvature and
/// its first two arc-length derivatives.
#[derive(Debug, Clone, Copy)]
pub struct PlaneArcData {
    /// `m, m', m'', m''', m''''` in the plane.
    pub m: [Vector2<f64>; 5],
    pub speed: f64,
    pub speed_dot: f64,
    pub k: f64,
    pub k_s: f64,
    pub k_ss: f64,
}

impl PlaneCurve {
    /// Wrap a curve after checking that it stays in the `z = 0` plane.
    pub fn new(curve: Curve) -> Result<Self> {
        let (a, b) = curve.domain();
        for k in 0..=64 {
            let t = a + (b - a) * k as f64 / 64.0;
            let jet = curve.jet(t)?;
            let flat = jet.d.iter().all(|v| v[2].abs() <= 1e-10 * (1.0 + v.norm()));
            if !flat {
                return Err(Error::InvalidSpec("curve leaves the z = 0 plane".into()));
            }
        }
        Ok(Self { curve })
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn domain(&self) -> (f64, f64) {
        self.curve.domain()
    }

    /// Arc-length jets and signed curvature data at `t`.
    pub fn arc_data(&self, t: f64) -> Result<PlaneArcData> {
        let jet3 = self.curve.jet(t)?;
        let d2: [Vector2<f64>; 5] =
            std::array::from_fn(|k| Vector2::new(jet3.d[k][0], jet3.d[k][1]));
        let (m, speed, speed_dot) = arc_jets(&d2)?;
        let cross = |u: &Vector2<f64>, v: &Vector2<f64>| u[0] * v[1] - u[1] * v[0];
        // |m'| = 1, so k = m' x m'' and derivatives telescope
        let k = cross(&m[1], &m[2]);
        let k_s = cross(&m[1], &m[3]);
        let k_ss = cross(&m[2], &m[3]) + cross(&m[1], &m[4]);
        Ok(PlaneArcData { m, speed, speed_dot, k, k_s, k_ss })
    }
}

/// Lift of a plane point into the light cone of R^4_1.
pub fn lift_plane(x: &Vector2<f64>) -> MinkVec4 {
    let q = x.norm_squared() / 4.0;
    MinkVec4::from([1.0 + q, -1.0 + q, x[0], x[1]])
}

/// Arc-length derivatives of the R^4_1 lift of a plane curve.
pub fn lift_plane_jets(m: &[Vector2<f64>; 5]) -> [MinkVec4; 5] {
    let mut out = [MinkVec4::zeros(); 5];
    for (k, slot) in out.iter_mut().enumerate() {
        let mut qk = 0.0;
        for j in 0..=k {
            qk += BINOM[k][j] * m[j].dot(&m[k - j]);
        }
        let head = qk / 4.0;
        let affine = if k == 0 { 1.0 } else { 0.0 };
        *slot = MinkVec4::from([head + affine, head - affine, m[k][0], m[k][1]]);
    }
    out
}

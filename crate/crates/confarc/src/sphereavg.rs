//! The osculating-sphere curve in Lambda^4 and the averaged half-measure
//! of its tangent sphere families.
//!
//! For a vertex-free curve the osculating spheres trace a spacelike curve
//! `sigma(s~)` in de Sitter space; with its own arc-length `s~` the first
//! three derivatives satisfy the normalizations `<sigma, sigma> =
//! <sigma., sigma.> = <sigma.., sigma..> = 1` and the geodesic curvature
//! vector `sigma.. + sigma` is lightlike (the curve is a drill). Rotating
//! the tangent line through an angle theta produces, for each theta, a
//! unique lightlike curve `psi_theta = cos(s~ + theta) sigma - sin(s~ +
//! theta) sigma.` of spheres with second-order contact; averaging their
//! half-measures over theta reproduces the conformal arc-length up to the
//! universal constant `12^(-1/4) / (2 pi) * integral sqrt|sin|`.
//!
//! Derivatives in `s~` are taken by five-point stencils on a uniform-`s~`
//! grid. Grid nodes are located by marching the reparametrization ODE
//! `dt/ds~ = 1 / |sigma'(t)|` and every node re-evaluates the sphere
//! exactly, so no interpolation error pollutes the third derivatives.

use crate::curve::Curve;
use crate::halfmeasure::LightlikeSamples;
use crate::minkowski::{lorentz_form, lorentz_square, MinkVec5};
use crate::numeric::{simpson_tabulated, stencil_d1, stencil_d2, stencil_d3_7};
use crate::osculating::osculating_sphere;
use crate::{Error, Result};

/// One node of the osculating-sphere curve with derivative data in the
/// curve's own arc-length `s~`.
#[derive(Debug, Clone, Copy)]
pub struct SphereCurveSample {
    /// Parameter of the underlying space curve.
    pub t: f64,
    /// Arc-length position along the sphere curve.
    pub s_tilde: f64,
    /// `d s~/dt` at this node.
    pub speed_t: f64,
    pub sigma: MinkVec5,
    pub sigma_dot: MinkVec5,
    pub sigma_ddot: MinkVec5,
    pub sigma_dddot: MinkVec5,
}

impl SphereCurveSample {
    /// The geodesic curvature vector `sigma.. + sigma` (lightlike on a
    /// drill).
    pub fn curvature_vector(&self) -> MinkVec5 {
        self.sigma_ddot + self.sigma
    }
}

/// The osculating-sphere curve of a vertex-free segment, resampled
/// uniformly in its own arc-length.
#[derive(Debug, Clone)]
pub struct SphereCurve {
    samples: Vec<SphereCurveSample>,
    step: f64,
}

impl SphereCurve {
    pub fn samples(&self) -> &[SphereCurveSample] {
        &self.samples
    }

    /// Uniform `s~` spacing between samples.
    pub fn step(&self) -> f64 {
        self.step
    }

    /// Parameter window `[t_first, t_last]` covered by the samples.
    pub fn t_window(&self) -> (f64, f64) {
        (self.samples.first().unwrap().t, self.samples.last().unwrap().t)
    }
}

// sign-aligned osculating sphere
fn sigma_aligned(curve: &Curve, t: f64, reference: &MinkVec5) -> Result<MinkVec5> {
    let s = osculating_sphere(curve, t)?;
    let v = *s.vector();
    if lorentz_form(&v, reference) < 0.0 {
        Ok(-v)
    } else {
        Ok(v)
    }
}

// |d sigma/dt| by a five-point stencil with sign coherence
fn sphere_speed(curve: &Curve, t: f64, h: f64) -> Result<f64> {
    let c = *osculating_sphere(curve, t)?.vector();
    let m2 = sigma_aligned(curve, t - 2.0 * h, &c)?;
    let m1 = sigma_aligned(curve, t - h, &c)?;
    let p1 = sigma_aligned(curve, t + h, &c)?;
    let p2 = sigma_aligned(curve, t + 2.0 * h, &c)?;
    let d = MinkVec5::from_fn(|i, _| stencil_d1(m2[i], m1[i], p1[i], p2[i], h));
    let l = lorentz_square(&d);
    if l <= 0.0 {
        return Err(Error::Degenerate(format!(
            "sphere curve is not spacelike at t = {t} (L = {l:.3e})"
        )));
    }
    Ok(l.sqrt())
}

/// Build the osculating-sphere curve over `[a, b]` with `n` uniform
/// arc-length samples (`n >= 16`). Fails on segments containing a vertex.
#[allow(clippy::needless_range_loop)]
pub fn sphere_curve(curve: &Curve, a: f64, b: f64, n: usize) -> Result<SphereCurve> {
    if n < 16 {
        return Err(Error::Degenerate("sphere curve needs at least 16 samples".into()));
    }
    if b.partial_cmp(&a) != Some(std::cmp::Ordering::Greater) {
        return Err(Error::Degenerate(format!("bad window [{a}, {b}]")));
    }
    let h_fd = 1e-3 * (b - a).min(1.0);
    let speed = |t: f64| sphere_speed(curve, t, h_fd);

    // total arc-length, then march dt/ds~ = 1/speed with RK4
    let total = crate::numeric::adaptive_simpson(speed, a, b, 1e-11)?;
    let step = total / (n - 1) as f64;
    let mut ts = Vec::with_capacity(n);
    let mut t = a;
    ts.push(t);
    for _ in 1..n {
        let k1 = 1.0 / speed(t)?;
        let k2 = 1.0 / speed(t + 0.5 * step * k1)?;
        let k3 = 1.0 / speed(t + 0.5 * step * k2)?;
        let k4 = 1.0 / speed((t + step * k3).min(b + 2.0 * h_fd))?;
        t += step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        ts.push(t);
    }

    // sign-coherent sphere values at the exact nodes
    let mut sigmas: Vec<MinkVec5> = Vec::with_capacity(n);
    let mut reference = *osculating_sphere(curve, ts[0])?.vector();
    for &tk in &ts {
        let v = sigma_aligned(curve, tk, &reference)?;
        reference = v;
        sigmas.push(v);
    }

    let mut samples = Vec::with_capacity(n.saturating_sub(6));
    for k in 3..n - 3 {
        let f = |i: usize| sigmas[i];
        let (m3, m2, m1, f0, p1, p2, p3) =
            (f(k - 3), f(k - 2), f(k - 1), f(k), f(k + 1), f(k + 2), f(k + 3));
        let d1 = MinkVec5::from_fn(|i, _| stencil_d1(m2[i], m1[i], p1[i], p2[i], step));
        let d2 = MinkVec5::from_fn(|i, _| stencil_d2(m2[i], m1[i], f0[i], p1[i], p2[i], step));
        let d3 =
            MinkVec5::from_fn(|i, _| stencil_d3_7(m3[i], m2[i], m1[i], p1[i], p2[i], p3[i], step));
        samples.push(SphereCurveSample {
            t: ts[k],
            s_tilde: step * k as f64,
            speed_t: speed(ts[k])?,
            sigma: f0,
            sigma_dot: d1,
            sigma_ddot: d2,
            sigma_dddot: d3,
        });
    }
    let sc = SphereCurve { samples, step };
    // arc-length consistency gate: catches vertex contamination and grids
    // too coarse for the stencils
    for s in sc.samples().iter() {
        let defect = (lorentz_square(&s.sigma_dot) - 1.0).abs();
        if defect > 1e-4 {
            return Err(Error::Degenerate(format!(
                "sphere-curve tangent not unit at t = {} (defect {defect:.3e}); vertex in range?",
                s.t
            )));
        }
    }
    Ok(sc)
}

/// The lightlike family member `psi(theta, s~) = cos(s~ + theta) sigma -
/// sin(s~ + theta) sigma.` sampled over the curve.
pub fn psi_theta(sc: &SphereCurve, theta: f64) -> Result<LightlikeSamples<5>> {
    let mut params = Vec::with_capacity(sc.samples().len());
    let mut values = Vec::with_capacity(sc.samples().len());
    for s in sc.samples() {
        let phase = s.s_tilde + theta;
        params.push(s.s_tilde);
        values.push(s.sigma * phase.cos() - s.sigma_dot * phase.sin());
    }
    LightlikeSamples::new(params, values)
}

/// Second `s~`-derivative of `psi_theta` at a sample, by the product rule:
/// `-cos(s~ + theta)(sigma + sigma..) - sin(s~ + theta)(sigma. + sigma...)`.
pub fn psi_theta_ddot(sample: &SphereCurveSample, theta: f64) -> MinkVec5 {
    let phase = sample.s_tilde + theta;
    -(sample.sigma + sample.sigma_ddot) * phase.cos()
        - (sample.sigma_dot + sample.sigma_dddot) * phase.sin()
}

/// Half-measure of one `psi_theta`, by composite Simpson of the length
/// element over the sample grid.
pub fn psi_theta_half_measure(sc: &SphereCurve, theta: f64) -> f64 {
    let values: Vec<f64> = sc
        .samples()
        .iter()
        .map(|s| {
            let ddot = psi_theta_ddot(s, theta);
            (lorentz_square(&ddot).abs() / 12.0).powf(0.25)
        })
        .collect();
    simpson_tabulated(&values, sc.step())
}

/// Result of the theta-averaging experiment.
#[derive(Debug, Clone, Copy)]
pub struct AverageReport {
    /// Mean half-measure of the `psi_theta` over the theta grid.
    pub average: f64,
    /// Conformal arc-length of the matching parameter window.
    pub rho: f64,
    /// `average / rho`; approaches the universal constant
    /// `12^(-1/4)/(2 pi) * integral_0^2pi sqrt|sin u| du = 0.40982...`.
    pub ratio: f64,
}

/// Average the half-measures of `theta_count` families over a half-open
/// uniform theta grid `[0, 2 pi)` and compare with the conformal
/// arc-length of the same window.
pub fn average_half_measure(
    curve: &Curve,
    a: f64,
    b: f64,
    theta_count: usize,
    grid: usize,
) -> Result<AverageReport> {
    if theta_count < 16 {
        return Err(Error::Degenerate("need at least 16 theta samples".into()));
    }
    let sc = sphere_curve(curve, a, b, grid)?;
    let mut acc = 0.0;
    for k in 0..theta_count {
        let theta = 2.0 * std::f64::consts::PI * k as f64 / theta_count as f64;
        acc += psi_theta_half_measure(&sc, theta);
    }
    let average = acc / theta_count as f64;
    let (t0, t1) = sc.t_window();
    let rho = curve.conformal_arclength(t0, t1, 1e-12)?;
    Ok(AverageReport { average, rho, ratio: average / rho })
}

//! The half-dimensional measure of lightlike curves.
//!
//! A lightlike curve has length zero, but the limit of `sum sqrt(|chord|)`
//! over refining subdivisions is finite and generically nonzero. Its
//! density is `(|L(gamma..)| / 12)^(1/4) dt`, independent of the
//! parametrization. The module is generic over the ambient pseudo-inner
//! product (supplied as a closure) so the de Sitter spaces `Lambda^3`,
//! `Lambda^4` and the circle space in `R^10_4` all reuse it.
//!
//! Chords of a lightlike curve are generically timelike, so the pseudo-norm
//! `sqrt(|L|)` is what the polygonal sums take square roots of. Sign
//! coherence of sampled values (the +/- representative ambiguity of sphere
//! and circle coordinates) is the caller's responsibility: a stray flip
//! invalidates the chords.

use nalgebra::SVector;

use crate::numeric::{adaptive_simpson, loglog_slope};
use crate::{Error, Result};

/// Samples of a curve in a tagged pseudo-Euclidean space: strictly
/// increasing parameters and one value per parameter.
#[derive(Debug, Clone)]
pub struct LightlikeSamples<const D: usize> {
    params: Vec<f64>,
    values: Vec<SVector<f64, D>>,
}

impl<const D: usize> LightlikeSamples<D> {
    pub fn new(params: Vec<f64>, values: Vec<SVector<f64, D>>) -> Result<Self> {
        if params.len() != values.len() {
            return Err(Error::Degenerate("parameter/value length mismatch".into()));
        }
        if params.len() < 2 {
            return Err(Error::Degenerate("need at least two samples".into()));
        }
        if params.windows(2).any(|w| w[1] <= w[0]) {
            return Err(Error::Degenerate("parameters must be strictly increasing".into()));
        }
        Ok(Self { params, values })
    }

    pub fn params(&self) -> &[f64] {
        &self.params
    }

    pub fn values(&self) -> &[SVector<f64, D>] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }
}

/// Polygonal half-measure `sum_i sqrt(|gamma(t_{i+1}) - gamma(t_i)|)` with
/// `|v| = sqrt(|L(v)|)`. Nonnegative and additive over concatenation at a
/// shared sample.
pub fn polygonal_half_measure<const D: usize, F>(samples: &LightlikeSamples<D>, form: F) -> f64
where
    F: Fn(&SVector<f64, D>, &SVector<f64, D>) -> f64,
{
    let mut acc = 0.0;
    for w in samples.values.windows(2) {
        let chord = w[1] - w[0];
        acc += form(&chord, &chord).abs().sqrt().sqrt();
    }
    acc
}

/// The half-dimensional length element `(|L(gamma..)| / 12)^(1/4)`.
pub fn half_length_element<const D: usize, F>(gamma_ddot: &SVector<f64, D>, form: F) -> f64
where
    F: Fn(&SVector<f64, D>, &SVector<f64, D>) -> f64,
{
    (form(gamma_ddot, gamma_ddot).abs() / 12.0).powf(0.25)
}

/// Half-measure by adaptive quadrature of the length element, given the
/// second derivative of the curve in the integration parameter.
pub fn half_measure_quadrature<const D: usize, G, F>(
    ddot: G,
    a: f64,
    b: f64,
    tol: f64,
    form: F,
) -> Result<f64>
where
    G: Fn(f64) -> Result<SVector<f64, D>>,
    F: Fn(&SVector<f64, D>, &SVector<f64, D>) -> f64 + Copy,
{
    adaptive_simpson(|t| Ok(half_length_element(&ddot(t)?, form)), a, b, tol)
}

/// One row of a subdivision-refinement study.
#[derive(Debug, Clone, Copy)]
pub struct ConvergenceRow {
    pub n: usize,
    pub polygonal: f64,
    pub error: f64,
}

/// Polygonal sums over uniform subdivisions against the quadrature value,
/// with the empirical order from a log-log fit.
#[derive(Debug, Clone)]
pub struct ConvergenceReport {
    pub rows: Vec<ConvergenceRow>,
    pub quadrature: f64,
    pub fitted_order: f64,
}

/// Run the refinement study: uniform `n`-point subdivisions of `[a, b]`
/// for each `n` in `n_list`, sampled through `value`, compared against the
/// quadrature of the element from `ddot`.
pub fn convergence_order<const D: usize, V, G, F>(
    value: V,
    ddot: G,
    a: f64,
    b: f64,
    n_list: &[usize],
    form: F,
) -> Result<ConvergenceReport>
where
    V: Fn(f64) -> Result<SVector<f64, D>>,
    G: Fn(f64) -> Result<SVector<f64, D>>,
    F: Fn(&SVector<f64, D>, &SVector<f64, D>) -> f64 + Copy,
{
    let quadrature = half_measure_quadrature(&ddot, a, b, 1e-12, form)?;
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        if n < 1 {
            return Err(Error::Degenerate("subdivision count must be positive".into()));
        }
        let mut params = Vec::with_capacity(n + 1);
        let mut values = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let t = a + (b - a) * k as f64 / n as f64;
            params.push(t);
            values.push(value(t)?);
        }
        let samples = LightlikeSamples::new(params, values)?;
        let polygonal = polygonal_half_measure(&samples, form);
        rows.push(ConvergenceRow { n, polygonal, error: (polygonal - quadrature).abs() });
    }
    let hs: Vec<f64> = rows.iter().map(|r| (b - a) / r.n as f64).collect();
    let errs: Vec<f64> = rows.iter().map(|r| r.error).collect();
    let fitted_order = loglog_slope(&hs, &errs);
    Ok(ConvergenceReport { rows, quadrature, fitted_order })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Curve;
    use crate::grassmann::{tri_inner, TriVector};
    use crate::minkowski::{lorentz_form, MinkVec5};
    use crate::osculating::osculating_circle;
    use approx::assert_relative_eq;

    #[test]
    fn lightlike_segment_has_zero_measure() {
        // straight lightlike line: every chord is lightlike
        let dir = MinkVec5::from([1.0, 1.0, 0.0, 0.0, 0.0]);
        let params: Vec<f64> = (0..=17).map(|k| k as f64 / 17.0).collect();
        let values: Vec<MinkVec5> = params.iter().map(|&t| dir * t).collect();
        let s = LightlikeSamples::new(params, values).unwrap();
        assert_eq!(polygonal_half_measure(&s, lorentz_form), 0.0);
    }

    #[test]
    fn two_sample_arithmetic() {
        // chord with L = -16 contributes sqrt(4) = 2
        let a = MinkVec5::zeros();
        let b = MinkVec5::from([4.0, 0.0, 0.0, 0.0, 0.0]);
        let s = LightlikeSamples::new(vec![0.0, 1.0], vec![a, b]).unwrap();
        assert_eq!(polygonal_half_measure(&s, lorentz_form), 2.0);
    }

    #[test]
    fn element_examples() {
        let g = TriVector::from_fn(|i, _| if i == 0 { 12.0f64.sqrt() } else { 0.0 });
        // L(g) = 12 under the trivector signature (index 012 is a plus)
        assert_relative_eq!(half_length_element(&g, tri_inner), 1.0, epsilon = 1e-14);
        assert_eq!(half_length_element(&TriVector::zeros(), tri_inner), 0.0);
    }

    #[test]
    fn helix_polygonal_sum_approaches_the_known_limit() {
        // 12^(-1/4) * pi * sqrt(2), the conformal arc-length over a full turn
        // divided by 12^(1/4)
        let c = Curve::helix(1.0, 1.0).unwrap();
        let value = |t: f64| Ok(*osculating_circle(&c, t)?.gamma.tri());
        let ddot = |t: f64| Ok(osculating_circle(&c, t)?.gamma_ddot);
        let report = convergence_order(
            value,
            ddot,
            0.0,
            2.0 * std::f64::consts::PI,
            &[16, 64, 256, 1024, 4096],
            tri_inner,
        )
        .unwrap();
        let expected = 12.0f64.powf(-0.25) * std::f64::consts::PI * 2.0f64.sqrt();
        assert_relative_eq!(report.quadrature, expected, epsilon = 1e-9);
        let last = report.rows.last().unwrap();
        assert!(last.error / expected < 1e-3, "relative error {}", last.error / expected);
        assert!(report.fitted_order >= 0.9, "order {}", report.fitted_order);
    }

    #[test]
    fn reparametrization_invariance() {
        // quadrature under t -> u(t) with u' > 0 changes by < 1e-8 relative
        let c = Curve::helix(1.0, 1.0).unwrap();
        let ddot_t = |t: f64| Ok(osculating_circle(&c, t)?.gamma_ddot);
        let direct =
            half_measure_quadrature(ddot_t, 0.2, 1.8, 1e-12, |u: &TriVector, v| tri_inner(u, v))
                .unwrap();
        // u(t) = t + 0.3 sin t, u' = 1 + 0.3 cos t > 0; chain rule for the
        // second derivative of gamma(u(t))
        let u = |t: f64| t + 0.3 * t.sin();
        let (a, b) = (inverse_u(0.2), inverse_u(1.8));
        let ddot_u = |t: f64| {
            let s = osculating_circle(&c, u(t))?;
            let du = 1.0 + 0.3 * t.cos();
            let ddu = -0.3 * t.sin();
            Ok(s.gamma_ddot * (du * du) + s.gamma_dot * ddu)
        };
        let reparam =
            half_measure_quadrature(ddot_u, a, b, 1e-12, |u: &TriVector, v| tri_inner(u, v))
                .unwrap();
        assert_relative_eq!(direct, reparam, epsilon = 1e-8, max_relative = 1e-8);

        fn inverse_u(target: f64) -> f64 {
            let mut t = target;
            for _ in 0..100 {
                t -= (t + 0.3 * t.sin() - target) / (1.0 + 0.3 * t.cos());
            }
            t
        }
    }

    #[test]
    fn chords_of_osculating_circle_curves_are_timelike() {
        let c = Curve::helix(1.0, 1.0).unwrap();
        let mut prev = *osculating_circle(&c, 0.0).unwrap().gamma.tri();
        for k in 1..=64 {
            let t = 1.5 * k as f64 / 64.0;
            let cur = *osculating_circle(&c, t).unwrap().gamma.tri();
            let chord = cur - prev;
            assert!(tri_inner(&chord, &chord) < 0.0, "chord not timelike at t = {t}");
            prev = cur;
        }
    }

    #[test]
    fn vertex_containing_segment_stays_finite() {
        // ellipse arc through a vertex: the element is continuous and
        // vanishes there; the quadrature must come back finite
        let ell = Curve::ellipse(2.0, 1.0).unwrap();
        let pc = crate::curve::PlaneCurve::new(ell).unwrap();
        let ddot = |t: f64| Ok(crate::osculating::osculating_circle_2d(&pc, t)?.ddot_t());
        let v = half_measure_quadrature(ddot, -0.4, 0.4, 1e-10, |u: &crate::minkowski::MinkVec4, w| {
            lorentz_form(u, w)
        })
        .unwrap();
        assert!(v.is_finite() && v > 0.0);
    }

    #[test]
    fn rejects_bad_samples() {
        let v = vec![MinkVec5::zeros(), MinkVec5::zeros()];
        assert!(LightlikeSamples::new(vec![0.0, 0.0], v.clone()).is_err());
        assert!(LightlikeSamples::new(vec![0.0], vec![MinkVec5::zeros()]).is_err());
        assert!(LightlikeSamples::new(vec![0.0, 1.0, 2.0], v).is_err());
    }
}

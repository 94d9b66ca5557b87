//! Named identity and invariance checks, the backing of the `check`
//! subcommand and of the acceptance suite.
//!
//! Every check pins its tolerance here and reports the measured defect, so
//! a failing run says how far off it was. Checks that need a vertex-free
//! curve come back as `Skipped` on inputs like circles where the conformal
//! machinery legitimately degenerates.

use nalgebra::{RowSVector, SMatrix, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::confangle::{cross_ratio, infinitesimal_cross_ratio, ConcyclicQuad, CrossConvention};
use crate::curve::Curve;
use crate::desitter::{
    desitter_to_sphere, incidence_intersection, lorentz_separation, sphere_to_desitter,
    DeSitterPoint, EuclideanSphere, Incidence, SeparationKind, TimelikeFrame3,
};
use crate::grassmann::{
    plucker_jacobian, plucker_residuals, psi_map, tri_inner, tri_inner_det, tri_metric, wedge3,
    CirclePoint,
};
use crate::halfmeasure::convergence_order;
use crate::minkowski::{
    lift_euclidean, lorentz_form, lorentz_square, project_to_chart, Chart, MinkVec5 as GMinkVec5,
    MoebiusMap,
};
use crate::numeric::loglog_slope;
use crate::osculating::{
    burstall_check, osculating_circle, reconstruct_curve, reconstruct_point, TangentFrame,
};
use crate::sphereavg::{average_half_measure, sphere_curve};
use crate::Result;

/// Universal constant of the theta-averaging identity,
/// `12^(-1/4) / (2 pi) * integral_0^{2 pi} sqrt|sin u| du`, pinned by
/// high-precision quadrature.
pub const C_STAR: f64 = 0.40981935353194218;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    /// Largest measured defect (interpretation depends on the check).
    pub measured: f64,
    pub threshold: f64,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckResult {
    fn graded(name: &'static str, measured: f64, threshold: f64, detail: String) -> Self {
        let status =
            if measured.is_finite() && measured <= threshold { CheckStatus::Pass } else { CheckStatus::Fail };
        Self { name, status, measured, threshold, detail }
    }

    fn skipped(name: &'static str, detail: String) -> Self {
        Self { name, status: CheckStatus::Skipped, measured: f64::NAN, threshold: f64::NAN, detail }
    }

    pub fn passed(&self) -> bool {
        self.status != CheckStatus::Fail
    }
}

fn grid(a: f64, b: f64, n: usize) -> Vec<f64> {
    (0..n).map(|k| a + (b - a) * (k as f64 + 0.5) / n as f64).collect()
}

/// Is the conformal machinery degenerate on this curve (vertices through
/// the whole window)?
fn effectively_vertex(curve: &Curve) -> Result<bool> {
    let (a, b) = curve.domain();
    let mut max_el = 0.0f64;
    for t in grid(a, b, 32) {
        max_el = max_el.max(curve.conformal_arclength_element(t)?);
    }
    Ok(max_el < 1e-10)
}

/// Pointwise identity `d rho/dt = |L(gamma..)|^(1/4)` on a 200-point grid;
/// threshold `1e-7` relative.
///
/// With `corrupt_signature` the acceleration norm is evaluated in the
/// Euclidean metric of the coordinate space instead of the index-4 form, a
/// negative control that must fail.
pub fn check_arclength_identity(curve: &Curve, corrupt_signature: bool) -> Result<CheckResult> {
    const NAME: &str = "arclength_identity";
    if effectively_vertex(curve)? {
        return Ok(CheckResult::skipped(NAME, "curve is vertex-everywhere; element vanishes".into()));
    }
    let (a, b) = curve.domain();
    let mut worst = 0.0f64;
    for t in grid(a, b, 200) {
        let element = curve.conformal_arclength_element(t)?;
        if element < 1e-14 {
            continue; // isolated vertex on the grid
        }
        let s = osculating_circle(curve, t)?;
        let l = if corrupt_signature {
            s.gamma_ddot.norm_squared()
        } else {
            tri_inner(&s.gamma_ddot, &s.gamma_ddot)
        };
        worst = worst.max((l.abs().powf(0.25) - element).abs() / element);
    }
    Ok(CheckResult::graded(NAME, worst, 1e-7, "max rel |L(gamma..)^(1/4) - drho/dt|".into()))
}

/// Polygonal limit: `12^(1/4)` times the polygonal half-measure at
/// `n = 4096` matches `rho` within `1e-3` relative, and the error decays
/// with fitted order at least 0.9 over `n = 2^4 .. 2^12`.
pub fn check_polygonal_limit(curve: &Curve) -> Result<CheckResult> {
    const NAME: &str = "polygonal_limit";
    if effectively_vertex(curve)? {
        return Ok(CheckResult::skipped(NAME, "conformal length vanishes".into()));
    }
    let (a, b) = curve.domain();
    let rho = curve.conformal_arclength(a, b, 1e-12)?;
    let ns: Vec<usize> = (4..=12).map(|k| 1usize << k).collect();
    let value = |t: f64| Ok(*osculating_circle(curve, t)?.gamma.tri());
    let ddot = |t: f64| Ok(osculating_circle(curve, t)?.gamma_ddot);
    let report = convergence_order(value, ddot, a, b, &ns, tri_inner)?;
    let last = report.rows.last().unwrap();
    let rel = (12.0f64.powf(0.25) * last.polygonal - rho).abs() / rho;
    let order_defect = (0.9 - report.fitted_order).max(0.0);
    let measured = rel.max(order_defect * 1e-3);
    Ok(CheckResult::graded(
        NAME,
        measured,
        1e-3,
        format!("rel err {rel:.3e} at n = 4096, fitted order {:.3}", report.fitted_order),
    ))
}

/// Random Moebius maps (scale 0.5) leave `rho` unchanged within `1e-6`
/// relative and preserve the vertex set pointwise.
///
/// Candidate maps whose image of the segment approaches the north pole are
/// skipped deterministically (the chart projection degenerates there); the
/// first 20 usable seeds from the given one onward are taken.
pub fn check_moebius_invariance(curve: &Curve, seed: u64) -> Result<CheckResult> {
    const NAME: &str = "moebius_invariance";
    if effectively_vertex(curve)? {
        return Ok(CheckResult::skipped(NAME, "conformal length vanishes".into()));
    }
    let (a, b) = curve.domain();
    let rho = curve.conformal_arclength(a, b, 1e-12)?;
    let tol_vertex = curve.vertex_tolerance(a, b)?;
    let probe = grid(a, b, 41);
    let mut worst = 0.0f64;
    let mut used = 0;
    let mut candidate = seed;
    while used < 20 && candidate < seed + 400 {
        let map = MoebiusMap::random(candidate, 0.5);
        candidate += 1;
        // reject maps that drag the segment near infinity
        let mut min_denom = f64::INFINITY;
        for &t in &probe {
            let w = map.apply_vec(&lift_euclidean(&curve.point(t)?));
            min_denom = min_denom.min((w[0] - w[1]).abs() / w.norm());
        }
        if min_denom < 0.05 {
            continue;
        }
        used += 1;
        let moved = curve.transformed(&map);
        let rho_moved = moved.conformal_arclength(a, b, 1e-12)?;
        worst = worst.max((rho_moved - rho).abs() / rho);
        for &t in &probe {
            if curve.is_vertex(t, tol_vertex)? != moved.is_vertex(t, tol_vertex)? {
                return Ok(CheckResult::graded(NAME, 1.0, 1e-6, format!("vertex flip at t = {t}")));
            }
        }
    }
    Ok(CheckResult::graded(NAME, worst, 1e-6, format!("max rel drift over {used} maps")))
}

/// Two-dimensional identity: for the (2,1) ellipse quarter between adjacent
/// vertices, `rho` equals `12^(1/4)` times the half-measure of the
/// osculating-circle curve in `Lambda^3`, within `1e-4` relative.
pub fn check_planar_half_measure() -> Result<CheckResult> {
    const NAME: &str = "planar_half_measure";
    let ell = Curve::ellipse(2.0, 1.0)?;
    let quarter = std::f64::consts::FRAC_PI_2;
    let rho = ell.conformal_arclength(0.0, quarter, 1e-12)?;
    let pc = crate::curve::PlaneCurve::new(ell)?;
    let ddot = |t: f64| Ok(crate::osculating::osculating_circle_2d(&pc, t)?.ddot_t());
    let half = crate::halfmeasure::half_measure_quadrature(ddot, 0.0, quarter, 1e-12, |u, v| {
        lorentz_form(u, v)
    })?;
    let rel = (rho - 12.0f64.powf(0.25) * half).abs() / rho;
    Ok(CheckResult::graded(NAME, rel, 1e-4, format!("rho {rho:.9} vs lifted measure")))
}

/// The three vertex characterizations (vanishing `gamma.`, vanishing
/// `L(gamma..)`, rank drop of `span(gamma., gamma..)`) agree pointwise on a
/// 400-point grid of the planar (2,1) ellipse embedded in R^3.
pub fn check_vertex_equivalences() -> Result<CheckResult> {
    const NAME: &str = "vertex_equivalences";
    let ell = Curve::ellipse(2.0, 1.0)?;
    let n = 400;
    let mut dot_norms = Vec::with_capacity(n);
    let mut ddot_ls = Vec::with_capacity(n);
    let mut ranks = Vec::with_capacity(n);
    for k in 0..n {
        let t = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
        let s = osculating_circle(&ell, t)?;
        dot_norms.push(s.gamma_dot.norm());
        ddot_ls.push(tri_inner(&s.gamma_ddot, &s.gamma_ddot).abs());
        let m = SMatrix::<f64, 10, 2>::from_columns(&[s.gamma_dot, s.gamma_ddot]);
        let sv = m.svd(false, false).singular_values;
        ranks.push(sv[1] / sv[0].max(f64::MIN_POSITIVE));
    }
    let max_dot = dot_norms.iter().cloned().fold(0.0f64, f64::max);
    let max_l = ddot_ls.iter().cloned().fold(0.0f64, f64::max);
    let mut disagreements = 0usize;
    for k in 0..n {
        let c1 = dot_norms[k] < 1e-6 * max_dot;
        let c2 = ddot_ls[k] < 1e-6 * max_l;
        let c3 = ranks[k] < 1e-6;
        if c1 != c2 || c2 != c3 {
            disagreements += 1;
        }
    }
    Ok(CheckResult::graded(
        NAME,
        disagreements as f64,
        0.0,
        format!("{disagreements} grid points disagree across the three conditions"),
    ))
}

/// The Burstall condition agrees with (lightlike and decomposable) on 1000
/// seeded tangents, half exact-null constructions and half perturbations.
pub fn check_burstall_agreement(seed: u64) -> Result<CheckResult> {
    const NAME: &str = "burstall_agreement";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagreements = 0usize;
    let tol = 1e-9;
    for trial in 0..1000 {
        // a random circle point: wedge of a timelike-heavy random triple
        let gamma = loop {
            let x1 = GMinkVec5::from_fn(|_, _| rng.gen_range(-1.0..1.0)) + GMinkVec5::from([2.0, 0.0, 0.0, 0.0, 0.0]);
            let x2 = GMinkVec5::from_fn(|_, _| rng.gen_range(-1.0..1.0));
            let x3 = GMinkVec5::from_fn(|_, _| rng.gen_range(-1.0..1.0));
            if let Ok(c) = CirclePoint::from_span(&x1, &x2, &x3) {
                break c;
            }
        };
        let frame = TangentFrame::at(&gamma)?;
        // exact-null rows: parallel null vectors of R^3_1
        let phi = rng.gen_range(0.0..std::f64::consts::TAU);
        let (r1, r2): (f64, f64) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        let null = RowSVector::<f64, 3>::from([1.0, phi.cos(), phi.sin()]);
        let mut a = SMatrix::<f64, 2, 3>::from_rows(&[null * r1, null * r2]);
        if trial % 2 == 1 {
            // perturb well above both decision thresholds
            let eps = 1e-3;
            for j in 0..2 {
                for i in 0..3 {
                    a[(j, i)] += rng.gen_range(-eps..eps);
                }
            }
        }
        let tangent = frame.tangent_of(&a);
        let by_burstall = burstall_check(&gamma, &tangent, tol)?;
        let direct_light = tri_inner(&tangent, &tangent).abs() <= tol;
        let direct_decomp = plucker_residuals(&tangent).iter().all(|r| r.abs() <= tol);
        if by_burstall != (direct_light && direct_decomp) {
            disagreements += 1;
        }
    }
    Ok(CheckResult::graded(NAME, disagreements as f64, 0.0, "1000 seeded tangents".into()))
}

/// Conformal-angle asymptotics: `6 theta / (|gap|^2 sqrt(kappa'^2 +
/// kappa^2 tau^2)) -> 1` and `sqrt(6 theta)/delta_s -> d rho/ds`, both with
/// fitted order at least 0.9 on a geometric h-sweep.
pub fn check_angle_asymptotics(curve: &Curve) -> Result<CheckResult> {
    const NAME: &str = "angle_asymptotics";
    if effectively_vertex(curve)? {
        return Ok(CheckResult::skipped(NAME, "angles vanish identically".into()));
    }
    let (a, b) = curve.domain();
    let t0 = a + 0.37 * (b - a);
    let f = curve.frenet(t0)?;
    let factor = f.element_fourth().sqrt();
    let drho_ds = f.element_fourth().powf(0.25);
    let mut hs = Vec::new();
    let mut lemma_err = Vec::new();
    let mut element_err = Vec::new();
    for k in 0..6 {
        let h = 0.1 * 0.5f64.powi(k) * (b - a) / std::f64::consts::TAU.max(b - a);
        let theta = crate::confangle::conformal_angle(curve, t0, t0 + h)?;
        let gap2 = (curve.point(t0 + h)? - curve.point(t0)?).norm_squared();
        hs.push(h);
        lemma_err.push((6.0 * theta / (gap2 * factor) - 1.0).abs());
        let probe = crate::confangle::arclength_via_angle(curve, t0, h)?;
        element_err.push((probe / drho_ds - 1.0).abs());
    }
    let order1 = loglog_slope(&hs, &lemma_err);
    let order2 = loglog_slope(&hs, &element_err);
    let measured = (0.9 - order1.min(order2)).max(0.0);
    Ok(CheckResult::graded(
        NAME,
        measured,
        0.0,
        format!("fitted orders {order1:.3} (angle law) and {order2:.3} (element probe)"),
    ))
}

/// Infinitesimal cross ratio: on the same sweep the imaginary part decays
/// and `sqrt(6) |cross|^(1/4) / delta_rho -> 1`, each with fitted order at
/// least 0.9.
pub fn check_cross_ratio_probe(curve: &Curve) -> Result<CheckResult> {
    const NAME: &str = "cross_ratio_probe";
    if effectively_vertex(curve)? {
        return Ok(CheckResult::skipped(NAME, "probe degenerates on vertices".into()));
    }
    let (a, b) = curve.domain();
    let t0 = a + 0.37 * (b - a);
    let mut hs = Vec::new();
    let mut im_ratio = Vec::new();
    let mut rho_err = Vec::new();
    for k in 0..6 {
        let h = 0.1 * 0.5f64.powi(k);
        let probe = infinitesimal_cross_ratio(curve, t0, h)?;
        hs.push(h);
        im_ratio.push((probe.cross.im / probe.cross.re).abs());
        rho_err.push((probe.rho_ratio - 1.0).abs());
    }
    let order_im = loglog_slope(&hs, &im_ratio);
    let order_rho = loglog_slope(&hs, &rho_err);
    // a planar curve is exactly real: the imaginary column is then noise
    let im_ok = order_im >= 0.9 || im_ratio.iter().all(|r| *r < 1e-8);
    let measured = if im_ok { (0.9 - order_rho).max(0.0) } else { 1.0 };
    Ok(CheckResult::graded(
        NAME,
        measured,
        0.0,
        format!("fitted orders {order_im:.3} (im/re), {order_rho:.3} (rho ratio)"),
    ))
}

/// The derivative table of the light-cone lift: all pinned inner products
/// `<mbar^(i), mbar^(j)>` hold within `1e-7` on a parameter grid.
pub fn check_lift_table(curve: &Curve) -> Result<CheckResult> {
    const NAME: &str = "lift_table";
    let (a, b) = curve.domain();
    let mut worst = 0.0f64;
    for t in grid(a, b, 60) {
        let arc = curve.jet(t)?.arc_jet()?;
        let l = arc.lift();
        let f2 = lorentz_form(&l[2], &l[2]);
        let f = curve.frenet(t)?;
        let f3_expected = f.kappa.powi(4) + f.element_fourth();
        let entries = [
            (lorentz_form(&l[0], &l[0]), 0.0),
            (lorentz_form(&l[0], &l[1]), 0.0),
            (lorentz_form(&l[0], &l[2]), -1.0),
            (lorentz_form(&l[0], &l[3]), 0.0),
            (lorentz_form(&l[0], &l[4]), f2),
            (lorentz_form(&l[1], &l[1]), 1.0),
            (lorentz_form(&l[1], &l[2]), 0.0),
            (lorentz_form(&l[1], &l[3]), -f2),
            (lorentz_form(&l[2], &l[2]), f.kappa * f.kappa),
            (lorentz_form(&l[3], &l[3]), f3_expected),
        ];
        for (value, expected) in entries {
            worst = worst.max((value - expected).abs() / (1.0 + expected.abs()));
        }
    }
    Ok(CheckResult::graded(NAME, worst, 1e-7, "max residual over the derivative table".into()))
}

/// The osculating-sphere curve table `<sigma^(i), sigma^(j)>` (numeric
/// `s~`-derivatives) within `1e-5`, plus the drill property.
pub fn check_sphere_table(curve: &Curve, a: f64, b: f64) -> Result<CheckResult> {
    const NAME: &str = "sphere_table";
    if effectively_vertex(curve)? {
        return Ok(CheckResult::skipped(NAME, "no osculating spheres on vertex curves".into()));
    }
    let sc = sphere_curve(curve, a, b, 700)?;
    let mut worst = 0.0f64;
    for s in sc.samples() {
        let entries = [
            (lorentz_square(&s.sigma), 1.0),
            (lorentz_square(&s.sigma_dot), 1.0),
            (lorentz_square(&s.sigma_ddot), 1.0),
            (lorentz_form(&s.sigma, &s.sigma_dot), 0.0),
            (lorentz_form(&s.sigma, &s.sigma_ddot), -1.0),
            (lorentz_form(&s.sigma, &s.sigma_dddot), 0.0),
            (lorentz_form(&s.sigma_dot, &s.sigma_ddot), 0.0),
            (lorentz_form(&s.sigma_dot, &s.sigma_dddot), -1.0),
            (lorentz_form(&s.sigma_ddot, &s.sigma_dddot), 0.0),
        ];
        for (value, expected) in entries {
            worst = worst.max((value - expected).abs());
        }
        worst = worst.max(lorentz_square(&s.curvature_vector()).abs() * 0.1);
    }
    Ok(CheckResult::graded(NAME, worst, 1e-5, "max residual over the sphere-curve table".into()))
}

/// The averaging identity: theta-averaged half-measures over a 64-point
/// grid reproduce `rho` times the universal constant within 1%, and the
/// two expressions for the family element agree within `1e-4`, as does the
/// anti-isometry closure `L(gamma..) = L(sigma...) - 1`.
pub fn check_average_identity(curve: &Curve, a: f64, b: f64) -> Result<CheckResult> {
    const NAME: &str = "average_identity";
    if effectively_vertex(curve)? {
        return Ok(CheckResult::skipped(NAME, "no sphere families on vertex curves".into()));
    }
    let report = average_half_measure(curve, a, b, 64, 700)?;
    let ratio_dev = (report.ratio - C_STAR).abs() / C_STAR;

    let sc = sphere_curve(curve, a, b, 700)?;
    let mut family_dev = 0.0f64;
    let mut closure_dev = 0.0f64;
    for s in sc.samples() {
        let lhs = lorentz_square(&(s.sigma_dot + s.sigma_dddot)).abs();
        let rhs = (lorentz_square(&s.sigma_dddot) - 1.0).abs();
        family_dev = family_dev.max((lhs - rhs).abs());
        let osc = osculating_circle(curve, s.t)?;
        let l_gamma = tri_inner(&osc.gamma_ddot, &osc.gamma_ddot) / s.speed_t.powi(4);
        closure_dev = closure_dev.max((l_gamma - (lorentz_square(&s.sigma_dddot) - 1.0)).abs());
    }
    let measured = (ratio_dev / 1e-2).max(family_dev / 1e-4).max(closure_dev / 1e-4);
    Ok(CheckResult::graded(
        NAME,
        measured,
        1.0,
        format!(
            "ratio dev {ratio_dev:.3e} (vs 1e-2), element identity {family_dev:.3e}, closure {closure_dev:.3e} (vs 1e-4)"
        ),
    ))
}

/// Grassmann core: the two inner-product routes agree to `1e-12`, `Psi` is
/// a homomorphism into O(6,4) at `1e-9`, and the residual Jacobian has
/// rank exactly 3 at 100 random decomposables.
pub fn check_grassmann_core(seed: u64) -> Result<CheckResult> {
    const NAME: &str = "grassmann_core";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rv = |rng: &mut ChaCha8Rng| GMinkVec5::from_fn(|_, _| rng.gen_range(-1.0..1.0));
    let mut worst_inner = 0.0f64;
    for _ in 0..100 {
        let xs = [rv(&mut rng), rv(&mut rng), rv(&mut rng)];
        let ys = [rv(&mut rng), rv(&mut rng), rv(&mut rng)];
        let coord = tri_inner(&wedge3(&xs[0], &xs[1], &xs[2]), &wedge3(&ys[0], &ys[1], &ys[2]));
        worst_inner = worst_inner.max((coord - tri_inner_det(&xs, &ys)).abs());
    }
    let jt = tri_metric();
    let mut worst_psi = 0.0f64;
    for k in 0..10 {
        let a = MoebiusMap::random(seed + 1000 + k, 0.5);
        let b = MoebiusMap::random(seed + 2000 + k, 0.5);
        let pa = psi_map(a.matrix());
        let pb = psi_map(b.matrix());
        worst_psi = worst_psi.max((psi_map(a.compose(&b).matrix()) - pa * pb).norm());
        worst_psi = worst_psi.max((pa.transpose() * jt * pa - jt).norm());
    }
    let mut rank_failures = 0usize;
    for _ in 0..100 {
        let p = wedge3(&rv(&mut rng), &rv(&mut rng), &rv(&mut rng));
        let j = plucker_jacobian(&p);
        let sv = nalgebra::DMatrix::from_fn(5, 10, |r, c| j[(r, c)]).svd(false, false).singular_values;
        if !(sv[2] > 1e-6 * sv[0] && sv[3] < 1e-9 * sv[0]) {
            rank_failures += 1;
        }
    }
    let measured = (worst_inner / 1e-12).max(worst_psi / 1e-9).max(rank_failures as f64);
    Ok(CheckResult::graded(
        NAME,
        measured,
        1.0,
        format!("inner {worst_inner:.3e} (vs 1e-12), psi {worst_psi:.3e} (vs 1e-9), {rank_failures} rank failures"),
    ))
}

/// Reconstruction round trip: curve points recovered from the
/// osculating-circle family within `1e-6` (analytic derivatives) and
/// `1e-3` (finite differences); a constant family is rejected with the
/// vertex diagnostic.
pub fn check_reconstruction(curve: &Curve) -> Result<CheckResult> {
    const NAME: &str = "reconstruction";
    if effectively_vertex(curve)? {
        return Ok(CheckResult::skipped(NAME, "derivative of a constant family vanishes".into()));
    }
    let (a, b) = curve.domain();
    let mut worst_analytic = 0.0f64;
    for t in grid(a, b, 60) {
        let s = osculating_circle(curve, t)?;
        let p = reconstruct_point(&s.gamma_dot, 1e-9)?;
        worst_analytic = worst_analytic.max((p - curve.point(t)?).norm());
    }
    let n = 400;
    let samples: Vec<(f64, CirclePoint)> = (0..=n)
        .map(|k| {
            let t = a + (b - a) * k as f64 / n as f64;
            Ok((t, osculating_circle(curve, t)?.gamma))
        })
        .collect::<Result<_>>()?;
    let rebuilt = reconstruct_curve(&samples, 1e-2)?;
    let mut worst_fd = 0.0f64;
    for (t, p) in &rebuilt {
        worst_fd = worst_fd.max((p - curve.point(*t)?).norm());
    }
    // constant family must report the vertex diagnostic
    let circle = Curve::circle(1.0)?;
    let const_samples: Vec<(f64, CirclePoint)> = (0..=8)
        .map(|k| Ok((0.1 * k as f64, osculating_circle(&circle, 0.1 * k as f64)?.gamma)))
        .collect::<Result<_>>()?;
    let rejected = matches!(reconstruct_curve(&const_samples, 1e-6), Err(crate::Error::Vertex(_)));
    let measured = (worst_analytic / 1e-6).max(worst_fd / 1e-3).max(if rejected { 0.0 } else { 2.0 });
    Ok(CheckResult::graded(
        NAME,
        measured,
        1.0,
        format!("analytic {worst_analytic:.3e} (vs 1e-6), fd {worst_fd:.3e} (vs 1e-3), constant rejected: {rejected}"),
    ))
}

/// Sphere-pair separation restricts to common orthogonal circles
/// (equality within `1e-6`) and matches the cross-ratio law
/// `|cross| = ((e^l - 1)/(e^l + 1))^2` within `1e-6`, over 100 seeded
/// disjoint pairs.
pub fn check_separation_restriction(seed: u64) -> Result<CheckResult> {
    const NAME: &str = "separation_restriction";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst_sep = 0.0f64;
    let mut worst_cross = 0.0f64;
    let mut done = 0usize;
    let mut candidate = 0u64;
    while done < 100 && candidate < 500 {
        candidate += 1;
        // disjoint pair as a Moebius image of concentric spheres, with the
        // common orthogonal circle carried along as three points of a
        // radial line
        let r1 = rng.gen_range(0.5..1.5);
        let ell: f64 = rng.gen_range(0.3..2.0);
        let r2 = r1 * ell.exp();
        let dir = {
            let v = Vector3::new(
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
                rng.gen_range(-1.0..1.0),
            );
            if v.norm() < 1e-3 {
                continue;
            }
            v.normalize()
        };
        let map = MoebiusMap::random(seed + 7000 + candidate, 0.4);
        let s1 = DeSitterPoint::try_new(
            map.apply_vec(sphere_to_desitter(&EuclideanSphere::sphere(Vector3::zeros(), r1)?).vector()),
        )?;
        let s2 = DeSitterPoint::try_new(
            map.apply_vec(sphere_to_desitter(&EuclideanSphere::sphere(Vector3::zeros(), r2)?).vector()),
        )?;
        // the transformed radial line through both sphere centers
        let span = [
            map.apply_vec(&lift_euclidean(&(dir * 0.3 * r1))),
            map.apply_vec(&lift_euclidean(&(dir * 2.0 * r2))),
            map.apply_vec(&crate::minkowski::MinkVec5::from([1.0, 1.0, 0.0, 0.0, 0.0])),
        ];
        let sep = lorentz_separation(&s1, &s2);
        if sep.kind != SeparationKind::Disjoint {
            continue;
        }
        let frame = match TimelikeFrame3::from_span(&span) {
            Ok(f) => f,
            Err(_) => continue,
        };
        let mut pair_angles = Vec::new();
        let mut pair_points: Vec<Vector3<f64>> = Vec::new();
        let mut ok = true;
        for s in [&s1, &s2] {
            match incidence_intersection(s, &span)? {
                Incidence::Pair(dirs) => {
                    for d in &dirs {
                        pair_angles.push(frame.angle_of(d)?);
                        match project_to_chart(d, Chart::Euclidean)? {
                            crate::minkowski::ChartPoint::Euclidean(p) => pair_points.push(p),
                            _ => ok = false,
                        }
                    }
                }
                _ => ok = false,
            }
        }
        if !ok {
            continue;
        }
        // separation of the two point pairs inside the circle's Lambda^2
        let z1 = frame.zero_sphere(pair_angles[0], pair_angles[1])?;
        let z2 = frame.zero_sphere(pair_angles[2], pair_angles[3])?;
        let restricted = lorentz_form(z1.vector(), z2.vector()).abs().acosh();
        worst_sep = worst_sep.max((restricted - sep.value).abs());
        // cross-ratio law on the four concyclic points, sphere-1 pair in the
        // first two slots (in-pair labeling is immaterial: flipping one pair
        // inverts the value, and the law value is the branch below 1)
        let quad = ConcyclicQuad::through([pair_points[0], pair_points[1], pair_points[2], pair_points[3]])?;
        let v = cross_ratio(&quad, CrossConvention::Paired)?.norm();
        let v = v.min(1.0 / v);
        let law = ((sep.value.exp() - 1.0) / (sep.value.exp() + 1.0)).powi(2);
        worst_cross = worst_cross.max((v - law).abs());
        done += 1;
    }
    let measured = worst_sep.max(worst_cross);
    Ok(CheckResult::graded(
        NAME,
        measured,
        1e-6,
        format!("{done} pairs; separation {worst_sep:.3e}, cross-ratio law {worst_cross:.3e}"),
    ))
}

/// Moebius equivariance of the sphere lift: mapping the Euclidean data and
/// mapping the de Sitter vector agree up to sign.
pub fn check_sphere_equivariance(seed: u64) -> Result<CheckResult> {
    const NAME: &str = "sphere_equivariance";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for k in 0..50 {
        let center = Vector3::from_fn(|_, _| rng.gen_range(-1.5..1.5));
        let radius = rng.gen_range(0.3..2.0);
        let sphere = EuclideanSphere::sphere(center, radius)?;
        let sigma = sphere_to_desitter(&sphere);
        let map = MoebiusMap::random(seed + 300 + k, 0.4);
        let direct = DeSitterPoint::try_new(map.apply_vec(sigma.vector()))?;
        // recover Euclidean data from the mapped vector, lift it again
        let geo = desitter_to_sphere(&direct)?;
        let relift = sphere_to_desitter(&geo);
        let d = (direct.vector() - relift.vector())
            .norm()
            .min((direct.vector() + relift.vector()).norm());
        worst = worst.max(d);
    }
    Ok(CheckResult::graded(NAME, worst, 1e-8, "50 seeded sphere/map pairs".into()))
}

/// The full named suite over one curve, in a stable order.
pub fn run_all(curve: &Curve, seed: u64, corrupt_signature: bool) -> Result<Vec<CheckResult>> {
    let (a, b) = curve.domain();
    // window for sphere-curve checks: generous margin inside the domain
    let (wa, wb) = (a + 0.1 * (b - a), a + 0.45 * (b - a));
    Ok(vec![
        check_arclength_identity(curve, corrupt_signature)?,
        check_polygonal_limit(curve)?,
        check_moebius_invariance(curve, seed)?,
        check_planar_half_measure()?,
        check_vertex_equivalences()?,
        check_burstall_agreement(seed)?,
        check_angle_asymptotics(curve)?,
        check_cross_ratio_probe(curve)?,
        check_lift_table(curve)?,
        check_sphere_table(curve, wa, wb)?,
        check_average_identity(curve, wa, wb)?,
        check_grassmann_core(seed)?,
        check_reconstruction(curve)?,
        check_separation_restriction(seed)?,
        check_sphere_equivariance(seed)?,
    ])
}

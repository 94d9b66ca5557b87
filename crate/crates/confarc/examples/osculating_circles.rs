//! The lightlike curve of osculating circles: the pointwise arc-length
//! identity, vertices as zeros of the velocity, and reconstruction of the
//! curve from its circles.
//!
//! Run: cargo run --example osculating_circles

use confarc::curve::Curve;
use confarc::grassmann::{plucker_residuals, tri_inner, CirclePoint};
use confarc::osculating::{burstall_check, osculating_circle, reconstruct_curve};

fn main() {
    println!("=== The family of osculating circles in Theta(1,3) ===\n");

    let c = Curve::helix(1.0, 1.0).unwrap();
    let s = osculating_circle(&c, 0.8).unwrap();
    let gp = s.gamma_prime();
    let gpp = s.gamma_pprime();
    println!("helix(1,1) at t = 0.8:");
    println!("  <gamma, gamma>   = {:.12}", tri_inner(s.gamma.tri(), s.gamma.tri()));
    println!("  L(gamma')        = {:+.3e}  (lightlike)", tri_inner(&gp, &gp));
    println!(
        "  L(gamma'')       = {:.12} (kappa'^2 + kappa^2 tau^2 = 1/16)",
        tri_inner(&gpp, &gpp)
    );
    println!(
        "  |L(gamma..)|^1/4 = {:.12} = d rho/dt = {:.12}",
        tri_inner(&s.gamma_ddot, &s.gamma_ddot).abs().powf(0.25),
        c.conformal_arclength_element(0.8).unwrap()
    );
    println!(
        "  Burstall check   = {} (lightlike and decomposable)",
        burstall_check(&s.gamma, &s.gamma_dot, 1e-9).unwrap()
    );
    println!("  residuals(gamma') = {:?}\n", plucker_residuals(&s.gamma_dot));

    // rebuild the curve from sampled circles alone
    let n = 240;
    let samples: Vec<(f64, CirclePoint)> = (0..=n)
        .map(|k| {
            let t = 2.2 * k as f64 / n as f64;
            (t, osculating_circle(&c, t).unwrap().gamma)
        })
        .collect();
    let rebuilt = reconstruct_curve(&samples, 1e-2).unwrap();
    let worst = rebuilt
        .iter()
        .map(|(t, p)| (p - c.point(*t).unwrap()).norm())
        .fold(0.0f64, f64::max);
    println!("reconstruction from {n} sampled circles:");
    println!("  max point error = {worst:.3e} (finite-difference derivatives)");

    // the constant family of a circle is rejected with a vertex diagnostic
    let circle = Curve::circle(1.0).unwrap();
    let const_samples: Vec<(f64, CirclePoint)> = (0..=10)
        .map(|k| (0.2 * k as f64, osculating_circle(&circle, 0.2 * k as f64).unwrap().gamma))
        .collect();
    println!("  constant family: {:?}", reconstruct_curve(&const_samples, 1e-6).unwrap_err());
}

//! The osculating-sphere curve in Lambda^4, its drill property, and the
//! theta-averaged half-measure identity.
//!
//! Run: cargo run --example sphere_average

use confarc::cli::checks::C_STAR;
use confarc::curve::Curve;
use confarc::minkowski::{lorentz_form, lorentz_square};
use confarc::sphereavg::{average_half_measure, psi_theta_half_measure, sphere_curve};

fn main() {
    println!("=== The curve of osculating spheres ===\n");

    let c = Curve::helix(1.0, 1.0).unwrap();
    let sc = sphere_curve(&c, 0.1, 0.9, 600).unwrap();
    let mid = &sc.samples()[sc.samples().len() / 2];
    println!("helix(1,1), arc-length parametrized sphere curve:");
    println!("  <s, s>    = {:+.9}", lorentz_square(&mid.sigma));
    println!("  <s., s.>  = {:+.9}", lorentz_square(&mid.sigma_dot));
    println!("  <s.., s..>= {:+.9}", lorentz_square(&mid.sigma_ddot));
    println!("  <s, s..>  = {:+.9}", lorentz_form(&mid.sigma, &mid.sigma_ddot));
    println!("  <s., s...>= {:+.9}", lorentz_form(&mid.sigma_dot, &mid.sigma_dddot));
    println!(
        "  L(s + s..)= {:+.3e}  (the curvature vector is lightlike: a drill)\n",
        lorentz_square(&mid.curvature_vector())
    );

    println!("half-measures of the tangent sphere families psi_theta:");
    for theta in [0.0, 1.0, 2.0, 3.0] {
        println!("  theta = {theta:.1}: {:.9}", psi_theta_half_measure(&sc, theta));
    }

    let report = average_half_measure(&c, 0.1, 0.9, 64, 600).unwrap();
    println!("\ntheta-average over 64 families = {:.12}", report.average);
    println!("conformal arc-length of window = {:.12}", report.rho);
    println!("ratio                          = {:.12}", report.ratio);
    println!("universal constant             = {C_STAR:.12}");
    println!("relative deviation             = {:.3e}", (report.ratio - C_STAR).abs() / C_STAR);
}

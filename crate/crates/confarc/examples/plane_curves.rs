//! The two-dimensional story: osculating circles of a plane curve trace a
//! lightlike curve in Lambda^3, whose half-measure recovers the planar
//! conformal arc-length `integral sqrt|k'| ds`.
//!
//! Run: cargo run --example plane_curves

use confarc::curve::{Curve, PlaneCurve};
use confarc::halfmeasure::half_measure_quadrature;
use confarc::minkowski::{lorentz_form, lorentz_square};
use confarc::osculating::osculating_circle_2d;

fn main() {
    println!("=== Plane curves and Lambda^3 ===\n");

    let ell = PlaneCurve::new(Curve::ellipse(2.0, 1.0).unwrap()).unwrap();
    let o = osculating_circle_2d(&ell, 0.6).unwrap();
    let d = ell.arc_data(0.6).unwrap();
    println!("ellipse(2,1) at t = 0.6:");
    println!("  signed curvature k = {:+.9}, k' = {:+.9}", d.k, d.k_s);
    println!("  L(gamma')  = {:+.3e}  (lightlike velocity)", lorentz_square(&o.prime));
    println!("  L(gamma'') = {:+.9} vs k'^2 = {:.9}", lorentz_square(&o.pprime), d.k_s * d.k_s);
    println!(
        "  gamma' is k' times the lifted point: defect {:.3e}\n",
        (o.prime - confarc::curve::lift_plane(&nalgebra::Vector2::new(
            ell.curve().point(0.6).unwrap()[0],
            ell.curve().point(0.6).unwrap()[1],
        )) * d.k_s)
            .norm()
    );

    // quarter arc between adjacent vertices: rho = 12^(1/4) L^(1/2)(gamma)
    let quarter = std::f64::consts::FRAC_PI_2;
    let rho = ell.curve().conformal_arclength(0.0, quarter, 1e-12).unwrap();
    let ddot = |t: f64| Ok(osculating_circle_2d(&ell, t)?.ddot_t());
    let half = half_measure_quadrature(ddot, 0.0, quarter, 1e-12, lorentz_form).unwrap();
    println!("quarter arc between vertices:");
    println!("  rho                 = {rho:.15}");
    println!("  12^(1/4) * L^(1/2)  = {:.15}", 12.0f64.powf(0.25) * half);
    println!("  relative agreement  = {:.3e}", (rho - 12.0f64.powf(0.25) * half).abs() / rho);
}

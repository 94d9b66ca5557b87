//! The conformal angle between tangent circles and the infinitesimal
//! cross ratio: two more routes to the conformal arc-length element.
//!
//! Run: cargo run --example conformal_angle

use confarc::confangle::{
    arclength_via_angle, conformal_angle, cross_ratio, infinitesimal_cross_ratio, ConcyclicQuad,
    CrossConvention,
};
use confarc::curve::Curve;
use nalgebra::Vector3;

fn main() {
    println!("=== Conformal angle sweeps on the twisted cubic ===\n");

    let c = Curve::twisted_cubic().unwrap();
    let f = c.frenet(0.0).unwrap();
    let factor = f.element_fourth().sqrt();
    let drho_ds = f.element_fourth().powf(0.25);

    println!("{:>10} {:>14} {:>12} {:>14} {:>12} {:>12}", "h", "theta", "6t/(g^2 w)", "sqrt(6t)/ds", "|Im/Re|", "rho ratio");
    for k in 0..6 {
        let h = 0.1 * 0.5f64.powi(k);
        let theta = conformal_angle(&c, 0.0, h).unwrap();
        let gap2 = (c.point(h).unwrap() - c.point(0.0).unwrap()).norm_squared();
        let via = arclength_via_angle(&c, 0.0, h).unwrap();
        let probe = infinitesimal_cross_ratio(&c, 0.0, h).unwrap();
        println!(
            "{h:>10.5} {theta:>14.6e} {:>12.8} {:>14.8} {:>12.3e} {:>12.8}",
            6.0 * theta / (gap2 * factor),
            via,
            (probe.cross.im / probe.cross.re).abs(),
            probe.rho_ratio,
        );
    }
    println!("\nangle law column -> 1, element column -> d rho/ds = {drho_ds:.8},");
    println!("the cross ratio turns real, and its scaled fourth root -> 1\n");

    // the cross ratio itself, on four concyclic points, in both slot
    // conventions (they differ by lambda -> 1 - lambda)
    let quad = ConcyclicQuad::through([
        Vector3::new(0.0, 0.0, 0.0),
        Vector3::new(1.0, 0.0, 0.0),
        Vector3::new(2.0, 0.0, 0.0),
        Vector3::new(3.0, 0.0, 0.0),
    ])
    .unwrap();
    let adj = cross_ratio(&quad, CrossConvention::Adjacent).unwrap();
    let par = cross_ratio(&quad, CrossConvention::Paired).unwrap();
    println!("collinear 0,1,2,3: adjacent convention {adj}, paired convention {par}");
}

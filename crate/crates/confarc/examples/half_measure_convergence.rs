//! Polygonal half-measure refinement: inscribed sums of square-rooted
//! chord norms converge to the quadrature of the length element, and
//! 12^(1/4) times the limit is the conformal arc-length.
//!
//! Run: cargo run --example half_measure_convergence

use confarc::curve::Curve;
use confarc::grassmann::tri_inner;
use confarc::halfmeasure::convergence_order;
use confarc::osculating::osculating_circle;

fn main() {
    println!("=== Half-dimensional measure of the osculating-circle curve ===\n");

    let c = Curve::helix(1.0, 1.0).unwrap();
    let (a, b) = c.domain();
    let rho = c.conformal_arclength(a, b, 1e-12).unwrap();
    let ns: Vec<usize> = (4..=12).map(|k| 1usize << k).collect();
    let value = |t: f64| Ok(*osculating_circle(&c, t)?.gamma.tri());
    let ddot = |t: f64| Ok(osculating_circle(&c, t)?.gamma_ddot);
    let report = convergence_order(value, ddot, a, b, &ns, tri_inner).unwrap();

    println!("{:>6} {:>22} {:>14}", "n", "polygonal sum", "error");
    for row in &report.rows {
        println!("{:>6} {:>22.15} {:>14.3e}", row.n, row.polygonal, row.error);
    }
    println!("\nquadrature value        = {:.15}", report.quadrature);
    println!("fitted convergence order = {:.3}", report.fitted_order);
    println!("12^(1/4) * limit         = {:.15}", 12.0f64.powf(0.25) * report.quadrature);
    println!("conformal arc-length rho = {rho:.15}");
    println!(
        "relative agreement       = {:.3e}",
        (12.0f64.powf(0.25) * report.quadrature - rho).abs() / rho
    );
}

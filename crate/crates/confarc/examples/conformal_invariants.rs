//! Conformal arc-length, vertices, and conformal torsion of the analytic
//! curve families, including invariance under a random Moebius map.
//!
//! Run: cargo run --example conformal_invariants

use confarc::curve::Curve;
use confarc::minkowski::MoebiusMap;

fn main() {
    println!("=== Conformal invariants along curves ===\n");

    let helix = Curve::helix(1.0, 1.0).unwrap();
    let (a, b) = helix.domain();
    let rho = helix.conformal_arclength(a, b, 1e-12).unwrap();
    println!("helix(1,1) over one turn:");
    println!("  rho        = {rho:.12} (pi sqrt2 = {:.12})", std::f64::consts::PI * 2.0f64.sqrt());
    println!("  d rho/dt   = {:.12} everywhere", helix.conformal_arclength_element(1.0).unwrap());
    println!("  T          = {:.12} (the sphere curve moves at the conformal rate)", helix.conformal_torsion(1.0).unwrap());
    println!("  omega form = {:.12} (independent route)\n", helix.omega_form(1.0).unwrap());

    let ell = Curve::ellipse(2.0, 1.0).unwrap();
    let tol = ell.vertex_tolerance(a, b).unwrap();
    let quarter = ell.conformal_arclength(0.0, std::f64::consts::FRAC_PI_2, 1e-11).unwrap();
    println!("ellipse(2,1):");
    println!("  quarter-arc rho (vertex to vertex) = {quarter:.12}");
    print!("  vertices on a 8-point grid:           ");
    for k in 0..8 {
        let t = std::f64::consts::TAU * k as f64 / 8.0;
        print!("{}", if ell.is_vertex(t, tol).unwrap() { 'V' } else { '.' });
    }
    println!(" (axes are vertices)\n");

    let map = MoebiusMap::random(5, 0.5);
    let moved = helix.transformed(&map);
    let rho_moved = moved.conformal_arclength(a, b, 1e-12).unwrap();
    println!("Moebius image of the helix (seed 5):");
    println!("  rho          = {rho_moved:.12}");
    println!("  relative drift = {:.3e}", (rho_moved - rho).abs() / rho);

    let cubic = Curve::twisted_cubic().unwrap();
    let f = cubic.frenet(0.0).unwrap();
    println!("\ntwisted cubic at the origin: kappa = {}, tau = {}, T = {:.9}",
        f.kappa, f.tau, cubic.conformal_torsion(0.0).unwrap());
}

//! The circle space Theta(1,3) in Pluecker coordinates: wedges, the
//! index-4 inner product, the compound-matrix homomorphism, and the
//! anti-isometry onto spacelike 2-planes.
//!
//! Run: cargo run --example circle_space

use confarc::grassmann::{
    anti_isometry_f, bi_inner, plucker_residuals, psi_map, tri_inner, tri_metric, wedge3,
};
use confarc::minkowski::MoebiusMap;
use confarc::osculating::{circle_geometry, circle_through};
use nalgebra::Vector3;

fn main() {
    println!("=== Oriented circles as decomposable trivectors ===\n");

    let gamma = circle_through(
        &Vector3::new(1.0, 0.0, 0.0),
        &Vector3::new(0.0, 1.0, 0.0),
        &Vector3::new(-1.0, 0.0, 0.0),
    )
    .unwrap();
    println!("unit circle in the z = 0 plane:");
    println!("  coordinates {:?}", gamma.tri().as_slice());
    println!("  <G, G> = {:.12}", tri_inner(gamma.tri(), gamma.tri()));
    println!("  pluecker residuals {:?}", plucker_residuals(gamma.tri()));
    println!("  rendered back: {:?}\n", circle_geometry(&gamma).unwrap());

    // a non-decomposable sum leaves the Grassmann cone
    let e = |i: usize| {
        let mut v = confarc::minkowski::MinkVec5::zeros();
        v[i] = 1.0;
        v
    };
    let sum = wedge3(&e(0), &e(1), &e(2)) + wedge3(&e(0), &e(3), &e(4));
    println!("residuals of e012 + e034: {:?}\n", plucker_residuals(&sum));

    // Psi sends O(4,1) into O(6,4) and intertwines the wedge
    let a = MoebiusMap::random(11, 0.5);
    let psi = psi_map(a.matrix());
    let jt = tri_metric();
    println!("Psi of a random Moebius map (seed 11):");
    println!("  O(6,4) residual        = {:.3e}", (psi.transpose() * jt * psi - jt).norm());
    let b = MoebiusMap::random(12, 0.5);
    let hom = (psi_map(a.compose(&b).matrix()) - psi * psi_map(b.matrix())).norm();
    println!("  homomorphism residual  = {hom:.3e}\n");

    // the orthogonal complement reverses inner products
    let other = circle_through(
        &Vector3::new(1.0, 0.0, 1.0),
        &Vector3::new(0.0, 1.0, 1.0),
        &Vector3::new(-1.0, 0.0, 1.0),
    )
    .unwrap();
    let (fa, fb) = (anti_isometry_f(&gamma).unwrap(), anti_isometry_f(&other).unwrap());
    println!("anti-isometry F:");
    println!("  <G1, G2>       = {:+.9}", tri_inner(gamma.tri(), other.tri()));
    println!("  <F G1, F G2>   = {:+.9}", bi_inner(&fa, &fb));
}

//! The Minkowski substrate: light-cone lifts, chart projections, causal
//! classification, and the Moebius group acting through O(4,1).
//!
//! Run: cargo run --example light_cone_charts

use confarc::minkowski::{
    causal_class, lift_euclidean, lorentz_form, lorentz_square, project_to_chart, Chart,
    MinkVec5, MoebiusMap,
};
use nalgebra::Vector3;

fn main() {
    println!("=== Light-cone charts of R^5_1 ===\n");

    // every point of R^3 lifts to a lightlike vector on the section x0 - x1 = 2
    let p = Vector3::new(0.4, -1.0, 2.0);
    let lifted = lift_euclidean(&p);
    println!("lift of {:?}:", p.as_slice());
    println!("  {:?}", lifted.as_slice());
    println!("  L(lift)      = {:+.3e} (on the cone)", lorentz_square(&lifted));
    println!("  causal class = {:?}", causal_class(&lifted, 1e-9));

    let back = project_to_chart(&(lifted * 3.7), Chart::Euclidean).unwrap();
    println!("  rescaled projection returns {:?}\n", back.euclidean().unwrap().as_slice());

    // the direction n1 = (1,1,0,0,0) is the north pole: the point at infinity
    let n1 = MinkVec5::from([1.0, 1.0, 0.0, 0.0, 0.0]);
    println!("projection of n1: {:?}\n", project_to_chart(&n1, Chart::Euclidean).unwrap());

    // a sign swap on coordinate 1 acts on the chart as inversion in the
    // sphere of radius 2
    let mut m = nalgebra::SMatrix::<f64, 5, 5>::identity();
    m[(1, 1)] = -1.0;
    let inversion = MoebiusMap::try_new(m).unwrap();
    println!("inversion x -> 4x/|x|^2 through the light cone:");
    for x in [Vector3::new(1.0, 0.0, 0.0), Vector3::new(0.5, 0.5, 0.0), Vector3::new(4.0, 0.0, 2.0)] {
        let y = inversion.apply_point(&x).euclidean().unwrap();
        println!("  {:?} -> [{:.4}, {:.4}, {:.4}]", x.as_slice(), y[0], y[1], y[2]);
    }
    println!("  origin -> {:?}\n", inversion.apply_point(&Vector3::zeros()));

    // seeded pseudo-random group elements preserve the form
    let a = MoebiusMap::random(7, 0.5);
    let u = MinkVec5::from([0.3, 1.0, -0.2, 0.8, 0.1]);
    let v = MinkVec5::from([1.1, 0.0, 0.4, -0.5, 0.9]);
    println!("random O(4,1) element (seed 7):");
    println!("  orthogonality residual = {:.3e}", MoebiusMap::orthogonality_residual(a.matrix()));
    println!(
        "  <Au, Av> - <u, v>      = {:+.3e}",
        lorentz_form(&a.apply_vec(&u), &a.apply_vec(&v)) - lorentz_form(&u, &v)
    );
}

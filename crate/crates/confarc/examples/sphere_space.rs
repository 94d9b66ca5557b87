//! De Sitter space as the space of oriented spheres: lifts, Lorentz
//! separation, and sphere/circle incidence.
//!
//! Run: cargo run --example sphere_space

use confarc::desitter::{
    desitter_to_sphere, incidence_intersection, lorentz_separation, sphere_to_desitter,
    EuclideanSphere, Incidence,
};
use confarc::minkowski::{lift_euclidean, project_to_chart, Chart, MinkVec5};
use nalgebra::Vector3;

fn main() {
    println!("=== Oriented spheres as unit spacelike vectors ===\n");

    let unit = sphere_to_desitter(&EuclideanSphere::sphere(Vector3::zeros(), 1.0).unwrap());
    let euler = sphere_to_desitter(
        &EuclideanSphere::sphere(Vector3::zeros(), std::f64::consts::E).unwrap(),
    );
    println!("unit sphere  -> {:?}", unit.vector().as_slice());
    println!("radius-e sphere -> {:?}", euler.vector().as_slice());
    let sep = lorentz_separation(&unit, &euler);
    println!(
        "separation: {:?} at distance {:.12} (concentric radii 1 and e sit at\n  inversive distance exactly 1)\n",
        sep.kind, sep.value
    );

    // orthogonal spheres meet at a right angle
    let a = sphere_to_desitter(&EuclideanSphere::sphere(Vector3::zeros(), 1.0).unwrap());
    let b = sphere_to_desitter(
        &EuclideanSphere::sphere(Vector3::new(5.0f64.sqrt(), 0.0, 0.0), 2.0).unwrap(),
    );
    let sep = lorentz_separation(&a, &b);
    println!("|centers|^2 = r1^2 + r2^2 gives angle {:.6} (pi/2 = {:.6})\n", sep.value, std::f64::consts::FRAC_PI_2);

    // cut the unit sphere with the x axis (a line counts as a circle)
    let axis = [
        lift_euclidean(&Vector3::zeros()),
        lift_euclidean(&Vector3::new(2.0, 0.0, 0.0)),
        MinkVec5::from([1.0, 1.0, 0.0, 0.0, 0.0]),
    ];
    match incidence_intersection(&unit, &axis).unwrap() {
        Incidence::Pair(dirs) => {
            println!("x-axis meets the unit sphere at:");
            for d in &dirs {
                let p = project_to_chart(d, Chart::Euclidean).unwrap().euclidean().unwrap();
                println!("  [{:+.6}, {:+.6}, {:+.6}]", p[0], p[1], p[2]);
            }
        }
        other => println!("unexpected incidence {other:?}"),
    }

    // round trip back to Euclidean data
    let plane = sphere_to_desitter(&EuclideanSphere::plane(Vector3::z(), 0.25).unwrap());
    println!("\nplane z = 0.25 lifts to {:?}", plane.vector().as_slice());
    println!("and recovers as {:?}", desitter_to_sphere(&plane).unwrap());
}

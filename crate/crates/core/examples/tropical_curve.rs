//! The plane tropical cubic of the worked example, written to `tropical_curve.svg`.

use torjet::arith::rats;
use torjet::cli::render_svg;
use torjet::lattice_geom::points_i64;
use torjet::tropical::{plane_curve, TropicalForm};

fn main() {
    let a = points_i64(&[[0, 0], [1, 0], [2, 0], [3, 0], [0, 1], [1, 1], [2, 1], [0, 2], [1, 2], [0, 3]]);
    let t = TropicalForm::new(a, rats(&[4, 1, 2, 3, 1, 1, 2, 1, 1, 1])).unwrap();
    let c = plane_curve(&t).unwrap();
    for (i, v) in c.vertices.iter().enumerate() {
        println!("vertex {i}: ({}, {})", v[0], v[1]);
    }
    for e in &c.edges {
        println!("edge {} - {} multiplicity {}", e.from, e.to, e.multiplicity);
    }
    for r in &c.rays {
        println!("ray from {} along ({}, {}) multiplicity {}", r.vertex, r.direction[0], r.direction[1], r.multiplicity);
    }
    println!("balanced: {}", c.is_balanced());
    std::fs::write("tropical_curve.svg", render_svg(&c)).unwrap();
}

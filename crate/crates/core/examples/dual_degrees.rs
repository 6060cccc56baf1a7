//! Dual and second dual degrees of a few smooth toric threefolds and surfaces.

use torjet::dual_degrees::{
    dual_degree_smooth, surface_kdual_degree, threefold_2dual_degree, threefold_2dual_via_corollary,
};
use torjet::lattice_geom::{convex_hull, points_i64};

fn main() {
    let boxes = [(2, 2, 2), (2, 2, 3), (3, 3, 3)];
    for (a, b, c) in boxes {
        let p = convex_hull(&points_i64(&[
            [0, 0, 0],
            [a, 0, 0],
            [0, b, 0],
            [0, 0, c],
            [a, b, 0],
            [a, 0, c],
            [0, b, c],
            [a, b, c],
        ]))
        .unwrap();
        let second = threefold_2dual_degree(&p).unwrap();
        let v1 = threefold_2dual_via_corollary(&p, 1).unwrap();
        let v2 = threefold_2dual_via_corollary(&p, 2).unwrap();
        println!(
            "box({a},{b},{c}): dual {}, second dual {:?} (corollary forms {:?}, {:?})",
            dual_degree_smooth(&p).unwrap(),
            second.outcome,
            v1.outcome,
            v2.outcome
        );
    }
    let simplex3 = convex_hull(&points_i64(&[[0, 0, 0], [3, 0, 0], [0, 3, 0], [0, 0, 3]])).unwrap();
    println!("3 Delta_3: {:?}", threefold_2dual_degree(&simplex3).unwrap().outcome);
    let square = convex_hull(&points_i64(&[[0, 0], [2, 0], [0, 2], [2, 2]])).unwrap();
    println!("[0,2]^2, k = 2: {:?}", surface_kdual_degree(&square, 2).unwrap().outcome);
}

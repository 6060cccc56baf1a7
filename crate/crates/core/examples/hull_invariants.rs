//! Face numbers, face sums and adjoint data of the cube [0,2]^3.

use torjet::lattice_geom::{convex_hull, lattice_points, points_i64};
use torjet::polytope_invariants::{adjoint_invariants, detect_exceptional, invariant_vector, is_k_regular, is_smooth};

fn main() {
    let cube = convex_hull(&points_i64(&[
        [0, 0, 0],
        [2, 0, 0],
        [0, 2, 0],
        [0, 0, 2],
        [2, 2, 0],
        [2, 0, 2],
        [0, 2, 2],
        [2, 2, 2],
    ]))
    .unwrap();
    println!("vertices {}, edges {}, facets {}", cube.vertices().len(), cube.edges().len(), cube.facets().len());
    println!("lattice points {}, interior {}", lattice_points(&cube, false).len(), lattice_points(&cube, true).len());
    let inv = invariant_vector(&cube).unwrap();
    println!("(Vol, F, E, V) = ({}, {}, {}, {})", inv.vol, inv.facet_sum, inv.edge_sum, inv.vertex_count);
    println!("smooth {}, 2-regular {}", is_smooth(&cube), is_k_regular(&cube, 2));
    println!("exceptional {:?}", detect_exceptional(&cube).unwrap());
    for r in 1..=2 {
        let a = adjoint_invariants(&cube, r).unwrap();
        println!("r = {r}: vol {} F {} E {} ({:?})", a.vol_adj, a.facet_adj, a.edge_adj, a.degenerate);
    }
}

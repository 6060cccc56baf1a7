//! Membership of the worked weight vector in the tropicalized second dual of 3 Delta_2.

use torjet::arith::rats;
use torjet::lattice_geom::points_i64;
use torjet::tropical::{membership, verify_witness, Caps};

fn main() {
    let a = points_i64(&[[0, 0], [1, 0], [2, 0], [3, 0], [0, 1], [1, 1], [2, 1], [0, 2], [1, 2], [0, 3]]);
    let u = rats(&[4, 1, 2, 3, 1, 1, 2, 1, 1, 1]);
    let caps = Caps::default();
    let cert = membership(&a, 2, &u, &caps).unwrap();
    println!("{}", serde_json::to_string_pretty(&cert).unwrap());
    for b in [[0, 0], [10, 10]] {
        println!("b = {b:?} certifies: {}", verify_witness(&a, 2, &u, &rats(&b), &caps).unwrap());
    }
}

//! A configuration whose second dual misses the torus, with the separating conic.

use torjet::jet_apparatus::torus_disjoint;
use torjet::lattice_geom::points_i64;

fn main() {
    let a = points_i64(&[
        [3, 0, 0],
        [0, 0, 0],
        [1, 0, 0],
        [2, 0, 0],
        [0, 1, 0],
        [1, 1, 0],
        [0, 2, 0],
        [0, 0, 1],
        [1, 0, 1],
        [0, 1, 1],
        [0, 0, 2],
    ]);
    let t = torus_disjoint(&a, 2).unwrap();
    println!("disjoint: {}", t.disjoint);
    if let (Some(i), Some(q)) = (t.index, t.witness) {
        println!("Q = {q} is nonzero only at point {i}");
        for p in &a {
            let coords: Vec<String> = p.iter().map(|x| x.to_string()).collect();
            println!("  Q({}) = {}", coords.join(", "), q.eval_int(p));
        }
    }
}

//! The jet matrix of 3 Delta_2 for k = 2: rank, kernel and cocircuits.

use torjet::jet_apparatus::{build_Ak, cocircuits, expected_dim, rank_and_kernel, DEFAULT_CAP_COLUMNS};
use torjet::lattice_geom::points_i64;

fn main() {
    let a = points_i64(&[[0, 0], [1, 0], [2, 0], [3, 0], [0, 1], [1, 1], [2, 1], [0, 2], [1, 2], [0, 3]]);
    let m = build_Ak(&a, 2).unwrap();
    print!("{}", m.to_tsv());
    let (rank, kernel) = rank_and_kernel(&m.matrix);
    println!("rank {rank}, kernel dimension {}, expected dimension {}", kernel.len(), expected_dim(&a, 2).unwrap());
    let cs = cocircuits(&m, DEFAULT_CAP_COLUMNS).unwrap();
    println!("{} cocircuits; the smallest supports:", cs.len());
    let mut by_size: Vec<_> = cs.iter().collect();
    by_size.sort_by_key(|c| c.support.len());
    for c in by_size.iter().take(5) {
        println!("  {:?} from Q = {}", c.support, c.witness);
    }
}

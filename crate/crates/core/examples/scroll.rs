//! Dimensions and degrees of higher duals of rational normal scrolls.

use torjet::dual_degrees::scroll_kdual;

fn main() {
    for d in [vec![2u64, 2, 2], vec![2, 2, 3], vec![3, 4, 6], vec![2, 5]] {
        for k in 1..=*d.last().unwrap() {
            let s = scroll_kdual(&d, k).unwrap();
            let degree = s.degree.as_ref().and_then(|r| r.degree()).map_or("-".to_string(), |x| x.to_string());
            println!("S{d:?} k = {k}: i_k {}, dim {}, degree {degree}", s.profile.i_k, s.dim);
        }
    }
}

mod common;

use common::*;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use torjet::arith::{Int, Rat};
use torjet::lattice_geom::{DimTag, Polytope};
use torjet::polytope_invariants::{
    adjoint_invariants, cayley_scroll_polytope, detect_exceptional, invariant_vector, is_k_regular, is_smooth,
    ExceptionalTag, InvariantVector,
};

fn iv(vol: i64, f: i64, e: i64, v: usize) -> InvariantVector {
    InvariantVector { vol: Int::from(vol), facet_sum: Int::from(f), edge_sum: Int::from(e), vertex_count: v }
}

fn octahedron() -> Polytope {
    hull(&[&[1, 0, 0], &[-1, 0, 0], &[0, 1, 0], &[0, -1, 0], &[0, 0, 1], &[0, 0, -1]])
}

#[test]
fn invariant_vector_examples() {
    assert_eq!(invariant_vector(&box3(2, 2, 2)).unwrap(), iv(48, 48, 24, 8));
    assert_eq!(invariant_vector(&simplex3(3)).unwrap(), iv(27, 36, 18, 4));
    assert_eq!(invariant_vector(&cayley_scroll_polytope(&[2, 2, 3]).unwrap()).unwrap(), iv(7, 16, 13, 6));
}

/// Face sums of a box `[0,a] x [0,b] x [0,c]` written out by hand.
#[test]
fn invariant_vector_of_boxes_matches_closed_form() {
    for (a, b, c) in [(1, 1, 1), (2, 3, 4), (5, 1, 2)] {
        let expect = iv(6 * a * b * c, 4 * (a * b + b * c + c * a), 4 * (a + b + c), 8);
        assert_eq!(invariant_vector(&box3(a, b, c)).unwrap(), expect);
    }
}

#[test]
fn adjoint_examples() {
    let cube = box3(2, 2, 2);
    let a1 = adjoint_invariants(&cube, 1).unwrap();
    assert_eq!((a1.vol_adj.clone(), a1.facet_adj.clone(), a1.edge_adj.clone()), (r(0), r(0), Int::from(0)));
    assert_eq!(a1.degenerate, DimTag::Point);
    assert!(!a1.mismatch);

    let a2 = adjoint_invariants(&cube, 2).unwrap();
    assert_eq!((a2.vol_adj.clone(), a2.facet_adj.clone(), a2.edge_adj.clone()), (r(48), r(48), Int::from(24)));
    assert_eq!(a2.degenerate, DimTag::Full);
    let comb = a2.combinatorial.as_ref().unwrap();
    assert_eq!((comb.facet_sum.clone(), comb.edge_sum.clone()), (r(48), r(24)));
    assert!(!a2.mismatch);

    let slab = box3(2, 2, 3);
    let s = adjoint_invariants(&slab, 1).unwrap();
    assert_eq!(s.degenerate, DimTag::Segment);
    assert_eq!((s.vol_adj.clone(), s.facet_adj.clone(), s.edge_adj.clone()), (r(0), r(0), Int::from(4)));
    assert_eq!(s.combinatorial.as_ref().unwrap().edge_sum, r(1));
    assert!(s.mismatch);
}

/// `c2 (L - c1)` on `(P^1)^3` with `L = O(2,2,3)` through the Chern numbers.
#[test]
fn slab_edge_adjoint_matches_chern_arithmetic() {
    let ch = Chern3::p1_cubed(2, 2, 3);
    assert_eq!(Int::from(ch.c2l - ch.c1c2), adjoint_invariants(&box3(2, 2, 3), 1).unwrap().edge_adj);
}

#[test]
fn adjoint_facet_data_matches_chern_numbers_on_corpus() {
    // F_r = c1 (rL - c1)^2 and vol_adj = (rL - c1)^3 whenever Q is solid.
    let cases: Vec<(Polytope, Chern3)> = [(3, 3, 3), (3, 4, 5), (4, 4, 4)]
        .iter()
        .map(|&(a, b, c)| (box3(a, b, c), Chern3::p1_cubed(a, b, c)))
        .chain([(4, 3), (5, 3)].iter().map(|&(d, e)| (prism(d, e), Chern3::p2_p1(d, e))))
        .collect();
    for (p, ch) in cases {
        for rr in 1..=2i64 {
            let a = adjoint_invariants(&p, rr as u64).unwrap();
            if a.degenerate != DimTag::Full {
                continue;
            }
            let vol = rr.pow(3) * ch.l3 - 3 * rr * rr * ch.c1l2 + 3 * rr * ch.c1sq_l - ch.c1cube;
            let f = rr * rr * ch.c1l2 - 2 * rr * ch.c1sq_l + ch.c1cube;
            assert_eq!(a.vol_adj, r(vol));
            assert_eq!(a.facet_adj, r(f));
            assert_eq!(a.edge_adj, Int::from(rr * ch.c2l - ch.c1c2));
        }
    }
}

#[test]
fn edge_adjoint_defect_is_24_on_corpus() {
    for (name, p) in threefold_corpus() {
        let e = invariant_vector(&p).unwrap().edge_sum;
        for rr in 1..=3u64 {
            let a = adjoint_invariants(&p, rr).unwrap();
            assert_eq!(Int::from(rr) * &e - &a.edge_adj, Int::from(24), "{name} r={rr}");
            if let (DimTag::Full, Some(comb)) = (a.degenerate, a.combinatorial.as_ref()) {
                assert_eq!(comb.edge_sum, Rat::from_integer(Int::from(rr) * &e - 24), "{name} r={rr}");
                assert_eq!(comb.facet_sum, a.facet_adj, "{name} r={rr}");
                assert!(!a.mismatch, "{name} r={rr}");
            }
        }
    }
}

#[test]
fn smoothness_examples() {
    assert!(is_smooth(&box3(2, 2, 2)));
    assert!(!is_smooth(&octahedron()));
    assert!(is_smooth(&cayley_scroll_polytope(&[2, 2, 3]).unwrap()));
    for (name, p) in threefold_corpus() {
        assert!(is_smooth(&p), "{name}");
    }
}

#[test]
fn regularity_examples() {
    assert!(is_k_regular(&box3(2, 2, 2), 2));
    let segre = hull(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 0, 1], &[0, 1, 1]]);
    assert!(!is_k_regular(&segre, 2));
    assert!(is_k_regular(&simplex2(3), 3));
    assert!(!is_k_regular(&simplex2(3), 4));
}

#[test]
fn exceptional_examples() {
    assert_eq!(detect_exceptional(&simplex3(2)).unwrap(), ExceptionalTag::KSimplex { k: 2 });
    assert_eq!(detect_exceptional(&simplex3(3)).unwrap(), ExceptionalTag::KSimplex { k: 3 });
    // 2 Delta_2 x 2 Delta_1.
    let dc = hull(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[2, 0, 2], &[0, 2, 2]]);
    assert_eq!(detect_exceptional(&dc).unwrap(), ExceptionalTag::DoubleCayleyScroll { a: 1, b: 1, c: 1 });
    assert_eq!(detect_exceptional(&box3(2, 2, 2)).unwrap(), ExceptionalTag::None);
    assert!(detect_exceptional(&octahedron()).is_err());
    assert!(detect_exceptional(&simplex2(2)).is_err());
}

#[test]
fn cayley_examples() {
    let p = cayley_scroll_polytope(&[2, 2, 3]).unwrap();
    assert_eq!(p.vertices().len(), 6);
    let sq = cayley_scroll_polytope(&[1, 1]).unwrap();
    assert_eq!(sq, rect(1, 1));
    // Cayley(2,2,2) is 2 Delta_1 x Delta_2 with the segment on the first axis.
    let prod = hull(&[&[0, 0, 0], &[2, 0, 0], &[0, 1, 0], &[2, 1, 0], &[0, 0, 1], &[2, 0, 1]]);
    assert_eq!(cayley_scroll_polytope(&[2, 2, 2]).unwrap(), prod);
    assert!(cayley_scroll_polytope(&[3]).is_err());
}

fn corpus_item() -> impl Strategy<Value = Polytope> {
    let n = threefold_corpus().len();
    (0..n).prop_map(|i| threefold_corpus().swap_remove(i).1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn regularity_is_monotone(p in corpus_item(), k in 1u64..=6) {
        if is_k_regular(&p, k) {
            for j in 1..=k {
                prop_assert!(is_k_regular(&p, j));
            }
        }
    }

    #[test]
    fn invariants_are_unimodular_invariant(p in corpus_item(), seed in any::<u64>()) {
        let mut g = rng(seed);
        let q = p.affine_image(&random_unimodular(&mut g, 3), &random_translation(&mut g, 3)).unwrap();
        prop_assert_eq!(invariant_vector(&q).unwrap(), invariant_vector(&p).unwrap());
        prop_assert!(is_smooth(&q));
    }

    #[test]
    fn exceptional_detection_is_unimodular_invariant(which in 0usize..4, seed in any::<u64>()) {
        let (p, tag) = match which {
            0 => (simplex3(2), ExceptionalTag::KSimplex { k: 2 }),
            1 => (simplex3(3), ExceptionalTag::KSimplex { k: 3 }),
            2 => (
                hull(&[&[0, 0, 0], &[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[2, 0, 2], &[0, 2, 2]]),
                ExceptionalTag::DoubleCayleyScroll { a: 1, b: 1, c: 1 },
            ),
            _ => (box3(2, 3, 4), ExceptionalTag::None),
        };
        let mut g = rng(seed);
        let q = p.affine_image(&random_unimodular(&mut g, 3), &random_translation(&mut g, 3)).unwrap();
        prop_assert_eq!(detect_exceptional(&q).unwrap(), tag);
    }
}

#[test]
fn vertex_count_bound() {
    for (name, p) in threefold_corpus() {
        let v = invariant_vector(&p).unwrap();
        assert!(v.vertex_count >= 4, "{name}");
        assert!(v.vol.to_i64().unwrap() > 0 && v.facet_sum > Int::from(0), "{name}");
    }
}

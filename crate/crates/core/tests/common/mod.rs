#![allow(dead_code)]

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use torjet::arith::{Int, Rat};
use torjet::lattice_geom::{convex_hull, LatticePoint, Polytope};

pub fn pts(v: &[&[i64]]) -> Vec<LatticePoint> {
    v.iter().map(|p| p.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn hull(v: &[&[i64]]) -> Polytope {
    convex_hull(&pts(v)).expect("full-dimensional test polytope")
}

pub fn r(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

pub fn box3(a: i64, b: i64, c: i64) -> Polytope {
    hull(&[&[0, 0, 0], &[a, 0, 0], &[0, b, 0], &[0, 0, c], &[a, b, 0], &[a, 0, c], &[0, b, c], &[a, b, c]])
}

/// `d Delta_2 x [0, e]`.
pub fn prism(d: i64, e: i64) -> Polytope {
    hull(&[&[0, 0, 0], &[d, 0, 0], &[0, d, 0], &[0, 0, e], &[d, 0, e], &[0, d, e]])
}

/// Box with the corner at the origin cut off by `x + y + z >= t`.
pub fn truncated_box(a: i64, b: i64, c: i64, t: i64) -> Polytope {
    hull(&[
        &[t, 0, 0],
        &[0, t, 0],
        &[0, 0, t],
        &[a, 0, 0],
        &[0, b, 0],
        &[0, 0, c],
        &[a, b, 0],
        &[a, 0, c],
        &[0, b, c],
        &[a, b, c],
    ])
}

pub fn simplex3(k: i64) -> Polytope {
    hull(&[&[0, 0, 0], &[k, 0, 0], &[0, k, 0], &[0, 0, k]])
}

pub fn simplex2(k: i64) -> Polytope {
    hull(&[&[0, 0], &[k, 0], &[0, k]])
}

pub fn rect(a: i64, b: i64) -> Polytope {
    hull(&[&[0, 0], &[a, 0], &[0, b], &[a, b]])
}

/// Hirzebruch trapezoid with bottom `a + c b`, top `a`, height `b`.
pub fn hirzebruch(a: i64, b: i64, c: i64) -> Polytope {
    hull(&[&[0, 0], &[a + c * b, 0], &[a, b], &[0, b]])
}

/// Rectangle with all four corners cut by lattice-length-`t` diagonals.
pub fn octagon(a: i64, b: i64, t: i64) -> Polytope {
    hull(&[&[t, 0], &[a - t, 0], &[a, t], &[a, b - t], &[a - t, b], &[t, b], &[0, b - t], &[0, t]])
}

/// Smooth, 2-regular, non-exceptional threefolds.
pub fn threefold_corpus() -> Vec<(String, Polytope)> {
    let mut out = Vec::new();
    for (a, b, c) in [(2, 2, 2), (2, 2, 3), (2, 2, 4), (2, 3, 3), (2, 3, 4), (2, 4, 4), (3, 3, 3), (3, 3, 4), (3, 4, 4), (4, 4, 4), (2, 2, 5), (2, 3, 5)] {
        out.push((format!("box({a},{b},{c})"), box3(a, b, c)));
    }
    for (d, e) in [(3, 2), (3, 3), (4, 2), (4, 3), (5, 2), (3, 4)] {
        out.push((format!("prism({d},{e})"), prism(d, e)));
    }
    for (a, b, c) in [(4, 4, 4), (4, 4, 5), (4, 5, 5), (5, 5, 5)] {
        out.push((format!("truncated_box({a},{b},{c};2)"), truncated_box(a, b, c, 2)));
    }
    out
}

/// Smooth polygons with every edge of lattice length at least `k`, excluding `k Delta_2`.
pub fn polygon_corpus(k: i64) -> Vec<(String, Polytope)> {
    let mut out = Vec::new();
    for a in k..k + 4 {
        for b in k..k + 2 {
            out.push((format!("rect({a},{b})"), rect(a, b)));
        }
    }
    for d in k + 1..k + 5 {
        out.push((format!("simplex({d})"), simplex2(d)));
    }
    for (a, b, c) in [(k, k, 1), (k, k, 2), (k + 1, k, 1), (k, k + 1, 1), (k + 2, k, 3)] {
        out.push((format!("hirzebruch({a},{b},{c})"), hirzebruch(a, b, c)));
    }
    for (a, b) in [(3 * k, 3 * k), (3 * k + 1, 3 * k), (3 * k + 2, 3 * k + 1)] {
        out.push((format!("octagon({a},{b};{k})"), octagon(a, b, k)));
    }
    out
}

/// Chern numbers `(L^3, c1 L^2, c1^2 L, c1^3, c2 L, c1 c2, c3)` of a smooth toric threefold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chern3 {
    pub l3: i64,
    pub c1l2: i64,
    pub c1sq_l: i64,
    pub c1cube: i64,
    pub c2l: i64,
    pub c1c2: i64,
    pub c3: i64,
}

impl Chern3 {
    /// `(P^1)^3` with `L = O(a, b, c)`.
    pub fn p1_cubed(a: i64, b: i64, c: i64) -> Self {
        Chern3 {
            l3: 6 * a * b * c,
            c1l2: 4 * (a * b + b * c + c * a),
            c1sq_l: 8 * (a + b + c),
            c1cube: 48,
            c2l: 4 * (a + b + c),
            c1c2: 24,
            c3: 8,
        }
    }

    /// `P^2 x P^1` with `L = O(d, e)`.
    pub fn p2_p1(d: i64, e: i64) -> Self {
        Chern3 {
            l3: 3 * d * d * e,
            c1l2: 6 * d * e + 2 * d * d,
            c1sq_l: 9 * e + 12 * d,
            c1cube: 54,
            c2l: 3 * e + 6 * d,
            c1c2: 24,
            c3: 6,
        }
    }

    pub fn second_dual_degree(&self) -> i64 {
        120 * self.l3 - 180 * self.c1l2 + 72 * self.c1sq_l - 7 * self.c1cube + 48 * self.c2l - 20 * self.c1c2
            - 8 * self.c3
    }

    pub fn dual_degree(&self) -> i64 {
        4 * self.l3 - 3 * self.c1l2 + 2 * self.c2l - self.c3
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random element of `GL(n, Z)` as a product of elementary moves.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Vec<Vec<Int>> {
    let mut m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..6 {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            for x in m[i].iter_mut() {
                *x = -*x;
            }
            continue;
        }
        let f: i64 = rng.gen_range(-2..=2);
        for c in 0..n {
            let v = m[j][c];
            m[i][c] += f * v;
        }
    }
    m.into_iter().map(|row| row.into_iter().map(Int::from).collect()).collect()
}

pub fn random_translation(rng: &mut ChaCha8Rng, n: usize) -> Vec<Int> {
    (0..n).map(|_| Int::from(rng.gen_range(-5..=5))).collect()
}

pub fn random_rat(rng: &mut ChaCha8Rng, range: i64, den: i64) -> Rat {
    Rat::new(Int::from(rng.gen_range(-range..=range)), Int::from(rng.gen_range(1..=den)))
}

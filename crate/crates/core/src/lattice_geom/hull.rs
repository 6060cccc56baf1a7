//! Exact hulls of distinct integer point sets in dimension at most 3.
//!
//! Lower-dimensional inputs are projected onto a coordinate subspace that is
//! injective on their affine span, so the combinatorics are unchanged.

use crate::arith::{det_int, rank_int, Int};
use num_traits::{Signed, Zero};
use std::collections::{BTreeSet, VecDeque};

/// Combinatorial hull data, with indices into the input slice.
#[derive(Debug, Clone)]
pub(crate) struct HullData {
    pub dim: usize,
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    /// 2-faces as cyclically ordered vertex lists.
    pub polygons: Vec<Vec<usize>>,
}

fn sub(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub(crate) fn affine_dim(points: &[Vec<Int>]) -> usize {
    if points.len() < 2 {
        return 0;
    }
    let diffs: Vec<Vec<Int>> = points[1..].iter().map(|p| sub(p, &points[0])).collect();
    rank_int(&diffs)
}

/// Coordinates on which the projection is injective on the affine span.
fn injective_coordinates(points: &[Vec<Int>], d: usize) -> Vec<usize> {
    let n = points[0].len();
    let diffs: Vec<Vec<Int>> = points[1..].iter().map(|p| sub(p, &points[0])).collect();
    let mut chosen: Vec<usize> = Vec::new();
    for c in 0..n {
        if chosen.len() == d {
            break;
        }
        let mut trial = chosen.clone();
        trial.push(c);
        let sub_m: Vec<Vec<Int>> = diffs
            .iter()
            .map(|row| trial.iter().map(|&j| row[j].clone()).collect())
            .collect();
        if rank_int(&sub_m) == trial.len() {
            chosen = trial;
        }
    }
    chosen
}

pub(crate) fn hull(points: &[Vec<Int>]) -> HullData {
    assert!(!points.is_empty());
    let n = points[0].len();
    let d = affine_dim(points);
    if d < n {
        let coords = injective_coordinates(points, d);
        let projected: Vec<Vec<Int>> = points
            .iter()
            .map(|p| coords.iter().map(|&j| p[j].clone()).collect())
            .collect();
        return hull_full_dim(&projected, d);
    }
    hull_full_dim(points, d)
}

fn hull_full_dim(points: &[Vec<Int>], d: usize) -> HullData {
    match d {
        0 => HullData { dim: 0, vertices: vec![0], edges: vec![], polygons: vec![] },
        1 => {
            let lo = (0..points.len()).min_by(|&i, &j| points[i][0].cmp(&points[j][0])).unwrap();
            let hi = (0..points.len()).max_by(|&i, &j| points[i][0].cmp(&points[j][0])).unwrap();
            let (a, b) = (lo.min(hi), lo.max(hi));
            HullData { dim: 1, vertices: vec![a, b], edges: vec![[a, b]], polygons: vec![] }
        }
        2 => {
            let all: Vec<usize> = (0..points.len()).collect();
            let cyc = hull2(points, &all, 0, 1);
            let mut vertices = cyc.clone();
            vertices.sort();
            let edges = cycle_edges(&cyc);
            HullData { dim: 2, vertices, edges, polygons: vec![cyc] }
        }
        3 => hull3(points),
        _ => unreachable!("hull dimension above 3"),
    }
}

fn cross2(o: &[Int], a: &[Int], b: &[Int], x: usize, y: usize) -> Int {
    (&a[x] - &o[x]) * (&b[y] - &o[y]) - (&a[y] - &o[y]) * (&b[x] - &o[x])
}

/// Andrew's monotone chain on coordinates `(x, y)` of the selected points.
/// Returns the strict hull vertices in counter-clockwise order.
pub(crate) fn hull2(points: &[Vec<Int>], idx: &[usize], x: usize, y: usize) -> Vec<usize> {
    let mut order: Vec<usize> = idx.to_vec();
    order.sort_by(|&i, &j| {
        (&points[i][x], &points[i][y]).cmp(&(&points[j][x], &points[j][y]))
    });
    order.dedup_by(|a, b| points[*a][x] == points[*b][x] && points[*a][y] == points[*b][y]);
    if order.len() < 3 {
        return order;
    }
    let mut lower: Vec<usize> = Vec::new();
    for &p in &order {
        while lower.len() >= 2
            && !cross2(&points[lower[lower.len() - 2]], &points[lower[lower.len() - 1]], &points[p], x, y)
                .is_positive()
        {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<usize> = Vec::new();
    for &p in order.iter().rev() {
        while upper.len() >= 2
            && !cross2(&points[upper[upper.len() - 2]], &points[upper[upper.len() - 1]], &points[p], x, y)
                .is_positive()
        {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn cycle_edges(cyc: &[usize]) -> Vec<[usize; 2]> {
    let k = cyc.len();
    if k < 2 {
        return vec![];
    }
    if k == 2 {
        let (a, b) = (cyc[0].min(cyc[1]), cyc[0].max(cyc[1]));
        return vec![[a, b]];
    }
    let mut e: Vec<[usize; 2]> = (0..k)
        .map(|i| {
            let (a, b) = (cyc[i], cyc[(i + 1) % k]);
            [a.min(b), a.max(b)]
        })
        .collect();
    e.sort();
    e
}

fn orient(a: &[Int], b: &[Int], c: &[Int], d: &[Int]) -> Int {
    det_int(&[sub(b, a), sub(c, a), sub(d, a)])
}

fn cross3(u: &[Int], v: &[Int]) -> Vec<Int> {
    vec![
        &u[1] * &v[2] - &u[2] * &v[1],
        &u[2] * &v[0] - &u[0] * &v[2],
        &u[0] * &v[1] - &u[1] * &v[0],
    ]
}

fn dot(u: &[Int], v: &[Int]) -> Int {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Rotates the supporting plane spanned by line `ab` and `w` about the line
/// until it touches the point set again; returns the touching point.
fn pivot(points: &[Vec<Int>], a: &[Int], b: &[Int], w: &[Int]) -> usize {
    let mut best: Option<usize> = None;
    let mut inner_sign = Int::zero();
    for (q, pq) in points.iter().enumerate() {
        if orient(a, b, w, pq).is_zero() {
            continue;
        }
        match best {
            None => {
                best = Some(q);
                inner_sign = orient(a, b, pq, w).signum();
            }
            Some(p) => {
                let o = orient(a, b, &points[p], pq);
                if !o.is_zero() && o.signum() != inner_sign {
                    best = Some(q);
                    inner_sign = orient(a, b, pq, w).signum();
                }
            }
        }
    }
    best.expect("full-dimensional input always has a point off the plane")
}

/// Inward normal of the plane through `a`, `b`, `c`, oriented towards `w`.
fn plane_normal(a: &[Int], b: &[Int], c: &[Int], w: &[Int]) -> Vec<Int> {
    let nu = cross3(&sub(b, a), &sub(c, a));
    if dot(&nu, &sub(w, a)).is_negative() {
        nu.into_iter().map(|x| -x).collect()
    } else {
        nu
    }
}

fn on_plane(points: &[Vec<Int>], nu: &[Int], a: &[Int]) -> Vec<usize> {
    let off = dot(nu, a);
    (0..points.len()).filter(|&i| dot(nu, &points[i]) == off).collect()
}

fn facet_polygon(points: &[Vec<Int>], nu: &[Int], members: &[usize]) -> Vec<usize> {
    let drop = (0..3).rev().find(|&c| !nu[c].is_zero()).unwrap();
    let keep: Vec<usize> = (0..3).filter(|&c| c != drop).collect();
    hull2(points, members, keep[0], keep[1])
}

fn hull3(points: &[Vec<Int>]) -> HullData {
    let a = (0..points.len()).min_by(|&i, &j| points[i].cmp(&points[j])).unwrap();
    let pa = &points[a];
    let shift = |c: usize| {
        let mut v = pa.clone();
        v[c] += 1;
        v
    };
    let (ve3, ve2) = (shift(2), shift(1));
    let p1 = pivot(points, pa, &ve3, &ve2);
    let nu1 = plane_normal(pa, &ve3, &points[p1], &ve2);
    let s1 = on_plane(points, &nu1, pa);
    let first_nu = if affine_dim(&s1.iter().map(|&i| points[i].clone()).collect::<Vec<_>>()) == 2 {
        nu1
    } else {
        let p2 = pivot(points, pa, &points[p1], &ve3);
        plane_normal(pa, &points[p1], &points[p2], &ve3)
    };

    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut polygons: Vec<Vec<usize>> = Vec::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    let first = facet_polygon(points, &first_nu, &on_plane(points, &first_nu, pa));
    let mut key = first.clone();
    key.sort();
    seen.insert(key);
    queue.push_back(first);
    while let Some(poly) = queue.pop_front() {
        let k = poly.len();
        for i in 0..k {
            let (u, v, w) = (poly[i], poly[(i + 1) % k], poly[(i + 2) % k]);
            let p = pivot(points, &points[u], &points[v], &points[w]);
            let nu = plane_normal(&points[u], &points[v], &points[p], &points[w]);
            let next = facet_polygon(points, &nu, &on_plane(points, &nu, &points[u]));
            let mut key = next.clone();
            key.sort();
            if seen.insert(key) {
                queue.push_back(next);
            }
        }
        polygons.push(poly);
    }

    let mut verts: BTreeSet<usize> = BTreeSet::new();
    let mut edges: BTreeSet<[usize; 2]> = BTreeSet::new();
    for poly in &polygons {
        verts.extend(poly.iter().copied());
        edges.extend(cycle_edges(poly));
    }
    HullData {
        dim: 3,
        vertices: verts.into_iter().collect(),
        edges: edges.into_iter().collect(),
        polygons,
    }
}

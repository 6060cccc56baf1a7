//! Plane tropical curves dual to regular subdivisions.

use super::{TropError, TropicalForm};
use crate::arith::{primitive, Int, Rat};
use crate::lattice_geom::{regular_subdivision, segment_length, LatticePoint};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveEdge {
    pub from: usize,
    pub to: usize,
    #[serde(serialize_with = "crate::arith::ser_int")]
    pub multiplicity: Int,
    /// Endpoints of the dual edge of the subdivision.
    #[serde(serialize_with = "crate::arith::ser_int_rows")]
    pub dual: [LatticePoint; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveRay {
    pub vertex: usize,
    /// Primitive direction, the inward normal of the dual boundary edge.
    #[serde(serialize_with = "crate::arith::ser_int_vec")]
    pub direction: Vec<Int>,
    #[serde(serialize_with = "crate::arith::ser_int")]
    pub multiplicity: Int,
    #[serde(serialize_with = "crate::arith::ser_int_rows")]
    pub dual: [LatticePoint; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlaneTropicalCurve {
    #[serde(serialize_with = "ser_points")]
    pub vertices: Vec<Vec<Rat>>,
    pub edges: Vec<CurveEdge>,
    pub rays: Vec<CurveRay>,
}

fn ser_points<S: serde::Serializer>(v: &[Vec<Rat>], s: S) -> Result<S::Ok, S::Error> {
    let vals: Vec<Vec<serde_json::Value>> =
        v.iter().map(|p| p.iter().map(crate::arith::rat_json).collect()).collect();
    serde::Serialize::serialize(&vals, s)
}

fn primitive_of_diff(a: &[Rat], b: &[Rat]) -> Vec<Int> {
    let d: Vec<Rat> = a.iter().zip(b).map(|(x, y)| y - x).collect();
    crate::arith::primitive_of_rat(&d)
}

impl PlaneTropicalCurve {
    /// `sum m_e v_e` over the edges and rays at each vertex, with `v_e` pointing away.
    pub fn balancing_residuals(&self) -> Vec<Vec<Int>> {
        let mut res = vec![vec![Int::zero(), Int::zero()]; self.vertices.len()];
        let mut add = |v: usize, dir: &[Int], m: &Int| {
            for (r, d) in res[v].iter_mut().zip(dir) {
                *r += m * d;
            }
        };
        for e in &self.edges {
            let d = primitive_of_diff(&self.vertices[e.from], &self.vertices[e.to]);
            add(e.from, &d, &e.multiplicity);
            let back: Vec<Int> = d.iter().map(|x| -x).collect();
            add(e.to, &back, &e.multiplicity);
        }
        for r in &self.rays {
            add(r.vertex, &r.direction, &r.multiplicity);
        }
        res
    }

    pub fn is_balanced(&self) -> bool {
        self.balancing_residuals().iter().all(|r| r.iter().all(|x| x.is_zero()))
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Primitive normal of the segment `p q` pointing towards `inside`.
fn inward_normal(p: &[Int], q: &[Int], inside: &[Int]) -> Vec<Int> {
    let n = primitive(&[&q[1] - &p[1], &p[0] - &q[0]]);
    let side: Int = n.iter().zip(inside.iter().zip(p)).map(|(a, (x, y))| a * (x - y)).sum();
    if side.is_negative() {
        n.into_iter().map(|x| -x).collect()
    } else {
        n
    }
}

pub fn plane_curve(t: &TropicalForm) -> Result<PlaneTropicalCurve, TropError> {
    let n = t.dim();
    if n != 2 {
        return Err(TropError::NotPlanar(n));
    }
    let first = &t.config[0];
    if t.config.iter().all(|p| p == first) {
        return Ok(PlaneTropicalCurve { vertices: vec![], edges: vec![], rays: vec![] });
    }
    let sub = regular_subdivision(&t.config, &t.u)?;
    let mut vertices = Vec::new();
    // Dual edge (sorted endpoints) -> cells containing it, with a point of the cell off the edge.
    let mut owners: BTreeMap<[LatticePoint; 2], Vec<(usize, LatticePoint)>> = BTreeMap::new();
    for (ci, cell) in sub.cells.iter().enumerate() {
        vertices.push(cell.c.iter().map(|x| -x).collect::<Vec<Rat>>());
        let poly = sub.cell_polytope(ci);
        let verts = poly.lattice_vertices().expect("cells have lattice vertices");
        for e in poly.edges() {
            let (mut p, mut q) = (verts[e[0]].clone(), verts[e[1]].clone());
            if q < p {
                std::mem::swap(&mut p, &mut q);
            }
            let off = verts.iter().find(|v| **v != p && **v != q).cloned().expect("cells are 2-dimensional");
            owners.entry([p, q]).or_default().push((ci, off));
        }
    }
    let mut edges = Vec::new();
    let mut rays = Vec::new();
    for (dual, cells) in owners {
        let m = segment_length(&dual[0], &dual[1]);
        match cells.as_slice() {
            [(a, _), (b, _)] => edges.push(CurveEdge { from: *a, to: *b, multiplicity: m, dual }),
            [(a, off)] => {
                let direction = inward_normal(&dual[0], &dual[1], off);
                rays.push(CurveRay { vertex: *a, direction, multiplicity: m, dual });
            }
            _ => unreachable!("an edge of a planar subdivision lies in one or two cells"),
        }
    }
    Ok(PlaneTropicalCurve { vertices, edges, rays })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{ints, rats};
    use crate::lattice_geom::points_i64;

    #[test]
    fn tropical_line() {
        let t = TropicalForm::new(points_i64(&[[0, 0], [1, 0], [0, 1]]), rats(&[0, 0, 0])).unwrap();
        let c = plane_curve(&t).unwrap();
        assert_eq!(c.vertices, vec![rats(&[0, 0])]);
        let mut dirs: Vec<Vec<Int>> = c.rays.iter().map(|r| r.direction.clone()).collect();
        dirs.sort();
        assert_eq!(dirs, vec![ints(&[-1, -1]), ints(&[0, 1]), ints(&[1, 0])]);
        assert!(c.is_balanced());
    }

    #[test]
    fn worked_example_curve() {
        let a = points_i64(&[[0, 0], [1, 0], [2, 0], [3, 0], [0, 1], [1, 1], [2, 1], [0, 2], [1, 2], [0, 3]]);
        let t = TropicalForm::new(a, rats(&[4, 1, 2, 3, 1, 1, 2, 1, 1, 1])).unwrap();
        let c = plane_curve(&t).unwrap();
        assert!(c.is_balanced());
        assert_eq!(c.vertices, vec![rats(&[3, 3]), rats(&[-1, 0]), rats(&[0, 0])]);
        // All three edges at the rightmost vertex have multiplicity one.
        let at = |v: usize| -> Vec<Int> {
            let mut m: Vec<Int> = c.rays.iter().filter(|r| r.vertex == v).map(|r| r.multiplicity.clone()).collect();
            m.extend(c.edges.iter().filter(|e| e.from == v || e.to == v).map(|e| e.multiplicity.clone()));
            m.sort();
            m
        };
        assert_eq!(at(0), ints(&[1, 1, 1]));
        assert_eq!(at(1), ints(&[2, 2, 2]));
        assert_eq!(at(2), ints(&[1, 1, 2, 2]));
    }

    #[test]
    fn non_planar_is_rejected() {
        let t = TropicalForm::new(points_i64(&[[0], [1], [2]]), rats(&[0, 0, 0])).unwrap();
        assert_eq!(plane_curve(&t).unwrap_err(), TropError::NotPlanar(1));
    }
}

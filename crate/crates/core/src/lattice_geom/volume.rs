//! Normalized volumes, Minkowski sums and mixed volumes.

use super::{GeomError, Polytope, RationalPoint};
use crate::arith::{add_rat, cross3, primitive_of_rat, rat, rat_of, sub_rat, Rat};
use num_traits::{Signed, Zero};

/// Normalized area of a convex polygon given in cyclic order, in the lattice
/// induced on its plane (ambient dimension 2 or 3).
pub(crate) fn polygon_lattice_area(cyc: &[RationalPoint]) -> Rat {
    let p0 = &cyc[0];
    if p0.len() == 2 {
        let mut s = Rat::zero();
        for w in cyc[1..].windows(2) {
            let (u, v) = (sub_rat(&w[0], p0), sub_rat(&w[1], p0));
            s += (&u[0] * &v[1] - &u[1] * &v[0]).abs();
        }
        return s;
    }
    let mut s = vec![Rat::zero(), Rat::zero(), Rat::zero()];
    for w in cyc[1..].windows(2) {
        s = add_rat(&s, &cross3(&sub_rat(&w[0], p0), &sub_rat(&w[1], p0)));
    }
    let nu = primitive_of_rat(&s);
    let c = nu.iter().position(|x| !x.is_zero()).expect("polygon has positive area");
    (&s[c] / rat_of(&nu[c])).abs()
}

/// Normalized volume of a full-dimensional 3-polytope: cone from vertex 0
/// over every facet polygon not containing it.
pub(crate) fn solid_volume(p: &Polytope) -> Rat {
    let v0 = &p.vertices()[0];
    let mut total = Rat::zero();
    for (i, face) in p.faces(2).iter().enumerate() {
        if face.contains(&0) {
            continue;
        }
        let cyc = p.polygon_cycle(i);
        let a = sub_rat(&p.vertices()[cyc[0]], v0);
        for w in cyc[1..].windows(2) {
            let b = sub_rat(&p.vertices()[w[0]], v0);
            let c = sub_rat(&p.vertices()[w[1]], v0);
            let det = crate::arith::dot_rat(&a, &cross3(&b, &c));
            total += det.abs();
        }
    }
    total
}

/// Hull of all pairwise vertex sums.
pub fn minkowski_sum(p: &Polytope, q: &Polytope) -> Result<Polytope, GeomError> {
    if p.ambient_dim() != q.ambient_dim() {
        return Err(GeomError::DimensionMismatch(p.ambient_dim(), q.ambient_dim()));
    }
    let mut pts = Vec::with_capacity(p.vertices().len() * q.vertices().len());
    for a in p.vertices() {
        for b in q.vertices() {
            pts.push(add_rat(a, b));
        }
    }
    Polytope::hull_of(&pts)
}

/// Normalized mixed volume of three polytopes in R^3, scaled so that
/// `MV(P, P, P)` equals the normalized volume of `P`.
///
/// `Vol(l1 P1 + l2 P2 + l3 P3)` is a cubic form in the `l_i`; its
/// `l1 l2 l3` coefficient is `6 MV`, extracted exactly from the values at
/// the 0/1 corners of the cube by inclusion-exclusion.
pub fn mixed_volume3(p1: &Polytope, p2: &Polytope, p3: &Polytope) -> Result<Rat, GeomError> {
    for p in [p1, p2, p3] {
        if p.ambient_dim() != 3 {
            return Err(GeomError::DimensionMismatch(p.ambient_dim(), 3));
        }
    }
    let s12 = minkowski_sum(p1, p2)?;
    let s13 = minkowski_sum(p1, p3)?;
    let s23 = minkowski_sum(p2, p3)?;
    let s123 = minkowski_sum(&s12, p3)?;
    let total = s123.full_volume() - s12.full_volume() - s13.full_volume() - s23.full_volume()
        + p1.full_volume()
        + p2.full_volume()
        + p3.full_volume();
    Ok(total * rat(1, 6))
}

//! Invariants of smooth lattice polytopes that feed the degree formulas.
//!
//! For a smooth polytope `P` with line bundle `L`, the face sums
//! `(Vol, F, E, V)` are the Chern numbers `L^n, c1 L^{n-1}, c_{n-1} L, c_n`.
//! Adjoint data at level `r` is read from the tightened polytope
//! `Q = {<nu_F, x> >= r a_F + 1}`, the polytope of `rL - c1`.

use crate::arith::{rat_of, to_integer_exact, Int, Rat};
use crate::lattice_geom::{
    interior_hull, mixed_volume3, tightened_polytope, DimTag, GeomError, LatticePoint, Polytope,
};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error(transparent)]
    Geometry(#[from] GeomError),
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("polytope has non-integral vertices")]
    NotLattice,
    #[error("polytope is not smooth")]
    NotSmooth,
    #[error("polytope is {0}-dimensional, expected 3")]
    NotDim3(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
}

/// `(Vol, F, E, V)`. For polygons the facet sum equals the edge sum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantVector {
    #[serde(serialize_with = "crate::arith::ser_int")]
    pub vol: Int,
    #[serde(serialize_with = "crate::arith::ser_int")]
    pub facet_sum: Int,
    #[serde(serialize_with = "crate::arith::ser_int")]
    pub edge_sum: Int,
    pub vertex_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjointInvariants {
    pub r: u64,
    /// `(rL - c1)^3`: normalized volume of `Q`, zero if `Q` is not solid.
    #[serde(serialize_with = "crate::arith::ser_rat")]
    pub vol_adj: Rat,
    /// `c1 (rL - c1)^2 = r MV(P, Q, Q) - Vol(Q)`.
    #[serde(serialize_with = "crate::arith::ser_rat")]
    pub facet_adj: Rat,
    /// `c2 (rL - c1) = r E - 24`.
    #[serde(serialize_with = "crate::arith::ser_int")]
    pub edge_adj: Int,
    /// Dimension tag of `Q`.
    pub degenerate: DimTag,
    /// Facet and edge sums of `Q` read off its 2-faces and edges, when `Q` is a lattice polytope.
    pub combinatorial: Option<CombinatorialSums>,
    /// True when the combinatorial sums exist and disagree with the intersection numbers.
    pub mismatch: bool,
    /// True when `Q` differs from the hull of the interior lattice points of `rP`.
    pub interior_hull_differs: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CombinatorialSums {
    #[serde(serialize_with = "crate::arith::ser_rat")]
    pub facet_sum: Rat,
    #[serde(serialize_with = "crate::arith::ser_rat")]
    pub edge_sum: Rat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum ExceptionalTag {
    KSimplex { k: u64 },
    DoubleCayleyScroll { a: u64, b: u64, c: u64 },
    None,
}

fn require_lattice_full(p: &Polytope) -> Result<(), InvariantError> {
    if !p.is_full_dimensional() {
        return Err(InvariantError::NotFullDimensional);
    }
    if !p.is_lattice() {
        return Err(InvariantError::NotLattice);
    }
    Ok(())
}

fn face_sum(p: &Polytope, d: usize) -> Rat {
    (0..p.faces(d).len()).map(|i| p.face_volume(d, i)).sum()
}

fn as_int(r: Rat) -> Int {
    to_integer_exact(&r).expect("lattice polytope volumes are integers")
}

pub fn invariant_vector(p: &Polytope) -> Result<InvariantVector, InvariantError> {
    require_lattice_full(p)?;
    let n = p.dim();
    let vol = as_int(p.normalized_volume());
    let facet_sum = if n >= 1 { as_int(face_sum(p, n - 1)) } else { Int::zero() };
    let edge_sum = if n >= 1 { as_int(face_sum(p, 1)) } else { Int::zero() };
    Ok(InvariantVector { vol, facet_sum, edge_sum, vertex_count: p.vertices().len() })
}

fn sub(a: &[Int], b: &[Int]) -> Vec<Int> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Every vertex has exactly `n` edges whose primitive directions form a lattice basis.
pub fn is_smooth(p: &Polytope) -> bool {
    let Some(verts) = p.lattice_vertices() else { return false };
    if !p.is_full_dimensional() {
        return false;
    }
    let n = p.dim();
    if n == 1 {
        return true;
    }
    (0..verts.len()).all(|v| {
        let dirs: Vec<Vec<Int>> = p
            .edges()
            .iter()
            .filter(|e| e.contains(&v))
            .map(|e| {
                let w = if e[0] == v { e[1] } else { e[0] };
                crate::arith::primitive(&sub(&verts[w], &verts[v]))
            })
            .collect();
        dirs.len() == n && crate::arith::det_int(&dirs).abs().is_one()
    })
}

/// Every edge has lattice length at least `k`.
pub fn is_k_regular(p: &Polytope, k: u64) -> bool {
    let kk = Rat::from_integer(Int::from(k));
    p.edges().iter().all(|e| p.edge_length(e) >= kk)
}

pub fn adjoint_invariants(p: &Polytope, r: u64) -> Result<AdjointInvariants, InvariantError> {
    require_lattice_full(p)?;
    if p.dim() != 3 {
        return Err(InvariantError::NotDim3(p.dim()));
    }
    if !is_smooth(p) {
        return Err(InvariantError::NotSmooth);
    }
    if r == 0 {
        return Err(InvariantError::BadParameters("r must be positive".into()));
    }
    let ri = Int::from(r);
    let q = tightened_polytope(p, &ri);
    let degenerate = DimTag::of(q.as_ref());
    let inv = invariant_vector(p)?;
    let edge_adj = &ri * &inv.edge_sum - Int::from(24);
    let (vol_adj, facet_adj) = match &q {
        None => (Rat::zero(), Rat::zero()),
        Some(q) => {
            let vq = q.full_volume();
            let mv = mixed_volume3(p, q, q)?;
            (vq.clone(), rat_of(&ri) * mv - vq)
        }
    };
    let combinatorial = match &q {
        Some(q) if q.is_lattice() => {
            Some(CombinatorialSums { facet_sum: face_sum(q, 2), edge_sum: face_sum(q, 1) })
        }
        _ => None,
    };
    let mismatch = combinatorial
        .as_ref()
        .is_some_and(|c| c.facet_sum != facet_adj || c.edge_sum != rat_of(&edge_adj));
    let rp = p.scaled(&rat_of(&ri))?;
    let interior_hull_differs = interior_hull(&rp) != q;
    Ok(AdjointInvariants {
        r,
        vol_adj,
        facet_adj,
        edge_adj,
        degenerate,
        combinatorial,
        mismatch,
        interior_hull_differs,
    })
}

/// Basis of the integer vectors orthogonal to a primitive `e` in Z^3.
fn orthogonal_lattice_basis(e: &[Int]) -> [Vec<Int>; 2] {
    // Column operations reduce the row vector e to (g, 0, 0); the last two
    // columns of the accumulated unimodular matrix span its kernel.
    let mut row = e.to_vec();
    let mut u: Vec<Vec<Int>> = (0..3)
        .map(|i| (0..3).map(|j| if i == j { Int::one() } else { Int::zero() }).collect())
        .collect();
    loop {
        let nz: Vec<usize> = (0..3).filter(|&j| !row[j].is_zero()).collect();
        if nz.len() <= 1 {
            if let Some(&j) = nz.first() {
                if j != 0 {
                    row.swap(0, j);
                    for r in u.iter_mut() {
                        r.swap(0, j);
                    }
                }
            }
            break;
        }
        let piv = *nz.iter().min_by_key(|&&j| row[j].abs()).unwrap();
        for &j in &nz {
            if j == piv {
                continue;
            }
            let q = row[j].div_floor(&row[piv]);
            row[j] = &row[j] - &q * &row[piv];
            for r in u.iter_mut() {
                let v = &r[j] - &q * &r[piv];
                r[j] = v;
            }
        }
    }
    let col = |j: usize| -> Vec<Int> { (0..3).map(|i| u[i][j].clone()).collect() };
    [col(1), col(2)]
}

pub fn detect_exceptional(p: &Polytope) -> Result<ExceptionalTag, InvariantError> {
    if !p.is_full_dimensional() || p.dim() != 3 {
        return Err(InvariantError::PreconditionViolated(format!(
            "expected a full-dimensional 3-polytope, got dimension {}",
            p.dim()
        )));
    }
    if !p.is_lattice() {
        return Err(InvariantError::PreconditionViolated("vertices are not integral".into()));
    }
    if !is_smooth(p) {
        return Err(InvariantError::PreconditionViolated("polytope is not smooth".into()));
    }
    if !is_k_regular(p, 2) {
        return Err(InvariantError::PreconditionViolated("polytope is not 2-regular".into()));
    }
    let verts = p.lattice_vertices().unwrap();
    if verts.len() == 4 {
        let lens: Vec<Rat> = p.edges().iter().map(|e| p.edge_length(e)).collect();
        if lens.iter().all(|l| *l == lens[0]) {
            let k = lens[0].to_integer();
            return Ok(ExceptionalTag::KSimplex { k: u64::try_from(&k).unwrap_or(u64::MAX) });
        }
    }
    let mut tried: Vec<Vec<Int>> = Vec::new();
    for e in p.edges() {
        let mut dir = crate::arith::primitive(&sub(&verts[e[1]], &verts[e[0]]));
        if dir.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            dir = dir.into_iter().map(|x| -x).collect();
        }
        if tried.contains(&dir) {
            continue;
        }
        tried.push(dir.clone());
        if let Some(tag) = scroll_along(&verts, &dir) {
            return Ok(tag);
        }
    }
    Ok(ExceptionalTag::None)
}

/// Checks whether projecting along `dir` gives a copy of `2 Delta_2` whose
/// vertex fibers are segments of even lengths `2a, 2b, 2c`.
fn scroll_along(verts: &[LatticePoint], dir: &[Int]) -> Option<ExceptionalTag> {
    let [y1, y2] = orthogonal_lattice_basis(dir);
    let proj: Vec<Vec<Int>> = verts
        .iter()
        .map(|v| vec![crate::arith::dot_int(&y1, v), crate::arith::dot_int(&y2, v)])
        .collect();
    let image = crate::lattice_geom::convex_hull(&proj).ok()?;
    let tri = image.lattice_vertices()?;
    if tri.len() != 3 || image.normalized_volume() != Rat::from_integer(Int::from(4)) {
        return None;
    }
    if image.edges().iter().any(|e| image.edge_length(e) != Rat::from_integer(Int::from(2))) {
        return None;
    }
    let mut halves = Vec::new();
    for t in &tri {
        let fiber: Vec<&LatticePoint> =
            verts.iter().zip(&proj).filter(|(_, q)| *q == t).map(|(v, _)| v).collect();
        if fiber.len() != 2 {
            return None;
        }
        let len = crate::arith::gcd_all(&sub(fiber[1], fiber[0]));
        if len.is_odd() {
            return None;
        }
        halves.push(u64::try_from(&(len / 2)).ok()?);
    }
    if verts.len() != 6 {
        return None;
    }
    halves.sort();
    Some(ExceptionalTag::DoubleCayleyScroll { a: halves[0], b: halves[1], c: halves[2] })
}

/// Vertices of `Cayley(d_1 Delta_1, ..., d_n Delta_1)` in `R^n`: the segment
/// `[0, d_j]` placed over `e_{j-1}`, with `e_0 = 0`.
pub fn cayley_scroll_vertices(d: &[u64]) -> Result<Vec<LatticePoint>, InvariantError> {
    if d.len() < 2 || d.contains(&0) {
        return Err(InvariantError::BadParameters(
            "need at least two positive segment lengths".into(),
        ));
    }
    let n = d.len();
    let mut out = Vec::with_capacity(2 * n);
    for (j, &dj) in d.iter().enumerate() {
        for x in [0, dj] {
            let mut v = vec![Int::zero(); n];
            v[0] = Int::from(x);
            if j > 0 {
                v[j] = Int::one();
            }
            out.push(v);
        }
    }
    Ok(out)
}

pub fn cayley_scroll_polytope(d: &[u64]) -> Result<Polytope, InvariantError> {
    let v = cayley_scroll_vertices(d)?;
    Ok(crate::lattice_geom::convex_hull(&v)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rats;
    use crate::lattice_geom::{convex_hull, points_i64};

    #[test]
    fn orthogonal_basis_is_orthogonal_and_saturated() {
        for e in [[1i64, 0, 0], [0, 0, 1], [2, 3, 5], [-4, 6, 9]] {
            let e = crate::arith::ints(&e);
            let [a, b] = orthogonal_lattice_basis(&e);
            assert!(crate::arith::dot_int(&a, &e).is_zero());
            assert!(crate::arith::dot_int(&b, &e).is_zero());
            // a x b = +-e exactly when {a, b} is a basis of the orthogonal lattice.
            let c = vec![
                &a[1] * &b[2] - &a[2] * &b[1],
                &a[2] * &b[0] - &a[0] * &b[2],
                &a[0] * &b[1] - &a[1] * &b[0],
            ];
            let neg: Vec<Int> = e.iter().map(|x| -x).collect();
            assert!(c == e || c == neg);
        }
    }

    #[test]
    fn cayley_vertices_match_construction() {
        let p = cayley_scroll_polytope(&[2, 2, 3]).unwrap();
        assert_eq!(
            p.vertices(),
            &[rats(&[0, 0, 0]), rats(&[0, 0, 1]), rats(&[0, 1, 0]), rats(&[2, 0, 0]), rats(&[2, 1, 0]), rats(&[3, 0, 1])]
        );
        let sq = cayley_scroll_polytope(&[1, 1]).unwrap();
        assert_eq!(sq, convex_hull(&points_i64(&[[0, 0], [1, 0], [0, 1], [1, 1]])).unwrap());
        assert!(cayley_scroll_polytope(&[2]).is_err());
        assert!(cayley_scroll_polytope(&[2, 0]).is_err());
    }

    #[test]
    fn octahedron_is_not_smooth() {
        let o = convex_hull(&points_i64(&[[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]])).unwrap();
        assert!(!is_smooth(&o));
    }

    #[test]
    fn segre_polytope_is_not_two_regular() {
        let p = convex_hull(&points_i64(&[[0, 0, 0], [1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 0, 1], [0, 1, 1]])).unwrap();
        assert!(is_smooth(&p));
        assert!(is_k_regular(&p, 1));
        assert!(!is_k_regular(&p, 2));
    }

    #[test]
    fn adjoint_requires_smooth_threefold() {
        let sq = convex_hull(&points_i64(&[[0, 0], [2, 0], [0, 2], [2, 2]])).unwrap();
        assert_eq!(adjoint_invariants(&sq, 1).unwrap_err(), InvariantError::NotDim3(2));
        let o = convex_hull(&points_i64(&[[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]])).unwrap();
        assert_eq!(adjoint_invariants(&o, 1).unwrap_err(), InvariantError::NotSmooth);
    }
}

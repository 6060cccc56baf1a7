//! Exact convex geometry for lattice and rational polytopes of dimension at most 3.
//!
//! Everything here uses big integers and big rationals. A [`Polytope`] carries
//! its vertices in lexicographic order, the full face lattice, and (when it is
//! full-dimensional) its facet inequalities `<normal, x> >= offset` with
//! primitive inward normals.

mod hull;
mod subdivision;
mod volume;

pub use subdivision::{regular_subdivision, segment_length, Cell, RegularSubdivision};
pub use volume::{minkowski_sum, mixed_volume3};

use crate::arith::{dot_rat_int, primitive, rat_of, to_int_point, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeSet;

pub type LatticePoint = Vec<Int>;
pub type RationalPoint = Vec<Rat>;
/// A possibly empty rational polytope; `None` is the empty set.
pub type RationalPolytope = Option<Polytope>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeomError {
    #[error("empty input")]
    EmptyInput,
    #[error("points span only a {0}-dimensional affine subspace")]
    NotFullDimensional(usize),
    #[error("ambient dimension {0} is not supported (1 to 3 only)")]
    DimensionUnsupported(usize),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("length mismatch: {0} points but {1} heights")]
    LengthMismatch(usize, usize),
    #[error("points have inconsistent dimensions")]
    RaggedInput,
    #[error("empty set")]
    EmptySet,
}

/// Facet inequality `<normal, x> >= offset`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Facet {
    pub normal: Vec<Int>,
    pub offset: Rat,
    /// Indices into [`Polytope::vertices`].
    pub vertices: Vec<usize>,
}

/// Dimension tag for results that may degenerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DimTag {
    Empty,
    Point,
    Segment,
    Polygon,
    Full,
}

impl DimTag {
    pub fn of(p: Option<&Polytope>) -> DimTag {
        match p {
            None => DimTag::Empty,
            Some(p) if p.dim() == p.ambient_dim() && p.dim() > 0 => DimTag::Full,
            Some(p) => match p.dim() {
                0 => DimTag::Point,
                1 => DimTag::Segment,
                _ => DimTag::Polygon,
            },
        }
    }

    /// Affine dimension, `None` for the empty set.
    pub fn dim(self, ambient: usize) -> Option<usize> {
        match self {
            DimTag::Empty => None,
            DimTag::Point => Some(0),
            DimTag::Segment => Some(1),
            DimTag::Polygon => Some(2),
            DimTag::Full => Some(ambient),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<RationalPoint>,
    facets: Vec<Facet>,
    faces: Vec<Vec<Vec<usize>>>,
    polygons: Vec<Vec<usize>>,
}

/// Converts small integer literals into lattice points.
pub fn points_i64<const N: usize>(v: &[[i64; N]]) -> Vec<LatticePoint> {
    v.iter().map(|p| p.iter().map(|&x| Int::from(x)).collect()).collect()
}

/// Hull of lattice points, rejecting lower-dimensional input.
pub fn convex_hull(points: &[LatticePoint]) -> Result<Polytope, GeomError> {
    let rp: Vec<RationalPoint> = points.iter().map(|p| p.iter().map(rat_of).collect()).collect();
    let p = Polytope::hull_of(&rp)?;
    if p.dim < p.ambient_dim {
        return Err(GeomError::NotFullDimensional(p.dim));
    }
    Ok(p)
}

impl Polytope {
    /// Hull of arbitrary rational points; the result may be lower-dimensional.
    pub fn hull_of(points: &[RationalPoint]) -> Result<Polytope, GeomError> {
        let first = points.first().ok_or(GeomError::EmptyInput)?;
        let n = first.len();
        if points.iter().any(|p| p.len() != n) {
            return Err(GeomError::RaggedInput);
        }
        if n == 0 || n > 3 {
            return Err(GeomError::DimensionUnsupported(n));
        }
        let distinct: Vec<RationalPoint> =
            points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
        let den = distinct
            .iter()
            .flat_map(|p| p.iter())
            .fold(Int::one(), |l, x| l.lcm(x.denom()));
        let scaled: Vec<Vec<Int>> = distinct
            .iter()
            .map(|p| p.iter().map(|x| (x * rat_of(&den)).to_integer()).collect())
            .collect();
        let h = hull::hull(&scaled);

        let mut index = vec![usize::MAX; distinct.len()];
        for (new, &old) in h.vertices.iter().enumerate() {
            index[old] = new;
        }
        let vertices: Vec<RationalPoint> = h.vertices.iter().map(|&i| distinct[i].clone()).collect();
        let vcount = vertices.len();
        let all: Vec<usize> = (0..vcount).collect();
        let mut faces: Vec<Vec<Vec<usize>>> = vec![(0..vcount).map(|i| vec![i]).collect()];
        let mut polygons: Vec<Vec<usize>> = Vec::new();
        if h.dim >= 1 {
            let mut edges: Vec<Vec<usize>> = h
                .edges
                .iter()
                .map(|e| {
                    let (a, b) = (index[e[0]], index[e[1]]);
                    vec![a.min(b), a.max(b)]
                })
                .collect();
            edges.sort();
            faces.push(edges);
        }
        if h.dim >= 2 {
            let mut polys: Vec<(Vec<usize>, Vec<usize>)> = h
                .polygons
                .iter()
                .map(|cyc| {
                    let c: Vec<usize> = cyc.iter().map(|&i| index[i]).collect();
                    let mut s = c.clone();
                    s.sort();
                    (s, c)
                })
                .collect();
            polys.sort();
            faces.push(polys.iter().map(|(s, _)| s.clone()).collect());
            polygons = polys.into_iter().map(|(_, c)| c).collect();
        }
        if h.dim == 3 {
            faces.push(vec![all]);
        }

        let mut p = Polytope { ambient_dim: n, dim: h.dim, vertices, facets: vec![], faces, polygons };
        if p.dim == n {
            let scaled_vertices: Vec<Vec<Int>> = h.vertices.iter().map(|&i| scaled[i].clone()).collect();
            p.facets = p.compute_facets(&scaled_vertices);
        }
        Ok(p)
    }

    fn compute_facets(&self, sv: &[Vec<Int>]) -> Vec<Facet> {
        let n = self.ambient_dim;
        let diff = |a: usize, b: usize| -> Vec<Int> { sv[b].iter().zip(&sv[a]).map(|(x, y)| x - y).collect() };
        self.faces[n - 1]
            .iter()
            .enumerate()
            .map(|(fi, fv)| {
                let raw: Vec<Int> = match n {
                    1 => vec![Int::one()],
                    2 => {
                        let d = diff(fv[0], fv[1]);
                        vec![-d[1].clone(), d[0].clone()]
                    }
                    _ => {
                        let cyc = &self.polygons[fi];
                        let (u, v) = (diff(cyc[0], cyc[1]), diff(cyc[0], cyc[2]));
                        vec![
                            &u[1] * &v[2] - &u[2] * &v[1],
                            &u[2] * &v[0] - &u[0] * &v[2],
                            &u[0] * &v[1] - &u[1] * &v[0],
                        ]
                    }
                };
                let mut nu = primitive(&raw);
                let other = (0..sv.len()).find(|i| !fv.contains(i)).unwrap();
                let side: Int = nu.iter().zip(&diff(fv[0], other)).map(|(a, b)| a * b).sum();
                if side.is_negative() {
                    nu = nu.into_iter().map(|x| -x).collect();
                }
                let offset = dot_rat_int(&self.vertices[fv[0]], &nu);
                Facet { normal: nu, offset, vertices: fv.clone() }
            })
            .collect()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_dim
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    /// Vertices as lattice points, or `None` if some vertex is not integral.
    pub fn lattice_vertices(&self) -> Option<Vec<LatticePoint>> {
        self.vertices.iter().map(|v| to_int_point(v)).collect()
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(|v| v.iter().all(|c| c.is_integer()))
    }

    /// Facet inequalities; empty unless the polytope is full-dimensional.
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Faces of dimension `d` as sorted vertex-index sets.
    pub fn faces(&self, d: usize) -> &[Vec<usize>] {
        self.faces.get(d).map(|f| f.as_slice()).unwrap_or(&[])
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        if self.dim >= 1 {
            self.faces(1)
        } else {
            &[]
        }
    }

    /// Cyclic vertex order of the `i`-th 2-face.
    pub fn polygon_cycle(&self, i: usize) -> &[usize] {
        &self.polygons[i]
    }

    /// Lattice length of an edge given by its two vertex indices.
    pub fn edge_length(&self, e: &[usize]) -> Rat {
        let d = crate::arith::sub_rat(&self.vertices[e[1]], &self.vertices[e[0]]);
        crate::arith::lattice_length(&d)
    }

    /// Normalized volume of the `i`-th face of dimension `d`, measured in the
    /// lattice induced on its affine span. A vertex has volume 1.
    pub fn face_volume(&self, d: usize, i: usize) -> Rat {
        match d {
            0 => Rat::one(),
            1 => self.edge_length(&self.faces[1][i]),
            2 => {
                let cyc: Vec<RationalPoint> =
                    self.polygons[i].iter().map(|&j| self.vertices[j].clone()).collect();
                volume::polygon_lattice_area(&cyc)
            }
            3 => volume::solid_volume(self),
            _ => unreachable!(),
        }
    }

    /// Normalized volume of the polytope in the lattice of its own affine span.
    pub fn normalized_volume(&self) -> Rat {
        self.face_volume(self.dim, 0)
    }

    /// Normalized volume in the ambient lattice; zero if not full-dimensional.
    pub fn full_volume(&self) -> Rat {
        if self.is_full_dimensional() {
            self.normalized_volume()
        } else {
            Rat::zero()
        }
    }

    pub fn contains(&self, x: &[Rat]) -> bool {
        if self.is_full_dimensional() {
            return self.facets.iter().all(|f| dot_rat_int(x, &f.normal) >= f.offset);
        }
        let mut pts = self.vertices.clone();
        pts.push(x.to_vec());
        match Polytope::hull_of(&pts) {
            Ok(q) => q.dim == self.dim && q.vertices == self.vertices,
            Err(_) => false,
        }
    }

    pub fn scaled(&self, k: &Rat) -> Result<Polytope, GeomError> {
        let pts: Vec<RationalPoint> =
            self.vertices.iter().map(|v| v.iter().map(|c| c * k).collect()).collect();
        Polytope::hull_of(&pts)
    }

    pub fn translated(&self, t: &[Rat]) -> Result<Polytope, GeomError> {
        let pts: Vec<RationalPoint> = self.vertices.iter().map(|v| crate::arith::add_rat(v, t)).collect();
        Polytope::hull_of(&pts)
    }

    /// Image under `x -> M x + t` for an integer matrix `M`.
    pub fn affine_image(&self, m: &[Vec<Int>], t: &[Int]) -> Result<Polytope, GeomError> {
        let pts: Vec<RationalPoint> = self.vertices.iter().map(|v| apply_affine(m, t, v)).collect();
        Polytope::hull_of(&pts)
    }
}

pub fn apply_affine(m: &[Vec<Int>], t: &[Int], v: &[Rat]) -> RationalPoint {
    m.iter()
        .zip(t)
        .map(|(row, ti)| dot_rat_int(v, row) + rat_of(ti))
        .collect()
}

/// Normalized volume of a nonempty polytope or face, in its own affine lattice.
pub fn normalized_volume(p: &Polytope) -> Rat {
    p.normalized_volume()
}

/// Lattice points of a polytope in lexicographic order; `strict` keeps only
/// points satisfying every facet inequality strictly.
pub fn lattice_points(p: &Polytope, strict: bool) -> Vec<LatticePoint> {
    if strict && !p.is_full_dimensional() {
        return vec![];
    }
    let n = p.ambient_dim();
    let lo: Vec<Int> = (0..n)
        .map(|c| p.vertices.iter().map(|v| v[c].ceil().to_integer()).min().unwrap())
        .collect();
    let hi: Vec<Int> = (0..n)
        .map(|c| p.vertices.iter().map(|v| v[c].floor().to_integer()).max().unwrap())
        .collect();
    let mut out = Vec::new();
    if (0..n).any(|c| lo[c] > hi[c]) {
        return out;
    }
    let mut cur = lo.clone();
    loop {
        let x: RationalPoint = cur.iter().map(rat_of).collect();
        let inside = if p.is_full_dimensional() {
            p.facets.iter().all(|f| {
                let v = dot_rat_int(&x, &f.normal);
                if strict {
                    v > f.offset
                } else {
                    v >= f.offset
                }
            })
        } else {
            p.contains(&x)
        };
        if inside {
            out.push(cur.clone());
        }
        let mut c = n;
        loop {
            if c == 0 {
                return out;
            }
            c -= 1;
            if cur[c] < hi[c] {
                cur[c] += 1;
                cur[c + 1..n].clone_from_slice(&lo[c + 1..n]);
                break;
            }
        }
    }
}

/// Hull of the strict interior lattice points; `None` when there are none.
pub fn interior_hull(p: &Polytope) -> RationalPolytope {
    let pts = lattice_points(p, true);
    if pts.is_empty() {
        return None;
    }
    let rp: Vec<RationalPoint> = pts.iter().map(|q| q.iter().map(rat_of).collect()).collect();
    Polytope::hull_of(&rp).ok()
}

/// `{x : <nu_F, x> >= r a_F + 1}` over the facets of a full-dimensional `p`.
pub fn tightened_polytope(p: &Polytope, r: &Int) -> RationalPolytope {
    assert!(p.is_full_dimensional(), "tightening needs facet inequalities");
    let n = p.ambient_dim();
    let rr = rat_of(r);
    let rows: Vec<(Vec<Rat>, Rat)> = p
        .facets
        .iter()
        .map(|f| (f.normal.iter().map(rat_of).collect(), &rr * &f.offset + Rat::one()))
        .collect();
    let mut found: BTreeSet<RationalPoint> = BTreeSet::new();
    for subset in combinations(rows.len(), n) {
        let a: Vec<Vec<Rat>> = subset.iter().map(|&i| rows[i].0.clone()).collect();
        let b: Vec<Rat> = subset.iter().map(|&i| rows[i].1.clone()).collect();
        let Some(x) = solve_square(&a, &b) else { continue };
        if rows.iter().all(|(nu, off)| crate::arith::dot_rat(nu, &x) >= *off) {
            found.insert(x);
        }
    }
    if found.is_empty() {
        return None;
    }
    Polytope::hull_of(&found.into_iter().collect::<Vec<_>>()).ok()
}

pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Solves a square system by Gauss-Jordan elimination; `None` if singular.
pub(crate) fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(p, c);
        let piv = m[c][c].clone();
        for j in c..=n {
            m[c][j] = &m[c][j] / &piv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in c..=n {
                    let v = &m[c][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

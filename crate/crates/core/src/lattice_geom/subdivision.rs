//! Regular subdivisions from the lower hull of lifted points.

use super::{hull::affine_dim, GeomError, LatticePoint, Polytope, RationalPoint};
use crate::arith::{dot_rat_int, rat_of, Int, Rat};
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    /// Configuration indices whose lifted points lie on this lower face.
    pub marked: Vec<usize>,
    /// Affine support `h(x) = c0 + <c, x>` agreeing with the heights on `marked`.
    pub c0: Rat,
    pub c: Vec<Rat>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularSubdivision {
    pub configuration: Vec<LatticePoint>,
    pub lifting: Vec<Rat>,
    /// Maximal cells, sorted by their marked index sets.
    pub cells: Vec<Cell>,
}

impl RegularSubdivision {
    /// Hull of the marked points of a cell.
    pub fn cell_polytope(&self, i: usize) -> Polytope {
        let pts: Vec<RationalPoint> = self.cells[i]
            .marked
            .iter()
            .map(|&j| self.configuration[j].iter().map(rat_of).collect())
            .collect();
        Polytope::hull_of(&pts).expect("cells are nonempty")
    }
}

pub fn regular_subdivision(a: &[LatticePoint], u: &[Rat]) -> Result<RegularSubdivision, GeomError> {
    if a.is_empty() {
        return Err(GeomError::EmptyInput);
    }
    if a.len() != u.len() {
        return Err(GeomError::LengthMismatch(a.len(), u.len()));
    }
    let n = a[0].len();
    if a.iter().any(|p| p.len() != n) {
        return Err(GeomError::RaggedInput);
    }
    if n == 0 || n > 2 {
        return Err(GeomError::DimensionUnsupported(n));
    }
    let d = affine_dim(a);
    if d < n {
        return Err(GeomError::NotFullDimensional(d));
    }
    let lifted: Vec<RationalPoint> = a
        .iter()
        .zip(u)
        .map(|(p, h)| {
            let mut v: RationalPoint = p.iter().map(rat_of).collect();
            v.push(h.clone());
            v
        })
        .collect();
    let hull = Polytope::hull_of(&lifted)?;
    let mut cells = Vec::new();
    if hull.dim() == n {
        // Heights are affine: one cell containing everything.
        let marked: Vec<usize> = (0..a.len()).collect();
        let (c0, c) = affine_fit(a, u);
        cells.push(Cell { marked, c0, c });
    } else {
        for f in hull.facets() {
            let nz = rat_of(&f.normal[n]);
            if !nz.is_positive() {
                continue;
            }
            let marked: Vec<usize> =
                (0..a.len()).filter(|&i| dot_rat_int(&lifted[i], &f.normal) == f.offset).collect();
            let c0 = &f.offset / &nz;
            let c: Vec<Rat> = f.normal[..n].iter().map(|x| -rat_of(x) / &nz).collect();
            cells.push(Cell { marked, c0, c });
        }
    }
    cells.sort_by(|x, y| x.marked.cmp(&y.marked));
    Ok(RegularSubdivision { configuration: a.to_vec(), lifting: u.to_vec(), cells })
}

/// Affine function matching affine heights on a full-dimensional configuration.
fn affine_fit(a: &[LatticePoint], u: &[Rat]) -> (Rat, Vec<Rat>) {
    let n = a[0].len();
    // Greedily pick n+1 affinely independent points.
    let mut basis: Vec<usize> = vec![0];
    for i in 1..a.len() {
        let mut trial: Vec<LatticePoint> = basis.iter().map(|&j| a[j].clone()).collect();
        trial.push(a[i].clone());
        if affine_dim(&trial) == basis.len() {
            basis.push(i);
        }
        if basis.len() == n + 1 {
            break;
        }
    }
    let rows: Vec<Vec<Rat>> = basis
        .iter()
        .map(|&i| {
            let mut r = vec![Rat::one()];
            r.extend(a[i].iter().map(rat_of));
            r
        })
        .collect();
    let rhs: Vec<Rat> = basis.iter().map(|&i| u[i].clone()).collect();
    let sol = super::solve_square(&rows, &rhs).expect("affinely independent basis");
    (sol[0].clone(), sol[1..].to_vec())
}

/// Lattice length of the segment between two lattice points.
pub fn segment_length(p: &[Int], q: &[Int]) -> Int {
    let d: Vec<Int> = p.iter().zip(q).map(|(x, y)| x - y).collect();
    let g = crate::arith::gcd_all(&d);
    if g.is_zero() {
        Int::zero()
    } else {
        g
    }
}

//! Dense exact linear algebra over the rationals.

use crate::arith::{fmt_rat, rank_int, rat_of, Int, Rat};
use num_integer::Integer;
use num_traits::{One, Zero};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    cols: usize,
    rows: Vec<Vec<Rat>>,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<Rat>>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "matrix rows must be rectangular");
        RationalMatrix { cols, rows }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::new(
            rows.iter().map(|r| r.iter().map(|&x| Rat::from_integer(Int::from(x))).collect()).collect(),
            cols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols).map(|j| self.rows.iter().map(|r| r[j].clone()).collect()).collect();
        RationalMatrix { cols: self.rows.len(), rows }
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let rows = self.rows.iter().map(|r| cols.iter().map(|&j| r[j].clone()).collect()).collect();
        RationalMatrix { cols: cols.len(), rows }
    }

    /// `q^T M`.
    pub fn left_mul(&self, q: &[Rat]) -> Vec<Rat> {
        (0..self.cols)
            .map(|j| self.rows.iter().zip(q).map(|(r, qi)| &r[j] * qi).sum())
            .collect()
    }

    /// Rank by Bareiss elimination after clearing row denominators.
    pub fn rank(&self) -> usize {
        let int_rows: Vec<Vec<Int>> = self
            .rows
            .iter()
            .map(|r| {
                let l = r.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
                r.iter().map(|x| (x * rat_of(&l)).to_integer()).collect()
            })
            .collect();
        rank_int(&int_rows)
    }

    /// Reduced row echelon form: nonzero rows and their pivot columns.
    pub fn rref(&self) -> (Vec<Vec<Rat>>, Vec<usize>) {
        let mut m = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(p, r);
            let inv = Rat::one() / &m[r][c];
            for x in m[r].iter_mut() {
                *x *= &inv;
            }
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..self.cols {
                        let v = &m[r][j] * &f;
                        m[i][j] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
            if r == m.len() {
                break;
            }
        }
        m.truncate(r);
        (m, pivots)
    }

    /// Right kernel basis, one vector per free column, read off the RREF.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (rref, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.cols];
                v[f] = Rat::one();
                for (row, &pc) in rref.iter().zip(&pivots) {
                    v[pc] = -row[f].clone();
                }
                v
            })
            .collect()
    }

    /// Some `q` with `q^T M = target`, free coordinates set to zero.
    pub fn solve_left(&self, target: &[Rat]) -> Option<Vec<Rat>> {
        let t = self.transpose();
        let mut aug: Vec<Vec<Rat>> = t
            .rows
            .iter()
            .zip(target)
            .map(|(r, b)| {
                let mut r = r.clone();
                r.push(b.clone());
                r
            })
            .collect();
        let n = self.rows.len();
        let full = RationalMatrix::new(std::mem::take(&mut aug), n + 1);
        let (rref, pivots) = full.rref();
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut q = vec![Rat::zero(); n];
        for (row, &pc) in rref.iter().zip(&pivots) {
            q[pc] = row[n].clone();
        }
        Some(q)
    }

    /// Tab-separated rows of exact rationals.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(fmt_rat).collect();
            s.push_str(&cells.join("\t"));
            s.push('\n');
        }
        s
    }
}

/// Rank and a reduced-echelon kernel basis.
pub fn rank_and_kernel(m: &RationalMatrix) -> (usize, Vec<Vec<Rat>>) {
    (m.rank(), m.kernel())
}

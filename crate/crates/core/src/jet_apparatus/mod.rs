//! Jet matrices of point configurations and the linear algebra around them.
//!
//! For `A = {r_0, ..., r_m}` in `Z^n`, let `v_0` be the all-ones row and
//! `v_j` the row of `j`-th coordinates. The matrix `A^(k)` has one row
//! `v_0^{a_0} * ... * v_n^{a_n}` (coordinatewise products) for every
//! multi-index with `a_0 + ... + a_n = k`, ordered lexicographically with
//! `0 > 1 > ... > n`. Its rowspan is the space of evaluation vectors
//! `(Q(r_0), ..., Q(r_m))` of polynomials `Q` of degree at most `k`.

mod linalg;

pub use linalg::{rank_and_kernel, RationalMatrix};

use crate::arith::{binom, rat_json, Int, Rat};
use crate::lattice_geom::LatticePoint;
use crate::poly::Polynomial;
use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// Default bound on the number of columns for cocircuit enumeration.
pub const DEFAULT_CAP_COLUMNS: usize = 18;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum JetError {
    #[error("cocircuit enumeration needs {0} columns, above the cap")]
    CapExceeded(usize),
    #[error("configuration is empty")]
    EmptyConfiguration,
    #[error("points have inconsistent dimensions")]
    RaggedInput,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetMatrix {
    pub config: Vec<LatticePoint>,
    pub k: u32,
    pub matrix: RationalMatrix,
    /// Multi-indices `(a_0, a_1, ..., a_n)` labelling the rows.
    pub row_index: Vec<Vec<u32>>,
}

/// Minimal-support nonzero vector of the rowspan, with a polynomial realizing it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CocircuitVector {
    pub support: Vec<usize>,
    #[serde(serialize_with = "crate::arith::ser_rat_vec")]
    pub vector: Vec<Rat>,
    pub witness: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TorusDisjointness {
    pub disjoint: bool,
    /// Index `i` with `e_i` in the rowspan.
    pub index: Option<usize>,
    /// Polynomial of degree at most `k` vanishing on every point but `r_i`.
    pub witness: Option<Polynomial>,
}

fn check_config(a: &[LatticePoint]) -> Result<usize, JetError> {
    let n = a.first().ok_or(JetError::EmptyConfiguration)?.len();
    if a.iter().any(|p| p.len() != n) {
        return Err(JetError::RaggedInput);
    }
    Ok(n)
}

/// Exponent vectors of total degree `k` in `vars` variables, lexicographically descending.
pub fn multi_indices(vars: usize, k: u32) -> Vec<Vec<u32>> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for a in (0..=left).rev() {
            cur[pos] = a;
            rec(pos + 1, left - a, cur, out);
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0; vars];
    rec(0, k, &mut cur, &mut out);
    out
}

#[allow(non_snake_case)]
pub fn build_Ak(a: &[LatticePoint], k: u32) -> Result<JetMatrix, JetError> {
    let n = check_config(a)?;
    let row_index = multi_indices(n + 1, k);
    let rows: Vec<Vec<Rat>> = row_index
        .iter()
        .map(|alpha| {
            a.iter()
                .map(|r| {
                    let v = r
                        .iter()
                        .zip(&alpha[1..])
                        .fold(Int::one(), |acc, (x, &e)| acc * num_traits::pow(x.clone(), e as usize));
                    Rat::from_integer(v)
                })
                .collect()
        })
        .collect();
    Ok(JetMatrix { config: a.to_vec(), k, matrix: RationalMatrix::new(rows, a.len()), row_index })
}

/// Dimension of the affine span of the configuration.
pub fn affine_span_dim(a: &[LatticePoint]) -> usize {
    if a.len() < 2 {
        return 0;
    }
    let diffs: Vec<Vec<Int>> =
        a[1..].iter().map(|p| p.iter().zip(&a[0]).map(|(x, y)| x - y).collect()).collect();
    crate::arith::rank_int(&diffs)
}

impl JetMatrix {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Polynomial `sum_a q_a x^{a_1..a_n}` from coefficients indexed like the rows.
    pub fn polynomial(&self, q: &[Rat]) -> Polynomial {
        let n = self.row_index.first().map_or(0, |a| a.len() - 1);
        Polynomial::from_terms(n, self.row_index.iter().zip(q).map(|(a, c)| (a[1..].to_vec(), c.clone())))
    }

    pub fn to_tsv(&self) -> String {
        self.matrix.to_tsv()
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<Value>> =
            self.matrix.rows().iter().map(|r| r.iter().map(rat_json).collect()).collect();
        json!({"rows": rows, "row_index": self.row_index})
    }
}

pub fn is_generically_k_spanned(a: &[LatticePoint], k: u32) -> Result<bool, JetError> {
    let m = build_Ak(a, k)?;
    let n = affine_span_dim(a) as u64;
    Ok(Int::from(m.rank()) == binom(n + k as u64, k as u64))
}

/// `m + n - rank(A^(k))` with `n` the affine span dimension; may be negative.
pub fn expected_dim(a: &[LatticePoint], k: u32) -> Result<i64, JetError> {
    let m = build_Ak(a, k)?;
    Ok(a.len() as i64 - 1 + affine_span_dim(a) as i64 - m.rank() as i64)
}

pub fn torus_disjoint(a: &[LatticePoint], k: u32) -> Result<TorusDisjointness, JetError> {
    let m = build_Ak(a, k)?;
    for i in 0..a.len() {
        let mut e = vec![Rat::zero(); a.len()];
        e[i] = Rat::one();
        if let Some(q) = m.matrix.solve_left(&e) {
            return Ok(TorusDisjointness { disjoint: true, index: Some(i), witness: Some(m.polynomial(&q)) });
        }
    }
    Ok(TorusDisjointness { disjoint: false, index: None, witness: None })
}

/// All minimal-support nonzero rowspan vectors, up to scaling, sorted by support.
///
/// Each one vanishes exactly on a hyperplane (corank-one flat) of the column
/// matroid; hyperplanes are found as closures of independent column sets of
/// size `rank - 1`.
pub fn cocircuits(m: &JetMatrix, cap: usize) -> Result<Vec<CocircuitVector>, JetError> {
    let cols = m.matrix.ncols();
    if cols > cap {
        return Err(JetError::CapExceeded(cols));
    }
    let (basis, _) = m.matrix.rref();
    let rho = basis.len();
    if rho == 0 {
        return Ok(vec![]);
    }
    let r = RationalMatrix::new(basis, cols);
    let mut found: BTreeMap<Vec<usize>, Vec<Rat>> = BTreeMap::new();
    let mut zero_sets: Vec<Vec<bool>> = Vec::new();
    for s in crate::lattice_geom::combinations(cols, rho - 1) {
        if zero_sets.iter().any(|z| s.iter().all(|&j| z[j])) {
            continue;
        }
        let sub = r.select_columns(&s).transpose();
        let left = if s.is_empty() { vec![vec![Rat::one()]] } else { sub.kernel() };
        if left.len() != 1 {
            continue;
        }
        let mut lambda = r.left_mul(&left[0]);
        let lead = lambda.iter().find(|x| !x.is_zero()).cloned().expect("nonzero combination of basis rows");
        for x in lambda.iter_mut() {
            *x /= &lead;
        }
        let support: Vec<usize> = (0..cols).filter(|&j| !lambda[j].is_zero()).collect();
        zero_sets.push(lambda.iter().map(|x| x.is_zero()).collect());
        found.entry(support).or_insert(lambda);
    }
    Ok(found
        .into_iter()
        .map(|(support, vector)| {
            let q = m.matrix.solve_left(&vector).expect("vector lies in the rowspan");
            CocircuitVector { support, vector, witness: m.polynomial(&q) }
        })
        .collect())
}

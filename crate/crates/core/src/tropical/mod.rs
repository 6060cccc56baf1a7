//! Tropical forms, Euler derivatives and membership in the tropicalized k-th dual.
//!
//! Evaluation uses the min convention: `p_{A,u}(b) = min_i (u_i + <b, r_i>)`.
//! A point `b` certifies `u` when, for every minimal-support vector of the
//! rowspan of `A^(k)`, the minimum over its support is attained at least twice.

mod curve;
pub mod fm;

pub use curve::{plane_curve, CurveEdge, CurveRay, PlaneTropicalCurve};

use crate::arith::{dot_rat_int, Rat};
use crate::jet_apparatus::{build_Ak, cocircuits, JetError, DEFAULT_CAP_COLUMNS};
use crate::lattice_geom::{GeomError, LatticePoint};
use crate::poly::Polynomial;
use fm::{feasible_point, Constraint};
use num_traits::Zero;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TropError {
    #[error("point has dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{points} points but {weights} weights")]
    LengthMismatch { points: usize, weights: usize },
    #[error("polynomial has degree {degree}, above k = {k}")]
    DegreeTooHigh { degree: u32, k: u32 },
    #[error("polynomial has {got} variables, expected {expected}")]
    VariableMismatch { expected: usize, got: usize },
    #[error("zero polynomial has no initial form")]
    ZeroPolynomial,
    #[error("plane curves need points in the plane, got dimension {0}")]
    NotPlanar(usize),
    #[error(transparent)]
    Jet(#[from] JetError),
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalForm {
    pub config: Vec<LatticePoint>,
    pub u: Vec<Rat>,
}

impl TropicalForm {
    pub fn new(config: Vec<LatticePoint>, u: Vec<Rat>) -> Result<Self, TropError> {
        if config.len() != u.len() {
            return Err(TropError::LengthMismatch { points: config.len(), weights: u.len() });
        }
        if config.is_empty() {
            return Err(TropError::Jet(JetError::EmptyConfiguration));
        }
        let n = config[0].len();
        if config.iter().any(|p| p.len() != n) {
            return Err(TropError::Jet(JetError::RaggedInput));
        }
        Ok(TropicalForm { config, u })
    }

    pub fn dim(&self) -> usize {
        self.config[0].len()
    }

    fn term(&self, i: usize, b: &[Rat]) -> Rat {
        &self.u[i] + dot_rat_int(b, &self.config[i])
    }
}

/// Minimum value and every index attaining it.
pub fn trop_eval(t: &TropicalForm, b: &[Rat]) -> Result<(Rat, Vec<usize>), TropError> {
    if b.len() != t.dim() {
        return Err(TropError::DimensionMismatch { expected: t.dim(), got: b.len() });
    }
    let vals: Vec<Rat> = (0..t.config.len()).map(|i| t.term(i, b)).collect();
    let min = vals.iter().min().cloned().expect("configuration is nonempty");
    let arg = (0..vals.len()).filter(|&i| vals[i] == min).collect();
    Ok((min, arg))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerDerivative {
    /// Indices `i` with `Q(r_i) != 0`.
    pub support: Vec<usize>,
    pub q: Polynomial,
}

impl EulerDerivative {
    /// The tropical form restricted to the support.
    pub fn form(&self, parent: &TropicalForm) -> Option<TropicalForm> {
        if self.support.is_empty() {
            return None;
        }
        Some(TropicalForm {
            config: self.support.iter().map(|&i| parent.config[i].clone()).collect(),
            u: self.support.iter().map(|&i| parent.u[i].clone()).collect(),
        })
    }
}

pub fn euler_derivative(t: &TropicalForm, q: &Polynomial, k: u32) -> Result<EulerDerivative, TropError> {
    if q.nvars() != t.dim() {
        return Err(TropError::VariableMismatch { expected: t.dim(), got: q.nvars() });
    }
    if let Some(d) = q.degree().filter(|&d| d > k) {
        return Err(TropError::DegreeTooHigh { degree: d, k });
    }
    let support = (0..t.config.len()).filter(|&i| !q.eval_int(&t.config[i]).is_zero()).collect();
    Ok(EulerDerivative { support, q: q.clone() })
}

/// Bounds for the membership search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub columns: usize,
    pub branches: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { columns: DEFAULT_CAP_COLUMNS, branches: 100_000 }
    }
}

fn ties(t: &TropicalForm, support: &[usize], b: &[Rat]) -> bool {
    let vals: Vec<Rat> = support.iter().map(|&i| t.term(i, b)).collect();
    match vals.iter().min() {
        Some(m) => vals.iter().filter(|v| *v == m).count() >= 2,
        None => false,
    }
}

fn supports(a: &[LatticePoint], k: u32, caps: &Caps) -> Result<Vec<Vec<usize>>, TropError> {
    let m = build_Ak(a, k)?;
    let mut s: Vec<Vec<usize>> = cocircuits(&m, caps.columns)?.into_iter().map(|c| c.support).collect();
    s.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x.cmp(y)));
    Ok(s)
}

/// True when the minimum over every cocircuit support is attained twice at `b`.
pub fn verify_witness(a: &[LatticePoint], k: u32, u: &[Rat], b: &[Rat], caps: &Caps) -> Result<bool, TropError> {
    let t = TropicalForm::new(a.to_vec(), u.to_vec())?;
    if b.len() != t.dim() {
        return Err(TropError::DimensionMismatch { expected: t.dim(), got: b.len() });
    }
    Ok(supports(a, k, caps)?.iter().all(|s| ties(&t, s, b)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Verdict {
    InTrop,
    NotInTrop,
    Inconclusive { cap: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TieChoice {
    pub support: Vec<usize>,
    pub pair: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeadEnd {
    pub assignment: Vec<TieChoice>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureTrace {
    pub dead_ends: Vec<DeadEnd>,
    /// Total number of dead ends; only the first few are kept in `dead_ends`.
    pub total: usize,
    pub nodes: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipCertificate {
    pub verdict: Verdict,
    #[serde(serialize_with = "ser_opt_point")]
    pub witness_b: Option<Vec<Rat>>,
    pub tie_assignment: Vec<TieChoice>,
    pub failure_trace: Option<FailureTrace>,
    pub cocircuit_count: usize,
}

fn ser_opt_point<S: serde::Serializer>(v: &Option<Vec<Rat>>, s: S) -> Result<S::Ok, S::Error> {
    let vals: Option<Vec<serde_json::Value>> = v.as_ref().map(|p| p.iter().map(crate::arith::rat_json).collect());
    serde::Serialize::serialize(&vals, s)
}

const TRACE_KEEP: usize = 64;

struct Search<'a> {
    t: &'a TropicalForm,
    supports: &'a [Vec<usize>],
    nodes: usize,
    cap: usize,
    dead: Vec<DeadEnd>,
    dead_total: usize,
}

impl Search<'_> {
    fn dead_end(&mut self, path: &[TieChoice], reason: String) {
        self.dead_total += 1;
        if self.dead.len() < TRACE_KEEP {
            self.dead.push(DeadEnd { assignment: path.to_vec(), reason });
        }
    }

    fn pair_constraints(&self, s: &[usize], i: usize, j: usize) -> Vec<Constraint> {
        let rat_pt = |x: usize| -> Vec<Rat> { self.t.config[x].iter().map(crate::arith::rat_of).collect() };
        let (ri, rj) = (rat_pt(i), rat_pt(j));
        let mut out = vec![Constraint {
            a: crate::arith::sub_rat(&ri, &rj),
            c: &self.t.u[j] - &self.t.u[i],
            eq: true,
        }];
        for &l in s {
            if l != i && l != j {
                out.push(Constraint {
                    a: crate::arith::sub_rat(&ri, &rat_pt(l)),
                    c: &self.t.u[l] - &self.t.u[i],
                    eq: false,
                });
            }
        }
        out
    }

    /// Depth-first search; `Err(())` when the node cap trips.
    fn dfs(&mut self, cons: &mut Vec<Constraint>, path: &mut Vec<TieChoice>) -> Result<Option<Vec<Rat>>, ()> {
        self.nodes += 1;
        if self.nodes > self.cap {
            return Err(());
        }
        let Some(b) = feasible_point(cons, self.t.dim()) else {
            self.dead_end(path, "tie constraints are infeasible".into());
            return Ok(None);
        };
        let Some(s) = self.supports.iter().find(|s| !ties(self.t, s, &b)) else {
            return Ok(Some(b));
        };
        for x in 0..s.len() {
            for y in x + 1..s.len() {
                let (i, j) = (s[x], s[y]);
                let added = self.pair_constraints(s, i, j);
                let len = cons.len();
                cons.extend(added);
                path.push(TieChoice { support: s.clone(), pair: [i, j] });
                let found = self.dfs(cons, path)?;
                path.pop();
                cons.truncate(len);
                if found.is_some() {
                    return Ok(found);
                }
            }
        }
        if s.len() < 2 {
            self.dead_end(path, format!("cocircuit {s:?} has a single element"));
        }
        Ok(None)
    }
}

fn assignment_at(t: &TropicalForm, supports: &[Vec<usize>], b: &[Rat]) -> Vec<TieChoice> {
    supports
        .iter()
        .map(|s| {
            let vals: Vec<Rat> = s.iter().map(|&i| t.term(i, b)).collect();
            let m = vals.iter().min().expect("supports are nonempty");
            let arg: Vec<usize> = s.iter().zip(&vals).filter(|(_, v)| *v == m).map(|(&i, _)| i).collect();
            TieChoice { support: s.clone(), pair: [arg[0], arg[1]] }
        })
        .collect()
}

/// Decides whether `u` lies in the tropicalization of the k-th dual, with a certificate.
pub fn membership(a: &[LatticePoint], k: u32, u: &[Rat], caps: &Caps) -> Result<MembershipCertificate, TropError> {
    let t = TropicalForm::new(a.to_vec(), u.to_vec())?;
    let supports = match supports(a, k, caps) {
        Ok(s) => s,
        Err(TropError::Jet(JetError::CapExceeded(c))) => {
            return Ok(MembershipCertificate {
                verdict: Verdict::Inconclusive { cap: format!("columns: {c} > {}", caps.columns) },
                witness_b: None,
                tie_assignment: vec![],
                failure_trace: None,
                cocircuit_count: 0,
            })
        }
        Err(e) => return Err(e),
    };
    let mut search = Search { t: &t, supports: &supports, nodes: 0, cap: caps.branches, dead: vec![], dead_total: 0 };
    let result = search.dfs(&mut vec![], &mut vec![]);
    let cocircuit_count = supports.len();
    Ok(match result {
        Ok(Some(b)) => {
            assert!(supports.iter().all(|s| ties(&t, s, &b)), "search returned an unverified witness");
            MembershipCertificate {
                verdict: Verdict::InTrop,
                tie_assignment: assignment_at(&t, &supports, &b),
                witness_b: Some(b),
                failure_trace: None,
                cocircuit_count,
            }
        }
        Ok(None) => MembershipCertificate {
            verdict: Verdict::NotInTrop,
            witness_b: None,
            tie_assignment: vec![],
            failure_trace: Some(FailureTrace { dead_ends: search.dead, total: search.dead_total, nodes: search.nodes }),
            cocircuit_count,
        },
        Err(()) => MembershipCertificate {
            verdict: Verdict::Inconclusive { cap: format!("branches: {}", caps.branches) },
            witness_b: None,
            tie_assignment: vec![],
            failure_trace: None,
            cocircuit_count,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InitialForm {
    pub form: Polynomial,
    pub is_monomial: bool,
    #[serde(serialize_with = "crate::arith::ser_rat")]
    pub weight: Rat,
}

/// Sum of the terms of `f` whose exponent minimizes `<alpha, u>`; variable `i` pairs with `u[i]`.
pub fn initial_form(f: &Polynomial, u: &[Rat]) -> Result<InitialForm, TropError> {
    if f.is_zero() {
        return Err(TropError::ZeroPolynomial);
    }
    if f.nvars() != u.len() {
        return Err(TropError::VariableMismatch { expected: u.len(), got: f.nvars() });
    }
    let weight = |e: &[u32]| -> Rat { e.iter().zip(u).map(|(&a, w)| w * Rat::from_integer(a.into())).sum() };
    let min = f.terms().map(|(e, _)| weight(e)).min().expect("nonzero polynomial has terms");
    let form = Polynomial::from_terms(
        f.nvars(),
        f.terms().filter(|(e, _)| weight(e) == min).map(|(e, c)| (e.clone(), c.clone())),
    );
    Ok(InitialForm { is_monomial: form.len() == 1, form, weight: min })
}

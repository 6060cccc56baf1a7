//! Degrees of duals and higher duals of smooth toric surfaces, threefolds and scrolls.
//!
//! Reported degrees are the products `deg(gamma_k) * deg X^(k)`; they are the
//! actual degrees of the k-th dual whenever the k-th Gauss map is birational,
//! which holds for example when the line bundle is (k+1)-jet ample.

use crate::arith::{binom, rat_of, to_integer_exact, Int, Rat};
use crate::lattice_geom::Polytope;
use crate::polytope_invariants::{
    adjoint_invariants, cayley_scroll_polytope, detect_exceptional, invariant_vector, is_k_regular,
    is_smooth, ExceptionalTag, InvariantError, InvariantVector,
};
use num_traits::{Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DualError {
    #[error("polytope is not smooth")]
    NotSmooth,
    #[error("polytope is {0}-dimensional, expected 3")]
    NotDim3(usize),
    #[error("polytope is not 2-regular")]
    Not2Regular,
    #[error("polytope is not {0}-regular")]
    NotKRegular(u64),
    #[error("formula produced a non-integral value {0}")]
    NonIntegralResult(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("k = {k} is outside 1..={max}")]
    KOutOfRange { k: u64, max: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("both delta_1 and delta_2 vanish")]
    BothZero,
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum Outcome {
    Degree(#[serde(serialize_with = "crate::arith::ser_int")] Int),
    Defective,
    EmptyDual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Branch {
    Formula,
    KSimplex2,
    KSimplex3,
    DoubleCayley,
    ScrollClosedForm,
    DeltaSequence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub outcome: Outcome,
    pub branch: Branch,
    #[serde(serialize_with = "ser_map")]
    pub intermediates: BTreeMap<String, Rat>,
}

fn ser_map<S: serde::Serializer>(m: &BTreeMap<String, Rat>, s: S) -> Result<S::Ok, S::Error> {
    let v: BTreeMap<&String, serde_json::Value> =
        m.iter().map(|(k, x)| (k, crate::arith::rat_json(x))).collect();
    serde::Serialize::serialize(&v, s)
}

impl DegreeReport {
    pub fn degree(&self) -> Option<&Int> {
        match &self.outcome {
            Outcome::Degree(d) => Some(d),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScrollProfile {
    pub d: Vec<u64>,
    pub k: u64,
    pub i_k: usize,
    pub m: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScrollResult {
    pub dim: i64,
    pub degree: Option<DegreeReport>,
    pub profile: ScrollProfile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaSequence {
    #[serde(serialize_with = "crate::arith::ser_int")]
    pub delta1: Int,
    #[serde(serialize_with = "crate::arith::ser_int")]
    pub delta2: Int,
    pub codim: u8,
    #[serde(serialize_with = "crate::arith::ser_int")]
    pub degree: Int,
}

fn r(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

fn integral(x: Rat) -> Result<Int, DualError> {
    to_integer_exact(&x).ok_or_else(|| DualError::NonIntegralResult(crate::arith::fmt_rat(&x)))
}

fn record(inv: &InvariantVector) -> BTreeMap<String, Rat> {
    BTreeMap::from([
        ("Vol".to_string(), rat_of(&inv.vol)),
        ("F".to_string(), rat_of(&inv.facet_sum)),
        ("E".to_string(), rat_of(&inv.edge_sum)),
        ("V".to_string(), r(inv.vertex_count as i64)),
    ])
}

fn require_smooth(p: &Polytope) -> Result<(), DualError> {
    if !p.is_full_dimensional() || !p.is_lattice() || !is_smooth(p) {
        return Err(DualError::NotSmooth);
    }
    Ok(())
}

fn require_smooth3(p: &Polytope) -> Result<InvariantVector, DualError> {
    require_smooth(p)?;
    if p.dim() != 3 {
        return Err(DualError::NotDim3(p.dim()));
    }
    Ok(invariant_vector(p)?)
}

/// `sum_F (-1)^codim(F) (dim F + 1) Vol(F)` over all nonempty faces.
pub fn dual_degree_smooth(p: &Polytope) -> Result<Int, DualError> {
    require_smooth(p)?;
    let n = p.dim();
    if n > 3 {
        return Err(DualError::PreconditionViolated(format!("dimension {n} exceeds 3")));
    }
    let mut total = rat_of(&Int::from(n + 1)) * p.normalized_volume();
    for d in 0..n {
        let sign = if (n - d).is_multiple_of(2) { 1 } else { -1 };
        let vols: Rat = (0..p.faces(d).len()).map(|i| p.face_volume(d, i)).sum();
        total += r(sign * (d as i64 + 1)) * vols;
    }
    integral(total)
}

pub fn dual_degree_sequence_threefold(p: &Polytope) -> Result<DeltaSequence, DualError> {
    let inv = require_smooth3(p)?;
    let delta1 = dual_degree_smooth(p)?;
    let v = Int::from(inv.vertex_count);
    let delta2 = Int::from(-2) * &inv.vol + Int::from(3) * &inv.facet_sum - Int::from(3) * &inv.edge_sum
        + Int::from(2) * v;
    if !delta1.is_zero() {
        return Ok(DeltaSequence { degree: delta1.clone(), delta1, delta2, codim: 1 });
    }
    if delta2.is_zero() {
        return Err(DualError::BothZero);
    }
    Ok(DeltaSequence { degree: delta2.clone(), delta1, delta2, codim: 2 })
}

/// Degree of the k-th dual of the toric surface of a smooth k-regular polygon.
pub fn surface_kdual_degree(p: &Polytope, k: u64) -> Result<DegreeReport, DualError> {
    require_smooth(p)?;
    if p.dim() != 2 {
        return Err(DualError::PreconditionViolated(format!("expected a polygon, got dimension {}", p.dim())));
    }
    if k == 0 {
        return Err(DualError::BadParameters("k must be positive".into()));
    }
    if !is_k_regular(p, k) {
        return Err(DualError::NotKRegular(k));
    }
    let inv = invariant_vector(p)?;
    let mut im = record(&inv);
    im.insert("k".into(), r(k as i64));
    let kk = r(k as i64);
    let lens_k = p.edges().iter().all(|e| p.edge_length(e) == kk);
    if inv.vertex_count == 3 && lens_k {
        return Ok(DegreeReport { outcome: Outcome::Defective, branch: Branch::Formula, intermediates: im });
    }
    let b = rat_of(&binom(k + 3, 4));
    let v = r(inv.vertex_count as i64);
    let inner = r(3) * rat_of(&inv.vol) - r(2) * &kk * rat_of(&inv.edge_sum)
        - (&kk * &kk - r(4)) / r(3) * v
        + r(4) * (&kk * &kk - r(1));
    let d = integral(b * inner)?;
    Ok(DegreeReport { outcome: Outcome::Degree(d), branch: Branch::Formula, intermediates: im })
}

fn threefold_preconditions(p: &Polytope) -> Result<(InvariantVector, ExceptionalTag), DualError> {
    let inv = require_smooth3(p)?;
    if !is_k_regular(p, 2) {
        return Err(DualError::Not2Regular);
    }
    Ok((inv, detect_exceptional(p)?))
}

fn exceptional_report(tag: ExceptionalTag, mut im: BTreeMap<String, Rat>) -> Option<DegreeReport> {
    match tag {
        ExceptionalTag::KSimplex { k: 2 } => {
            Some(DegreeReport { outcome: Outcome::Defective, branch: Branch::KSimplex2, intermediates: im })
        }
        ExceptionalTag::KSimplex { k: 3 } => {
            Some(DegreeReport { outcome: Outcome::Degree(Int::from(120)), branch: Branch::KSimplex3, intermediates: im })
        }
        ExceptionalTag::DoubleCayleyScroll { a, b, c } => {
            let (_, d2) = abc_closed_forms(a, b, c);
            for (name, x) in [("a", a), ("b", b), ("c", c)] {
                im.insert(name.into(), r(x as i64));
            }
            Some(DegreeReport { outcome: Outcome::Degree(d2), branch: Branch::DoubleCayley, intermediates: im })
        }
        _ => None,
    }
}

/// Second dual degree of a smooth 2-regular lattice 3-polytope.
pub fn threefold_2dual_degree(p: &Polytope) -> Result<DegreeReport, DualError> {
    let (inv, tag) = threefold_preconditions(p)?;
    let mut im = record(&inv);
    if let Some(rep) = exceptional_report(tag, im.clone()) {
        return Ok(rep);
    }
    let adj = adjoint_invariants(p, 1)?;
    im.insert("vol_adj".into(), adj.vol_adj.clone());
    im.insert("F1".into(), adj.facet_adj.clone());
    im.insert("E1".into(), rat_of(&adj.edge_adj));
    let total = r(62) * &im["Vol"] - r(57) * &im["F"] + r(28) * &im["E"] - r(8) * &im["V"]
        + r(58) * &im["vol_adj"]
        + r(51) * &im["F1"]
        + r(20) * &im["E1"];
    let d = integral(total)?;
    Ok(DegreeReport { outcome: Outcome::Degree(d), branch: Branch::Formula, intermediates: im })
}

/// The second dual degree rewritten through the adjoint data at levels 2 and 3.
pub fn threefold_2dual_via_corollary(p: &Polytope, variant: u8) -> Result<DegreeReport, DualError> {
    if variant != 1 && variant != 2 {
        return Err(DualError::BadParameters(format!("variant must be 1 or 2, got {variant}")));
    }
    let (inv, tag) = threefold_preconditions(p)?;
    if exceptional_report(tag, BTreeMap::new()).is_some() {
        return Err(DualError::PreconditionViolated(format!("exceptional polytope {tag:?}")));
    }
    let mut im = record(&inv);
    let a2 = adjoint_invariants(p, 2)?;
    im.insert("vol_adj2".into(), a2.vol_adj.clone());
    let (vol, f, e, v) = (im["Vol"].clone(), im["F"].clone(), im["E"].clone(), im["V"].clone());
    let total = if variant == 1 {
        im.insert("F2".into(), a2.facet_adj.clone());
        im.insert("E2".into(), rat_of(&a2.edge_adj));
        r(22) * &a2.vol_adj + r(15) * &a2.facet_adj + r(20) * rat_of(&a2.edge_adj) - r(56) * &vol
            + r(24) * &f
            + r(8) * &e
            - r(8) * &v
    } else {
        let a3 = adjoint_invariants(p, 3)?;
        im.insert("vol_adj3".into(), a3.vol_adj.clone());
        r(10) * &a3.vol_adj - r(3) * &a2.vol_adj - r(126) * &vol + r(54) * &f + r(48) * &e - r(8) * &v - r(480)
    };
    let d = integral(total)?;
    Ok(DegreeReport { outcome: Outcome::Degree(d), branch: Branch::Formula, intermediates: im })
}

/// The index `i` with `d_i + 1 <= k <= d_{i+1}`, where `d_0 = 0`.
fn scroll_index(d: &[u64], k: u64) -> usize {
    let mut prev = 0;
    for (i, &di) in d.iter().enumerate() {
        if prev < k && k <= di {
            return i;
        }
        prev = di;
    }
    unreachable!("k was range-checked against d_n")
}

/// Dimension and, when `d_1 >= k`, degree of the k-th dual of the rational
/// normal scroll `S(d_1, ..., d_n)`.
pub fn scroll_kdual(d: &[u64], k: u64) -> Result<ScrollResult, DualError> {
    if d.is_empty() || d[0] == 0 || d.windows(2).any(|w| w[0] > w[1]) {
        return Err(DualError::BadParameters("need positive nondecreasing d".into()));
    }
    let n = d.len() as i64;
    let dn = *d.last().unwrap();
    if k < 1 || k > dn {
        return Err(DualError::KOutOfRange { k, max: dn });
    }
    let i_k = scroll_index(d, k);
    let m: u64 = d.iter().map(|x| x + 1).sum::<u64>() - 1;
    let ki = k as i64;
    let excess = |upto: usize| -> i64 { d[..upto].iter().map(|&dj| ki - 1 - dj as i64).sum() };
    let dim = if (i_k as i64) <= n - 2 {
        m as i64 + 1 - ki * n + excess(i_k)
    } else {
        m as i64 - ki * n + excess(d.len() - 1)
    };
    let profile = ScrollProfile { d: d.to_vec(), k, i_k, m };
    if i_k != 0 {
        return Ok(ScrollResult { dim, degree: None, profile });
    }
    let total: u64 = d.iter().sum();
    let degree = Int::from(ki * total as i64 - ki * (ki - 1) * n);
    let mut im = BTreeMap::from([
        ("d".to_string(), r(total as i64)),
        ("n".to_string(), r(n)),
        ("k".to_string(), r(ki)),
    ]);
    if (2..=3).contains(&d.len()) {
        let p = cayley_scroll_polytope(d)?;
        let vol = p.normalized_volume();
        let v = r(p.vertices().len() as i64);
        let alt = r(ki) * &vol - rat_of(&binom(k, 2)) * &v;
        if alt != rat_of(&degree) {
            return Err(DualError::Inconsistent(format!(
                "scroll degree {degree} differs from the Cayley form {}",
                crate::arith::fmt_rat(&alt)
            )));
        }
        im.insert("Vol".into(), vol);
        im.insert("V".into(), v);
    }
    let rep = DegreeReport { outcome: Outcome::Degree(degree), branch: Branch::ScrollClosedForm, intermediates: im };
    Ok(ScrollResult { dim, degree: Some(rep), profile })
}

fn abc_closed_forms(a: u64, b: u64, c: u64) -> (Int, Int) {
    let s = Int::from(a) + Int::from(b) + Int::from(c);
    (
        Int::from(6) * (Int::from(2) * &s - Int::from(1)),
        Int::from(6) * (Int::from(8) * &s - Int::from(7)),
    )
}

/// Dual and second-dual degrees of `P(O(a) + O(b) + O(c))` over the
/// projective line, embedded by twice the tautological bundle.
pub fn abc_bundle_degrees(a: u64, b: u64, c: u64) -> Result<(Int, Int), DualError> {
    if a == 0 || b == 0 || c == 0 {
        return Err(DualError::BadParameters("a, b, c must be positive".into()));
    }
    Ok(abc_closed_forms(a, b, c))
}

/// True when the degree is strictly positive.
pub fn is_positive(rep: &DegreeReport) -> bool {
    rep.degree().is_some_and(|d| d.is_positive())
}

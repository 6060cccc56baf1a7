//! Exact feasibility of small linear systems by Fourier-Motzkin elimination.

use crate::arith::{dot_rat, Rat};
use crate::jet_apparatus::RationalMatrix;
use num_traits::{Signed, Zero};
use std::collections::BTreeMap;

/// `a . x <= c` when `eq` is false, `a . x = c` otherwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub a: Vec<Rat>,
    pub c: Rat,
    pub eq: bool,
}

/// Scales by the first nonzero coefficient's absolute value and keeps the
/// tightest right-hand side per direction.
fn reduce(rows: Vec<(Vec<Rat>, Rat)>) -> Option<Vec<(Vec<Rat>, Rat)>> {
    let mut best: BTreeMap<Vec<Rat>, Rat> = BTreeMap::new();
    for (a, c) in rows {
        let Some(lead) = a.iter().find(|x| !x.is_zero()).map(|x| x.abs()) else {
            if c.is_negative() {
                return None;
            }
            continue;
        };
        let a: Vec<Rat> = a.iter().map(|x| x / &lead).collect();
        let c = c / &lead;
        best.entry(a).and_modify(|old| {
            if c < *old {
                *old = c.clone();
            }
        }).or_insert(c);
    }
    Some(best.into_iter().collect())
}

fn clamp_zero(lo: Option<Rat>, hi: Option<Rat>) -> Rat {
    match (lo, hi) {
        (Some(l), _) if l.is_positive() => l,
        (_, Some(h)) if h.is_negative() => h,
        _ => Rat::zero(),
    }
}

/// A point of `{x : a x <= c}`, or `None` when empty. Unconstrained
/// coordinates are taken as zero, constrained ones as zero clamped into range.
pub fn solve_inequalities(rows: &[(Vec<Rat>, Rat)], nvars: usize) -> Option<Vec<Rat>> {
    let rows = reduce(rows.to_vec())?;
    if nvars == 0 {
        return Some(vec![]);
    }
    let last = nvars - 1;
    let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
    for (a, c) in rows {
        if a[last].is_positive() {
            pos.push((a, c));
        } else if a[last].is_negative() {
            neg.push((a, c));
        } else {
            rest.push((a[..last].to_vec(), c));
        }
    }
    for (p, cp) in &pos {
        for (q, cq) in &neg {
            let (sp, sq) = (p[last].abs(), q[last].abs());
            let a: Vec<Rat> = (0..last).map(|j| &p[j] / &sp + &q[j] / &sq).collect();
            rest.push((a, cp / &sp + cq / &sq));
        }
    }
    let mut x = solve_inequalities(&rest, last)?;
    let bound = |(a, c): &(Vec<Rat>, Rat)| (c - dot_rat(&a[..last], &x)) / &a[last];
    let lo = neg.iter().map(bound).max();
    let hi = pos.iter().map(bound).min();
    x.push(clamp_zero(lo, hi));
    Some(x)
}

/// Solution set of the equalities as `x0 + N t`, or `None` if inconsistent.
fn parametrize(eqs: &[&Constraint], nvars: usize) -> Option<(Vec<Rat>, Vec<Vec<Rat>>)> {
    if eqs.is_empty() {
        let basis = (0..nvars)
            .map(|i| (0..nvars).map(|j| if i == j { Rat::from_integer(1.into()) } else { Rat::zero() }).collect())
            .collect();
        return Some((vec![Rat::zero(); nvars], basis));
    }
    let aug = RationalMatrix::new(
        eqs.iter().map(|e| e.a.iter().cloned().chain([e.c.clone()]).collect()).collect(),
        nvars + 1,
    );
    let (rref, pivots) = aug.rref();
    if pivots.last() == Some(&nvars) {
        return None;
    }
    let mut x0 = vec![Rat::zero(); nvars];
    for (row, &pc) in rref.iter().zip(&pivots) {
        x0[pc] = row[nvars].clone();
    }
    let kernel = RationalMatrix::new(eqs.iter().map(|e| e.a.clone()).collect(), nvars).kernel();
    Some((x0, kernel))
}

/// A point satisfying every constraint, or `None` when the system is infeasible.
pub fn feasible_point(cons: &[Constraint], nvars: usize) -> Option<Vec<Rat>> {
    let eqs: Vec<&Constraint> = cons.iter().filter(|c| c.eq).collect();
    let (x0, basis) = parametrize(&eqs, nvars)?;
    let rows: Vec<(Vec<Rat>, Rat)> = cons
        .iter()
        .filter(|c| !c.eq)
        .map(|c| {
            let a: Vec<Rat> = basis.iter().map(|v| dot_rat(&c.a, v)).collect();
            (a, &c.c - dot_rat(&c.a, &x0))
        })
        .collect();
    let t = solve_inequalities(&rows, basis.len())?;
    let mut x = x0;
    for (v, ti) in basis.iter().zip(&t) {
        for (xj, vj) in x.iter_mut().zip(v) {
            *xj += vj * ti;
        }
    }
    Some(x)
}

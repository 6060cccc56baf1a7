//! Sparse multivariate polynomials with rational coefficients.

use crate::arith::{fmt_rat, rat_json, rat_of, Int, Rat};
use num_traits::{One, Signed, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::from_terms(nvars, [(vec![0; nvars], c)])
    }

    /// The variable `x_i`, zero-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::from_terms(nvars, [(e, Rat::one())])
    }

    /// Sums repeated exponents and drops zero coefficients.
    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Rat)>>(nvars: usize, terms: I) -> Self {
        let mut map: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length must match the variable count");
            *map.entry(e).or_insert_with(Rat::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Polynomial { nvars, terms: map }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn eval(&self, x: &[Rat]) -> Rat {
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&k, xi)| acc * num_traits::pow(xi.clone(), k as usize))
            })
            .sum()
    }

    pub fn eval_int(&self, x: &[Int]) -> Rat {
        let xr: Vec<Rat> = x.iter().map(rat_of).collect();
        self.eval(&xr)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().chain(other.terms.iter()).map(|(e, c)| (e.clone(), c.clone())),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.push((e, c1 * c2));
            }
        }
        Self::from_terms(self.nvars, out)
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::from_terms(self.nvars, self.terms.iter().map(|(e, c)| (e.clone(), c * k)))
    }

    /// Terms in display order: by descending total degree, then descending exponent vector.
    fn ordered(&self) -> Vec<(&Vec<u32>, &Rat)> {
        let mut v: Vec<(&Vec<u32>, &Rat)> = self.terms.iter().collect();
        v.sort_by(|a, b| {
            let (da, db): (u32, u32) = (a.0.iter().sum(), b.0.iter().sum());
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        v
    }

    /// Renders with variables `{prefix}{i + offset}`, e.g. `x4*x8^2`.
    pub fn render(&self, prefix: &str, offset: usize) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (e, c)) in self.ordered().into_iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        format!("{prefix}{}", j + offset)
                    } else {
                        format!("{prefix}{}^{k}", j + offset)
                    }
                })
                .collect();
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if i == 0 {
                if c.is_negative() {
                    s.push('-');
                }
            } else {
                s.push_str(&format!(" {sign} "));
            }
            let coeff = fmt_rat(&abs);
            if mono.is_empty() {
                s.push_str(&coeff);
            } else if abs.is_one() {
                s.push_str(&mono.join("*"));
            } else {
                s.push_str(&format!("{coeff}*{}", mono.join("*")));
            }
        }
        s
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .ordered()
            .into_iter()
            .map(|(e, c)| json!({"exp": e, "coeff": rat_json(c)}))
            .collect();
        json!({"nvars": self.nvars, "terms": terms})
    }

    pub fn from_json(v: &Value) -> Option<Self> {
        let nvars = v.get("nvars")?.as_u64()? as usize;
        let mut terms = Vec::new();
        for t in v.get("terms")?.as_array()? {
            let e: Vec<u32> = t
                .get("exp")?
                .as_array()?
                .iter()
                .map(|x| x.as_u64().map(|k| k as u32))
                .collect::<Option<_>>()?;
            if e.len() != nvars {
                return None;
            }
            terms.push((e, crate::arith::rat_from_json(t.get("coeff")?)?));
        }
        Some(Self::from_terms(nvars, terms))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("w", 1))
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Polynomial", 3)?;
        st.serialize_field("nvars", &self.nvars)?;
        st.serialize_field("terms", &self.to_json()["terms"])?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

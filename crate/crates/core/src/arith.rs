//! Exact scalar helpers shared by every module.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::Value;

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(v: i64) -> Int {
    Int::from(v)
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

pub fn rat_of(v: &Int) -> Rat {
    Rat::from_integer(v.clone())
}

pub fn ints(v: &[i64]) -> Vec<Int> {
    v.iter().map(|&x| Int::from(x)).collect()
}

pub fn rats(v: &[i64]) -> Vec<Rat> {
    v.iter().map(|&x| Rat::from_integer(Int::from(x))).collect()
}

pub fn to_rat_point(p: &[Int]) -> Vec<Rat> {
    p.iter().map(rat_of).collect()
}

/// Returns the point if every coordinate is integral.
pub fn to_int_point(p: &[Rat]) -> Option<Vec<Int>> {
    p.iter()
        .map(|c| if c.is_integer() { Some(c.to_integer()) } else { None })
        .collect()
}

pub fn gcd_all(v: &[Int]) -> Int {
    v.iter().fold(Int::zero(), |g, x| g.gcd(x))
}

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
pub fn primitive(v: &[Int]) -> Vec<Int> {
    let g = gcd_all(v);
    if g.is_zero() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Smallest positive integer multiple of a rational vector, made primitive.
pub fn primitive_of_rat(v: &[Rat]) -> Vec<Int> {
    let l = v.iter().fold(Int::one(), |l, x| l.lcm(x.denom()));
    let scaled: Vec<Int> = v.iter().map(|x| (x * rat_of(&l)).to_integer()).collect();
    primitive(&scaled)
}

/// Lattice length of a rational segment direction: `|t|` where `v = t * primitive(v)`.
pub fn lattice_length(v: &[Rat]) -> Rat {
    let p = primitive_of_rat(v);
    match p.iter().position(|x| !x.is_zero()) {
        Some(i) => (&v[i] / rat_of(&p[i])).abs(),
        None => Rat::zero(),
    }
}

pub fn dot_int(a: &[Int], b: &[Int]) -> Int {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn dot_rat_int(a: &[Rat], b: &[Int]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * rat_of(y)).sum()
}

pub fn dot_rat(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn sub_rat(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add_rat(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn cross3(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

pub fn binom(n: u64, k: u64) -> Int {
    if k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> Int {
    (1..=n).fold(Int::one(), |a, i| a * Int::from(i))
}

/// Determinant by Bareiss fraction-free elimination.
pub fn det_int(m: &[Vec<Int>]) -> Int {
    let n = m.len();
    if n == 0 {
        return Int::one();
    }
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut sign = Int::one();
    let mut prev = Int::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return Int::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank of an integer matrix by Bareiss elimination.
pub fn rank_int(m: &[Vec<Int>]) -> usize {
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<Int>> = m.to_vec();
    let mut prev = Int::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        for i in r + 1..a.len() {
            for j in c + 1..cols {
                let v = &a[i][j] * &a[r][c] - &a[i][c] * &a[r][j];
                a[i][j] = v / &prev;
            }
            a[i][c] = Int::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// `p/q`, or `p` when the denominator is one.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: Int = n.trim().parse().ok()?;
            let d: Int = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => s.parse::<Int>().ok().map(Rat::from_integer),
    }
}

/// JSON number when the value is an integer fitting in `i64`, otherwise a string.
pub fn int_json(v: &Int) -> Value {
    match v.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(v.to_string()),
    }
}

pub fn rat_json(r: &Rat) -> Value {
    if r.is_integer() {
        int_json(r.numer())
    } else {
        Value::String(fmt_rat(r))
    }
}

pub fn rat_from_json(v: &Value) -> Option<Rat> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Some(Rat::from_integer(Int::from(i)))
            } else if let Some(u) = n.as_u64() {
                Some(Rat::from_integer(Int::from(u)))
            } else {
                // Large integers arrive here only with arbitrary_precision, which we do not enable.
                parse_rat(&n.to_string())
            }
        }
        Value::String(s) => parse_rat(s),
        _ => None,
    }
}

pub fn int_from_json(v: &Value) -> Option<Int> {
    rat_from_json(v).and_then(|r| if r.is_integer() { Some(r.to_integer()) } else { None })
}

/// Exact decimal rendering with a fixed number of fractional digits, rounded half away from zero.
pub fn fmt_decimal(r: &Rat, digits: u32) -> String {
    let scale = num_traits::pow(Int::from(10), digits as usize);
    let scaled = r * rat_of(&scale);
    let half = rat(1, 2);
    let rounded = if scaled.is_negative() {
        -((-scaled) + half).floor().to_integer()
    } else {
        (scaled + half).floor().to_integer()
    };
    let neg = rounded.is_negative();
    let digits_str = rounded.abs().to_string();
    let d = digits as usize;
    let padded = if digits_str.len() <= d {
        format!("{}{}", "0".repeat(d + 1 - digits_str.len()), digits_str)
    } else {
        digits_str
    };
    let (ip, fp) = padded.split_at(padded.len() - d);
    let fp = fp.trim_end_matches('0');
    let body = if fp.is_empty() { ip.to_string() } else { format!("{ip}.{fp}") };
    if neg && body != "0" {
        format!("-{body}")
    } else {
        body
    }
}

pub fn to_integer_exact(r: &Rat) -> Option<Int> {
    if r.is_integer() {
        Some(r.to_integer())
    } else {
        None
    }
}

pub fn ser_int<S: serde::Serializer>(v: &Int, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&int_json(v), s)
}

pub fn ser_rat<S: serde::Serializer>(v: &Rat, s: S) -> Result<S::Ok, S::Error> {
    serde::Serialize::serialize(&rat_json(v), s)
}

pub fn ser_rat_vec<S: serde::Serializer>(v: &[Rat], s: S) -> Result<S::Ok, S::Error> {
    let vals: Vec<Value> = v.iter().map(rat_json).collect();
    serde::Serialize::serialize(&vals, s)
}

pub fn ser_int_vec<S: serde::Serializer>(v: &[Int], s: S) -> Result<S::Ok, S::Error> {
    let vals: Vec<Value> = v.iter().map(int_json).collect();
    serde::Serialize::serialize(&vals, s)
}

pub fn ser_int_rows<S: serde::Serializer>(v: &[Vec<Int>], s: S) -> Result<S::Ok, S::Error> {
    let vals: Vec<Vec<Value>> = v.iter().map(|r| r.iter().map(int_json).collect()).collect();
    serde::Serialize::serialize(&vals, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_det_matches_cofactor_expansion() {
        let m = vec![ints(&[2, -1, 0]), ints(&[1, 3, 4]), ints(&[0, 5, -2])];
        // 2(3*-2 - 4*5) - (-1)(1*-2 - 0) + 0 = 2(-26) - 2 = -54
        assert_eq!(det_int(&m), int(-54));
        let swapped = vec![ints(&[0, 1]), ints(&[1, 0])];
        assert_eq!(det_int(&swapped), int(-1));
    }

    #[test]
    fn rank_of_dependent_rows() {
        let m = vec![ints(&[1, 2, 3]), ints(&[2, 4, 6]), ints(&[0, 1, 1])];
        assert_eq!(rank_int(&m), 2);
        assert_eq!(rank_int(&[ints(&[0, 0])]), 0);
    }

    #[test]
    fn rational_formatting_round_trips() {
        for (n, d) in [(3, 4), (-7, 2), (10, 5), (0, 3)] {
            let r = rat(n, d);
            assert_eq!(parse_rat(&fmt_rat(&r)), Some(r));
        }
        assert_eq!(fmt_decimal(&rat(1, 3), 4), "0.3333");
        assert_eq!(fmt_decimal(&rat(-5, 2), 2), "-2.5");
        assert_eq!(fmt_decimal(&rat(-1, 1000), 2), "0");
    }

    #[test]
    fn lattice_length_of_rational_direction() {
        assert_eq!(lattice_length(&rats(&[4, 6])), rat(2, 1));
        assert_eq!(lattice_length(&[rat(1, 2), rat(0, 1)]), rat(1, 2));
        assert_eq!(binom(5, 2), int(10));
        assert_eq!(binom(2, 5), int(0));
    }
}

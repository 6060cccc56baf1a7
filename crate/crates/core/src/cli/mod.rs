//! The `torjet` command line: argument parsing, input files, dispatch and reports.
//!
//! Every invocation prints one JSON document on stdout. Exit code 0 means the
//! computation ran, 1 a violated precondition, 2 a usage, parse or I/O error.

mod svg;

pub use svg::render_svg;

use crate::arith::{int_json, parse_rat, rat_json, Int, Rat};
use crate::dual_degrees::{
    dual_degree_sequence_threefold, dual_degree_smooth, scroll_kdual, surface_kdual_degree,
    threefold_2dual_degree, threefold_2dual_via_corollary, DegreeReport,
};
use crate::jet_apparatus::{
    affine_span_dim, build_Ak, cocircuits, expected_dim, is_generically_k_spanned, rank_and_kernel, torus_disjoint,
    DEFAULT_CAP_COLUMNS,
};
use crate::lattice_geom::{convex_hull, DimTag, LatticePoint, Polytope};
use crate::polytope_invariants::{
    adjoint_invariants, detect_exceptional, invariant_vector, is_k_regular, is_smooth, AdjointInvariants,
};
use crate::tropical::{membership, plane_curve, verify_witness, Caps, TropicalForm};
use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::ffi::OsString;
use std::fmt::Display;
use std::io::{Read, Write};
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(name = "torjet", version, about = "Exact degrees of higher duals of toric varieties and their tropicalizations")]
pub struct Cli {
    /// Also print a human-readable table on stderr.
    #[arg(long, global = true)]
    pub pretty: bool,
    /// Force sequential search order (the default; kept for scripts).
    #[arg(long, global = true)]
    pub deterministic: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Face sums, smoothness, regularity and adjoint data of a lattice polytope.
    PolytopeInfo {
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        k: u64,
        #[arg(long, default_value_t = 1)]
        r: u64,
    },
    /// Degree of the dual (k = 1) or k-th dual of a smooth toric surface or threefold.
    DualDegree {
        input: PathBuf,
        #[arg(long)]
        k: Option<u64>,
        /// Use the corollary form (1 or 2) for second duals of threefolds.
        #[arg(long)]
        variant: Option<u8>,
    },
    /// Dimension and degree of the k-th dual of a rational normal scroll.
    Scroll {
        /// Comma-separated nondecreasing positive integers.
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u64>,
        #[arg(long)]
        k: u64,
    },
    /// The jet matrix A^(k), its rank and kernel.
    Jet {
        input: PathBuf,
        #[arg(long)]
        k: Option<u32>,
        /// Also enumerate minimal-support rowspan vectors.
        #[arg(long)]
        cocircuits: bool,
        #[arg(long)]
        cap_columns: Option<usize>,
        /// Write the matrix as tab-separated values.
        #[arg(long)]
        tsv: Option<PathBuf>,
    },
    /// Decide whether u lies in the tropicalized k-th dual.
    TropMember {
        input: PathBuf,
        #[arg(long)]
        k: Option<u32>,
        /// Comma-separated weights, overriding the file.
        #[arg(long)]
        u: Option<String>,
        /// Comma-separated point to check as a witness.
        #[arg(long)]
        witness: Option<String>,
        #[arg(long)]
        cap_columns: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        cap_branches: usize,
    },
    /// Decide whether the k-th dual misses the torus.
    TropEmpty {
        input: PathBuf,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Plane tropical curve of p_{A,u}, optionally drawn as SVG.
    TropCurve {
        input: PathBuf,
        #[arg(long)]
        u: Option<String>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::PolytopeInfo { .. } => "polytope-info",
            Command::DualDegree { .. } => "dual-degree",
            Command::Scroll { .. } => "scroll",
            Command::Jet { .. } => "jet",
            Command::TropMember { .. } => "trop-member",
            Command::TropEmpty { .. } => "trop-empty",
            Command::TropCurve { .. } => "trop-curve",
        }
    }
}

/// A failed run: exit code, machine-readable kind and message.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub kind: String,
    pub message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure { code: 2, kind: "Usage".into(), message: msg.into() }
    }

    fn io(msg: impl Into<String>) -> Self {
        Failure { code: 2, kind: "Io".into(), message: msg.into() }
    }

    fn parse(msg: impl Into<String>) -> Self {
        Failure { code: 2, kind: "Parse".into(), message: msg.into() }
    }

    fn precondition<E: std::fmt::Debug + Display>(e: E) -> Self {
        let dbg = format!("{e:?}");
        let kind = dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string();
        Failure { code: 1, kind, message: e.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub input_digest: String,
    pub output: Map<String, Value>,
    pub warnings: Vec<String>,
    pub exit_code: i32,
}

impl RunReport {
    /// The flat JSON document printed on stdout.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("command".into(), json!(self.command));
        m.insert("input_digest".into(), json!(self.input_digest));
        for (k, v) in &self.output {
            m.insert(k.clone(), v.clone());
        }
        m.insert("warnings".into(), json!(self.warnings));
        Value::Object(m)
    }

    pub fn pretty_table(&self) -> String {
        let doc = self.to_json();
        let obj = doc.as_object().expect("report is an object");
        let width = obj.keys().map(|k| k.len()).max().unwrap_or(0);
        let mut s = String::new();
        for (k, v) in obj {
            s.push_str(&format!("{k:width$}  {v}\n"));
        }
        s
    }
}

/// Parsed input document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputDoc {
    pub points: Vec<LatticePoint>,
    pub u: Option<Vec<Rat>>,
    pub k: Option<u32>,
    pub digest: String,
}

fn digest(bytes: &[u8]) -> String {
    let h = Sha256::digest(bytes);
    let hex: String = h.iter().map(|b| format!("{b:02x}")).collect();
    format!("sha256:{hex}")
}

/// Exact rational from a JSON number or string: integers, `p/q` and decimals.
pub fn parse_exact(v: &Value) -> Option<Rat> {
    let text = match v {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.trim().to_string(),
        _ => return None,
    };
    if let Some(r) = parse_rat(&text) {
        return Some(r);
    }
    let (mant, exp) = match text.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (text.as_str(), 0),
    };
    let (ip, fp) = mant.split_once('.').unwrap_or((mant, ""));
    if !fp.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: Int = format!("{ip}{fp}").parse().ok()?;
    let shift = exp - fp.len() as i32;
    let ten = Int::from(10);
    Some(if shift >= 0 {
        Rat::from_integer(digits * num_traits::pow(ten, shift as usize))
    } else {
        Rat::new(digits, num_traits::pow(ten, (-shift) as usize))
    })
}

pub fn parse_input_str(text: &str) -> Result<InputDoc, Failure> {
    let doc: Value = serde_json::from_str(text).map_err(|e| {
        Failure::parse(format!("malformed JSON at line {}, column {}: {e}", e.line(), e.column()))
    })?;
    let obj = doc.as_object().ok_or_else(|| Failure::parse("input must be a JSON object"))?;
    let pts = obj
        .get("points")
        .or_else(|| obj.get("vertices"))
        .ok_or_else(|| Failure::parse("missing \"points\" or \"vertices\""))?
        .as_array()
        .ok_or_else(|| Failure::parse("\"points\" must be an array"))?;
    if pts.is_empty() {
        return Err(Failure::parse("empty point list"));
    }
    let mut points = Vec::with_capacity(pts.len());
    for (i, p) in pts.iter().enumerate() {
        let coords = p.as_array().ok_or_else(|| Failure::parse(format!("point {i} is not an array")))?;
        let pt: Option<LatticePoint> = coords
            .iter()
            .map(|c| parse_exact(c).filter(|r| r.is_integer()).map(|r| r.to_integer()))
            .collect();
        points.push(pt.ok_or_else(|| Failure::parse(format!("point {i} has a non-integer coordinate")))?);
    }
    let n = points[0].len();
    if points.iter().any(|p| p.len() != n) {
        return Err(Failure::parse("points have different lengths"));
    }
    let u = match obj.get("u") {
        None | Some(Value::Null) => None,
        Some(Value::Array(a)) => Some(
            a.iter()
                .map(parse_exact)
                .collect::<Option<Vec<Rat>>>()
                .ok_or_else(|| Failure::parse("\"u\" must contain exact numbers"))?,
        ),
        Some(_) => return Err(Failure::parse("\"u\" must be an array")),
    };
    let k = match obj.get("k") {
        None | Some(Value::Null) => None,
        Some(v) => Some(
            v.as_u64()
                .and_then(|x| u32::try_from(x).ok())
                .ok_or_else(|| Failure::parse("\"k\" must be a non-negative integer"))?,
        ),
    };
    Ok(InputDoc { points, u, k, digest: digest(text.as_bytes()) })
}

pub fn parse_input(path: &PathBuf) -> Result<InputDoc, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Failure::io(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    }
    parse_input_str(&text)
}

fn parse_list(s: &str, what: &str) -> Result<Vec<Rat>, Failure> {
    s.split(',')
        .map(|x| parse_exact(&Value::String(x.to_string())))
        .collect::<Option<Vec<Rat>>>()
        .ok_or_else(|| Failure::usage(format!("{what}: expected comma-separated exact numbers")))
}

fn polytope(doc: &InputDoc) -> Result<Polytope, Failure> {
    convex_hull(&doc.points).map_err(Failure::precondition)
}

fn need_k(flag: Option<u32>, doc: &InputDoc) -> Result<u32, Failure> {
    flag.or(doc.k).ok_or_else(|| Failure::usage("k is required (--k or \"k\" in the input)"))
}

fn need_u(flag: &Option<String>, doc: &InputDoc) -> Result<Vec<Rat>, Failure> {
    let u = match flag {
        Some(s) => parse_list(s, "--u")?,
        None => doc.u.clone().ok_or_else(|| Failure::usage("u is required (--u or \"u\" in the input)"))?,
    };
    if u.len() != doc.points.len() {
        return Err(Failure::usage(format!("u has {} entries for {} points", u.len(), doc.points.len())));
    }
    Ok(u)
}

fn cap_columns(flag: Option<usize>) -> Result<usize, Failure> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("TORJET_CAP_COLUMNS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&c| c > 0)
            .ok_or_else(|| Failure::usage(format!("TORJET_CAP_COLUMNS must be a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_CAP_COLUMNS),
    }
}

fn to_map(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        other => Map::from_iter([("value".to_string(), other)]),
    }
}

fn value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn degree_output(rep: &DegreeReport) -> Map<String, Value> {
    let mut m = to_map(value(rep));
    m.insert("degree".into(), rep.degree().map_or(Value::Null, int_json));
    m
}

fn adjoint_warnings(adj: &AdjointInvariants, w: &mut Vec<String>) {
    if adj.degenerate != DimTag::Full {
        w.push(format!("adjoint polytope at level {} is degenerate ({:?})", adj.r, adj.degenerate));
    }
    if adj.mismatch {
        w.push(format!("adjoint face sums at level {} differ from the intersection numbers", adj.r));
    }
    if adj.interior_hull_differs {
        w.push(format!("tightened polytope at level {} differs from the interior lattice hull", adj.r));
    }
}

fn polytope_info(doc: &InputDoc, k: u64, r: u64, warnings: &mut Vec<String>) -> Result<Value, Failure> {
    let p = polytope(doc)?;
    let inv = invariant_vector(&p).map_err(Failure::precondition)?;
    let smooth = is_smooth(&p);
    let mut out = json!({
        "dim": p.dim(),
        "vertices": p.lattice_vertices().map(|vs| vs.iter().map(|v| v.iter().map(int_json).collect::<Vec<_>>()).collect::<Vec<_>>()),
        "invariants": value(&inv),
        "smooth": smooth,
        "k": k,
        "k_regular": is_k_regular(&p, k),
    });
    if p.dim() == 3 && smooth {
        let adj = adjoint_invariants(&p, r).map_err(Failure::precondition)?;
        adjoint_warnings(&adj, warnings);
        out["adjoint"] = value(&adj);
        if is_k_regular(&p, 2) {
            out["exceptional"] = value(&detect_exceptional(&p).map_err(Failure::precondition)?);
        }
    }
    Ok(out)
}

fn dual_degree(doc: &InputDoc, k: Option<u64>, variant: Option<u8>, warnings: &mut Vec<String>) -> Result<Value, Failure> {
    let p = polytope(doc)?;
    let k = k.or(doc.k.map(u64::from)).unwrap_or(1);
    match (p.dim(), k) {
        (_, 0) => Err(Failure::usage("k must be positive")),
        (1, 1) => {
            let d = dual_degree_smooth(&p).map_err(Failure::precondition)?;
            Ok(json!({"degree": int_json(&d), "branch": "Formula", "k": 1}))
        }
        (2, _) => {
            let rep = surface_kdual_degree(&p, k).map_err(Failure::precondition)?;
            Ok(Value::Object(degree_output(&rep)))
        }
        (3, 1) => {
            let seq = dual_degree_sequence_threefold(&p).map_err(Failure::precondition)?;
            let mut m = to_map(value(&seq));
            m.insert("branch".into(), json!("DeltaSequence"));
            Ok(Value::Object(m))
        }
        (3, 2) => {
            let rep = match variant {
                Some(v) => threefold_2dual_via_corollary(&p, v),
                None => threefold_2dual_degree(&p),
            }
            .map_err(Failure::precondition)?;
            if rep.intermediates.contains_key("vol_adj") {
                if let Ok(adj) = adjoint_invariants(&p, 1) {
                    adjoint_warnings(&adj, warnings);
                }
            }
            Ok(Value::Object(degree_output(&rep)))
        }
        (d, k) => Err(Failure {
            code: 1,
            kind: "Unsupported".into(),
            message: format!("no degree formula for dimension {d} and k = {k}"),
        }),
    }
}

fn jet(doc: &InputDoc, k: u32, with_cocircuits: bool, cap: usize, tsv: &Option<PathBuf>) -> Result<Value, Failure> {
    let m = build_Ak(&doc.points, k).map_err(Failure::precondition)?;
    let (rank, kernel) = rank_and_kernel(&m.matrix);
    if let Some(path) = tsv {
        std::fs::write(path, m.to_tsv()).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
    }
    let mut out = m.to_json();
    out["k"] = json!(k);
    out["rank"] = json!(rank);
    out["kernel"] = json!(kernel.iter().map(|v| v.iter().map(rat_json).collect::<Vec<_>>()).collect::<Vec<_>>());
    out["affine_dim"] = json!(affine_span_dim(&doc.points));
    out["generically_k_spanned"] = json!(is_generically_k_spanned(&doc.points, k).map_err(Failure::precondition)?);
    out["expected_dim"] = json!(expected_dim(&doc.points, k).map_err(Failure::precondition)?);
    if with_cocircuits {
        out["cocircuits"] = value(&cocircuits(&m, cap).map_err(Failure::precondition)?);
    }
    Ok(out)
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> Result<RunReport, (String, Failure)> {
    let name = cli.command.name().to_string();
    let mut warnings = Vec::new();
    let result = (|| -> Result<(String, Value), Failure> {
        match &cli.command {
            Command::PolytopeInfo { input, k, r } => {
                let doc = parse_input(input)?;
                Ok((doc.digest.clone(), polytope_info(&doc, *k, *r, &mut warnings)?))
            }
            Command::DualDegree { input, k, variant } => {
                let doc = parse_input(input)?;
                Ok((doc.digest.clone(), dual_degree(&doc, *k, *variant, &mut warnings)?))
            }
            Command::Scroll { d, k } => {
                let key = format!("d={};k={k}", d.iter().map(u64::to_string).collect::<Vec<_>>().join(","));
                let s = scroll_kdual(d, *k).map_err(Failure::precondition)?;
                let mut m = to_map(value(&s));
                m.insert("degree".into(), s.degree.as_ref().and_then(|r| r.degree()).map_or(Value::Null, int_json));
                m.insert("degree_report".into(), s.degree.as_ref().map_or(Value::Null, value));
                Ok((digest(key.as_bytes()), Value::Object(m)))
            }
            Command::Jet { input, k, cocircuits, cap_columns: cap, tsv } => {
                let doc = parse_input(input)?;
                let k = need_k(*k, &doc)?;
                Ok((doc.digest.clone(), jet(&doc, k, *cocircuits, cap_columns(*cap)?, tsv)?))
            }
            Command::TropMember { input, k, u, witness, cap_columns: cap, cap_branches } => {
                let doc = parse_input(input)?;
                let k = need_k(*k, &doc)?;
                let u = need_u(u, &doc)?;
                let caps = Caps { columns: cap_columns(*cap)?, branches: *cap_branches };
                let cert = membership(&doc.points, k, &u, &caps).map_err(Failure::precondition)?;
                let mut out = value(&cert);
                out["k"] = json!(k);
                if let Some(w) = witness {
                    let b = parse_list(w, "--witness")?;
                    out["witness_check"] =
                        json!(verify_witness(&doc.points, k, &u, &b, &caps).map_err(Failure::precondition)?);
                }
                Ok((doc.digest.clone(), out))
            }
            Command::TropEmpty { input, k } => {
                let doc = parse_input(input)?;
                let k = need_k(*k, &doc)?;
                let t = torus_disjoint(&doc.points, k).map_err(Failure::precondition)?;
                let values = t.witness.as_ref().map(|q| {
                    doc.points.iter().map(|r| rat_json(&q.eval_int(r))).collect::<Vec<_>>()
                });
                Ok((
                    doc.digest.clone(),
                    json!({
                        "k": k,
                        "torus_disjoint": t.disjoint,
                        "index": t.index,
                        "witness_Q": t.witness.as_ref().map(value),
                        "witness_values": values,
                    }),
                ))
            }
            Command::TropCurve { input, u, svg } => {
                let doc = parse_input(input)?;
                let u = need_u(u, &doc)?;
                let t = TropicalForm::new(doc.points.clone(), u).map_err(Failure::precondition)?;
                let c = plane_curve(&t).map_err(Failure::precondition)?;
                let mut out = value(&c);
                out["balanced"] = json!(c.is_balanced());
                if let Some(path) = svg {
                    std::fs::write(path, render_svg(&c))
                        .map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
                    out["svg"] = json!(path.display().to_string());
                }
                Ok((doc.digest.clone(), out))
            }
        }
    })();
    match result {
        Ok((input_digest, out)) => {
            Ok(RunReport { command: name, input_digest, output: to_map(out), warnings, exit_code: 0 })
        }
        Err(f) => Err((name, f)),
    }
}

/// Write errors such as a closed pipe are ignored.
fn emit(doc: &Value) {
    let text = serde_json::to_string_pretty(doc).expect("JSON prints");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

/// Parses arguments, runs, prints, and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cli) {
        Ok(rep) => {
            emit(&rep.to_json());
            if cli.pretty {
                eprint!("{}", rep.pretty_table());
            }
            rep.exit_code
        }
        Err((command, f)) => {
            let doc = json!({
                "command": command,
                "error": {"kind": f.kind, "message": f.message},
                "exit_code": f.code,
            });
            emit(&doc);
            eprintln!("torjet {command}: {}", f.message);
            f.code
        }
    }
}

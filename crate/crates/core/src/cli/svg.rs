//! Deterministic SVG rendering of plane tropical curves.

use crate::arith::{fmt_decimal, rat_of, Int, Rat};
use crate::tropical::PlaneTropicalCurve;
use num_traits::{Signed, Zero};
use std::fmt::Write;

const UNIT: i64 = 40;

fn px(x: &Rat) -> String {
    fmt_decimal(&(x * rat_of(&Int::from(UNIT))), 3)
}

/// Bounding box `[x0, x1] x [y0, y1]` of the vertices padded by 2, or `[-2, 2]^2`.
fn bounds(c: &PlaneTropicalCurve) -> [Rat; 4] {
    let two = rat_of(&Int::from(2));
    if c.vertices.is_empty() {
        return [-two.clone(), two.clone(), -two.clone(), two];
    }
    let xs = c.vertices.iter().map(|v| v[0].clone());
    let ys = c.vertices.iter().map(|v| v[1].clone());
    [
        xs.clone().min().unwrap() - &two,
        xs.max().unwrap() + &two,
        ys.clone().min().unwrap() - &two,
        ys.max().unwrap() + &two,
    ]
}

/// Where the ray from `v` along `d` leaves the box.
fn ray_end(v: &[Rat], d: &[Int], b: &[Rat; 4]) -> Vec<Rat> {
    let mut t: Option<Rat> = None;
    for (i, di) in d.iter().enumerate() {
        if di.is_zero() {
            continue;
        }
        let wall = if di.is_positive() { &b[2 * i + 1] } else { &b[2 * i] };
        let ti = (wall - &v[i]) / rat_of(di);
        t = Some(match t {
            Some(old) if old < ti => old,
            _ => ti,
        });
    }
    let t = t.unwrap_or_else(Rat::zero);
    v.iter().zip(d).map(|(x, di)| x + &t * rat_of(di)).collect()
}

fn line(out: &mut String, class: &str, a: &[Rat], b: &[Rat], m: &Int) {
    let w = fmt_decimal(&(rat_of(m) * Rat::new(3.into(), 2.into())), 3);
    let _ = writeln!(
        out,
        r#"  <line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke-width="{w}"/>"#,
        px(&a[0]),
        px(&-a[1].clone()),
        px(&b[0]),
        px(&-b[1].clone()),
    );
    let mid: Vec<Rat> = a.iter().zip(b).map(|(x, y)| (x + y) / rat_of(&Int::from(2))).collect();
    let _ = writeln!(out, r#"  <text x="{}" y="{}">{m}</text>"#, px(&mid[0]), px(&-mid[1].clone()));
}

pub fn render_svg(c: &PlaneTropicalCurve) -> String {
    let b = bounds(c);
    let (x0, x1, y0, y1) = (&b[0], &b[1], &b[2], &b[3]);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        px(x0),
        px(&-y1.clone()),
        px(&(x1 - x0)),
        px(&(y1 - y0))
    );
    let _ = writeln!(
        s,
        "  <style>.grid{{stroke:#ddd;stroke-width:1}} .edge,.ray{{stroke:#000}} .vertex{{fill:#c00}} text{{font-size:12px;fill:#00c}}</style>"
    );
    let _ = writeln!(s, r#"  <g class="grid">"#);
    let (gx0, gx1) = (x0.ceil().to_integer(), x1.floor().to_integer());
    let (gy0, gy1) = (y0.ceil().to_integer(), y1.floor().to_integer());
    let mut g = gx0.clone();
    while g <= gx1 {
        let gr = rat_of(&g);
        let _ = writeln!(s, r#"    <line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#, px(&gr), px(&-y1.clone()), px(&-y0.clone()));
        g += 1;
    }
    let mut g = gy0.clone();
    while g <= gy1 {
        let gr = -rat_of(&g);
        let _ = writeln!(s, r#"    <line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#, px(&gr), px(x0), px(x1));
        g += 1;
    }
    let _ = writeln!(s, "  </g>");
    for e in &c.edges {
        line(&mut s, "edge", &c.vertices[e.from], &c.vertices[e.to], &e.multiplicity);
    }
    for r in &c.rays {
        let v = &c.vertices[r.vertex];
        line(&mut s, "ray", v, &ray_end(v, &r.direction, &b), &r.multiplicity);
    }
    for v in &c.vertices {
        let _ = writeln!(s, r#"  <circle class="vertex" cx="{}" cy="{}" r="3"/>"#, px(&v[0]), px(&-v[1].clone()));
    }
    s.push_str("</svg>\n");
    s
}

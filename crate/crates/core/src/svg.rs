//! SVG weight diagrams for rank-2 algebras: simple roots, the roots of `a`,
//! weight dots sized by multiplicity, and contours of the generalized Verma
//! modules of the Weyl-Verma decomposition (dashed for positive sign, dotted
//! for negative).

use std::fmt::Write as _;

use crate::embedding::EmbeddingSpec;
use crate::oracle::freudenthal;
use crate::rootspace::RootDatum;
use crate::verma::weyl_verma_decompose;
use crate::weight::Weight;
use crate::{Error, Result};

const HALF_SIZE: f64 = 200.0;
const MARGIN: f64 = 30.0;

/// Orthonormal 2D frame of the root span, in floating point for layout only.
struct Frame {
    e1: Vec<f64>,
    e2: Vec<f64>,
    scale: f64,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Frame {
    fn new(d: &RootDatum) -> Self {
        let a = d.simple_roots()[0].to_f64();
        let b = d.simple_roots()[1].to_f64();
        let na = dot(&a, &a).sqrt();
        let e1: Vec<f64> = a.iter().map(|x| x / na).collect();
        let proj = dot(&b, &e1);
        let r: Vec<f64> = b.iter().zip(&e1).map(|(x, y)| x - proj * y).collect();
        let nr = dot(&r, &r).sqrt();
        let e2 = r.iter().map(|x| x / nr).collect();
        Self { e1, e2, scale: 1.0 }
    }

    /// SVG coordinates, y pointing up.
    fn place(&self, w: &Weight) -> (f64, f64) {
        let v = w.to_f64();
        (self.scale * dot(&v, &self.e1), -self.scale * dot(&v, &self.e2))
    }

    fn raw_norm(&self, w: &Weight) -> f64 {
        let v = w.to_f64();
        dot(&v, &self.e1).hypot(dot(&v, &self.e2))
    }
}

fn fmt(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn cross(o: (f64, f64), a: (f64, f64), b: (f64, f64)) -> f64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Andrew's monotone chain.
fn convex_hull(mut pts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    pts.sort_by(|a, b| a.partial_cmp(b).expect("finite coordinates"));
    pts.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9);
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 1e-9 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 1e-9 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

fn arrow(out: &mut String, class: &str, frame: &Frame, w: &Weight, extra: &str) {
    let (x, y) = frame.place(w);
    let _ = writeln!(out, r#"  <line class="{class}" x1="0.000" y1="0.000" x2="{}" y2="{}"{extra}/>"#, fmt(x), fmt(y));
}

/// Draws `L^μ` of a rank-2 algebra; with an embedding, also the simple roots
/// of `a` and the contours of the generalized Verma modules on the window of
/// the given depth.
pub fn draw(ambient: &RootDatum, mu: &Weight, spec: Option<&EmbeddingSpec>, depth: u32) -> Result<String> {
    if ambient.rank() != 2 {
        return Err(Error::RankNotTwo(ambient.rank()));
    }
    let diagram = freudenthal(ambient, mu)?;
    let contours = match spec {
        Some(s) => {
            let dec = weyl_verma_decompose(s, mu, depth)?;
            dec.entries
                .iter()
                .map(|e| {
                    let support: Vec<Weight> =
                        e.gv.terms
                            .terms()
                            .map(|(w, _)| w + &e.carrier)
                            .filter(|w| {
                                ambient
                                    .integer_root_coordinates(&(mu - w))
                                    .is_some_and(|q| q.iter().all(|&c| c >= 0) && q.iter().sum::<i64>() <= depth as i64)
                            })
                            .collect();
                    (e.sign, support)
                })
                .collect()
        }
        None => Vec::new(),
    };

    let mut frame = Frame::new(ambient);
    let extent = diagram
        .multiplicities
        .keys()
        .chain(contours.iter().flat_map(|(_, s)| s.iter()))
        .chain(ambient.simple_roots())
        .map(|w| frame.raw_norm(w))
        .fold(1.0f64, f64::max);
    frame.scale = (HALF_SIZE - MARGIN) / extent;
    let unit = frame.scale * frame.raw_norm(&ambient.simple_roots()[0]).min(frame.raw_norm(&ambient.simple_roots()[1]));
    let dot_radius = (unit / 10.0).clamp(2.0, 8.0);

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="{}" height="{}">"#,
        -HALF_SIZE,
        -HALF_SIZE,
        2.0 * HALF_SIZE,
        2.0 * HALF_SIZE,
        2.0 * HALF_SIZE,
        2.0 * HALF_SIZE
    );
    let _ = writeln!(out, "  <title>L^{mu} of {}</title>", ambient.id);
    let _ = writeln!(
        out,
        "  <style>.simple-root{{stroke:#333;stroke-width:1.5;stroke-dasharray:5 4}} \
         .a-root{{stroke:#888;stroke-width:3}} .weight{{fill:#1f4e9c}} \
         .multiplicity-marker{{fill:none;stroke:#1f4e9c;stroke-width:1.2}} \
         .contour{{fill:none;stroke-width:1.4}} .positive{{stroke:#b22222;stroke-dasharray:7 4}} \
         .negative{{stroke:#2e7d32;stroke-dasharray:1.5 3}}</style>"
    );
    for a in ambient.simple_roots() {
        arrow(&mut out, "simple-root", &frame, a, "");
    }
    if let Some(s) = spec {
        for a in s.a_system().simple_roots() {
            arrow(&mut out, "a-root", &frame, a, "");
        }
    }
    for (sign, support) in &contours {
        let class = if *sign > 0 { "contour positive" } else { "contour negative" };
        let hull = convex_hull(support.iter().map(|w| frame.place(w)).collect());
        let points: Vec<String> = hull.iter().map(|(x, y)| format!("{},{}", fmt(*x), fmt(*y))).collect();
        let tag = if hull.len() >= 3 { "polygon" } else { "polyline" };
        let _ = writeln!(out, r#"  <{tag} class="{class}" points="{}"/>"#, points.join(" "));
    }
    for (w, &m) in &diagram.multiplicities {
        let (x, y) = frame.place(w);
        let r = dot_radius * (1.0 + 0.35 * (m as f64 - 1.0));
        let _ = writeln!(
            out,
            r#"  <circle class="weight" data-multiplicity="{m}" cx="{}" cy="{}" r="{}"/>"#,
            fmt(x),
            fmt(y),
            fmt(r)
        );
        if m > 1 {
            let _ = writeln!(
                out,
                r#"  <circle class="multiplicity-marker" cx="{}" cy="{}" r="{}"/>"#,
                fmt(x),
                fmt(y),
                fmt(r + 3.0)
            );
        }
    }
    out.push_str("</svg>\n");
    Ok(out)
}

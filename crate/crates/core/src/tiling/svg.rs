//! SVG 1.1 output. The only place Cyclo points become floats.

use std::fmt::Write;

use super::cyclo::Cyclo;
use super::pair::{Shape, WholeTile};
use super::tile::{HalfTile, Kind};

pub const DEFAULT_PRECISION: usize = 12;

/// Digits after the decimal point, from `QTK_PRECISION`.
pub fn precision_from_env() -> usize {
    std::env::var("QTK_PRECISION")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&p: &usize| p <= 17)
        .unwrap_or(DEFAULT_PRECISION)
}

#[derive(Clone, Debug)]
pub struct Style {
    pub precision: usize,
    pub stroke_width: f64,
}

impl Default for Style {
    fn default() -> Self {
        Style { precision: precision_from_env(), stroke_width: 0.01 }
    }
}

fn num(x: f64, prec: usize) -> String {
    let s = format!("{:.*}", prec, x);
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

struct Bounds {
    min: (f64, f64),
    max: (f64, f64),
}

impl Bounds {
    fn new() -> Self {
        Bounds { min: (f64::INFINITY, f64::INFINITY), max: (f64::NEG_INFINITY, f64::NEG_INFINITY) }
    }
    fn add(&mut self, p: (f64, f64)) {
        self.min = (self.min.0.min(p.0), self.min.1.min(p.1));
        self.max = (self.max.0.max(p.0), self.max.1.max(p.1));
    }
    fn view_box(&self, pad: f64, prec: usize) -> String {
        if !self.min.0.is_finite() {
            return "0 0 1 1".into();
        }
        // y is flipped so that the picture keeps the mathematical orientation
        let (x0, y0) = (self.min.0 - pad, -self.max.1 - pad);
        let (w, h) = (self.max.0 - self.min.0 + 2.0 * pad, self.max.1 - self.min.1 + 2.0 * pad);
        format!("{} {} {} {}", num(x0, prec), num(y0, prec), num(w, prec), num(h, prec))
    }
}

fn header(out: &mut String, view_box: &str) {
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{view_box}\">"
    );
}

fn point(p: &Cyclo) -> (f64, f64) {
    let (x, y) = p.to_complex();
    (x, -y)
}

fn polygon(out: &mut String, pts: &[&Cyclo], class: &str, fill: &str, style: &Style) {
    let coords: Vec<String> = pts
        .iter()
        .map(|p| {
            let (x, y) = point(p);
            format!("{},{}", num(x, style.precision), num(y, style.precision))
        })
        .collect();
    let _ = writeln!(
        out,
        "  <polygon class=\"{class}\" points=\"{}\" fill=\"{fill}\" stroke=\"black\" stroke-width=\"{}\"/>",
        coords.join(" "),
        style.stroke_width
    );
}

fn half_fill(k: Kind) -> &'static str {
    match k {
        Kind::Acute => "#e8b04a",
        Kind::Obtuse => "#4a7fe8",
    }
}

fn whole_fill(s: Shape) -> &'static str {
    match s {
        Shape::Kite | Shape::Thin => "#e8b04a",
        Shape::Dart | Shape::Thick => "#4a7fe8",
    }
}

/// One polygon per half-tile and per whole tile.
pub fn render_svg(halves: &[&HalfTile], wholes: &[WholeTile], style: &Style) -> String {
    let mut b = Bounds::new();
    for t in halves {
        t.v.iter().for_each(|p| b.add(p.to_complex()));
    }
    for t in wholes {
        t.v.iter().for_each(|p| b.add(p.to_complex()));
    }
    let mut out = String::new();
    header(&mut out, &b.view_box(0.05, style.precision));
    for t in wholes {
        let pts: Vec<&Cyclo> = t.v.iter().collect();
        polygon(&mut out, &pts, t.shape.name(), whole_fill(t.shape), style);
    }
    for t in halves {
        let pts: Vec<&Cyclo> = t.v.iter().collect();
        polygon(&mut out, &pts, t.kind.name(), half_fill(t.kind), style);
    }
    out.push_str("</svg>\n");
    out
}

/// The five fifth roots of unity drawn as arrows from the origin.
pub fn render_star(style: &Style) -> String {
    let tips: Vec<Cyclo> = (0..5).map(Cyclo::zeta_pow).collect();
    let mut b = Bounds::new();
    b.add((0.0, 0.0));
    tips.iter().for_each(|p| b.add(p.to_complex()));
    let mut out = String::new();
    header(&mut out, &b.view_box(0.2, style.precision));
    out.push_str("  <defs>\n    <marker id=\"head\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">\n      <path d=\"M 0 0 L 10 5 L 0 10 z\"/>\n    </marker>\n  </defs>\n");
    for t in &tips {
        let (x, y) = point(t);
        let _ = writeln!(
            out,
            "  <line x1=\"0\" y1=\"0\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-width=\"0.02\" marker-end=\"url(#head)\"/>",
            num(x, style.precision),
            num(y, style.precision)
        );
    }
    out.push_str("</svg>\n");
    out
}

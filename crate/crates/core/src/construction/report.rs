use num_traits::{One, Signed, Zero};

use crate::field::rational::format_rational;
use crate::field::{Field, FieldElem, KVector, Rational};
use crate::io::schema::report_to_json;
use crate::io::to_text;

use super::chart::Chart;
use super::presentation::{LevelRow, Presentation};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

/// `x + yφ` when `D = 5` and both coordinates are integers.
fn phi_coordinates(e: &FieldElem) -> Option<(Rational, Rational)> {
    if e.field().d() != 5 {
        return None;
    }
    // a + b√5 = (a − b) + 2b·φ
    let y = e.b() * Rational::from_integer(2.into());
    let x = e.a() - e.b();
    (x.is_integer() && y.is_integer()).then_some((x, y))
}

/// Text form of a field element, writing golden-ratio integers as `2φ - 1`.
pub fn render_elem(e: &FieldElem) -> String {
    let Some((x, y)) = phi_coordinates(e) else {
        return e.to_string();
    };
    if y.is_zero() {
        return format_rational(&x);
    }
    let phi = match () {
        _ if y.is_one() => "φ".to_string(),
        _ if (-&y).is_one() => "-φ".to_string(),
        _ => format!("{}φ", format_rational(&y)),
    };
    if x.is_zero() {
        phi
    } else if x.is_negative() {
        format!("{phi} - {}", format_rational(&-x))
    } else {
        format!("{phi} + {}", format_rational(&x))
    }
}

fn is_compound(s: &str) -> bool {
    s.trim_start_matches('-').contains([' ', '+', '-'])
}

/// `φ|z1|^2 + |z2|^2 = φ`-style sum over `|z_{labels[k]}|^2`.
fn render_sum(coefficients: &KVector, labels: &[usize]) -> String {
    let mut out = String::new();
    for (c, &j) in coefficients.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = render_elem(&c.abs());
        let coeff = match mag.as_str() {
            "1" => String::new(),
            m if is_compound(m) => format!("({m})"),
            m => m.to_string(),
        };
        let term = format!("{coeff}|z{}|^2", j + 1);
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&term),
            (true, true) => out.push_str(&format!("-{term}")),
            (false, false) => out.push_str(&format!(" + {term}")),
            (false, true) => out.push_str(&format!(" - {term}")),
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

pub fn render_level_row(r: &LevelRow) -> String {
    let labels: Vec<usize> = (0..r.coefficients.dim()).collect();
    format!("{} = {}", render_sum(&r.coefficients, &labels), render_elem(&r.constant))
}

fn render_vector(v: &KVector) -> String {
    let parts: Vec<String> = v.iter().map(render_elem).collect();
    format!("({})", parts.join(", "))
}

fn text_report(p: &Presentation, charts: &[Chart]) -> String {
    let mut s = String::new();
    s.push_str(&format!("presentation: d = {}, n = {}\n", p.d, p.n));
    s.push_str("level set:\n");
    for r in &p.level_rows {
        s.push_str(&format!("  {}\n", render_level_row(r)));
    }
    s.push_str("identity component exp(span of):\n");
    for g in &p.cont_gens {
        s.push_str(&format!("  {}\n", render_vector(g)));
    }
    s.push_str(&format!("component group: {}\n", p.component_invariants));
    for g in &p.disc_gens {
        s.push_str(&format!("  {} mod Z^{} + N0\n", render_vector(g), p.d));
    }
    for (i, c) in charts.iter().enumerate() {
        let facets: Vec<String> = c.active.iter().map(|j| (j + 1).to_string()).collect();
        s.push_str(&format!(
            "chart {}: vertex {}, facets {{{}}}\n",
            i + 1,
            render_vector(&c.vertex.point),
            facets.join(",")
        ));
        for ineq in &c.domain_ineqs {
            s.push_str(&format!(
                "  {} < {}\n",
                render_sum(&ineq.coefficients, &c.active),
                render_elem(&ineq.bound)
            ));
        }
        s.push_str(&format!("  group: {}\n", c.gamma_invariants));
        for g in &c.gamma_gens {
            s.push_str(&format!("    {} mod Z^{}\n", render_vector(g), c.active.len()));
        }
    }
    s
}

pub fn emit_report(p: &Presentation, charts: &[Chart], field: Field, format: ReportFormat) -> String {
    match format {
        ReportFormat::Text => text_report(p, charts),
        ReportFormat::Json => to_text(&report_to_json(p, charts, field)),
    }
}

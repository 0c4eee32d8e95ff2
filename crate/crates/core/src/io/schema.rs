//! Documents: quasilattice, triple, presentation, charts.

use serde_json::{json, Value};

use super::json::*;
use crate::construction::{Chart, DomainIneq, LevelRow, Presentation, SlotExpr, Triple};
use crate::error::Result;
use crate::field::{Field, KVector};
use crate::lattice::AbelianGroupInvariants;
use crate::polytope::{HalfSpace, PolytopeH, VertexData};
use crate::quasilattice::{MembershipCertificate, Quasilattice};

fn quasilattice_body(q: &Quasilattice) -> Value {
    json!({
        "dim": q.dim(),
        "generators": q.generators().iter().map(write_vector).collect::<Vec<_>>(),
    })
}

fn read_quasilattice_body(field: Field, node: Node<'_>) -> Result<Quasilattice> {
    let dim = with_key(node, "dim", |n| n.usize())?;
    let gens = with_key(node, "generators", |g| each(g, |v| read_vector(field, v, Some(dim))))?;
    Quasilattice::new(field, dim, gens).map_err(|e| node.err(e.to_string()))
}

pub fn quasilattice_to_json(q: &Quasilattice, name: Option<&str>) -> Value {
    let mut v = quasilattice_body(q);
    v["schema_version"] = json!(SCHEMA_VERSION);
    v["kind"] = json!("quasilattice");
    v["field"] = write_field(q.field());
    if let Some(n) = name {
        v["name"] = json!(n);
    }
    v
}

pub fn quasilattice_from_json(text: &str) -> Result<Quasilattice> {
    let doc = Owned::parse(text)?;
    let root = doc.root();
    check_version(root)?;
    check_kind(root, "quasilattice")?;
    let field = read_field(root)?;
    read_quasilattice_body(field, root)
}

pub fn triple_to_json(t: &Triple, name: Option<&str>) -> Value {
    let halfspaces: Vec<Value> = t
        .polytope()
        .halfspaces()
        .iter()
        .zip(t.certificates())
        .map(|(h, c)| {
            json!({
                "normal": write_vector(&h.normal),
                "lambda": write_elem(&h.level),
                "certificate": write_ints(&c.coefficients),
            })
        })
        .collect();
    let mut v = json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "triple",
        "field": write_field(t.field()),
        "quasilattice": quasilattice_body(t.quasilattice()),
        "polytope": { "dim": t.n(), "halfspaces": halfspaces },
    });
    if let Some(n) = name {
        v["name"] = json!(n);
    }
    v
}

/// Parses a triple. Certificates are optional per facet; if any is absent
/// all are recomputed.
pub fn triple_from_json(text: &str) -> Result<Triple> {
    let doc = Owned::parse(text)?;
    let root = doc.root();
    check_version(root)?;
    check_kind(root, "triple")?;
    let field = read_field(root)?;
    let q = with_key(root, "quasilattice", |n| read_quasilattice_body(field, n))?;
    let (polytope, certs) = with_key(root, "polytope", |p| {
        let dim = with_key(p, "dim", |n| n.usize())?;
        let rows = with_key(p, "halfspaces", |hs| {
            each(hs, |h| {
                let normal = with_key(h, "normal", |n| read_vector(field, n, Some(dim)))?;
                let level = with_key(h, "lambda", |l| read_elem(field, l))?;
                let cert = with_opt_key(h, "certificate", |c| {
                    let xs = read_ints(c)?;
                    if xs.len() != q.len() {
                        return Err(c.err(format!("expected {} coefficients, found {}", q.len(), xs.len())));
                    }
                    Ok(MembershipCertificate { coefficients: xs })
                })?;
                Ok((HalfSpace::new(normal, level), cert))
            })
        })?;
        let (hs, certs): (Vec<_>, Vec<_>) = rows.into_iter().unzip();
        let poly = PolytopeH::new(field, dim, hs).map_err(|e| p.err(e.to_string()))?;
        let certs: Option<Vec<MembershipCertificate>> = certs.into_iter().collect();
        Ok((poly, certs))
    })?;
    Triple::new(polytope, q, certs)
}

pub fn name_of(text: &str) -> Option<String> {
    let v: Value = serde_json::from_str(text).ok()?;
    v.get("name")?.as_str().map(str::to_string)
}

fn group_to_json(g: &AbelianGroupInvariants) -> Value {
    json!({ "free_rank": g.free_rank, "torsion": write_ints(&g.torsion) })
}

fn group_from_json(node: Node<'_>) -> Result<AbelianGroupInvariants> {
    Ok(AbelianGroupInvariants {
        free_rank: with_key(node, "free_rank", |n| n.usize())?,
        torsion: with_key(node, "torsion", read_ints)?,
    })
}

fn vectors(vs: &[KVector]) -> Value {
    Value::Array(vs.iter().map(write_vector).collect())
}

pub fn presentation_to_json(p: &Presentation, field: Field) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "presentation",
        "field": write_field(field),
        "d": p.d,
        "n": p.n,
        "level_rows": p.level_rows.iter().map(|r| json!({
            "coefficients": write_vector(&r.coefficients),
            "constant": write_elem(&r.constant),
        })).collect::<Vec<_>>(),
        "cont_gens": vectors(&p.cont_gens),
        "disc_gens": vectors(&p.disc_gens),
        "component_group": group_to_json(&p.component_invariants),
    })
}

fn read_presentation(field: Field, node: Node<'_>) -> Result<Presentation> {
    let d = with_key(node, "d", |n| n.usize())?;
    let n = with_key(node, "n", |n| n.usize())?;
    let level_rows = with_key(node, "level_rows", |rows| {
        each(rows, |r| {
            Ok(LevelRow {
                coefficients: with_key(r, "coefficients", |c| read_vector(field, c, Some(d)))?,
                constant: with_key(r, "constant", |c| read_elem(field, c))?,
            })
        })
    })?;
    let cont_gens = with_key(node, "cont_gens", |g| each(g, |v| read_vector(field, v, Some(d))))?;
    let disc_gens = with_key(node, "disc_gens", |g| each(g, |v| read_vector(field, v, Some(d))))?;
    let component_invariants = with_key(node, "component_group", group_from_json)?;
    Ok(Presentation { d, n, level_rows, cont_gens, disc_gens, component_invariants })
}

pub fn presentation_from_json(text: &str) -> Result<Presentation> {
    let doc = Owned::parse(text)?;
    let root = doc.root();
    check_version(root)?;
    check_kind(root, "presentation")?;
    let field = read_field(root)?;
    read_presentation(field, root)
}

fn chart_to_json(c: &Chart) -> Value {
    json!({
        "vertex": {
            "point": write_vector(&c.vertex.point),
            "active_facets": c.vertex.active_facets,
        },
        "active": c.active,
        "domain": c.domain_ineqs.iter().map(|i| json!({
            "facet": i.facet,
            "coefficients": write_vector(&i.coefficients),
            "bound": write_elem(&i.bound),
        })).collect::<Vec<_>>(),
        "gamma_gens": vectors(&c.gamma_gens),
        "gamma_group": group_to_json(&c.gamma_invariants),
        "slots": c.slot_exprs.iter().map(|s| json!({
            "facet": s.facet,
            "row": s.row,
            "scale": write_elem(&s.scale),
        })).collect::<Vec<_>>(),
    })
}

fn read_chart(field: Field, node: Node<'_>) -> Result<Chart> {
    let vertex = with_key(node, "vertex", |v| {
        Ok(VertexData {
            point: with_key(v, "point", |p| read_vector(field, p, None))?,
            active_facets: with_key(v, "active_facets", |a| each(a, |i| i.usize()))?,
        })
    })?;
    let n = vertex.point.dim();
    Ok(Chart {
        active: with_key(node, "active", |a| each(a, |i| i.usize()))?,
        domain_ineqs: with_key(node, "domain", |d| {
            each(d, |i| {
                Ok(DomainIneq {
                    facet: with_key(i, "facet", |f| f.usize())?,
                    coefficients: with_key(i, "coefficients", |c| read_vector(field, c, Some(n)))?,
                    bound: with_key(i, "bound", |b| read_elem(field, b))?,
                })
            })
        })?,
        gamma_gens: with_key(node, "gamma_gens", |g| each(g, |v| read_vector(field, v, Some(n))))?,
        gamma_invariants: with_key(node, "gamma_group", group_from_json)?,
        slot_exprs: with_key(node, "slots", |s| {
            each(s, |x| {
                Ok(SlotExpr {
                    facet: with_key(x, "facet", |f| f.usize())?,
                    row: with_key(x, "row", |f| f.usize())?,
                    scale: with_key(x, "scale", |f| read_elem(field, f))?,
                })
            })
        })?,
        vertex,
    })
}

pub fn charts_to_json(charts: &[Chart], field: Field) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "kind": "charts",
        "field": write_field(field),
        "charts": charts.iter().map(chart_to_json).collect::<Vec<_>>(),
    })
}

pub fn charts_from_json(text: &str) -> Result<Vec<Chart>> {
    let doc = Owned::parse(text)?;
    let root = doc.root();
    check_version(root)?;
    check_kind(root, "charts")?;
    let field = read_field(root)?;
    with_key(root, "charts", |cs| each(cs, |c| read_chart(field, c)))
}

/// Presentation plus charts in one document.
pub fn report_to_json(p: &Presentation, charts: &[Chart], field: Field) -> Value {
    let mut v = presentation_to_json(p, field);
    v["kind"] = json!("report");
    v["charts"] = Value::Array(charts.iter().map(chart_to_json).collect());
    v
}

pub fn report_from_json(text: &str) -> Result<(Presentation, Vec<Chart>)> {
    let doc = Owned::parse(text)?;
    let root = doc.root();
    check_version(root)?;
    check_kind(root, "report")?;
    let field = read_field(root)?;
    let p = read_presentation(field, root)?;
    let charts = with_opt_key(root, "charts", |cs| each(cs, |c| read_chart(field, c)))?.unwrap_or_default();
    Ok((p, charts))
}

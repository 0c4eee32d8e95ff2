use std::fmt;

use serde_json::{json, Value};

use crate::lattice::AbelianGroupInvariants;
use crate::polytope::enumerate_vertices;

use super::triple::Triple;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChartKind {
    Manifold,
    Orbifold,
    Quasifold,
}

impl ChartKind {
    pub fn of(g: &AbelianGroupInvariants) -> Self {
        if g.is_trivial() {
            ChartKind::Manifold
        } else if g.is_finite() {
            ChartKind::Orbifold
        } else {
            ChartKind::Quasifold
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ChartKind::Manifold => "manifold",
            ChartKind::Orbifold => "orbifold",
            ChartKind::Quasifold => "quasifold",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GlobalKind {
    Smooth(ChartKind),
    /// Non-simple polytope; the worst local group type over all vertices.
    Stratified(ChartKind),
}

impl GlobalKind {
    pub fn name(self) -> String {
        match self {
            GlobalKind::Smooth(k) => k.name().to_string(),
            GlobalKind::Stratified(k) => format!("stratified-by-{}s", k.name()),
        }
    }
}

impl fmt::Display for GlobalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub simple: bool,
    /// The normals span a lattice.
    pub rational: bool,
    /// Local type at every vertex, in vertex order. For a non-simple
    /// polytope the group at a vertex is `Q / span_Z{active normals}`.
    pub vertex_kinds: Vec<ChartKind>,
    pub kind: GlobalKind,
}

impl Classification {
    /// E.g. "rational but not simple".
    pub fn summary(&self) -> String {
        let s = match (self.rational, self.simple) {
            (true, true) => "rational and simple",
            (true, false) => "rational but not simple",
            (false, true) => "simple but not rational",
            (false, false) => "neither rational nor simple",
        };
        format!("{s} ({})", self.kind)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": 1,
            "kind": self.kind.name(),
            "simple": self.simple,
            "rational": self.rational,
            "summary": self.summary(),
            "vertex_kinds": self.vertex_kinds.iter().map(|k| k.name()).collect::<Vec<_>>(),
        })
    }
}

pub fn classify(t: &Triple) -> Classification {
    let simple = t.is_simple();
    let rational = t.normal_span().is_discrete();
    let vertex_kinds: Vec<ChartKind> = enumerate_vertices(t.polytope())
        .iter()
        .map(|v| {
            let certs: Vec<_> = v.active_facets.iter().map(|&j| t.certificates()[j].clone()).collect();
            ChartKind::of(&t.quasilattice().quotient_by(&certs).invariants)
        })
        .collect();
    let worst = vertex_kinds.iter().copied().max().unwrap_or(ChartKind::Manifold);
    let kind = if simple { GlobalKind::Smooth(worst) } else { GlobalKind::Stratified(worst) };
    Classification { simple, rational, vertex_kinds, kind }
}

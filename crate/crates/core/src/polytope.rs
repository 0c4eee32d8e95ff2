//! Convex polytopes in half-space form over a quadratic field.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{k_rank, k_solve, Field, FieldElem, KMatrix, KVector};

/// `{μ : ⟨μ, normal⟩ ≥ level}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpace {
    pub normal: KVector,
    pub level: FieldElem,
}

impl HalfSpace {
    pub fn new(normal: KVector, level: FieldElem) -> Self {
        HalfSpace { normal, level }
    }

    /// `⟨μ, normal⟩ − level`; non-negative on the half-space.
    pub fn slack(&self, point: &KVector) -> FieldElem {
        point.dot(&self.normal) - &self.level
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeH {
    field: Field,
    dim: usize,
    halfspaces: Vec<HalfSpace>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexData {
    pub point: KVector,
    /// Sorted facet indices with equality at `point`.
    pub active_facets: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub bounded: bool,
    pub full_dim: bool,
    pub irredundant_facets: bool,
    pub simple: bool,
    /// Facets whose contact set is not of dimension `n − 1`.
    pub redundant: Vec<usize>,
    pub vertex_count: usize,
}

impl ValidationReport {
    /// Bounded, full-dimensional and irredundant (simplicity is separate).
    pub fn is_polytope(&self) -> bool {
        self.bounded && self.full_dim && self.irredundant_facets
    }

    fn failure(&self) -> Option<String> {
        if !self.bounded {
            Some("unbounded".into())
        } else if !self.full_dim {
            Some("not full-dimensional".into())
        } else if !self.irredundant_facets {
            Some(format!("redundant facets {:?}", self.redundant))
        } else {
            None
        }
    }
}

impl PolytopeH {
    pub fn new(field: Field, dim: usize, halfspaces: Vec<HalfSpace>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Dimension("polytope dimension must be positive".into()));
        }
        for (j, h) in halfspaces.iter().enumerate() {
            if h.normal.dim() != dim {
                return Err(Error::Dimension(format!(
                    "facet {j}: normal has length {}, expected {dim}",
                    h.normal.dim()
                )));
            }
            if let Some(x) = h.normal.iter().chain([&h.level]).find(|x| x.field() != field) {
                return Err(Error::FieldMismatch(x.field().d(), field.d()));
            }
            if h.normal.is_zero() {
                return Err(Error::InvalidPolytope(format!("facet {j}: zero normal")));
            }
        }
        Ok(PolytopeH { field, dim, halfspaces })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facet_count(&self) -> usize {
        self.halfspaces.len()
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn normals(&self) -> Vec<KVector> {
        self.halfspaces.iter().map(|h| h.normal.clone()).collect()
    }

    pub fn levels(&self) -> Vec<FieldElem> {
        self.halfspaces.iter().map(|h| h.level.clone()).collect()
    }

    pub fn contains(&self, point: &KVector) -> bool {
        self.halfspaces.iter().all(|h| !h.slack(point).is_negative())
    }

    fn active_set(&self, point: &KVector) -> Vec<usize> {
        (0..self.halfspaces.len())
            .filter(|&j| self.halfspaces[j].slack(point).is_zero())
            .collect()
    }

    /// Same polytope with every level multiplied by `c`.
    pub fn scale_levels(&self, c: &FieldElem) -> PolytopeH {
        let halfspaces = self
            .halfspaces
            .iter()
            .map(|h| HalfSpace::new(h.normal.clone(), &h.level * c))
            .collect();
        PolytopeH { halfspaces, ..self.clone() }
    }

    fn normal_matrix(&self, facets: &[usize]) -> KMatrix {
        let rows: Vec<KVector> = facets.iter().map(|&j| self.halfspaces[j].normal.clone()).collect();
        KMatrix::from_rows(self.field, self.dim, &rows).expect("validated dimensions")
    }
}

/// All vertices, ordered by their sorted active facet sets.
pub fn enumerate_vertices(p: &PolytopeH) -> Vec<VertexData> {
    enumerate_vertices_with(p, Exec::default())
}

pub fn enumerate_vertices_with(p: &PolytopeH, exec: Exec) -> Vec<VertexData> {
    let n = p.dim;
    let subsets: Vec<Vec<usize>> = (0..p.facet_count()).combinations(n).collect();
    let found = exec.filter_map(&subsets, |s| {
        let a = p.normal_matrix(s);
        let b = KVector::new(s.iter().map(|&j| p.halfspaces[j].level.clone()).collect());
        let sol = k_solve(&a, &b)?;
        if !sol.kernel.is_empty() || !p.contains(&sol.particular) {
            return None;
        }
        // only the lexicographically first spanning subset reports the vertex
        let active = p.active_set(&sol.particular);
        (first_spanning_subset(p, &active) == *s).then(|| VertexData {
            point: sol.particular,
            active_facets: active,
        })
    });
    let mut by_active: BTreeMap<Vec<usize>, VertexData> = BTreeMap::new();
    for v in found {
        by_active.entry(v.active_facets.clone()).or_insert(v);
    }
    by_active.into_values().collect()
}

fn first_spanning_subset(p: &PolytopeH, active: &[usize]) -> Vec<usize> {
    active
        .iter()
        .copied()
        .combinations(p.dim)
        .find(|s| k_rank(&p.normal_matrix(s)) == p.dim)
        .expect("a vertex has a spanning active subset")
}

/// Recession cone `{y : ⟨y, X_j⟩ ≥ 0 ∀j}` is trivial.
pub fn is_bounded(p: &PolytopeH) -> bool {
    let n = p.dim;
    let all: Vec<usize> = (0..p.facet_count()).collect();
    if k_rank(&p.normal_matrix(&all)) < n {
        return false;
    }
    // the cone is pointed; a nonzero cone has an extreme ray cut out by n−1 independent facets
    for s in (0..p.facet_count()).combinations(n - 1) {
        let a = p.normal_matrix(&s);
        let ker = if s.is_empty() {
            (0..n).map(|i| KVector::unit(p.field, n, i)).collect()
        } else {
            crate::field::kernel(&a)
        };
        if ker.len() != 1 {
            continue;
        }
        let y = &ker[0];
        for ray in [y.clone(), y.neg()] {
            if p.halfspaces.iter().all(|h| !ray.dot(&h.normal).is_negative()) {
                return false;
            }
        }
    }
    true
}

/// Some point with `⟨μ, X_j⟩ > λ_j` for every `j`, decided by Fourier–Motzkin
/// elimination on `⟨μ, X_j⟩ − ε ≥ λ_j`, `ε > 0`.
fn has_interior_point(p: &PolytopeH) -> bool {
    // each constraint: (coefficients on μ, coefficient on ε, bound)
    let mut rows: Vec<(Vec<FieldElem>, FieldElem, FieldElem)> = p
        .halfspaces
        .iter()
        .map(|h| (h.normal.to_vec(), -p.field.one(), h.level.clone()))
        .collect();
    for var in 0..p.dim {
        let (mut pos, mut neg, mut keep) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            match r.0[var].signum() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => keep.push(r),
            }
        }
        for (a, b) in pos.iter().cartesian_product(&neg) {
            // a.c > 0 > b.c: combine (−b.c)·a + a.c·b
            let fa = -&b.0[var];
            let fb = a.0[var].clone();
            let coeffs = a.0.iter().zip(&b.0).map(|(x, y)| x * &fa + y * &fb).collect();
            keep.push((coeffs, &a.1 * &fa + &b.1 * &fb, &a.2 * &fa + &b.2 * &fb));
        }
        keep.sort_by(|x, y| (&x.0, &x.1, &x.2).cmp(&(&y.0, &y.1, &y.2)));
        keep.dedup();
        rows = keep;
    }
    let mut lower: Option<FieldElem> = None;
    let mut upper: Option<FieldElem> = None;
    for (_, c, b) in rows {
        match c.signum() {
            0 if b.is_positive() => return false,
            0 => {}
            1 => {
                let l = b / c;
                lower = Some(lower.map_or(l.clone(), |x| x.max(l)));
            }
            _ => {
                let u = b / c;
                upper = Some(upper.map_or(u.clone(), |x| x.min(u)));
            }
        }
    }
    match (lower, upper) {
        (_, Some(u)) if !u.is_positive() => false,
        (Some(l), Some(u)) => l <= u,
        _ => true,
    }
}

/// Dimension of the affine hull of a point set.
pub fn affine_dim(field: Field, dim: usize, points: &[&KVector]) -> usize {
    match points.split_first() {
        None => 0,
        Some((first, rest)) => {
            if rest.is_empty() {
                return 0;
            }
            let diffs: Vec<KVector> = rest.iter().map(|q| q.sub(first)).collect();
            k_rank(&KMatrix::from_rows(field, dim, &diffs).expect("consistent dimensions"))
        }
    }
}

pub fn validate(p: &PolytopeH) -> ValidationReport {
    validate_with(p, Exec::default())
}

pub fn validate_with(p: &PolytopeH, exec: Exec) -> ValidationReport {
    let bounded = is_bounded(p);
    let vertices = enumerate_vertices_with(p, exec);
    let full_dim = if bounded {
        affine_dim(p.field, p.dim, &vertices.iter().map(|v| &v.point).collect_vec()) == p.dim
    } else {
        has_interior_point(p)
    };
    let redundant = redundant_facets(p, &vertices);
    ValidationReport {
        bounded,
        full_dim,
        irredundant_facets: redundant.is_empty(),
        simple: !vertices.is_empty() && vertices.iter().all(|v| v.active_facets.len() == p.dim),
        redundant,
        vertex_count: vertices.len(),
    }
}

fn redundant_facets(p: &PolytopeH, vertices: &[VertexData]) -> Vec<usize> {
    (0..p.facet_count())
        .filter(|j| {
            let contact: Vec<&KVector> = vertices
                .iter()
                .filter(|v| v.active_facets.contains(j))
                .map(|v| &v.point)
                .collect();
            contact.is_empty() || affine_dim(p.field, p.dim, &contact) != p.dim - 1
        })
        .collect()
}

/// Validated polytope or the reason it is not one.
pub fn ensure_polytope(p: &PolytopeH) -> Result<ValidationReport> {
    let report = validate(p);
    match report.failure() {
        Some(why) => Err(Error::InvalidPolytope(why)),
        None => Ok(report),
    }
}

/// Splits `p` along `⟨μ, x⟩ = λ`. Each half keeps the facets of `p` that
/// still support a facet, in their original order, followed by the new
/// facet (`(x, λ)` for the plus side, `(−x, −λ)` for the minus side).
pub fn cut(p: &PolytopeH, x: &KVector, lambda: &FieldElem) -> Result<(PolytopeH, PolytopeH)> {
    if x.dim() != p.dim {
        return Err(Error::Dimension(format!("cut normal has length {}, expected {}", x.dim(), p.dim)));
    }
    if x.is_zero() {
        return Err(Error::DegenerateCut);
    }
    let h = HalfSpace::new(x.clone(), lambda.clone());
    let vertices = enumerate_vertices(p);
    let signs: Vec<i8> = vertices.iter().map(|v| h.slack(&v.point).signum()).collect();
    if !(signs.contains(&1) && signs.contains(&-1)) {
        return Err(Error::DegenerateCut);
    }
    let plus = side(p, h.clone())?;
    let minus = side(p, HalfSpace::new(x.neg(), -lambda))?;
    Ok((plus, minus))
}

fn side(p: &PolytopeH, new: HalfSpace) -> Result<PolytopeH> {
    let mut hs = p.halfspaces.clone();
    hs.push(new.clone());
    let full = PolytopeH::new(p.field, p.dim, hs)?;
    let vertices = enumerate_vertices(&full);
    let redundant = redundant_facets(&full, &vertices);
    let mut kept: Vec<HalfSpace> = (0..p.facet_count())
        .filter(|j| !redundant.contains(j))
        .map(|j| p.halfspaces[j].clone())
        .collect();
    kept.push(new);
    let out = PolytopeH::new(p.field, p.dim, kept)?;
    ensure_polytope(&out)?;
    Ok(out)
}

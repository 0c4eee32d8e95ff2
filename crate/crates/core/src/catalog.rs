//! Built-in quasilattices and example triples.
//!
//! Golden-ratio examples use `D = 5`; the rational ones (sphere, orbisphere,
//! cube, tetrahedron, octahedron) use `D = 0`.

use crate::construction::Triple;
use crate::error::{Error, Result};
use crate::field::{Field, FieldElem, KVector};
use crate::polytope::{HalfSpace, PolytopeH};
use crate::quasilattice::Quasilattice;

const K: Field = Field::GOLDEN;

fn phi() -> FieldElem {
    K.phi()
}

fn n(x: i64) -> FieldElem {
    K.int(x)
}

fn vec2(a: FieldElem, b: FieldElem) -> KVector {
    KVector::new(vec![a, b])
}

fn vec3(a: FieldElem, b: FieldElem, c: FieldElem) -> KVector {
    KVector::new(vec![a, b, c])
}

/// The fifth roots of unity `v₀, …, v₄` in the basis `v₁ = (1,0)`,
/// `v₂ = (0,1)`, using `v_{k−1} + v_{k+1} = (φ−1) v_k`.
pub fn fifth_roots() -> [KVector; 5] {
    let p1 = phi() - n(1);
    [
        vec2(p1.clone(), n(-1)),
        vec2(n(1), n(0)),
        vec2(n(0), n(1)),
        vec2(n(-1), p1.clone()),
        vec2(-&p1, -&p1),
    ]
}

/// Z-span of the five fifth roots of unity.
pub fn pentagon() -> Quasilattice {
    Quasilattice::new(K, 2, fifth_roots().to_vec()).expect("spans")
}

/// The six five-fold axes `(0, ±1, φ)`, `(φ, 0, ±1)`, `(±1, φ, 0)`.
pub fn icosa_simple() -> Quasilattice {
    let gens = [1, -1]
        .into_iter()
        .flat_map(|s| cyclic(&vec3(n(0), n(s), phi())))
        .collect::<Vec<_>>();
    let gens = reorder_by_cycle(gens);
    Quasilattice::new(K, 3, gens).expect("spans")
}

/// The ten three-fold axes: `(1, ±1, ±1)` and the cyclic shifts of
/// `(0, φ, ±(φ−1))`.
pub fn icosa_body() -> Quasilattice {
    let p1 = phi() - n(1);
    let mut gens = vec![
        vec3(n(1), n(1), n(1)),
        vec3(n(1), n(-1), n(-1)),
        vec3(n(-1), n(1), n(-1)),
        vec3(n(-1), n(-1), n(1)),
    ];
    gens.extend(cyclic(&vec3(n(0), phi(), p1.clone())));
    gens.extend(cyclic(&vec3(n(0), phi(), -&p1)));
    Quasilattice::new(K, 3, gens).expect("spans")
}

/// `2φ·e_i` and the cyclic shifts of `(1, ±φ², ±φ)`.
pub fn icosa_face() -> Quasilattice {
    let two_phi = n(2) * phi();
    let phi2 = phi() * phi();
    let mut gens: Vec<KVector> = (0..3)
        .map(|i| {
            let mut v = vec![n(0), n(0), n(0)];
            v[i] = two_phi.clone();
            KVector::new(v)
        })
        .collect();
    for (s2, s3) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
        gens.extend(cyclic(&vec3(n(1), &phi2 * n(s2), phi() * n(s3))));
    }
    Quasilattice::new(K, 3, gens).expect("spans")
}

/// `Z^n` over `Q`.
pub fn integer_lattice(dim: usize) -> Quasilattice {
    Quasilattice::integer_lattice(Field::RATIONAL, dim)
}

/// `(a,b,c), (c,a,b), (b,c,a)`.
fn cyclic(v: &KVector) -> [KVector; 3] {
    let (a, b, c) = (v[0].clone(), v[1].clone(), v[2].clone());
    [vec3(a.clone(), b.clone(), c.clone()), vec3(c.clone(), a.clone(), b.clone()), vec3(b, c, a)]
}

// [s₁ shifts…, s₂ shifts…] → interleaved by shift
fn reorder_by_cycle(gens: Vec<KVector>) -> Vec<KVector> {
    let half = gens.len() / 2;
    (0..half).flat_map(|i| [gens[i].clone(), gens[half + i].clone()]).collect()
}

fn polytope(field: Field, dim: usize, facets: Vec<(KVector, FieldElem)>) -> PolytopeH {
    PolytopeH::new(field, dim, facets.into_iter().map(|(x, l)| HalfSpace::new(x, l)).collect())
        .expect("well-formed example")
}

/// The interval `[0, 1]` with normals `X₁ = t`, `X₂ = −s` in `sZ + tZ`.
pub fn quasisphere(s: FieldElem, t: FieldElem) -> Result<Triple> {
    let field = s.field();
    if !s.is_positive() || !t.is_positive() {
        return Err(Error::InvalidQuasilattice("s and t must be positive".into()));
    }
    let q = Quasilattice::new(field, 1, vec![KVector::new(vec![s.clone()]), KVector::new(vec![t.clone()])])?;
    let p = polytope(
        field,
        1,
        vec![(KVector::new(vec![t]), field.zero()), (KVector::new(vec![-&s]), -s)],
    );
    Triple::new(p, q, None)
}

/// The `(s, t) = (1, φ)` quasisphere.
pub fn golden_quasisphere() -> Triple {
    quasisphere(n(1), phi()).expect("valid")
}

/// `[0, 1]` over `Z` with normals `X₁ = q`, `X₂ = −p`.
pub fn orbisphere(p: i64, q: i64) -> Result<Triple> {
    let f = Field::RATIONAL;
    if p <= 0 || q <= 0 {
        return Err(Error::InvalidPolytope("p and q must be positive".into()));
    }
    let poly = polytope(
        f,
        1,
        vec![(KVector::from_ints(f, &[q]), f.zero()), (KVector::from_ints(f, &[-p]), f.int(-p))],
    );
    Triple::new(poly, integer_lattice(1), None)
}

pub fn sphere() -> Triple {
    orbisphere(1, 1).expect("valid")
}

/// Normals `(v₀, −v₁, v₂, −v₃)` with `λ = (−1, 0, 0, −1)`.
pub fn kite() -> Triple {
    let [v0, v1, v2, v3, _] = fifth_roots();
    let p = polytope(K, 2, vec![(v0, n(-1)), (v1.neg(), n(0)), (v2, n(0)), (v3.neg(), n(-1))]);
    Triple::new(p, pentagon(), None).expect("valid")
}

/// The kite's symmetry axis `⟨μ, −v₄⟩ = 0`, through the vertex on facets 2 and 3.
pub fn kite_axis() -> (KVector, FieldElem) {
    (fifth_roots()[4].neg(), n(0))
}

/// Rhombus with normals `(a, b, −a, −b)` and width `w` across both pairs of sides.
fn rhombus(a: KVector, b: KVector, w: FieldElem) -> Triple {
    let p = polytope(K, 2, vec![(a.clone(), n(0)), (b.clone(), n(0)), (a.neg(), -&w), (b.neg(), -w)]);
    Triple::new(p, pentagon(), None).expect("valid")
}

/// 72° rhombus: normals `v₀, v₁` at 72°; widths `φ` give unit-ratio edges
/// with the thin rhombus.
pub fn thick_rhombus() -> Triple {
    let [v0, v1, ..] = fifth_roots();
    rhombus(v0, v1, phi())
}

/// 36° rhombus: normals `v₀, v₂` at 144°.
pub fn thin_rhombus() -> Triple {
    let [v0, _, v2, ..] = fifth_roots();
    rhombus(v0, v2, n(1))
}

/// The diagonal through the vertex at the origin.
pub fn rhombus_diagonal(t: &Triple) -> (KVector, FieldElem) {
    let hs = t.polytope().halfspaces();
    (hs[0].normal.sub(&hs[1].normal), t.field().zero())
}

fn cross(a: &KVector, b: &KVector) -> KVector {
    vec3(
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    )
}

/// Parallelepiped spanned by three edges at the origin. Facet `i` and
/// `i + 3` are the opposite faces transverse to edge `i`.
fn parallelepiped(edges: [KVector; 3]) -> Triple {
    let mut inner = Vec::new();
    let mut outer = Vec::new();
    for i in 0..3 {
        let mut nrm = cross(&edges[(i + 1) % 3], &edges[(i + 2) % 3]);
        if nrm.dot(&edges[i]).is_negative() {
            nrm = nrm.neg();
        }
        let w = nrm.dot(&edges[i]);
        outer.push((nrm.neg(), -w));
        inner.push((nrm, n(0)));
    }
    inner.extend(outer);
    Triple::new(polytope(K, 3, inner), icosa_face(), None).expect("valid")
}

/// Edges `(0,1,φ), (1,φ,0), (φ,0,1)`.
pub fn prolate_rhombohedron() -> Triple {
    parallelepiped([vec3(n(0), n(1), phi()), vec3(n(1), phi(), n(0)), vec3(phi(), n(0), n(1))])
}

/// Edges `(0,1,φ), (−1,−φ,0), (φ,0,−1)`.
pub fn oblate_rhombohedron() -> Triple {
    parallelepiped([vec3(n(0), n(1), phi()), vec3(n(-1), -phi(), n(0)), vec3(phi(), n(0), n(-1))])
}

/// Unit cube over `Z³`: normals `e₁, e₂, e₃, −e₁, −e₂, −e₃`.
pub fn cube() -> Triple {
    let f = Field::RATIONAL;
    let mut facets = Vec::new();
    for (s, l) in [(1, 0), (-1, -1)] {
        for i in 0..3 {
            let mut v = [0i64; 3];
            v[i] = s;
            facets.push((KVector::from_ints(f, &v), f.int(l)));
        }
    }
    Triple::new(polytope(f, 3, facets), integer_lattice(3), None).expect("valid")
}

fn sign_vectors(even: Option<bool>) -> Vec<[i64; 3]> {
    let mut out = Vec::new();
    for a in [1, -1] {
        for b in [1, -1] {
            for c in [1, -1] {
                let neg = [a, b, c].iter().filter(|&&x| x < 0).count();
                if even.is_none_or(|e| (neg % 2 == 0) == e) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// Regular tetrahedron `⟨μ, p⟩ ≥ −1` for `p ∈ {(1,1,1), (1,−1,−1), (−1,1,−1), (−1,−1,1)}`,
/// over the lattice these normals span.
pub fn tetrahedron() -> Triple {
    let f = Field::RATIONAL;
    let normals: Vec<KVector> = sign_vectors(Some(true)).iter().map(|v| KVector::from_ints(f, v)).collect();
    let q = Quasilattice::new(f, 3, normals.clone()).expect("spans");
    let p = polytope(f, 3, normals.into_iter().map(|x| (x, f.int(-1))).collect());
    Triple::new(p, q, None).expect("valid")
}

/// Regular octahedron `⟨μ, (±1,±1,±1)⟩ ≥ −1`, over the lattice its normals span.
pub fn octahedron() -> Triple {
    let f = Field::RATIONAL;
    let normals: Vec<KVector> = sign_vectors(None).iter().map(|v| KVector::from_ints(f, v)).collect();
    let q = Quasilattice::new(f, 3, normals.clone()).expect("spans");
    let p = polytope(f, 3, normals.into_iter().map(|x| (x, f.int(-1))).collect());
    Triple::new(p, q, None).expect("valid")
}

/// Regular dodecahedron with face normals `±` the five-fold axes.
pub fn dodecahedron() -> Triple {
    let q = icosa_simple();
    let level = -(phi() * phi());
    let facets = q
        .generators()
        .iter()
        .flat_map(|g| [(g.clone(), level.clone()), (g.neg(), level.clone())])
        .collect();
    Triple::new(polytope(K, 3, facets), q, None).expect("valid")
}

/// Regular icosahedron with face normals `±` the three-fold axes.
pub fn icosahedron() -> Triple {
    let q = icosa_body();
    let level = -(phi() * phi());
    let facets = q
        .generators()
        .iter()
        .flat_map(|g| [(g.clone(), level.clone()), (g.neg(), level.clone())])
        .collect();
    Triple::new(polytope(K, 3, facets), q, None).expect("valid")
}

pub const EXAMPLES: &[&str] = &[
    "quasisphere",
    "orbisphere",
    "sphere",
    "kite",
    "thick_rhombus",
    "thin_rhombus",
    "prolate_rhombohedron",
    "oblate_rhombohedron",
    "cube",
    "tetrahedron",
    "octahedron",
    "dodecahedron",
    "icosahedron",
];

pub const QUASILATTICES: &[&str] = &[
    "pentagon",
    "icosa_simple",
    "icosa_body",
    "icosa_face",
    "integer_lattice_1",
    "integer_lattice_2",
    "integer_lattice_3",
];

/// Example triple by name. `quasisphere` is `(s, t) = (1, φ)` and
/// `orbisphere` is `(p, q) = (2, 3)`.
pub fn example(name: &str) -> Result<Triple> {
    Ok(match name {
        "quasisphere" => golden_quasisphere(),
        "orbisphere" => orbisphere(2, 3)?,
        "sphere" => sphere(),
        "kite" => kite(),
        "thick_rhombus" => thick_rhombus(),
        "thin_rhombus" => thin_rhombus(),
        "prolate_rhombohedron" => prolate_rhombohedron(),
        "oblate_rhombohedron" => oblate_rhombohedron(),
        "cube" => cube(),
        "tetrahedron" => tetrahedron(),
        "octahedron" => octahedron(),
        "dodecahedron" => dodecahedron(),
        "icosahedron" => icosahedron(),
        _ => return Err(Error::parse("example", format!("unknown example {name:?}"))),
    })
}

pub fn quasilattice(name: &str) -> Result<Quasilattice> {
    Ok(match name {
        "pentagon" => pentagon(),
        "icosa_simple" => icosa_simple(),
        "icosa_body" => icosa_body(),
        "icosa_face" => icosa_face(),
        _ => match name.strip_prefix("integer_lattice_").and_then(|d| d.parse::<usize>().ok()) {
            Some(d) if d > 0 => integer_lattice(d),
            _ => return Err(Error::parse("quasilattice", format!("unknown quasilattice {name:?}"))),
        },
    })
}

/// Cut hyperplane along the symmetry axis of a tile example.
pub fn axis_of(name: &str) -> Result<(KVector, FieldElem)> {
    match name {
        "kite" => Ok(kite_axis()),
        "thick_rhombus" => Ok(rhombus_diagonal(&thick_rhombus())),
        "thin_rhombus" => Ok(rhombus_diagonal(&thin_rhombus())),
        "sphere" => {
            let f = Field::RATIONAL;
            Ok((KVector::from_ints(f, &[1]), f.rational(crate::field::rational::rat(1, 2))))
        }
        _ => Err(Error::parse("axis-of", format!("no symmetry axis recorded for {name:?}"))),
    }
}

/// The shipped JSON document for an example triple or quasilattice.
pub fn shipped_json(name: &str) -> Option<&'static str> {
    Some(match name {
        "quasisphere" => include_str!("../data/quasisphere.json"),
        "orbisphere" => include_str!("../data/orbisphere.json"),
        "sphere" => include_str!("../data/sphere.json"),
        "kite" => include_str!("../data/kite.json"),
        "thick_rhombus" => include_str!("../data/thick_rhombus.json"),
        "thin_rhombus" => include_str!("../data/thin_rhombus.json"),
        "prolate_rhombohedron" => include_str!("../data/prolate_rhombohedron.json"),
        "oblate_rhombohedron" => include_str!("../data/oblate_rhombohedron.json"),
        "cube" => include_str!("../data/cube.json"),
        "tetrahedron" => include_str!("../data/tetrahedron.json"),
        "octahedron" => include_str!("../data/octahedron.json"),
        "dodecahedron" => include_str!("../data/dodecahedron.json"),
        "icosahedron" => include_str!("../data/icosahedron.json"),
        "pentagon" => include_str!("../data/pentagon.json"),
        "icosa_simple" => include_str!("../data/icosa_simple.json"),
        "icosa_body" => include_str!("../data/icosa_body.json"),
        "icosa_face" => include_str!("../data/icosa_face.json"),
        "integer_lattice_1" => include_str!("../data/integer_lattice_1.json"),
        "integer_lattice_2" => include_str!("../data/integer_lattice_2.json"),
        "integer_lattice_3" => include_str!("../data/integer_lattice_3.json"),
        _ => return None,
    })
}

//! Merging mirror half-tiles back into whole tiles.

use std::collections::HashMap;

use super::cyclo::Cyclo;
use super::patch::Patch;
use super::tile::{HalfTile, Kind, System};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairMode {
    KiteDart,
    Rhombus,
}

impl PairMode {
    pub fn of(system: System) -> PairMode {
        match system {
            System::P2 => PairMode::KiteDart,
            System::P3 => PairMode::Rhombus,
        }
    }

    pub fn system(self) -> System {
        match self {
            PairMode::KiteDart => System::P2,
            PairMode::Rhombus => System::P3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Kite,
    Dart,
    Thick,
    Thin,
}

impl Shape {
    pub fn name(self) -> &'static str {
        match self {
            Shape::Kite => "kite",
            Shape::Dart => "dart",
            Shape::Thick => "thick",
            Shape::Thin => "thin",
        }
    }

    fn of(mode: PairMode, kind: Kind) -> Shape {
        match (mode, kind) {
            (PairMode::KiteDart, Kind::Acute) => Shape::Kite,
            (PairMode::KiteDart, Kind::Obtuse) => Shape::Dart,
            (PairMode::Rhombus, Kind::Acute) => Shape::Thin,
            (PairMode::Rhombus, Kind::Obtuse) => Shape::Thick,
        }
    }
}

/// A whole tile; vertices in boundary order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WholeTile {
    pub shape: Shape,
    pub v: [Cyclo; 4],
}

#[derive(Clone, Debug, Default)]
pub struct Pairing {
    pub tiles: Vec<WholeTile>,
    pub leftovers: Vec<HalfTile>,
}

fn key(t: &HalfTile, system: System) -> (Kind, Cyclo, Cyclo) {
    let (a, b) = t.pairing_edge(system);
    (t.kind, a.clone(), b.clone())
}

/// Pairs mirror halves across their pairing edge. Tiles come out in the
/// order of their first half among the leaves; unpaired halves are kept
/// in leaf order.
pub fn pair_halves(leaves: &[&HalfTile], mode: PairMode) -> Pairing {
    let system = mode.system();
    let mut index: HashMap<(Kind, Cyclo, Cyclo), Vec<usize>> = HashMap::new();
    for (i, t) in leaves.iter().enumerate() {
        index.entry(key(t, system)).or_default().push(i);
    }
    let (pi, pj) = system.pairing_edge();
    let other = 3 - pi - pj;
    let mut partner: Vec<Option<usize>> = vec![None; leaves.len()];
    for (i, t) in leaves.iter().enumerate() {
        if partner[i].is_some() {
            continue;
        }
        if let Some(cands) = index.get(&key(t, system)) {
            if let Some(&j) = cands
                .iter()
                .find(|&&j| j != i && partner[j].is_none() && leaves[j].chirality != t.chirality)
            {
                partner[i] = Some(j);
                partner[j] = Some(i);
            }
        }
    }
    let mut out = Pairing::default();
    for (i, t) in leaves.iter().enumerate() {
        match partner[i] {
            Some(j) if j > i => {
                let u = leaves[j];
                out.tiles.push(WholeTile {
                    shape: Shape::of(mode, t.kind),
                    v: [t.v[other].clone(), t.v[pi].clone(), u.v[other].clone(), t.v[pj].clone()],
                });
            }
            Some(_) => {}
            None => out.leftovers.push((*t).clone()),
        }
    }
    out
}

pub fn pair_tiles(p: &Patch, mode: PairMode) -> Pairing {
    pair_halves(&p.leaves(), mode)
}

/// The half-tile together with its mirror image across the pairing edge.
pub fn mirror_double(t: &HalfTile, system: System) -> [HalfTile; 2] {
    let (i, j) = system.pairing_edge();
    let k = 3 - i - j;
    let (a, b) = (&t.v[i], &t.v[j]);
    // reflection across the line ab: z ↦ a + (b−a)/conj(b−a) · conj(z−a)
    // = a + u² conj(z − a) with u a unit along ab; the pairing edges in
    // use have directions that are tenth roots of unity times a real.
    let d = b.sub(a);
    let dir = unit_direction(&d);
    let z = t.v[k].sub(a);
    let image = a.add(&dir.mul(&dir).mul(&z.conj()));
    let mut v = t.v.clone();
    v[k] = image;
    [t.clone(), HalfTile::new(t.kind, v)]
}

fn unit_direction(d: &Cyclo) -> Cyclo {
    for k in 0..10 {
        let u = Cyclo::unit_tenth(k);
        // d · conj(u) real and positive
        let w = d.mul(&u.conj());
        if w.im_sign() == 0 {
            if let Some(r) = w.real_value() {
                if r.is_positive() {
                    return u;
                }
            }
        }
    }
    panic!("pairing edge is not along a tenth root of unity")
}

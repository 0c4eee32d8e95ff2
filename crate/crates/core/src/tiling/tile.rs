//! Robinson half-tiles and their substitution rules.

use crate::field::{Field, FieldElem};

use super::cyclo::{orientation, Cyclo};

/// `Acute`: 36°-72°-72° (half-kite in P2, half-thin rhombus in P3).
/// `Obtuse`: 108°-36°-36° (half-dart in P2, half-thick rhombus in P3).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Acute,
    Obtuse,
}

/// `Left` when the vertices, in label order, run counter-clockwise.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chirality {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum System {
    /// Kites and darts; halves pair across the leg `v[0]–v[1]`.
    P2,
    /// Rhombuses; halves pair across the base `v[1]–v[2]`.
    P3,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Acute => "acute",
            Kind::Obtuse => "obtuse",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        match s {
            "acute" => Some(Kind::Acute),
            "obtuse" => Some(Kind::Obtuse),
            _ => None,
        }
    }
}

impl Chirality {
    pub fn name(self) -> &'static str {
        match self {
            Chirality::Left => "left",
            Chirality::Right => "right",
        }
    }

    pub fn parse(s: &str) -> Option<Chirality> {
        match s {
            "left" => Some(Chirality::Left),
            "right" => Some(Chirality::Right),
            _ => None,
        }
    }

    pub fn flip(self) -> Chirality {
        match self {
            Chirality::Left => Chirality::Right,
            Chirality::Right => Chirality::Left,
        }
    }
}

impl System {
    pub fn name(self) -> &'static str {
        match self {
            System::P2 => "p2",
            System::P3 => "p3",
        }
    }

    pub fn parse(s: &str) -> Option<System> {
        match s.to_ascii_lowercase().as_str() {
            "p2" => Some(System::P2),
            "p3" => Some(System::P3),
            _ => None,
        }
    }

    /// Label positions of the edge along which mirror halves pair.
    pub fn pairing_edge(self) -> (usize, usize) {
        match self {
            System::P2 => (0, 1),
            System::P3 => (1, 2),
        }
    }
}

/// A Robinson triangle. `v[0]` is the apex (the vertex between the two
/// equal sides).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfTile {
    pub kind: Kind,
    pub chirality: Chirality,
    pub v: [Cyclo; 3],
}

impl HalfTile {
    /// Chirality is read off the vertex order.
    pub fn new(kind: Kind, v: [Cyclo; 3]) -> HalfTile {
        let chirality = if orientation(&v[0], &v[1], &v[2]) > 0 { Chirality::Left } else { Chirality::Right };
        HalfTile { kind, chirality, v }
    }

    pub fn scale(&self) -> u32 {
        self.v[0].scale()
    }

    /// Squared side lengths `|v0v1|², |v0v2|², |v1v2|²`.
    pub fn side_lengths_sq(&self) -> [FieldElem; 3] {
        [
            self.v[1].sub(&self.v[0]).norm_sq(),
            self.v[2].sub(&self.v[0]).norm_sq(),
            self.v[2].sub(&self.v[1]).norm_sq(),
        ]
    }

    /// Isosceles with apex `v[0]`, base:leg ratio `1/φ` (acute) or `φ`
    /// (obtuse), and orientation matching the stored chirality.
    pub fn is_well_formed(&self) -> bool {
        let k = Field::GOLDEN;
        let [l1, l2, b] = self.side_lengths_sq();
        let phi2 = k.phi() * k.phi();
        let shape = l1 == l2
            && !l1.is_zero()
            && match self.kind {
                Kind::Acute => &b * &phi2 == l1,
                Kind::Obtuse => b == &l1 * &phi2,
            };
        let o = orientation(&self.v[0], &self.v[1], &self.v[2]);
        let chir = match self.chirality {
            Chirality::Left => o > 0,
            Chirality::Right => o < 0,
        };
        shape && chir
    }

    /// The edge shared with the mirror half of the same whole tile.
    pub fn pairing_edge(&self, system: System) -> (&Cyclo, &Cyclo) {
        let (i, j) = system.pairing_edge();
        (&self.v[i], &self.v[j])
    }

    /// Signed area in the float projection.
    pub fn area_f64(&self) -> f64 {
        let [a, b, c] = self.v.clone().map(|p| p.to_complex());
        0.5 * ((b.0 - a.0) * (c.1 - a.1) - (c.0 - a.0) * (b.1 - a.1))
    }

    /// Mirror image under complex conjugation.
    pub fn conjugate(&self) -> HalfTile {
        HalfTile::new(self.kind, self.v.clone().map(|p| p.conj()))
    }

    /// One substitution step. Children are written at the next scale, where
    /// the parent's vertices become `φ·v`.
    pub fn subdivide(&self, system: System) -> Vec<HalfTile> {
        let [a, b, c] = &self.v;
        let (la, lb, lc) = (a.lift(), b.lift(), c.lift());
        // p + (q − p)/φ written one scale up has raw coefficients φ·p + q − p
        let toward = |p: &Cyclo, q: &Cyclo| -> Cyclo {
            Cyclo::from_big(p.times_phi().add(q).sub(p).coefficients().clone(), p.scale() + 1)
        };
        let t = |kind, x: &Cyclo, y: &Cyclo, z: &Cyclo| HalfTile::new(kind, [x.clone(), y.clone(), z.clone()]);
        match (system, self.kind) {
            (System::P2, Kind::Acute) => {
                let x = toward(b, a);
                let y = toward(a, c);
                vec![t(Kind::Obtuse, &x, &la, &y), t(Kind::Acute, &lb, &y, &x), t(Kind::Acute, &lb, &y, &lc)]
            }
            (System::P2, Kind::Obtuse) => {
                let z = toward(c, b);
                vec![t(Kind::Obtuse, &z, &lb, &la), t(Kind::Acute, &lc, &z, &la)]
            }
            (System::P3, Kind::Acute) => {
                let p = toward(a, b);
                vec![t(Kind::Acute, &lc, &p, &lb), t(Kind::Obtuse, &p, &lc, &la)]
            }
            (System::P3, Kind::Obtuse) => {
                let q = toward(b, a);
                let r = toward(b, c);
                vec![t(Kind::Obtuse, &r, &lc, &la), t(Kind::Obtuse, &q, &r, &lb), t(Kind::Acute, &r, &q, &la)]
            }
        }
    }
}

/// Default seeds: the acute half-tile with apex at the origin, axis along
/// the positive real axis, and legs of length `φ` (P2) or `1` (P3).
pub fn seed(system: System, kind: Kind) -> HalfTile {
    let phi = Cyclo::phi();
    let r = |k: i64| Cyclo::unit_tenth(k);
    match (system, kind) {
        // legs φ, base 1
        (System::P2, Kind::Acute) => HalfTile::new(kind, [Cyclo::zero(), phi.clone(), phi.mul(&r(1))]),
        // legs 1, base φ
        (System::P2, Kind::Obtuse) => HalfTile::new(kind, [Cyclo::zero(), Cyclo::one(), r(3)]),
        // legs 1, base 1/φ
        (System::P3, Kind::Acute) => HalfTile::new(kind, [Cyclo::zero(), Cyclo::one(), r(1)]),
        (System::P3, Kind::Obtuse) => HalfTile::new(kind, [Cyclo::zero(), Cyclo::one(), r(3)]),
    }
}

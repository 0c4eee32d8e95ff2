//! Penrose P2/P3 substitution on exact cyclotomic coordinates.

pub mod cyclo;
pub mod pair;
pub mod patch;
pub mod svg;
pub mod tile;

pub use cyclo::{orientation, Cyclo};
pub use pair::{mirror_double, pair_halves, pair_tiles, PairMode, Pairing, Shape, WholeTile};
pub use patch::{check_patch, children_tile_parent, deflate, deflate_with, inflate, recurrence_counts, Node, Patch};
pub use svg::{render_star, render_svg, Style};
pub use tile::{seed, Chirality, HalfTile, Kind, System};

use crate::catalog;
use crate::construction::Triple;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TileKind {
    Kite,
    ThickRhombus,
    ThinRhombus,
    ProlateRhombohedron,
    OblateRhombohedron,
}

impl TileKind {
    pub const ALL: [TileKind; 5] = [
        TileKind::Kite,
        TileKind::ThickRhombus,
        TileKind::ThinRhombus,
        TileKind::ProlateRhombohedron,
        TileKind::OblateRhombohedron,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TileKind::Kite => "kite",
            TileKind::ThickRhombus => "thick_rhombus",
            TileKind::ThinRhombus => "thin_rhombus",
            TileKind::ProlateRhombohedron => "prolate_rhombohedron",
            TileKind::OblateRhombohedron => "oblate_rhombohedron",
        }
    }

    pub fn parse(s: &str) -> Option<TileKind> {
        TileKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

/// The shipped triple for a tile shape.
pub fn tile_triple(kind: TileKind) -> Triple {
    match kind {
        TileKind::Kite => catalog::kite(),
        TileKind::ThickRhombus => catalog::thick_rhombus(),
        TileKind::ThinRhombus => catalog::thin_rhombus(),
        TileKind::ProlateRhombohedron => catalog::prolate_rhombohedron(),
        TileKind::OblateRhombohedron => catalog::oblate_rhombohedron(),
    }
}

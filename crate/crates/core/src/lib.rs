//! Exact toric quasifold presentations.
//!
//! A [`Triple`](construction::Triple) is a convex polytope over `Q(√D)`, a
//! quasilattice, and integer certificates that each facet normal lies in the
//! quasilattice. From it the crate computes the level-set equations, the
//! cutting group, and a chart with its countable group at every vertex.
//! The [`tiling`] module generates Penrose half-tile patches over `Z[ζ₅]`.

pub mod catalog;
pub mod construction;
pub mod error;
pub mod exec;
pub mod field;
pub mod io;
pub mod lattice;
pub mod polytope;
pub mod quasilattice;
pub mod tiling;

pub use error::{Error, Result};
pub use exec::Exec;

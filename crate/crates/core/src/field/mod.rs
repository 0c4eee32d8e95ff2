//! Exact arithmetic in Q(√D) and dense linear algebra over it.

mod elem;
mod linalg;
pub mod rational;

pub use elem::{Field, FieldElem};
pub use linalg::{echelon_basis, k_rank, k_solve, kernel, same_span, KMatrix, KSolution, KVector};
pub use rational::Rational;

//! Integer matrices, normal forms and abelian quotients.

mod group;
mod matrix;
mod normal_form;

pub use group::{
    hnf_nonzero, int_solve, integer_kernel, quotient_invariants, saturate, AbelianGroupInvariants,
    QuotientMap,
};
pub use matrix::IntMatrix;
pub use normal_form::{ext_gcd, hnf, snf, SmithDecomposition};

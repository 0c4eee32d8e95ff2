use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{k_rank, k_solve, kernel, FieldElem, KMatrix, KVector};
use crate::lattice::AbelianGroupInvariants;

use super::classify::classify;
use super::triple::Triple;

/// `Σ_j coefficients_j |z_j|² = constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelRow {
    pub coefficients: KVector,
    pub constant: FieldElem,
}

/// Level set in `C^d` and the cutting group `N ⊂ T^d` of a triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub d: usize,
    pub n: usize,
    pub level_rows: Vec<LevelRow>,
    /// Echelon basis of `ker π`: exponent directions of the identity component.
    pub cont_gens: Vec<KVector>,
    /// Exponents of component-group representatives, read mod `Z^d`.
    pub disc_gens: Vec<KVector>,
    pub component_invariants: AbelianGroupInvariants,
}

/// The `n × d` matrix whose columns are the normals.
pub fn pi_matrix(t: &Triple) -> KMatrix {
    KMatrix::from_columns(t.field(), t.n(), &t.normals()).expect("validated dimensions")
}

/// Fractional parts, entry by entry.
pub(crate) fn fract_vec(v: &KVector) -> KVector {
    KVector::new(v.iter().map(FieldElem::fract).collect())
}

pub fn build_presentation(t: &Triple) -> Result<Presentation> {
    if !t.is_simple() {
        return Err(Error::Refused(Box::new(classify(t))));
    }
    let pi = pi_matrix(t);
    if k_rank(&pi) != t.n() {
        return Err(Error::DegenerateTriple("normals do not span".into()));
    }
    let cont_gens = kernel(&pi);
    let lambdas = KVector::new(t.polytope().levels());
    let level_rows = cont_gens
        .iter()
        .map(|g| {
            if g.is_zero() {
                return Err(Error::InvariantBreach("level row with zero coefficients".into()));
            }
            Ok(LevelRow { coefficients: g.clone(), constant: -g.dot(&lambdas) })
        })
        .collect::<Result<Vec<_>>>()?;

    let q = t.quasilattice();
    let disc_gens = q
        .quotient_generators(t.certificates())
        .into_iter()
        .map(|i| {
            let sol = k_solve(&pi, &q.generators()[i]).expect("normals span");
            fract_vec(&sol.particular)
        })
        .collect();
    let component_invariants = t.quasilattice().quotient_by(t.certificates()).invariants;
    Ok(Presentation { d: t.d(), n: t.n(), level_rows, cont_gens, disc_gens, component_invariants })
}

/// Whether `θ` lies in `Z^d + ker π`, i.e. `exp(θ)` is in the identity
/// component of `N`.
pub fn in_identity_component(t: &Triple, theta: &KVector) -> bool {
    let w = pi_matrix(t).mul_vec(theta);
    t.normal_span().member(&w).is_some()
}

/// Whether `exp(θ) ∈ N`, i.e. `πθ ∈ Q`.
pub fn in_cutting_group(t: &Triple, theta: &KVector) -> bool {
    let w = pi_matrix(t).mul_vec(theta);
    t.quasilattice().member(&w).is_some()
}

/// `Σ_j coefficients_j · m_j` for each row, minus its constant; all zero on the level set.
pub fn level_residuals(p: &Presentation, moduli: &[FieldElem]) -> Vec<FieldElem> {
    let m = KVector::new(moduli.to_vec());
    p.level_rows.iter().map(|r| r.coefficients.dot(&m) - &r.constant).collect()
}

/// The integer certificate for `πθ` when `exp(θ) ∈ N`.
pub fn cutting_certificate(t: &Triple, theta: &KVector) -> Option<Vec<BigInt>> {
    let w = pi_matrix(t).mul_vec(theta);
    t.quasilattice().member(&w).map(|c| c.coefficients)
}

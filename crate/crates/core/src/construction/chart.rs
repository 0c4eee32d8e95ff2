use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::field::{k_solve, FieldElem, KMatrix, KVector};
use crate::lattice::AbelianGroupInvariants;
use crate::polytope::{enumerate_vertices_with, VertexData};

use super::classify::classify;
use super::presentation::fract_vec;
use super::triple::Triple;

/// `Σ_k coefficients_k |z_{j_k}|² < bound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainIneq {
    pub facet: usize,
    pub coefficients: KVector,
    pub bound: FieldElem,
}

/// Slot `facet` of the chart map is `scale · √(bound − Σ c_k |z_{j_k}|²)`,
/// with the radicand taken from `domain_ineqs[row]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotExpr {
    pub facet: usize,
    pub row: usize,
    pub scale: FieldElem,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chart {
    pub vertex: VertexData,
    pub active: Vec<usize>,
    pub domain_ineqs: Vec<DomainIneq>,
    /// Angle coordinates of the chart-group generators, read mod `Z^n`.
    pub gamma_gens: Vec<KVector>,
    pub gamma_invariants: AbelianGroupInvariants,
    pub slot_exprs: Vec<SlotExpr>,
}

impl Chart {
    /// `|z_j|²` for every facet from the moduli `|z_{j_k}|²` of the chart
    /// coordinates (all zero at the vertex).
    pub fn lift_moduli(&self, moduli: &[FieldElem]) -> Vec<FieldElem> {
        assert_eq!(moduli.len(), self.active.len(), "one modulus per chart coordinate");
        let d = self.active.len() + self.domain_ineqs.len();
        let field = self.vertex.point[0].field();
        let m = KVector::new(moduli.to_vec());
        let mut out = vec![field.zero(); d];
        for (k, &j) in self.active.iter().enumerate() {
            out[j] = moduli[k].clone();
        }
        for (ineq, slot) in self.domain_ineqs.iter().zip(&self.slot_exprs) {
            let radicand = &ineq.bound - ineq.coefficients.dot(&m);
            out[slot.facet] = &slot.scale * &slot.scale * radicand;
        }
        out
    }

    /// Whether the moduli lie in the chart domain.
    pub fn in_domain(&self, moduli: &[FieldElem]) -> bool {
        let m = KVector::new(moduli.to_vec());
        moduli.iter().all(|x| !x.is_negative())
            && self.domain_ineqs.iter().all(|i| i.coefficients.dot(&m) < i.bound)
    }
}

pub fn build_charts(t: &Triple) -> Result<Vec<Chart>> {
    build_charts_with(t, Exec::default())
}

pub fn build_charts_with(t: &Triple, exec: Exec) -> Result<Vec<Chart>> {
    if !t.is_simple() {
        return Err(Error::Refused(Box::new(classify(t))));
    }
    let vertices = enumerate_vertices_with(t.polytope(), exec);
    exec.map(&vertices, |v| chart_at(t, v)).into_iter().collect()
}

fn chart_at(t: &Triple, v: &VertexData) -> Result<Chart> {
    let field = t.field();
    let n = t.n();
    let normals = t.normals();
    let levels = t.polytope().levels();
    let active = v.active_facets.clone();
    let a_rows: Vec<KVector> = active.iter().map(|&j| normals[j].clone()).collect();
    let a = KMatrix::from_rows(field, n, &a_rows)?;
    let at = a.transpose();

    // ⟨u_k, X_{j_l}⟩ = δ_kl, i.e. A u_k = e_k
    let dual: Vec<KVector> = (0..n)
        .map(|k| {
            k_solve(&a, &KVector::unit(field, n, k))
                .map(|s| s.particular)
                .ok_or_else(|| Error::InvariantBreach("singular active normals".into()))
        })
        .collect::<Result<_>>()?;

    let mut domain_ineqs = Vec::new();
    let mut slot_exprs = Vec::new();
    for j in (0..t.d()).filter(|j| !active.contains(j)) {
        let coefficients = KVector::new(dual.iter().map(|u| -u.dot(&normals[j])).collect());
        let bound = v.point.dot(&normals[j]) - &levels[j];
        if !bound.is_positive() {
            return Err(Error::InvariantBreach(format!("chart bound for facet {j} is not positive")));
        }
        slot_exprs.push(SlotExpr { facet: j, row: domain_ineqs.len(), scale: field.one() });
        domain_ineqs.push(DomainIneq { facet: j, coefficients, bound });
    }

    // coordinates of each generator in the basis of active normals: Aᵀ a = v
    let q = t.quasilattice();
    let certs: Vec<_> = active.iter().map(|&j| t.certificates()[j].clone()).collect();
    let gamma_gens = q
        .quotient_generators(&certs)
        .into_iter()
        .map(|i| fract_vec(&k_solve(&at, &q.generators()[i]).expect("active normals form a basis").particular))
        .collect();
    let gamma_invariants = q.quotient_by(&certs).invariants;

    Ok(Chart { vertex: v.clone(), active, domain_ineqs, gamma_gens, gamma_invariants, slot_exprs })
}

//! Quasilattices: Z-spans of finitely many vectors spanning K^n.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::rational::lcm_of_denominators;
use crate::field::{k_rank, kernel, Field, FieldElem, KMatrix, KVector, Rational};
use crate::lattice::{hnf_nonzero, int_solve, integer_kernel, saturate, AbelianGroupInvariants, IntMatrix, QuotientMap};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quasilattice {
    field: Field,
    dim: usize,
    generators: Vec<KVector>,
}

/// Integer coefficients over the generators: `Σ cᵢ vᵢ = x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MembershipCertificate {
    pub coefficients: Vec<BigInt>,
}

impl MembershipCertificate {
    pub fn from_i64(xs: &[i64]) -> Self {
        MembershipCertificate { coefficients: xs.iter().map(|&x| BigInt::from(x)).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub invariants: AbelianGroupInvariants,
    /// Image of each generator: torsion coordinates, then free ones.
    pub generator_images: Vec<Vec<BigInt>>,
}

impl Quasilattice {
    pub fn new(field: Field, dim: usize, generators: Vec<KVector>) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if g.dim() != dim {
                return Err(Error::Dimension(format!("generator {i} has length {}, expected {dim}", g.dim())));
            }
            if let Some(x) = g.iter().find(|x| x.field() != field) {
                return Err(Error::FieldMismatch(x.field().d(), field.d()));
            }
        }
        let q = Quasilattice { field, dim, generators };
        if q.generators.is_empty() || k_rank(&q.generator_rows()) != dim {
            return Err(Error::InvalidQuasilattice(format!("generators do not span K^{dim}")));
        }
        Ok(q)
    }

    /// `Zⁿ` with the standard basis.
    pub fn integer_lattice(field: Field, dim: usize) -> Self {
        let gens = (0..dim).map(|i| KVector::unit(field, dim, i)).collect();
        Quasilattice::new(field, dim, gens).expect("standard basis spans")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[KVector] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    fn generator_rows(&self) -> KMatrix {
        KMatrix::from_rows(self.field, self.dim, &self.generators).expect("validated dimensions")
    }

    /// `Σ cᵢ vᵢ`.
    pub fn combine(&self, coefficients: &[BigInt]) -> KVector {
        assert_eq!(coefficients.len(), self.len(), "certificate length");
        let mut acc = KVector::zeros(self.field, self.dim);
        for (c, g) in coefficients.iter().zip(&self.generators) {
            if !c.is_zero() {
                acc = acc.add(&g.scale(&self.field.rational(Rational::from_integer(c.clone()))));
            }
        }
        acc
    }

    pub fn check(&self, x: &KVector, cert: &MembershipCertificate) -> bool {
        cert.coefficients.len() == self.len() && self.combine(&cert.coefficients) == *x
    }

    /// Rational rows of `Σ cᵢ vᵢ = x`: one per coordinate and component
    /// (rational part, then √D part when D ≠ 0). Last column is `x`.
    fn split_system(&self, x: &KVector) -> Vec<Vec<Rational>> {
        let parts: &[fn(&FieldElem) -> &Rational] = if self.field.is_rational() {
            &[FieldElem::a]
        } else {
            &[FieldElem::a, FieldElem::b]
        };
        let mut rows = Vec::new();
        for k in 0..self.dim {
            for part in parts {
                let mut row: Vec<Rational> = self.generators.iter().map(|g| part(&g[k]).clone()).collect();
                row.push(part(&x[k]).clone());
                rows.push(row);
            }
        }
        rows
    }

    /// `member` with the rational rows cleared to integers row by row.
    pub fn member(&self, x: &KVector) -> Option<MembershipCertificate> {
        if x.dim() != self.dim || x.iter().any(|e| e.field() != self.field) {
            return None;
        }
        let m = self.len();
        let (rows, rhs): (Vec<Vec<BigInt>>, Vec<BigInt>) = self
            .split_system(x)
            .into_iter()
            .map(|row| {
                let l = Rational::from_integer(lcm_of_denominators(&row));
                let mut ints: Vec<BigInt> = row.iter().map(|r| (r * &l).to_integer()).collect();
                let b = ints.pop().expect("augmented row");
                (ints, b)
            })
            .unzip();
        let a = IntMatrix::from_rows(m, &rows);
        let c = int_solve(&a, &rhs)?;
        let cert = MembershipCertificate { coefficients: c };
        debug_assert!(self.check(x, &cert));
        Some(cert)
    }

    /// Basis (rows, Hermite normal form) of the integer relations among the
    /// generators: the saturation of the rational kernel.
    pub fn relation_lattice(&self) -> IntMatrix {
        let m = self.len();
        let q = Field::RATIONAL;
        let rows: Vec<KVector> = self
            .split_system(&KVector::zeros(self.field, self.dim))
            .into_iter()
            .map(|mut r| {
                r.pop();
                KVector::new(r.into_iter().map(|x| q.rational(x)).collect())
            })
            .collect();
        let ker = kernel(&KMatrix::from_rows(q, m, &rows).expect("consistent dimensions"));
        if ker.is_empty() {
            return IntMatrix::zeros(0, m);
        }
        let cleared: Vec<Vec<BigInt>> = ker
            .iter()
            .map(|v| {
                let l = Rational::from_integer(lcm_of_denominators(v.iter().map(FieldElem::a)));
                v.iter().map(|x| (x.a() * &l).to_integer()).collect()
            })
            .collect();
        saturate(&IntMatrix::from_rows(m, &cleared))
    }

    /// Integer kernel of the cleared system read straight off its Smith form;
    /// agrees with `relation_lattice` up to basis change.
    pub fn relation_lattice_direct(&self) -> IntMatrix {
        let m = self.len();
        let rows: Vec<Vec<BigInt>> = self
            .split_system(&KVector::zeros(self.field, self.dim))
            .into_iter()
            .map(|mut r| {
                r.pop();
                let l = Rational::from_integer(lcm_of_denominators(&r));
                r.iter().map(|x| (x * &l).to_integer()).collect()
            })
            .collect();
        hnf_nonzero(&integer_kernel(&IntMatrix::from_rows(m, &rows)))
    }

    /// Rank of `Q` as an abelian group.
    pub fn z_rank(&self) -> usize {
        self.len() - self.relation_lattice().rows()
    }

    pub fn is_discrete(&self) -> bool {
        self.z_rank() == self.dim
    }

    /// Coordinates on `Q / span_Z{certified vectors}`, with `Q` presented as
    /// `Z^m / relations`.
    pub fn quotient_map(&self, vectors: &[MembershipCertificate]) -> QuotientMap {
        let m = self.len();
        let sub: Vec<Vec<BigInt>> = vectors.iter().map(|c| c.coefficients.clone()).collect();
        QuotientMap::new(&self.relation_lattice().vstack(&IntMatrix::from_rows(m, &sub)))
    }

    /// Indices of generators that generate `Q / span_Z{base}`, chosen
    /// greedily in generator order: a generator is skipped when its class
    /// lies in the subgroup generated by the earlier choices.
    pub fn quotient_generators(&self, base: &[MembershipCertificate]) -> Vec<usize> {
        let m = self.len();
        let mut sub: Vec<MembershipCertificate> = base.to_vec();
        let mut keep = Vec::new();
        for i in 0..m {
            let mut e = vec![BigInt::zero(); m];
            e[i] = BigInt::from(1);
            if !self.quotient_map(&sub).is_zero(&e) {
                keep.push(i);
                sub.push(MembershipCertificate { coefficients: e });
            }
        }
        keep
    }

    pub fn quotient_by(&self, vectors: &[MembershipCertificate]) -> QuotientPresentation {
        let map = self.quotient_map(vectors);
        let m = self.len();
        let generator_images = (0..m)
            .map(|i| {
                let mut e = vec![BigInt::zero(); m];
                e[i] = BigInt::from(1);
                map.image(&e)
            })
            .collect();
        QuotientPresentation { invariants: map.invariants().clone(), generator_images }
    }
}

use crate::error::{Error, Result};
use crate::field::{Field, FieldElem, KVector};
use crate::polytope::{ensure_polytope, PolytopeH, ValidationReport};
use crate::quasilattice::{MembershipCertificate, Quasilattice};

/// A polytope together with a quasilattice containing all its normals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triple {
    polytope: PolytopeH,
    quasilattice: Quasilattice,
    certificates: Vec<MembershipCertificate>,
    report: ValidationReport,
}

impl Triple {
    /// Validates the polytope (bounded, full-dimensional, irredundant) and
    /// checks or recomputes the membership certificate of every normal.
    /// Simplicity is not required here; construction refuses non-simple input.
    pub fn new(
        polytope: PolytopeH,
        quasilattice: Quasilattice,
        certificates: Option<Vec<MembershipCertificate>>,
    ) -> Result<Self> {
        if polytope.field() != quasilattice.field() {
            return Err(Error::FieldMismatch(polytope.field().d(), quasilattice.field().d()));
        }
        if polytope.dim() != quasilattice.dim() {
            return Err(Error::Dimension(format!(
                "polytope has dimension {}, quasilattice {}",
                polytope.dim(),
                quasilattice.dim()
            )));
        }
        let report = ensure_polytope(&polytope)?;
        let certificates = match certificates {
            Some(certs) => {
                if certs.len() != polytope.facet_count() {
                    return Err(Error::Dimension(format!(
                        "{} certificates for {} facets",
                        certs.len(),
                        polytope.facet_count()
                    )));
                }
                for (j, (c, h)) in certs.iter().zip(polytope.halfspaces()).enumerate() {
                    if !quasilattice.check(&h.normal, c) {
                        return Err(Error::CertificateMismatch { facet: j });
                    }
                }
                certs
            }
            None => polytope
                .halfspaces()
                .iter()
                .enumerate()
                .map(|(j, h)| quasilattice.member(&h.normal).ok_or(Error::NotInQuasilattice { facet: j }))
                .collect::<Result<_>>()?,
        };
        Ok(Triple { polytope, quasilattice, certificates, report })
    }

    pub fn field(&self) -> Field {
        self.polytope.field()
    }

    pub fn polytope(&self) -> &PolytopeH {
        &self.polytope
    }

    pub fn quasilattice(&self) -> &Quasilattice {
        &self.quasilattice
    }

    pub fn certificates(&self) -> &[MembershipCertificate] {
        &self.certificates
    }

    pub fn report(&self) -> &ValidationReport {
        &self.report
    }

    pub fn is_simple(&self) -> bool {
        self.report.simple
    }

    /// Number of facets `d`.
    pub fn d(&self) -> usize {
        self.polytope.facet_count()
    }

    /// Dimension `n`.
    pub fn n(&self) -> usize {
        self.polytope.dim()
    }

    pub fn normals(&self) -> Vec<KVector> {
        self.polytope.normals()
    }

    /// Same triple with every level multiplied by `c > 0`.
    pub fn scale_levels(&self, c: &FieldElem) -> Result<Triple> {
        if !c.is_positive() {
            return Err(Error::InvalidPolytope("level scale must be positive".into()));
        }
        Triple::new(self.polytope.scale_levels(c), self.quasilattice.clone(), Some(self.certificates.clone()))
    }

    /// The lattice `Λ = span_Z{X_j}`, as a quasilattice over the normals.
    pub fn normal_span(&self) -> Quasilattice {
        Quasilattice::new(self.field(), self.n(), self.normals()).expect("normals of a bounded polytope span")
    }
}

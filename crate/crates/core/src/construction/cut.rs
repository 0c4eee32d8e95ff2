use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{FieldElem, KVector};
use crate::polytope::cut;
use crate::quasilattice::MembershipCertificate;

use super::presentation::{build_presentation, Presentation};
use super::triple::Triple;

#[derive(Clone, Debug)]
pub struct CutResult {
    pub plus: Triple,
    pub minus: Triple,
    pub plus_presentation: Presentation,
    pub minus_presentation: Presentation,
}

/// Cuts along `⟨μ, x⟩ = λ`. The certificate of `x` is recomputed when not given.
pub fn cut_and_present(
    t: &Triple,
    x: &KVector,
    certificate: Option<MembershipCertificate>,
    lambda: &FieldElem,
) -> Result<CutResult> {
    let q = t.quasilattice();
    let cert = match certificate {
        Some(c) if q.check(x, &c) => c,
        Some(_) => return Err(Error::CertificateMismatch { facet: t.d() }),
        None => q.member(x).ok_or(Error::NotInQuasilattice { facet: t.d() })?,
    };
    let neg = MembershipCertificate { coefficients: cert.coefficients.iter().map(|c| -c).collect::<Vec<BigInt>>() };
    let (p_plus, p_minus) = cut(t.polytope(), x, lambda)?;
    let half = |p: crate::polytope::PolytopeH, new: MembershipCertificate| -> Result<Triple> {
        let hs = p.halfspaces();
        let mut certs: Vec<MembershipCertificate> = hs[..hs.len() - 1]
            .iter()
            .map(|h| {
                let j = t.polytope().halfspaces().iter().position(|o| o == h).expect("kept facet of the original");
                t.certificates()[j].clone()
            })
            .collect();
        certs.push(new);
        Triple::new(p, q.clone(), Some(certs))
    };
    let plus = half(p_plus, cert)?;
    let minus = half(p_minus, neg)?;
    let plus_presentation = build_presentation(&plus)?;
    let minus_presentation = build_presentation(&minus)?;
    Ok(CutResult { plus, minus, plus_presentation, minus_presentation })
}

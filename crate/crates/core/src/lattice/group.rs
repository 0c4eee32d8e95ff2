//! Integer solving and finitely generated abelian quotients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::matrix::IntMatrix;
use super::normal_form::{hnf, snf, SmithDecomposition};

/// Invariant factors of a finitely generated abelian group
/// `Z^free_rank ⊕ Z/t₁ ⊕ … ⊕ Z/t_k`, with `t₁ | t₂ | …` and every `tᵢ ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct AbelianGroupInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianGroupInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite()
            .then(|| self.torsion.iter().fold(BigInt::one(), |acc, t| acc * t))
    }
}

impl fmt::Display for AbelianGroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        f.write_str(&parts.join(" + "))
    }
}

/// Coordinates on `Z^k / rowspan(M)`: `a ↦ a·V`, dropping unit invariant
/// factors, reducing torsion coordinates, keeping free ones.
#[derive(Clone, Debug)]
pub struct QuotientMap {
    k: usize,
    invariants: AbelianGroupInvariants,
    smith: SmithDecomposition,
    // (column of a·V, modulus or None for free)
    coords: Vec<(usize, Option<BigInt>)>,
}

impl QuotientMap {
    pub fn new(relations: &IntMatrix) -> Self {
        let k = relations.cols();
        let smith = snf(relations);
        let diag = smith.diagonal();
        let mut coords = Vec::new();
        let mut torsion = Vec::new();
        for i in 0..k {
            match diag.get(i) {
                Some(s) if s.is_one() => {}
                Some(s) if !s.is_zero() => {
                    torsion.push(s.clone());
                    coords.push((i, Some(s.clone())));
                }
                _ => coords.push((i, None)),
            }
        }
        let free_rank = coords.iter().filter(|c| c.1.is_none()).count();
        QuotientMap {
            k,
            invariants: AbelianGroupInvariants { free_rank, torsion },
            smith,
            coords,
        }
    }

    pub fn invariants(&self) -> &AbelianGroupInvariants {
        &self.invariants
    }

    /// Image of `a ∈ Z^k`: torsion coordinates first (in `[0, t)`), then free ones.
    pub fn image(&self, a: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(a.len(), self.k, "quotient map dimension");
        let av = self.smith.v.left_mul_vec(a);
        self.coords
            .iter()
            .map(|(i, m)| match m {
                Some(m) => av[*i].mod_floor(m),
                None => av[*i].clone(),
            })
            .collect()
    }

    pub fn is_zero(&self, a: &[BigInt]) -> bool {
        self.image(a).iter().all(Zero::is_zero)
    }
}

/// Some `x ∈ Zᵏ` with `A·x = b`, decided through the Smith form of `A`.
pub fn int_solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows(), b.len(), "int_solve: right-hand side length");
    let d = snf(a);
    let ub = d.u.mul_vec(b);
    let diag = d.diagonal();
    let mut y = vec![BigInt::zero(); a.cols()];
    for (i, c) in ub.iter().enumerate() {
        match diag.get(i).filter(|s| !s.is_zero()) {
            Some(s) => {
                if !c.is_multiple_of(s) {
                    return None;
                }
                y[i] = c / s;
            }
            None if !c.is_zero() => return None,
            None => {}
        }
    }
    Some(d.v.mul_vec(&y))
}

/// Invariants of `Z^k / (rowspan(ambient) + rowspan(subgroup))`.
pub fn quotient_invariants(ambient: &IntMatrix, subgroup: &IntMatrix) -> AbelianGroupInvariants {
    QuotientMap::new(&ambient.vstack(subgroup)).invariants
}

/// Basis (rows) of `{x ∈ Zᵏ : A·x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let d = snf(a);
    let r = d.rank();
    let rows: Vec<Vec<BigInt>> = (r..a.cols()).map(|j| (0..a.cols()).map(|i| d.v[(i, j)].clone()).collect()).collect();
    IntMatrix::from_rows(a.cols(), &rows)
}

/// `span_Q(rows) ∩ Z^k`, returned in Hermite normal form without zero rows.
pub fn saturate(rows: &IntMatrix) -> IntMatrix {
    let d = snf(rows);
    let r = d.rank();
    let basis: Vec<Vec<BigInt>> = (0..r).map(|i| d.v_inv.row(i).to_vec()).collect();
    hnf_nonzero(&IntMatrix::from_rows(rows.cols(), &basis))
}

/// Hermite normal form with the zero rows removed.
pub fn hnf_nonzero(a: &IntMatrix) -> IntMatrix {
    let (h, _) = hnf(a);
    let rows: Vec<Vec<BigInt>> = h
        .row_vecs()
        .into_iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    IntMatrix::from_rows(a.cols(), &rows)
}

//! Dense exact linear algebra over a quadratic field.

use std::ops::{Deref, Index};

use super::elem::{Field, FieldElem};
use crate::error::{Error, Result};

/// A vector with entries in one quadratic field. Length is fixed at
/// construction.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct KVector(Vec<FieldElem>);

impl KVector {
    pub fn new(entries: Vec<FieldElem>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].field() == w[1].field()));
        KVector(entries)
    }

    pub fn zeros(field: Field, n: usize) -> Self {
        KVector(vec![field.zero(); n])
    }

    pub fn unit(field: Field, n: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, n);
        v.0[i] = field.one();
        v
    }

    pub fn from_ints(field: Field, xs: &[i64]) -> Self {
        KVector(xs.iter().map(|&x| field.int(x)).collect())
    }

    pub fn into_inner(self) -> Vec<FieldElem> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(FieldElem::is_zero)
    }

    pub fn dot(&self, other: &KVector) -> FieldElem {
        assert_eq!(self.dim(), other.dim(), "dot: dimension mismatch");
        let mut acc = self.0[0].field().zero();
        for (x, y) in self.0.iter().zip(&other.0) {
            acc += &(x * y);
        }
        acc
    }

    pub fn scale(&self, s: &FieldElem) -> KVector {
        KVector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn add(&self, other: &KVector) -> KVector {
        assert_eq!(self.dim(), other.dim());
        KVector(self.0.iter().zip(&other.0).map(|(x, y)| x + y).collect())
    }

    pub fn sub(&self, other: &KVector) -> KVector {
        assert_eq!(self.dim(), other.dim());
        KVector(self.0.iter().zip(&other.0).map(|(x, y)| x - y).collect())
    }

    pub fn neg(&self) -> KVector {
        KVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(FieldElem::to_f64).collect()
    }
}

impl Deref for KVector {
    type Target = [FieldElem];
    fn deref(&self) -> &[FieldElem] {
        &self.0
    }
}

impl From<Vec<FieldElem>> for KVector {
    fn from(v: Vec<FieldElem>) -> Self {
        KVector::new(v)
    }
}

/// Dense row-major matrix over a quadratic field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct KMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<FieldElem>,
}

impl KMatrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        KMatrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds from rows; every row must have length `cols`.
    pub fn from_rows(field: Field, cols: usize, rows: &[KVector]) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            if r.dim() != cols {
                return Err(Error::Dimension(format!(
                    "row {i} has length {}, expected {cols}",
                    r.dim()
                )));
            }
            if let Some(x) = r.iter().find(|x| x.field() != field) {
                return Err(Error::FieldMismatch(x.field().d(), field.d()));
            }
            data.extend(r.iter().cloned());
        }
        Ok(KMatrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Builds the matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, rows: usize, cols: &[KVector]) -> Result<Self> {
        Ok(Self::from_rows(field, rows, cols)?.transpose())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: FieldElem) {
        assert_eq!(x.field(), self.field, "field context mismatch");
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> KVector {
        KVector(self.data[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn row_vectors(&self) -> Vec<KVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn column(&self, j: usize) -> KVector {
        KVector((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn transpose(&self) -> KMatrix {
        let mut t = KMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &KVector) -> KVector {
        assert_eq!(v.dim(), self.cols, "mul_vec: dimension mismatch");
        KVector((0..self.rows).map(|i| self.row(i).dot(v)).collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form: leftmost pivots equal to one, zeros above
    /// and below every pivot, zero rows dropped. Returns the nonzero rows and
    /// the pivot columns.
    pub fn rref(&self) -> (KMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let x = m.get(r, j) * &inv;
                m.data[r * m.cols + j] = x;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let x = m.get(i, j) - &(&f * m.get(r, j));
                    m.data[i * m.cols + j] = x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
}

impl Index<(usize, usize)> for KMatrix {
    type Output = FieldElem;
    fn index(&self, (i, j): (usize, usize)) -> &FieldElem {
        self.get(i, j)
    }
}

/// Solution set of `A x = b`: one particular solution plus a basis of the
/// kernel of `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KSolution {
    pub particular: KVector,
    /// Rows of the reduced echelon form of the kernel.
    pub kernel: Vec<KVector>,
}

/// Canonical basis of a subspace: the nonzero rows of the reduced echelon
/// form of the spanning vectors.
pub fn echelon_basis(field: Field, dim: usize, vectors: &[KVector]) -> Vec<KVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = KMatrix::from_rows(field, dim, vectors).expect("consistent dimensions");
    m.rref().0.row_vectors()
}

/// Solves `A x = b` exactly. Free variables of the particular solution are
/// zero; the kernel basis is in reduced echelon form. `None` when the
/// system is inconsistent.
pub fn k_solve(a: &KMatrix, b: &KVector) -> Option<KSolution> {
    assert_eq!(a.rows(), b.dim(), "k_solve: right-hand side length");
    let field = a.field();
    let n = a.cols();
    let mut aug = KMatrix::zeros(field, a.rows(), n + 1);
    for i in 0..a.rows() {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n, b[i].clone());
    }
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut particular = KVector::zeros(field, n);
    for (row, &c) in pivots.iter().enumerate() {
        particular.0[c] = r.get(row, n).clone();
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let raw: Vec<KVector> = free
        .iter()
        .map(|&f| {
            let mut v = KVector::unit(field, n, f);
            for (row, &c) in pivots.iter().enumerate() {
                v.0[c] = -r.get(row, f);
            }
            v
        })
        .collect();
    Some(KSolution {
        particular,
        kernel: echelon_basis(field, n, &raw),
    })
}

/// Canonical kernel basis of `A`.
pub fn kernel(a: &KMatrix) -> Vec<KVector> {
    k_solve(a, &KVector::zeros(a.field(), a.rows()))
        .expect("homogeneous systems are consistent")
        .kernel
}

pub fn k_rank(a: &KMatrix) -> usize {
    a.rank()
}

/// Whether two families span the same subspace.
pub fn same_span(field: Field, dim: usize, xs: &[KVector], ys: &[KVector]) -> bool {
    echelon_basis(field, dim, xs) == echelon_basis(field, dim, ys)
}

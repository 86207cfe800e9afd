//! Dense square matrix and index-set types.

use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// A dense, square, finite real matrix.
///
/// Construction validates squareness and finiteness; arithmetic between
/// matrices of different dimension panics, like `nalgebra`.
#[derive(Clone, PartialEq)]
pub struct Matrix(DMatrix<f64>);

impl Matrix {
    pub fn from_dmatrix(m: DMatrix<f64>) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(Error::NotSquare {
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        if m.nrows() == 0 {
            return Err(Error::Empty);
        }
        for j in 0..m.ncols() {
            for i in 0..m.nrows() {
                if !m[(i, j)].is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        Ok(Matrix(m))
    }

    /// Builds a matrix from row slices.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        for r in rows {
            if r.as_ref().len() != n {
                return Err(Error::NotSquare {
                    rows: n,
                    cols: r.as_ref().len(),
                });
            }
        }
        Self::from_dmatrix(DMatrix::from_fn(n, n, |i, j| rows[i].as_ref()[j]))
    }

    /// Builds an `n×n` matrix from `n²` row-major entries.
    pub fn from_row_major(n: usize, data: &[f64]) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries, got {}",
                n * n,
                data.len()
            )));
        }
        Self::from_dmatrix(DMatrix::from_row_slice(n, n, data))
    }

    pub(crate) fn from_fn(n: usize, f: impl FnMut(usize, usize) -> f64) -> Self {
        Matrix(DMatrix::from_fn(n, n, f))
    }

    pub fn identity(n: usize) -> Self {
        Matrix(DMatrix::identity(n, n))
    }

    pub fn zeros(n: usize) -> Self {
        Matrix(DMatrix::zeros(n, n))
    }

    /// The all-ones matrix `E = eeᵀ`.
    pub fn ones(n: usize) -> Self {
        Matrix(DMatrix::from_element(n, n, 1.0))
    }

    pub fn diagonal(d: &[f64]) -> Self {
        Self::from_fn(d.len(), |i, j| if i == j { d[i] } else { 0.0 })
    }

    /// The dyad `a bᵀ`.
    pub fn outer(a: &[f64], b: &[f64]) -> Self {
        assert_eq!(a.len(), b.len(), "outer product of unequal lengths");
        Self::from_fn(a.len(), |i, j| a[i] * b[j])
    }

    /// The checkerboard sign vector `s = (1, -1, 1, ...)`.
    pub fn checkerboard_vector(n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| if i % 2 == 0 { 1.0 } else { -1.0 })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[(i, j)]
    }

    pub fn as_dmatrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    pub fn into_dmatrix(self) -> DMatrix<f64> {
        self.0
    }

    pub fn transpose(&self) -> Matrix {
        Matrix(self.0.transpose())
    }

    pub fn scale(&self, s: f64) -> Matrix {
        Matrix(&self.0 * s)
    }

    /// `A - δ Ã`.
    pub fn shifted(&self, delta: f64, direction: &Matrix) -> Matrix {
        Matrix(&self.0 - &direction.0 * delta)
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    pub fn row(&self, i: usize) -> Vec<f64> {
        (0..self.n()).map(|j| self.get(i, j)).collect()
    }

    /// Row-major copy of the entries.
    pub fn to_row_major(&self) -> Vec<f64> {
        let n = self.n();
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            out.extend((0..n).map(|j| self.get(i, j)));
        }
        out
    }

    pub fn mul_vec(&self, v: &[f64]) -> Vec<f64> {
        let n = self.n();
        assert_eq!(v.len(), n);
        (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    /// Is `|a_ij - a_ji| <= tol` for every pair?
    pub fn is_symmetric(&self, tol: f64) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..i).all(|j| (self.get(i, j) - self.get(j, i)).abs() <= tol))
    }

    /// `(A + Aᵀ) / 2`.
    pub fn symmetric_part(&self) -> Matrix {
        Matrix((&self.0 + self.0.transpose()) * 0.5)
    }

    /// Embeds `block` into an `n×n` zero matrix at the given rows/columns.
    pub fn embed(n: usize, rows: &IndexSet, cols: &IndexSet, block: &Matrix) -> Matrix {
        assert_eq!(rows.len(), block.n());
        assert_eq!(cols.len(), block.n());
        let mut out = DMatrix::zeros(n, n);
        for (bi, &i) in rows.iter().enumerate() {
            for (bj, &j) in cols.iter().enumerate() {
                out[(i, j)] = block.get(bi, bj);
            }
        }
        Matrix(out)
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = f64;
    fn index(&self, idx: (usize, usize)) -> &f64 {
        &self.0[idx]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        Matrix(&self.0 + &rhs.0)
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        Matrix(&self.0 - &rhs.0)
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        Matrix(&self.0 * &rhs.0)
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix(-&self.0)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<f64>> = (0..self.n()).map(|i| self.row(i)).collect();
        f.debug_tuple("Matrix").field(&rows).finish()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n() {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x}")).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A nonempty, strictly increasing list of 0-based indices.
///
/// Displayed 1-based, as in the mathematical notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(indices: Vec<usize>, n: usize) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidIndexSet("empty".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndexSet(format!(
                "{indices:?} is not strictly increasing"
            )));
        }
        if indices.iter().any(|&i| i >= n) {
            return Err(Error::InvalidIndexSet(format!(
                "{indices:?} out of range for n = {n}"
            )));
        }
        Ok(IndexSet(indices))
    }

    /// `{start, ..., start + len - 1}`.
    pub fn range(start: usize, len: usize) -> Self {
        assert!(len > 0);
        IndexSet((start..start + len).collect())
    }

    /// `{0..n} \ {skip}`; `None` when that leaves nothing.
    pub fn all_but(n: usize, skip: usize) -> Option<Self> {
        let v: Vec<usize> = (0..n).filter(|&i| i != skip).collect();
        (!v.is_empty()).then_some(IndexSet(v))
    }

    /// Decodes a nonzero bit mask over `0..n`.
    pub(crate) fn from_mask(mask: u64, n: usize) -> Self {
        debug_assert!(mask != 0);
        IndexSet((0..n).filter(|&i| mask >> i & 1 == 1).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &usize> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn select(&self, v: &[f64]) -> Vec<f64> {
        self.0.iter().map(|&i| v[i]).collect()
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let one_based: Vec<String> = self.0.iter().map(|i| (i + 1).to_string()).collect();
        write!(f, "{{{}}}", one_based.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_square_and_non_finite() {
        assert!(matches!(
            Matrix::from_rows(&[vec![1.0, 2.0]]),
            Err(Error::NotSquare { .. })
        ));
        assert!(matches!(
            Matrix::from_rows(&[[1.0, f64::NAN], [0.0, 1.0]]),
            Err(Error::NonFinite { row: 0, col: 1 })
        ));
        let empty: [[f64; 0]; 0] = [];
        assert!(matches!(Matrix::from_rows(&empty), Err(Error::Empty)));
    }

    #[test]
    fn index_set_validation() {
        assert!(IndexSet::new(vec![], 3).is_err());
        assert!(IndexSet::new(vec![1, 1], 3).is_err());
        assert!(IndexSet::new(vec![0, 3], 3).is_err());
        let s = IndexSet::new(vec![0, 2], 3).unwrap();
        assert_eq!(s.to_string(), "{1,3}");
        assert_eq!(IndexSet::all_but(1, 0), None);
    }

    #[test]
    fn embed_places_block() {
        let b = Matrix::from_rows(&[[1.0, 2.0], [3.0, 4.0]]).unwrap();
        let r = IndexSet::new(vec![0, 2], 3).unwrap();
        let c = IndexSet::new(vec![1, 2], 3).unwrap();
        let e = Matrix::embed(3, &r, &c, &b);
        assert_eq!(
            e.to_row_major(),
            vec![0.0, 1.0, 2.0, 0.0, 0.0, 0.0, 0.0, 3.0, 4.0]
        );
    }
}

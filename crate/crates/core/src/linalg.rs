//! Dense linear-algebra kernels.
//!
//! LU, SVD, symmetric eigen and real Schur factorizations come from
//! `nalgebra`; the pencil root finder on top of them is ours.

use nalgebra::{Complex, DMatrix, Schur, SymmetricEigen};

use crate::error::{Error, Result};
use crate::matrix::{IndexSet, Matrix};

/// Relative determinant threshold below which a matrix counts as singular.
pub const SINGULAR_REL_TOL: f64 = 1e-12;
/// Real generalized eigenvalues closer than `ROOT_MERGE_TOL·(1+|δ|)` are merged.
pub const ROOT_MERGE_TOL: f64 = 1e-9;
/// Complex eigenvalues with `|im| <= REAL_ROOT_TOL·(1+|re|)` count as real.
pub const REAL_ROOT_TOL: f64 = 1e-9;

/// Product of the row max-norms, the scale against which `|det|` is judged.
pub fn det_scale(a: &Matrix) -> f64 {
    (0..a.n())
        .map(|i| (0..a.n()).fold(0.0_f64, |m, j| m.max(a[(i, j)].abs())))
        .product()
}

/// Determinant from a pivoted LU factorization, without rounding to zero.
pub fn det_raw(a: &Matrix) -> f64 {
    a.as_dmatrix().clone().lu().determinant()
}

/// `|det(A)|` relative to [`det_scale`]; zero for a matrix with a zero row.
pub fn relative_det(a: &Matrix) -> f64 {
    let scale = det_scale(a);
    if scale == 0.0 {
        0.0
    } else {
        det_raw(a).abs() / scale
    }
}

/// Determinant; returns exactly `0.0` for numerically singular input.
pub fn det(a: &Matrix) -> f64 {
    if is_singular(a) {
        0.0
    } else {
        det_raw(a)
    }
}

pub fn is_singular(a: &Matrix) -> bool {
    relative_det(a) < SINGULAR_REL_TOL
}

pub fn inverse(a: &Matrix) -> Result<Matrix> {
    if is_singular(a) {
        return Err(Error::SingularMatrix);
    }
    let inv = a
        .as_dmatrix()
        .clone()
        .lu()
        .try_inverse()
        .ok_or(Error::SingularMatrix)?;
    Matrix::from_dmatrix(inv).map_err(|_| Error::SingularMatrix)
}

/// Solves `A x = b`.
pub fn solve(a: &Matrix, b: &[f64]) -> Result<Vec<f64>> {
    if is_singular(a) {
        return Err(Error::SingularMatrix);
    }
    let rhs = nalgebra::DVector::from_column_slice(b);
    let x = a
        .as_dmatrix()
        .clone()
        .lu()
        .solve(&rhs)
        .ok_or(Error::SingularMatrix)?;
    Ok(x.iter().copied().collect())
}

/// Smallest singular value together with its left and right singular vectors.
pub struct SmallestSingular {
    pub sigma: f64,
    pub u: Vec<f64>,
    pub v: Vec<f64>,
}

pub fn smallest_singular(a: &Matrix) -> SmallestSingular {
    let svd = a.as_dmatrix().clone().svd(true, true);
    let (k, sigma) = svd
        .singular_values
        .iter()
        .copied()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .expect("nonempty matrix");
    let u = svd.u.as_ref().expect("u computed").column(k);
    let v_t = svd.v_t.as_ref().expect("v computed").row(k);
    SmallestSingular {
        sigma,
        u: u.iter().copied().collect(),
        v: v_t.iter().copied().collect(),
    }
}

pub fn sigma_min(a: &Matrix) -> f64 {
    a.as_dmatrix()
        .singular_values()
        .iter()
        .fold(f64::INFINITY, |m, &s| m.min(s))
}

pub fn sigma_max(a: &Matrix) -> f64 {
    a.as_dmatrix()
        .singular_values()
        .iter()
        .fold(0.0_f64, |m, &s| m.max(s))
}

/// Asymmetry tolerance used by [`lambda_min_sym`].
fn symmetry_tol(a: &Matrix) -> f64 {
    1e-10 * (1.0 + a.max_abs())
}

/// Smallest eigenvalue of a symmetric matrix.
pub fn lambda_min_sym(a: &Matrix) -> Result<f64> {
    if !a.is_symmetric(symmetry_tol(a)) {
        return Err(Error::NotSymmetric);
    }
    let eig = SymmetricEigen::new(a.symmetric_part().into_dmatrix());
    Ok(eig.eigenvalues.iter().fold(f64::INFINITY, |m, &x| m.min(x)))
}

/// Smallest eigenvalue and a unit eigenvector of a symmetric matrix.
pub fn lambda_min_sym_vector(a: &Matrix) -> Result<(f64, Vec<f64>)> {
    if !a.is_symmetric(symmetry_tol(a)) {
        return Err(Error::NotSymmetric);
    }
    let eig = SymmetricEigen::new(a.symmetric_part().into_dmatrix());
    let (k, lambda) = eig
        .eigenvalues
        .iter()
        .copied()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(&y.1))
        .expect("nonempty matrix");
    Ok((lambda, eig.eigenvectors.column(k).iter().copied().collect()))
}

/// All eigenvalues of a general real matrix via the real Schur form.
pub fn complex_eigenvalues(m: &DMatrix<f64>) -> Result<Vec<Complex<f64>>> {
    let n = m.nrows();
    let schur = Schur::try_new(m.clone(), f64::EPSILON, 100 * n.max(1))
        .or_else(|| Schur::try_new(m.clone(), f64::EPSILON, 0))
        .ok_or(Error::NoConvergence)?;
    Ok(schur.complex_eigenvalues().iter().copied().collect())
}

/// Largest eigenvalue modulus.
pub fn spectral_radius(a: &Matrix) -> Result<f64> {
    Ok(complex_eigenvalues(a.as_dmatrix())?
        .iter()
        .fold(0.0_f64, |m, z| m.max(z.norm())))
}

pub fn submatrix(a: &Matrix, rows: &IndexSet, cols: &IndexSet) -> Result<Matrix> {
    if rows.len() != cols.len() {
        return Err(Error::DimensionMismatch(format!(
            "row set {rows} and column set {cols} differ in size"
        )));
    }
    let n = a.n();
    if rows.iter().chain(cols.iter()).any(|&i| i >= n) {
        return Err(Error::DimensionMismatch(format!(
            "index out of range for n = {n}"
        )));
    }
    let r = rows.as_slice();
    let c = cols.as_slice();
    Ok(Matrix::from_fn(r.len(), |i, j| a[(r[i], c[j])]))
}

pub fn principal_submatrix(a: &Matrix, set: &IndexSet) -> Matrix {
    submatrix(a, set, set).expect("principal submatrix is square")
}

/// `A^{ij}`: `A` with row `i` and column `j` removed; `None` when `n = 1`.
pub fn minor_matrix(a: &Matrix, i: usize, j: usize) -> Option<Matrix> {
    let n = a.n();
    let rows = IndexSet::all_but(n, i)?;
    let cols = IndexSet::all_but(n, j)?;
    Some(submatrix(a, &rows, &cols).expect("same size"))
}

/// Real roots of `det(A - δÃ) = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct PencilRoots {
    /// Sorted ascending, clustered.
    pub roots: Vec<f64>,
    /// `det(A - δÃ)` vanishes identically.
    pub degenerate: bool,
}

/// Real generalized eigenvalues of the pencil `(A, Ã)`.
///
/// A shift `σ` with `A - σÃ` well conditioned is chosen and the pencil is
/// reduced to the standard problem `M = (A - σÃ)⁻¹ Ã`: every eigenvalue
/// `μ ≠ 0` of `M` gives a root `δ = σ + 1/μ`, and `μ = 0` corresponds to an
/// infinite eigenvalue. When no shift is nonsingular the determinant is
/// identically zero.
pub fn pencil_real_roots(a: &Matrix, a_tilde: &Matrix) -> Result<PencilRoots> {
    let n = a.n();
    if a_tilde.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "pencil of sizes {n} and {}",
            a_tilde.n()
        )));
    }
    let dir_scale = a_tilde.max_abs();
    if dir_scale == 0.0 {
        return Ok(PencilRoots {
            roots: vec![],
            degenerate: is_singular(a),
        });
    }
    let Some(sigma) = choose_shift(a, a_tilde) else {
        return Ok(PencilRoots {
            roots: vec![],
            degenerate: true,
        });
    };
    let shifted = a.shifted(sigma, a_tilde);
    let m = shifted
        .as_dmatrix()
        .clone()
        .lu()
        .solve(a_tilde.as_dmatrix())
        .ok_or(Error::SingularMatrix)?;
    let m_norm = m.norm();
    let mut roots: Vec<f64> = complex_eigenvalues(&m)?
        .into_iter()
        .filter(|mu| mu.norm() > 1e-12 * m_norm)
        .map(|mu| Complex::new(sigma, 0.0) + mu.inv())
        .filter(|d| d.im.abs() <= REAL_ROOT_TOL * (1.0 + d.re.abs()))
        .map(|d| d.re)
        .collect();
    roots.sort_by(f64::total_cmp);
    Ok(PencilRoots {
        roots: cluster_roots(roots),
        degenerate: false,
    })
}

fn choose_shift(a: &Matrix, a_tilde: &Matrix) -> Option<f64> {
    let base = relative_det(a);
    if base >= 1e-8 {
        return Some(0.0);
    }
    let scale = (1.0 + a.max_abs()) / a_tilde.max_abs();
    // Irrational-ish multipliers avoid landing on structured roots.
    const CANDIDATES: [f64; 10] = [
        0.618_033_988_7,
        -1.324_717_957_2,
        2.175_327_747_6,
        -0.414_213_562_4,
        3.302_775_637_7,
        -std::f64::consts::E,
        0.141_421_356_2,
        -5.436_563_656_9,
        7.389_056_098_9,
        -0.367_879_441_2,
    ];
    let (best_shift, best_rel) = std::iter::once((0.0, base))
        .chain(CANDIDATES.iter().map(|&c| {
            let s = c * scale;
            (s, relative_det(&a.shifted(s, a_tilde)))
        }))
        .max_by(|x, y| x.1.total_cmp(&y.1))
        .expect("nonempty candidates");
    (best_rel >= SINGULAR_REL_TOL).then_some(best_shift)
}

fn cluster_roots(sorted: Vec<f64>) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::with_capacity(sorted.len());
    for r in sorted {
        match out.last_mut() {
            Some(last) if (r - *last).abs() <= ROOT_MERGE_TOL * (1.0 + r.abs()) => {}
            _ => out.push(r),
        }
    }
    // A root that is zero up to the merge tolerance is zero: the unperturbed
    // matrix sits exactly on it.
    for r in out.iter_mut() {
        if r.abs() <= ROOT_MERGE_TOL {
            *r = 0.0;
        }
    }
    out
}

//! Matrix norms, regularity radii and the comparison matrix.

use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::Settings;

/// The matrix norms the analysis understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormKind {
    /// `σ_max(A)`.
    Spectral,
    Frobenius,
    /// `max |a_ij|`; not consistent.
    MaxNorm,
    /// Maximum column sum.
    Induced1,
    /// Maximum row sum.
    InducedInf,
    /// `‖A‖_{∞,1} = max_{y,z ∈ {±1}ⁿ} yᵀAz`, NP-hard in general.
    InfOne,
}

/// Structural properties of a norm that the radius theorems depend on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormCapabilities {
    /// `‖AB‖ <= ‖A‖‖B‖`.
    pub consistent: bool,
    /// `‖A‖ = ‖|A|‖`.
    pub absolute: bool,
    /// `|A| <= B` implies `‖A‖ <= ‖B‖`.
    pub monotone: bool,
    /// `‖Iₙ‖ = 1`.
    pub unit_identity: bool,
    /// A submatrix never has larger norm.
    pub submatrix_monotone: bool,
    /// `‖e_i e_jᵀ‖ = 1`.
    pub unit_dyad: bool,
}

impl NormKind {
    pub const ALL: [NormKind; 6] = [
        NormKind::Spectral,
        NormKind::Frobenius,
        NormKind::MaxNorm,
        NormKind::Induced1,
        NormKind::InducedInf,
        NormKind::InfOne,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NormKind::Spectral => "spectral",
            NormKind::Frobenius => "frobenius",
            NormKind::MaxNorm => "max",
            NormKind::Induced1 => "induced-1",
            NormKind::InducedInf => "induced-inf",
            NormKind::InfOne => "inf-one",
        }
    }

    pub fn capabilities(self) -> NormCapabilities {
        let caps = |consistent, absolute, unit_identity| NormCapabilities {
            consistent,
            absolute,
            monotone: true,
            unit_identity,
            submatrix_monotone: true,
            unit_dyad: true,
        };
        match self {
            NormKind::Spectral => caps(true, false, true),
            NormKind::Frobenius => caps(true, true, false),
            NormKind::MaxNorm => caps(false, true, true),
            NormKind::Induced1 | NormKind::InducedInf => caps(true, true, true),
            NormKind::InfOne => caps(true, false, false),
        }
    }

    /// Both submatrix monotonicity and the unit-dyad property hold.
    pub fn has_dyad_properties(self) -> bool {
        let c = self.capabilities();
        c.submatrix_monotone && c.unit_dyad
    }
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NormKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "spectral" | "2" | "two" => Ok(NormKind::Spectral),
            "frobenius" | "fro" | "f" => Ok(NormKind::Frobenius),
            "max" | "max-norm" | "maxnorm" => Ok(NormKind::MaxNorm),
            "induced-1" | "one" | "1" => Ok(NormKind::Induced1),
            "induced-inf" | "inf" => Ok(NormKind::InducedInf),
            "inf-one" | "inf1" | "infone" => Ok(NormKind::InfOne),
            other => Err(format!("unknown norm '{other}'")),
        }
    }
}

pub fn matrix_norm(a: &Matrix, kind: NormKind, settings: &Settings) -> Result<f64> {
    let m = a.as_dmatrix();
    Ok(match kind {
        NormKind::Spectral => linalg::sigma_max(a),
        NormKind::Frobenius => m.norm(),
        NormKind::MaxNorm => a.max_abs(),
        NormKind::Induced1 => (0..a.n())
            .map(|j| m.column(j).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max),
        NormKind::InducedInf => (0..a.n())
            .map(|i| m.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0, f64::max),
        NormKind::InfOne => {
            settings.check_exhaustive(a.n())?;
            max_bilinear_over_signs(m).value
        }
    })
}

/// Maximizer of `yᵀMz` over sign vectors.
#[derive(Debug, Clone)]
pub struct SignMaximizer {
    pub value: f64,
    pub y: Vec<f64>,
    pub z: Vec<f64>,
}

/// `max_{y,z ∈ {±1}ⁿ} yᵀMz = max_z ‖Mz‖₁`.
///
/// Walks `z` in Gray-code order with `z₀ = +1` fixed (the objective is odd
/// in `z` jointly with `y`), so each step costs `O(n)`.
pub fn max_bilinear_over_signs(m: &DMatrix<f64>) -> SignMaximizer {
    let n = m.nrows();
    let mut z = vec![1.0; n];
    let mut w: Vec<f64> = (0..n).map(|i| m.row(i).sum()).collect();
    let mut best = w.iter().map(|x| x.abs()).sum::<f64>();
    let mut best_z = z.clone();
    let steps: u64 = 1u64 << (n - 1);
    for k in 1..steps {
        let j = k.trailing_zeros() as usize + 1;
        let old = z[j];
        z[j] = -old;
        for (i, wi) in w.iter_mut().enumerate() {
            *wi -= 2.0 * old * m[(i, j)];
        }
        if k % 4096 == 0 {
            refresh(m, &z, &mut w);
        }
        let val: f64 = w.iter().map(|x| x.abs()).sum();
        if val > best {
            best = val;
            best_z.clone_from(&z);
        }
    }
    let mut w = vec![0.0; n];
    refresh(m, &best_z, &mut w);
    let y: Vec<f64> = w.iter().map(|&x| if x >= 0.0 { 1.0 } else { -1.0 }).collect();
    SignMaximizer {
        value: w.iter().map(|x| x.abs()).sum(),
        y,
        z: best_z,
    }
}

/// `max_{y ∈ {±1}ⁿ} yᵀMy` for symmetric `M`, with a maximizer.
pub fn max_quadratic_over_signs(m: &DMatrix<f64>) -> (f64, Vec<f64>) {
    let n = m.nrows();
    let mut y = vec![1.0; n];
    let mut w: Vec<f64> = (0..n).map(|i| m.row(i).sum()).collect();
    let mut q: f64 = w.iter().sum();
    let mut best = q;
    let mut best_y = y.clone();
    let steps: u64 = 1u64 << (n - 1);
    for k in 1..steps {
        let j = k.trailing_zeros() as usize + 1;
        let old = y[j];
        q += -4.0 * old * w[j] + 4.0 * m[(j, j)];
        y[j] = -old;
        for (i, wi) in w.iter_mut().enumerate() {
            *wi -= 2.0 * old * m[(i, j)];
        }
        if k % 4096 == 0 {
            refresh(m, &y, &mut w);
            q = y.iter().zip(&w).map(|(a, b)| a * b).sum();
        }
        if q > best {
            best = q;
            best_y.clone_from(&y);
        }
    }
    let mut w = vec![0.0; n];
    refresh(m, &best_y, &mut w);
    (best_y.iter().zip(&w).map(|(a, b)| a * b).sum(), best_y)
}

fn refresh(m: &DMatrix<f64>, z: &[f64], w: &mut [f64]) {
    for (i, wi) in w.iter_mut().enumerate() {
        *wi = (0..z.len()).map(|j| m[(i, j)] * z[j]).sum();
    }
}

/// Distance to the nearest singular matrix and a perturbation attaining it.
#[derive(Debug, Clone)]
pub struct NearestSingular {
    pub radius: f64,
    /// `A + perturbation` is singular and `‖perturbation‖ = radius`.
    pub perturbation: Matrix,
}

/// `r(A)` under the chosen norm.
pub fn regularity_radius(a: &Matrix, kind: NormKind, settings: &Settings) -> Result<f64> {
    Ok(nearest_singular(a, kind, settings)?.radius)
}

pub fn nearest_singular(a: &Matrix, kind: NormKind, settings: &Settings) -> Result<NearestSingular> {
    let n = a.n();
    match kind {
        NormKind::Spectral | NormKind::Frobenius => {
            if linalg::is_singular(a) {
                return Err(Error::SingularMatrix);
            }
            let s = linalg::smallest_singular(a);
            Ok(NearestSingular {
                radius: s.sigma,
                perturbation: Matrix::outer(&s.u, &s.v).scale(-s.sigma),
            })
        }
        NormKind::InducedInf => {
            // Row k of A⁻¹ carries ‖A⁻¹‖∞; x = sign(row k), y = A⁻¹x has
            // |y_k| = ‖A⁻¹‖∞ and (A - x e_kᵀ sign(y_k)/‖A⁻¹‖∞) y = 0.
            let inv = linalg::inverse(a)?;
            let (k, norm) = (0..n)
                .map(|i| (i, inv.row(i).iter().map(|x| x.abs()).sum::<f64>()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .expect("n > 0");
            let x: Vec<f64> = inv.row(k).iter().map(|&v| sign(v)).collect();
            let mut z = vec![0.0; n];
            z[k] = 1.0;
            Ok(NearestSingular {
                radius: 1.0 / norm,
                perturbation: Matrix::outer(&x, &z).scale(-1.0 / norm),
            })
        }
        NormKind::Induced1 => {
            let inv = linalg::inverse(a)?;
            let (k, norm) = (0..n)
                .map(|j| (j, (0..n).map(|i| inv[(i, j)].abs()).sum::<f64>()))
                .max_by(|x, y| x.1.total_cmp(&y.1))
                .expect("n > 0");
            let mut x = vec![0.0; n];
            x[k] = 1.0;
            let z: Vec<f64> = (0..n).map(|i| sign(inv[(i, k)])).collect();
            Ok(NearestSingular {
                radius: 1.0 / norm,
                perturbation: Matrix::outer(&x, &z).scale(-1.0 / norm),
            })
        }
        NormKind::MaxNorm => {
            settings.check_exhaustive(n)?;
            let inv = linalg::inverse(a)?;
            let best = max_bilinear_over_signs(inv.as_dmatrix());
            // det(A - t z yᵀ) = det(A)(1 - t yᵀA⁻¹z) vanishes at t = 1/max.
            Ok(NearestSingular {
                radius: 1.0 / best.value,
                perturbation: Matrix::outer(&best.z, &best.y).scale(-1.0 / best.value),
            })
        }
        NormKind::InfOne => Err(Error::UnsupportedNormForTheorem {
            norm: kind.name(),
            theorem: "the regularity radius",
        }),
    }
}

fn sign(x: f64) -> f64 {
    if x >= 0.0 {
        1.0
    } else {
        -1.0
    }
}

/// `⟨A⟩`: `|a_ii|` on the diagonal, `-|a_ij|` elsewhere.
pub fn comparison_matrix(a: &Matrix) -> Matrix {
    Matrix::from_fn(a.n(), |i, j| {
        if i == j {
            a[(i, j)].abs()
        } else {
            -a[(i, j)].abs()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn m(rows: &[&[f64]]) -> Matrix {
        Matrix::from_rows(rows).unwrap()
    }

    /// `‖A‖_{∞,1}` by enumerating every `(y, z)` pair.
    fn inf_one_brute(a: &Matrix) -> f64 {
        let n = a.n();
        let signs = |mask: u32| -> Vec<f64> {
            (0..n).map(|i| if mask >> i & 1 == 1 { -1.0 } else { 1.0 }).collect()
        };
        let mut best = f64::NEG_INFINITY;
        for ym in 0..1u32 << n {
            for zm in 0..1u32 << n {
                let (y, z) = (signs(ym), signs(zm));
                let v: f64 = (0..n)
                    .flat_map(|i| (0..n).map(move |j| (i, j)))
                    .map(|(i, j)| y[i] * a[(i, j)] * z[j])
                    .sum();
                best = best.max(v);
            }
        }
        best
    }

    #[test]
    fn norm_examples() {
        let s = Settings::default();
        for n in 1..5 {
            let i = Matrix::identity(n);
            assert_relative_eq!(matrix_norm(&i, NormKind::Spectral, &s).unwrap(), 1.0, epsilon = 1e-12);
            assert_relative_eq!(
                matrix_norm(&i, NormKind::Frobenius, &s).unwrap(),
                (n as f64).sqrt(),
                epsilon = 1e-12
            );
        }
        let a = m(&[&[1.0, -1.0], &[-1.0, 1.0]]);
        assert_eq!(matrix_norm(&a, NormKind::InfOne, &s).unwrap(), 4.0);
        assert_eq!(inf_one_brute(&a), 4.0);
        let b = m(&[&[1.0, -2.0], &[3.0, 4.0]]);
        assert_eq!(matrix_norm(&b, NormKind::Induced1, &s).unwrap(), 6.0);
        assert_eq!(matrix_norm(&b, NormKind::InducedInf, &s).unwrap(), 7.0);
        assert_eq!(matrix_norm(&b, NormKind::MaxNorm, &s).unwrap(), 4.0);
    }

    #[test]
    fn inf_one_matches_brute_force() {
        let a = m(&[
            &[0.3, -1.2, 2.0, 0.1],
            &[1.5, 0.7, -0.4, -2.2],
            &[-0.9, 0.2, 1.1, 0.6],
            &[0.05, -0.8, 0.0, 1.9],
        ]);
        let s = Settings::default();
        assert_relative_eq!(
            matrix_norm(&a, NormKind::InfOne, &s).unwrap(),
            inf_one_brute(&a),
            epsilon = 1e-12
        );
    }

    #[test]
    fn inf_one_respects_limit() {
        let s = Settings {
            exhaustive_limit: 3,
            ..Settings::default()
        };
        assert_eq!(
            matrix_norm(&Matrix::identity(4), NormKind::InfOne, &s),
            Err(Error::DimensionTooLarge { n: 4, limit: 3 })
        );
    }

    #[test]
    fn regularity_radius_examples() {
        let s = Settings::default();
        assert_relative_eq!(
            regularity_radius(&Matrix::identity(3), NormKind::Spectral, &s).unwrap(),
            1.0,
            epsilon = 1e-12
        );
        // σ_min of [[10,-2],[-1,10]]: AᵀA has eigenvalues (205 ± √3609)/2.
        let a = m(&[&[10.0, -2.0], &[-1.0, 10.0]]);
        let expected = ((205.0 - 3609.0_f64.sqrt()) / 2.0).sqrt();
        assert_relative_eq!(
            regularity_radius(&a, NormKind::Spectral, &s).unwrap(),
            expected,
            epsilon = 1e-10
        );
        assert!((expected - 9.8499).abs() > 1.0, "sanity: value is not 9.85");
        assert_relative_eq!(
            regularity_radius(&Matrix::identity(2), NormKind::MaxNorm, &s).unwrap(),
            0.5,
            epsilon = 1e-14
        );
        assert!(matches!(
            regularity_radius(&a, NormKind::InfOne, &s),
            Err(Error::UnsupportedNormForTheorem { .. })
        ));
        assert_eq!(
            regularity_radius(&Matrix::ones(2), NormKind::Spectral, &s),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn nearest_singular_certificates() {
        let s = Settings::default();
        let a = m(&[&[4.0, -1.0, 0.5], &[2.0, 3.0, -1.0], &[0.0, 1.0, 5.0]]);
        for kind in [
            NormKind::Spectral,
            NormKind::Frobenius,
            NormKind::MaxNorm,
            NormKind::Induced1,
            NormKind::InducedInf,
        ] {
            let ns = nearest_singular(&a, kind, &s).unwrap();
            let norm = matrix_norm(&ns.perturbation, kind, &s).unwrap();
            assert_relative_eq!(norm, ns.radius, max_relative = 1e-10);
            let b = &a + &ns.perturbation;
            assert!(linalg::is_singular(&b), "{kind}: A + A' not singular");
        }
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(comparison_matrix(&Matrix::identity(3)), Matrix::identity(3));
        let a = m(&[&[10.0, -2.0], &[-1.0, 10.0]]);
        assert_eq!(comparison_matrix(&a), a);
        let c = m(&[&[2.0, 1.0, 1.0], &[1.0, 2.0, 1.0], &[1.0, 1.0, 2.0]]);
        assert_eq!(
            comparison_matrix(&c),
            m(&[&[2.0, -1.0, -1.0], &[-1.0, 2.0, -1.0], &[-1.0, -1.0, 2.0]])
        );
    }

    #[test]
    fn quadratic_sign_maximum() {
        let q = m(&[&[2.0, -1.0, 0.5], &[-1.0, 3.0, 1.0], &[0.5, 1.0, 1.0]]);
        let (v, y) = max_quadratic_over_signs(q.as_dmatrix());
        // y = (1,-1,-1): 2 + 3 + 1 + 2(1) + 2(-0.5) + 2(1) = 9
        assert_relative_eq!(v, 9.0, epsilon = 1e-12);
        let w = q.mul_vec(&y);
        assert_relative_eq!(y.iter().zip(&w).map(|(a, b)| a * b).sum::<f64>(), 9.0, epsilon = 1e-12);
    }
}

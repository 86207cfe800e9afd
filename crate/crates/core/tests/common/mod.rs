//! Random instance generators shared by the integration tests.
#![allow(dead_code)]

use mattol_core::linalg;
use mattol_core::properties::check;
use mattol_core::{Matrix, PropertyKind, Settings};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn normal(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    Matrix::from_row_major(n, &(0..n * n).map(|_| StandardNormal.sample(rng)).collect::<Vec<f64>>()).unwrap()
}

pub fn normal_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| StandardNormal.sample(rng)).collect()
}

fn nonneg(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Matrix {
    let data: Vec<f64> = (0..n * n)
        .map(|_| if rng.random::<f64>() < density { rng.random_range(0.1..2.0) } else { 0.0 })
        .collect();
    Matrix::from_row_major(n, &data).unwrap()
}

fn m_matrix(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut p = nonneg(rng, n, 0.8).into_dmatrix();
    for i in 0..n {
        p[(i, i)] = rng.random_range(0.0..1.0);
    }
    let p = Matrix::from_dmatrix(p).unwrap();
    let rho = linalg::spectral_radius(&p).unwrap();
    let s = rho * rng.random_range(1.15..2.0) + 0.1;
    &Matrix::identity(n).scale(s) - &p
}

fn pd(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let b = normal(rng, n);
    (&(&b.transpose() * &b) + &Matrix::identity(n).scale(0.5)).symmetric_part()
}

fn candidate(kind: PropertyKind, rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    match kind {
        PropertyKind::PositiveDeterminant => {
            let a = normal(rng, n);
            if linalg::det_raw(&a) < 0.0 {
                let mut d = a.into_dmatrix();
                d.row_mut(0).neg_mut();
                Matrix::from_dmatrix(d).unwrap()
            } else {
                a
            }
        }
        PropertyKind::PositiveDefinite => pd(rng, n),
        PropertyKind::PMatrix => {
            let s = normal(rng, n);
            let skew = (&s - &s.transpose()).scale(rng.random_range(0.0..1.5));
            &pd(rng, n) + &skew
        }
        PropertyKind::MMatrix => m_matrix(rng, n),
        PropertyKind::HMatrix => {
            let m = m_matrix(rng, n);
            Matrix::from_row_major(
                n,
                &m.to_row_major()
                    .into_iter()
                    .map(|x| if rng.random::<bool>() { -x } else { x })
                    .collect::<Vec<_>>(),
            )
            .unwrap()
        }
        PropertyKind::TotallyPositive => {
            let grid = |rng: &mut ChaCha8Rng| -> Vec<f64> {
                (0..n).map(|i| 0.8 * i as f64 + rng.random_range(0.0..0.4)).collect()
            };
            let x = grid(rng);
            let y = grid(rng);
            let c = rng.random_range(0.5..1.5);
            Matrix::from_row_major(
                n,
                &(0..n * n).map(|k| (c * x[k / n] * y[k % n]).exp()).collect::<Vec<_>>(),
            )
            .unwrap()
        }
        PropertyKind::InverseMMatrix => linalg::inverse(&m_matrix(rng, n)).unwrap(),
        PropertyKind::InverseNonnegative => {
            if rng.random::<bool>() {
                // An M-matrix with its columns permuted.
                let m = m_matrix(rng, n);
                let mut perm: Vec<usize> = (0..n).collect();
                for i in (1..n).rev() {
                    perm.swap(i, rng.random_range(0..=i));
                }
                Matrix::from_row_major(
                    n,
                    &(0..n * n).map(|k| m[(k / n, perm[k % n])]).collect::<Vec<_>>(),
                )
                .unwrap()
            } else {
                let mut p = nonneg(rng, n, 1.0).into_dmatrix();
                for i in 0..n {
                    p[(i, i)] += n as f64;
                }
                linalg::inverse(&Matrix::from_dmatrix(p).unwrap()).unwrap()
            }
        }
    }
}

/// A random `n×n` matrix with the property, comfortably inside the class.
pub fn instance(kind: PropertyKind, rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let s = Settings::default();
    for _ in 0..1000 {
        let a = candidate(kind, rng, n);
        if linalg::relative_det(&a) < 1e-6 {
            continue;
        }
        let r = check(&a, kind, &s).unwrap();
        if r.holds && !r.near_boundary {
            return a;
        }
    }
    panic!("no {kind} instance of size {n} found");
}

/// A random direction; symmetric for the positive definite class.
pub fn direction(kind: PropertyKind, rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let d = normal(rng, n);
    if kind == PropertyKind::PositiveDefinite {
        d.symmetric_part()
    } else {
        d
    }
}

/// Endpoints agree within `tol` relative, infinities exactly.
pub fn close(x: f64, y: f64, tol: f64) -> bool {
    x == y || (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs()))
}

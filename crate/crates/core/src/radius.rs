//! Tolerance radii: the largest `δ` such that every `A'` with `‖A'‖ < δ`
//! keeps `A + A'` in the class.

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::{IndexSet, Matrix};
use crate::norms::{self, comparison_matrix, matrix_norm, nearest_singular, NormKind};
use crate::parametrize::{self, Direction};
use crate::properties::{self, initial_minor_index_sets, principal_index_sets, PropertyKind};
use crate::Settings;

/// A perturbation that takes the matrix out of the class.
#[derive(Debug, Clone, PartialEq)]
pub struct Certificate {
    pub perturbation: Matrix,
    /// `‖perturbation‖` in the norm of the estimate.
    pub norm: f64,
    /// `A + A'` itself leaves the class. When false the supremum is not
    /// attained and `A + (1 + ε)A'` leaves it for every small `ε > 0`.
    pub attained: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RadiusEstimate {
    pub lower: f64,
    pub upper: f64,
    pub exact: bool,
    pub method: &'static str,
    pub certificate: Option<Certificate>,
    /// Closed-form theorem bounds reported alongside an exact value.
    pub bounds: Option<(f64, f64)>,
    pub notes: Vec<String>,
}

impl RadiusEstimate {
    fn exact(value: f64, method: &'static str, certificate: Option<Certificate>) -> Self {
        RadiusEstimate {
            lower: value,
            upper: value,
            exact: true,
            method,
            // A zero radius needs no witness: the matrix is already on the boundary.
            certificate: certificate.filter(|_| value > 0.0),
            bounds: None,
            notes: vec![],
        }
    }

    /// The radius when known exactly.
    pub fn value(&self) -> Option<f64> {
        self.exact.then_some(self.lower)
    }
}

fn require(a: &Matrix, kind: PropertyKind, settings: &Settings) -> Result<()> {
    let report = properties::check(a, kind, settings)?;
    if report.holds {
        Ok(())
    } else {
        Err(Error::PreconditionFailed(format!(
            "matrix is not {kind}: {}",
            report.witness
        )))
    }
}

fn unsupported(norm: NormKind, theorem: &'static str) -> Error {
    Error::UnsupportedNormForTheorem {
        norm: norm.name(),
        theorem,
    }
}

/// Nearest-singular certificate for `A`.
fn singular_certificate(a: &Matrix, norm: NormKind, settings: &Settings) -> Result<(f64, Certificate)> {
    let ns = nearest_singular(a, norm, settings)?;
    Ok((
        ns.radius,
        Certificate {
            perturbation: ns.perturbation,
            norm: ns.radius,
            attained: true,
        },
    ))
}

/// Smallest regularity radius over a family of square submatrices, with
/// the minimizing perturbation embedded back into `n×n`.
fn min_submatrix_radius(
    a: &Matrix,
    pairs: impl IntoIterator<Item = (IndexSet, IndexSet)>,
    norm: NormKind,
    attained: bool,
    settings: &Settings,
) -> Result<Option<(f64, Certificate)>> {
    let n = a.n();
    let mut best: Option<(f64, Certificate)> = None;
    for (rows, cols) in pairs {
        let sub = linalg::submatrix(a, &rows, &cols)?;
        let ns = nearest_singular(&sub, norm, settings)?;
        if best.as_ref().is_none_or(|(r, _)| ns.radius < *r) {
            best = Some((
                ns.radius,
                Certificate {
                    perturbation: Matrix::embed(n, &rows, &cols, &ns.perturbation),
                    norm: ns.radius,
                    attained,
                },
            ));
        }
    }
    Ok(best)
}

/// Positive determinant: the regularity radius.
pub fn det_radius(a: &Matrix, norm: NormKind, settings: &Settings) -> Result<RadiusEstimate> {
    require(a, PropertyKind::PositiveDeterminant, settings)?;
    let (r, cert) = singular_certificate(a, norm, settings)?;
    Ok(RadiusEstimate::exact(r, "regularity-radius", Some(cert)))
}

/// Positive definiteness under symmetric perturbations.
pub fn pd_radius(a: &Matrix, norm: NormKind, settings: &Settings) -> Result<RadiusEstimate> {
    require(a, PropertyKind::PositiveDefinite, settings)?;
    let n = a.n();
    let lambda = linalg::lambda_min_sym(a)?;
    let shift = |d: f64| Certificate {
        perturbation: Matrix::identity(n).scale(-d),
        norm: d,
        attained: true,
    };
    match norm {
        NormKind::Spectral | NormKind::Induced1 | NormKind::InducedInf => {
            Ok(RadiusEstimate::exact(lambda, "lambda-min", Some(shift(lambda))))
        }
        NormKind::MaxNorm => {
            let inv = linalg::inverse(a)?;
            let tol = settings.rel_tol * (1.0 + inv.max_abs());
            let dyad = |d: f64, y: &[f64]| Certificate {
                perturbation: Matrix::outer(y, y).scale(-d),
                norm: d,
                attained: true,
            };
            if inv.to_row_major().iter().all(|&x| x >= -tol) {
                let d = 1.0 / inv.to_row_major().iter().sum::<f64>();
                return Ok(RadiusEstimate::exact(d, "pd-inverse-nonnegative", Some(dyad(d, &vec![1.0; n]))));
            }
            if n <= settings.exhaustive_limit {
                let (q, y) = norms::max_quadratic_over_signs(inv.as_dmatrix());
                let d = 1.0 / q;
                return Ok(RadiusEstimate::exact(d, "pd-sign-quadratic", Some(dyad(d, &y))));
            }
            Ok(RadiusEstimate {
                lower: lambda / n as f64,
                upper: lambda,
                exact: false,
                method: "pd-eigenvalue-bounds",
                certificate: Some(shift(lambda)),
                bounds: None,
                notes: vec![format!("n = {n} exceeds the enumeration limit")],
            })
        }
        NormKind::Frobenius | NormKind::InfOne => {
            Err(unsupported(norm, "the positive definite radius"))
        }
    }
}

/// P-matrix radius: the smallest regularity radius over principal submatrices.
pub fn p_radius(a: &Matrix, norm: NormKind, settings: &Settings) -> Result<RadiusEstimate> {
    let sets = principal_index_sets(a.n(), settings)?;
    require(a, PropertyKind::PMatrix, settings)?;
    let n = a.n();
    let two_norm = matches!(norm, NormKind::Spectral | NormKind::Frobenius);
    let is_m = properties::check(a, PropertyKind::MMatrix, settings)?.holds;
    if is_m && two_norm {
        let (r, cert) = singular_certificate(a, norm, settings)?;
        return Ok(RadiusEstimate::exact(r, "p-via-m-sigma-min", Some(cert)));
    }
    if is_m && norm == NormKind::MaxNorm {
        let inv = linalg::inverse(a)?;
        let d = 1.0 / inv.to_row_major().iter().sum::<f64>();
        let cert = Certificate {
            perturbation: Matrix::ones(n).scale(-d),
            norm: d,
            attained: true,
        };
        return Ok(RadiusEstimate::exact(d, "p-via-m-max-norm", Some(cert)));
    }
    if two_norm && properties::check(a, PropertyKind::PositiveDefinite, settings)?.holds {
        let (lambda, u) = linalg::lambda_min_sym_vector(a)?;
        let cert = Certificate {
            perturbation: Matrix::outer(&u, &u).scale(-lambda),
            norm: lambda,
            attained: true,
        };
        return Ok(RadiusEstimate::exact(lambda, "p-via-pd-lambda-min", Some(cert)));
    }
    let pairs = sets.into_iter().map(|s| (s.clone(), s));
    let (r, cert) = min_submatrix_radius(a, pairs, norm, true, settings)?.expect("n >= 1");
    Ok(RadiusEstimate::exact(r, "p-principal-submatrices", Some(cert)))
}

fn max_off_diagonal(a: &Matrix) -> Option<(f64, usize, usize)> {
    let n = a.n();
    (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| (a[(i, j)], i, j))
        .max_by(|x, y| x.0.total_cmp(&y.0))
}

/// M-matrix radius, with the `k`-shift theorem bounds.
pub fn m_radius(a: &Matrix, norm: NormKind, settings: &Settings) -> Result<RadiusEstimate> {
    require(a, PropertyKind::MMatrix, settings)?;
    if !norm.has_dyad_properties() {
        return Err(unsupported(norm, "the M-matrix radius"));
    }
    let n = a.n();
    let (r, sing) = singular_certificate(a, norm, settings)?;
    let off = max_off_diagonal(a);
    let off_gap = off.map_or(f64::INFINITY, |(x, _, _)| -x);
    let mut est = match off {
        Some((x, i, j)) if -x < r => {
            let mut p = Matrix::zeros(n).into_dmatrix();
            p[(i, j)] = -x;
            let cert = Certificate {
                perturbation: Matrix::from_dmatrix(p)?,
                norm: -x,
                attained: false,
            };
            RadiusEstimate::exact(-x, "m-off-diagonal", Some(cert))
        }
        _ => RadiusEstimate::exact(r, "m-regularity-radius", Some(sing)),
    };

    let caps = norm.capabilities();
    let k = 2.0 * (0..n).map(|i| a[(i, i)]).fold(f64::NEG_INFINITY, f64::max);
    let shifted = &Matrix::identity(n).scale(k) - a;
    let lower = if caps.consistent {
        (k - matrix_norm(&shifted, norm, settings)?).min(off_gap).max(0.0)
    } else {
        0.0
    };
    let upper = if caps.consistent && caps.unit_identity {
        (k - linalg::spectral_radius(&shifted)?).min(off_gap)
    } else {
        f64::INFINITY
    };
    est.bounds = Some((lower, upper));

    if norm == NormKind::MaxNorm {
        let iv = parametrize::m_matrix_interval_exact(a, &Direction::General(Matrix::ones(n)), settings)?;
        let via_interval = (-iv.lo).min(iv.hi);
        let value = est.lower;
        if (via_interval - value).abs() > 1e-9 * (1.0 + value) {
            est.notes.push(format!(
                "max-norm cross-check differs: formula {value}, parametrization {via_interval}"
            ));
        } else {
            est.notes.push("max-norm cross-check agrees".into());
        }
    }
    Ok(est)
}

/// H-matrix radius: exact for the max norm, bounds otherwise.
pub fn h_radius(a: &Matrix, norm: NormKind, settings: &Settings) -> Result<RadiusEstimate> {
    let n = a.n();
    let cmp = comparison_matrix(a);
    if !properties::check(a, PropertyKind::HMatrix, settings)?.holds {
        // A singular M-matrix as comparison matrix sits on the boundary of the class.
        let eps = 1e-8 * (1.0 + a.max_abs());
        let nudged = &cmp + &Matrix::identity(n).scale(eps);
        if properties::check(&nudged, PropertyKind::MMatrix, settings)?.holds {
            let mut est = RadiusEstimate::exact(0.0, "h-boundary", None);
            est.notes.push("comparison matrix is a singular M-matrix".into());
            return Ok(est);
        }
        return Err(Error::PreconditionFailed(
            "matrix is not h-matrix: comparison matrix is not an M-matrix".into(),
        ));
    }

    if norm == NormKind::MaxNorm {
        let inv = linalg::inverse(&cmp)?;
        let d = 1.0 / inv.to_row_major().iter().sum::<f64>();
        let sign = |x: f64| if x < 0.0 { -1.0 } else { 1.0 };
        let p = Matrix::from_row_major(
            n,
            &(0..n * n)
                .map(|k| {
                    let (i, j) = (k / n, k % n);
                    if i == j {
                        -d * sign(a[(i, i)])
                    } else {
                        d * sign(a[(i, j)])
                    }
                })
                .collect::<Vec<_>>(),
        )?;
        let cert = Certificate {
            perturbation: p,
            norm: d,
            attained: true,
        };
        return Ok(RadiusEstimate::exact(d, "h-max-norm-comparison", Some(cert)));
    }

    let caps = norm.capabilities();
    let k = 2.0 * (0..n).map(|i| a[(i, i)].abs()).fold(0.0, f64::max);
    let g = &Matrix::identity(n).scale(k) - &cmp;
    let mut lower: Option<(f64, &'static str)> = None;
    let mut raise = |v: f64, tag: &'static str| {
        if lower.is_none_or(|(l, _)| v > l) {
            lower = Some((v, tag));
        }
    };
    if caps.consistent && caps.monotone && caps.absolute {
        raise(k - matrix_norm(&g, norm, settings)?, "k-shift");
    }
    if norm == NormKind::Spectral {
        let root_n = (n as f64).sqrt();
        for other in [NormKind::Frobenius, NormKind::Induced1, NormKind::InducedInf] {
            raise((k - matrix_norm(&g, other, settings)?) / root_n, "k-shift-scaled");
        }
    }
    if caps.monotone && caps.absolute {
        raise(norms::regularity_radius(&cmp, norm, settings)?, "comparison-regularity");
    }

    let mut upper = (f64::INFINITY, "none");
    if caps.consistent && caps.unit_identity {
        upper = (k - linalg::spectral_radius(&g)?, "k-spectral-radius");
    }
    let mut certificate = None;
    if norm != NormKind::InfOne {
        let (r, cert) = singular_certificate(a, norm, settings)?;
        if r <= upper.0 {
            upper = (r, "regularity-radius");
            certificate = Some(cert);
        }
    }
    let Some((lo, lo_tag)) = lower else {
        if upper.0.is_infinite() {
            return Err(unsupported(norm, "the H-matrix radius bounds"));
        }
        return Ok(RadiusEstimate {
            lower: 0.0,
            upper: upper.0,
            exact: false,
            method: "h-bounds",
            certificate,
            bounds: None,
            notes: vec![format!("upper from {}", upper.1)],
        });
    };
    let lo = lo.max(0.0);
    let exact = (upper.0 - lo).abs() <= 1e-9 * (1.0 + upper.0);
    Ok(RadiusEstimate {
        lower: if exact { upper.0 } else { lo },
        upper: upper.0,
        exact,
        method: "h-bounds",
        certificate,
        bounds: None,
        notes: vec![format!("lower from {lo_tag}, upper from {}", upper.1)],
    })
}

/// Totally positive radius over the initial minors.
pub fn tp_radius(a: &Matrix, norm: NormKind, settings: &Settings) -> Result<RadiusEstimate> {
    require(a, PropertyKind::TotallyPositive, settings)?;
    let n = a.n();
    if norm == NormKind::MaxNorm {
        let s = Matrix::checkerboard_vector(n);
        let iv = parametrize::tp_interval(a, &Direction::RankOne(s.clone(), s.clone()), settings)?;
        // A - δssᵀ leaves the class at δ = hi, A + δssᵀ at δ = -lo.
        let d = (-iv.lo).min(iv.hi);
        let step = if iv.hi <= -iv.lo { iv.hi } else { iv.lo };
        let cert = Certificate {
            perturbation: Matrix::outer(&s, &s).scale(-step),
            norm: d,
            attained: true,
        };
        return Ok(RadiusEstimate::exact(d, "tp-checkerboard", Some(cert)));
    }
    let (r, cert) = min_submatrix_radius(a, initial_minor_index_sets(n), norm, true, settings)?
        .expect("n >= 1");
    Ok(RadiusEstimate::exact(r, "tp-initial-minors", Some(cert)))
}

/// Deleting row `i` and column `j` for each listed pair; empty when `n = 1`.
fn deletions(n: usize, off_diagonal_only: bool) -> Vec<(IndexSet, IndexSet)> {
    let mut out = vec![];
    for i in 0..n {
        for j in 0..n {
            if off_diagonal_only && i == j {
                continue;
            }
            if let (Some(r), Some(c)) = (IndexSet::all_but(n, i), IndexSet::all_but(n, j)) {
                out.push((r, c));
            }
        }
    }
    out
}

/// The whole matrix against the selected deleted minors.
fn cofactor_radius(
    a: &Matrix,
    norm: NormKind,
    off_diagonal_only: bool,
    method: &'static str,
    settings: &Settings,
) -> Result<RadiusEstimate> {
    let (r, cert) = singular_certificate(a, norm, settings)?;
    // A vanishing cofactor only zeroes an entry of the inverse; the class is
    // lost just past it.
    let minors = min_submatrix_radius(a, deletions(a.n(), off_diagonal_only), norm, false, settings)?;
    Ok(match minors {
        Some((m, c)) if m < r => RadiusEstimate::exact(m, method, Some(c)),
        _ => RadiusEstimate::exact(r, method, Some(cert)),
    })
}

pub fn inverse_m_radius(a: &Matrix, norm: NormKind, settings: &Settings) -> Result<RadiusEstimate> {
    require(a, PropertyKind::InverseMMatrix, settings)?;
    cofactor_radius(a, norm, true, "inverse-m-minors", settings)
}

pub fn inverse_nonneg_radius(a: &Matrix, norm: NormKind, settings: &Settings) -> Result<RadiusEstimate> {
    require(a, PropertyKind::InverseNonnegative, settings)?;
    let n = a.n();
    if norm == NormKind::MaxNorm {
        let e = vec![1.0; n];
        let iv = parametrize::inverse_nonneg_interval(a, &Direction::RankOne(e.clone(), e), settings)?;
        let d = (-iv.lo).min(iv.hi);
        let (step, attained) = if iv.hi <= -iv.lo {
            (iv.hi, !iv.hi_closed)
        } else {
            (iv.lo, !iv.lo_closed)
        };
        let cert = Certificate {
            perturbation: Matrix::ones(n).scale(-step),
            norm: d,
            attained,
        };
        return Ok(RadiusEstimate::exact(d, "inverse-nonnegative-ones", Some(cert)));
    }
    cofactor_radius(a, norm, false, "inverse-nonnegative-minors", settings)
}

/// M-matrix radius against inverse-nonnegative radius of the same matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct MvsIn {
    pub m: RadiusEstimate,
    pub inverse_nonnegative: RadiusEstimate,
    pub equal: bool,
}

pub fn compare_m_vs_in(a: &Matrix, norm: NormKind, settings: &Settings) -> Result<MvsIn> {
    let m = m_radius(a, norm, settings)?;
    let inn = inverse_nonneg_radius(a, norm, settings)?;
    let (x, y) = (m.lower, inn.lower);
    if x > y + 1e-9 * (1.0 + y) {
        return Err(Error::InvariantViolated(format!(
            "M-matrix radius {x} exceeds inverse-nonnegative radius {y}"
        )));
    }
    Ok(MvsIn {
        equal: (x - y).abs() <= 1e-9 * (1.0 + y),
        m,
        inverse_nonnegative: inn,
    })
}

pub fn radius(a: &Matrix, kind: PropertyKind, norm: NormKind, settings: &Settings) -> Result<RadiusEstimate> {
    match kind {
        PropertyKind::PositiveDeterminant => det_radius(a, norm, settings),
        PropertyKind::PositiveDefinite => pd_radius(a, norm, settings),
        PropertyKind::PMatrix => p_radius(a, norm, settings),
        PropertyKind::MMatrix => m_radius(a, norm, settings),
        PropertyKind::HMatrix => h_radius(a, norm, settings),
        PropertyKind::TotallyPositive => tp_radius(a, norm, settings),
        PropertyKind::InverseMMatrix => inverse_m_radius(a, norm, settings),
        PropertyKind::InverseNonnegative => inverse_nonneg_radius(a, norm, settings),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn m(rows: &[&[f64]]) -> Matrix {
        Matrix::from_rows(rows).unwrap()
    }

    fn s() -> Settings {
        Settings::default()
    }

    fn a0() -> Matrix {
        m(&[&[10.0, -2.0], &[-1.0, 10.0]])
    }

    fn sigma_min_a0() -> f64 {
        ((205.0 - 3609.0_f64.sqrt()) / 2.0).sqrt()
    }

    #[test]
    fn det_examples() {
        let r = det_radius(&Matrix::identity(3), NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), 1.0, epsilon = 1e-12);
        let r = det_radius(&a0(), NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), sigma_min_a0(), epsilon = 1e-10);
        let r = det_radius(&Matrix::identity(2), NormKind::MaxNorm, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), 0.5, epsilon = 1e-14);
    }

    #[test]
    fn pd_examples() {
        let r = pd_radius(&Matrix::identity(2), NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), 1.0, epsilon = 1e-12);
        let r = pd_radius(&Matrix::identity(2), NormKind::MaxNorm, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), 0.5, epsilon = 1e-12);
        let r = pd_radius(&Matrix::diagonal(&[2.0, 5.0]), NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), 2.0, epsilon = 1e-12);
        assert!(matches!(
            pd_radius(&Matrix::identity(2), NormKind::Frobenius, &s()),
            Err(Error::UnsupportedNormForTheorem { .. })
        ));
        // Inverse with mixed signs goes through the sign enumeration.
        let a = m(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let r = pd_radius(&a, NormKind::MaxNorm, &s()).unwrap();
        assert_eq!(r.method, "pd-sign-quadratic");
        // y = (1, -1) gives yᵀA⁻¹y = 2.
        assert_relative_eq!(r.value().unwrap(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn p_examples() {
        let r = p_radius(&m(&[&[10.0, 5.0], &[-5.0, 1.0]]), NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), 1.0, epsilon = 1e-12);
        let r = p_radius(&m(&[&[10.0, 2.0], &[2.0, 1.0]]), NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), (11.0 - 97.0_f64.sqrt()) / 2.0, epsilon = 1e-12);
        let r = p_radius(&a0(), NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), sigma_min_a0(), epsilon = 1e-10);
    }

    #[test]
    fn m_examples() {
        let r = m_radius(&a0(), NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), 1.0, epsilon = 1e-12);
        let (lo, hi) = r.bounds.unwrap();
        assert_relative_eq!(lo, 1.0, epsilon = 1e-12);
        assert_relative_eq!(hi, 1.0, epsilon = 1e-12);
        let b = m(&[&[20.0, -12.0], &[-11.0, 20.0]]);
        let r = m_radius(&b, NormKind::Spectral, &s()).unwrap();
        assert!((r.value().unwrap() - 8.5062).abs() < 1e-3);
        let (lo, hi) = r.bounds.unwrap();
        assert!((lo - 8.4938).abs() < 1e-3, "{lo}");
        assert!((hi - 8.5109).abs() < 1e-3, "{hi}");
        let r = m_radius(&Matrix::identity(3), NormKind::Spectral, &s()).unwrap();
        assert_eq!(r.value(), Some(0.0));
        assert!(r.certificate.is_none());
        let r = m_radius(&a0(), NormKind::MaxNorm, &s()).unwrap();
        assert_eq!(r.notes, vec!["max-norm cross-check agrees".to_string()]);
    }

    #[test]
    fn h_examples() {
        let r = h_radius(&a0(), NormKind::Spectral, &s()).unwrap();
        assert!((r.lower - 5.6569).abs() < 1e-3, "{}", r.lower);
        assert!((r.upper - 8.5125).abs() < 1e-3, "{}", r.upper);
        let c = m(&[&[2.0, 1.0, 1.0], &[1.0, 2.0, 1.0], &[1.0, 1.0, 2.0]]);
        let r = h_radius(&c, NormKind::Spectral, &s()).unwrap();
        assert_eq!(r.value(), Some(0.0));
        let r = h_radius(&Matrix::identity(2), NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.lower, 0.5_f64.sqrt(), epsilon = 1e-12);
        assert_relative_eq!(r.upper, 1.0, epsilon = 1e-12);
        assert!(h_radius(&m(&[&[1.0, 2.0], &[2.0, 1.0]]), NormKind::Spectral, &s()).is_err());
    }

    #[test]
    fn tp_examples() {
        for norm in [NormKind::Spectral, NormKind::MaxNorm, NormKind::Induced1] {
            let r = tp_radius(&m(&[&[1.0]]), norm, &s()).unwrap();
            assert_relative_eq!(r.value().unwrap(), 1.0, epsilon = 1e-12);
        }
        let t = m(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let r = tp_radius(&t, NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), 1.0, epsilon = 1e-12);
        // A ∓ δssᵀ: the checkerboard interval is (-1, 1/2).
        let r = tp_radius(&t, NormKind::MaxNorm, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), 0.5, epsilon = 1e-12);
    }

    #[test]
    fn inverse_examples() {
        let t = m(&[&[2.0, 1.0], &[1.0, 2.0]]);
        for norm in [NormKind::Spectral, NormKind::Frobenius] {
            let r = inverse_m_radius(&t, norm, &s()).unwrap();
            assert_relative_eq!(r.value().unwrap(), 1.0, epsilon = 1e-12);
        }
        let r = inverse_m_radius(&m(&[&[5.0]]), NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), 5.0, epsilon = 1e-12);

        let r = inverse_nonneg_radius(&m(&[&[10.0, -1.0], &[-1.0, 10.0]]), NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), 1.0, epsilon = 1e-12);
        assert!(!r.certificate.unwrap().attained);
        let r = inverse_nonneg_radius(&m(&[&[10.0, -9.0], &[-9.0, 10.0]]), NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), 1.0, epsilon = 1e-9);
        let r = inverse_nonneg_radius(&Matrix::identity(1), NormKind::Spectral, &s()).unwrap();
        assert_relative_eq!(r.value().unwrap(), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn m_versus_in() {
        for a in [
            m(&[&[10.0, -1.0], &[-1.0, 10.0]]),
            m(&[&[10.0, -9.0], &[-9.0, 10.0]]),
            m(&[&[2.0, -1.0], &[-1.0, 2.0]]),
        ] {
            let c = compare_m_vs_in(&a, NormKind::Spectral, &s()).unwrap();
            assert!(c.equal, "{c:?}");
            assert_relative_eq!(c.m.value().unwrap(), 1.0, epsilon = 1e-9);
        }
    }
}

//! Brute-force referee: grid scans in `δ`, structured and random searches
//! of norm balls, and exhaustive enumerations for small `n`.
//!
//! Nothing here relies on the closed-form theorems; every verdict comes
//! from [`properties::check`] on explicitly perturbed matrices.

use nalgebra::SymmetricEigen;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::linalg;
use crate::matrix::{IndexSet, Matrix};
use crate::norms::{matrix_norm, nearest_singular, NormKind};
use crate::parametrize::{Direction, Interval, IntervalSet};
use crate::properties::{self, PropertyKind};
use crate::Settings;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleConfig {
    pub grid_points: usize,
    pub random_trials: usize,
    pub seed: u64,
    /// Perturbations are drawn on the sphere of radius `shrink·δ`.
    pub shrink: f64,
    /// Directions tried before the random ones, e.g. a known certificate.
    pub extra_directions: Vec<Matrix>,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            grid_points: 200,
            random_trials: 500,
            seed: 0x5eed,
            shrink: 0.99,
            extra_directions: vec![],
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Counterexample {
    Delta(f64),
    Perturbation(Matrix),
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleVerdict {
    pub consistent: bool,
    pub counterexample: Option<Counterexample>,
    pub detail: String,
}

impl OracleVerdict {
    fn ok(detail: impl Into<String>) -> Self {
        OracleVerdict {
            consistent: true,
            counterexample: None,
            detail: detail.into(),
        }
    }

    fn broken(c: Counterexample, detail: impl Into<String>) -> Self {
        OracleVerdict {
            consistent: false,
            counterexample: Some(c),
            detail: detail.into(),
        }
    }
}

fn holds(a: &Matrix, kind: PropertyKind, settings: &Settings) -> Result<bool, String> {
    properties::check(a, kind, settings)
        .map(|r| r.holds)
        .map_err(|e| e.to_string())
}

/// Sample points of one claimed component: an interior grid, the closed
/// endpoints, and a few far points along unbounded ends.
fn interior_samples(iv: &Interval, window: f64, grid: usize) -> Vec<f64> {
    let (lo, hi) = match (iv.lo.is_finite(), iv.hi.is_finite()) {
        (true, true) => (iv.lo, iv.hi),
        (true, false) => (iv.lo, iv.lo + window),
        (false, true) => (iv.hi - window, iv.hi),
        (false, false) => (-window, window),
    };
    let mut pts: Vec<f64> = (1..=grid)
        .map(|k| lo + (hi - lo) * k as f64 / (grid + 1) as f64)
        .collect();
    if !iv.lo.is_finite() {
        pts.extend([10.0, 100.0].map(|f| hi - f * window));
    }
    if !iv.hi.is_finite() {
        pts.extend([10.0, 100.0].map(|f| lo + f * window));
    }
    if iv.lo_closed {
        pts.push(iv.lo);
    }
    if iv.hi_closed {
        pts.push(iv.hi);
    }
    if iv.lo == iv.hi {
        pts.retain(|&x| x == iv.lo);
    }
    pts
}

/// Checks a claimed admissible set by scanning `δ`.
///
/// Every sample inside a component must keep the property. When `exact`
/// the property must also fail just beyond each finite endpoint, at
/// offsets `1e-6·s` and `1e-5·s` with `s = 1 + |endpoint|`.
pub fn verify_interval(
    a: &Matrix,
    d: &Direction,
    kind: PropertyKind,
    claimed: &IntervalSet,
    exact: bool,
    cfg: &OracleConfig,
    settings: &Settings,
) -> OracleVerdict {
    let at = d.to_matrix();
    let window = if at.max_abs() > 0.0 {
        10.0 * (1.0 + a.max_abs() / at.max_abs())
    } else {
        10.0
    };
    let at_delta = |delta: f64| holds(&a.shifted(delta, &at), kind, settings);
    let mut checked = 0usize;
    for iv in claimed.components() {
        for delta in interior_samples(iv, window, cfg.grid_points) {
            checked += 1;
            match at_delta(delta) {
                Ok(true) => {}
                Ok(false) => {
                    return OracleVerdict::broken(
                        Counterexample::Delta(delta),
                        format!("property fails at δ = {delta} inside claimed {iv}"),
                    )
                }
                Err(e) => return OracleVerdict::broken(Counterexample::Delta(delta), e),
            }
        }
        if !exact {
            continue;
        }
        let mut beyond = vec![];
        if iv.lo.is_finite() {
            let s = 1.0 + iv.lo.abs();
            beyond.extend([iv.lo - 1e-6 * s, iv.lo - 1e-5 * s]);
        }
        if iv.hi.is_finite() {
            let s = 1.0 + iv.hi.abs();
            beyond.extend([iv.hi + 1e-6 * s, iv.hi + 1e-5 * s]);
        }
        for delta in beyond.into_iter().filter(|&x| !claimed.contains(x)) {
            checked += 1;
            match at_delta(delta) {
                Ok(false) => {}
                Ok(true) => {
                    return OracleVerdict::broken(
                        Counterexample::Delta(delta),
                        format!("property still holds at δ = {delta} just outside {iv}"),
                    )
                }
                Err(e) => return OracleVerdict::broken(Counterexample::Delta(delta), e),
            }
        }
    }
    OracleVerdict::ok(format!("{checked} values of δ agree with {claimed}"))
}

/// Every pair of equal-size row and column subsets.
fn square_submatrix_pairs(n: usize) -> Vec<(IndexSet, IndexSet)> {
    let subsets: Vec<IndexSet> = (1u64..1u64 << n).map(|m| IndexSet::from_mask(m, n)).collect();
    let mut out = vec![];
    for r in &subsets {
        for c in subsets.iter().filter(|c| c.len() == r.len()) {
            out.push((r.clone(), c.clone()));
        }
    }
    out
}

fn sign_vectors(n: usize) -> impl Iterator<Item = Vec<f64>> {
    (0u64..1u64 << n).map(move |m| {
        (0..n)
            .map(|i| if m >> i & 1 == 1 { -1.0 } else { 1.0 })
            .collect()
    })
}

/// Structured perturbation directions, unscaled.
///
/// Rank-one dyads embedded in square submatrices (every singular pair
/// and the nearest-singular direction of the submatrix in `norm`), `±I`,
/// `E`, the checkerboard `ssᵀ`, `yyᵀ` for sign vectors `y`, the sign
/// pattern that shrinks the diagonal and grows the off-diagonal
/// magnitudes, and for `n <= 3` every sign matrix.
pub fn structured_directions(a: &Matrix, norm: NormKind, settings: &Settings) -> Vec<Matrix> {
    let n = a.n();
    let mut out = vec![Matrix::identity(n), Matrix::ones(n)];
    let s = Matrix::checkerboard_vector(n);
    out.push(Matrix::outer(&s, &s));
    let pairs = if n <= 5 {
        square_submatrix_pairs(n)
    } else {
        let full = IndexSet::range(0, n);
        let mut p = properties::initial_minor_index_sets(n);
        p.push((full.clone(), full));
        for i in 0..n {
            for j in 0..n {
                if let (Some(r), Some(c)) = (IndexSet::all_but(n, i), IndexSet::all_but(n, j)) {
                    p.push((r, c));
                }
            }
        }
        p
    };
    for (rows, cols) in pairs {
        let sub = linalg::submatrix(a, &rows, &cols).expect("equal sizes");
        let svd = sub.as_dmatrix().clone().svd(true, true);
        let (u, vt) = (svd.u.expect("requested"), svd.v_t.expect("requested"));
        for k in 0..sub.n() {
            let uk: Vec<f64> = u.column(k).iter().copied().collect();
            let vk: Vec<f64> = vt.row(k).iter().copied().collect();
            out.push(Matrix::embed(n, &rows, &cols, &Matrix::outer(&uk, &vk)));
        }
        if let Ok(ns) = nearest_singular(&sub, norm, settings) {
            out.push(Matrix::embed(n, &rows, &cols, &ns.perturbation));
        }
    }
    if n <= 12 {
        out.extend(sign_vectors(n).step_by(2).map(|y| Matrix::outer(&y, &y)));
    }
    let sign = |x: f64| if x < 0.0 { -1.0 } else { 1.0 };
    out.push(Matrix::from_fn(n, |i, j| {
        if i == j {
            -sign(a[(i, j)])
        } else {
            sign(a[(i, j)])
        }
    }));
    let sym = SymmetricEigen::new(a.symmetric_part().into_dmatrix());
    for k in 0..n {
        let v: Vec<f64> = sym.eigenvectors.column(k).iter().copied().collect();
        out.push(Matrix::outer(&v, &v));
    }
    if n <= 3 {
        out.extend(
            sign_vectors(n * n)
                .map(|v| Matrix::from_row_major(n, &v).expect("finite signs")),
        );
    }
    out
}

/// Searches the ball of radius `shrink·delta` for a matrix leaving the class.
pub fn falsify_radius(
    a: &Matrix,
    kind: PropertyKind,
    norm: NormKind,
    delta: f64,
    cfg: &OracleConfig,
    settings: &Settings,
) -> OracleVerdict {
    search_ball(a, kind, norm, cfg.shrink * delta, cfg, settings)
}

fn search_ball(
    a: &Matrix,
    kind: PropertyKind,
    norm: NormKind,
    target: f64,
    cfg: &OracleConfig,
    settings: &Settings,
) -> OracleVerdict {
    let n = a.n();
    let symmetric = kind == PropertyKind::PositiveDefinite;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let structured = structured_directions(a, norm, settings);
    let random = (0..cfg.random_trials).map(|_| {
        Matrix::from_fn(n, |_, _| StandardNormal.sample(&mut rng))
    });
    let mut tried = 0usize;
    let candidates = structured
        .into_iter()
        .chain(cfg.extra_directions.iter().cloned())
        .flat_map(|d| {
            let neg = -&d;
            [d, neg]
        })
        .chain(random);
    for dir in candidates {
        let dir = if symmetric { dir.symmetric_part() } else { dir };
        let size = match matrix_norm(&dir, norm, settings) {
            Ok(s) => s,
            Err(e) => return OracleVerdict::broken(Counterexample::Perturbation(dir), e.to_string()),
        };
        if size <= 0.0 || !size.is_finite() {
            continue;
        }
        let p = dir.scale(target / size);
        tried += 1;
        match holds(&(a + &p), kind, settings) {
            Ok(true) => {}
            Ok(false) => {
                return OracleVerdict::broken(
                    Counterexample::Perturbation(p),
                    format!("{kind} lost at perturbation norm {target}"),
                )
            }
            Err(e) => return OracleVerdict::broken(Counterexample::Perturbation(p), e),
        }
    }
    OracleVerdict::ok(format!("{tried} perturbations of norm {target} keep {kind}"))
}

/// Empirical upper bound on the radius: the smallest perturbation norm at
/// which a violation was found, or `+∞` if none up to `10·‖A‖`.
pub fn radius_upper_search(
    a: &Matrix,
    kind: PropertyKind,
    norm: NormKind,
    cfg: &OracleConfig,
    settings: &Settings,
) -> f64 {
    let scale = matrix_norm(a, norm, settings).unwrap_or_else(|_| a.max_abs());
    let violation = |t: f64| match search_ball(a, kind, norm, t, cfg, settings) {
        OracleVerdict {
            counterexample: Some(Counterexample::Perturbation(p)),
            ..
        } => Some(p),
        _ => None,
    };
    let mut hi = 10.0 * scale.max(f64::MIN_POSITIVE);
    let Some(mut witness) = violation(hi) else {
        return f64::INFINITY;
    };
    let mut lo = 0.0;
    let tol = 1e-4 * (1.0 + scale);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        match violation(mid) {
            Some(p) => {
                hi = mid;
                witness = p;
            }
            None => lo = mid,
        }
    }
    // Shrink the final witness along its own direction.
    let (mut s_lo, mut s_hi) = (0.0, 1.0);
    for _ in 0..60 {
        let mid = 0.5 * (s_lo + s_hi);
        if holds(&(a + &witness.scale(mid)), kind, settings) == Ok(false) {
            s_hi = mid;
        } else {
            s_lo = mid;
        }
    }
    hi * s_hi
}

/// Smallest `δ > 0` with `min_y λ_min(A - δyyᵀ) <= 0` over sign vectors `y`,
/// by bisection. `A` must be symmetric positive definite.
pub fn hertz_pd_maxnorm_radius(a: &Matrix) -> f64 {
    let n = a.n();
    let ys: Vec<Vec<f64>> = sign_vectors(n).step_by(2).collect();
    let still_pd = |d: f64| {
        ys.iter().all(|y| {
            let b = a.shifted(d, &Matrix::outer(y, y));
            linalg::lambda_min_sym(&b).map(|l| l > 0.0).unwrap_or(false)
        })
    };
    let (mut lo, mut hi) = (0.0, a.as_dmatrix().norm() + 1.0);
    while hi - lo > 1e-13 * (1.0 + hi) {
        let mid = 0.5 * (lo + hi);
        if still_pd(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Total positivity by checking every square submatrix.
pub fn totally_positive_brute(a: &Matrix, settings: &Settings) -> bool {
    square_submatrix_pairs(a.n()).into_iter().all(|(r, c)| {
        let sub = linalg::submatrix(a, &r, &c).expect("equal sizes");
        let scale = linalg::det_scale(&sub);
        scale > 0.0 && linalg::det_raw(&sub) > settings.rel_tol * scale
    })
}

//! Admissible sets `{δ : A - δÃ has the property}`.
//!
//! Exact procedures return the connected set containing `δ = 0` (or, for
//! the positive determinant, every component). The simple M-matrix bounds
//! and the H-matrix iteration return inner approximations.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::Matrix;
use crate::norms::comparison_matrix;
use crate::properties::{self, initial_minor_index_sets, principal_index_sets, PropertyKind};
use crate::Settings;

/// Coefficients below this multiple of their natural scale count as zero.
const SNAP_REL: f64 = 1e-12;

/// A real interval with independently open or closed ends.
///
/// Infinite ends are always open. The empty interval is the canonical
/// `(0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: f64, hi: f64, lo_closed: bool, hi_closed: bool) -> Self {
        let iv = Interval {
            lo,
            hi,
            lo_closed: lo_closed && lo.is_finite(),
            hi_closed: hi_closed && hi.is_finite(),
        };
        if iv.is_empty() {
            Interval::empty()
        } else {
            iv
        }
    }

    pub fn open(lo: f64, hi: f64) -> Self {
        Self::new(lo, hi, false, false)
    }

    pub fn closed(lo: f64, hi: f64) -> Self {
        Self::new(lo, hi, true, true)
    }

    pub fn full() -> Self {
        Interval {
            lo: f64::NEG_INFINITY,
            hi: f64::INFINITY,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub fn empty() -> Self {
        Interval {
            lo: 0.0,
            hi: 0.0,
            lo_closed: false,
            hi_closed: false,
        }
    }

    pub fn point(x: f64) -> Self {
        Self::closed(x, x)
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }

    pub fn contains(&self, x: f64) -> bool {
        let above = x > self.lo || (self.lo_closed && x == self.lo);
        let below = x < self.hi || (self.hi_closed && x == self.hi);
        above && below && !self.is_empty()
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        if self.is_empty() || other.is_empty() {
            return Interval::empty();
        }
        let (lo, lo_closed) = if self.lo > other.lo {
            (self.lo, self.lo_closed)
        } else if other.lo > self.lo {
            (other.lo, other.lo_closed)
        } else {
            (self.lo, self.lo_closed && other.lo_closed)
        };
        let (hi, hi_closed) = if self.hi < other.hi {
            (self.hi, self.hi_closed)
        } else if other.hi < self.hi {
            (other.hi, other.hi_closed)
        } else {
            (self.hi, self.hi_closed && other.hi_closed)
        };
        Interval::new(lo, hi, lo_closed, hi_closed)
    }

    /// Whether the two intervals overlap or share an endpoint that one of them contains.
    fn touches(&self, other: &Interval) -> bool {
        let (a, b) = if self.lo <= other.lo { (self, other) } else { (other, self) };
        b.lo < a.hi || (b.lo == a.hi && (a.hi_closed || b.lo_closed))
    }

    fn hull(&self, other: &Interval) -> Interval {
        let (lo, lo_closed) = match self.lo.total_cmp(&other.lo) {
            std::cmp::Ordering::Less => (self.lo, self.lo_closed),
            std::cmp::Ordering::Greater => (other.lo, other.lo_closed),
            std::cmp::Ordering::Equal => (self.lo, self.lo_closed || other.lo_closed),
        };
        let (hi, hi_closed) = match self.hi.total_cmp(&other.hi) {
            std::cmp::Ordering::Greater => (self.hi, self.hi_closed),
            std::cmp::Ordering::Less => (other.hi, other.hi_closed),
            std::cmp::Ordering::Equal => (self.hi, self.hi_closed || other.hi_closed),
        };
        Interval::new(lo, hi, lo_closed, hi_closed)
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("{}");
        }
        let end = |x: f64| {
            if x == f64::INFINITY {
                "+inf".to_string()
            } else if x == f64::NEG_INFINITY {
                "-inf".to_string()
            } else {
                format!("{x}")
            }
        };
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            end(self.lo),
            end(self.hi),
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// A sorted union of pairwise disjoint, non-touching intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalSet {
    components: Vec<Interval>,
}

impl IntervalSet {
    /// Normalizes arbitrary intervals into a disjoint sorted union.
    pub fn from_intervals(mut parts: Vec<Interval>) -> Self {
        parts.retain(|iv| !iv.is_empty());
        parts.sort_by(|a, b| a.lo.total_cmp(&b.lo).then(b.lo_closed.cmp(&a.lo_closed)));
        let mut out: Vec<Interval> = Vec::with_capacity(parts.len());
        for iv in parts {
            match out.last_mut() {
                Some(last) if last.touches(&iv) => *last = last.hull(&iv),
                _ => out.push(iv),
            }
        }
        IntervalSet { components: out }
    }

    pub fn single(iv: Interval) -> Self {
        Self::from_intervals(vec![iv])
    }

    pub fn empty() -> Self {
        IntervalSet { components: vec![] }
    }

    pub fn components(&self) -> &[Interval] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn contains(&self, x: f64) -> bool {
        self.components.iter().any(|c| c.contains(x))
    }

    /// The component containing `x`, or the empty interval.
    pub fn component_containing(&self, x: f64) -> Interval {
        self.components
            .iter()
            .copied()
            .find(|c| c.contains(x))
            .unwrap_or_else(Interval::empty)
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        f.write_str(&parts.join(" U "))
    }
}

/// Perturbation direction `Ã`.
#[derive(Debug, Clone, PartialEq)]
pub enum Direction {
    General(Matrix),
    /// `Ã = a bᵀ`.
    RankOne(Vec<f64>, Vec<f64>),
}

impl Direction {
    pub fn to_matrix(&self) -> Matrix {
        match self {
            Direction::General(m) => m.clone(),
            Direction::RankOne(a, b) => Matrix::outer(a, b),
        }
    }

    fn validate(&self, n: usize) -> Result<()> {
        match self {
            Direction::General(m) if m.n() != n => Err(Error::DimensionMismatch(format!(
                "direction is {}x{}, matrix is {n}x{n}",
                m.n(),
                m.n()
            ))),
            Direction::RankOne(a, b) if a.len() != n || b.len() != n => {
                Err(Error::DimensionMismatch(format!(
                    "rank-one vectors of length {} and {}, matrix is {n}x{n}",
                    a.len(),
                    b.len()
                )))
            }
            Direction::RankOne(a, b)
                if a.iter().all(|&x| x == 0.0) || b.iter().all(|&x| x == 0.0) =>
            {
                Err(Error::PreconditionFailed("rank-one vectors must be nonzero".into()))
            }
            Direction::RankOne(a, b)
                if a.iter().chain(b.iter()).any(|x| !x.is_finite()) =>
            {
                Err(Error::PreconditionFailed("rank-one vectors must be finite".into()))
            }
            _ => Ok(()),
        }
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

fn snap(x: f64, scale: f64) -> f64 {
    if x.abs() <= SNAP_REL * scale {
        0.0
    } else {
        x
    }
}

/// `{δ : c·δ <= r}`, or `<` when `strict`.
///
/// A coefficient negligible against `c_scale` makes the constraint
/// independent of `δ`; it holds at `δ = 0` by precondition, so everywhere.
fn half_line(c: f64, c_scale: f64, r: f64, r_scale: f64, strict: bool) -> Interval {
    let c = snap(c, c_scale);
    let r = snap(r, r_scale);
    if c == 0.0 {
        return Interval::full();
    }
    let x = r / c;
    if c > 0.0 {
        Interval::new(f64::NEG_INFINITY, x, false, !strict)
    } else {
        Interval::new(x, f64::INFINITY, !strict, false)
    }
}

/// `{δ : o·det(P - δP̃) > 0}` (or `>= 0` when not `strict`).
fn det_sign_set(p: &Matrix, pt: &Matrix, orientation: f64, strict: bool) -> Result<IntervalSet> {
    let pencil = linalg::pencil_real_roots(p, pt)?;
    if pencil.degenerate {
        return Ok(if strict {
            IntervalSet::empty()
        } else {
            IntervalSet::single(Interval::full())
        });
    }
    let positive = |d: f64| orientation * linalg::det_raw(&p.shifted(d, pt)) > 0.0;
    let roots = pencil.roots;
    if roots.is_empty() {
        return Ok(if positive(0.0) {
            IntervalSet::single(Interval::full())
        } else {
            IntervalSet::empty()
        });
    }
    let k = roots.len();
    let mut parts = Vec::with_capacity(2 * k + 1);
    for s in 0..=k {
        let lo = if s == 0 { f64::NEG_INFINITY } else { roots[s - 1] };
        let hi = if s == k { f64::INFINITY } else { roots[s] };
        let sample = match (s == 0, s == k) {
            (true, _) => hi - 1.0,
            (_, true) => lo + 1.0,
            _ => 0.5 * (lo + hi),
        };
        if positive(sample) {
            parts.push(Interval::new(lo, hi, !strict, !strict));
        }
    }
    if !strict {
        parts.extend(roots.iter().map(|&r| Interval::point(r)));
    }
    Ok(IntervalSet::from_intervals(parts))
}

fn det_component(p: &Matrix, pt: &Matrix, orientation: f64, strict: bool) -> Result<Interval> {
    Ok(det_sign_set(p, pt, orientation, strict)?.component_containing(0.0))
}

/// Rank-one quantities `β = bᵀA⁻¹a` and `M = βA⁻¹ - A⁻¹abᵀA⁻¹` with their scales.
struct RankOneTerms {
    inv: Matrix,
    beta: f64,
    beta_scale: f64,
    m: Matrix,
    m_scale: f64,
}

fn rank_one_terms(a: &Matrix, u: &[f64], w: &[f64]) -> Result<RankOneTerms> {
    let inv = linalg::inverse(a)?;
    let n = a.n();
    let inv_u = inv.mul_vec(u);
    let w_inv = inv.transpose().mul_vec(w);
    let beta: f64 = w.iter().zip(&inv_u).map(|(x, y)| x * y).sum();
    let beta_scale: f64 = w.iter().zip(&inv_u).map(|(x, y)| (x * y).abs()).sum();
    let m = Matrix::from_fn(n, |i, j| beta * inv[(i, j)] - inv_u[i] * w_inv[j]);
    let max = |v: &[f64]| v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let m_scale = beta_scale * inv.max_abs() + max(&inv_u) * max(&w_inv);
    Ok(RankOneTerms {
        inv,
        beta,
        beta_scale,
        m,
        m_scale,
    })
}

/// `δβ < 1`.
fn pole(t: &RankOneTerms) -> Interval {
    half_line(t.beta, t.beta_scale, 1.0, 1.0, true)
}

/// `δM_ij <= (A⁻¹)_ij`, or `>=` when `flip`.
fn inverse_entry(t: &RankOneTerms, i: usize, j: usize, flip: bool) -> Interval {
    let s = if flip { -1.0 } else { 1.0 };
    half_line(
        s * t.m[(i, j)],
        t.m_scale,
        s * t.inv[(i, j)],
        t.inv.max_abs(),
        false,
    )
}

/// Positive-determinant set. General directions yield every component;
/// rank-one directions the single interval from `det(A)(1 - δbᵀA⁻¹a)`.
pub fn det_interval(a: &Matrix, d: &Direction, settings: &Settings) -> Result<IntervalSet> {
    d.validate(a.n())?;
    require(a, PropertyKind::PositiveDeterminant, settings)?;
    match d {
        Direction::General(at) => det_sign_set(a, at, 1.0, true),
        Direction::RankOne(u, w) => Ok(IntervalSet::single(pole(&rank_one_terms(a, u, w)?))),
    }
}

/// Positive-definite set: the component of the positive-determinant set
/// containing zero, for symmetric directions.
pub fn pd_interval(a: &Matrix, d: &Direction, settings: &Settings) -> Result<IntervalSet> {
    d.validate(a.n())?;
    require(a, PropertyKind::PositiveDefinite, settings)?;
    match d {
        Direction::General(at) => {
            if !at.is_symmetric(1e-10 * (1.0 + at.max_abs())) {
                return Err(Error::PreconditionFailed("direction must be symmetric".into()));
            }
            Ok(IntervalSet::single(det_component(a, at, 1.0, true)?))
        }
        Direction::RankOne(u, w) => {
            let scale = 1.0 + u.iter().chain(w.iter()).fold(0.0_f64, |m, x| m.max(x.abs()));
            if u.iter().zip(w).any(|(x, y)| (x - y).abs() > 1e-12 * scale) {
                return Err(Error::PreconditionFailed(
                    "rank-one direction must be a a^T".into(),
                ));
            }
            Ok(IntervalSet::single(pole(&rank_one_terms(a, u, w)?)))
        }
    }
}

/// P-matrix set: intersection over every principal submatrix.
pub fn p_matrix_interval(a: &Matrix, d: &Direction, settings: &Settings) -> Result<Interval> {
    d.validate(a.n())?;
    let sets = principal_index_sets(a.n(), settings)?;
    require(a, PropertyKind::PMatrix, settings)?;
    let mut out = Interval::full();
    for set in sets {
        let sub = linalg::principal_submatrix(a, &set);
        let piece = match d {
            Direction::General(at) => {
                det_component(&sub, &linalg::principal_submatrix(at, &set), 1.0, true)?
            }
            Direction::RankOne(u, w) => pole(&rank_one_terms(&sub, &set.select(u), &set.select(w))?),
        };
        out = out.intersect(&piece);
    }
    Ok(out)
}

/// Which kind of constraint produced an endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Binding {
    None,
    OffDiagonal,
    Row,
}

/// Intersection of tagged half-lines, remembering which one binds each end.
struct Tagged {
    iv: Interval,
    lo: Binding,
    hi: Binding,
}

impl Tagged {
    fn new() -> Self {
        Tagged {
            iv: Interval::full(),
            lo: Binding::None,
            hi: Binding::None,
        }
    }

    fn add(&mut self, h: Interval, tag: Binding) {
        let next = self.iv.intersect(&h);
        if h.lo.is_finite() && (next.lo > self.iv.lo || (next.lo == h.lo && !h.lo_closed)) {
            self.lo = tag;
        }
        if h.hi.is_finite() && (next.hi < self.iv.hi || (next.hi == h.hi && !h.hi_closed)) {
            self.hi = tag;
        }
        self.iv = next;
    }
}

/// Simple-bounds constraints for `A - δÃ` with a fixed positive vector `v`:
/// off-diagonal entries stay nonpositive and `(A - δÃ)v > 0`.
fn simple_constraints(a: &Matrix, at: &Matrix, v: &[f64]) -> Tagged {
    let n = a.n();
    let mut t = Tagged::new();
    let (sa, sat) = (a.max_abs(), at.max_abs());
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            t.add(half_line(-at[(i, j)], sat, -a[(i, j)], sa, false), Binding::OffDiagonal);
        }
    }
    let av = a.mul_vec(v);
    let atv = at.mul_vec(v);
    let vmax = v.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    for i in 0..n {
        t.add(half_line(atv[i], sat * vmax, av[i], sa * vmax, true), Binding::Row);
    }
    t
}

/// `e` when `Ae > 0`, otherwise `A⁻¹e`; both are positive for an M-matrix.
fn positive_vector(a: &Matrix, settings: &Settings) -> Result<Vec<f64>> {
    let n = a.n();
    let e = vec![1.0; n];
    let tol = settings.rel_tol * (1.0 + a.max_abs());
    if a.mul_vec(&e).iter().all(|&x| x > tol) {
        Ok(e)
    } else {
        linalg::solve(a, &e)
    }
}

/// Closes an open finite endpoint when the property holds there.
fn close_if_holds(
    mut iv: Interval,
    a: &Matrix,
    at: &Matrix,
    kind: PropertyKind,
    settings: &Settings,
) -> Result<Interval> {
    if iv.is_empty() {
        return Ok(iv);
    }
    if iv.lo.is_finite() && !iv.lo_closed && properties::check(&a.shifted(iv.lo, at), kind, settings)?.holds {
        iv.lo_closed = true;
    }
    if iv.hi.is_finite() && !iv.hi_closed && properties::check(&a.shifted(iv.hi, at), kind, settings)?.holds {
        iv.hi_closed = true;
    }
    Ok(iv)
}

/// Inner approximation of the M-matrix set from linear sufficient conditions.
pub fn m_matrix_interval_simple(a: &Matrix, at: &Matrix, settings: &Settings) -> Result<Interval> {
    Direction::General(at.clone()).validate(a.n())?;
    require(a, PropertyKind::MMatrix, settings)?;
    let v = positive_vector(a, settings)?;
    let iv = simple_constraints(a, at, &v).iv;
    close_if_holds(iv, a, at, PropertyKind::MMatrix, settings)
}

/// Exact M-matrix set for `Ã = a bᵀ` from linear constraints.
pub fn m_matrix_interval_rank_one(
    a: &Matrix,
    u: &[f64],
    w: &[f64],
    settings: &Settings,
) -> Result<Interval> {
    let n = a.n();
    Direction::RankOne(u.to_vec(), w.to_vec()).validate(n)?;
    require(a, PropertyKind::MMatrix, settings)?;
    let t = rank_one_terms(a, u, w)?;
    let mut out = pole(&t);
    let dyad_scale = u.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
        * w.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let off = half_line(-u[i] * w[j], dyad_scale, -a[(i, j)], a.max_abs(), false);
                out = out.intersect(&off);
            }
            out = out.intersect(&inverse_entry(&t, i, j, false));
        }
    }
    Ok(out)
}

/// Exact M-matrix set: off-diagonal sign constraints intersected with the
/// positive-determinant component through zero.
pub fn m_matrix_interval_exact(a: &Matrix, d: &Direction, settings: &Settings) -> Result<Interval> {
    let n = a.n();
    d.validate(n)?;
    require(a, PropertyKind::MMatrix, settings)?;
    let at = d.to_matrix();
    let mut out = match d {
        Direction::General(_) => det_component(a, &at, 1.0, true)?,
        Direction::RankOne(u, w) => pole(&rank_one_terms(a, u, w)?),
    };
    let (sa, sat) = (a.max_abs(), at.max_abs());
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            out = out.intersect(&half_line(-at[(i, j)], sat, -a[(i, j)], sa, false));
        }
    }
    Ok(out)
}

/// Inner approximation of the H-matrix set by re-linearizing `⟨A - δÃ⟩`
/// each time an off-diagonal entry changes sign.
pub fn h_matrix_interval_iterative(a: &Matrix, at: &Matrix, settings: &Settings) -> Result<Interval> {
    let n = a.n();
    Direction::General(at.clone()).validate(n)?;
    require(a, PropertyKind::HMatrix, settings)?;
    let v = positive_vector(&comparison_matrix(a), settings)?;
    let max_anchors = n * n - n;
    let up = h_side(a, at, &v, 1.0, max_anchors, settings)?;
    let down = h_side(a, at, &v, -1.0, max_anchors, settings)?;
    Ok(Interval::new(down.0, up.0, down.1, up.1))
}

/// Walks from zero in direction `dir`; returns the reached endpoint and whether it is closed.
fn h_side(
    a: &Matrix,
    at: &Matrix,
    v: &[f64],
    dir: f64,
    max_anchors: usize,
    settings: &Settings,
) -> Result<(f64, bool)> {
    let n = a.n();
    let tol = settings.rel_tol * (1.0 + a.max_abs());
    let mut anchor = 0.0;
    let mut anchors = 0;
    loop {
        // Signs of A_δ just past the anchor on the moving side.
        let sign = |i: usize, j: usize| {
            let x = a[(i, j)] - anchor * at[(i, j)];
            let s = if x.abs() > tol { x } else { -dir * at[(i, j)] };
            if s < 0.0 {
                -1.0
            } else {
                1.0
            }
        };
        let lin = Matrix::from_fn(n, |i, j| {
            if i == j {
                sign(i, j) * a[(i, j)]
            } else {
                -sign(i, j) * a[(i, j)]
            }
        });
        let lin_t = Matrix::from_fn(n, |i, j| {
            if i == j {
                sign(i, j) * at[(i, j)]
            } else {
                -sign(i, j) * at[(i, j)]
            }
        });
        let t = simple_constraints(&lin, &lin_t, v);
        if !t.iv.contains(anchor) {
            // The linearization is not valid past this anchor; stop here.
            return Ok((anchor, true));
        }
        let (end, closed, binding) = if dir > 0.0 {
            (t.iv.hi, t.iv.hi_closed, t.hi)
        } else {
            (t.iv.lo, t.iv.lo_closed, t.lo)
        };
        if !end.is_finite() {
            return Ok((end, false));
        }
        let progressed = (end - anchor) * dir > 0.0;
        if binding == Binding::OffDiagonal && closed && progressed && anchors < max_anchors {
            anchor = end;
            anchors += 1;
            continue;
        }
        if !progressed {
            return Ok((anchor, true));
        }
        let holds = closed
            || properties::check(&a.shifted(end, at), PropertyKind::HMatrix, settings)?.holds;
        return Ok((end, holds));
    }
}

/// Totally positive set: intersection over the `n²` initial minors.
pub fn tp_interval(a: &Matrix, d: &Direction, settings: &Settings) -> Result<Interval> {
    d.validate(a.n())?;
    require(a, PropertyKind::TotallyPositive, settings)?;
    let mut out = Interval::full();
    for (rows, cols) in initial_minor_index_sets(a.n()) {
        let sub = linalg::submatrix(a, &rows, &cols)?;
        let piece = match d {
            Direction::General(at) => {
                det_component(&sub, &linalg::submatrix(at, &rows, &cols)?, 1.0, true)?
            }
            Direction::RankOne(u, w) => pole(&rank_one_terms(&sub, &rows.select(u), &cols.select(w))?),
        };
        out = out.intersect(&piece);
    }
    Ok(out)
}

/// Cofactor sign sets: `o·det(A_δ) > 0` and, for each selected `(i, j)`,
/// `o·(-1)^{i+j}·sign·det(A^{ji}_δ) >= 0`.
fn cofactor_interval(
    a: &Matrix,
    at: &Matrix,
    sign: f64,
    off_diagonal_only: bool,
) -> Result<Interval> {
    let n = a.n();
    let o = linalg::det_raw(a).signum();
    let mut out = det_component(a, at, o, true)?;
    for i in 0..n {
        for j in 0..n {
            if off_diagonal_only && i == j {
                continue;
            }
            let (Some(m), Some(mt)) = (linalg::minor_matrix(a, j, i), linalg::minor_matrix(at, j, i))
            else {
                continue;
            };
            let parity = if (i + j) % 2 == 0 { 1.0 } else { -1.0 };
            out = out.intersect(&det_component(&m, &mt, o * parity * sign, false)?);
        }
    }
    Ok(out)
}

/// Inverse M-matrix set.
pub fn inverse_m_interval(a: &Matrix, d: &Direction, settings: &Settings) -> Result<Interval> {
    let n = a.n();
    d.validate(n)?;
    require(a, PropertyKind::InverseMMatrix, settings)?;
    match d {
        Direction::General(at) => cofactor_interval(a, at, -1.0, true),
        Direction::RankOne(u, w) => {
            let t = rank_one_terms(a, u, w)?;
            let mut out = pole(&t);
            for i in 0..n {
                for j in (0..n).filter(|&j| j != i) {
                    out = out.intersect(&inverse_entry(&t, i, j, true));
                }
            }
            Ok(out)
        }
    }
}

/// Inverse nonnegative set.
pub fn inverse_nonneg_interval(a: &Matrix, d: &Direction, settings: &Settings) -> Result<Interval> {
    let n = a.n();
    d.validate(n)?;
    require(a, PropertyKind::InverseNonnegative, settings)?;
    match d {
        Direction::General(at) => cofactor_interval(a, at, 1.0, false),
        Direction::RankOne(u, w) => {
            let t = rank_one_terms(a, u, w)?;
            let mut out = pole(&t);
            for i in 0..n {
                for j in 0..n {
                    out = out.intersect(&inverse_entry(&t, i, j, false));
                }
            }
            Ok(out)
        }
    }
}

/// Which parametrization to run for a property.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Exact where available, the H-matrix iteration otherwise.
    Auto,
    /// M-matrix simple bounds.
    Simple,
    /// M-matrix rank-one constraints.
    RankOne,
    /// M-matrix off-diagonal plus determinant constraints.
    Exact,
    /// H-matrix iteration.
    Iterative,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Simple => "simple",
            Method::RankOne => "rank-one",
            Method::Exact => "exact",
            Method::Iterative => "iterative",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Method::Auto),
            "simple" => Ok(Method::Simple),
            "rank-one" => Ok(Method::RankOne),
            "exact" => Ok(Method::Exact),
            "iterative" => Ok(Method::Iterative),
            other => Err(format!("unknown method '{other}'")),
        }
    }
}

/// A parametrization result with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct Parametrization {
    pub set: IntervalSet,
    /// The set is the full admissible set, not an inner approximation.
    pub exact: bool,
    pub method: &'static str,
}

/// Runs the parametrization matching `kind` and `method`.
pub fn parametrize(
    a: &Matrix,
    d: &Direction,
    kind: PropertyKind,
    method: Method,
    settings: &Settings,
) -> Result<Parametrization> {
    let exact = |set: IntervalSet, method| Parametrization {
        set,
        exact: true,
        method,
    };
    let one = IntervalSet::single;
    let mismatch = || {
        Err(Error::PreconditionFailed(format!(
            "method {} does not apply to {kind} with this direction",
            method.name()
        )))
    };
    Ok(match (kind, method) {
        (PropertyKind::PositiveDeterminant, Method::Auto) => exact(det_interval(a, d, settings)?, "determinant-sign"),
        (PropertyKind::PositiveDefinite, Method::Auto) => exact(pd_interval(a, d, settings)?, "determinant-component"),
        (PropertyKind::PMatrix, Method::Auto) => exact(one(p_matrix_interval(a, d, settings)?), "principal-minors"),
        (PropertyKind::MMatrix, Method::Auto | Method::Exact) => match d {
            Direction::RankOne(u, w) if method == Method::Auto => {
                exact(one(m_matrix_interval_rank_one(a, u, w, settings)?), "m-rank-one")
            }
            _ => exact(one(m_matrix_interval_exact(a, d, settings)?), "m-exact"),
        },
        (PropertyKind::MMatrix, Method::RankOne) => match d {
            Direction::RankOne(u, w) => exact(one(m_matrix_interval_rank_one(a, u, w, settings)?), "m-rank-one"),
            Direction::General(_) => return mismatch(),
        },
        (PropertyKind::MMatrix, Method::Simple) => Parametrization {
            set: one(m_matrix_interval_simple(a, &d.to_matrix(), settings)?),
            exact: false,
            method: "m-simple-bounds",
        },
        (PropertyKind::HMatrix, Method::Auto | Method::Iterative) => Parametrization {
            set: one(h_matrix_interval_iterative(a, &d.to_matrix(), settings)?),
            exact: false,
            method: "h-iterative",
        },
        (PropertyKind::TotallyPositive, Method::Auto) => exact(one(tp_interval(a, d, settings)?), "initial-minors"),
        (PropertyKind::InverseMMatrix, Method::Auto) => exact(one(inverse_m_interval(a, d, settings)?), "inverse-m-cofactors"),
        (PropertyKind::InverseNonnegative, Method::Auto) => {
            exact(one(inverse_nonneg_interval(a, d, settings)?), "inverse-nonnegative-cofactors")
        }
        _ => return mismatch(),
    })
}

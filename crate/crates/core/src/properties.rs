//! Deciders for the eight matrix classes.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg;
use crate::matrix::{IndexSet, Matrix};
use crate::norms::comparison_matrix;
use crate::Settings;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PropertyKind {
    PositiveDeterminant,
    PositiveDefinite,
    PMatrix,
    MMatrix,
    HMatrix,
    TotallyPositive,
    InverseMMatrix,
    InverseNonnegative,
}

/// How the cost of deciding a property grows with `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionCost {
    Polynomial,
    Exponential,
}

impl PropertyKind {
    pub const ALL: [PropertyKind; 8] = [
        PropertyKind::PositiveDeterminant,
        PropertyKind::PositiveDefinite,
        PropertyKind::PMatrix,
        PropertyKind::MMatrix,
        PropertyKind::HMatrix,
        PropertyKind::TotallyPositive,
        PropertyKind::InverseMMatrix,
        PropertyKind::InverseNonnegative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyKind::PositiveDeterminant => "positive-determinant",
            PropertyKind::PositiveDefinite => "positive-definite",
            PropertyKind::PMatrix => "p-matrix",
            PropertyKind::MMatrix => "m-matrix",
            PropertyKind::HMatrix => "h-matrix",
            PropertyKind::TotallyPositive => "totally-positive",
            PropertyKind::InverseMMatrix => "inverse-m-matrix",
            PropertyKind::InverseNonnegative => "inverse-nonnegative",
        }
    }

    pub fn cost(self) -> DecisionCost {
        match self {
            PropertyKind::PMatrix => DecisionCost::Exponential,
            _ => DecisionCost::Polynomial,
        }
    }
}

impl fmt::Display for PropertyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        match key.as_str() {
            "positive-determinant" | "det" => Ok(PropertyKind::PositiveDeterminant),
            "positive-definite" | "pd" => Ok(PropertyKind::PositiveDefinite),
            "p-matrix" | "p" => Ok(PropertyKind::PMatrix),
            "m-matrix" | "m" => Ok(PropertyKind::MMatrix),
            "h-matrix" | "h" => Ok(PropertyKind::HMatrix),
            "totally-positive" | "tp" => Ok(PropertyKind::TotallyPositive),
            "inverse-m-matrix" | "inverse-m" | "im" => Ok(PropertyKind::InverseMMatrix),
            "inverse-nonnegative" | "in" => Ok(PropertyKind::InverseNonnegative),
            other => Err(format!("unknown property '{other}'")),
        }
    }
}

/// Outcome of a membership test.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub holds: bool,
    /// Why the property fails, or which condition was tightest when it holds.
    pub witness: String,
    /// The tightest condition was within ten tolerances of its threshold.
    pub near_boundary: bool,
}

/// Tracks the tightest condition seen while deciding a property.
struct Margins {
    worst: f64,
    worst_label: String,
}

impl Margins {
    fn new() -> Self {
        Margins {
            worst: f64::INFINITY,
            worst_label: String::from("no conditions"),
        }
    }

    /// Records `slack` measured in units of the tolerance; fails below 1.
    /// `label` names the condition, `fails` completes it into a failure.
    fn see(&mut self, slack: f64, label: impl FnOnce() -> String, fails: &str) -> Option<PropertyReport> {
        if slack < self.worst {
            self.worst = slack;
            self.worst_label = label();
        }
        (slack <= 1.0).then(|| PropertyReport {
            holds: false,
            witness: format!("{} {fails}", self.worst_label),
            near_boundary: slack > -9.0,
        })
    }

    fn finish(self) -> PropertyReport {
        PropertyReport {
            holds: true,
            witness: format!("tightest: {}", self.worst_label),
            near_boundary: self.worst < 10.0,
        }
    }
}

fn fail(witness: impl Into<String>) -> PropertyReport {
    PropertyReport {
        holds: false,
        witness: witness.into(),
        near_boundary: false,
    }
}

fn entry_tol(a: &Matrix, settings: &Settings) -> f64 {
    settings.rel_tol * (1.0 + a.max_abs())
}

/// Slack of `det(B) > 0` in tolerance units, relative to the row scales of `B`.
fn det_slack(b: &Matrix, settings: &Settings) -> f64 {
    let scale = linalg::det_scale(b);
    if scale == 0.0 {
        return 0.0;
    }
    linalg::det_raw(b) / (scale * settings.rel_tol)
}

pub fn check(a: &Matrix, kind: PropertyKind, settings: &Settings) -> Result<PropertyReport> {
    match kind {
        PropertyKind::PositiveDeterminant => {
            let mut m = Margins::new();
            if let Some(r) = m.see(det_slack(a, settings), || "det(A)".into(), "is not positive") {
                return Ok(r);
            }
            Ok(m.finish())
        }
        PropertyKind::PositiveDefinite => {
            let tol = entry_tol(a, settings);
            let lambda = match linalg::lambda_min_sym(a) {
                Ok(l) => l,
                Err(Error::NotSymmetric) => return Ok(fail("not symmetric")),
                Err(e) => return Err(e),
            };
            let mut m = Margins::new();
            if let Some(r) = m.see(lambda / tol, || format!("lambda_min = {lambda:e}"), "is not positive") {
                return Ok(r);
            }
            Ok(m.finish())
        }
        PropertyKind::PMatrix => {
            let mut m = Margins::new();
            for set in principal_index_sets(a.n(), settings)? {
                let sub = linalg::principal_submatrix(a, &set);
                if let Some(r) = m.see(det_slack(&sub, settings), || {
                    format!("principal minor {set}")
                }, "is not positive") {
                    return Ok(r);
                }
            }
            Ok(m.finish())
        }
        PropertyKind::MMatrix => Ok(check_m(a, settings)),
        PropertyKind::HMatrix => {
            let mut r = check_m(&comparison_matrix(a), settings);
            r.witness = format!("comparison matrix: {}", r.witness);
            Ok(r)
        }
        PropertyKind::TotallyPositive => {
            let mut m = Margins::new();
            for (rows, cols) in initial_minor_index_sets(a.n()) {
                let sub = linalg::submatrix(a, &rows, &cols)?;
                if let Some(r) = m.see(det_slack(&sub, settings), || {
                    format!("initial minor ({rows}, {cols})")
                }, "is not positive") {
                    return Ok(r);
                }
            }
            Ok(m.finish())
        }
        PropertyKind::InverseMMatrix => {
            let Ok(inv) = linalg::inverse(a) else {
                return Ok(fail("singular"));
            };
            let mut m = Margins::new();
            if let Some(r) = off_diagonal_nonpositive(&inv, settings, &mut m, "inverse") {
                return Ok(r);
            }
            if let Some(r) = entries_nonnegative(a, settings, &mut m, "A") {
                return Ok(r);
            }
            Ok(m.finish())
        }
        PropertyKind::InverseNonnegative => {
            let Ok(inv) = linalg::inverse(a) else {
                return Ok(fail("singular"));
            };
            let mut m = Margins::new();
            if let Some(r) = entries_nonnegative(&inv, settings, &mut m, "inverse") {
                return Ok(r);
            }
            Ok(m.finish())
        }
    }
}

/// Z-matrix, nonsingular, nonnegative inverse.
fn check_m(a: &Matrix, settings: &Settings) -> PropertyReport {
    let mut m = Margins::new();
    if let Some(r) = off_diagonal_nonpositive(a, settings, &mut m, "A") {
        return r;
    }
    let Ok(inv) = linalg::inverse(a) else {
        return fail("singular");
    };
    if let Some(r) = entries_nonnegative(&inv, settings, &mut m, "inverse") {
        return r;
    }
    m.finish()
}

fn off_diagonal_nonpositive(
    b: &Matrix,
    settings: &Settings,
    m: &mut Margins,
    what: &str,
) -> Option<PropertyReport> {
    let tol = entry_tol(b, settings);
    let n = b.n();
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let v = b[(i, j)];
            // slack is measured from +tol, so an exact zero sits one tolerance in.
            if let Some(r) = m.see(1.0 + (tol - v) / tol, || {
                format!("{what} entry ({}, {}) = {v:e}", i + 1, j + 1)
            }, "is positive") {
                return Some(r);
            }
        }
    }
    None
}

fn entries_nonnegative(
    b: &Matrix,
    settings: &Settings,
    m: &mut Margins,
    what: &str,
) -> Option<PropertyReport> {
    let tol = entry_tol(b, settings);
    let n = b.n();
    for i in 0..n {
        for j in 0..n {
            let v = b[(i, j)];
            if let Some(r) = m.see(1.0 + (v + tol) / tol, || {
                format!("{what} entry ({}, {}) = {v:e}", i + 1, j + 1)
            }, "is negative") {
                return Some(r);
            }
        }
    }
    None
}

/// The `n²` initial submatrices: `I = {1..k}` against every contiguous `J`
/// of size `k`, and every contiguous `I` against `J = {1..k}`.
pub fn initial_minor_index_sets(n: usize) -> Vec<(IndexSet, IndexSet)> {
    let mut out = Vec::with_capacity(n * n);
    for k in 1..=n {
        let lead = IndexSet::range(0, k);
        for l in 0..=n - k {
            out.push((lead.clone(), IndexSet::range(l, k)));
        }
        for l in 1..=n - k {
            out.push((IndexSet::range(l, k), lead.clone()));
        }
    }
    out
}

/// All `2ⁿ - 1` nonempty subsets of `{0..n}`.
pub fn principal_index_sets(n: usize, settings: &Settings) -> Result<Vec<IndexSet>> {
    settings.check_exhaustive(n)?;
    Ok((1u64..1u64 << n).map(|mask| IndexSet::from_mask(mask, n)).collect())
}

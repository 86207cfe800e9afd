//! Membership tests, directional parametrization and tolerance radii for
//! special matrix classes: positive determinant, positive definite,
//! P-, M-, H-matrices, totally positive, inverse M and inverse nonnegative
//! matrices.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`] – dense kernels (determinant, inverse, extremal singular and
//!   eigenvalues, submatrices, real roots of `det(A - δÃ)`),
//! * [`norms`] – matrix norms, regularity radii and the comparison matrix,
//! * [`properties`] – deciders for the eight classes,
//! * [`parametrize`] – admissible sets `{δ : A - δÃ has the property}`,
//! * [`radius`] – tolerance radii with bounds and certificates,
//! * [`oracle`] – brute-force referee used by the tests and the CLI.

pub mod error;
pub mod linalg;
pub mod matrix;
pub mod norms;
pub mod oracle;
pub mod parametrize;
pub mod properties;
pub mod radius;

pub use error::{Error, Result};
pub use matrix::{IndexSet, Matrix};
pub use norms::NormKind;
pub use parametrize::{Direction, Interval, IntervalSet};
pub use properties::{PropertyKind, PropertyReport};
pub use radius::{Certificate, RadiusEstimate};

/// Numerical knobs shared by every routine.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    /// Relative tolerance for strict inequalities in the deciders.
    pub rel_tol: f64,
    /// Largest dimension for which `2^n` enumerations are attempted.
    pub exhaustive_limit: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            rel_tol: 1e-10,
            exhaustive_limit: 20,
        }
    }
}

impl Settings {
    pub(crate) fn check_exhaustive(&self, n: usize) -> Result<()> {
        if n > self.exhaustive_limit {
            Err(Error::DimensionTooLarge {
                n,
                limit: self.exhaustive_limit,
            })
        } else {
            Ok(())
        }
    }
}

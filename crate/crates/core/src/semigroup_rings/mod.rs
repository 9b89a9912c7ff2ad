//! Monomial ideals of numerical semigroup rings `F[t^a, t^b, ...]` and of
//! two-dimensional affine semigroup rings, as exponent sets.

mod affine;
mod numerical;

pub use affine::{AffineIdeal, AffineSemigroup2D, Point};
pub use numerical::{NumericalSemigroup, SemigroupIdeal};

use crate::error::Result;
use crate::ratliff_rush::{rr_power, ClosureConfig, ClosureResult};

/// Closure of `E^n`; the status is exact once the reduction number is reached.
pub fn ns_rr_closure(e: &SemigroupIdeal, n: u32, cfg: &ClosureConfig) -> Result<ClosureResult<SemigroupIdeal>> {
    rr_power(e, n, cfg)
}

#[cfg(test)]
mod tests;

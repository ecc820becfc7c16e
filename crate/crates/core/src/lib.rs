//! Exact machinery for the cone of Ingleton-satisfying polymatroids.
//!
//! The crate is organized bottom-up:
//!
//! * [`entspace`] models the entropy space: subsets, linear expressions over
//!   joint entropies, information measures, projections and witness points.
//! * [`ingen`] generates, counts and classifies the minimal Ingleton set
//!   (families `Delta0`, `Delta1`, `Delta2`) and the elemental inequalities.
//! * [`certify`] decides conic implication exactly, producing either a Farkas
//!   certificate or a separating point, and runs the redundancy, completeness
//!   and minimality scans.
//! * [`bound`] solves linear programs over the polymatroid cone or the Ingleton
//!   cone, including the compilation of acyclic networks into such problems.
//!
//! All arithmetic is exact (`BigRational`); no decision depends on floating point.

pub mod bound;
pub mod certify;
pub mod entspace;
mod error;
pub mod ingen;
pub mod lp;

pub use error::{Error, Result};
pub use num_rational::BigRational;

/// Smallest supported ground-set size.
pub const MIN_N: usize = 2;
/// Largest supported ground-set size; dense vectors hold `2^n - 1` entries.
pub const MAX_N: usize = 20;

pub(crate) fn check_n(n: usize) -> Result<()> {
    if (MIN_N..=MAX_N).contains(&n) {
        Ok(())
    } else {
        Err(Error::GroundSetSize(n))
    }
}

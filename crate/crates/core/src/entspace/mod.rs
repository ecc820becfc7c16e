//! The entropy space over a ground set `{1..n}`.
//!
//! Points ([`EntropyVector`]) assign an exact rational to every nonempty subset;
//! linear functionals ([`LinExpr`]) are canonical sparse coefficient maps.

mod expr;
mod mask;
mod measures;
mod vector;
mod witness;

pub use expr::{parse_rational, LinExpr};
pub use mask::{nonempty_subsets, SubsetMask};
pub use measures::{cond_entropy_expr, cond_mutinfo_expr, ingleton_expr, IngletonQuad};
pub use vector::EntropyVector;
pub use witness::{witness_fulldim, witness_modular};

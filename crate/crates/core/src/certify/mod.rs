//! Exact conic implication between linear information inequalities.
//!
//! [`decide`] answers "is `target ≥ 0` implied by `gens ≥ 0`?" and always
//! returns a proof: a [`FarkasCertificate`] (nonnegative multipliers with
//! `Σ c_k g_k = target`) or a [`SeparationWitness`] (a point where every
//! generator is nonnegative and the target is `−1`). Both are re-checked with
//! plain expression arithmetic before they are returned.

mod orbit;
mod records;
mod scans;

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::entspace::{EntropyVector, LinExpr, SubsetMask};
use crate::lp::{find_feasible, FeasOutcome};
use crate::{Error, Result};

pub use orbit::{GroupElement, QuadSymmetry};
pub use records::{
    format_certificate_record, format_witness_record, parse_certificate_record,
    parse_witness_record,
};
pub use scans::{
    check_completeness, check_fulldim, check_minimality, check_theorem1, find_ingleton_violator,
    sample_quads, CompletenessReport, CompletenessRow, FulldimReport, MinimalityOutcome,
    MinimalityReport, MinimalityRow, ScanMode, Theorem1Report, Theorem1Row, EXHAUSTIVE_MAX_N,
    MINIMALITY_DEFAULT_MAX_N,
};

/// Nonnegative multipliers over generator indices proving `Σ c_k g_k = target`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct FarkasCertificate {
    /// `(generator index, coefficient)`, sorted by index, coefficients positive.
    pub terms: Vec<(usize, BigRational)>,
}

impl FarkasCertificate {
    pub fn gen_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.iter().map(|(k, _)| *k)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = &BigRational> {
        self.terms.iter().map(|(_, c)| c)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ c_k g_k`.
    pub fn combine(&self, n: usize, gens: &[LinExpr]) -> Result<LinExpr> {
        let mut sum = LinExpr::zero(n)?;
        for (k, c) in &self.terms {
            let g = gens.get(*k).ok_or(Error::IndexOutOfRange {
                index: *k,
                len: gens.len(),
            })?;
            sum.add_scaled(g, c)?;
        }
        Ok(sum)
    }
}

/// `gen-id:coeff,gen-id:coeff,...`
impl fmt::Display for FarkasCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}:{c}")?;
        }
        Ok(())
    }
}

/// A point where every generator is nonnegative and the target equals `−1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SeparationWitness {
    pub point: EntropyVector,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Implication {
    Implied(FarkasCertificate),
    Separated(SeparationWitness),
}

impl Implication {
    pub fn is_implied(&self) -> bool {
        matches!(self, Implication::Implied(_))
    }
}

fn common_n(target: &LinExpr, gens: &[LinExpr]) -> Result<usize> {
    let n = target.n();
    for g in gens {
        if g.n() != n {
            return Err(Error::GroundSetMismatch {
                left: n,
                right: g.n(),
            });
        }
    }
    Ok(n)
}

/// Decides whether `target ≥ 0` follows from `gens ≥ 0`, returning the proof.
pub fn decide(target: &LinExpr, gens: &[LinExpr]) -> Result<Implication> {
    let n = common_n(target, gens)?;
    // Coordinates untouched by every expression impose no condition.
    let support: BTreeSet<SubsetMask> = target
        .iter()
        .map(|(m, _)| m)
        .chain(gens.iter().flat_map(|g| g.iter().map(|(m, _)| m)))
        .collect();
    let rows: Vec<SubsetMask> = support.into_iter().collect();
    let a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|&m| gens.iter().map(|g| g.coeff(m)).collect())
        .collect();
    let b: Vec<BigRational> = rows.iter().map(|&m| target.coeff(m)).collect();

    match find_feasible(&a, &b, gens.len()) {
        FeasOutcome::Feasible { x } => {
            let cert = FarkasCertificate {
                terms: x
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect(),
            };
            if !verify_certificate(target, gens, &cert)? {
                return Err(Error::Verification(
                    "solver certificate does not reproduce the target".into(),
                ));
            }
            Ok(Implication::Implied(cert))
        }
        FeasOutcome::Infeasible { farkas } => {
            let mut point = EntropyVector::zeros(n)?;
            for (&m, z) in rows.iter().zip(farkas) {
                point.set(m, z)?;
            }
            let t = target.evaluate(&point)?;
            if !t.is_negative() {
                return Err(Error::Verification(
                    "Farkas ray does not separate the target".into(),
                ));
            }
            let witness = SeparationWitness {
                point: point.scaled(&(-t).recip()),
            };
            if !verify_witness(target, gens, &witness)? {
                return Err(Error::Verification(
                    "separation witness violates a generator".into(),
                ));
            }
            Ok(Implication::Separated(witness))
        }
    }
}

/// A certificate iff `target` lies in the cone generated by `gens`.
pub fn conic_implies(target: &LinExpr, gens: &[LinExpr]) -> Result<Option<FarkasCertificate>> {
    Ok(match decide(target, gens)? {
        Implication::Implied(c) => Some(c),
        Implication::Separated(_) => None,
    })
}

/// A witness iff `target` lies outside the cone generated by `gens`.
pub fn separation_witness(target: &LinExpr, gens: &[LinExpr]) -> Result<Option<SeparationWitness>> {
    Ok(match decide(target, gens)? {
        Implication::Implied(_) => None,
        Implication::Separated(w) => Some(w),
    })
}

/// Checks `Σ c_k g_k = target` with all `c_k ≥ 0`, using expression arithmetic only.
pub fn verify_certificate(
    target: &LinExpr,
    gens: &[LinExpr],
    cert: &FarkasCertificate,
) -> Result<bool> {
    let n = common_n(target, gens)?;
    for (k, _) in &cert.terms {
        if *k >= gens.len() {
            return Err(Error::IndexOutOfRange {
                index: *k,
                len: gens.len(),
            });
        }
    }
    if cert.coeffs().any(|c| c.is_negative()) {
        return Ok(false);
    }
    Ok(&cert.combine(n, gens)? == target)
}

/// Checks every generator is `≥ 0` at the point and the target is exactly `−1`.
pub fn verify_witness(
    target: &LinExpr,
    gens: &[LinExpr],
    witness: &SeparationWitness,
) -> Result<bool> {
    common_n(target, gens)?;
    if target.evaluate(&witness.point)? != -BigRational::one() {
        return Ok(false);
    }
    for g in gens {
        if g.evaluate(&witness.point)?.is_negative() {
            return Ok(false);
        }
    }
    Ok(true)
}

use std::fmt;
use std::str::FromStr;

use super::{LinExpr, SubsetMask};
use crate::{Error, Result};

/// Four subsets `(α1, α2, α3, α4)` indexing an Ingleton term. Empty and
/// repeated subsets are allowed.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IngletonQuad(pub [SubsetMask; 4]);

impl IngletonQuad {
    pub fn new(a1: SubsetMask, a2: SubsetMask, a3: SubsetMask, a4: SubsetMask) -> Self {
        IngletonQuad([a1, a2, a3, a4])
    }

    pub fn check(&self, n: usize) -> Result<()> {
        for a in self.0 {
            a.check(n)?;
        }
        Ok(())
    }

    /// Exchanges `α1 ↔ α2` (when `swap12`) and `α3 ↔ α4` (when `swap34`).
    pub fn swapped(&self, swap12: bool, swap34: bool) -> IngletonQuad {
        let [a1, a2, a3, a4] = self.0;
        let (a1, a2) = if swap12 { (a2, a1) } else { (a1, a2) };
        let (a3, a4) = if swap34 { (a4, a3) } else { (a3, a4) };
        IngletonQuad([a1, a2, a3, a4])
    }

    pub fn relabel(&self, perm: &[usize]) -> IngletonQuad {
        IngletonQuad(self.0.map(|a| a.relabel(perm)))
    }

    /// Whether some `α_i` is contained in the union of the other three.
    pub fn has_covered_subset(&self) -> bool {
        (0..4).any(|i| {
            let others = (0..4)
                .filter(|&j| j != i)
                .fold(SubsetMask::EMPTY, |acc, j| acc | self.0[j]);
            self.0[i].is_subset_of(others)
        })
    }
}

impl fmt::Display for IngletonQuad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4] = self.0;
        write!(f, "{a1};{a2};{a3};{a4}")
    }
}

impl FromStr for IngletonQuad {
    type Err = Error;

    /// Parses `{1,5};{2,5};{3,5};{4,5}`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(';').collect();
        if parts.len() != 4 {
            return Err(Error::Parse(format!(
                "expected four `;`-separated subsets, got `{s}`"
            )));
        }
        Ok(IngletonQuad([
            parts[0].parse()?,
            parts[1].parse()?,
            parts[2].parse()?,
            parts[3].parse()?,
        ]))
    }
}

/// `h(α | β) = h(α ∪ β) − h(β)`.
pub fn cond_entropy_expr(n: usize, alpha: SubsetMask, beta: SubsetMask) -> Result<LinExpr> {
    alpha.check(n)?;
    beta.check(n)?;
    LinExpr::from_terms(n, [(alpha | beta, 1), (beta, -1)])
}

/// `I(α; β | δ) = h(αδ) + h(βδ) − h(δ) − h(αβδ)`.
pub fn cond_mutinfo_expr(
    n: usize,
    alpha: SubsetMask,
    beta: SubsetMask,
    delta: SubsetMask,
) -> Result<LinExpr> {
    alpha.check(n)?;
    beta.check(n)?;
    delta.check(n)?;
    LinExpr::from_terms(
        n,
        [
            (alpha | delta, 1),
            (beta | delta, 1),
            (delta, -1),
            (alpha | beta | delta, -1),
        ],
    )
}

/// The Ingleton term `J(h; α1, α2, α3, α4)`:
///
/// `h(α1α2) + h(α1α3) + h(α1α4) + h(α2α3) + h(α2α4)
///  − h(α1) − h(α2) − h(α3α4) − h(α1α2α3) − h(α1α2α4)`.
pub fn ingleton_expr(n: usize, q: &IngletonQuad) -> Result<LinExpr> {
    q.check(n)?;
    let [a1, a2, a3, a4] = q.0;
    LinExpr::from_terms(
        n,
        [
            (a1 | a2, 1),
            (a1 | a3, 1),
            (a1 | a4, 1),
            (a2 | a3, 1),
            (a2 | a4, 1),
            (a1, -1),
            (a2, -1),
            (a3 | a4, -1),
            (a1 | a2 | a3, -1),
            (a1 | a2 | a4, -1),
        ],
    )
}

use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::expr::parse_rational;
use super::{nonempty_subsets, SubsetMask};
use crate::{check_n, Error, Result};

/// A point of the entropy space: one exact value per nonempty subset of `{1..n}`.
///
/// `h(∅) = 0` is implied and never stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EntropyVector {
    n: usize,
    values: Vec<BigRational>,
}

impl EntropyVector {
    pub fn zeros(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(EntropyVector {
            n,
            values: vec![BigRational::zero(); (1usize << n) - 1],
        })
    }

    pub fn from_fn<F: FnMut(SubsetMask) -> BigRational>(n: usize, mut f: F) -> Result<Self> {
        check_n(n)?;
        Ok(EntropyVector {
            n,
            values: nonempty_subsets(n).map(&mut f).collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `h(mask)`; the empty mask reads as zero.
    ///
    /// Panics if `mask` is outside the ground set.
    pub fn get(&self, mask: SubsetMask) -> &BigRational {
        static ZERO: std::sync::OnceLock<BigRational> = std::sync::OnceLock::new();
        if mask.is_empty() {
            return ZERO.get_or_init(BigRational::zero);
        }
        assert!(
            mask.fits(self.n),
            "{mask} outside ground set of size {}",
            self.n
        );
        &self.values[mask.bits() as usize - 1]
    }

    pub fn set(&mut self, mask: SubsetMask, value: BigRational) -> Result<()> {
        mask.check(self.n)?;
        if mask.is_empty() {
            return Err(Error::Parse("h(∅) is fixed at 0".into()));
        }
        self.values[mask.bits() as usize - 1] = value;
        Ok(())
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, &BigRational)> {
        nonempty_subsets(self.n).zip(self.values.iter())
    }

    pub fn scaled(&self, s: &BigRational) -> EntropyVector {
        EntropyVector {
            n: self.n,
            values: self.values.iter().map(|v| v * s).collect(),
        }
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|v| !v.is_negative())
    }

    /// Parses whitespace-separated `{subset}=p/q` pairs; unlisted subsets are zero.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let mut h = EntropyVector::zeros(n)?;
        for tok in s.split_whitespace() {
            let (mask, value) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected `{{..}}=value`, got `{tok}`")))?;
            let mask: SubsetMask = mask.parse()?;
            h.set(mask, parse_rational(value)?)?;
        }
        Ok(h)
    }
}

/// Writes every coordinate as `{subset}=value`, space separated, in canonical order.
impl fmt::Display for EntropyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (m, v)) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{m}={v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for EntropyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EntropyVector(n={}; {self})", self.n)
    }
}

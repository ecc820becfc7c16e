use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};
use std::str::FromStr;

use crate::{Error, Result, MAX_N};

/// A subset of the ground set `{1..n}`, stored as a bitmask (element `i` is bit `i-1`).
///
/// Masks order by their numeric value, which is the canonical term order used
/// throughout the crate.
#[derive(Copy, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetMask(u32);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub const fn from_bits(bits: u32) -> Self {
        SubsetMask(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    /// The singleton `{i}`, with `i` one-based.
    pub fn singleton(i: usize) -> Self {
        assert!((1..=MAX_N).contains(&i), "element {i} outside 1..={MAX_N}");
        SubsetMask(1 << (i - 1))
    }

    /// The full ground set `{1..n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_N);
        SubsetMask(((1u64 << n) - 1) as u32)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(SubsetMask::EMPTY, |m, i| m | SubsetMask::singleton(i))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=32).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: SubsetMask) -> bool {
        self.0 & other.0 == 0
    }

    /// Whether every element lies in `{1..n}`.
    pub fn fits(self, n: usize) -> bool {
        self.is_subset_of(SubsetMask::full(n.min(MAX_N)))
    }

    pub(crate) fn check(self, n: usize) -> Result<Self> {
        if self.fits(n) {
            Ok(self)
        } else {
            Err(Error::MaskOutOfRange { mask: self, n })
        }
    }

    /// Smallest element, if any.
    pub fn min_element(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Elements in increasing order, one-based.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i + 1)
        })
    }

    /// All subsets of `self`, in increasing numeric order (including the empty set).
    pub fn subsets(self) -> impl Iterator<Item = SubsetMask> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                // Standard "next submask" step in increasing order.
                Some(((cur | !full).wrapping_add(1)) & full)
            };
            Some(SubsetMask(cur))
        })
    }

    /// Relabels elements: element `i` maps to `perm[i-1] + 1`.
    pub fn relabel(self, perm: &[usize]) -> SubsetMask {
        let mut out = 0u32;
        let mut bits = self.0;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out |= 1 << perm[i];
        }
        SubsetMask(out)
    }
}

impl BitOr for SubsetMask {
    type Output = SubsetMask;
    fn bitor(self, rhs: Self) -> Self {
        SubsetMask(self.0 | rhs.0)
    }
}

impl BitAnd for SubsetMask {
    type Output = SubsetMask;
    fn bitand(self, rhs: Self) -> Self {
        SubsetMask(self.0 & rhs.0)
    }
}

/// Set difference.
impl Sub for SubsetMask {
    type Output = SubsetMask;
    fn sub(self, rhs: Self) -> Self {
        SubsetMask(self.0 & !rhs.0)
    }
}

/// Complement within all 32 bits; intersect with [`SubsetMask::full`] before use.
impl Not for SubsetMask {
    type Output = SubsetMask;
    fn not(self) -> Self {
        SubsetMask(!self.0)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.elements().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for SubsetMask {
    type Err = Error;

    /// Parses `{1,3,5}` or `{}`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("expected `{{...}}`, got `{s}`")))?;
        let mut mask = SubsetMask::EMPTY;
        for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let i: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad element `{tok}` in `{s}`")))?;
            if !(1..=MAX_N).contains(&i) {
                return Err(Error::Parse(format!("element {i} outside 1..={MAX_N}")));
            }
            mask = mask | SubsetMask::singleton(i);
        }
        Ok(mask)
    }
}

/// Nonempty subsets of `{1..n}` in increasing numeric order.
pub fn nonempty_subsets(n: usize) -> impl Iterator<Item = SubsetMask> {
    (1..=SubsetMask::full(n).bits()).map(SubsetMask::from_bits)
}

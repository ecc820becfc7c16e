use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{EntropyVector, SubsetMask};
use crate::{check_n, Error, Result};

/// A linear functional `Σ c_α h(α)` over the entropy space of `{1..n}`.
///
/// The coefficient map is canonical: keys are sorted, zero coefficients and the
/// empty mask never appear, so structural equality is functional equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinExpr {
    n: usize,
    terms: BTreeMap<SubsetMask, BigRational>,
}

impl LinExpr {
    /// The zero expression.
    pub fn zero(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(LinExpr {
            n,
            terms: BTreeMap::new(),
        })
    }

    /// `coeff · h(mask)`.
    pub fn term(n: usize, mask: SubsetMask, coeff: BigRational) -> Result<Self> {
        let mut e = LinExpr::zero(n)?;
        e.add_term(mask, coeff)?;
        Ok(e)
    }

    /// Builds from `(mask, integer coefficient)` pairs, merging repeats.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetMask, i64)>,
    {
        let mut e = LinExpr::zero(n)?;
        for (m, c) in terms {
            e.add_term(m, BigRational::from_integer(BigInt::from(c)))?;
        }
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: SubsetMask) -> BigRational {
        self.terms
            .get(&mask)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (SubsetMask, &BigRational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Adds `coeff · h(mask)`; empty masks vanish by the `h(∅) = 0` convention.
    pub fn add_term(&mut self, mask: SubsetMask, coeff: BigRational) -> Result<()> {
        mask.check(self.n)?;
        self.add_term_unchecked(mask, coeff);
        Ok(())
    }

    fn add_term_unchecked(&mut self, mask: SubsetMask, coeff: BigRational) {
        if mask.is_empty() || coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&mask) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&mask);
                }
            }
            None => {
                self.terms.insert(mask, coeff);
            }
        }
    }

    fn same_n(&self, other: &LinExpr) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(Error::GroundSetMismatch {
                left: self.n,
                right: other.n,
            })
        }
    }

    /// `self += scale · other`.
    pub fn add_scaled(&mut self, other: &LinExpr, scale: &BigRational) -> Result<()> {
        self.same_n(other)?;
        if scale.is_zero() {
            return Ok(());
        }
        for (m, c) in &other.terms {
            self.add_term_unchecked(*m, c * scale);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &LinExpr) -> Result<LinExpr> {
        let mut out = self.clone();
        out.add_scaled(other, &BigRational::one())?;
        Ok(out)
    }

    pub fn try_sub(&self, other: &LinExpr) -> Result<LinExpr> {
        let mut out = self.clone();
        out.add_scaled(other, &-BigRational::one())?;
        Ok(out)
    }

    pub fn scaled(&self, scale: &BigRational) -> LinExpr {
        let mut out = LinExpr {
            n: self.n,
            terms: BTreeMap::new(),
        };
        if !scale.is_zero() {
            out.terms = self.terms.iter().map(|(m, c)| (*m, c * scale)).collect();
        }
        out
    }

    /// Exact value `Σ c_α h(α)`.
    pub fn evaluate(&self, h: &EntropyVector) -> Result<BigRational> {
        if self.n != h.n() {
            return Err(Error::GroundSetMismatch {
                left: self.n,
                right: h.n(),
            });
        }
        Ok(self
            .terms
            .iter()
            .fold(BigRational::zero(), |acc, (m, c)| acc + c * h.get(*m)))
    }

    /// Replaces every set `α` with `f(α)` and re-merges.
    pub fn map_masks<F: Fn(SubsetMask) -> SubsetMask>(&self, f: F) -> LinExpr {
        let mut out = LinExpr {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (m, c) in &self.terms {
            out.add_term_unchecked(f(*m), c.clone());
        }
        out
    }

    /// Projection onto `beta`: `h(α) ↦ h(β ∩ α)`.
    pub fn project_onto(&self, beta: SubsetMask) -> Result<LinExpr> {
        beta.check(self.n)?;
        Ok(self.map_masks(|a| a & beta))
    }

    /// Projection away from `beta`: `h(α) ↦ h(α ∖ β)`.
    pub fn project_away(&self, beta: SubsetMask) -> Result<LinExpr> {
        beta.check(self.n)?;
        Ok(self.map_masks(|a| a - beta))
    }

    /// Applies a relabeling of the ground set (`perm[i]` is the new zero-based index of element `i+1`).
    pub fn relabel(&self, perm: &[usize]) -> LinExpr {
        self.map_masks(|a| a.relabel(perm))
    }

    /// Parses the textual form produced by `Display`, e.g. `+3/2*h{1,2} -1*h{3}`.
    ///
    /// Also accepts omitted coefficients (`h{1} - h{2}`), detached signs, and `0`.
    pub fn parse(n: usize, s: &str) -> Result<LinExpr> {
        let mut e = LinExpr::zero(n)?;
        let s = s.trim();
        if s == "0" {
            return Ok(e);
        }
        let mut rest = s;
        let mut seen_any = false;
        loop {
            rest = rest.trim_start();
            if rest.is_empty() {
                break;
            }
            let mut negative = false;
            if let Some(r) = rest.strip_prefix('+') {
                rest = r.trim_start();
            } else if let Some(r) = rest.strip_prefix('-') {
                negative = true;
                rest = r.trim_start();
            } else if seen_any {
                return Err(Error::Parse(format!("expected `+` or `-` before `{rest}`")));
            }
            let h_pos = rest
                .find('h')
                .ok_or_else(|| Error::Parse(format!("missing `h{{..}}` term in `{rest}`")))?;
            let coeff_text = rest[..h_pos].trim().trim_end_matches('*').trim();
            let mut coeff = if coeff_text.is_empty() {
                BigRational::one()
            } else {
                parse_rational(coeff_text)?
            };
            if negative {
                coeff = -coeff;
            }
            let after_h = &rest[h_pos + 1..];
            let close = after_h
                .find('}')
                .ok_or_else(|| Error::Parse(format!("unterminated subset in `{rest}`")))?;
            let mask: SubsetMask = after_h[..=close].parse()?;
            e.add_term(mask, coeff)?;
            rest = &after_h[close + 1..];
            seen_any = true;
        }
        if !seen_any {
            return Err(Error::Parse("empty expression".into()));
        }
        Ok(e)
    }
}

impl fmt::Display for LinExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}*h{m}", c.abs())?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinExpr(n={}; {self})", self.n)
    }
}

/// Parses `p`, `-p`, or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

// Operator sugar; panics on ground-set mismatch. Use the `try_*` forms for fallible code.

impl Add for &LinExpr {
    type Output = LinExpr;
    fn add(self, rhs: &LinExpr) -> LinExpr {
        self.try_add(rhs)
            .expect("ground-set mismatch in LinExpr addition")
    }
}

impl Sub for &LinExpr {
    type Output = LinExpr;
    fn sub(self, rhs: &LinExpr) -> LinExpr {
        self.try_sub(rhs)
            .expect("ground-set mismatch in LinExpr subtraction")
    }
}

impl Neg for &LinExpr {
    type Output = LinExpr;
    fn neg(self) -> LinExpr {
        self.scaled(&-BigRational::one())
    }
}

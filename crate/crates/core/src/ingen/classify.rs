use std::fmt;

use num_traits::Signed;

use super::{Delta0Form, Shape};
use crate::entspace::{ingleton_expr, IngletonQuad, LinExpr, SubsetMask};
use crate::Result;

/// Where an Ingleton inequality sits relative to the minimal set.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum QuadClass {
    /// The Ingleton term is identically zero.
    Trivial,
    /// The inequality coincides with a member of `Δ1`.
    InDelta1 { i: usize, j: usize, mu: SubsetMask },
    /// The inequality coincides with a member of `Δ2`.
    InDelta2 { i: usize },
    /// Some subset lies in the union of the other three; implied by Shannon inequalities.
    BasicImplied,
    /// Dominated by this `Δ0` member.
    ReducesTo(Delta0Form),
}

impl fmt::Display for QuadClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadClass::Trivial => f.write_str("trivial"),
            QuadClass::InDelta1 { i, j, mu } => write!(f, "delta1 {i},{j}|{mu}"),
            QuadClass::InDelta2 { i } => write!(f, "delta2 {i}"),
            QuadClass::BasicImplied => f.write_str("basic-implied"),
            QuadClass::ReducesTo(form) => write!(f, "reduces-to {form}"),
        }
    }
}

/// `δ_i = α_i ∖ ⋃_{j≠i} α_j` and `β = ⋃_i (α_i ∖ δ_i)`: `β` collects the
/// elements shared by at least two of the subsets.
pub fn reduce_quad(q: &IngletonQuad) -> ([SubsetMask; 4], SubsetMask) {
    let a = q.0;
    let mut delta = [SubsetMask::EMPTY; 4];
    for i in 0..4 {
        let others = (0..4)
            .filter(|&j| j != i)
            .fold(SubsetMask::EMPTY, |acc, j| acc | a[j]);
        delta[i] = a[i] - others;
    }
    let beta = (0..4).fold(SubsetMask::EMPTY, |acc, i| acc | (a[i] - delta[i]));
    (delta, beta)
}

/// Identifies `expr` with `h(i | N ∖ i)` if it has that form.
fn match_delta2(n: usize, expr: &LinExpr) -> Option<usize> {
    if expr.len() != 2 {
        return None;
    }
    (1..=n).find(|&i| Shape::Delta2 { i }.expr(n).ok().as_ref() == Some(expr))
}

/// Identifies `expr` with `I(i; j | μ)` if it has that form.
fn match_delta1(n: usize, expr: &LinExpr) -> Option<(usize, usize, SubsetMask)> {
    if !(3..=4).contains(&expr.len()) {
        return None;
    }
    // The joint term h(ijμ) is the largest set carrying a negative coefficient.
    let top = expr
        .iter()
        .filter(|(_, c)| c.is_negative())
        .map(|(m, _)| m)
        .max_by_key(|m| (m.len(), *m))?;
    let elems: Vec<usize> = top.elements().collect();
    for (a, &i) in elems.iter().enumerate() {
        for &j in &elems[a + 1..] {
            let mu = top - SubsetMask::singleton(i) - SubsetMask::singleton(j);
            let candidate = Shape::Delta1 { i, j, mu };
            if candidate.expr(n).ok().as_ref() == Some(expr) {
                return Some((i, j, mu));
            }
        }
    }
    None
}

/// Classifies an arbitrary Ingleton quadruple.
///
/// Order of tests: trivial, membership in `Δ2`/`Δ1` (by expression), the
/// containment criterion for Shannon-implied inequalities, and finally the
/// reduction to the dominating `Δ0` member.
pub fn classify_quad(n: usize, q: &IngletonQuad) -> Result<QuadClass> {
    let expr = ingleton_expr(n, q)?;
    if expr.is_zero() {
        return Ok(QuadClass::Trivial);
    }
    if let Some(i) = match_delta2(n, &expr) {
        return Ok(QuadClass::InDelta2 { i });
    }
    if let Some((i, j, mu)) = match_delta1(n, &expr) {
        return Ok(QuadClass::InDelta1 { i, j, mu });
    }
    if q.has_covered_subset() {
        return Ok(QuadClass::BasicImplied);
    }
    let (delta, beta) = reduce_quad(q);
    Ok(QuadClass::ReducesTo(Delta0Form::new(delta, beta)?))
}

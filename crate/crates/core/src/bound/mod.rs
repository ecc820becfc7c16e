//! Linear programs over the polymatroid cone `Γ_n` or the Ingleton cone `Γ_n^In`.
//!
//! A [`BoundProblem`] optimizes a linear objective over the chosen cone
//! intersected with user constraints. The cone is written out explicitly:
//! the elemental inequalities for `Γ_n`, the minimal Ingleton set `Δ` for
//! `Γ_n^In`. Every answer is returned with a certificate that
//! [`verify_solution`] checks using expression arithmetic alone.

mod network;
mod problem_file;

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::entspace::{nonempty_subsets, EntropyVector, LinExpr, SubsetMask};
use crate::ingen::{exprs, gen_delta, gen_elemental, CanonicalInequality, GenBudget};
use crate::lp::{minimize, LpOutcome, StandardForm};
use crate::{check_n, Error, Result};

pub use network::{compile_network, parse_network, NetworkDescription, NetworkEdge, NetworkSink};
pub use problem_file::{format_outcome, parse_problem};

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Cone {
    /// Polymatroids: all elemental (hence all Shannon) inequalities.
    Gamma,
    /// Polymatroids satisfying every Ingleton inequality.
    GammaIn,
}

impl Cone {
    pub fn name(self) -> &'static str {
        match self {
            Cone::Gamma => "gamma",
            Cone::GammaIn => "gamma-in",
        }
    }
}

impl std::str::FromStr for Cone {
    type Err = Error;
    fn from_str(s: &str) -> Result<Cone> {
        match s.trim() {
            "gamma" => Ok(Cone::Gamma),
            "gamma-in" => Ok(Cone::GammaIn),
            other => Err(Error::Parse(format!(
                "unknown cone `{other}` (expected gamma|gamma-in)"
            ))),
        }
    }
}

/// The defining inequalities of `cone` in canonical order.
pub fn cone_inequalities(
    n: usize,
    cone: Cone,
    budget: GenBudget,
) -> Result<Vec<CanonicalInequality>> {
    match cone {
        Cone::Gamma => gen_elemental(n),
        Cone::GammaIn => gen_delta(n, budget),
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Le => "<=",
            Relation::Eq => "=",
            Relation::Ge => ">=",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Constraint {
    pub expr: LinExpr,
    pub rel: Relation,
    pub rhs: BigRational,
}

impl Constraint {
    pub fn new(expr: LinExpr, rel: Relation, rhs: BigRational) -> Self {
        Constraint { expr, rel, rhs }
    }

    fn holds(&self, h: &EntropyVector) -> Result<bool> {
        let v = self.expr.evaluate(h)?;
        Ok(match self.rel {
            Relation::Le => v <= self.rhs,
            Relation::Eq => v == self.rhs,
            Relation::Ge => v >= self.rhs,
        })
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Sense {
    Maximize,
    Minimize,
}

impl Sense {
    fn sign(self) -> BigRational {
        match self {
            Sense::Maximize => BigRational::one(),
            Sense::Minimize => -BigRational::one(),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundProblem {
    pub n: usize,
    pub constraints: Vec<Constraint>,
    pub objective: LinExpr,
    pub sense: Sense,
    pub cone: Cone,
}

impl BoundProblem {
    pub fn validate(&self) -> Result<()> {
        check_n(self.n)?;
        let mismatch = |e: &LinExpr| {
            (e.n() != self.n).then(|| {
                Error::MalformedProblem(format!(
                    "expression over n={} in a problem with n={}",
                    e.n(),
                    self.n
                ))
            })
        };
        if let Some(err) = mismatch(&self.objective) {
            return Err(err);
        }
        for c in &self.constraints {
            if let Some(err) = mismatch(&c.expr) {
                return Err(err);
            }
        }
        Ok(())
    }
}

/// Multipliers proving a bound (or infeasibility).
///
/// With `s = +1` for maximization and `−1` for minimization, an optimality
/// certificate satisfies `s·objective = Σ_j μ_j e_j − Σ_k λ_k g_k` as an exact
/// identity, `λ ≥ 0`, `μ_j ≥ 0` on `≤` rows, `μ_j ≤ 0` on `≥` rows, and
/// `s·value = Σ_j μ_j rhs_j`. An infeasibility certificate has the same sign
/// pattern with `Σ_j μ_j e_j − Σ_k λ_k g_k = 0` and `Σ_j μ_j rhs_j < 0`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DualCertificate {
    /// Nonzero `λ_k` over cone rows.
    pub cone: Vec<(usize, BigRational)>,
    /// `μ_j`, one per user constraint.
    pub constraints: Vec<BigRational>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BoundOutcome {
    Optimal {
        value: BigRational,
        point: EntropyVector,
        dual: DualCertificate,
    },
    Infeasible {
        dual: DualCertificate,
    },
    Unbounded {
        point: EntropyVector,
        ray: EntropyVector,
    },
}

impl BoundOutcome {
    pub fn value(&self) -> Option<&BigRational> {
        match self {
            BoundOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn status(&self) -> &'static str {
        match self {
            BoundOutcome::Optimal { .. } => "optimal",
            BoundOutcome::Infeasible { .. } => "infeasible",
            BoundOutcome::Unbounded { .. } => "unbounded",
        }
    }
}

/// Result of testing a point against a cone.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Membership {
    pub member: bool,
    /// The first violated inequality in canonical order.
    pub violated: Option<CanonicalInequality>,
}

/// Tests `h` against every defining inequality of `cone`.
pub fn membership(h: &EntropyVector, cone: Cone, budget: GenBudget) -> Result<Membership> {
    for ineq in cone_inequalities(h.n(), cone, budget)? {
        if ineq.expr().evaluate(h)?.is_negative() {
            return Ok(Membership {
                member: false,
                violated: Some(ineq),
            });
        }
    }
    Ok(Membership {
        member: true,
        violated: None,
    })
}

/// Solves `p` over its cone's canonical inequality set.
pub fn solve_bound(p: &BoundProblem, budget: GenBudget) -> Result<BoundOutcome> {
    p.validate()?;
    let rows = exprs(&cone_inequalities(p.n, p.cone, budget)?);
    solve_bound_with_rows(p, &rows)
}

/// Solves `p` with an explicit list of cone rows `g_k ≥ 0` (`p.cone` is ignored).
///
/// Variables `h(α)` are free: each is split as `h⁺ − h⁻`. Cone rows are written
/// as `−g·h + s = 0` so their slacks seed the initial basis.
pub fn solve_bound_with_rows(p: &BoundProblem, rows: &[LinExpr]) -> Result<BoundOutcome> {
    p.validate()?;
    for g in rows {
        if g.n() != p.n {
            return Err(Error::MalformedProblem(
                "cone row over a different n".into(),
            ));
        }
    }
    let masks: Vec<SubsetMask> = nonempty_subsets(p.n).collect();
    let nv = masks.len();
    let nk = rows.len();
    let slack_rows: Vec<usize> = (0..p.constraints.len())
        .filter(|&j| p.constraints[j].rel != Relation::Eq)
        .collect();
    let ncols = 2 * nv + nk + slack_rows.len();
    let m = nk + p.constraints.len();

    let mut a = vec![vec![BigRational::zero(); ncols]; m];
    let mut b = vec![BigRational::zero(); m];
    let put = |row: &mut Vec<BigRational>, e: &LinExpr, scale: &BigRational| {
        for (mask, c) in e.iter() {
            let v = (mask.bits() - 1) as usize;
            row[v] = c * scale;
            row[nv + v] = -(c * scale);
        }
    };
    let minus_one = -BigRational::one();
    for (k, g) in rows.iter().enumerate() {
        put(&mut a[k], g, &minus_one);
        a[k][2 * nv + k] = BigRational::one();
    }
    for (j, c) in p.constraints.iter().enumerate() {
        let r = nk + j;
        put(&mut a[r], &c.expr, &BigRational::one());
        if let Some(pos) = slack_rows.iter().position(|&x| x == j) {
            a[r][2 * nv + nk + pos] = match c.rel {
                Relation::Le => BigRational::one(),
                _ => minus_one.clone(),
            };
        }
        b[r] = c.rhs.clone();
    }
    let s = p.sense.sign();
    let mut cost = vec![BigRational::zero(); ncols];
    for (mask, c) in p.objective.iter() {
        let v = (mask.bits() - 1) as usize;
        cost[v] = -(c * &s);
        cost[nv + v] = c * &s;
    }

    let to_point = |x: &[BigRational]| -> Result<EntropyVector> {
        let mut h = EntropyVector::zeros(p.n)?;
        for (v, &mask) in masks.iter().enumerate() {
            h.set(mask, &x[v] - &x[nv + v])?;
        }
        Ok(h)
    };
    // Row k reads −g_k·h + s_k = 0, so a row multiplier y_k corresponds to λ_k = −y_k.
    let to_dual = |y: &[BigRational], flip_constraints: bool| DualCertificate {
        cone: y[..nk]
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k, -v))
            .collect(),
        constraints: y[nk..]
            .iter()
            .map(|v| if flip_constraints { -v } else { v.clone() })
            .collect(),
    };

    let outcome = match minimize(&StandardForm { a, b, c: cost }) {
        LpOutcome::Optimal { x, dual, value } => BoundOutcome::Optimal {
            value: -(value * &s),
            point: to_point(&x)?,
            dual: to_dual(&dual, true),
        },
        LpOutcome::Infeasible { farkas } => {
            // yᵀA ≥ 0, yᵀb < 0: the constraint multipliers carry over unchanged,
            // and the cone multipliers become λ_k = y_k ≥ 0.
            let mut d = to_dual(&farkas, false);
            for (_, l) in d.cone.iter_mut() {
                *l = -l.clone();
            }
            BoundOutcome::Infeasible { dual: d }
        }
        LpOutcome::Unbounded { x, ray } => BoundOutcome::Unbounded {
            point: to_point(&x)?,
            ray: to_point(&ray)?,
        },
    };
    if !verify_solution(p, rows, &outcome)? {
        return Err(Error::Verification(format!(
            "{} certificate failed re-verification",
            outcome.status()
        )));
    }
    Ok(outcome)
}

fn dual_signs_ok(p: &BoundProblem, d: &DualCertificate) -> bool {
    d.constraints.len() == p.constraints.len()
        && d.cone.iter().all(|(_, l)| !l.is_negative())
        && p.constraints
            .iter()
            .zip(&d.constraints)
            .all(|(c, mu)| match c.rel {
                Relation::Le => !mu.is_negative(),
                Relation::Ge => !mu.is_positive(),
                Relation::Eq => true,
            })
}

/// `Σ_j μ_j e_j − Σ_k λ_k g_k`.
fn dual_combination(p: &BoundProblem, rows: &[LinExpr], d: &DualCertificate) -> Result<LinExpr> {
    let mut sum = LinExpr::zero(p.n)?;
    for (c, mu) in p.constraints.iter().zip(&d.constraints) {
        sum.add_scaled(&c.expr, mu)?;
    }
    for (k, l) in &d.cone {
        let g = rows.get(*k).ok_or(Error::IndexOutOfRange {
            index: *k,
            len: rows.len(),
        })?;
        sum.add_scaled(g, &-l)?;
    }
    Ok(sum)
}

fn feasible(p: &BoundProblem, rows: &[LinExpr], h: &EntropyVector) -> Result<bool> {
    for g in rows {
        if g.evaluate(h)?.is_negative() {
            return Ok(false);
        }
    }
    for c in &p.constraints {
        if !c.holds(h)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Re-checks any outcome against the problem and the cone rows it was solved with.
pub fn verify_solution(p: &BoundProblem, rows: &[LinExpr], outcome: &BoundOutcome) -> Result<bool> {
    let s = p.sense.sign();
    match outcome {
        BoundOutcome::Optimal { value, point, dual } => {
            if !feasible(p, rows, point)? || &p.objective.evaluate(point)? != value {
                return Ok(false);
            }
            if !dual_signs_ok(p, dual) {
                return Ok(false);
            }
            let rhs: BigRational = p
                .constraints
                .iter()
                .zip(&dual.constraints)
                .map(|(c, mu)| mu * &c.rhs)
                .sum();
            Ok(dual_combination(p, rows, dual)? == p.objective.scaled(&s) && rhs == value * &s)
        }
        BoundOutcome::Infeasible { dual } => {
            if !dual_signs_ok(p, dual) {
                return Ok(false);
            }
            let rhs: BigRational = p
                .constraints
                .iter()
                .zip(&dual.constraints)
                .map(|(c, mu)| mu * &c.rhs)
                .sum();
            Ok(dual_combination(p, rows, dual)?.is_zero() && rhs.is_negative())
        }
        BoundOutcome::Unbounded { point, ray } => {
            if !feasible(p, rows, point)? {
                return Ok(false);
            }
            for g in rows {
                if g.evaluate(ray)?.is_negative() {
                    return Ok(false);
                }
            }
            for c in &p.constraints {
                let v = c.expr.evaluate(ray)?;
                let ok = match c.rel {
                    Relation::Le => !v.is_positive(),
                    Relation::Ge => !v.is_negative(),
                    Relation::Eq => v.is_zero(),
                };
                if !ok {
                    return Ok(false);
                }
            }
            Ok((p.objective.evaluate(ray)? * &s).is_positive())
        }
    }
}

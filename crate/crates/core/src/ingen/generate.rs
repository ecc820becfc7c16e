use num_bigint::BigInt;
use rayon::prelude::*;

use super::{count_delta, count_delta0, CanonicalInequality, Delta0Form, Shape};
use crate::entspace::SubsetMask;
use crate::{check_n, Error, Result};

/// Default cap on the number of generated inequalities.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

/// Upper bound on how many inequalities a generator may emit.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct GenBudget(pub u64);

impl Default for GenBudget {
    fn default() -> Self {
        GenBudget(DEFAULT_BUDGET)
    }
}

impl GenBudget {
    pub fn unlimited() -> Self {
        GenBudget(u64::MAX)
    }

    pub(crate) fn admit(&self, predicted: &BigInt) -> Result<()> {
        if *predicted <= BigInt::from(self.0) {
            Ok(())
        } else {
            Err(Error::BudgetExceeded {
                predicted: predicted.to_string(),
                budget: self.0,
            })
        }
    }
}

fn build(n: usize, shapes: impl Iterator<Item = Shape>) -> Vec<CanonicalInequality> {
    shapes
        .map(|s| CanonicalInequality::new(n, s).expect("generated shape is valid"))
        .collect()
}

/// Pairs `i < j` with every conditioning set `μ ⊆ N ∖ {i, j}`, in canonical order.
fn pair_shapes(n: usize) -> impl Iterator<Item = (usize, usize, SubsetMask)> {
    let full = SubsetMask::full(n);
    (1..=n).flat_map(move |i| {
        (i + 1..=n).flat_map(move |j| {
            let rest = full - SubsetMask::singleton(i) - SubsetMask::singleton(j);
            rest.subsets().map(move |mu| (i, j, mu))
        })
    })
}

/// The elemental inequalities `h(i | N∖i) ≥ 0` and `I(i; j | δ) ≥ 0`.
pub fn gen_elemental(n: usize) -> Result<Vec<CanonicalInequality>> {
    check_n(n)?;
    let h = (1..=n).map(|i| Shape::ElementalH { i });
    let i = pair_shapes(n).map(|(i, j, delta)| Shape::ElementalI { i, j, delta });
    Ok(build(n, h.chain(i)))
}

/// `Δ1 = { J(h; i, j, ∅, μ) ≥ 0 : i < j, μ ⊆ N ∖ {i, j} }`.
pub fn gen_delta1(n: usize) -> Result<Vec<CanonicalInequality>> {
    check_n(n)?;
    Ok(build(
        n,
        pair_shapes(n).map(|(i, j, mu)| Shape::Delta1 { i, j, mu }),
    ))
}

/// `Δ2 = { J(h; i, i, ∅, N ∖ i) ≥ 0 }`.
pub fn gen_delta2(n: usize) -> Result<Vec<CanonicalInequality>> {
    check_n(n)?;
    Ok(build(n, (1..=n).map(|i| Shape::Delta2 { i })))
}

/// Decodes a base-6 assignment of ground elements to `δ1..δ4` (digits 0–3),
/// `β` (4) or unused (5), keeping one representative per pair-swap orbit.
fn decode_assignment(n: usize, mut code: u64) -> Option<Delta0Form> {
    let mut parts = [SubsetMask::EMPTY; 5];
    for i in 1..=n {
        let digit = (code % 6) as usize;
        code /= 6;
        if digit < 5 {
            parts[digit] = parts[digit] | SubsetMask::singleton(i);
        }
    }
    let [d1, d2, d3, d4, beta] = parts;
    if [d1, d2, d3, d4].iter().any(|d| d.is_empty()) {
        return None;
    }
    if d1.min_element() > d2.min_element() || d3.min_element() > d4.min_element() {
        return None;
    }
    Some(Delta0Form {
        pair12: (d1, d2),
        pair34: (d3, d4),
        beta,
    })
}

/// All of `Δ0`, sorted canonically. Enumerates the `6^n` element assignments in parallel.
pub fn gen_delta0(n: usize, budget: GenBudget) -> Result<Vec<CanonicalInequality>> {
    check_n(n)?;
    budget.admit(&count_delta0(n))?;
    let total = 6u64.pow(n as u32);
    let mut out: Vec<CanonicalInequality> = (0..total)
        .into_par_iter()
        .filter_map(|code| decode_assignment(n, code))
        .map(|form| CanonicalInequality::new(n, Shape::Delta0(form)).expect("valid Δ0 form"))
        .collect();
    out.par_sort_unstable();
    Ok(out)
}

/// `Δ = Δ0 ∪ Δ1 ∪ Δ2` in canonical order.
pub fn gen_delta(n: usize, budget: GenBudget) -> Result<Vec<CanonicalInequality>> {
    check_n(n)?;
    budget.admit(&count_delta(n))?;
    let mut out = gen_delta0(n, budget)?;
    out.extend(gen_delta1(n)?);
    out.extend(gen_delta2(n)?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::ingen::Kind;

    #[test]
    fn elemental_counts() {
        assert_eq!(gen_elemental(2).unwrap().len(), 3);
        assert_eq!(gen_elemental(3).unwrap().len(), 9);
        assert_eq!(gen_elemental(4).unwrap().len(), 28);
        assert!(gen_elemental(1).is_err());
        assert!(gen_elemental(21).is_err());
    }

    #[test]
    fn elemental_n2_members() {
        let text: Vec<String> = gen_elemental(2)
            .unwrap()
            .iter()
            .map(|c| c.expr().to_string())
            .collect();
        assert_eq!(
            text,
            [
                "-1*h{2} +1*h{1,2}",
                "-1*h{1} +1*h{1,2}",
                "+1*h{1} +1*h{2} -1*h{1,2}"
            ]
        );
    }

    #[test]
    fn delta_family_sizes() {
        assert!(gen_delta0(3, GenBudget::default()).unwrap().is_empty());
        let d0 = gen_delta0(4, GenBudget::default()).unwrap();
        assert_eq!(d0.len(), 6);
        for c in &d0 {
            let Shape::Delta0(f) = c.shape() else {
                panic!()
            };
            assert!(f.beta.is_empty());
            assert!([f.pair12.0, f.pair12.1, f.pair34.0, f.pair34.1]
                .iter()
                .all(|d| d.len() == 1));
        }
        assert_eq!(gen_delta1(4).unwrap().len(), 24);
        assert_eq!(gen_delta2(4).unwrap().len(), 4);
        assert_eq!(gen_delta(2, GenBudget::default()).unwrap().len(), 3);
        assert_eq!(gen_delta(4, GenBudget::default()).unwrap().len(), 34);
        assert_eq!(gen_delta(5, GenBudget::default()).unwrap().len(), 205);
    }

    #[test]
    fn delta_order_is_canonical() {
        let d = gen_delta(5, GenBudget::default()).unwrap();
        assert!(d.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(d.first().unwrap().kind(), Kind::Delta0);
        assert_eq!(d.last().unwrap().kind(), Kind::Delta2);
    }

    #[test]
    fn no_duplicate_exprs() {
        for n in 2..=5 {
            let d = gen_delta(n, GenBudget::default()).unwrap();
            let set: HashSet<_> = d.iter().map(|c| c.expr().clone()).collect();
            assert_eq!(set.len(), d.len(), "n={n}");
        }
    }

    #[test]
    fn budget_enforced() {
        let err = gen_delta(5, GenBudget(204)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        assert!(gen_delta(5, GenBudget(205)).is_ok());
        assert!(gen_delta0(5, GenBudget(119)).is_err());
    }
}

mod common;

use common::*;
use ingleton::entspace::{EntropyVector, IngletonQuad, LinExpr, SubsetMask};
use ingleton::ingen::{classify_quad, reduce_quad, QuadClass};
use ingleton::BigRational;
use proptest::prelude::*;

const N: usize = 6;
const FULL: u32 = (1 << N) - 1;

fn arb_mask() -> impl Strategy<Value = u32> {
    0..=FULL
}

fn arb_rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| BigRational::new(p.into(), q.into()))
}

fn arb_expr() -> impl Strategy<Value = LinExpr> {
    prop::collection::vec((1..=FULL, arb_rational()), 0..12).prop_map(|terms| {
        let mut e = LinExpr::zero(N).unwrap();
        for (m, c) in terms {
            e.add_term(mask(m), c).unwrap();
        }
        e
    })
}

fn arb_point() -> impl Strategy<Value = EntropyVector> {
    prop::collection::vec(arb_rational(), (1 << N) - 1).prop_map(|vals| {
        let mut it = vals.into_iter();
        EntropyVector::from_fn(N, |_| it.next().unwrap()).unwrap()
    })
}

proptest! {
    #[test]
    fn evaluation_is_linear(e1 in arb_expr(), e2 in arb_expr(), a in arb_rational(), b in arb_rational(), h in arb_point()) {
        let combo = &e1.scaled(&a) + &e2.scaled(&b);
        prop_assert_eq!(
            combo.evaluate(&h).unwrap(),
            a * e1.evaluate(&h).unwrap() + b * e2.evaluate(&h).unwrap()
        );
    }

    #[test]
    fn projections_are_additive(e1 in arb_expr(), e2 in arb_expr(), beta in arb_mask()) {
        let beta = mask(beta);
        let sum = &e1 + &e2;
        prop_assert_eq!(
            sum.project_onto(beta).unwrap(),
            &e1.project_onto(beta).unwrap() + &e2.project_onto(beta).unwrap()
        );
        prop_assert_eq!(
            sum.project_away(beta).unwrap(),
            &e1.project_away(beta).unwrap() + &e2.project_away(beta).unwrap()
        );
    }

    #[test]
    fn ingleton_matches_oracle(a1 in arb_mask(), a2 in arb_mask(), a3 in arb_mask(), a4 in arb_mask()) {
        prop_assert_eq!(to_raw(&j(N, [a1, a2, a3, a4])), raw_j(a1, a2, a3, a4));
        prop_assert_eq!(to_raw(&h(N, a1, a2)), raw_h(a1, a2));
        prop_assert_eq!(to_raw(&i(N, a1, a2, a3)), raw_i(a1, a2, a3));
    }

    #[test]
    fn ingleton_pair_swaps(a1 in arb_mask(), a2 in arb_mask(), a3 in arb_mask(), a4 in arb_mask()) {
        let base = j(N, [a1, a2, a3, a4]);
        prop_assert_eq!(&base, &j(N, [a2, a1, a3, a4]));
        prop_assert_eq!(&base, &j(N, [a1, a2, a4, a3]));
        prop_assert_eq!(&base, &j(N, [a2, a1, a4, a3]));
    }

    #[test]
    fn ingleton_reduces_to_shannon_measures(a1 in arb_mask(), a2 in arb_mask(), a4 in arb_mask()) {
        prop_assert_eq!(j(N, [a1, a2, 0, a4]), i(N, a1, a2, a4));
        prop_assert_eq!(j(N, [a1, a1, 0, a2]), h(N, a1, a2));
    }

    #[test]
    fn shrinking_identities(a in prop::array::uniform4(arb_mask()), pick in arb_mask()) {
        // Pick b inside each relevant intersection so every side condition is exercised.
        for b in [pick & a[0] & a[1], pick & a[0] & a[2], pick & a[2] & a[3]] {
            for id in shrink_identities(N, a, b) {
                prop_assert!(id.holds(), "{} failed for {:?}, b={}", id.name, a, b);
            }
        }
    }

    #[test]
    fn splitting_identities(s in prop::array::uniform3(arb_mask()), p in prop::array::uniform3(arb_mask())) {
        let id = split_first(N, s[0], s[1], s[2], p[0] & s[0], p[1] & s[1], p[2] & s[2]);
        prop_assert!(id.holds());
        let id = split_fourth(N, s[0], s[1], s[2], p[0] & s[0], p[1] & s[1], p[2] & s[2]);
        prop_assert!(id.holds());
    }

    #[test]
    fn relabeling_commutes_with_ingleton(a in prop::array::uniform4(arb_mask()), perm in Just((0..N).collect::<Vec<_>>()).prop_shuffle()) {
        let q = IngletonQuad::new(mask(a[0]), mask(a[1]), mask(a[2]), mask(a[3]));
        let lhs = j(N, a).relabel(&perm);
        let r = q.relabel(&perm);
        prop_assert_eq!(lhs, j(N, [r.0[0].bits(), r.0[1].bits(), r.0[2].bits(), r.0[3].bits()]));
    }

    #[test]
    fn reduction_parts_are_disjoint(a in prop::array::uniform4(arb_mask())) {
        let q = IngletonQuad::new(mask(a[0]), mask(a[1]), mask(a[2]), mask(a[3]));
        let (d, beta) = reduce_quad(&q);
        let mut seen = beta;
        for part in d {
            prop_assert!(part.is_disjoint(seen));
            seen = seen | part;
        }
        prop_assert_eq!(seen, q.0.iter().fold(SubsetMask::EMPTY, |acc, &m| acc | m));
        if let QuadClass::ReducesTo(form) = classify_quad(N, &q).unwrap() {
            prop_assert!(!q.has_covered_subset());
            prop_assert_eq!(form.quad().0.iter().fold(SubsetMask::EMPTY, |acc, &m| acc | m), seen);
        }
    }
}

#[test]
fn split_first_as_printed_fails() {
    // a = ∅, b = c = α3 = α4 = {1}, α2 = ∅: the left side is h(1), the right side 2·h(1).
    let id = split_first_as_printed(N, 0, 1, 1, 0, 1, 1);
    assert!(!id.holds());
    assert_eq!(id.lhs, h(N, 1, 0));
    assert_eq!(id.rhs, h(N, 1, 0).scaled(&int(2)));
    assert!(split_first(N, 0, 1, 1, 0, 1, 1).holds());
}

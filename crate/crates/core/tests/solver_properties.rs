use ingleton::bound::{solve_bound, BoundOutcome, BoundProblem, Cone, Constraint, Relation, Sense};
use ingleton::certify::{decide, verify_certificate, verify_witness, Implication};
use ingleton::entspace::{ingleton_expr, IngletonQuad, LinExpr, SubsetMask};
use ingleton::ingen::{exprs, gen_delta, gen_elemental, GenBudget};
use ingleton::BigRational;
use proptest::prelude::*;

const N: usize = 4;
const FULL: u32 = (1 << N) - 1;

fn quad() -> impl Strategy<Value = IngletonQuad> {
    prop::array::uniform4(0..=FULL).prop_map(|a| {
        IngletonQuad::new(
            SubsetMask::from_bits(a[0]),
            SubsetMask::from_bits(a[1]),
            SubsetMask::from_bits(a[2]),
            SubsetMask::from_bits(a[3]),
        )
    })
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decision_ignores_generator_order(q in quad(), perm in Just((0..28).collect::<Vec<usize>>()).prop_shuffle()) {
        let gens = exprs(&gen_elemental(N).unwrap());
        let shuffled: Vec<LinExpr> = perm.iter().map(|&k| gens[k].clone()).collect();
        let target = ingleton_expr(N, &q).unwrap();
        let a = decide(&target, &gens).unwrap();
        let b = decide(&target, &shuffled).unwrap();
        prop_assert_eq!(a.is_implied(), b.is_implied());
        match b {
            Implication::Implied(c) => prop_assert!(verify_certificate(&target, &shuffled, &c).unwrap()),
            Implication::Separated(w) => prop_assert!(verify_witness(&target, &shuffled, &w).unwrap()),
        }
    }

    #[test]
    fn ingleton_cone_never_loosens_a_bound(
        obj in prop::collection::vec((1..=FULL, -3i64..=3), 1..5),
        caps in prop::collection::vec((1..=FULL, 1i64..=4), 0..3),
        scale in 1i64..=5,
    ) {
        let expr = |terms: &[(u32, i64)]| {
            LinExpr::from_terms(N, terms.iter().map(|&(m, c)| (SubsetMask::from_bits(m), c))).unwrap()
        };
        let mut constraints = vec![Constraint::new(expr(&[(FULL, 1)]), Relation::Le, int(2))];
        for &(m, cap) in &caps {
            constraints.push(Constraint::new(expr(&[(m, 1)]), Relation::Le, int(cap)));
        }
        let mut p = BoundProblem { n: N, constraints, objective: expr(&obj), sense: Sense::Maximize, cone: Cone::Gamma };
        let gamma = solve_bound(&p, GenBudget::default()).unwrap();
        p.cone = Cone::GammaIn;
        let gamma_in = solve_bound(&p, GenBudget::default()).unwrap();
        let (BoundOutcome::Optimal { value: vg, .. }, BoundOutcome::Optimal { value: vi, .. }) = (&gamma, &gamma_in) else {
            return Err(TestCaseError::fail("bounded problem not optimal"));
        };
        prop_assert!(vi <= vg);

        // Homogeneous cone: scaling every right-hand side scales the optimum.
        for c in &mut p.constraints {
            c.rhs = &c.rhs * int(scale);
        }
        let scaled = solve_bound(&p, GenBudget::default()).unwrap();
        prop_assert_eq!(scaled.value(), Some(&(vi * int(scale))));
    }
}

#[test]
fn delta_members_are_not_elemental_consequences_unless_elemental() {
    let elemental = exprs(&gen_elemental(N).unwrap());
    for ineq in gen_delta(N, GenBudget::default()).unwrap() {
        let implied = decide(ineq.expr(), &elemental).unwrap().is_implied();
        let is_delta0 = matches!(ineq.kind(), ingleton::ingen::Kind::Delta0);
        assert_eq!(implied, !is_delta0, "{ineq}");
    }
}

//! Property tests: algebraic laws on randomly generated small polynomials
//! and series, with brute-force partition sums as the composition oracle.

use proptest::prelude::*;

use corolla::coeff::{factorial, ratio, Coeff};
use corolla::diffops::{apply_tower, dart, adjoint_dart, DiffOp};
use corolla::oracles;
use corolla::{Monomial, MultiPoly, Subst, SubstMap, TruncatedSeries, VarId};

fn var_pool() -> Vec<VarId> {
    vec![
        VarId::x(0),
        VarId::x(1),
        VarId::x(2),
        VarId::q(0),
        VarId::y(1),
    ]
}

fn arb_coeff() -> impl Strategy<Value = Coeff> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| ratio(n, d))
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    proptest::collection::vec((0usize..5, 1u32..=3), 0..3).prop_map(|pairs| {
        let pool = var_pool();
        Monomial::from_pairs(pairs.into_iter().map(|(i, e)| (pool[i], e)).collect())
    })
}

fn arb_poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((arb_monomial(), arb_coeff()), 0..4).prop_map(|terms| {
        let mut p = MultiPoly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    })
}

fn arb_var() -> impl Strategy<Value = VarId> {
    (0usize..5).prop_map(|i| var_pool()[i])
}

fn arb_subst() -> impl Strategy<Value = SubstMap> {
    proptest::collection::vec(
        (
            0usize..5,
            prop_oneof![
                arb_coeff().prop_map(Subst::Constant),
                ((0usize..5), (0u32..3)).prop_map(|(j, e)| {
                    Subst::VarPow(var_pool()[j], e)
                }),
            ],
        ),
        0..4,
    )
    .prop_map(|rules| {
        let pool = var_pool();
        rules.into_iter().map(|(i, s)| (pool[i], s)).collect()
    })
}

fn arb_diffop() -> impl Strategy<Value = DiffOp> {
    proptest::collection::vec((arb_poly(), arb_var()), 1..3)
        .prop_map(DiffOp::from_terms)
}

proptest! {
    #[test]
    fn add_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
    }

    #[test]
    fn add_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
    }

    #[test]
    fn mul_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn mul_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn derivative_satisfies_leibniz(a in arb_poly(), b in arb_poly(), v in arb_var()) {
        let lhs = (&a * &b).partial_derivative(v);
        let rhs = &(&a.partial_derivative(v) * &b) + &(&a * &b.partial_derivative(v));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn specialize_is_a_ring_homomorphism(
        a in arb_poly(),
        b in arb_poly(),
        rules in arb_subst()
    ) {
        prop_assert_eq!(
            (&a * &b).specialize(&rules),
            &a.specialize(&rules) * &b.specialize(&rules)
        );
        prop_assert_eq!(
            (&a + &b).specialize(&rules),
            &a.specialize(&rules) + &b.specialize(&rules)
        );
    }

    #[test]
    fn text_round_trip(a in arb_poly()) {
        let text = a.to_text();
        prop_assert_eq!(MultiPoly::parse(&text).unwrap(), a);
    }

    #[test]
    fn json_round_trip(a in arb_poly()) {
        let v = a.to_json();
        prop_assert_eq!(MultiPoly::from_json(&v).unwrap(), a);
    }

    #[test]
    fn diffop_is_linear(op in arb_diffop(), a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(op.apply(&(&a + &b)), &op.apply(&a) + &op.apply(&b));
    }

    #[test]
    fn diffop_is_a_derivation(op in arb_diffop(), a in arb_poly(), b in arb_poly()) {
        let lhs = op.apply(&(&a * &b));
        let rhs = &(&op.apply(&a) * &b) + &(&a * &op.apply(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn tower_application_is_linear(
        ops in proptest::collection::vec(arb_diffop(), 1..3),
        a in arb_poly(),
        b in arb_poly()
    ) {
        prop_assert_eq!(
            apply_tower(&ops, &(&a + &b)),
            &apply_tower(&ops, &a) + &apply_tower(&ops, &b)
        );
    }
}

/// Inner product making x^k / sqrt(k!) orthonormal:
/// <x^k, x^l> = k! delta_{k,l}, extended bilinearly.
fn inner(a: &MultiPoly, b: &MultiPoly) -> Coeff {
    let mut acc = Coeff::default();
    for (m, ca) in a.iter() {
        let cb = b.coefficient(m);
        if cb != Coeff::default() {
            let mut weight = Coeff::from_integer(1.into());
            for (_, e) in m.iter() {
                weight *= factorial(e as usize);
            }
            acc += ca * &cb * weight;
        }
    }
    acc
}

proptest! {
    #[test]
    fn dart_and_adjoint_dart_are_adjoint(
        a in arb_poly(),
        b in arb_poly(),
        i in 0u32..3
    ) {
        let lhs = inner(&dart(i).apply(&a), &b);
        let rhs = inner(&a, &adjoint_dart(i, false).apply(&b));
        prop_assert_eq!(lhs, rhs);
    }
}

fn arb_series(order: usize, zero_constant: bool) -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec(arb_coeff(), order + 1).prop_map(move |cs| {
        let mut s = TruncatedSeries::zero(order);
        for (k, c) in cs.into_iter().enumerate() {
            if zero_constant && k == 0 {
                continue;
            }
            s.set_coeff(k, MultiPoly::constant(c));
        }
        s
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Composition coefficients equal the set-partition sum
    /// sum_{pi in Pi[n]} F[|pi|] prod_B G[|B|].
    #[test]
    fn compose_matches_partition_sum(
        f in arb_series(8, false),
        g in arb_series(8, true)
    ) {
        let h = f.compose(&g).unwrap();
        for n in 1..=8usize {
            let mut expect = MultiPoly::zero();
            for pi in oracles::set_partitions(n).unwrap() {
                let mut term = f.coeff(pi.len());
                for block in &pi {
                    term = &term * &g.coeff(block.len());
                }
                expect = &expect + &term;
            }
            prop_assert_eq!(h.coeff(n), expect);
        }
    }

    /// The higher-derivative chain rule: the n-th coefficient of F(G)
    /// equals Delta_n F evaluated at the coefficients of G.
    #[test]
    fn hmy_formula_against_composition(
        f in arb_series(7, false),
        g in arb_series(7, true)
    ) {
        use corolla::closed_forms::hmy_delta;
        let h = f.compose(&g).unwrap();
        let f_coeffs: Vec<MultiPoly> = (0..=7).map(|k| f.coeff(k)).collect();
        for n in 1..=7usize {
            let delta = hmy_delta(&f_coeffs, n);
            let mut rules = SubstMap::new();
            for k in 0..=n {
                rules.insert(
                    VarId::x(k as u32),
                    Subst::Constant(g.coeff(k).constant_term()),
                );
            }
            prop_assert_eq!(delta.specialize(&rules), h.coeff(n));
        }
    }
}

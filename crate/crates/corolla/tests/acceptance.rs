//! Acceptance suite: one test per criterion, each printing a PASS line.
//! Every comparison is bit-exact (exact rational arithmetic throughout).
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use corolla::closed_forms::*;
use corolla::coeff::{falling, rat, Coeff};
use corolla::diffops::{apply_tower, op_b, op_d, xd_power};
use corolla::oracles;
use corolla::{Enricher, Family, Monomial, MultiPoly, TruncatedSeries, VarId};

fn p(s: &str) -> MultiPoly {
    MultiPoly::parse(s).unwrap()
}

fn x0_pow(e: u32) -> MultiPoly {
    MultiPoly::from_term(Monomial::var_pow(VarId::x(0), e), rat(1))
}

#[test]
fn criterion_1_golden_polynomials() {
    assert_eq!(
        cayley_rooted(5),
        p("5*x4*x0^4 + 60*x2^2*x0^3 + 80*x1*x3*x0^3 + 360*x1^2*x2*x0^2 + 120*x1^4*x0")
    );
    assert_eq!(cayley_free(5), p("60*x1^2*x2^3 + 60*x1^3*x2*x3 + 5*x1^4*x4"));
    assert_eq!(
        plane_forest_frobenius(5).unwrap(),
        p("x4*x0^4 + 2*x2^2*x0^3 + 4*x1*x3*x0^3 + 6*x1^2*x2*x0^2 + x1^4*x0")
    );

    let m2 = Enricher::Monomial(2);
    let table = [
        (
            1,
            "40*x2^2*x3^4 + 32*x2^3*x4^2*x3 + 24*x3^3*x4^2*x1 + 8*x4^4*x2*x1 \
             + 16*x5^2*x4*x3*x2*x1",
        ),
        (
            2,
            "20*x3^4*x1^3 + 40*x4^2*x3*x2*x1^3 + 40*x2^6*x1 + 140*x2^3*x3^2*x1^2",
        ),
        (3, "80*x1^4*x2^4 + 40*x1^5*x3^2*x2"),
        (4, "20*x1^7*x2^2"),
        (5, "x1^10"),
    ];
    for (k, expect) in table {
        assert_eq!(gen_bell(&m2, 5, k, false, 0), p(expect), "B[2]_(5,{k})");
    }

    assert_eq!(
        increasing_tree_poly(&m2, 3, true, 0),
        p("2*x2^4*q0*q1^2 + 4*x3^2*x2*x1*q0*q1*q2")
    );

    let pb_expansion = [
        "1",
        "2*q",
        "4*q^3 + 2*q^2",
        "8*q^6 + 4*q^5 + 12*q^4",
        "16*q^10 + 8*q^9 + 24*q^8 + 32*q^7 + 40*q^6",
        "32*q^15 + 16*q^14 + 48*q^13 + 64*q^12 + 160*q^11 + 40*q^10 + 280*q^9 + 80*q^8",
    ];
    for (i, expect) in pb_expansion.iter().enumerate() {
        let n = i + 1;
        assert_eq!(
            pathlength_poly(&Enricher::Pow(2), n).unwrap().poly,
            p(expect),
            "p_{n}^pb"
        );
    }

    let f32 = xd_power(3, 2);
    assert_eq!(f32.coefficient(2, 5), rat(12));
    assert_eq!(f32.coefficient(1, 4), rat(3));
    assert_eq!(f32.num_terms(), 2);
    let f43 = xd_power(4, 3);
    assert_eq!(f43.coefficient(3, 7), rat(120));
    assert_eq!(f43.coefficient(2, 6), rat(60));
    assert_eq!(f43.coefficient(1, 5), rat(4));
    assert_eq!(f43.num_terms(), 3);
    let f54 = xd_power(5, 4);
    assert_eq!(f54.coefficient(4, 9), rat(1680));
    assert_eq!(f54.coefficient(3, 8), rat(1260));
    assert_eq!(f54.coefficient(2, 7), rat(210));
    assert_eq!(f54.coefficient(1, 6), rat(5));
    assert_eq!(f54.num_terms(), 4);

    println!("criterion 1 (golden polynomials): PASS");
}

#[test]
fn criterion_2_counting_specializations() {
    for n in 1..=8i64 {
        assert_eq!(
            cayley_rooted(n as usize).coefficient_sum(),
            rat(n.pow(n as u32 - 1)),
            "rooted count n={n}"
        );
    }
    for n in 2..=8i64 {
        assert_eq!(
            cayley_free(n as usize).coefficient_sum(),
            rat(n.pow(n as u32 - 2)),
            "free count n={n}"
        );
    }
    for n in 1..=8usize {
        let got = univariate_tower(&Enricher::Monomial(2), n, n, 0);
        let mut rising = rat(1);
        for f in n..=2 * n - 2 {
            rising *= rat(f as i64);
        }
        let expect = MultiPoly::from_term(
            Monomial::var_pow(VarId::x(0), 2 * n as u32 - 1),
            rising,
        );
        assert_eq!(got, expect, "(x^2 D)^(n-1) x^n at n={n}");
    }
    for k in 0..=6usize {
        for n in 0..=6usize {
            assert_eq!(
                functions_poly(k, n).coefficient_sum(),
                rat((n as i64).pow(k as u32)),
                "functions k={k} n={n}"
            );
        }
    }
    println!("criterion 2 (counting specializations): PASS");
}

#[test]
fn criterion_3_dual_route_identities() {
    for phi in [
        Enricher::Exp,
        Enricher::Lin,
        Enricher::Pow(2),
        Enricher::Complete(2),
    ] {
        for n in 1..=7 {
            assert_eq!(
                pathlength_recursion(&phi, n).unwrap(),
                pathlength_operator(&phi, n).unwrap(),
                "pathlength dual route phi={phi} n={n}"
            );
        }
    }

    for (phi, bound) in [
        (Enricher::Monomial(2), 0usize),
        (Enricher::Complete(2), 0),
        (Enricher::Exp, 6),
    ] {
        for n in 1..=6 {
            for k in 1..=n {
                assert_eq!(
                    gen_bell_recursion(&phi, n, k, true, bound),
                    gen_bell_conjugation(&phi, n, k, true, bound),
                    "gen Bell dual route phi={phi} n={n} k={k}"
                );
            }
        }
    }

    for m in 1..=5u32 {
        for n in 1..=6usize {
            let ops: Vec<_> = (1..=n).map(|i| op_d(i as u32)).collect();
            let tower = apply_tower(&ops, &x0_pow(m));
            let mut coeffs = vec![MultiPoly::zero(); m as usize + 1];
            coeffs[m as usize] = MultiPoly::constant(corolla::coeff::factorial(m as usize));
            assert_eq!(hmy_delta(&coeffs, n), tower, "hmy m={m} n={n}");
        }
    }

    for n in 1..=7 {
        let f = TruncatedSeries::generic(n + 1, 0, |k| MultiPoly::var(VarId::x(k as u32)));
        assert_eq!(
            lagrange_tree_coeff(&f, n).unwrap(),
            cayley_rooted(n),
            "lagrange n={n}"
        );
    }

    let order = 8;
    let f = TruncatedSeries::generic(order, 0, |k| MultiPoly::var(VarId::y(k as u32)));
    let g = TruncatedSeries::generic(order, 1, |k| MultiPoly::var(VarId::x(k as u32)));
    let h = f.compose(&g).unwrap();
    for n in 1..=order {
        assert_eq!(faa_di_bruno_coeff(n), h.coeff(n), "faa n={n}");
    }

    println!("criterion 3 (dual-route identities): PASS");
}

#[test]
fn criterion_4_oracle_equivalence() {
    for phi in [
        Enricher::Exp,
        Enricher::Lin,
        Enricher::Pow(2),
        Enricher::Complete(2),
    ] {
        for n in 1..=9 {
            assert_eq!(
                pathlength_poly(&phi, n).unwrap().poly,
                oracles::pathlength(&phi, n).unwrap(),
                "pathlength oracle phi={phi} n={n}"
            );
        }
    }

    for j in 0..=2usize {
        for n in 0..=16usize {
            for with_q in [false, true] {
                assert_eq!(
                    ballot_poly(n, j, with_q).poly,
                    oracles::ballot(n, j, with_q).unwrap(),
                    "ballot oracle n={n} j={j} q={with_q}"
                );
            }
        }
    }

    for n in 1..=7 {
        assert_eq!(
            cayley_rooted(n),
            oracles::rooted_trees(n).unwrap(),
            "rooted oracle n={n}"
        );
    }
    for n in 2..=7 {
        assert_eq!(
            cayley_free(n),
            oracles::free_trees(n).unwrap(),
            "free oracle n={n}"
        );
    }

    for k in 0..=6 {
        for n in 0..=6 {
            assert_eq!(
                functions_poly(k, n),
                oracles::endofunctions(k, n).unwrap(),
                "endofunctions k={k} n={n}"
            );
        }
    }

    for n in 1..=8 {
        for k in 1..=n {
            assert_eq!(
                ballot_bell(n, k),
                oracles::ballot_partitions(n, k).unwrap(),
                "ballot partitions n={n} k={k}"
            );
        }
    }

    for phi in [Enricher::Monomial(2), Enricher::Complete(2)] {
        for n in 1..=6 {
            for k in 1..=n {
                assert_eq!(
                    gen_bell(&phi, n, k, true, 0),
                    oracles::enriched_forests(&phi, n, k, true, 0).unwrap(),
                    "forests phi={phi} n={n} k={k}"
                );
            }
        }
    }
    let bound = 4;
    for n in 1..=6 {
        for k in 1..=n {
            assert_eq!(
                gen_bell(&Enricher::Exp, n, k, true, bound),
                oracles::enriched_forests(&Enricher::Exp, n, k, true, bound).unwrap(),
                "forests exp n={n} k={k}"
            );
        }
    }

    println!("criterion 4 (oracle equivalence): PASS");
}

#[test]
fn criterion_5_classical_sequences() {
    let catalan_row = [1i64, 1, 2, 5, 14, 42];
    for (n, &c) in catalan_row.iter().enumerate() {
        assert_eq!(catalan(n, false), MultiPoly::constant(rat(c)), "C_{n}");
    }

    // tangent numbers 0, 1, 0, 2, 0, 16, 0, 272
    let tan = [0i64, 1, 0, 2, 0, 16, 0, 272];
    let y = ode_solve(&Enricher::Complete(2), 7, false);
    for (n, &t) in tan.iter().enumerate() {
        assert_eq!(y.coeff(n), MultiPoly::constant(rat(t)), "tan coeff {n}");
    }
    for (n, &t) in tan.iter().enumerate().skip(1) {
        let total = pathlength_poly(&Enricher::Complete(2), n)
            .unwrap()
            .poly
            .coefficient_sum();
        assert_eq!(total, rat(t), "p_{n}^beta(1)");
        if n % 2 == 0 {
            assert_eq!(total, Coeff::default(), "even vanish n={n}");
        }
    }

    let mut fact = 1i64;
    let mut dfact = 1i64;
    for n in 1..=8usize {
        if n >= 2 {
            fact *= n as i64 - 1;
            dfact *= 2 * n as i64 - 3;
        }
        assert_eq!(
            pathlength_poly(&Enricher::Exp, n).unwrap().poly.coefficient_sum(),
            rat(fact),
            "p_n^exp(1) n={n}"
        );
        assert_eq!(
            pathlength_poly(&Enricher::Lin, n).unwrap().poly.coefficient_sum(),
            rat(dfact),
            "p_n^lin(1) n={n}"
        );
    }

    for n in 1..=7usize {
        let at_one = hypertree_poly(n).coefficient_sum();
        let touchard_at_n = {
            let mut rules = corolla::SubstMap::new();
            rules.insert(VarId::x(0), corolla::Subst::Constant(rat(n as i64)));
            touchard(n - 1).specialize(&rules).constant_term()
        };
        assert_eq!(at_one, touchard_at_n, "hypertree count n={n}");
    }

    println!("criterion 5 (classical sequences): PASS");
}

#[test]
fn criterion_6_forest_relation() {
    for phi in [Enricher::Exp, Enricher::Lin] {
        for n in 0..=7usize {
            let f = forest_pathlength_poly(&phi, n).unwrap();
            let qn = MultiPoly::from_term(Monomial::var_pow(VarId::q(0), n as u32), rat(1));
            assert_eq!(
                &qn * &f,
                pathlength_poly(&phi, n + 1).unwrap().poly,
                "forest relation phi={phi} n={n}"
            );
        }
    }
    println!("criterion 6 (forest relation): PASS");
}

#[test]
fn criterion_7_ballot_chain() {
    for m in 1..=4u32 {
        for n in 1..=6usize {
            let ops: Vec<_> = (1..=n).map(|i| op_b(i as u32, false)).collect();
            let lhs = apply_tower(&ops, &x0_pow(m));
            let mut rhs = MultiPoly::zero();
            for k in 1..=n.min(m as usize) {
                let pow = MultiPoly::from_term(
                    Monomial::var_pow(VarId::x(0), m - k as u32),
                    falling(m as i64, k),
                );
                rhs = &rhs + &(&pow * &ballot_bell(n, k));
            }
            assert_eq!(lhs, rhs, "ballot chain m={m} n={n}");
        }
    }
    println!("criterion 7 (ballot chain): PASS");
}

#[test]
fn oracle_specialization_of_tree_polynomial_matches_pathlength() {
    // the q-weighted tree tower specialized by x<-0, q_i<-q^i is the
    // path-length polynomial; checked here through the public routes
    for phi in [Enricher::Pow(2), Enricher::Complete(2)] {
        for n in 1..=6 {
            let t = increasing_tree_poly(&phi, n, true, 0);
            let spec = t
                .truncate_family_degree(Family::X, 0)
                .index_raise(Family::Q);
            assert_eq!(spec, pathlength_poly(&phi, n).unwrap().poly);
        }
    }
}

//! Enriched increasing trees by the height of their leaves (and internal
//! vertices): the shift-corolla tower T_n^phi = D_n^phi ... D_1^phi x0.

use crate::diffops::op_d_phi;
use crate::enricher::Enricher;
use crate::poly::MultiPoly;
use crate::vars::{Family, VarId};

/// Shared tower driver. When `x_bound` is set, each stage keeps only
/// x-degrees that can still reach the final bound: a stage with r steps
/// remaining may shed at most r degrees (each ∂ lowers the x-degree by
/// one), so the stage budget is bound + r.
pub(crate) fn tree_tower(
    phi: &Enricher,
    n: usize,
    with_q: bool,
    x_bound: Option<usize>,
) -> MultiPoly {
    let trunc = phi.truncation_for(n, x_bound.unwrap_or(0));
    let mut p = MultiPoly::var(VarId::x(0));
    for m in 1..=n {
        p = op_d_phi(phi, m as u32, with_q, trunc).apply(&p);
        if let Some(bound) = x_bound {
            p = p.truncate_family_degree(Family::X, (bound + n - m) as u32);
        }
    }
    p
}

/// T_n^phi(x) or T_n^phi(x, q): the inventory of phi-enriched increasing
/// trees with n internal vertices, graded by leaf heights (x-variables)
/// and, with `with_q`, internal-vertex heights (q-variables).
///
/// Exact for polynomial enrichers; for infinite-support enrichers the
/// total leaf degree is truncated at `leaf_bound`.
pub fn increasing_tree_poly(
    phi: &Enricher,
    n: usize,
    with_q: bool,
    leaf_bound: usize,
) -> MultiPoly {
    assert!(n >= 1);
    let x_bound = if phi.is_polynomial() {
        None
    } else {
        Some(leaf_bound)
    };
    tree_tower(phi, n, with_q, x_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn extended_binary_examples() {
        let m2 = Enricher::Monomial(2);
        assert_eq!(increasing_tree_poly(&m2, 1, true, 0), p("q0*x1^2"));
        assert_eq!(increasing_tree_poly(&m2, 2, true, 0), p("2*q0*q1*x2^2*x1"));
        assert_eq!(
            increasing_tree_poly(&m2, 3, true, 0),
            p("2*x2^4*q0*q1^2 + 4*x3^2*x2*x1*q0*q1*q2")
        );
    }

    #[test]
    fn tower_matches_enriched_tree_oracle() {
        for phi in [
            Enricher::Monomial(2),
            Enricher::Complete(2),
            Enricher::Pow(2),
        ] {
            for n in 1..=5 {
                for with_q in [false, true] {
                    assert_eq!(
                        increasing_tree_poly(&phi, n, with_q, 0),
                        oracles::enriched_tree_poly(&phi, n, with_q, 0).unwrap(),
                        "phi = {phi}, n = {n}, with_q = {with_q}"
                    );
                }
            }
        }
    }

    #[test]
    fn truncated_tower_matches_truncated_oracle() {
        // infinite support: both sides truncated at the same leaf bound
        for bound in [0usize, 2, 4] {
            for n in 1..=4 {
                assert_eq!(
                    increasing_tree_poly(&Enricher::Exp, n, true, bound),
                    oracles::enriched_tree_poly(&Enricher::Exp, n, true, bound).unwrap(),
                    "n = {n}, bound = {bound}"
                );
            }
        }
        for n in 1..=4 {
            assert_eq!(
                increasing_tree_poly(&Enricher::Lin, n, false, 3),
                oracles::enriched_tree_poly(&Enricher::Lin, n, false, 3).unwrap(),
            );
        }
    }
}

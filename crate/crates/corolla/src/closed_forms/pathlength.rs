//! Path-length q-polynomials of enriched increasing trees.
//!
//! p_n^phi(q) refines the tree count `A_phi[n]` by the sum of all vertex
//! heights: the coefficient of q^j counts trees of path length j. Two
//! routes exist: the section-2 convolution recursions (for the four named
//! enrichers) and the operator route (the q-weighted shift-corolla tower
//! specialized by x_i <- 0, q_i <- q^i). They must agree bit-exactly.

use num::traits::Zero;

use crate::coeff::binomial;
use crate::enricher::Enricher;
use crate::error::Error;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::vars::{Family, VarId};

use super::trees::tree_tower;

/// Path-length polynomial p_n^phi(q) in the single variable q = q0;
/// setting q = 1 recovers the count from the autonomous equation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathLengthPoly {
    pub n: usize,
    pub phi: Enricher,
    pub poly: MultiPoly,
}

fn q_mono(e: usize) -> MultiPoly {
    MultiPoly::from_term(
        Monomial::var_pow(VarId::q(0), e as u32),
        crate::coeff::rat(1),
    )
}

/// The convolution recursions for the four named enrichers
/// (exp, lin, pow:2, complete:2). Errors on any other enricher.
pub fn pathlength_recursion(phi: &Enricher, n: usize) -> Result<MultiPoly, Error> {
    assert!(n >= 1);
    let mut p: Vec<MultiPoly> = vec![MultiPoly::zero(), MultiPoly::one()]; // p_1 = 1
    for m in 1..n {
        // compute p_{m+1} from p_1..p_m
        let next = match phi {
            Enricher::Exp => {
                let mut acc = MultiPoly::zero();
                for k in 0..m {
                    let term = (&p[k + 1] * &p[m - k]).scale(&binomial(m - 1, k));
                    acc = &acc + &(&term * &q_mono(m - k));
                }
                acc
            }
            Enricher::Lin => {
                let mut acc = MultiPoly::zero();
                for k in 0..m {
                    let term = (&p[k + 1] * &p[m - k]).scale(&binomial(m, k));
                    acc = &acc + &(&term * &q_mono(m - k));
                }
                acc
            }
            Enricher::Pow(2) => {
                let mut acc = p[m].scale(&crate::coeff::rat(2));
                for k in 1..m {
                    acc = &acc + &(&p[k] * &p[m - k]).scale(&binomial(m, k));
                }
                &q_mono(m) * &acc
            }
            Enricher::Complete(2) => {
                let mut acc = MultiPoly::zero();
                for k in 1..m {
                    acc = &acc + &(&p[k] * &p[m - k]).scale(&binomial(m, k));
                }
                &q_mono(m) * &acc
            }
            other => {
                return Err(Error::Parse(format!(
                    "no path-length recursion for enricher `{other}`"
                )))
            }
        };
        p.push(next);
    }
    Ok(p[n].clone())
}

/// Operator route: T_n^{phi,q} under x_i <- 0, q_i <- q^i. Requires
/// `phi[0]` != 0 (otherwise the substitution kills every tree; use
/// `internal_external_pathlength`).
pub fn pathlength_operator(phi: &Enricher, n: usize) -> Result<MultiPoly, Error> {
    assert!(n >= 1);
    if phi.coeff(0).is_zero() {
        return Err(Error::PhiConstantTermZero);
    }
    let t = tree_tower(phi, n, true, Some(0));
    Ok(t.truncate_family_degree(Family::X, 0).index_raise(Family::Q))
}

/// p_n^phi(q), by the recursion for the four named enrichers and by the
/// operator tower otherwise. Under debug assertions both routes run and
/// must agree.
pub fn pathlength_poly(phi: &Enricher, n: usize) -> Result<PathLengthPoly, Error> {
    assert!(n >= 1);
    if phi.coeff(0).is_zero() {
        return Err(Error::PhiConstantTermZero);
    }
    let named = matches!(
        phi,
        Enricher::Exp | Enricher::Lin | Enricher::Pow(2) | Enricher::Complete(2)
    );
    let poly = if named {
        let rec = pathlength_recursion(phi, n)?;
        #[cfg(debug_assertions)]
        {
            let op = pathlength_operator(phi, n)?;
            assert_eq!(rec, op, "path-length dual-route mismatch: phi={phi}, n={n}");
        }
        rec
    } else {
        pathlength_operator(phi, n)?
    };
    Ok(PathLengthPoly {
        n,
        phi: phi.clone(),
        poly,
    })
}

/// Forest polynomial f_n^phi(q) = q^{-n} p_{n+1}^phi(q). The division is
/// exact; failure would indicate an implementation bug.
pub fn forest_pathlength_poly(phi: &Enricher, n: usize) -> Result<MultiPoly, Error> {
    let p = pathlength_poly(phi, n + 1)?.poly;
    let q = VarId::q(0);
    let mut out = MultiPoly::zero();
    for (m, c) in p.iter() {
        let e = m.exponent(q);
        if (e as usize) < n {
            return Err(Error::Inconsistency(format!(
                "p_{}^{phi} is not divisible by q^{n}",
                n + 1
            )));
        }
        let (_, rest) = m.without(q);
        out.add_term(rest.mul(&Monomial::var_pow(q, e - n as u32)), c.clone());
    }
    Ok(out)
}

/// Internal/external path length for rigid extended trees: T_n^{phi,q}
/// under x_k <- x^k, q_k <- q^k, an ordinary generating function in x
/// (external path length) and q (internal path length). Only the rigid
/// built-ins mono:r and complete:r are accepted.
pub fn internal_external_pathlength(phi: &Enricher, n: usize) -> Result<MultiPoly, Error> {
    assert!(n >= 1);
    if !matches!(phi, Enricher::Monomial(_) | Enricher::Complete(_)) {
        return Err(Error::NotRigid(phi.to_string()));
    }
    let t = tree_tower(phi, n, true, None);
    Ok(t.index_raise(Family::X).index_raise(Family::Q))
}

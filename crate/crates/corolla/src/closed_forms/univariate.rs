//! Univariate specializations: Touchard polynomials, hypertree counts,
//! powers of phi(x)·d/dx, Lagrange inversion, plane forests and the
//! ordered-forest expansion.

use crate::coeff::{factorial, rat, Coeff};
use crate::diffops::{apply_conjugated, op_d_natural, op_phi_d, xd_power, DiffOp, XDForm};
use crate::enricher::Enricher;
use crate::error::Error;
use crate::monomial::Monomial;
use crate::poly::{MultiPoly, Subst, SubstMap};
use crate::series::TruncatedSeries;
use crate::vars::{Family, VarId};

/// Touchard (exponential) polynomial T_n(x), by the classical recursion
/// T_{n+1} = x (T_n + T_n').
pub fn touchard(n: usize) -> MultiPoly {
    let x0 = VarId::x(0);
    let x = MultiPoly::var(x0);
    let mut t = MultiPoly::one();
    for _ in 0..n {
        t = &x * &(&t + &t.partial_derivative(x0));
    }
    t
}

/// T_{n-1}(n x): the inventory of trees enriched with set partitions
/// (rooted hypertrees), via the conjugated Rodrigues form
/// e^{-n x}(x d/dx)^{n-1} e^{n x}.
pub fn hypertree_poly(n: usize) -> MultiPoly {
    assert!(n >= 1);
    let conj = univariate_tower(&Enricher::Monomial(1), n, 0, n);
    #[cfg(debug_assertions)]
    {
        let direct = touchard(n - 1).scale_var(VarId::x(0), &rat(n as i64));
        assert_eq!(conj, direct, "hypertree dual-route mismatch: n = {n}");
    }
    conj
}

/// (phi(x) d/dx)^{n-1} applied to x^seed_power, or, when conj_scale > 0,
/// conjugated by e^{conj_scale·x} and applied to 1. Exact for polynomial
/// enrichers, degree-truncated at seed_power + n otherwise.
pub fn univariate_tower(
    phi: &Enricher,
    n: usize,
    seed_power: usize,
    conj_scale: usize,
) -> MultiPoly {
    assert!(n >= 1);
    let x0 = VarId::x(0);
    let budget = seed_power + n;
    let trunc = phi.truncation_for(n, seed_power);
    let infinite = !phi.is_polynomial();
    let op: DiffOp = op_phi_d(phi, trunc);
    let mut p = if conj_scale > 0 {
        MultiPoly::one()
    } else {
        MultiPoly::from_term(Monomial::var_pow(x0, seed_power as u32), rat(1))
    };
    let u = VarId::u();
    for _ in 1..n {
        p = if conj_scale > 0 {
            apply_conjugated(&op, x0, u, &p).expect("marker is fresh")
        } else {
            op.apply(&p)
        };
        if infinite {
            p = p.truncate_family_degree(Family::X, budget as u32);
        }
    }
    if conj_scale > 0 {
        let mut rules = SubstMap::new();
        rules.insert(u, Subst::Constant(rat(conj_scale as i64)));
        p = p.specialize(&rules);
    }
    p
}

/// The enriched-rooted-tree inventory coefficient
/// `A_F[n]` = d^{n-1}/dt^{n-1} F^n(t) |_{t=0}, for a series with nonzero
/// constant term truncated to order at least n-1.
pub fn lagrange_tree_coeff(f: &TruncatedSeries, n: usize) -> Result<MultiPoly, Error> {
    assert!(n >= 1);
    if f.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    if f.order() + 1 < n {
        return Err(Error::OrderTooSmall {
            have: f.order(),
            need: n - 1,
        });
    }
    let mut power = TruncatedSeries::constant(n - 1, MultiPoly::one());
    let truncated = f.truncate(n - 1);
    for _ in 0..n {
        power = power.mul(&truncated);
    }
    Ok(power.coeff(n - 1))
}

/// Pf_n = (1/n!) (D^natural)^{n-1} x0^n: unlabeled rooted plane trees by
/// vertex indegrees. The 1/n! division must leave integers.
pub fn plane_forest_frobenius(n: usize) -> Result<MultiPoly, Error> {
    assert!(n >= 1);
    let op = op_d_natural(n.saturating_sub(1) as u32);
    let mut p = MultiPoly::from_term(Monomial::var_pow(VarId::x(0), n as u32), rat(1));
    for _ in 1..n {
        p = op.apply(&p);
    }
    let inv = Coeff::new(1.into(), factorial(n).numer().clone());
    let scaled = p.scale(&inv);
    for (m, c) in scaled.iter() {
        if !c.is_integer() {
            return Err(Error::Inconsistency(format!(
                "plane forest coefficient of {m} is {c}, not an integer"
            )));
        }
    }
    Ok(scaled)
}

/// (x d/dx)^{n-1} (1-x)^{-n} in closed form, with the companion scalar
/// (the sum of numerator coefficients: trees enriched with linearly
/// ordered partitions).
pub fn ordered_forest_expansion(n: usize) -> (XDForm, Coeff) {
    assert!(n >= 2);
    let form = xd_power(n as u32, n as u32 - 1);
    let scalar = form.numerator_sum();
    (form, scalar)
}

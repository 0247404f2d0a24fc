//! Cayley tree polynomials and the Faà di Bruno coefficient.

use crate::coeff::rat;
use crate::diffops::{apply_tower, op_chen_f, op_d};
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::vars::{Family, VarId};

/// Indegree-weighted inventory of labeled rooted trees on `[n]`:
/// A_n(x0, ..., x_{n-1}) = Delta_{n-1} x0^n.
pub fn cayley_rooted(n: usize) -> MultiPoly {
    assert!(n >= 1);
    let seed = MultiPoly::from_term(Monomial::var_pow(VarId::x(0), n as u32), rat(1));
    let ops: Vec<_> = (1..n).map(|m| op_d(m as u32)).collect();
    apply_tower(&ops, &seed)
}

/// Degree-weighted inventory of labeled free trees on `[n]`:
/// Delta_{n-2} x0^n with every index then shifted up one (the shift
/// turns indegrees of a rooted version into total degrees).
pub fn cayley_free(n: usize) -> MultiPoly {
    assert!(n >= 2);
    let seed = MultiPoly::from_term(Monomial::var_pow(VarId::x(0), n as u32), rat(1));
    let ops: Vec<_> = (1..n - 1).map(|m| op_d(m as u32)).collect();
    apply_tower(&ops, &seed).shift_indices(Family::X, 1)
}

/// The n-th coefficient of the composition P(Q(t)) with generic
/// coefficients y_k, x_k: Gamma_n y0 = sum_{pi} y_{|pi|} prod_B x_{|B|}.
pub fn faa_di_bruno_coeff(n: usize) -> MultiPoly {
    assert!(n >= 1);
    let ops: Vec<_> = (1..=n).map(|m| op_chen_f(m as u32)).collect();
    apply_tower(&ops, &MultiPoly::var(VarId::y(0)))
}

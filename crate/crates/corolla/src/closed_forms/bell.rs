//! Bell polynomials: classical partial Bell, the generalized B_{n,k}^phi
//! of enriched increasing forests, the higher-derivative chain rule, and
//! the function-counting polynomials.

use crate::coeff::{binomial, factorial, Coeff};
use crate::diffops::{apply_conjugated, apply_tower, op_d, op_d_phi, shift_corolla};
use crate::enricher::Enricher;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::vars::{Family, VarId};

/// Classical partial Bell polynomial B_{n,k}(x1, ..., x_{n-k+1}):
/// the inventory of k-block set partitions of `[n]` by block sizes.
pub fn partial_bell(n: usize, k: usize) -> MultiPoly {
    assert!(k >= 1 && k <= n);
    bell_triangle(n)[n][k].clone()
}

/// B_{m,j} for all m <= n, j <= m, by the convolution recursion
/// B_{m,j} = sum_s C(m-1, s-1) x_s B_{m-s, j-1}.
fn bell_triangle(n: usize) -> Vec<Vec<MultiPoly>> {
    let mut b = vec![vec![MultiPoly::zero(); n + 1]; n + 1];
    b[0][0] = MultiPoly::one();
    for m in 1..=n {
        for j in 1..=m {
            let mut acc = MultiPoly::zero();
            for s in 1..=m - j + 1 {
                let prev = &b[m - s][j - 1];
                if prev.is_zero() {
                    continue;
                }
                let x_s = Monomial::var(VarId::x(s as u32));
                acc = &acc + &prev.mul_monomial(&x_s).scale(&binomial(m - 1, s - 1));
            }
            b[m][j] = acc;
        }
    }
    b
}

/// Generalized Bell polynomial B_{n,k}^phi by the forest recursion: the
/// largest internal vertex either roots a new tree (factor phi(x1) q0) or
/// grafts at height i (factor phi(x_{i+1}) q_i ∂_i).
pub fn gen_bell_recursion(
    phi: &Enricher,
    n: usize,
    k: usize,
    with_q: bool,
    leaf_bound: usize,
) -> MultiPoly {
    assert!(k >= 1 && k <= n);
    let trunc = phi.truncation_for(n, leaf_bound);
    let infinite = !phi.is_polynomial();
    let root_factor = {
        let mut f = phi.poly(VarId::x(1), trunc);
        if with_q {
            f = f.mul_monomial(&Monomial::var(VarId::q(0)));
        }
        f
    };
    // triangle level by level; level m keeps leaf degree <= bound + (n - m)
    let mut level: Vec<MultiPoly> = vec![MultiPoly::zero(), root_factor.clone()]; // B_{1,*}
    if infinite {
        level[1] = level[1].truncate_family_degree(Family::X, (leaf_bound + n - 1) as u32);
    }
    for m in 2..=n {
        let mut next = vec![MultiPoly::zero(); m + 1];
        for (j, slot) in next.iter_mut().enumerate().take(m + 1).skip(1) {
            let mut acc = if j >= 1 && j - 1 < level.len() {
                &root_factor * &level[j - 1]
            } else {
                MultiPoly::zero()
            };
            if j < level.len() {
                for i in 1..m {
                    let graft = shift_corolla(phi, i as u32, with_q, trunc);
                    acc = &acc + &graft.apply(&level[j]);
                }
            }
            if infinite {
                acc = acc.truncate_family_degree(Family::X, (leaf_bound + n - m) as u32);
            }
            *slot = acc;
        }
        level = next;
    }
    level[k].clone()
}

/// B_{n,k}^phi by the Rodrigues route: the conjugated tower
/// e^{-u x0} Delta_n^{`phi[,q]`} e^{u x0} applied to 1, graded by the marker
/// degree k.
pub fn gen_bell_conjugation(
    phi: &Enricher,
    n: usize,
    k: usize,
    with_q: bool,
    leaf_bound: usize,
) -> MultiPoly {
    assert!(k >= 1 && k <= n);
    conjugated_tower_parts(phi, n, with_q, leaf_bound)[k].clone()
}

/// All marker-degree parts of the conjugated tower at once (index k holds
/// B_{n,k}^phi; index 0 is zero for n >= 1).
fn conjugated_tower_parts(
    phi: &Enricher,
    n: usize,
    with_q: bool,
    leaf_bound: usize,
) -> Vec<MultiPoly> {
    let trunc = phi.truncation_for(n, leaf_bound);
    let infinite = !phi.is_polynomial();
    let x0 = VarId::x(0);
    let u = VarId::u();
    let mut p = MultiPoly::one();
    for m in 1..=n {
        let op = op_d_phi(phi, m as u32, with_q, trunc);
        p = apply_conjugated(&op, x0, u, &p).expect("marker is fresh");
        if infinite {
            p = p.truncate_family_degree(Family::X, (leaf_bound + n - m) as u32);
        }
    }
    (0..=n).map(|k| p.coefficient_of(u, k as u32)).collect()
}

/// B_{n,k}^phi: recursion route, cross-checked against the conjugation
/// route under debug assertions.
pub fn gen_bell(phi: &Enricher, n: usize, k: usize, with_q: bool, leaf_bound: usize) -> MultiPoly {
    let rec = gen_bell_recursion(phi, n, k, with_q, leaf_bound);
    #[cfg(debug_assertions)]
    {
        let conj = gen_bell_conjugation(phi, n, k, with_q, leaf_bound);
        assert_eq!(
            rec, conj,
            "generalized Bell dual-route mismatch: phi={phi}, n={n}, k={k}"
        );
    }
    rec
}

/// Y_n^phi = sum_k B_{n,k}^phi: forests with any number of trees.
pub fn gen_bell_total(phi: &Enricher, n: usize, with_q: bool, leaf_bound: usize) -> MultiPoly {
    assert!(n >= 1);
    let parts = conjugated_tower_parts(phi, n, with_q, leaf_bound);
    let mut acc = MultiPoly::zero();
    for part in &parts[1..] {
        acc = &acc + part;
    }
    #[cfg(debug_assertions)]
    {
        let mut rec = MultiPoly::zero();
        for k in 1..=n {
            rec = &rec + &gen_bell_recursion(phi, n, k, with_q, leaf_bound);
        }
        assert_eq!(acc, rec, "Y_n dual-route mismatch: phi={phi}, n={n}");
    }
    acc
}

/// Delta_n applied to a univariate series F(x0) given by its EGF
/// coefficients, through the Bell-sum identity
/// Delta_n F = sum_k F^{(k)}(x0) B_{n,k}(x1, ..., xn).
pub fn hmy_delta(f_coeffs: &[MultiPoly], n: usize) -> MultiPoly {
    assert!(n >= 1);
    let triangle = bell_triangle(n);
    let x0 = VarId::x(0);
    let mut acc = MultiPoly::zero();
    for (k, bell_nk) in triangle[n].iter().enumerate().skip(1) {
        // F^{(k)}(x0) = sum_j f_{k+j} x0^j / j!
        let mut deriv = MultiPoly::zero();
        for (j, c) in f_coeffs.iter().enumerate().skip(k) {
            if !c.is_zero() {
                let w = Coeff::new(1.into(), factorial(j - k).numer().clone());
                deriv = &deriv + &c.scale(&w).mul_monomial(&Monomial::var_pow(x0, (j - k) as u32));
            }
        }
        acc = &acc + &(&deriv * bell_nk);
    }
    acc
}

/// Delta_k x0^n: counts functions `[k]` -> `[n]` by preimage sizes.
pub fn functions_poly(k: usize, n: usize) -> MultiPoly {
    let seed = MultiPoly::from_term(
        Monomial::var_pow(VarId::x(0), n as u32),
        crate::coeff::rat(1),
    );
    let ops: Vec<_> = (1..=k).map(|m| op_d(m as u32)).collect();
    apply_tower(&ops, &seed)
}

//! The operator algebra: dart, adjoint-dart, corolla, ballot and bicolored
//! operators, tower application, exponential conjugation, and the closed
//! x·d/dx engine on the basis x^k (1-x)^{-m}.
//!
//! A `DiffOp` is a finite sum of first-order terms (polynomial factor)·∂_v,
//! so it is always a derivation. Towers are applied step by step to a
//! concrete polynomial; products of operators are never normal-ordered.

use std::collections::BTreeMap;

use num::traits::{One, Zero};

use crate::coeff::Coeff;
use crate::enricher::Enricher;
use crate::error::Error;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::vars::VarId;

/// A finite sum of terms factor·∂_target.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DiffOp {
    terms: Vec<(MultiPoly, VarId)>,
}

impl DiffOp {
    pub fn zero() -> DiffOp {
        DiffOp::default()
    }

    pub fn from_terms(terms: Vec<(MultiPoly, VarId)>) -> DiffOp {
        let mut op = DiffOp::zero();
        for (f, v) in terms {
            op.push(f, v);
        }
        op
    }

    /// Add one term, merging with an existing term on the same target.
    pub fn push(&mut self, factor: MultiPoly, target: VarId) {
        if factor.is_zero() {
            return;
        }
        if let Some(entry) = self.terms.iter_mut().find(|(_, v)| *v == target) {
            entry.0 = &entry.0 + &factor;
            if entry.0.is_zero() {
                self.terms.retain(|(f, _)| !f.is_zero());
            }
            return;
        }
        self.terms.push((factor, target));
    }

    pub fn add(&self, other: &DiffOp) -> DiffOp {
        let mut out = self.clone();
        for (f, v) in &other.terms {
            out.push(f.clone(), *v);
        }
        out
    }

    pub fn terms(&self) -> &[(MultiPoly, VarId)] {
        &self.terms
    }

    /// Apply to a polynomial: sum_i factor_i · ∂_{target_i} p.
    pub fn apply(&self, p: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (factor, target) in &self.terms {
            let d = p.partial_derivative(*target);
            if !d.is_zero() {
                out = &out + &(factor * &d);
            }
        }
        out
    }

    /// Sum of the factors whose target is `v` (the multiplication part of
    /// the conjugated operator).
    pub fn multiplier_for(&self, v: VarId) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (factor, target) in &self.terms {
            if *target == v {
                out = &out + factor;
            }
        }
        out
    }

    pub fn any_factor_contains(&self, v: VarId) -> bool {
        self.terms.iter().any(|(f, _)| f.contains_var(v))
    }
}

/// Dart operator x_{i+1} ∂_i.
pub fn dart(i: u32) -> DiffOp {
    DiffOp::from_terms(vec![(MultiPoly::var(VarId::x(i + 1)), VarId::x(i))])
}

/// Adjoint dart x_i ∂_{i+1}, optionally carrying the height weight q_i.
pub fn adjoint_dart(i: u32, q_weight: bool) -> DiffOp {
    let mut factor = MultiPoly::var(VarId::x(i));
    if q_weight {
        factor = factor.mul_monomial(&Monomial::var(VarId::q(i)));
    }
    DiffOp::from_terms(vec![(factor, VarId::x(i + 1))])
}

/// D_n = sum_{j=0}^{n-1} x_{j+1} ∂_j.
pub fn op_d(n: u32) -> DiffOp {
    let mut op = DiffOp::zero();
    for j in 0..n {
        op = op.add(&dart(j));
    }
    op
}

/// Ballot operator B_n = D_n + D_n^* (with q_i on each down-step when
/// `q_weight` is set).
pub fn op_b(n: u32, q_weight: bool) -> DiffOp {
    let mut op = op_d(n);
    for i in 0..n {
        op = op.add(&adjoint_dart(i, q_weight));
    }
    op
}

/// Shift corolla operator phi(x_{i+1}) ∂_i, optionally weighted by q_i.
/// `trunc` bounds the expansion degree of phi (exact for polynomial phi).
pub fn shift_corolla(phi: &Enricher, i: u32, q_weight: bool, trunc: usize) -> DiffOp {
    let mut factor = phi.poly(VarId::x(i + 1), trunc);
    if q_weight {
        factor = factor.mul_monomial(&Monomial::var(VarId::q(i)));
    }
    DiffOp::from_terms(vec![(factor, VarId::x(i))])
}

/// D_n^phi = sum_{k=0}^{n-1} phi(x_{k+1}) `[q_k]` ∂_k.
pub fn op_d_phi(phi: &Enricher, n: u32, q_weight: bool, trunc: usize) -> DiffOp {
    let mut op = DiffOp::zero();
    for k in 0..n {
        op = op.add(&shift_corolla(phi, k, q_weight, trunc));
    }
    op
}

/// Chen's bicolored operator
/// F_n = sum_{i=0}^{n-1} (x_{i+1} ∂_{x_i} + x_1 y_{i+1} ∂_{y_i}).
pub fn op_chen_f(n: u32) -> DiffOp {
    let mut op = op_d(n);
    let x1 = Monomial::var(VarId::x(1));
    for i in 0..n {
        let factor = MultiPoly::var(VarId::y(i + 1)).mul_monomial(&x1);
        op = op.add(&DiffOp::from_terms(vec![(factor, VarId::y(i))]));
    }
    op
}

/// The plane-tree derivation sum_{k=0}^{n-1} (k+1) x_{k+1} ∂_k.
pub fn op_d_natural(n: u32) -> DiffOp {
    let mut op = DiffOp::zero();
    for k in 0..n {
        let factor =
            MultiPoly::var(VarId::x(k + 1)).scale(&Coeff::from_integer((k as i64 + 1).into()));
        op = op.add(&DiffOp::from_terms(vec![(factor, VarId::x(k))]));
    }
    op
}

/// Univariate derivation phi(x)·d/dx in the single variable x0.
pub fn op_phi_d(phi: &Enricher, trunc: usize) -> DiffOp {
    DiffOp::from_terms(vec![(phi.poly(VarId::x(0), trunc), VarId::x(0))])
}

/// Apply a tower of operators; `ops[0]` is applied first (so the tower
/// D_n D_{n-1} ... D_1 is the slice [D_1, ..., D_n]).
pub fn apply_tower(ops: &[DiffOp], p: &MultiPoly) -> MultiPoly {
    let mut acc = p.clone();
    for op in ops {
        acc = op.apply(&acc);
    }
    acc
}

/// Apply `op` conjugated by exp(marker·conj_var): every ∂_{conj_var}
/// becomes ∂_{conj_var} + marker, i.e. this computes
/// e^{-u·v} (op e^{u·v} p) with u = marker, v = conj_var.
/// Grading the result by marker degree yields the partial polynomials.
pub fn apply_conjugated(
    op: &DiffOp,
    conj_var: VarId,
    marker: VarId,
    p: &MultiPoly,
) -> Result<MultiPoly, Error> {
    if op.any_factor_contains(marker) {
        return Err(Error::MarkerInOperator);
    }
    let mult = op
        .multiplier_for(conj_var)
        .mul_monomial(&Monomial::var(marker));
    Ok(&op.apply(p) + &(&mult * p))
}

// ---- the x·d/dx engine on x^k (1-x)^{-m} -------------------------------

/// Element of the span of x^k (1-x)^{-m}: a sparse map (k, m) -> c.
/// The family is closed under x·d/dx via
/// x·d/dx [x^k (1-x)^{-m}] = k x^k (1-x)^{-m} + m x^{k+1} (1-x)^{-m-1}.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct XDForm {
    terms: BTreeMap<(u32, u32), Coeff>,
}

impl XDForm {
    pub fn new() -> XDForm {
        XDForm::default()
    }

    pub fn basis(k: u32, m: u32) -> XDForm {
        let mut f = XDForm::new();
        f.add_term(k, m, Coeff::one());
        f
    }

    pub fn add_term(&mut self, k: u32, m: u32, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((k, m)).or_insert_with(Coeff::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(k, m));
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, k: u32, m: u32) -> Coeff {
        self.terms
            .get(&(k, m))
            .cloned()
            .unwrap_or_else(Coeff::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// One application of x·d/dx.
    pub fn xd(&self) -> XDForm {
        let mut out = XDForm::new();
        for (&(k, m), c) in self.iter() {
            if k > 0 {
                out.add_term(k, m, c * Coeff::from_integer(k.into()));
            }
            out.add_term(k + 1, m + 1, c * Coeff::from_integer(m.into()));
        }
        out
    }

    /// Sum of the numerator coefficients.
    pub fn numerator_sum(&self) -> Coeff {
        self.terms.values().sum()
    }

    /// Ordinary power-series coefficients in x up to `order`, using
    /// x^k (1-x)^{-m} = sum_j C(m-1+j, j) x^{k+j}.
    pub fn to_series(&self, order: usize) -> Vec<Coeff> {
        let mut out = vec![Coeff::zero(); order + 1];
        for (&(k, m), c) in self.iter() {
            if m == 0 {
                // plain x^k
                if (k as usize) <= order {
                    out[k as usize] += c;
                }
                continue;
            }
            for j in 0..=order.saturating_sub(k as usize) {
                let b = crate::coeff::binomial(m as usize - 1 + j, j);
                out[k as usize + j] += c * b;
            }
        }
        out
    }

    /// Text form `12*x^2/(1-x)^5 + 3*x/(1-x)^4`, highest k first.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (&(k, m), c) in self.terms.iter().rev() {
            let x_part = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let mut s = if c.is_one() && k > 0 {
                x_part
            } else if x_part.is_empty() {
                c.to_string()
            } else {
                format!("{c}*{x_part}")
            };
            if m > 0 {
                s.push_str(&format!("/(1-x)^{m}"));
            }
            parts.push(s);
        }
        parts.join(" + ")
    }
}

/// (x·d/dx)^power applied to (1-x)^{-n_exponent}, in normal form.
/// Every key produced from (0, n) satisfies m = n + k.
pub fn xd_power(n_exponent: u32, power: u32) -> XDForm {
    let mut f = XDForm::basis(0, n_exponent);
    for _ in 0..power {
        f = f.xd();
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn dart_examples() {
        assert_eq!(dart(0).apply(&p("x0")), p("x1"));
        assert_eq!(dart(1).apply(&p("x0")), MultiPoly::zero());
        assert_eq!(dart(0).apply(&p("x0^2")), p("2*x0*x1"));
    }

    #[test]
    fn adjoint_dart_examples() {
        assert_eq!(adjoint_dart(0, false).apply(&p("x1")), p("x0"));
        assert_eq!(adjoint_dart(0, true).apply(&p("x1")), p("q0*x0"));
        assert_eq!(adjoint_dart(0, false).apply(&p("x0")), MultiPoly::zero());
    }

    #[test]
    fn ballot_and_d_examples() {
        assert_eq!(op_d(2).apply(&p("x1")), p("x2"));
        assert_eq!(op_b(2, false).apply(&p("x1")), p("x2 + x0"));
        assert_eq!(op_b(1, true).apply(&p("x0")), p("x1"));
    }

    #[test]
    fn shift_corolla_examples() {
        let m2 = Enricher::Monomial(2);
        assert_eq!(shift_corolla(&m2, 0, false, 4).apply(&p("x0")), p("x1^2"));
        let c2 = Enricher::Complete(2);
        assert_eq!(
            shift_corolla(&c2, 0, true, 4).apply(&p("x0")),
            p("q0 + q0*x1^2")
        );
        assert_eq!(
            shift_corolla(&Enricher::Lin, 0, false, 2).apply(&p("x0")),
            p("1 + x1 + x1^2")
        );
    }

    #[test]
    fn chen_operator_examples() {
        assert_eq!(op_chen_f(1).apply(&p("y0")), p("x1*y1"));
        assert_eq!(op_chen_f(2).apply(&p("x1*y1")), p("x2*y1 + x1^2*y2"));
        assert_eq!(op_chen_f(1).apply(&p("x0")), p("x1"));
    }

    #[test]
    fn tower_examples() {
        let d12 = [op_d(1), op_d(2)];
        assert_eq!(apply_tower(&d12, &p("x0")), p("x2"));
        assert_eq!(apply_tower(&d12, &p("x0^2")), p("2*x0*x2 + 2*x1^2"));
        let b123 = [op_b(1, false), op_b(2, false), op_b(3, false)];
        assert_eq!(apply_tower(&b123, &p("x0")), p("x3 + 2*x1"));
    }

    #[test]
    fn conjugation_examples() {
        let xd = DiffOp::from_terms(vec![(p("x0"), VarId::x(0))]);
        let u = VarId::u();
        let x0 = VarId::x(0);
        let one = MultiPoly::one();
        let step1 = apply_conjugated(&xd, x0, u, &one).unwrap();
        assert_eq!(step1, p("u*x0"));
        let step2 = apply_conjugated(&xd, x0, u, &step1).unwrap();
        assert_eq!(step2, p("u^2*x0^2 + u*x0"));
    }

    #[test]
    fn conjugation_rejects_marker_in_factor() {
        let bad = DiffOp::from_terms(vec![(p("u*x0"), VarId::x(0))]);
        assert!(matches!(
            apply_conjugated(&bad, VarId::x(0), VarId::u(), &MultiPoly::one()),
            Err(Error::MarkerInOperator)
        ));
    }

    #[test]
    fn xd_power_examples() {
        let f = xd_power(3, 2);
        assert_eq!(f.coefficient(2, 5), rat(12));
        assert_eq!(f.coefficient(1, 4), rat(3));
        assert_eq!(f.num_terms(), 2);

        let g = xd_power(4, 3);
        assert_eq!(g.coefficient(3, 7), rat(120));
        assert_eq!(g.coefficient(2, 6), rat(60));
        assert_eq!(g.coefficient(1, 5), rat(4));
        assert_eq!(g.num_terms(), 3);

        let id = xd_power(7, 0);
        assert_eq!(id.coefficient(0, 7), rat(1));
        assert_eq!(id.num_terms(), 1);
    }

    #[test]
    fn xd_form_keys_satisfy_offset() {
        for n in 1..6u32 {
            for pw in 0..6u32 {
                for (&(k, m), _) in xd_power(n, pw).iter() {
                    assert_eq!(m, n + k);
                }
            }
        }
    }

    #[test]
    fn xd_text() {
        assert_eq!(xd_power(3, 2).to_text(), "12*x^2/(1-x)^5 + 3*x/(1-x)^4");
    }

    #[test]
    fn xd_series_handles_pure_powers() {
        // x^2 with no denominator
        let series = XDForm::basis(2, 0).to_series(4);
        let expect = [0, 0, 1, 0, 0];
        for (j, e) in expect.iter().enumerate() {
            assert_eq!(series[j], rat(*e));
        }
    }
}

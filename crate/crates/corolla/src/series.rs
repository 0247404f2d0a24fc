//! Truncated exponential series with polynomial coefficients.
//!
//! A `TruncatedSeries` of order N stores the EGF coefficients f_0..f_N of
//! F(t) = sum f_n t^n/n!; everything past degree N is dropped by every
//! operation. Coefficients are full `MultiPoly` values, so generic series
//! (f_k = x_k or y_k) work the same as numeric ones.

use crate::coeff::{binomial, factorial, parse_coeff, Coeff};
use crate::error::Error;
use crate::poly::MultiPoly;
use crate::vars::VarId;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    var: VarId,
    order: usize,
    coeffs: Vec<MultiPoly>, // EGF coefficients, length order + 1
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> TruncatedSeries {
        TruncatedSeries {
            var: VarId::t(),
            order,
            coeffs: vec![MultiPoly::zero(); order + 1],
        }
    }

    pub fn from_coeffs(order: usize, mut coeffs: Vec<MultiPoly>) -> TruncatedSeries {
        coeffs.resize(order + 1, MultiPoly::zero());
        TruncatedSeries {
            var: VarId::t(),
            order,
            coeffs,
        }
    }

    pub fn constant(order: usize, c: MultiPoly) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The identity series t (EGF coefficients 0, 1, 0, ...).
    pub fn identity(order: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = MultiPoly::one();
        }
        s
    }

    /// Generic series whose k-th EGF coefficient is `make(k)`,
    /// for k in lo..=order.
    pub fn generic(order: usize, lo: usize, make: impl Fn(usize) -> MultiPoly) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(order);
        for k in lo..=order {
            s.coeffs[k] = make(k);
        }
        s
    }

    pub fn var(&self) -> VarId {
        self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// The k-th EGF coefficient (zero past the truncation order).
    pub fn coeff(&self, k: usize) -> MultiPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(MultiPoly::zero)
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, k: usize, c: MultiPoly) {
        if k <= self.order {
            self.coeffs[k] = c;
        }
    }

    pub fn truncate(&self, order: usize) -> TruncatedSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        TruncatedSeries::from_coeffs(order, coeffs)
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(other.order);
        TruncatedSeries::from_coeffs(
            order,
            (0..=order)
                .map(|n| &self.coeffs[n] + &other.coeffs[n])
                .collect(),
        )
    }

    pub fn scale(&self, c: &Coeff) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(self.order, self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn scale_poly(&self, p: &MultiPoly) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(self.order, self.coeffs.iter().map(|c| c * p).collect())
    }

    /// EGF product: h_n = sum_k C(n,k) f_k g_{n-k}.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order.min(other.order);
        let coeffs = (0..=order)
            .map(|n| {
                let mut acc = MultiPoly::zero();
                for k in 0..=n {
                    let term = (&self.coeffs[k] * &other.coeffs[n - k]).scale(&binomial(n, k));
                    acc = &acc + &term;
                }
                acc
            })
            .collect();
        TruncatedSeries::from_coeffs(order, coeffs)
    }

    /// Formal derivative in t: the coefficients shift down one slot.
    pub fn derivative(&self) -> TruncatedSeries {
        if self.order == 0 {
            return TruncatedSeries::zero(0);
        }
        TruncatedSeries::from_coeffs(self.order - 1, self.coeffs[1..].to_vec())
    }

    /// Composition F(G(t)): the inner series must vanish at 0. The n-th
    /// coefficient equals the set-partition sum
    /// sum_{pi in `Pi[n]`} `F[|pi|]` prod_{B in pi} `G[|B|]`.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
        if !inner.coeff(0).is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order.min(inner.order);
        let mut acc = TruncatedSeries::constant(order, self.coeff(0));
        // G^k has valuation >= k, so k ranges to the order only
        let mut power = TruncatedSeries::constant(order, MultiPoly::one());
        for k in 1..=order {
            power = power.mul(inner);
            let w = Coeff::new(1.into(), factorial(k).numer().clone());
            acc = acc.add(&power.scale(&w).scale_poly(&self.coeff(k)));
        }
        Ok(acc)
    }

    /// exp(G(t)) for G with zero constant term.
    pub fn exp(inner: &TruncatedSeries) -> Result<TruncatedSeries, Error> {
        let ones = TruncatedSeries::from_coeffs(
            inner.order,
            vec![MultiPoly::one(); inner.order + 1],
        );
        ones.compose(inner)
    }

    // ---- JSON file form (CLI input): exact rational coefficients -------

    /// `{"order":N,"coeffs":["c0","c1",...]}` with exact rational strings,
    /// EGF convention; missing trailing entries are zero.
    pub fn from_json(v: &serde_json::Value) -> Result<TruncatedSeries, Error> {
        let order = v
            .get("order")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| Error::Parse("series JSON: missing `order`".into()))?
            as usize;
        let coeffs = v
            .get("coeffs")
            .and_then(serde_json::Value::as_array)
            .ok_or_else(|| Error::Parse("series JSON: missing `coeffs` array".into()))?;
        let mut s = TruncatedSeries::zero(order);
        for (k, item) in coeffs.iter().enumerate().take(order + 1) {
            let text = item
                .as_str()
                .ok_or_else(|| Error::Parse("series coefficients must be strings".into()))?;
            s.coeffs[k] = MultiPoly::constant(parse_coeff(text)?);
        }
        Ok(s)
    }
}

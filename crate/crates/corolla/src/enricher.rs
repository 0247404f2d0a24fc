//! Enrichers: the series phi given by its EGF coefficients `phi[k]`.
//!
//! An enricher weights the fiber of a tree vertex with k children by
//! `phi[k]`. The built-ins cover the classic families: recursive trees
//! (exp), plane increasing trees (lin), r-ary plane increasing trees
//! ((1+t)^r), complete r-ary plane trees (1+t^r) and the extended r-ary
//! plane trees (t^r).

use std::fmt;

use num::traits::{One, Zero};

use crate::coeff::{factorial, falling, Coeff};
use crate::error::Error;
use crate::poly::MultiPoly;
use crate::vars::VarId;
use crate::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Enricher {
    /// phi(t) = e^t: `phi[k]` = 1 for all k.
    Exp,
    /// phi(t) = 1/(1-t): `phi[k]` = k!.
    Lin,
    /// phi(t) = (1+t)^r: `phi[k]` = r(r-1)...(r-k+1), zero past k = r.
    Pow(u32),
    /// phi(t) = 1 + t^r: `phi[0]` = 1, `phi[r]` = r!, zero elsewhere.
    Complete(u32),
    /// phi(t) = t^r: `phi[r]` = r!, zero elsewhere.
    Monomial(u32),
    /// Finitely many explicit EGF coefficients, zero beyond.
    Custom(Vec<Coeff>),
}

impl Enricher {
    /// The EGF coefficient `phi[k]`.
    pub fn coeff(&self, k: usize) -> Coeff {
        match self {
            Enricher::Exp => Coeff::one(),
            Enricher::Lin => factorial(k),
            Enricher::Pow(r) => falling(*r as i64, k),
            Enricher::Complete(r) => {
                if k == 0 {
                    Coeff::one()
                } else if k == *r as usize {
                    factorial(k)
                } else {
                    Coeff::zero()
                }
            }
            Enricher::Monomial(r) => {
                if k == *r as usize {
                    factorial(k)
                } else {
                    Coeff::zero()
                }
            }
            Enricher::Custom(cs) => cs.get(k).cloned().unwrap_or_else(Coeff::zero),
        }
    }

    /// Largest k with `phi[k]` possibly nonzero, when finite.
    pub fn support_bound(&self) -> Option<usize> {
        match self {
            Enricher::Exp | Enricher::Lin => None,
            Enricher::Pow(r) | Enricher::Complete(r) | Enricher::Monomial(r) => Some(*r as usize),
            Enricher::Custom(cs) => Some(cs.len().saturating_sub(1)),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.support_bound().is_some()
    }

    /// The polynomial truncation of phi at variable `v`:
    /// sum_{k=0..trunc} `phi[k]`/k! v^k. Exact when the support fits.
    pub fn poly(&self, v: VarId, trunc: usize) -> MultiPoly {
        let mut out = MultiPoly::zero();
        let top = match self.support_bound() {
            Some(b) => b.min(trunc),
            None => trunc,
        };
        for k in 0..=top {
            let c = self.coeff(k) / factorial(k);
            out.add_term(Monomial::var_pow(v, k as u32), c);
        }
        out
    }

    /// Degree budget for shift-corolla towers: the full support when phi is
    /// a polynomial, otherwise tower height plus the requested leaf bound.
    pub fn truncation_for(&self, tower_height: usize, leaf_bound: usize) -> usize {
        match self.support_bound() {
            Some(b) => b,
            None => tower_height + leaf_bound,
        }
    }

    /// Parse a CLI spec: `exp`, `lin`, `pow:R`, `complete:R`, `mono:R`.
    /// Custom coefficient lists are loaded separately from JSON files.
    pub fn parse_name(s: &str) -> Result<Enricher, Error> {
        let s = s.trim();
        if let Some((kind, r)) = s.split_once(':') {
            let r: u32 = r
                .parse()
                .map_err(|_| Error::Parse(format!("bad enricher parameter in `{s}`")))?;
            return match kind {
                "pow" => Ok(Enricher::Pow(r)),
                "complete" => Ok(Enricher::Complete(r)),
                "mono" => Ok(Enricher::Monomial(r)),
                _ => Err(Error::Parse(format!("unknown enricher `{s}`"))),
            };
        }
        match s {
            "exp" => Ok(Enricher::Exp),
            "lin" => Ok(Enricher::Lin),
            _ => Err(Error::Parse(format!("unknown enricher `{s}`"))),
        }
    }

    /// Custom enricher from a JSON list of exact rational strings;
    /// the k-th entry is `phi[k]`, absent entries are zero.
    pub fn from_custom_json(v: &serde_json::Value) -> Result<Enricher, Error> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("custom enricher: expected a JSON list".into()))?;
        let mut cs = Vec::with_capacity(arr.len());
        for item in arr {
            let s = item
                .as_str()
                .ok_or_else(|| Error::Parse("custom enricher: entries must be strings".into()))?;
            cs.push(crate::coeff::parse_coeff(s)?);
        }
        Ok(Enricher::Custom(cs))
    }
}

impl fmt::Display for Enricher {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Enricher::Exp => write!(f, "exp"),
            Enricher::Lin => write!(f, "lin"),
            Enricher::Pow(r) => write!(f, "pow:{r}"),
            Enricher::Complete(r) => write!(f, "complete:{r}"),
            Enricher::Monomial(r) => write!(f, "mono:{r}"),
            Enricher::Custom(cs) => write!(f, "custom[{}]", cs.len()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn builtin_coefficients() {
        assert_eq!(Enricher::Exp.coeff(7), rat(1));
        assert_eq!(Enricher::Lin.coeff(4), rat(24));
        assert_eq!(Enricher::Pow(2).coeff(0), rat(1));
        assert_eq!(Enricher::Pow(2).coeff(1), rat(2));
        assert_eq!(Enricher::Pow(2).coeff(2), rat(2));
        assert_eq!(Enricher::Pow(2).coeff(3), rat(0));
        assert_eq!(Enricher::Complete(2).coeff(0), rat(1));
        assert_eq!(Enricher::Complete(2).coeff(2), rat(2));
        assert_eq!(Enricher::Complete(2).coeff(1), rat(0));
        assert_eq!(Enricher::Monomial(3).coeff(3), rat(6));
        assert_eq!(Enricher::Monomial(3).coeff(0), rat(0));
    }

    #[test]
    fn enricher_poly_examples() {
        let x1 = VarId::x(1);
        assert_eq!(Enricher::Lin.poly(x1, 3), p("1 + x1 + x1^2 + x1^3"));
        assert_eq!(Enricher::Complete(2).poly(VarId::x(2), 5), p("1 + x2^2"));
        assert_eq!(Enricher::Exp.poly(x1, 2), p("1 + x1 + 1/2*x1^2"));
    }

    #[test]
    fn parse_names() {
        assert_eq!(Enricher::parse_name("exp").unwrap(), Enricher::Exp);
        assert_eq!(Enricher::parse_name("pow:2").unwrap(), Enricher::Pow(2));
        assert_eq!(
            Enricher::parse_name("complete:3").unwrap(),
            Enricher::Complete(3)
        );
        assert_eq!(Enricher::parse_name("mono:2").unwrap(), Enricher::Monomial(2));
        assert!(Enricher::parse_name("gauss").is_err());
    }
}

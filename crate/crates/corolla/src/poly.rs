//! Sparse exact multivariate polynomials.
//!
//! Terms live in a `BTreeMap` keyed by [`Monomial`], so iteration is always
//! in the canonical order (ascending total degree, then lexicographic by the
//! variable order). No zero coefficient is ever stored. All values are
//! immutable after construction and every operation is a pure function.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::coeff::{parse_coeff, Coeff};
use crate::error::Error;
use crate::monomial::Monomial;
use crate::vars::{Family, VarId};

/// Substitution target for a single variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subst {
    /// Replace the variable by a constant.
    Constant(Coeff),
    /// Replace the variable by `target^power` (e.g. q_i -> q^i).
    VarPow(VarId, u32),
}

/// Simultaneous substitution rules; variables not mentioned are unchanged.
pub type SubstMap = BTreeMap<VarId, Subst>;

/// Sparse multivariate polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Coeff>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly::default()
    }

    pub fn one() -> MultiPoly {
        MultiPoly::constant(Coeff::one())
    }

    pub fn constant(c: Coeff) -> MultiPoly {
        let mut p = MultiPoly::zero();
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(v: VarId) -> MultiPoly {
        MultiPoly::from_term(Monomial::var(v), Coeff::one())
    }

    pub fn from_term(m: Monomial, c: Coeff) -> MultiPoly {
        let mut p = MultiPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (ascending) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Coeff {
        self.coefficient(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn negate(&self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.negate())
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m1, c1) in self.iter() {
            for (m2, c2) in other.iter() {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &Coeff) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> MultiPoly {
        let mut out = MultiPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Formal partial derivative with respect to `v`.
    pub fn partial_derivative(&self, v: VarId) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in self.iter() {
            let (e, rest) = m.reduce(v);
            if e > 0 {
                out.add_term(rest, c * Coeff::from_integer(e.into()));
            }
        }
        out
    }

    /// Simultaneous substitution; rules are total on the variables they
    /// mention, everything else passes through.
    pub fn specialize(&self, rules: &SubstMap) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in self.iter() {
            let mut coeff = c.clone();
            let mut pairs: Vec<(VarId, u32)> = Vec::new();
            for (v, e) in m.iter() {
                match rules.get(&v) {
                    None => pairs.push((v, e)),
                    Some(Subst::Constant(k)) => {
                        let mut p = Coeff::one();
                        for _ in 0..e {
                            p *= k;
                        }
                        coeff *= p;
                    }
                    Some(Subst::VarPow(w, pw)) => pairs.push((*w, e * pw)),
                }
            }
            out.add_term(Monomial::from_pairs(pairs), coeff);
        }
        out
    }

    /// Every variable of every family set to 1 (the coefficient sum).
    pub fn coefficient_sum(&self) -> Coeff {
        self.terms.values().sum()
    }

    /// Set all variables of one family to 1.
    pub fn family_to_one(&self, f: Family) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in self.iter() {
            let pairs: Vec<(VarId, u32)> = m.iter().filter(|(v, _)| v.family() != f).collect();
            out.add_term(Monomial::from_pairs(pairs), c.clone());
        }
        out
    }

    /// Rule map `v_i -> v_0^i` for every index of one family (e.g. the
    /// q-analog specialization q_i <- q^i).
    pub fn index_raise(&self, f: Family) -> MultiPoly {
        let mut rules = SubstMap::new();
        for i in 0..=self.max_index_in_family(f).unwrap_or(0) {
            rules.insert(VarId::new(f, i), Subst::VarPow(VarId::new(f, 0), i));
        }
        self.specialize(&rules)
    }

    /// Shift every index of one family up by `shift`.
    pub fn shift_indices(&self, f: Family, shift: u32) -> MultiPoly {
        let mut rules = SubstMap::new();
        if let Some(max) = self.max_index_in_family(f) {
            for i in 0..=max {
                rules.insert(VarId::new(f, i), Subst::VarPow(VarId::new(f, i + shift), 1));
            }
        }
        self.specialize(&rules)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in_family(&self, f: Family) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_in_family(f))
            .max()
            .unwrap_or(0)
    }

    pub fn degree_of(&self, v: VarId) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn max_index_in_family(&self, f: Family) -> Option<u32> {
        self.terms
            .keys()
            .flat_map(|m| m.iter())
            .filter(|(v, _)| v.family() == f)
            .map(|(v, _)| v.index())
            .max()
    }

    /// Substitute v <- c·v: each term picks up c^{exponent of v}.
    pub fn scale_var(&self, v: VarId, c: &Coeff) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, coeff) in self.iter() {
            let mut w = coeff.clone();
            for _ in 0..m.exponent(v) {
                w *= c;
            }
            out.add_term(m.clone(), w);
        }
        out
    }

    /// Drop every term whose total degree in family `f` exceeds `bound`.
    pub fn truncate_family_degree(&self, f: Family, bound: u32) -> MultiPoly {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in_family(f) <= bound)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// The coefficient of `v^k`: terms with exponent exactly `k` in `v`,
    /// with the `v^k` factor removed.
    pub fn coefficient_of(&self, v: VarId, k: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in self.iter() {
            let (e, rest) = m.without(v);
            if e == k {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    pub fn contains_var(&self, v: VarId) -> bool {
        self.terms.keys().any(|m| m.contains(v))
    }

    // ---- text form ----------------------------------------------------

    /// Canonical text rendering: terms in descending canonical order,
    /// `coeff*var^e*...` factors joined by `*`. A family's index is omitted
    /// when only index 0 of that family occurs in the polynomial.
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let elide: Vec<Family> = [Family::X, Family::Q, Family::Y]
            .into_iter()
            .filter(|&f| self.max_index_in_family(f) == Some(0))
            .collect();
        let var_str = |v: VarId| -> String {
            if elide.contains(&v.family()) {
                v.family().letter().to_string()
            } else {
                v.to_string()
            }
        };
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            if !mag.is_one() || m.is_one() {
                factors.push(mag.to_string());
            }
            for (v, e) in m.iter() {
                if e == 1 {
                    factors.push(var_str(v));
                } else {
                    factors.push(format!("{}^{}", var_str(v), e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parse the text rendering back. Accepts both `q0` and the elided `q`.
    pub fn parse(input: &str) -> Result<MultiPoly, Error> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = MultiPoly::zero();
        let mut term_start = 0;
        let bytes = s.as_bytes();
        let mut pieces: Vec<&str> = Vec::new();
        for (i, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && i > term_start {
                pieces.push(&s[term_start..i]);
                term_start = i;
            }
        }
        pieces.push(&s[term_start..]);
        for piece in pieces {
            let (sign, body) = match piece.strip_prefix('-') {
                Some(rest) => (-Coeff::one(), rest),
                None => (Coeff::one(), piece.strip_prefix('+').unwrap_or(piece)),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{input}`")));
            }
            let mut coeff = sign;
            let mut pairs: Vec<(VarId, u32)> = Vec::new();
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(Error::Parse(format!("empty factor in `{input}`")));
                }
                let (base, exp) = match factor.split_once('^') {
                    Some((b, e)) => {
                        let e: u32 = e
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad exponent in `{factor}`")))?;
                        (b, e)
                    }
                    None => (factor, 1),
                };
                if base.starts_with(|c: char| c.is_ascii_alphabetic()) {
                    pairs.push((VarId::parse(base)?, exp));
                } else {
                    let c = parse_coeff(base)?;
                    let mut p = Coeff::one();
                    for _ in 0..exp {
                        p *= &c;
                    }
                    coeff *= p;
                }
            }
            out.add_term(Monomial::from_pairs(pairs), coeff);
        }
        Ok(out)
    }

    // ---- JSON form ----------------------------------------------------

    /// JSON schema: `{"terms":[{"coeff":"p/q","monomial":[["x",2,3],...]}]}`
    /// with terms in canonical (ascending) order; always-explicit indices.
    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mono: Vec<Value> = m
                    .iter()
                    .map(|(v, e)| json!([v.family().letter().to_string(), v.index(), e]))
                    .collect();
                json!({ "coeff": c.to_string(), "monomial": mono })
            })
            .collect();
        json!({ "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<MultiPoly, Error> {
        let terms = v
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("polynomial JSON: missing `terms` array".into()))?;
        let mut out = MultiPoly::zero();
        for t in terms {
            let coeff = t
                .get("coeff")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("term missing string `coeff`".into()))?;
            let coeff = parse_coeff(coeff)?;
            let mono = t
                .get("monomial")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("term missing `monomial` array".into()))?;
            let mut pairs = Vec::new();
            for entry in mono {
                let triple = entry
                    .as_array()
                    .filter(|a| a.len() == 3)
                    .ok_or_else(|| Error::Parse("monomial entry must be [family,index,exp]".into()))?;
                let fam = triple[0]
                    .as_str()
                    .and_then(|s| s.chars().next())
                    .and_then(Family::from_letter)
                    .ok_or_else(|| Error::Parse("bad family tag".into()))?;
                let idx = triple[1]
                    .as_u64()
                    .ok_or_else(|| Error::Parse("bad variable index".into()))? as u32;
                let exp = triple[2]
                    .as_u64()
                    .ok_or_else(|| Error::Parse("bad exponent".into()))? as u32;
                pairs.push((VarId::new(fam, idx), exp));
            }
            out.add_term(Monomial::from_pairs(pairs), coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: Self) -> MultiPoly {
        MultiPoly::add(self, rhs)
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: Self) -> MultiPoly {
        MultiPoly::sub(self, rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: Self) -> MultiPoly {
        MultiPoly::mul(self, rhs)
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.negate()
    }
}

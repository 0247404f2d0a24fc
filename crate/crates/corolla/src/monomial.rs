//! Sparse monomials over tagged variables.

use std::cmp::Ordering;
use std::fmt;

use crate::vars::{Family, VarId};

/// A monomial: sparse exponent map, sorted by variable, no zero exponents.
///
/// The ordering is the canonical term order: ascending total degree, ties
/// broken lexicographically by the `VarId` total order (walk the variables
/// in ascending order; at the first variable where the exponents differ,
/// the larger exponent wins).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarId, u32)>,
}

impl Monomial {
    /// The empty (constant) monomial.
    pub fn one() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: VarId, e: u32) -> Monomial {
        if e == 0 {
            return Monomial::one();
        }
        Monomial { exps: vec![(v, e)] }
    }

    pub fn from_pairs(mut pairs: Vec<(VarId, u32)>) -> Monomial {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        pairs.dedup_by(|later, earlier| {
            if later.0 == earlier.0 {
                earlier.1 += later.1;
                true
            } else {
                false
            }
        });
        Monomial { exps: pairs }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (VarId, u32)> + '_ {
        self.exps.iter().copied()
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        self.exps
            .iter()
            .find(|&&(w, _)| w == v)
            .map_or(0, |&(_, e)| e)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn degree_in_family(&self, f: Family) -> u32 {
        self.exps
            .iter()
            .filter(|&&(v, _)| v.family() == f)
            .map(|&(_, e)| e)
            .sum()
    }

    pub fn contains(&self, v: VarId) -> bool {
        self.exponent(v) > 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() && j < other.exps.len() {
            match self.exps[i].0.cmp(&other.exps[j].0) {
                Ordering::Less => {
                    out.push(self.exps[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(other.exps[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((self.exps[i].0, self.exps[i].1 + other.exps[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exps[i..]);
        out.extend_from_slice(&other.exps[j..]);
        Monomial { exps: out }
    }

    /// Remove one factor of `v`, returning the old exponent (0 if absent).
    pub fn reduce(&self, v: VarId) -> (u32, Monomial) {
        let e = self.exponent(v);
        if e == 0 {
            return (0, self.clone());
        }
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.retain(|&(w, _)| w != v);
        } else if let Some(entry) = exps.iter_mut().find(|(w, _)| *w == v) {
            entry.1 = e - 1;
        }
        (e, Monomial { exps })
    }

    /// Remove every factor of `v`, returning its exponent.
    pub fn without(&self, v: VarId) -> (u32, Monomial) {
        let e = self.exponent(v);
        if e == 0 {
            return (0, self.clone());
        }
        let mut exps = self.exps.clone();
        exps.retain(|&(w, _)| w != v);
        (e, Monomial { exps })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                // lexicographic walk in ascending VarId order; a variable
                // missing on one side counts as exponent 0
                let (mut i, mut j) = (0, 0);
                loop {
                    match (self.exps.get(i), other.exps.get(j)) {
                        (None, None) => return Ordering::Equal,
                        (Some(_), None) => return Ordering::Greater,
                        (None, Some(_)) => return Ordering::Less,
                        (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                            // earlier variable present only on one side:
                            // that side has the larger exponent there
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                            Ordering::Equal => {
                                if ea != eb {
                                    return ea.cmp(&eb);
                                }
                                i += 1;
                                j += 1;
                            }
                        },
                    }
                }
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

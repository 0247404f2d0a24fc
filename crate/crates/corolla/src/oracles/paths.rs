//! Lattice path enumerators: ballot sequences and above-diagonal paths.

use crate::coeff::Coeff;
use crate::error::Error;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::vars::VarId;

const MAX_BALLOT_N: usize = 20;

/// A good ballot counting: signs +-1 with every prefix sum >= 0 (so a
/// nonempty sequence starts with +1). The empty sequence is allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallotSequence {
    signs: Vec<i8>,
}

impl BallotSequence {
    pub fn new(signs: Vec<i8>) -> Result<BallotSequence, Error> {
        let mut sum = 0i64;
        for &s in &signs {
            if s != 1 && s != -1 {
                return Err(Error::Parse("ballot signs must be +-1".into()));
            }
            sum += s as i64;
            if sum < 0 {
                return Err(Error::Parse("ballot prefix sum went negative".into()));
            }
        }
        Ok(BallotSequence { signs })
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    /// The ballot cardinal: the final prefix sum.
    pub fn cardinal(&self) -> usize {
        self.signs.iter().map(|&s| s as i64).sum::<i64>() as usize
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }
}

/// All good ballots of length n.
pub fn good_ballots(n: usize) -> Vec<BallotSequence> {
    let mut out = Vec::new();
    for mask in 0u64..(1 << n) {
        let signs: Vec<i8> = (0..n)
            .map(|i| if mask >> i & 1 == 1 { 1 } else { -1 })
            .collect();
        if let Ok(b) = BallotSequence::new(signs) {
            out.push(b);
        }
    }
    out
}

/// Above-diagonal path inventory from start height j: every sign sequence
/// of length n whose prefix sums stay >= -j contributes x_{j+S_n}, times
/// q_h for every -1 step landing at height h when `with_q`.
pub fn ballot(n: usize, j: usize, with_q: bool) -> Result<MultiPoly, Error> {
    if n > MAX_BALLOT_N {
        return Err(Error::Budget {
            what: "ballot path oracle",
            limit: MAX_BALLOT_N,
            requested: n,
        });
    }
    let mut out = MultiPoly::zero();
    'mask: for mask in 0u64..(1 << n) {
        let mut height = j as i64;
        let mut q_pairs: Vec<(VarId, u32)> = Vec::new();
        for i in 0..n {
            if mask >> i & 1 == 1 {
                height += 1;
            } else {
                height -= 1;
                if height < 0 {
                    continue 'mask;
                }
                if with_q {
                    q_pairs.push((VarId::q(height as u32), 1));
                }
            }
        }
        q_pairs.push((VarId::x(height as u32), 1));
        out.add_term(Monomial::from_pairs(q_pairs), Coeff::from_integer(1.into()));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn p(s: &str) -> MultiPoly {
        MultiPoly::parse(s).unwrap()
    }

    #[test]
    fn ballot_examples() {
        assert_eq!(ballot(2, 0, true).unwrap(), p("x2 + q0*x0"));
        assert_eq!(ballot(1, 0, false).unwrap(), p("x1"));
        // C_4 = 14 Dyck paths of length 8
        let b8 = ballot(8, 0, false).unwrap();
        assert_eq!(b8.coefficient_of(VarId::x(0), 1), p("14"));
        assert_eq!(ballot(0, 3, true).unwrap(), p("x3"));
    }

    #[test]
    fn ballot_budget() {
        assert!(matches!(ballot(21, 0, false), Err(Error::Budget { .. })));
    }

    #[test]
    fn nonneg_path_totals_are_central_binomials() {
        // number of nonnegative +-1 paths of length n is C(n, floor(n/2))
        let expect = [1i64, 1, 2, 3, 6, 10, 20, 35, 70];
        for (n, &e) in expect.iter().enumerate() {
            let total = ballot(n, 0, false).unwrap().coefficient_sum();
            assert_eq!(total, rat(e), "n = {n}");
        }
    }

    #[test]
    fn good_ballot_counts() {
        // lengths 0..6: 1, 1, 2, 3, 6, 10, 20
        let expect = [1, 1, 2, 3, 6, 10, 20];
        for (n, &e) in expect.iter().enumerate() {
            assert_eq!(good_ballots(n).len(), e);
        }
        // first sign of any nonempty good ballot is +1
        for b in good_ballots(5) {
            assert_eq!(b.signs()[0], 1);
        }
    }

    #[test]
    fn rejects_bad_sequences() {
        assert!(BallotSequence::new(vec![-1, 1]).is_err());
        assert!(BallotSequence::new(vec![1, -1, -1]).is_err());
        assert!(BallotSequence::new(vec![]).is_ok());
        assert_eq!(BallotSequence::new(vec![1, 1, -1]).unwrap().cardinal(), 1);
    }
}

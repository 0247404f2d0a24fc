//! Ballot and Dyck path polynomials, the area q-analog of the Catalan
//! numbers, and ballot-partition Bell polynomials.

use crate::diffops::{apply_conjugated, apply_tower, op_b};
use crate::poly::MultiPoly;
use crate::vars::{Family, VarId};

/// `b_n^[j]`: the inventory of n-step above-diagonal paths from height j.
/// The polynomial is x-linear: each path contributes one final-height
/// marker x_k, times q_h for every east step landing at height h when
/// `with_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallotPoly {
    pub n: usize,
    pub start_height: usize,
    pub poly: MultiPoly,
}

/// The ballot tower applied to x_j. Step m uses the operator B_{j+m},
/// which agrees with the untruncated ballot operator on every reachable
/// height (and with B_m when j = 0).
pub fn ballot_poly(n: usize, j: usize, with_q: bool) -> BallotPoly {
    let seed = MultiPoly::var(VarId::x(j as u32));
    let ops: Vec<_> = (1..=n).map(|m| op_b((j + m) as u32, with_q)).collect();
    BallotPoly {
        n,
        start_height: j,
        poly: apply_tower(&ops, &seed),
    }
}

/// Catalan number C_n (the coefficient of x0 in b_{2n}^{`[0]`}), or its area
/// q-analog C_n(q) after the substitution q_i <- q^i.
pub fn catalan(n: usize, q_analog: bool) -> MultiPoly {
    let b = ballot_poly(2 * n, 0, q_analog).poly;
    let b = if q_analog {
        b.index_raise(Family::Q)
    } else {
        b
    };
    b.coefficient_of(VarId::x(0), 1)
}

/// Ballot-partition Bell polynomial B^B_{n,k}: partitions of `[n]` into k
/// blocks, a good ballot on each block, each block weighted by its ballot
/// cardinal. Extracted from the conjugated ballot tower
/// e^{-u x0} P_n e^{u x0} at marker degree k.
pub fn ballot_bell(n: usize, k: usize) -> MultiPoly {
    assert!(k >= 1 && k <= n);
    ballot_bell_parts(n)[k].clone()
}

/// Y_n^B = sum_k B^B_{n,k}.
pub fn ballot_bell_total(n: usize) -> MultiPoly {
    assert!(n >= 1);
    let parts = ballot_bell_parts(n);
    let mut acc = MultiPoly::zero();
    for part in &parts[1..] {
        acc = &acc + part;
    }
    acc
}

fn ballot_bell_parts(n: usize) -> Vec<MultiPoly> {
    let x0 = VarId::x(0);
    let u = VarId::u();
    let mut p = MultiPoly::one();
    for m in 1..=n {
        p = apply_conjugated(&op_b(m as u32, false), x0, u, &p).expect("marker is fresh");
    }
    (0..=n).map(|k| p.coefficient_of(u, k as u32)).collect()
}

//! Set partitions, endofunctions, ballot partitions and enriched forests.

use crate::coeff::Coeff;
use crate::enricher::Enricher;
use crate::error::Error;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::vars::{Family, VarId};

const MAX_PARTITION_N: usize = 9;
const MAX_ENDOFUNCTION_COUNT: u64 = 10_000_000;
const MAX_FOREST_N: usize = 7;

/// A set partition of `[n]`: blocks of 1-based labels.
pub type Partition = Vec<Vec<usize>>;

/// All set partitions of `[n]`, via restricted growth strings.
pub fn set_partitions(n: usize) -> Result<Vec<Partition>, Error> {
    if n > MAX_PARTITION_N {
        return Err(Error::Budget {
            what: "set partition oracle",
            limit: MAX_PARTITION_N,
            requested: n,
        });
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(Vec::new());
        return Ok(out);
    }
    let mut rgs = vec![0usize; n];
    fn rec(i: usize, n: usize, max: usize, rgs: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == n {
            let blocks = max + 1;
            let mut partition: Partition = vec![Vec::new(); blocks];
            for (elem, &b) in rgs.iter().enumerate() {
                partition[b].push(elem + 1);
            }
            out.push(partition);
            return;
        }
        for b in 0..=max + 1 {
            rgs[i] = b;
            rec(i + 1, n, max.max(b), rgs, out);
        }
    }
    rgs[0] = 0;
    rec(1, n, 0, &mut rgs, &mut out);
    Ok(out)
}

/// Inventory of all functions f:`[k]` -> `[n]`, weighted by
/// prod_{i in `[n]`} x_{|f^{-1}(i)|}.
pub fn endofunctions(k: usize, n: usize) -> Result<MultiPoly, Error> {
    let count = (n as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    if count > MAX_ENDOFUNCTION_COUNT {
        return Err(Error::Budget {
            what: "endofunction oracle",
            limit: MAX_ENDOFUNCTION_COUNT as usize,
            requested: count as usize,
        });
    }
    let mut out = MultiPoly::zero();
    if n == 0 {
        if k == 0 {
            out.add_term(Monomial::one(), Coeff::from_integer(1.into()));
        }
        return Ok(out);
    }
    let mut f = vec![0usize; k]; // values in 0..n
    loop {
        let mut preimage = vec![0usize; n];
        for &v in &f {
            preimage[v] += 1;
        }
        let pairs: Vec<(VarId, u32)> = preimage
            .iter()
            .map(|&c| (VarId::x(c as u32), 1))
            .collect();
        out.add_term(Monomial::from_pairs(pairs), Coeff::from_integer(1.into()));
        // next function
        let mut i = 0;
        loop {
            if i == k {
                return Ok(out);
            }
            f[i] += 1;
            if f[i] < n {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// Ballot-partition inventory with exactly k blocks: each block of size s
/// carries a good ballot and is weighted x_{ballot cardinal}.
pub fn ballot_partitions(n: usize, k: usize) -> Result<MultiPoly, Error> {
    // block weight depends only on the block size
    let mut size_weight = vec![MultiPoly::zero(); n + 1];
    for (s, w) in size_weight.iter_mut().enumerate() {
        for b in super::good_ballots(s) {
            w.add_term(
                Monomial::var(VarId::x(b.cardinal() as u32)),
                Coeff::from_integer(1.into()),
            );
        }
    }
    let mut out = MultiPoly::zero();
    for partition in set_partitions(n)? {
        if partition.len() != k {
            continue;
        }
        let mut w = MultiPoly::one();
        for block in &partition {
            w = &w * &size_weight[block.len()];
        }
        out = &out + &w;
    }
    Ok(out)
}

/// Forest inventory: partitions of `[n]` into exactly k blocks, an enriched
/// increasing tree (with heights counted from each root) on every block.
pub fn enriched_forests(
    phi: &Enricher,
    n: usize,
    k: usize,
    with_q: bool,
    leaf_bound: usize,
) -> Result<MultiPoly, Error> {
    if n > MAX_FOREST_N {
        return Err(Error::Budget {
            what: "enriched forest oracle",
            limit: MAX_FOREST_N,
            requested: n,
        });
    }
    // tree inventory depends only on the block size (order isomorphism)
    let mut size_poly = vec![MultiPoly::one(); n + 1];
    for (s, slot) in size_poly.iter_mut().enumerate().skip(1) {
        *slot = super::enriched_tree_poly(phi, s, with_q, leaf_bound)?;
    }
    let infinite = !phi.is_polynomial();
    let mut out = MultiPoly::zero();
    for partition in set_partitions(n)? {
        if partition.len() != k {
            continue;
        }
        let mut w = MultiPoly::one();
        for block in &partition {
            w = &w * &size_poly[block.len()];
            if infinite {
                w = w.truncate_family_degree(Family::X, leaf_bound as u32);
            }
            if w.is_zero() {
                break;
            }
        }
        out = &out + &w;
    }
    Ok(out)
}

//! Tree enumerators: increasing trees as parent arrays, labeled free and
//! rooted trees from Pruefer sequences.

use num::traits::Zero;

use crate::coeff::{factorial, Coeff};
use crate::enricher::Enricher;
use crate::error::Error;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::vars::{Family, VarId};

const MAX_PATHLENGTH_N: usize = 10;
const MAX_ENRICHED_N: usize = 9;
const MAX_LABELED_TREE_N: usize = 7;

/// Increasing rooted tree on `[n]`, encoded as a parent array with
/// `parent[k]` < k (vertex 1 is the root). Labels increase along every
/// root-to-leaf path by construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncreasingTree {
    /// `parent[v]` for v = 2..=n; entry v-2 holds the parent of vertex v.
    parent: Vec<usize>,
}

impl IncreasingTree {
    pub fn new(parent: Vec<usize>) -> IncreasingTree {
        for (i, &p) in parent.iter().enumerate() {
            assert!(p >= 1 && p < i + 2, "parent[{}] = {} out of range", i + 2, p);
        }
        IncreasingTree { parent }
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len() + 1
    }

    /// Height of every vertex (root has height 0), 1-indexed slot v-1.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut ht = vec![0; n];
        for v in 2..=n {
            ht[v - 1] = ht[self.parent[v - 2] - 1] + 1;
        }
        ht
    }

    /// Indegree (fiber size) of every vertex, 1-indexed slot v-1.
    pub fn fiber_sizes(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut deg = vec![0; n];
        for v in 2..=n {
            deg[self.parent[v - 2] - 1] += 1;
        }
        deg
    }

    /// Sum of all vertex heights.
    pub fn path_length(&self) -> usize {
        self.heights().iter().sum()
    }
}

/// All (n-1)! increasing trees on `[n]`.
pub fn increasing_trees(n: usize) -> Vec<IncreasingTree> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut parent = vec![0usize; n - 1];
    fn rec(v: usize, n: usize, parent: &mut Vec<usize>, out: &mut Vec<IncreasingTree>) {
        if v > n {
            out.push(IncreasingTree::new(parent.clone()));
            return;
        }
        for p in 1..v {
            parent[v - 2] = p;
            rec(v + 1, n, parent, out);
        }
    }
    if n == 1 {
        out.push(IncreasingTree::new(Vec::new()));
    } else {
        rec(2, n, &mut parent, &mut out);
    }
    out
}

/// Path-length inventory: sum over increasing trees on `[n]` of
/// q^{pl(T)} prod_v `phi[fiber(v)]`, with q = q0.
pub fn pathlength(phi: &Enricher, n: usize) -> Result<MultiPoly, Error> {
    if n > MAX_PATHLENGTH_N {
        return Err(Error::Budget {
            what: "pathlength oracle",
            limit: MAX_PATHLENGTH_N,
            requested: n,
        });
    }
    let q = VarId::q(0);
    let mut out = MultiPoly::zero();
    for tree in increasing_trees(n) {
        let mut w = Coeff::from_integer(1.into());
        for d in tree.fiber_sizes() {
            w *= phi.coeff(d);
            if w.is_zero() {
                break;
            }
        }
        if !w.is_zero() {
            out.add_term(Monomial::var_pow(q, tree.path_length() as u32), w);
        }
    }
    Ok(out)
}

/// Two-sorted enriched-tree inventory: increasing trees on `[n]` internal
/// vertices with unlabeled leaves attached. A vertex at height h with c
/// internal children contributes sum_l `phi[c+l]` x_{h+1}^l / l!, and q_h
/// when `with_q`. For infinite-support enrichers the total leaf degree is
/// truncated at `leaf_bound`.
pub fn enriched_tree_poly(
    phi: &Enricher,
    n: usize,
    with_q: bool,
    leaf_bound: usize,
) -> Result<MultiPoly, Error> {
    if n > MAX_ENRICHED_N {
        return Err(Error::Budget {
            what: "enriched tree oracle",
            limit: MAX_ENRICHED_N,
            requested: n,
        });
    }
    let infinite = !phi.is_polynomial();
    let mut out = MultiPoly::zero();
    for tree in increasing_trees(n) {
        let heights = tree.heights();
        let fibers = tree.fiber_sizes();
        let mut w = MultiPoly::one();
        for v in 0..n {
            let factor = vertex_leaf_factor(phi, fibers[v], heights[v], leaf_bound);
            w = &w * &factor;
            if with_q {
                w = w.mul_monomial(&Monomial::var(VarId::q(heights[v] as u32)));
            }
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

/// sum_l `phi[c + l]` x_{h+1}^l / l! over admissible leaf counts l.
pub(crate) fn vertex_leaf_factor(
    phi: &Enricher,
    c: usize,
    height: usize,
    leaf_bound: usize,
) -> MultiPoly {
    let max_l = match phi.support_bound() {
        Some(b) => {
            if b < c {
                return MultiPoly::zero();
            }
            b - c
        }
        None => leaf_bound,
    };
    let v = VarId::x(height as u32 + 1);
    let mut out = MultiPoly::zero();
    for l in 0..=max_l {
        let c_val = phi.coeff(c + l);
        if !c_val.is_zero() {
            out.add_term(Monomial::var_pow(v, l as u32), c_val / factorial(l));
        }
    }
    out
}

/// Degree-weighted inventory of labeled free trees on `[n]`, generated from
/// all Pruefer sequences: sum over trees of prod_v x_{deg(v)}.
pub fn free_trees(n: usize) -> Result<MultiPoly, Error> {
    if n > MAX_LABELED_TREE_N {
        return Err(Error::Budget {
            what: "free tree oracle",
            limit: MAX_LABELED_TREE_N,
            requested: n,
        });
    }
    assert!(n >= 1);
    let mut out = MultiPoly::zero();
    for degrees in all_tree_degrees(n) {
        let pairs: Vec<(VarId, u32)> = degrees.iter().map(|&d| (VarId::x(d as u32), 1)).collect();
        out.add_term(Monomial::from_pairs(pairs), Coeff::from_integer(1.into()));
    }
    Ok(out)
}

/// Indegree-weighted inventory of labeled rooted trees on `[n]`: every free
/// tree, every choice of root, edges oriented toward the root;
/// indegree(v) = deg(v) - 1 except at the root where it is deg(root).
pub fn rooted_trees(n: usize) -> Result<MultiPoly, Error> {
    if n > MAX_LABELED_TREE_N {
        return Err(Error::Budget {
            what: "rooted tree oracle",
            limit: MAX_LABELED_TREE_N,
            requested: n,
        });
    }
    assert!(n >= 1);
    let mut out = MultiPoly::zero();
    for degrees in all_tree_degrees(n) {
        for root in 0..n {
            let pairs: Vec<(VarId, u32)> = degrees
                .iter()
                .enumerate()
                .map(|(v, &d)| {
                    let indeg = if v == root { d } else { d - 1 };
                    (VarId::x(indeg as u32), 1)
                })
                .collect();
            out.add_term(Monomial::from_pairs(pairs), Coeff::from_integer(1.into()));
        }
    }
    Ok(out)
}

/// Degree sequences of every labeled tree on `[n]` (one entry per tree).
fn all_tree_degrees(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    if n == 2 {
        return vec![vec![1, 1]];
    }
    let mut out = Vec::new();
    let len = n - 2;
    let mut seq = vec![1usize; len];
    loop {
        // degree(v) = 1 + multiplicity of v in the Pruefer sequence
        let mut deg = vec![1usize; n];
        for &s in &seq {
            deg[s - 1] += 1;
        }
        out.push(deg);
        // next sequence over [1..=n]^len
        let mut i = 0;
        loop {
            if i == len {
                return out;
            }
            seq[i] += 1;
            if seq[i] <= n {
                break;
            }
            seq[i] = 1;
            i += 1;
        }
    }
}

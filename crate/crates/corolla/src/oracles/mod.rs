//! Brute-force combinatorial enumerators.
//!
//! Everything here generates objects directly (parent arrays, sign
//! sequences, Pruefer codes, restricted-growth strings) and sums the same
//! weights the closed forms compute through the operator engine. These are
//! the independent ground truth for every property test and for the CLI
//! `verify` subcommand. Budgets are hard-coded and enforced by refusal.

mod partitions;
mod paths;
mod trees;

pub use partitions::{
    ballot_partitions, endofunctions, enriched_forests, set_partitions, Partition,
};
pub use paths::{ballot, good_ballots, BallotSequence};
pub use trees::{
    enriched_tree_poly, free_trees, increasing_trees, pathlength, rooted_trees, IncreasingTree,
};

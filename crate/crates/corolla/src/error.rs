//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A brute-force enumeration was asked to exceed its hard budget.
    /// Budgets are enforced with explicit refusal, never silent truncation.
    #[error("budget refused: {what} supports {limit} at most, requested {requested}")]
    Budget {
        what: &'static str,
        limit: usize,
        requested: usize,
    },

    /// Series substitution requires the inner series to vanish at 0.
    #[error("inner series must have zero constant term")]
    NonzeroConstantTerm,

    /// Lagrange inversion requires a unit constant term.
    #[error("series must have nonzero constant term")]
    ZeroConstantTerm,

    #[error("series truncated to order {have}, need at least {need}")]
    OrderTooSmall { have: usize, need: usize },

    /// Path-length polynomials need `phi[0]` != 0 (otherwise use the
    /// internal/external variant).
    #[error("enricher has phi[0] = 0; path length polynomial undefined")]
    PhiConstantTermZero,

    /// The internal/external statistic is only defined for rigid enrichers.
    #[error("enricher `{0}` is not a rigid built-in (mono:r or complete:r)")]
    NotRigid(String),

    /// The conjugation marker must be fresh in the operator.
    #[error("marker variable occurs in an operator factor")]
    MarkerInOperator,

    /// An exact division that the theory guarantees failed; this is a bug.
    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

//! Named generating computations: every enumeration formula reachable from
//! the operator engine, exposed as pure functions.
//!
//! Closed forms with two independent derivations (a recursion and an
//! operator route, or a recursion and a conjugation route) expose both
//! routes publicly; the main entry point uses the fast route and
//! cross-checks the other under `debug_assertions`.

mod ballot;
mod bell;
mod cayley;
mod ode;
mod pathlength;
mod trees;
mod univariate;

pub use ballot::{ballot_bell, ballot_bell_total, ballot_poly, catalan, BallotPoly};
pub use bell::{
    functions_poly, gen_bell, gen_bell_conjugation, gen_bell_recursion, gen_bell_total, hmy_delta,
    partial_bell,
};
pub use cayley::{cayley_free, cayley_rooted, faa_di_bruno_coeff};
pub use ode::{enricher_shifted_series, ode_solve};
pub use pathlength::{
    forest_pathlength_poly, internal_external_pathlength, pathlength_operator,
    pathlength_recursion, pathlength_poly, PathLengthPoly,
};
pub use trees::increasing_tree_poly;
pub use univariate::{
    hypertree_poly, lagrange_tree_coeff, ordered_forest_expansion, plane_forest_frobenius,
    touchard, univariate_tower,
};

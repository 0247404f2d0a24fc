//! Exact symbolic combinatorics through differential operators.
//!
//! The operators x_{i+1}∂_i (darts), their adjoints x_i∂_{i+1}, the shift
//! corollas phi(x_{i+1})∂_i and the bicolored sums built from them act on
//! sparse exact polynomials; their towers generate the classical
//! enumeration polynomials of increasing trees, ballot and Dyck paths,
//! Bell polynomials, labeled trees and several Lagrange-inversion closed
//! forms. Everything is cross-checked against brute-force enumerators in
//! [`oracles`].
//!
//! Start with the runnable examples (`cargo run --example pathlength`,
//! `cargo run --example cayley_trees`, ...) or the `corolla` binary.

pub mod coeff;
pub mod error;
pub mod vars;

mod monomial;
mod poly;

pub mod cli;
pub mod closed_forms;
pub mod diffops;
pub mod enricher;
pub mod oracles;
pub mod series;

pub use coeff::Coeff;
pub use diffops::{DiffOp, XDForm};
pub use enricher::Enricher;
pub use error::Error;
pub use monomial::Monomial;
pub use poly::{MultiPoly, Subst, SubstMap};
pub use series::TruncatedSeries;
pub use vars::{Family, VarId};

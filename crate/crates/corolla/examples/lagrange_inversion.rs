//! Lagrange inversion as tree enumeration.
//!
//! For a series F with unit constant term, A_F[n] = (d/dt)^{n-1} F^n |_0
//! is the inventory of rooted trees whose fibers are weighted by the
//! coefficients of F. Generic coefficients recover the Cayley polynomial;
//! the plane-tree variant divides (D^nat)^{n-1} x0^n by n!.
//!
//! Run: cargo run --example lagrange_inversion

use corolla::closed_forms::{cayley_rooted, lagrange_tree_coeff, plane_forest_frobenius};
use corolla::{MultiPoly, TruncatedSeries, VarId};

fn main() {
    // generic F: coefficient k is the variable x_k
    for n in [4, 5] {
        let f = TruncatedSeries::generic(n + 1, 0, |k| MultiPoly::var(VarId::x(k as u32)));
        let a = lagrange_tree_coeff(&f, n).unwrap();
        assert_eq!(a, cayley_rooted(n));
        println!("A_F[{n}] (generic F) = {}", a.to_text());
    }
    println!();

    // F = x e^t: every vertex weighted x, Cayley's formula n^{n-1} x^n
    let x = MultiPoly::var(VarId::x(0));
    let f = TruncatedSeries::generic(7, 0, |_| x.clone());
    print!("A_(x e^t)[n] for n = 1..6:");
    for n in 1..=6 {
        print!(" {}", lagrange_tree_coeff(&f, n).unwrap().to_text());
    }
    println!();
    println!();

    println!("plane trees by indegree sequence (parking-function Frobenius form):");
    for n in 1..=5 {
        println!("  Pf_{n} = {}", plane_forest_frobenius(n).unwrap().to_text());
    }
    print!("totals are the Catalan numbers:");
    for n in 1..=7 {
        print!(" {}", plane_forest_frobenius(n).unwrap().coefficient_sum());
    }
    println!();
}

//! The x·d/dx engine on the closed family x^k (1-x)^{-m}, and the
//! Touchard/hypertree specializations of the conjugated towers.
//!
//! Run: cargo run --example ordered_forests

use corolla::closed_forms::{hypertree_poly, ordered_forest_expansion, touchard, univariate_tower};
use corolla::diffops::xd_power;
use corolla::Enricher;

fn main() {
    println!("(x d/dx)^(n-1) (1-x)^(-n) stays in the span of x^k/(1-x)^m:");
    for n in 2..=6 {
        let (form, scalar) = ordered_forest_expansion(n);
        println!("  n = {n}: {}", form.to_text());
        println!("         trees enriched with linearly ordered partitions: {scalar}");
    }
    println!();

    // direct engine access
    let f = xd_power(3, 4);
    println!("(x d/dx)^4 (1-x)^(-3) = {}", f.to_text());
    println!();

    println!("Touchard polynomials (set partitions by block count):");
    for n in 0..=6 {
        println!("  T_{n} = {}", touchard(n).to_text());
    }
    println!();

    println!("trees enriched with set partitions: T_(n-1)(n x):");
    for n in 1..=5 {
        let h = hypertree_poly(n);
        println!("  n = {n}: {}  (count {})", h.to_text(), h.coefficient_sum());
    }
    println!();

    // operator powers in one variable
    println!("(x^2 d/dx)^(n-1) x^n = n(n+1)...(2n-2) x^(2n-1):");
    for n in 1..=5 {
        println!("  n = {n}: {}", univariate_tower(&Enricher::Monomial(2), n, n, 0).to_text());
    }
}

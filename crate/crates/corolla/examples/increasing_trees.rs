//! Enriched increasing trees graded by the heights of their leaves and
//! internal vertices: the shift-corolla tower T_n = D_n ... D_1 x0.
//!
//! x_i marks a leaf at height i, q_i an internal vertex at height i.
//!
//! Run: cargo run --example increasing_trees

use corolla::closed_forms::{increasing_tree_poly, internal_external_pathlength};
use corolla::Enricher;

fn main() {
    // extended binary trees: every internal vertex has exactly two children
    let m2 = Enricher::Monomial(2);
    println!("extended binary increasing trees (phi(x) = x^2):");
    for n in 1..=4 {
        let t = increasing_tree_poly(&m2, n, true, 0);
        println!("  T_{n}(x, q) = {}", t.to_text());
    }
    println!();

    // complete binary: internal vertices may also be childless
    let c2 = Enricher::Complete(2);
    println!("complete binary increasing trees (phi(x) = 1 + x^2):");
    for n in 1..=3 {
        let t = increasing_tree_poly(&c2, n, true, 0);
        println!("  T_{n}(x, q) = {}", t.to_text());
    }
    println!();

    // infinite-support enrichers need a leaf-degree bound
    println!("recursive trees (phi = exp), leaves truncated at degree 3:");
    for n in 1..=3 {
        let t = increasing_tree_poly(&Enricher::Exp, n, false, 3);
        println!("  T_{n}(x) = {}", t.to_text());
    }
    println!();

    // the substitution x_k <- x^k, q_k <- q^k turns the bivariate grading
    // into internal and external path length
    println!("internal/external path length, extended binary:");
    for n in 1..=4 {
        let p = internal_external_pathlength(&m2, n).unwrap();
        println!("  p_{n}(x, q) = {}", p.to_text());
    }
}

//! Path-length q-polynomials of enriched increasing trees.
//!
//! The coefficient of q^j in p_n(q) counts the increasing trees on n
//! vertices whose vertex heights sum to j; q = 1 recovers the plain count.
//!
//! Run: cargo run --example pathlength

use corolla::closed_forms::{forest_pathlength_poly, pathlength_poly};
use corolla::Enricher;

fn main() {
    for phi in [
        Enricher::Exp,          // recursive trees
        Enricher::Lin,          // plane increasing trees
        Enricher::Pow(2),       // binary plane increasing trees
        Enricher::Complete(2),  // complete binary increasing trees
    ] {
        println!("phi = {phi}");
        for n in 1..=6 {
            let p = pathlength_poly(&phi, n).unwrap();
            println!("  p_{n}(q) = {}", p.poly.to_text());
        }
        println!();
    }

    // f_n(q) = q^{-n} p_{n+1}(q) counts forests by path length
    println!("forests of recursive trees:");
    for n in 0..=5 {
        let f = forest_pathlength_poly(&Enricher::Exp, n).unwrap();
        println!("  f_{n}(q) = {}", f.to_text());
    }
    println!();
    println!("linearly ordered forests of plane increasing trees:");
    for n in 0..=5 {
        let f = forest_pathlength_poly(&Enricher::Lin, n).unwrap();
        println!("  f_{n}(q) = {}", f.to_text());
    }
}

//! Labeled tree polynomials from dart towers.
//!
//! Delta_{n-1} x0^n refines Cayley's n^{n-1} by vertex indegrees; the
//! shifted Delta_{n-2} x0^n does the same for free trees and n^{n-2}.
//! Delta_k x0^n counts functions [k] -> [n] by preimage sizes.
//!
//! Run: cargo run --example cayley_trees

use corolla::closed_forms::{cayley_free, cayley_rooted, functions_poly};
use corolla::oracles;

fn main() {
    println!("rooted labeled trees by indegree sequence:");
    for n in 1..=5 {
        println!("  A_{n} = {}", cayley_rooted(n).to_text());
    }
    println!();

    println!("free labeled trees by degree sequence:");
    for n in 2..=5 {
        println!("  a_{n} = {}", cayley_free(n).to_text());
    }
    println!();

    print!("rooted counts n^(n-1):");
    for n in 1..=8 {
        print!(" {}", cayley_rooted(n).coefficient_sum());
    }
    println!();
    print!("free counts   n^(n-2):");
    for n in 2..=8 {
        print!(" {}", cayley_free(n).coefficient_sum());
    }
    println!();
    println!();

    println!("functions [k] -> [3] by preimage sizes:");
    for k in 0..=3 {
        println!("  Delta_{k} x0^3 = {}", functions_poly(k, 3).to_text());
    }
    println!();

    // every labeled tree on 6 vertices, generated from Pruefer sequences,
    // grouped by weight: same polynomial
    assert_eq!(cayley_rooted(6), oracles::rooted_trees(6).unwrap());
    assert_eq!(cayley_free(6), oracles::free_trees(6).unwrap());
    println!("n = 6 cross-check against Pruefer enumeration: ok");
}

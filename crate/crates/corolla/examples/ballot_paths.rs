//! Ballot paths through operator towers.
//!
//! The ballot operator B_n = sum_i (x_{i+1} d_i + x_i d_{i+1}) moves a
//! path marker up or down one height; the tower P_n = B_n ... B_1 applied
//! to x_j therefore enumerates n-step above-diagonal paths from height j.
//! With the q-weighted adjoints every east step records its landing
//! height, and q_i <- q^i turns that into the area statistic.
//!
//! Run: cargo run --example ballot_paths

use corolla::closed_forms::{ballot_bell, ballot_poly, catalan};
use corolla::oracles;
use corolla::Family;

fn main() {
    println!("ballot polynomials b_n (start height 0):");
    for n in 0..=6 {
        println!("  b_{n} = {}", ballot_poly(n, 0, false).poly.to_text());
    }
    println!();

    println!("height-weighted, n = 4: {}", ballot_poly(4, 0, true).poly.to_text());
    println!();

    println!("starting higher, j = 2, n = 3: {}", ballot_poly(3, 2, true).poly.to_text());
    println!();

    print!("Catalan numbers (coefficient of x0 in b_2n):");
    for n in 0..=7 {
        print!(" {}", catalan(n, false).to_text());
    }
    println!();
    println!("area q-analogs:");
    for n in 0..=4 {
        println!("  C_{n}(q) = {}", catalan(n, true).to_text());
    }
    println!();

    println!("ballot-partition Bell polynomials (blocks weighted by ballot cardinal):");
    for n in 1..=4 {
        for k in 1..=n {
            println!("  B^B({n},{k}) = {}", ballot_bell(n, k).to_text());
        }
    }
    println!();

    // the brute-force path enumerator agrees
    let closed = ballot_poly(10, 0, true).poly;
    let brute = oracles::ballot(10, 0, true).unwrap();
    assert_eq!(closed, brute);
    println!(
        "n = 10 cross-check against {} enumerated sign sequences: ok ({} terms, {} paths)",
        1 << 10,
        closed.num_terms(),
        closed.family_to_one(Family::Q).coefficient_sum()
    );
}

//! Classical and generalized Bell polynomials.
//!
//! B_{n,k}(x1..x_{n-k+1}) weights k-block partitions of [n] by block
//! sizes; B_{n,k}^phi weights k-tree forests of enriched increasing trees
//! by leaf heights. Both come out of the same conjugation trick
//! e^{-u x0} (tower) e^{u x0}, graded by the marker u.
//!
//! Run: cargo run --example bell_polynomials

use corolla::closed_forms::{gen_bell, gen_bell_conjugation, gen_bell_recursion, gen_bell_total, partial_bell};
use corolla::{Enricher, Family};

fn main() {
    println!("classical partial Bell polynomials:");
    for n in 1..=5 {
        for k in 1..=n {
            println!("  B({n},{k}) = {}", partial_bell(n, k).to_text());
        }
    }
    println!();

    let m2 = Enricher::Monomial(2);
    println!("generalized Bell polynomials for extended binary trees:");
    for k in 1..=5 {
        println!("  B[2]({},{}) = {}", 5, k, gen_bell(&m2, 5, k, false, 0).to_text());
    }
    println!("  Y_5 = {}", gen_bell_total(&m2, 5, false, 0).to_text());
    println!();

    // the two derivations agree term for term
    let rec = gen_bell_recursion(&m2, 4, 2, true, 0);
    let conj = gen_bell_conjugation(&m2, 4, 2, true, 0);
    assert_eq!(rec, conj);
    println!("recursion route == conjugation route, e.g. B[2](4,2)(x,q):");
    println!("  {}", rec.to_text());
    println!();

    // row sums at x = 1 are the Bell numbers
    print!("Bell numbers from row sums:");
    for n in 1..=8usize {
        let mut total = corolla::coeff::rat(0);
        for k in 1..=n {
            total += partial_bell(n, k).family_to_one(Family::X).constant_term();
        }
        print!(" {total}");
    }
    println!();
}

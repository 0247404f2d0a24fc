//! Exact solutions of y' = phi(y) and their tree interpretations.
//!
//! Run: cargo run --example ode_solutions

use corolla::closed_forms::ode_solve;
use corolla::Enricher;

fn show(label: &str, phi: &Enricher, order: usize) {
    let y = ode_solve(phi, order, false);
    print!("{label}:");
    for n in 0..=order {
        print!(" {}", y.coeff(n).to_text());
    }
    println!();
}

fn main() {
    // EGF coefficients a_n of the solution, a_n = number of enriched
    // increasing trees on n vertices
    show("recursive trees      (y' = e^y)      ", &Enricher::Exp, 7);
    show("plane increasing     (y' = 1/(1-y))  ", &Enricher::Lin, 7);
    show("binary increasing    (y' = (1+y)^2)  ", &Enricher::Pow(2), 7);
    show("tan(t)               (y' = 1 + y^2)  ", &Enricher::Complete(2), 9);
    show("ternary increasing   (y' = (1+y)^3)  ", &Enricher::Pow(3), 6);
    println!();

    // with y(0) = x the coefficients carry the leaf inventory
    let y = ode_solve(&Enricher::Complete(2), 5, true);
    println!("complete binary with leaf variable (y(0) = x):");
    for n in 0..=5 {
        println!("  T_{n}(x) = {}", y.coeff(n).to_text());
    }
}

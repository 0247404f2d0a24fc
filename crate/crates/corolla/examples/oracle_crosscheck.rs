//! The verification harness: every closed form against its brute-force
//! enumerator. This is the same machinery behind `corolla verify`.
//!
//! Run: cargo run --example oracle_crosscheck

use corolla::cli::run_verify;
use corolla::oracles;
use corolla::Enricher;

fn main() {
    // direct oracle use: enumerate all 2^12 sign sequences
    let b = oracles::ballot(12, 0, false).unwrap();
    println!("12-step paths by final height: {}", b.to_text());

    // all 720 increasing trees on 7 vertices, by path length
    let p = oracles::pathlength(&Enricher::Exp, 7).unwrap();
    println!("recursive trees on 7 vertices by path length:");
    println!("  {}", p.to_text());
    println!();

    // the full suite
    for report in run_verify("all", 6).unwrap() {
        println!(
            "{:<12} {:>3} checks passed, {} failed",
            report.name,
            report.passed,
            report.failures.len()
        );
        for f in &report.failures {
            println!("  MISMATCH: {f}");
        }
    }
}

//! The chain rule for higher derivatives, twice.
//!
//! The bicolored tower Gamma_n y0 produces the n-th coefficient of P(Q(t))
//! with generic coefficients y_k, x_k (Faà di Bruno). The dart tower
//! Delta_n F gives the same content as a finite-variable polynomial
//! identity: Delta_n F = sum_k F^(k)(x0) B_{n,k}(x1..xn).
//!
//! Run: cargo run --example faa_di_bruno

use corolla::closed_forms::{faa_di_bruno_coeff, hmy_delta};
use corolla::{MultiPoly, TruncatedSeries, VarId};

fn main() {
    println!("coefficients of P(Q(t)), P = sum y_k t^k/k!, Q = sum x_k t^k/k!:");
    for n in 1..=5 {
        println!("  z_{n} = {}", faa_di_bruno_coeff(n).to_text());
    }
    println!();

    // the same values drop out of composing generic truncated series
    let f = TruncatedSeries::generic(5, 0, |k| MultiPoly::var(VarId::y(k as u32)));
    let g = TruncatedSeries::generic(5, 1, |k| MultiPoly::var(VarId::x(k as u32)));
    let h = f.compose(&g).unwrap();
    for n in 1..=5 {
        assert_eq!(h.coeff(n), faa_di_bruno_coeff(n));
    }
    println!("series composition reproduces every z_n: ok");
    println!();

    // higher-derivative chain rule for a concrete outer series F = x0^3
    let f3 = vec![
        MultiPoly::zero(),
        MultiPoly::zero(),
        MultiPoly::zero(),
        MultiPoly::constant(corolla::coeff::rat(6)),
    ];
    println!("Delta_n applied to F = x0^3:");
    for n in 1..=4 {
        println!("  Delta_{n} F = {}", hmy_delta(&f3, n).to_text());
    }
}

//! The autonomous equation y' = phi(y) as an exact coefficient recursion.

use num::traits::Zero;

use crate::coeff::factorial;
use crate::enricher::Enricher;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::series::TruncatedSeries;
use crate::vars::VarId;

/// The enricher as a series shifted around `base`: coefficient j is
/// phi^{(j)}(base) = sum_{k >= j} `phi[k]` base^{k-j}/(k-j)!, with the degree
/// in `base` capped at `deg_bound` for infinite-support enrichers.
pub fn enricher_shifted_series(
    phi: &Enricher,
    order: usize,
    base: Option<VarId>,
    deg_bound: usize,
) -> TruncatedSeries {
    let mut s = TruncatedSeries::zero(order);
    match base {
        None => {
            for j in 0..=order {
                s.set_coeff(j, MultiPoly::constant(phi.coeff(j)));
            }
        }
        Some(v) => {
            let top_shift = match phi.support_bound() {
                Some(b) => b,
                None => deg_bound, // base-degree cap
            };
            for j in 0..=order {
                let mut c = MultiPoly::zero();
                for d in 0..=top_shift {
                    let k = j + d;
                    let coeff = phi.coeff(k);
                    if !coeff.is_zero() {
                        c.add_term(Monomial::var_pow(v, d as u32), coeff / factorial(d));
                    }
                }
                s.set_coeff(j, c);
            }
        }
    }
    s
}

/// Solve y' = phi(y) with y(0) = 0 (or y(0) = x when `with_x`) to the
/// given order, via the coefficient recursion `y[n+1]` = phi(y)`[n]`.
///
/// For y(0) = x and an infinite-support enricher the coefficients are
/// genuine power series in x; their x-degree is truncated at `order`
/// (exact for every retained degree). Polynomial enrichers are exact.
pub fn ode_solve(phi: &Enricher, order: usize, with_x: bool) -> TruncatedSeries {
    let x0 = VarId::x(0);
    let base = if with_x { Some(x0) } else { None };
    let outer = enricher_shifted_series(phi, order, base, order);
    let mut y = TruncatedSeries::zero(order);
    if with_x {
        y.set_coeff(0, MultiPoly::var(x0));
    }
    for n in 0..order {
        // phi(y)[n] depends only on y[1..=n], all already known
        let mut y_plus = y.clone();
        y_plus.set_coeff(0, MultiPoly::zero());
        let composed = outer
            .compose(&y_plus)
            .expect("inner series has zero constant term");
        y.set_coeff(n + 1, composed.coeff(n));
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    fn consts(s: &TruncatedSeries) -> Vec<MultiPoly> {
        (0..=s.order()).map(|n| s.coeff(n)).collect()
    }

    fn nums(vals: &[i64]) -> Vec<MultiPoly> {
        vals.iter().map(|&v| MultiPoly::constant(rat(v))).collect()
    }

    #[test]
    fn recursive_tree_counts() {
        // phi = exp: coefficients (n-1)!
        let y = ode_solve(&Enricher::Exp, 4, false);
        assert_eq!(consts(&y), nums(&[0, 1, 1, 2, 6]));
    }

    #[test]
    fn tangent_numbers() {
        // phi = 1 + y^2: tan(t)
        let y = ode_solve(&Enricher::Complete(2), 5, false);
        assert_eq!(consts(&y), nums(&[0, 1, 0, 2, 0, 16]));
    }

    #[test]
    fn plane_increasing_tree_counts() {
        // phi = lin: (2n-3)!!
        let y = ode_solve(&Enricher::Lin, 4, false);
        assert_eq!(consts(&y), nums(&[0, 1, 1, 3, 15]));
    }

    #[test]
    fn with_x_leaf_inventory() {
        // phi = 1 + y^2, y(0) = x: T_1 = 1 + x^2, T_2 = 2x(1 + x^2)
        let y = ode_solve(&Enricher::Complete(2), 3, true);
        let p = |s: &str| MultiPoly::parse(s).unwrap();
        assert_eq!(y.coeff(0), p("x0"));
        assert_eq!(y.coeff(1), p("1 + x0^2"));
        assert_eq!(y.coeff(2), p("2*x0 + 2*x0^3"));
        // T_3 = 2(1+x^2)(1+3x^2)
        assert_eq!(y.coeff(3), p("2 + 8*x0^2 + 6*x0^4"));
    }
}

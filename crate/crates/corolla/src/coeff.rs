//! Exact rational coefficients.
//!
//! Every coefficient in the crate is a `Coeff` (an arbitrary-precision
//! rational kept in lowest terms with positive denominator). There is no
//! floating point anywhere: enrichers introduce k! denominators that must
//! cancel exactly.

use num::bigint::BigInt;
use num::traits::{One, Zero};
use std::str::FromStr;

use crate::error::Error;

/// Arbitrary-precision rational, always stored in lowest terms with
/// denominator >= 1. Renders as `p/q`, with `/q` omitted when q = 1.
pub type Coeff = num::BigRational;

/// Integer coefficient.
pub fn rat(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

/// Rational coefficient n/d.
pub fn ratio(n: i64, d: i64) -> Coeff {
    Coeff::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `p` or `p/q` (exact, no rounding).
pub fn parse_coeff(s: &str) -> Result<Coeff, Error> {
    Coeff::from_str(s.trim()).map_err(|_| Error::Parse(format!("invalid rational `{s}`")))
}

/// n! as an exact rational.
pub fn factorial(n: usize) -> Coeff {
    Coeff::from_integer(factorial_int(n))
}

/// n! as a big integer.
pub fn factorial_int(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient C(n, k).
pub fn binomial(n: usize, k: usize) -> Coeff {
    if k > n {
        return Coeff::zero();
    }
    let k = k.min(n - k);
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    Coeff::new(num, den)
}

/// Falling factorial (m)_k = m (m-1) ... (m-k+1).
pub fn falling(m: i64, k: usize) -> Coeff {
    let mut acc = BigInt::one();
    for i in 0..k as i64 {
        acc *= BigInt::from(m - i);
    }
    Coeff::from_integer(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let c = ratio(6, -4);
        assert_eq!(c.numer(), &BigInt::from(-3));
        assert_eq!(c.denom(), &BigInt::from(2));
    }

    #[test]
    fn renders_p_over_q_with_unit_denominator_omitted() {
        assert_eq!(ratio(3, 2).to_string(), "3/2");
        assert_eq!(rat(-7).to_string(), "-7");
        assert_eq!(rat(0).to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["5", "-5", "3/2", "-11/7", "0"] {
            assert_eq!(parse_coeff(s).unwrap().to_string(), s);
        }
        assert!(parse_coeff("1/0").is_err());
        assert!(parse_coeff("x").is_err());
        // non-canonical input normalizes
        assert_eq!(parse_coeff("4/6").unwrap(), ratio(2, 3));
    }

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), rat(1));
        assert_eq!(factorial(5), rat(120));
        assert_eq!(binomial(5, 2), rat(10));
        assert_eq!(binomial(4, 7), rat(0));
        assert_eq!(falling(5, 3), rat(60));
        assert_eq!(falling(2, 4), rat(0));
    }
}

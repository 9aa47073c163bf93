//! Exact coefficient arithmetic: rationals, Laurent polynomials in `A`,
//! univariate (Laurent) polynomials over a generic ring, and capped bivariate
//! power series in `(u, w)` / `(u, s)`.
//!
//! Everything here is exact; there is no floating point anywhere in this
//! crate.

pub mod laurent;
pub mod poly;
pub mod series;

pub use laurent::{DivisibilityOrder, LaurentPoly};
pub use poly::{Ring, UniPoly, Var};
pub use series::{Mode, TruncBivariate};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Arbitrary-precision rational, the ground field of every module.
pub type Rational = BigRational;
/// Arbitrary-precision integer.
pub type Int = BigInt;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from(Int::from(n))
}

/// `n/d` as a reduced rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

/// Binomial coefficient `C(n, k)` as an exact integer.
pub fn binomial(n: u32, k: u32) -> Int {
    if k > n {
        return Int::from(0);
    }
    let k = k.min(n - k);
    let mut acc = Int::from(1);
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), Int::from(20));
        assert_eq!(binomial(30, 15), Int::from(155117520i64));
        assert_eq!(binomial(4, 7), Int::from(0));
    }
}

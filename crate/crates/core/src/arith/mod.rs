//! Exact rational and number-field arithmetic.
//!
//! A [`NumberField`] is `Q[z]/(m(z))` for a monic irreducible `m`; its
//! elements are stored as `d` rational coordinates in the power basis
//! `1, z, ..., z^(d-1)`. The rational numbers are the degree-one field
//! `Q[z]/(z)`, so every algorithm above this layer is written once.

mod field;
pub(crate) mod linalg;
pub(crate) mod qpoly;

pub use field::{FieldElement, NumberField};
pub use linalg::{det_bareiss_int, det_rational, resultant_q};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Exact square root of a rational, if it has one.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    if q.is_zero() {
        return Some(Rational::zero());
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// `a^e` for a small non-negative exponent.
pub fn rat_pow(a: &Rational, e: usize) -> Rational {
    num_traits::pow(a.clone(), e)
}

/// Formats a rational as `p` or `p/q`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_sum_is_reduced() {
        let s = ratio(2, 3) + ratio(1, 6);
        assert_eq!(s, ratio(5, 6));
        assert_eq!(s.denom(), &BigInt::from(6));
    }

    #[test]
    fn zero_is_canonical() {
        let z = ratio(3, 7) - ratio(6, 14);
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::one());
    }

    #[test]
    fn sqrt_of_rationals() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&rat(2)), None);
        assert_eq!(rational_sqrt(&rat(-4)), None);
    }
}

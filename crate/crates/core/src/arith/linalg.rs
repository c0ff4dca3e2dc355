//! Fraction-free determinants over `Z` and `Q`, and the Sylvester resultant.

use super::{common_denominator, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Determinant of a square integer matrix by Bareiss elimination. Every
/// intermediate division is exact.
pub fn det_bareiss_int(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

/// Determinant of a rational matrix: rows are scaled to integers, the
/// integer determinant is taken, and the scaling is divided back out.
pub fn det_rational(m: &[Vec<Rational>]) -> Rational {
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let den = common_denominator(row);
            let ints = row
                .iter()
                .map(|q| (q * Rational::from_integer(den.clone())).to_integer())
                .collect();
            scale *= &den;
            ints
        })
        .collect();
    Rational::new(det_bareiss_int(rows), scale)
}

/// `Res(a, b)` of two univariate rational polynomials (ascending
/// coefficients) as the determinant of their Sylvester matrix.
///
/// Conventions: the resultant with a zero polynomial is zero, and
/// `Res(a, c) = c^deg(a)` for a nonzero constant `c`.
pub fn resultant_q(a: &[Rational], b: &[Rational]) -> Rational {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    super::qpoly::trim(&mut a);
    super::qpoly::trim(&mut b);
    if a.is_empty() || b.is_empty() {
        return Rational::zero();
    }
    let (m, n) = (a.len() - 1, b.len() - 1);
    if m == 0 {
        return super::rat_pow(&a[0], n);
    }
    if n == 0 {
        return super::rat_pow(&b[0], m);
    }
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    // Rows hold descending coefficients so the matrix is the textbook one.
    for i in 0..n {
        let mut row = vec![Rational::zero(); size];
        for (j, c) in a.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Rational::zero(); size];
        for (j, c) in b.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    det_rational(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn bareiss_small() {
        assert_eq!(det_bareiss_int(ints(&[&[2, 1], &[1, 3]])), BigInt::from(5));
        assert_eq!(
            det_bareiss_int(ints(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]])),
            BigInt::from(-2)
        );
        assert_eq!(det_bareiss_int(ints(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(det_bareiss_int(Vec::new()), BigInt::one());
    }

    #[test]
    fn rational_det() {
        let m = vec![vec![ratio(1, 2), rat(1)], vec![rat(3), ratio(1, 3)]];
        assert_eq!(det_rational(&m), ratio(1, 6) - rat(3));
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(z^2 + 1, t0 - z) = t0^2 + 1 at t0 = 3
        let m = vec![rat(1), rat(0), rat(1)];
        let q = vec![rat(3), rat(-1)];
        assert_eq!(resultant_q(&m, &q), rat(10));
        // constant second argument
        assert_eq!(resultant_q(&m, &[rat(5)]), rat(25));
        assert_eq!(resultant_q(&m, &[]), rat(0));
    }
}

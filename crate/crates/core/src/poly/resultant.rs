use num_traits::Zero;

use super::Polynomial;
use crate::arith::{qpoly, resultant_q, NumberField, Rational};

/// `Res_z(m(z), q(z, t))` where `m` is the minimal polynomial of `q`'s field
/// and `q` is read as a polynomial in `z` and `t`. For monic `m` this is the
/// field norm of `q`, a polynomial over `Q` of degree `d * deg_t(q)` when
/// `q` is monic in `t`.
///
/// Evaluated at `d * deg_t(q) + 1` integer points, each value a Sylvester
/// determinant over `Q`, then interpolated.
pub fn poly_resultant(q: &Polynomial) -> Polynomial {
    let rationals = NumberField::rationals();
    let field = q.field();
    let Some(n) = q.degree() else {
        return Polynomial::zero(&rationals);
    };
    let m = field.min_poly();
    if field.degree() == 1 {
        // The norm from Q to Q is the identity.
        let coeffs: Vec<Rational> = q.coeffs().iter().map(|c| c.coords()[0].clone()).collect();
        return Polynomial::from_rationals(&rationals, &coeffs);
    }
    let bound = field.degree() * n;
    let xs: Vec<Rational> = (0..=bound).map(sample_point).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| {
            let v = q.eval_rational(x);
            let mut a = v.coords().to_vec();
            qpoly::trim(&mut a);
            resultant_q(m, &a)
        })
        .collect();
    Polynomial::from_rationals(&rationals, &interpolate(&xs, &ys))
}

/// 0, 1, -1, 2, -2, ...
fn sample_point(i: usize) -> Rational {
    let k = i.div_ceil(2) as i64;
    let v = if i % 2 == 1 { k } else { -k };
    Rational::from_integer(v.into())
}

/// Coefficients (ascending) of the unique polynomial of degree `< n` through
/// the `n` points, by Newton divided differences.
pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Vec<Rational> {
    assert_eq!(xs.len(), ys.len());
    let n = xs.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = &xs[i] - &xs[i - level];
            dd[i] = num / den;
        }
    }
    // Horner on the Newton form.
    let mut acc: Vec<Rational> = Vec::new();
    for i in (0..n).rev() {
        // acc = acc * (x - xs[i]) + dd[i]
        let mut next = vec![Rational::zero(); acc.len() + 1];
        for (k, c) in acc.iter().enumerate() {
            next[k + 1] += c;
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        acc = next;
    }
    qpoly::trim(&mut acc);
    acc
}

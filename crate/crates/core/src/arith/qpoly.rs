//! Bare coefficient-vector helpers for polynomials over `Q`, used by the
//! field layer before the full [`crate::poly::Polynomial`] type is in play.
//! Vectors are ascending by degree and kept trimmed.

use super::Rational;
use num_traits::{One, Zero};

pub fn trim(v: &mut Vec<Rational>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(&mut out);
    out
}

/// Division with remainder; `b` must be nonzero.
pub fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b.last().unwrap().recip();
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead_inv;
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &c * y;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    (q, r)
}

/// Extended Euclid: returns `(g, s)` with `s*a ≡ g (mod b)` and `g` monic.
pub fn ext_gcd_left(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![Rational::one()], Vec::new());
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1);
        let s2 = sub(&s0, &mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if let Some(lc) = r0.last().cloned() {
        let inv = lc.recip();
        for c in r0.iter_mut().chain(s0.iter_mut()) {
            *c *= &inv;
        }
    }
    (r0, s0)
}

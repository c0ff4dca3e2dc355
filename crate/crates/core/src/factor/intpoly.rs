//! Integer polynomials as ascending `Vec<BigInt>`, trimmed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type ZPoly = Vec<BigInt>;

pub fn trim(v: &mut ZPoly) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

pub fn degree(v: &[BigInt]) -> usize {
    v.len().saturating_sub(1)
}

pub fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Divides out the content and makes the leading coefficient positive.
pub fn primitive_part(v: &[BigInt]) -> ZPoly {
    let mut c = content(v);
    if c.is_zero() {
        return Vec::new();
    }
    if v.last().unwrap().is_negative() {
        c = -c;
    }
    v.iter().map(|x| x / &c).collect()
}

pub fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
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

pub fn eval(a: &[BigInt], x: &BigInt) -> BigInt {
    a.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Exact quotient `a / b` over `Z`, or `None` if `b` does not divide `a`.
pub fn div_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    assert!(!b.is_empty());
    let mut r = a.to_vec();
    trim(&mut r);
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut q = vec![BigInt::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let top = r.last().unwrap();
        let (c, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let shift = r.len() - b.len();
        for (j, y) in b.iter().enumerate() {
            r[shift + j] -= &c * y;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
        if !r.is_empty() && r.len() < b.len() {
            return None;
        }
    }
    Some(q)
}

/// `ceil(sqrt(sum a_i^2))`
pub fn norm2_ceil(a: &[BigInt]) -> BigInt {
    let s: BigInt = a.iter().map(|c| c * c).sum();
    let r = s.sqrt();
    if &r * &r == s {
        r
    } else {
        r + 1
    }
}

/// Non-negative residue of `x` modulo `m`.
pub fn modp(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x % m;
    if r.is_negative() {
        r + m
    } else {
        r
    }
}

/// Residue of `x` in `(-m/2, m/2]`.
pub fn symmetric(x: &BigInt, m: &BigInt) -> BigInt {
    let r = modp(x, m);
    if &r * 2 > *m {
        r - m
    } else {
        r
    }
}

pub fn to_fp(a: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = a
        .iter()
        .map(|c| {
            let r = modp(c, &pb);
            r.iter_u64_digits().next().unwrap_or(0)
        })
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn from_fp(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Inverse of `a` modulo `m`, assuming `gcd(a, m) = 1`.
pub fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = modp(a, m).extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    modp(&e.x, m)
}

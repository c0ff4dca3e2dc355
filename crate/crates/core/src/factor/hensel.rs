//! Multifactor quadratic Hensel lifting over `Z / p^k`.
//!
//! The monic modular factors are arranged in a balanced binary tree; each
//! node lifts a two-factor split `f ≡ g h` together with its Bézout
//! cofactors, doubling the precision per step.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::fp::{Fp, FpPoly};
use super::intpoly::{self, inv_mod, modp, ZPoly};

fn reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    let mut v: ZPoly = a.iter().map(|c| modp(c, m)).collect();
    intpoly::trim(&mut v);
    v
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    reduce(&intpoly::mul(a, b), m)
}

fn add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let v: ZPoly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect();
    reduce(&v, m)
}

fn sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let v: ZPoly = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect();
    reduce(&v, m)
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic(a: &[BigInt], h: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    debug_assert!(h.last().is_some_and(One::is_one));
    let mut r = reduce(a, m);
    if r.len() < h.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - h.len() + 1];
    while r.len() >= h.len() {
        let shift = r.len() - h.len();
        let c = r.last().unwrap().clone();
        if !c.is_zero() {
            for (j, y) in h.iter().enumerate() {
                r[shift + j] = modp(&(&r[shift + j] - &c * y), m);
            }
        }
        q[shift] = c;
        r.pop();
    }
    intpoly::trim(&mut r);
    intpoly::trim(&mut q);
    (q, r)
}

struct Split {
    g: ZPoly,
    h: ZPoly,
    s: ZPoly,
    t: ZPoly,
}

/// One quadratic step: from `f ≡ g h`, `s g + t h ≡ 1 (mod m)` to the same
/// relations modulo `m^2`, with `h` kept monic.
fn hensel_step(f: &[BigInt], st: Split, m: &BigInt) -> (Split, BigInt) {
    let m2 = m * m;
    let Split { g, h, s, t } = st;
    let e = sub_mod(f, &intpoly::mul(&g, &h), &m2);
    let (q, r) = divrem_monic(&mul_mod(&s, &e, &m2), &h, &m2);
    let g_new = add_mod(&add_mod(&g, &intpoly::mul(&t, &e), &m2), &intpoly::mul(&q, &g), &m2);
    let h_new = add_mod(&h, &r, &m2);
    let b = sub_mod(
        &add_mod(&intpoly::mul(&s, &g_new), &intpoly::mul(&t, &h_new), &m2),
        &[BigInt::one()],
        &m2,
    );
    let (c, d) = divrem_monic(&mul_mod(&s, &b, &m2), &h_new, &m2);
    let s_new = sub_mod(&s, &d, &m2);
    let t_new = sub_mod(&sub_mod(&t, &intpoly::mul(&t, &b), &m2), &intpoly::mul(&c, &g_new), &m2);
    (
        Split {
            g: g_new,
            h: h_new,
            s: s_new,
            t: t_new,
        },
        m2,
    )
}

/// Lifts `f ≡ lc(f) * ∏ factors (mod p)` to monic factors modulo
/// `p^(2^j) >= target`. Returns the lifted factors (in the input order) and
/// the final modulus.
pub fn lift(f: &[BigInt], factors: &[FpPoly], p: u64, target: &BigInt) -> (Vec<ZPoly>, BigInt) {
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    while &modulus < target {
        modulus = &modulus * &modulus;
    }
    let mut out = Vec::with_capacity(factors.len());
    lift_node(f, factors, p, &modulus, &mut out);
    (out, modulus)
}

fn lift_node(f: &[BigInt], factors: &[FpPoly], p: u64, modulus: &BigInt, out: &mut Vec<ZPoly>) {
    if factors.len() == 1 {
        let inv = inv_mod(f.last().unwrap(), modulus);
        out.push(reduce(&f.iter().map(|c| c * &inv).collect::<Vec<_>>(), modulus));
        return;
    }
    let fp = Fp::new(p);
    let pb = BigInt::from(p);
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[FpPoly]| fs.iter().fold(vec![1u64], |acc, g| fp.mul(&acc, g));
    let lc = intpoly::to_fp(&[f.last().unwrap().clone()], p)[0];
    let g0 = fp.scale(&prod(left), lc);
    let h0 = prod(right);
    let (one, s0, t0) = fp.ext_gcd(&g0, &h0);
    debug_assert_eq!(one, vec![1]);
    // Normalise degrees: deg s < deg h, deg t < deg g.
    let (q, s0) = fp.divrem(&s0, &h0);
    let t0 = fp.add(&t0, &fp.mul(&q, &g0));
    let mut st = Split {
        g: intpoly::from_fp(&g0),
        h: intpoly::from_fp(&h0),
        s: intpoly::from_fp(&s0),
        t: intpoly::from_fp(&t0),
    };
    let mut m = pb;
    while &m < modulus {
        let (next, m2) = hensel_step(f, st, &m);
        st = next;
        m = m2;
    }
    debug_assert_eq!(&m, modulus);
    lift_node(&st.g, left, p, modulus, out);
    lift_node(&st.h, right, p, modulus, out);
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::fp::Fp;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn lifted_product_matches_modulo_target() {
        // (2x - 1)(3x + 1)(x^2 - 7), squarefree mod 11
        let f = intpoly::mul(&intpoly::mul(&z(&[-1, 2]), &z(&[1, 3])), &z(&[-7, 0, 1]));
        let p = 11;
        let fp = Fp::new(p);
        let fpoly = fp.monic(&intpoly::to_fp(&f, p));
        assert!(fp.is_squarefree(&fpoly));
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let fs = fp.factor_squarefree(&fpoly, &mut rng);
        let (lifted, m) = lift(&f, &fs, p, &BigInt::from(10_000_000));
        assert!(m >= BigInt::from(10_000_000));
        let lc = f.last().unwrap().clone();
        let prod = lifted.iter().fold(vec![lc], |acc, g| mul_mod(&acc, g, &m));
        assert_eq!(prod, reduce(&f, &m));
        for g in &lifted {
            assert!(g.last().unwrap().is_one());
        }
    }
}

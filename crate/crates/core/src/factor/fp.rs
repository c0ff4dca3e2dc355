//! Polynomials over a prime field `F_p` (odd `p < 2^32`), ascending
//! `Vec<u64>` kept trimmed, and their factorisation: distinct-degree
//! splitting followed by Cantor–Zassenhaus equal-degree splitting.

use num_bigint::BigUint;
use rand::Rng;

pub type FpPoly = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub struct Fp {
    pub p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 2 && p < (1 << 32));
        Fp { p }
    }

    #[inline]
    fn mulm(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    #[inline]
    fn addm(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    fn subm(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow_scalar(a, self.p - 2)
    }

    fn pow_scalar(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mulm(acc, a);
            }
            a = self.mulm(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn trim(v: &mut FpPoly) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.addm(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0));
        }
        Self::trim(&mut out);
        out
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let mut out = vec![0; a.len().max(b.len())];
        for (i, o) in out.iter_mut().enumerate() {
            *o = self.subm(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0));
        }
        Self::trim(&mut out);
        out
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> FpPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Self::trim(&mut out);
        out
    }

    pub fn scale(&self, a: &[u64], c: u64) -> FpPoly {
        let mut out: FpPoly = a.iter().map(|&x| self.mulm(x, c)).collect();
        Self::trim(&mut out);
        out
    }

    pub fn monic(&self, a: &[u64]) -> FpPoly {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    pub fn divrem(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        let mut r = a.to_vec();
        Self::trim(&mut r);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let inv = self.inv(*b.last().unwrap());
        let mut q = vec![0; r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let top = *r.last().unwrap();
            let shift = r.len() - b.len();
            if top != 0 {
                let c = self.mulm(top, inv);
                for (j, &y) in b.iter().enumerate() {
                    r[shift + j] = self.subm(r[shift + j], self.mulm(c, y));
                }
                q[shift] = c;
            }
            r.pop();
        }
        Self::trim(&mut r);
        Self::trim(&mut q);
        (q, r)
    }

    pub fn rem(&self, a: &[u64], b: &[u64]) -> FpPoly {
        self.divrem(a, b).1
    }

    /// Monic gcd.
    pub fn gcd(&self, a: &[u64], b: &[u64]) -> FpPoly {
        let (mut x, mut y) = (a.to_vec(), b.to_vec());
        Self::trim(&mut x);
        Self::trim(&mut y);
        while !y.is_empty() {
            let r = self.rem(&x, &y);
            x = std::mem::replace(&mut y, r);
        }
        self.monic(&x)
    }

    /// `(g, s, t)` with `s*a + t*b = g`, `g` monic.
    pub fn ext_gcd(&self, a: &[u64], b: &[u64]) -> (FpPoly, FpPoly, FpPoly) {
        let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
        Self::trim(&mut r0);
        Self::trim(&mut r1);
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s2 = self.sub(&s0, &self.mul(&q, &s1));
            let t2 = self.sub(&t0, &self.mul(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            t0 = std::mem::replace(&mut t1, t2);
        }
        let lc = *r0.last().expect("gcd of zero polynomials");
        let inv = self.inv(lc);
        (self.scale(&r0, inv), self.scale(&s0, inv), self.scale(&t0, inv))
    }

    pub fn derivative(&self, a: &[u64]) -> FpPoly {
        let mut out: FpPoly = a
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| self.mulm(c, k as u64 % self.p))
            .collect();
        Self::trim(&mut out);
        out
    }

    pub fn is_squarefree(&self, f: &[u64]) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    fn powmod_bits(&self, base: &[u64], exp: &BigUint, modulus: &[u64]) -> FpPoly {
        let mut acc = vec![1u64];
        let b = self.rem(base, modulus);
        for i in (0..exp.bits()).rev() {
            acc = self.rem(&self.mul(&acc, &acc), modulus);
            if exp.bit(i) {
                acc = self.rem(&self.mul(&acc, &b), modulus);
            }
        }
        acc
    }

    pub fn powmod(&self, base: &[u64], exp: u64, modulus: &[u64]) -> FpPoly {
        self.powmod_bits(base, &BigUint::from(exp), modulus)
    }

    /// Distinct-degree factorisation of a monic squarefree `f`: pairs
    /// `(g, i)` where `g` is the product of all irreducible factors of
    /// degree `i`.
    pub fn distinct_degree(&self, f: &[u64]) -> Vec<(FpPoly, usize)> {
        let mut out = Vec::new();
        let mut rest = f.to_vec();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let mut i = 0;
        while rest.len() > 2 * (i + 1) {
            i += 1;
            h = self.powmod(&h, self.p, &rest);
            let g = self.gcd(&self.sub(&h, &x), &rest);
            if g.len() > 1 {
                rest = self.divrem(&rest, &g).0;
                h = self.rem(&h, &rest);
                out.push((g, i));
            }
        }
        if rest.len() > 1 {
            let d = rest.len() - 1;
            out.push((rest, d));
        }
        out
    }

    /// Splits a monic squarefree `g` whose irreducible factors all have
    /// degree `d`.
    pub fn equal_degree<R: Rng>(&self, g: &[u64], d: usize, rng: &mut R) -> Vec<FpPoly> {
        let n = g.len() - 1;
        if n == d {
            return vec![g.to_vec()];
        }
        let exp = (BigUint::from(self.p).pow(d as u32) - 1u32) / 2u32;
        loop {
            let mut a: FpPoly = (0..n).map(|_| rng.gen_range(0..self.p)).collect();
            Self::trim(&mut a);
            if a.len() < 2 {
                continue;
            }
            let mut split = self.gcd(&a, g);
            if split.len() == 1 {
                let b = self.powmod_bits(&a, &exp, g);
                split = self.gcd(&self.sub(&b, &[1]), g);
            }
            if split.len() > 1 && split.len() < g.len() {
                let other = self.divrem(g, &split).0;
                let mut out = self.equal_degree(&split, d, rng);
                out.extend(self.equal_degree(&other, d, rng));
                return out;
            }
        }
    }

    /// Monic irreducible factors of a monic squarefree polynomial.
    pub fn factor_squarefree<R: Rng>(&self, f: &[u64], rng: &mut R) -> Vec<FpPoly> {
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(f) {
            out.extend(self.equal_degree(&g, d, rng));
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn factors_mod_p_multiply_back() {
        let fp = Fp::new(7);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        // x^8 - 1 over F_7
        let mut f = vec![6u64];
        f.extend(vec![0; 7]);
        f.push(1);
        assert!(fp.is_squarefree(&f));
        let fs = fp.factor_squarefree(&f, &mut rng);
        let prod = fs.iter().fold(vec![1u64], |acc, g| fp.mul(&acc, g));
        assert_eq!(prod, f);
        // 7 ≡ 3 (mod 4), so x^8 - 1 splits as 2 linear and 3 quadratic factors.
        let mut degs: Vec<usize> = fs.iter().map(|g| g.len() - 1).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn ext_gcd_identity() {
        let fp = Fp::new(11);
        let a = vec![1, 2, 3];
        let b = vec![5, 0, 1, 1];
        let (g, s, t) = fp.ext_gcd(&a, &b);
        assert_eq!(g, vec![1]);
        assert_eq!(fp.add(&fp.mul(&s, &a), &fp.mul(&t, &b)), vec![1]);
    }
}

//! Factorisation of squarefree primitive integer polynomials: modular
//! factorisation at a few primes, Hensel lifting at the most economical
//! one, then recombination of lifted factors by subset search.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::fp::{Fp, FpPoly};
use super::hensel;
use super::intpoly::{self, symmetric, ZPoly};

/// How many usable primes to inspect before choosing one.
const PRIMES_TO_SAMPLE: usize = 7;
const PRIME_SCAN_LIMIT: usize = 400;

/// Irreducible factors over `Z` of a primitive, squarefree `f` with positive
/// leading coefficient and `f(0) != 0`. Each factor is primitive with a
/// positive leading coefficient; their product is `f`.
pub fn factor_squarefree<R: Rng>(f: &ZPoly, rng: &mut R) -> Vec<ZPoly> {
    let n = intpoly::degree(f);
    if n <= 1 {
        return vec![f.clone()];
    }
    debug_assert!(!f[0].is_zero());

    let lc = f.last().unwrap().clone();
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut allowed = vec![true; n + 1];
    let mut sampled = 0;
    for p in odd_primes().take(PRIME_SCAN_LIMIT) {
        if (&lc % p).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let fbar = intpoly::to_fp(f, p);
        if fbar.len() != f.len() || !fp.is_squarefree(&fbar) {
            continue;
        }
        let factors = fp.factor_squarefree(&fp.monic(&fbar), rng);
        if factors.len() == 1 {
            return vec![f.clone()];
        }
        let reachable = subset_degree_sums(&factors, n);
        for (a, r) in allowed.iter_mut().zip(&reachable) {
            *a &= *r;
        }
        if allowed[1..n].iter().all(|a| !a) {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        sampled += 1;
        if sampled == PRIMES_TO_SAMPLE {
            break;
        }
    }
    let (p, factors) = best.expect("no usable prime for a squarefree polynomial");

    let bound = coefficient_bound(f);
    let target = bound * 2 + 1;
    let (lifted, modulus) = hensel::lift(f, &factors, p, &target);
    recombine(f.clone(), lifted, &modulus, &allowed)
}

/// Bound on the coefficients of `lc(f)/lc(g) * g` for any factor `g` of `f`:
/// `|lc(f)| * 2^n * ||f||_2`.
fn coefficient_bound(f: &ZPoly) -> BigInt {
    let n = intpoly::degree(f);
    let lc = f.last().unwrap().abs();
    lc * (BigInt::one() << n) * intpoly::norm2_ceil(f)
}

fn subset_degree_sums(factors: &[FpPoly], n: usize) -> Vec<bool> {
    let mut reach = vec![false; n + 1];
    reach[0] = true;
    for g in factors {
        let d = g.len() - 1;
        for s in (d..=n).rev() {
            if reach[s - d] {
                reach[s] = true;
            }
        }
    }
    reach
}

fn recombine(mut f: ZPoly, mut lifted: Vec<ZPoly>, m: &BigInt, allowed: &[bool]) -> Vec<ZPoly> {
    let mut found = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= lifted.len() {
        let lc = f.last().unwrap().clone();
        let f0 = &lc * &f[0];
        let f_at_1 = intpoly::eval(&f, &BigInt::one());
        let f_at_m1 = intpoly::eval(&f, &-BigInt::one());
        let r = lifted.len();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            let deg: usize = idx.iter().map(|&i| lifted[i].len() - 1).sum();
            if allowed[deg] {
                // Trailing-coefficient test before building the product.
                let c0 = idx.iter().fold(lc.clone(), |acc, &i| (acc * &lifted[i][0]) % m);
                let c0 = symmetric(&c0, m);
                if !c0.is_zero() && (&f0 % &c0).is_zero() {
                    let g = idx.iter().fold(vec![lc.clone()], |acc, &i| {
                        intpoly::mul(&acc, &lifted[i]).into_iter().map(|c| c % m).collect()
                    });
                    let g: ZPoly = g.iter().map(|c| symmetric(c, m)).collect();
                    let g = intpoly::primitive_part(&g);
                    if divides_at(&g, &f_at_1, 1) && divides_at(&g, &f_at_m1, -1) {
                        if let Some(q) = intpoly::div_exact(&f, &g) {
                            found.push(g);
                            f = q;
                            let mut k = 0;
                            lifted.retain(|_| {
                                let keep = !idx.contains(&k);
                                k += 1;
                                keep
                            });
                            continue 'outer;
                        }
                    }
                }
            }
            if !next_combination(&mut idx, r) {
                break;
            }
        }
        size += 1;
    }
    if intpoly::degree(&f) > 0 {
        found.push(intpoly::primitive_part(&f));
    }
    found
}

/// Cheap necessary condition: `g(x)` divides `f(x)` at a small integer.
fn divides_at(g: &ZPoly, f_at: &BigInt, x: i64) -> bool {
    let gv = intpoly::eval(g, &BigInt::from(x));
    if gv.is_zero() {
        return f_at.is_zero();
    }
    f_at.is_multiple_of(&gv)
}

fn next_combination(idx: &mut [usize], n: usize) -> bool {
    let k = idx.len();
    for i in (0..k).rev() {
        if idx[i] < n - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Odd primes in increasing order.
pub fn odd_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|&n| {
        let mut d = 3;
        while d * d <= n {
            if n % d == 0 {
                return false;
            }
            d += 2;
        }
        true
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn sorted(mut v: Vec<ZPoly>) -> Vec<ZPoly> {
        v.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        v
    }

    #[test]
    fn x4_plus_1_is_irreducible() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let f = z(&[1, 0, 0, 0, 1]);
        assert_eq!(factor_squarefree(&f, &mut rng), vec![f]);
    }

    #[test]
    fn splits_x4_minus_1() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let got = sorted(factor_squarefree(&z(&[-1, 0, 0, 0, 1]), &mut rng));
        assert_eq!(got, vec![z(&[-1, 1]), z(&[1, 1]), z(&[1, 0, 1])]);
    }

    #[test]
    fn non_monic_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let a = z(&[-1, 2]);
        let b = z(&[1, 3, 0, 5]);
        let c = z(&[7, 0, -2, 0, 4, 1]);
        let f = intpoly::mul(&intpoly::mul(&a, &b), &c);
        let got = sorted(factor_squarefree(&f, &mut rng));
        assert_eq!(got, sorted(vec![a, b, c]));
    }

    #[test]
    fn primes_iterator() {
        let v: Vec<u64> = odd_primes().take(6).collect();
        assert_eq!(v, vec![3, 5, 7, 11, 13, 17]);
    }
}

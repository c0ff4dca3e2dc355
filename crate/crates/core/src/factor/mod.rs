//! Exact factorisation of univariate polynomials over `Q` (Zassenhaus) and
//! over number fields (Trager's norm method), with irreducibility tests and
//! square roots in the field built on top.

mod fp;
mod hensel;
mod intpoly;
mod trager;
mod zassenhaus;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{rational_sqrt, FieldElement, NumberField, Rational};
use crate::error::{Error, Result};
use crate::poly::{to_integer_coeffs, Polynomial};

pub(crate) use zassenhaus::odd_primes;

/// Seed for the randomised parts of modular factorisation. Results do not
/// depend on it (factorisations are unique), only running time may.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorOptions {
    pub seed: u64,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions { seed: 0x7a55_e4a0 }
    }
}

impl FactorOptions {
    pub fn with_seed(seed: u64) -> Self {
        FactorOptions { seed }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// `unit * ∏ factor^multiplicity`, factors monic, irreducible and pairwise
/// distinct, sorted by degree and then coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub factors: Vec<(Polynomial, usize)>,
}

impl Factorization {
    /// Multiplies the factorisation back out.
    pub fn expand(&self) -> Polynomial {
        let mut acc = Polynomial::constant(self.unit.clone());
        for (g, m) in &self.factors {
            acc = &acc * &g.pow(*m as u32);
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    fn sort(&mut self) {
        self.factors.sort_by(|(a, ma), (b, mb)| a.lex_cmp(b).then(ma.cmp(mb)));
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.unit.is_one() || self.factors.is_empty() {
            parts.push(format!("({})", self.unit));
        }
        for (g, m) in &self.factors {
            if *m == 1 {
                parts.push(format!("({g})"));
            } else {
                parts.push(format!("({g})^{m}"));
            }
        }
        f.write_str(&parts.join(" * "))
    }
}

pub fn factor_over_q(p: &Polynomial) -> Result<Factorization> {
    factor_over_q_with(p, &FactorOptions::default())
}

/// Complete factorisation over `Q`; `p` must have rational coefficients.
pub fn factor_over_q_with(p: &Polynomial, opts: &FactorOptions) -> Result<Factorization> {
    let coeffs = p
        .rational_coeffs()
        .ok_or_else(|| Error::Domain("factor_over_q needs rational coefficients".into()))?;
    let q = NumberField::rationals();
    let p = Polynomial::from_rationals(&q, &coeffs);
    let unit = p
        .leading()
        .cloned()
        .ok_or_else(|| Error::Domain("cannot factor the zero polynomial".into()))?;
    let mut out = Factorization {
        unit,
        factors: Vec::new(),
    };
    let monic = p.monic();
    let v = monic.t_valuation().unwrap_or(0);
    if v > 0 {
        out.factors.push((Polynomial::t(&q), v));
    }
    let core = monic.shr(v);
    if core.is_constant() {
        out.sort();
        return Ok(out);
    }
    let mut rng = opts.rng();
    let parts = if is_squarefree_q(&core.rational_coeffs().unwrap()) {
        vec![(core, 1)]
    } else {
        core.squarefree()?
    };
    for (part, mult) in parts {
        for g in factor_squarefree_q(&part.rational_coeffs().unwrap(), &mut rng) {
            out.factors.push((g, mult));
        }
    }
    out.sort();
    Ok(out)
}

/// Irreducible monic factors over `Q` of a squarefree rational polynomial
/// (any field, coefficients must be rational).
pub(crate) fn factor_over_q_with_rng(p: &Polynomial, rng: &mut ChaCha8Rng) -> Result<Vec<Polynomial>> {
    let coeffs = p
        .rational_coeffs()
        .ok_or_else(|| Error::Domain("expected rational coefficients".into()))?;
    let q = NumberField::rationals();
    let p = Polynomial::from_rationals(&q, &coeffs).monic();
    let v = p.t_valuation().unwrap_or(0);
    let mut out = Vec::new();
    if v > 0 {
        out.push(Polynomial::t(&q));
    }
    let core = p.shr(v);
    if !core.is_constant() {
        out.extend(factor_squarefree_q(&core.rational_coeffs().unwrap(), rng));
    }
    Ok(out)
}

/// Irreducible monic factors over `Q` of a squarefree rational polynomial
/// with nonzero constant term.
fn factor_squarefree_q(p: &[Rational], rng: &mut ChaCha8Rng) -> Vec<Polynomial> {
    let q = NumberField::rationals();
    let (ints, _) = to_integer_coeffs(p);
    let prim = intpoly::primitive_part(&ints);
    zassenhaus::factor_squarefree(&prim, rng)
        .into_iter()
        .map(|g| int_poly_to_monic(&q, &g))
        .collect()
}

fn int_poly_to_monic(q: &NumberField, g: &[BigInt]) -> Polynomial {
    let lc = Rational::from_integer(g.last().unwrap().clone());
    let coeffs: Vec<Rational> = g.iter().map(|c| Rational::from_integer(c.clone()) / &lc).collect();
    Polynomial::from_rationals(q, &coeffs)
}

/// Proof of squarefreeness by a modular witness: if `p mod ℓ` keeps its
/// degree and is squarefree for some prime `ℓ`, then `p` is squarefree over
/// `Q`. `false` means no witness was found among the primes tried, which
/// almost always means `p` has a repeated factor.
pub(crate) fn has_squarefree_witness(p: &[Rational]) -> bool {
    let (ints, _) = to_integer_coeffs(p);
    let prim = intpoly::primitive_part(&ints);
    if prim.len() <= 2 {
        return true;
    }
    let lc = prim.last().unwrap().clone();
    odd_primes()
        .skip_while(|&l| l < 1000)
        .filter(|&l| !(&lc % l).is_zero())
        .take(20)
        .any(|l| {
            let f = fp::Fp::new(l);
            let r = intpoly::to_fp(&prim, l);
            f.is_squarefree(&r)
        })
}

fn is_squarefree_q(p: &[Rational]) -> bool {
    if has_squarefree_witness(p) {
        return true;
    }
    let q = NumberField::rationals();
    let poly = Polynomial::from_rationals(&q, p);
    poly.gcd(&poly.derivative()).map(|g| g.is_constant()).unwrap_or(false)
}

pub fn factor_over_nf(p: &Polynomial) -> Result<Factorization> {
    factor_over_nf_with(p, &FactorOptions::default())
}

/// Complete factorisation over the coefficient field of `p`.
pub fn factor_over_nf_with(p: &Polynomial, opts: &FactorOptions) -> Result<Factorization> {
    let field = p.field().clone();
    if field.is_rationals() {
        let mut f = factor_over_q_with(p, opts)?;
        f.unit = field.from_rational(f.unit.coords()[0].clone());
        f.factors = f
            .factors
            .into_iter()
            .map(|(g, m)| Ok((g.embed(&field)?, m)))
            .collect::<Result<_>>()?;
        return Ok(f);
    }
    let unit = p
        .leading()
        .cloned()
        .ok_or_else(|| Error::Domain("cannot factor the zero polynomial".into()))?;
    let mut out = Factorization {
        unit,
        factors: Vec::new(),
    };
    let monic = p.monic();
    let v = monic.t_valuation().unwrap_or(0);
    if v > 0 {
        out.factors.push((Polynomial::t(&field), v));
    }
    let core = monic.shr(v);
    if core.is_constant() {
        out.sort();
        return Ok(out);
    }
    let mut rng = opts.rng();
    let norm0 = crate::poly::poly_resultant(&core);
    let parts = if has_squarefree_witness(&norm0.rational_coeffs().unwrap()) {
        vec![(core, 1, Some(norm0))]
    } else {
        core.squarefree()?.into_iter().map(|(g, m)| (g, m, None)).collect()
    };
    for (part, mult, norm) in parts {
        for g in trager::factor_squarefree(&part, norm, &mut rng)? {
            out.factors.push((g, mult));
        }
    }
    out.sort();
    Ok(out)
}

pub fn is_irreducible(p: &Polynomial) -> Result<bool> {
    is_irreducible_with(p, &FactorOptions::default())
}

/// True iff `p` (of degree at least one) is irreducible over its field.
pub fn is_irreducible_with(p: &Polynomial, opts: &FactorOptions) -> Result<bool> {
    match p.degree() {
        None | Some(0) => Err(Error::Domain("irreducibility is undefined for constants".into())),
        Some(1) => Ok(true),
        Some(_) => Ok(factor_over_nf_with(p, opts)?.is_irreducible()),
    }
}

pub fn sqrt_in_field(c: &FieldElement) -> Result<Option<FieldElement>> {
    sqrt_in_field_with(c, &FactorOptions::default())
}

/// A square root of `c` in its field, if one exists (found as a root of
/// `x^2 - c`).
pub fn sqrt_in_field_with(c: &FieldElement, opts: &FactorOptions) -> Result<Option<FieldElement>> {
    let field = c.field();
    if c.is_zero() {
        return Ok(Some(field.zero()));
    }
    if let Some(q) = c.as_rational() {
        if let Some(r) = rational_sqrt(q) {
            return Ok(Some(field.from_rational(r)));
        }
        if field.is_rationals() {
            return Ok(None);
        }
    }
    // N(r^2) = N(r)^2, so the norm must be a rational square.
    if rational_sqrt(&c.norm()).is_none() {
        return Ok(None);
    }
    let x2_minus_c = Polynomial::new(field, vec![-c, field.zero(), field.one()]);
    let fact = factor_over_nf_with(&x2_minus_c, opts)?;
    Ok(fact
        .factors
        .iter()
        .find(|(g, _)| g.degree() == Some(1))
        .map(|(g, _)| -&g.coeff(0)))
}

#[cfg(test)]
mod tests;

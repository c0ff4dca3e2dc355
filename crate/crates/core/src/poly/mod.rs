//! Dense univariate polynomials in `t` over a number field.

mod normal;
mod resultant;

pub use normal::UnitNormalForm;
pub use resultant::{interpolate, poly_resultant};

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{fmt_rational, FieldElement, NumberField, Rational};
use crate::error::{Error, Result};

/// Polynomial with coefficients in a [`NumberField`], indexed by degree.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: NumberField,
    coeffs: Vec<FieldElement>,
}

impl Polynomial {
    pub fn new(field: &NumberField, mut coeffs: Vec<FieldElement>) -> Self {
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        while coeffs.last().is_some_and(FieldElement::is_zero) {
            coeffs.pop();
        }
        Polynomial {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_rationals(field: &NumberField, coeffs: &[Rational]) -> Self {
        Self::new(field, coeffs.iter().map(|q| field.from_rational(q.clone())).collect())
    }

    pub fn from_ints(field: &NumberField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&n| field.from_int(n)).collect())
    }

    pub fn zero(field: &NumberField) -> Self {
        Polynomial {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: &NumberField) -> Self {
        Self::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        let field = c.field().clone();
        Self::new(&field, vec![c])
    }

    /// `c * t^k`
    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Self::new(&field, coeffs)
    }

    /// The variable `t`.
    pub fn t(field: &NumberField) -> Self {
        Self::monomial(field.one(), 1)
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<FieldElement> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> FieldElement {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(FieldElement::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Largest `k` with `t^k` dividing `self`; `None` for zero.
    pub fn t_valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// True when only even powers of `t` occur.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(FieldElement::is_zero)
    }

    /// Rational coefficients, when every coefficient lies in `Q`.
    pub fn rational_coeffs(&self) -> Option<Vec<Rational>> {
        self.coeffs.iter().map(|c| c.as_rational().cloned()).collect()
    }

    /// Reinterprets a polynomial with rational coefficients over `field`.
    pub fn embed(&self, field: &NumberField) -> Result<Self> {
        let q = self
            .rational_coeffs()
            .ok_or_else(|| Error::Domain("coefficients are not rational".into()))?;
        Ok(Self::from_rationals(field, &q))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn add_impl(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|k| match (self.coeffs.get(k), other.coeffs.get(k)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        Self::new(&self.field, coeffs)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.field);
        }
        let d = self.field.degree();
        // Accumulate products as unreduced polynomials in z, reduce once per
        // output coefficient.
        let n = self.coeffs.len() + other.coeffs.len() - 1;
        let mut acc: Vec<Vec<Rational>> = vec![vec![Rational::zero(); 2 * d - 1]; n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let slot = &mut acc[i + j];
                for (p, x) in a.coords().iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (q, y) in b.coords().iter().enumerate() {
                        if !y.is_zero() {
                            slot[p + q] += x * y;
                        }
                    }
                }
            }
        }
        let coeffs = acc.into_iter().map(|v| self.field.element(v)).collect();
        Self::new(&self.field, coeffs)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_impl(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_impl(&-other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_impl(other))
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        Self::new(&self.field, self.coeffs.iter().map(|a| a.scale(q)).collect())
    }

    /// `t^k * self`
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![self.field.zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(&self.field, coeffs)
    }

    /// Drops the factor `t^k`; the caller guarantees divisibility.
    pub fn shr(&self, k: usize) -> Self {
        debug_assert!(self.coeffs.iter().take(k).all(FieldElement::is_zero));
        Self::new(&self.field, self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Scales to leading coefficient one. The zero polynomial is returned
    /// unchanged.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Division with remainder: `self = q * divisor + r`, `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check(divisor)?;
        let lc = divisor.leading().ok_or(Error::DivisionByZero)?;
        let lc_inv = lc.inverse()?;
        let dn = divisor.coeffs.len();
        let mut r = self.coeffs.clone();
        if r.len() < dn {
            return Ok((Self::zero(&self.field), self.clone()));
        }
        let mut q = vec![self.field.zero(); r.len() - dn + 1];
        while r.len() >= dn {
            let top = r.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = r.len() + 1 - dn;
            let c = if lc_inv.is_one() { top } else { &top * &lc_inv };
            for (j, b) in divisor.coeffs[..dn - 1].iter().enumerate() {
                if !b.is_zero() {
                    r[shift + j] = &r[shift + j] - &(&c * b);
                }
            }
            q[shift] = c;
        }
        Ok((Self::new(&self.field, q), Self::new(&self.field, r)))
    }

    /// Quotient of an exact division; a nonzero remainder is an error.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.divrem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Domain("polynomial division is not exact".into()))
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.divrem(self).map(|(_, r)| r.is_zero()).unwrap_or(false)
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Rational::from_integer((k as i64).into())))
            .collect();
        Self::new(&self.field, coeffs)
    }

    /// Monic greatest common divisor by the Euclidean remainder sequence,
    /// normalising each remainder to be monic. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let (mut a, mut b) = if self.coeffs.len() >= other.coeffs.len() {
            (self.monic(), other.monic())
        } else {
            (other.monic(), self.monic())
        };
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r.monic();
        }
        Ok(a)
    }

    /// Yun's squarefree decomposition: monic, pairwise coprime, squarefree
    /// parts with multiplicities, ascending by multiplicity. The product
    /// `∏ part^mult` equals `self.monic()`.
    pub fn squarefree(&self) -> Result<Vec<(Self, usize)>> {
        if self.is_zero() {
            return Err(Error::Domain("squarefree decomposition of the zero polynomial".into()));
        }
        let f = self.monic();
        let mut out = Vec::new();
        if f.is_constant() {
            return Ok(out);
        }
        let df = f.derivative();
        let a0 = f.gcd(&df)?;
        let mut b = f.exact_div(&a0)?;
        let mut c = df.exact_div(&a0)?;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        loop {
            let a = b.gcd(&d)?;
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            b = b.exact_div(&a)?;
            if b.is_constant() {
                break;
            }
            c = d.exact_div(&a)?;
            d = &c - &b.derivative();
            i += 1;
        }
        Ok(out)
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, c| &(&acc * x) + c)
    }

    /// Coordinates of `self(x)` for a rational `x`, without reducing: the
    /// coefficients are already reduced and `x` is a scalar.
    pub fn eval_rational(&self, x: &Rational) -> FieldElement {
        let d = self.field.degree();
        let mut acc = vec![Rational::zero(); d];
        for c in self.coeffs.iter().rev() {
            for (slot, y) in acc.iter_mut().zip(c.coords()) {
                *slot = &*slot * x + y;
            }
        }
        self.field.element(acc)
    }

    /// `p(t) -> p(-t)`
    pub fn substitute_neg_t(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        Self::new(&self.field, coeffs)
    }

    /// `p(t) -> p(t^2)`
    pub fn substitute_t_squared(&self) -> Self {
        let mut coeffs = Vec::with_capacity(2 * self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                coeffs.push(self.field.zero());
            }
            coeffs.push(c.clone());
        }
        Self::new(&self.field, coeffs)
    }

    /// `p(t) -> p(-t^2)`; the result is even and of twice the degree.
    pub fn substitute_neg_t_squared(&self) -> Self {
        self.substitute_neg_t().substitute_t_squared()
    }

    /// Taylor shift `p(t) -> p(t + c)`.
    pub fn shift(&self, c: &FieldElement) -> Self {
        let lin = Self::new(&self.field, vec![c.clone(), self.field.one()]);
        let mut acc = Self::zero(&self.field);
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(a.clone());
        }
        acc
    }

    /// `(-1)^deg * p(-t)`: the involution pairing `g(t)` with the factor
    /// that appears in `g(-t)`, normalised so monic stays monic.
    pub fn sigma_hat(&self) -> Self {
        let p = self.substitute_neg_t();
        match self.degree() {
            Some(d) if d % 2 == 1 => -&p,
            _ => p,
        }
    }

    pub fn unit_normalize(&self) -> Result<UnitNormalForm> {
        UnitNormalForm::of(self)
    }

    /// Equality up to the units `±t^k`.
    pub fn equal_up_to_unit(&self, other: &Self) -> Result<bool> {
        Ok(self.unit_normalize()?.poly == other.unit_normalize()?.poly)
    }

    /// Total order on coefficient lists (ascending degree, each coefficient
    /// compared by its power-basis coordinates). Shorter lists come first.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
                match a.coords().cmp(b.coords()) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        })
    }

    pub fn to_string_var(&self, var: &str) -> String {
        format_poly(self, var)
    }
}

fn format_poly(p: &Polynomial, var: &str) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, c) in p.coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        // Split into a sign and a magnitude when the coefficient is a single
        // term; otherwise parenthesise it.
        let (neg, body) = if let Some(q) = c.as_rational() {
            let mag = q.abs();
            let body = if k > 0 && mag.is_one() {
                mono.clone()
            } else if k > 0 {
                format!("{}*{mono}", fmt_rational(&mag))
            } else {
                fmt_rational(&mag)
            };
            (q.is_negative(), body)
        } else if c.is_monomial() {
            let neg = c.leading_coordinate().is_some_and(|q| q.is_negative());
            let mag = if neg { -c } else { c.clone() };
            let s = mag.to_expr_string();
            let body = if k > 0 { format!("{s}*{mono}") } else { s };
            (neg, body)
        } else {
            let s = format!("({})", c.to_expr_string());
            let body = if k > 0 { format!("{s}*{mono}") } else { s };
            (false, body)
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    out
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_poly(self, "t"))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", format_poly(self, "t"))
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                assert!(self.field == rhs.field, "field mismatch in polynomial arithmetic");
                $body(self, rhs)
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, |a: &Polynomial, b: &Polynomial| a.add_impl(b));
binop!(Sub, sub, |a: &Polynomial, b: &Polynomial| a.add_impl(&-b));
binop!(Mul, mul, |a: &Polynomial, b: &Polynomial| a.mul_impl(b));

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Clears denominators: returns integer coefficients (ascending) and the
/// positive scale `s` with `s * p = ints`.
pub(crate) fn to_integer_coeffs(p: &[Rational]) -> (Vec<num_bigint::BigInt>, num_bigint::BigInt) {
    let den = crate::arith::common_denominator(p);
    let d = Rational::from_integer(den.clone());
    let ints = p.iter().map(|q| (q * &d).to_integer()).collect();
    (ints, den)
}

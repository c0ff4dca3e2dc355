use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use super::{fmt_rational, linalg, qpoly, rat, Rational};
use crate::error::{Error, Result};
use crate::poly::Polynomial;

/// `Q[z]/(m(z))` for a monic irreducible rational `m`. Cheap to clone.
#[derive(Clone)]
pub struct NumberField(Arc<FieldData>);

struct FieldData {
    variable: String,
    /// Ascending coefficients, monic, length `degree + 1`.
    min_poly: Vec<Rational>,
}

impl NumberField {
    /// Builds the field after checking that `min_poly` (ascending
    /// coefficients) is monic, of degree at least one, and irreducible over Q.
    pub fn new(variable: &str, min_poly: Vec<Rational>) -> Result<Self> {
        let field = Self::new_unchecked(variable, min_poly)?;
        if field.degree() > 1 {
            let m = Polynomial::from_rationals(&Self::rationals(), field.min_poly());
            let fact = crate::factor::factor_over_q(&m)?;
            if fact.factors.len() != 1 || fact.factors[0].1 != 1 {
                return Err(Error::InvalidField(format!(
                    "minimal polynomial {} is reducible over Q",
                    field.min_poly_string()
                )));
            }
        }
        Ok(field)
    }

    /// Skips the irreducibility check. Arithmetic in a field built from a
    /// reducible polynomial is a ring with zero divisors; inversion can fail.
    pub fn new_unchecked(variable: &str, mut min_poly: Vec<Rational>) -> Result<Self> {
        qpoly::trim(&mut min_poly);
        if min_poly.len() < 2 {
            return Err(Error::InvalidField(
                "minimal polynomial must have degree at least 1".into(),
            ));
        }
        if !min_poly.last().unwrap().is_one() {
            return Err(Error::InvalidField("minimal polynomial must be monic".into()));
        }
        if variable.is_empty() || !variable.chars().all(|c| c.is_alphanumeric() || c == '_') {
            return Err(Error::InvalidField(format!("bad variable name `{variable}`")));
        }
        Ok(NumberField(Arc::new(FieldData {
            variable: variable.to_string(),
            min_poly,
        })))
    }

    /// The rationals, as `Q[z]/(z)`.
    pub fn rationals() -> Self {
        Self::new_unchecked("z", vec![rat(0), rat(1)]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.0.min_poly.len() - 1
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    pub fn variable(&self) -> &str {
        &self.0.variable
    }

    pub fn min_poly(&self) -> &[Rational] {
        &self.0.min_poly
    }

    pub fn min_poly_string(&self) -> String {
        format_power_basis(&self.0.min_poly, &self.0.variable)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coords: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    /// The class of `z`; in the degree-one field this is the rational root
    /// of the linear minimal polynomial.
    pub fn generator(&self) -> FieldElement {
        if self.degree() == 1 {
            return self.from_rational(-self.0.min_poly[0].clone());
        }
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[1] = Rational::one();
        FieldElement {
            field: self.clone(),
            coords,
        }
    }

    pub fn from_rational(&self, q: Rational) -> FieldElement {
        let mut coords = vec![Rational::zero(); self.degree()];
        coords[0] = q;
        FieldElement {
            field: self.clone(),
            coords,
        }
    }

    pub fn from_int(&self, n: i64) -> FieldElement {
        self.from_rational(rat(n))
    }

    /// Element with the given power-basis coordinates; any length is
    /// accepted and reduced modulo the minimal polynomial.
    pub fn element(&self, coords: Vec<Rational>) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coords: self.reduce(coords),
        }
    }

    /// Reduces an arbitrary rational polynomial in `z` to the power basis.
    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        let d = self.degree();
        let m = &self.0.min_poly;
        while v.len() > d {
            let c = v.pop().unwrap();
            if !c.is_zero() {
                let base = v.len() - d;
                for j in 0..d {
                    if !m[j].is_zero() {
                        v[base + j] -= &c * &m[j];
                    }
                }
            }
        }
        v.resize(d, Rational::zero());
        v
    }
}

impl PartialEq for NumberField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.variable == other.0.variable && self.0.min_poly == other.0.min_poly)
    }
}

impl Eq for NumberField {}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q({})/({})", self.variable(), self.min_poly_string())
    }
}

/// Element of a [`NumberField`], stored by its power-basis coordinates.
///
/// The arithmetic operator impls panic when the operands come from different
/// fields; the `try_*` methods return [`Error::FieldMismatch`] instead.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: NumberField,
    coords: Vec<Rational>,
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coords[0].is_one() && self.coords[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| &self.coords[0])
    }

    /// First nonzero coordinate in the power basis; used to fix signs.
    pub fn leading_coordinate(&self) -> Option<&Rational> {
        self.coords.iter().find(|c| !c.is_zero())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(&other.inverse()?))
    }

    fn add_unchecked(&self, other: &Self) -> Self {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        FieldElement {
            field: self.field.clone(),
            coords,
        }
    }

    fn sub_unchecked(&self, other: &Self) -> Self {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect();
        FieldElement {
            field: self.field.clone(),
            coords,
        }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.field.degree() == 1 {
            return self.field.from_rational(&self.coords[0] * &other.coords[0]);
        }
        let prod = qpoly::mul(&self.coords, &other.coords);
        FieldElement {
            field: self.field.clone(),
            coords: self.field.reduce(prod),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| c * q).collect(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.field.degree() == 1 {
            return Ok(self.field.from_rational(self.coords[0].recip()));
        }
        let mut a = self.coords.clone();
        qpoly::trim(&mut a);
        let (g, s) = qpoly::ext_gcd_left(&a, self.field.min_poly());
        if g.len() != 1 {
            // Only possible when the modulus is reducible.
            return Err(Error::DivisionByZero);
        }
        Ok(self.field.element(s))
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Matrix of multiplication by `self` on the power basis; column `j` is
    /// `self * z^j`.
    pub fn multiplication_matrix(&self) -> Vec<Vec<Rational>> {
        let d = self.field.degree();
        let mut cols = Vec::with_capacity(d);
        let mut basis = self.field.one();
        let z = self.field.generator();
        for _ in 0..d {
            cols.push(self.mul_unchecked(&basis).coords);
            basis = basis.mul_unchecked(&z);
        }
        (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Field norm down to `Q`: the determinant of the multiplication map.
    pub fn norm(&self) -> Rational {
        if self.field.degree() == 1 {
            return self.coords[0].clone();
        }
        linalg::det_rational(&self.multiplication_matrix())
    }

    /// Characteristic polynomial of multiplication by `self`, as a monic
    /// degree-`d` polynomial over `Q`. Computed as `Res_z(m(z), x - a(z))`.
    pub fn charpoly(&self) -> Polynomial {
        let q = NumberField::rationals();
        if self.field.degree() == 1 {
            return Polynomial::new(&q, vec![q.from_rational(-self.coords[0].clone()), q.one()]);
        }
        let x_minus_a = Polynomial::new(&self.field, vec![-self.clone(), self.field.one()]);
        crate::poly::poly_resultant(&x_minus_a)
    }

    /// True when the element is integral over `Z`, i.e. its characteristic
    /// polynomial has integer coefficients.
    pub fn is_algebraic_integer(&self) -> bool {
        self.charpoly()
            .coeffs()
            .iter()
            .all(|c| c.as_rational().is_some_and(|q| q.is_integer()))
    }

    /// Human-readable form that re-parses to the same element, e.g.
    /// `5/4*z^7 - 9/4*z^6 + 23/2`.
    pub fn to_expr_string(&self) -> String {
        let mut v = self.coords.clone();
        qpoly::trim(&mut v);
        format_power_basis(&v, self.field.variable())
    }

    /// True when the printed form is a single signed term (so it needs no
    /// parentheses as a coefficient).
    pub(crate) fn is_monomial(&self) -> bool {
        self.coords.iter().filter(|c| !c.is_zero()).count() <= 1
    }
}

/// Prints descending terms of an ascending coefficient vector.
pub(crate) fn format_power_basis(coeffs: &[Rational], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if k == 0 {
            out.push_str(&fmt_rational(&mag));
        } else if mag.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{}*{mono}", fmt_rational(&mag)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_expr_string())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_expr_string())
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                assert!(self.field == rhs.field, "field mismatch in arithmetic");
                self.$inner(rhs)
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
    };
}

binop!(Add, add, add_unchecked);
binop!(Sub, sub, sub_unchecked);
binop!(Mul, mul, mul_unchecked);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    fn cubic() -> NumberField {
        NumberField::new("z", vec![rat(-1), rat(1), rat(0), rat(1)]).unwrap()
    }

    #[test]
    fn reduction_by_min_poly() {
        let k = cubic();
        let z = k.generator();
        let z2 = &z * &z;
        // z^3 = 1 - z
        assert_eq!(&z * &z2, k.element(vec![rat(1), rat(-1)]));
    }

    #[test]
    fn inverse_of_generator() {
        let k = cubic();
        let inv = k.generator().inverse().unwrap();
        // 1/z = z^2 + 1, since z(z^2 + 1) = z^3 + z = 1
        assert_eq!(inv, k.element(vec![rat(1), rat(0), rat(1)]));
        assert!((&inv * &k.generator()).is_one());
    }

    #[test]
    fn rational_field_arith() {
        let q = NumberField::rationals();
        let s = q.from_rational(ratio(2, 3)) + q.from_rational(ratio(1, 6));
        assert_eq!(s.as_rational(), Some(&ratio(5, 6)));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let k = cubic();
        assert_eq!(k.one().try_div(&k.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let k = cubic();
        let q = NumberField::rationals();
        assert_eq!(k.one().try_add(&q.one()), Err(Error::FieldMismatch));
    }

    #[test]
    fn construction_checks() {
        assert!(NumberField::new("z", vec![rat(-1), rat(0), rat(2)]).is_err());
        // z^2 - 1 = (z - 1)(z + 1)
        assert!(matches!(
            NumberField::new("z", vec![rat(-1), rat(0), rat(1)]),
            Err(Error::InvalidField(_))
        ));
        assert!(NumberField::new("z", vec![rat(1)]).is_err());
    }

    #[test]
    fn charpoly_examples() {
        let k = cubic();
        let cp = k.generator().charpoly();
        assert_eq!(cp.to_string(), "t^3 + t - 1");
        assert_eq!(k.zero().charpoly().to_string(), "t^3");
        let half_z = k.generator().scale(&ratio(1, 2));
        assert_eq!(half_z.charpoly().to_string(), "t^3 + 1/4*t - 1/8");
    }

    #[test]
    fn algebraic_integers() {
        let k = cubic();
        assert!(k.generator().is_algebraic_integer());
        assert!(!k.generator().scale(&ratio(1, 2)).is_algebraic_integer());
    }

    #[test]
    fn printing() {
        let k = cubic();
        let e = k.element(vec![ratio(23, 2), rat(-1), ratio(5, 4)]);
        assert_eq!(e.to_string(), "5/4*z^2 - z + 23/2");
        assert_eq!(k.zero().to_string(), "0");
    }
}

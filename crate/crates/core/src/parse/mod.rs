//! Text syntax for field elements and polynomials.
//!
//! Expressions use `+ - * / ^`, parentheses, integer literals, the field
//! variable and the polynomial variable, for example
//! `t^10 + (-2*z^2 - 3*z - 7)*t^9 + 1` or `5/4 z^7 - 9/4 z^6 + 23/2`.
//! Juxtaposition multiplies. Division and negative exponents are only
//! allowed on constants (elements of the field).

mod expr;

use crate::arith::{NumberField, Rational};
use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::FieldElement;

pub use expr::Parser;

/// Parses a polynomial in `var` over `field`.
pub fn parse_polynomial(text: &str, field: &NumberField, var: &str) -> Result<Polynomial> {
    Parser::new(text, field, Some(var)).parse()
}

/// Parses a field element (no polynomial variable allowed).
pub fn parse_field_element(text: &str, field: &NumberField) -> Result<FieldElement> {
    let p = Parser::new(text, field, None).parse()?;
    Ok(p.coeff(0))
}

/// Parses a rational polynomial in `var`, returning ascending coefficients.
pub fn parse_rational_poly(text: &str, var: &str) -> Result<Vec<Rational>> {
    let q = NumberField::rationals();
    let p = Parser::new(text, &q, Some(var)).without_field_variable().parse()?;
    Ok(p.rational_coeffs().expect("coefficients over Q"))
}

/// Builds `Q(var)/(min_poly)` from its textual minimal polynomial; `min_poly`
/// is a polynomial in `var` and must be monic and irreducible.
pub fn parse_field(var: &str, min_poly: &str) -> Result<NumberField> {
    let coeffs = parse_rational_poly(min_poly, var)?;
    match NumberField::new(var, coeffs) {
        Err(Error::InvalidField(m)) => Err(Error::Validation(format!("field: {m}"))),
        other => other,
    }
}

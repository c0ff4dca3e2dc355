//! Exact SL₂ matrices over a number field and representations of presented
//! groups: word evaluation, validation, trace identities and restriction to
//! the index-2 kernel.

use std::fmt;

use crate::arith::{FieldElement, NumberField};
use crate::error::{Error, Result};
use crate::group::{GroupKind, GroupPresentation, KernelPresentation, Word};
use crate::parse::parse_field_element;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix2 {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Matrix2 {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Self {
        Matrix2 { a, b, c, d }
    }

    /// Same as [`Matrix2::new`] but insists on determinant one.
    pub fn sl2(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Result<Self> {
        let m = Matrix2::new(a, b, c, d);
        if !m.det().is_one() {
            return Err(Error::Validation(format!("determinant is {}, not 1", m.det())));
        }
        Ok(m)
    }

    pub fn from_ints(field: &NumberField, e: [[i64; 2]; 2]) -> Self {
        Matrix2::new(
            field.from_int(e[0][0]),
            field.from_int(e[0][1]),
            field.from_int(e[1][0]),
            field.from_int(e[1][1]),
        )
    }

    /// Entries given as field-element expressions, row by row.
    pub fn parse(entries: [[&str; 2]; 2], field: &NumberField) -> Result<Self> {
        let p = |s: &str| parse_field_element(s, field);
        Ok(Matrix2::new(
            p(entries[0][0])?,
            p(entries[0][1])?,
            p(entries[1][0])?,
            p(entries[1][1])?,
        ))
    }

    pub fn identity(field: &NumberField) -> Self {
        Matrix2::from_ints(field, [[1, 0], [0, 1]])
    }

    pub fn field(&self) -> &NumberField {
        self.a.field()
    }

    pub fn det(&self) -> FieldElement {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    pub fn trace(&self) -> FieldElement {
        &self.a + &self.d
    }

    pub fn mul(&self, o: &Matrix2) -> Matrix2 {
        Matrix2::new(
            &(&self.a * &o.a) + &(&self.b * &o.c),
            &(&self.a * &o.b) + &(&self.b * &o.d),
            &(&self.c * &o.a) + &(&self.d * &o.c),
            &(&self.c * &o.b) + &(&self.d * &o.d),
        )
    }

    /// Inverse; for determinant one this is the adjugate.
    pub fn inverse(&self) -> Result<Matrix2> {
        let det = self.det();
        let adj = Matrix2::new(self.d.clone(), -&self.b, -&self.c, self.a.clone());
        if det.is_one() {
            return Ok(adj);
        }
        let inv = det.inverse()?;
        Ok(adj.scale(&inv))
    }

    pub fn scale(&self, s: &FieldElement) -> Matrix2 {
        Matrix2::new(&self.a * s, &self.b * s, &self.c * s, &self.d * s)
    }

    pub fn neg(&self) -> Matrix2 {
        Matrix2::new(-&self.a, -&self.b, -&self.c, -&self.d)
    }

    pub fn pow(&self, n: i64) -> Result<Matrix2> {
        let base = if n < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Matrix2::identity(self.field());
        for _ in 0..n.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.d.is_one() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn is_neg_identity(&self) -> bool {
        self.neg().is_identity()
    }

    pub fn entries(&self) -> [[&FieldElement; 2]; 2] {
        [[&self.a, &self.b], [&self.c, &self.d]]
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Debug for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `tr(AB) + tr(AB^-1) - tr(A) tr(B)`, identically zero on SL₂.
pub fn trace_relation_check(a: &Matrix2, b: &Matrix2) -> Result<FieldElement> {
    let ab = a.mul(b);
    let ab_inv = a.mul(&b.inverse()?);
    Ok(&(&ab.trace() + &ab_inv.trace()) - &(&a.trace() * &b.trace()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    pub group: GroupPresentation,
    pub images: Vec<Matrix2>,
    pub field: NumberField,
}

impl Representation {
    /// Pairs a presentation with one matrix per generator. Relators are
    /// not checked here; see [`validate_representation`].
    pub fn new(group: GroupPresentation, images: Vec<Matrix2>) -> Result<Self> {
        if images.len() != group.num_generators() {
            return Err(Error::Validation(format!(
                "{} matrices given for {} generators",
                images.len(),
                group.num_generators()
            )));
        }
        let field = images[0].field().clone();
        if images
            .iter()
            .any(|m| m.entries().iter().flatten().any(|e| *e.field() != field))
        {
            return Err(Error::FieldMismatch);
        }
        Ok(Representation { group, images, field })
    }

    /// Every generator sent to the identity.
    pub fn trivial(group: GroupPresentation, field: &NumberField) -> Self {
        let images = vec![Matrix2::identity(field); group.num_generators()];
        Representation {
            group,
            images,
            field: field.clone(),
        }
    }

    pub fn evaluate_word(&self, w: &Word) -> Matrix2 {
        let mut acc = Matrix2::identity(&self.field);
        for &(g, e) in w.letters() {
            let m = &self.images[g];
            acc = if e > 0 {
                acc.mul(m)
            } else {
                acc.mul(&m.inverse().expect("generator image is invertible"))
            };
        }
        acc
    }

    /// `g ↦ (-1)^{values(g)} ρ(g)`: the other lift when `values` is the
    /// abelianization.
    pub fn twist_by_sign(&self, values: &[i64]) -> Representation {
        let images = self
            .images
            .iter()
            .zip(values)
            .map(|(m, v)| if v.rem_euclid(2) == 1 { m.neg() } else { m.clone() })
            .collect();
        Representation {
            group: self.group.clone(),
            images,
            field: self.field.clone(),
        }
    }
}

pub fn evaluate_word(rho: &Representation, w: &Word) -> Matrix2 {
    rho.evaluate_word(w)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Generators whose image has determinant other than one.
    pub bad_determinants: Vec<String>,
    /// Relators (by index) mapping to neither identity nor minus identity.
    pub failed_relators: Vec<usize>,
    /// Relators mapping to minus identity.
    pub lift_inconsistent: Vec<usize>,
    pub warnings: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.bad_determinants.is_empty() && self.failed_relators.is_empty() && self.lift_inconsistent.is_empty()
    }

    /// Hard failures become a validation error; warnings pass through.
    pub fn into_result(self, group: &GroupPresentation) -> Result<Vec<String>> {
        let mut problems = Vec::new();
        if !self.bad_determinants.is_empty() {
            problems.push(format!(
                "determinant is not 1 for generator(s) {}",
                self.bad_determinants.join(", ")
            ));
        }
        let show = |idx: &[usize]| {
            idx.iter()
                .map(|&i| format!("#{} `{}`", i + 1, group.word_string(&group.relators[i])))
                .collect::<Vec<_>>()
                .join(", ")
        };
        if !self.failed_relators.is_empty() {
            problems.push(format!(
                "relator(s) not sent to the identity: {}",
                show(&self.failed_relators)
            ));
        }
        if !self.lift_inconsistent.is_empty() {
            problems.push(format!(
                "lift inconsistency: relator(s) sent to minus the identity: {}; flip the sign of some generator images",
                show(&self.lift_inconsistent)
            ));
        }
        if problems.is_empty() {
            Ok(self.warnings)
        } else {
            Err(Error::Validation(problems.join("; ")))
        }
    }
}

pub fn validate_representation(rho: &Representation) -> ValidationReport {
    let mut report = ValidationReport::default();
    for (name, m) in rho.group.generators.iter().zip(&rho.images) {
        if !m.det().is_one() {
            report.bad_determinants.push(name.clone());
        }
    }
    if !report.bad_determinants.is_empty() {
        return report;
    }
    for (i, r) in rho.group.relators.iter().enumerate() {
        let m = rho.evaluate_word(r);
        if m.is_neg_identity() {
            report.lift_inconsistent.push(i);
        } else if !m.is_identity() {
            report.failed_relators.push(i);
        }
    }
    if rho.group.kind == GroupKind::QuotientKnot {
        if let Some(l) = &rho.group.longitude {
            let tr = rho.evaluate_word(l).trace();
            if tr != rho.field.from_int(-2) {
                report.warnings.push(format!(
                    "trace of the longitude is {tr}, expected -2 for a geometric quotient knot"
                ));
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceSign {
    Plus,
    Minus,
    NonParabolic,
}

impl TraceSign {
    pub fn as_str(self) -> &'static str {
        match self {
            TraceSign::Plus => "+2",
            TraceSign::Minus => "-2",
            TraceSign::NonParabolic => "non-parabolic",
        }
    }
}

pub fn meridian_trace_sign(rho: &Representation) -> Result<TraceSign> {
    let m = rho
        .group
        .meridian
        .as_ref()
        .ok_or_else(|| Error::Validation("presentation has no meridian word".into()))?;
    Ok(trace_sign(&rho.evaluate_word(m)))
}

pub fn trace_sign(m: &Matrix2) -> TraceSign {
    if m.is_identity() || m.is_neg_identity() {
        return TraceSign::NonParabolic;
    }
    let tr = m.trace();
    if tr == m.field().from_int(2) {
        TraceSign::Plus
    } else if tr == m.field().from_int(-2) {
        TraceSign::Minus
    } else {
        TraceSign::NonParabolic
    }
}

/// Restriction of `rho` (a representation of the parent group) to the
/// kernel presentation built from it.
pub fn restrict_representation(rho: &Representation, kernel: &KernelPresentation) -> Result<Representation> {
    validate_representation(rho).into_result(&rho.group)?;
    let images = kernel.inclusion.iter().map(|w| rho.evaluate_word(w)).collect();
    let restricted = Representation {
        group: kernel.group.clone(),
        images,
        field: rho.field.clone(),
    };
    validate_representation(&restricted).into_result(&restricted.group)?;
    Ok(restricted)
}

#[cfg(test)]
mod tests;

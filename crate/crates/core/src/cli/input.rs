use std::collections::BTreeMap;

use serde::Deserialize;

use crate::arith::NumberField;
use crate::error::{Error, Result};
use crate::group::{parse_presentation, GroupPresentation};
use crate::obstruction::{Lift, LiftSelection};
use crate::parse::{parse_field, parse_polynomial};
use crate::poly::Polynomial;
use crate::rep::{Matrix2, Representation};

/// Polynomials in input and output use this variable.
pub const POLY_VAR: &str = "t";

#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    #[serde(default = "default_variable")]
    pub variable: String,
    pub min_poly: String,
}

fn default_variable() -> String {
    "z".into()
}

/// One JSON input file.
#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub description: Option<String>,
    /// Absent means the rationals.
    #[serde(default)]
    pub field: Option<FieldSpec>,
    #[serde(default)]
    pub group: Option<String>,
    /// Generator name to a 2×2 matrix of field-element strings.
    #[serde(default)]
    pub representation: Option<BTreeMap<String, [[String; 2]; 2]>>,
    #[serde(default)]
    pub polynomial: Option<String>,
    #[serde(default)]
    pub lift: Option<String>,
    /// Meridian trace sign of the representation behind `polynomial`.
    #[serde(default)]
    pub declared_lift: Option<String>,
    /// Generator whose block column is deleted.
    #[serde(default)]
    pub delete_column: Option<String>,
    /// Free-form expectations carried by fixtures; not read by the tool.
    #[serde(default)]
    pub expected: Option<serde_json::Value>,
}

impl InputDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            context: Some("json".into()),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn field(&self) -> Result<NumberField> {
        match &self.field {
            None => Ok(NumberField::rationals()),
            Some(f) => {
                if f.variable == POLY_VAR {
                    return Err(Error::Validation(format!(
                        "field variable cannot be `{POLY_VAR}`, which is the polynomial variable"
                    )));
                }
                parse_field(&f.variable, &f.min_poly).map_err(|e| e.with_context("field.min_poly"))
            }
        }
    }

    pub fn group(&self) -> Result<Option<GroupPresentation>> {
        self.group
            .as_deref()
            .map(|g| parse_presentation(g).map_err(|e| e.with_context("group")))
            .transpose()
    }

    pub fn polynomial(&self, field: &NumberField) -> Result<Option<Polynomial>> {
        self.polynomial
            .as_deref()
            .map(|p| parse_polynomial(p, field, POLY_VAR).map_err(|e| e.with_context("polynomial")))
            .transpose()
    }

    pub fn representation(&self, group: &GroupPresentation, field: &NumberField) -> Result<Option<Representation>> {
        let Some(map) = &self.representation else {
            return Ok(None);
        };
        for name in map.keys() {
            if group.generator_index(name).is_none() {
                return Err(Error::Validation(format!(
                    "representation: `{name}` is not a generator"
                )));
            }
        }
        let mut images = Vec::with_capacity(group.num_generators());
        for name in &group.generators {
            let m = map
                .get(name)
                .ok_or_else(|| Error::Validation(format!("representation: no matrix for generator `{name}`")))?;
            let entries = [
                [m[0][0].as_str(), m[0][1].as_str()],
                [m[1][0].as_str(), m[1][1].as_str()],
            ];
            let label = format!("representation.{name}");
            images.push(Matrix2::parse(entries, field).map_err(|e| e.with_context(&label))?);
        }
        Representation::new(group.clone(), images).map(Some)
    }

    pub fn lift_selection(&self) -> Result<Option<LiftSelection>> {
        self.lift
            .as_deref()
            .map(|s| {
                LiftSelection::from_name(s)
                    .ok_or_else(|| Error::Validation(format!("lift: expected plus, minus or both, found `{s}`")))
            })
            .transpose()
    }

    pub fn declared_lift(&self) -> Result<Option<Lift>> {
        match self.declared_lift.as_deref() {
            None => Ok(None),
            Some("plus") => Ok(Some(Lift::Plus)),
            Some("minus") => Ok(Some(Lift::Minus)),
            Some(s) => Err(Error::Validation(format!(
                "declared_lift: expected plus or minus, found `{s}`"
            ))),
        }
    }
}

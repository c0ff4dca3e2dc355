use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::error::Error;
use crate::factor::Factorization;
use crate::poly::Polynomial;
use crate::torsion::TorsionValue;

#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct FieldReport {
    pub variable: String,
    pub min_poly: String,
    pub degree: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct FactorEntry {
    pub factor: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct FactorizationReport {
    pub polynomial: String,
    pub unit: String,
    pub factors: Vec<FactorEntry>,
}

impl FactorizationReport {
    pub fn new(p: &Polynomial, f: &Factorization) -> Self {
        FactorizationReport {
            polynomial: p.to_string(),
            unit: f.unit.to_string(),
            factors: f
                .factors
                .iter()
                .map(|(g, m)| FactorEntry {
                    factor: g.to_string(),
                    multiplicity: *m,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct TorsionReport {
    pub value: String,
    /// Unit-normalized torsion when it is a polynomial.
    pub polynomial: Option<String>,
    pub numerator: String,
    pub denominator: String,
    pub exact_division: bool,
    pub deleted_column: String,
}

impl TorsionReport {
    pub fn new(t: &TorsionValue, generators: &[String]) -> Self {
        TorsionReport {
            value: t.to_string(),
            polynomial: t.normalized.as_ref().map(|n| n.poly.to_string()),
            numerator: t.reduced.0.to_string(),
            denominator: t.reduced.1.to_string(),
            exact_division: t.exact_division,
            deleted_column: generators[t.deleted_column].clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct LiftReport {
    pub lift: String,
    pub polynomial: String,
    pub verdict: String,
    pub factor_f: Option<String>,
    pub factors: Vec<FactorEntry>,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct PeripheralRow {
    pub cover_class: String,
    pub cover: [i64; 2],
    pub quotient: [i64; 2],
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct InclusionEntry {
    pub generator: String,
    pub word: String,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct CoverReport {
    pub kernel: String,
    pub inclusion: Vec<InclusionEntry>,
    pub quotient_homology: String,
    pub quotient_alpha: Vec<i64>,
    pub epsilon: Vec<u8>,
    pub kernel_homology: String,
    pub kernel_alpha: Vec<i64>,
    pub peripheral_map: Vec<PeripheralRow>,
    pub quotient_torsion: Option<TorsionReport>,
    pub restricted_torsion: Option<TorsionReport>,
    pub cover_torsion: Option<TorsionReport>,
    pub restricted_meridian_trace: Option<String>,
    pub identity_holds: Option<bool>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ErrorReport {
    pub kind: String,
    pub message: String,
    pub context: Option<String>,
    pub line: Option<usize>,
    pub column: Option<usize>,
}

impl ErrorReport {
    pub fn new(e: &Error) -> Self {
        let kind = match e {
            Error::Parse { .. } => "parse",
            Error::Validation(_) | Error::InvalidField(_) => "validation",
            Error::Io(_) => "io",
            _ => "error",
        };
        let (context, line, column) = match e {
            Error::Parse {
                context, line, column, ..
            } => (context.clone(), Some(*line), Some(*column)),
            _ => (None, None, None),
        };
        ErrorReport {
            kind: kind.into(),
            message: e.to_string(),
            context,
            line,
            column,
        }
    }
}

/// Everything a command prints. Optional sections are omitted from JSON
/// when absent.
#[derive(Clone, Debug, Default, Serialize, PartialEq)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factor_f: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub torsion: Option<TorsionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meridian_trace: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lift_tested: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub lifts: Vec<LiftReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<FactorizationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub irreducible: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover: Option<CoverReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorReport>,
    pub exit_code: i32,
    pub timings_ms: BTreeMap<String, f64>,
}

impl ReportDocument {
    /// The JSON form printed by `--json`.
    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    /// Plain-text rendering for terminals.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "== {} {}", self.command, self.source.as_deref().unwrap_or("<stdin>"));
        if let Some(e) = &self.error {
            let _ = writeln!(s, "error ({}): {}", e.kind, e.message);
            return s;
        }
        if let Some(f) = &self.field {
            if f.degree > 1 {
                let _ = writeln!(s, "field: Q({0}), {1} = 0", f.variable, f.min_poly);
            } else {
                let _ = writeln!(s, "field: Q");
            }
        }
        if let Some(t) = &self.torsion {
            let _ = writeln!(s, "torsion: {}", t.value);
            let _ = writeln!(
                s,
                "  deleted column: {}, exact division: {}",
                t.deleted_column, t.exact_division
            );
        }
        if let Some(m) = &self.meridian_trace {
            let _ = writeln!(s, "meridian trace: {m}");
        }
        if let Some(c) = &self.cover {
            let _ = writeln!(
                s,
                "quotient H_1: {}  alpha: {:?}  epsilon: {:?}",
                c.quotient_homology, c.quotient_alpha, c.epsilon
            );
            let _ = writeln!(s, "kernel: {}", c.kernel);
            for i in &c.inclusion {
                let _ = writeln!(s, "  {} = {}", i.generator, i.word);
            }
            let _ = writeln!(s, "kernel H_1: {}  alpha: {:?}", c.kernel_homology, c.kernel_alpha);
            for r in &c.peripheral_map {
                let _ = writeln!(s, "  {} {:?} -> {:?}", r.cover_class, r.cover, r.quotient);
            }
            if let Some(t) = &c.quotient_torsion {
                let _ = writeln!(s, "quotient torsion: {}", t.value);
            }
            if let Some(t) = &c.restricted_torsion {
                let _ = writeln!(s, "restricted torsion: {}", t.value);
            }
            if let Some(t) = &c.cover_torsion {
                let _ = writeln!(s, "cover torsion: {}", t.value);
            }
            if let Some(m) = &c.restricted_meridian_trace {
                let _ = writeln!(s, "restricted meridian trace: {m}");
            }
            if let Some(ok) = c.identity_holds {
                let _ = writeln!(s, "T_K(-t^2) = T_Kbar(t) T_Kbar(-t): {ok}");
            }
        }
        for l in &self.lifts {
            let _ = writeln!(s, "{} lift: {} on {}", l.lift, l.verdict, l.polynomial);
            if let Some(f) = &l.factor_f {
                let _ = writeln!(s, "  f = {f}");
            }
            for fail in &l.failures {
                let _ = writeln!(s, "  {fail}");
            }
        }
        if let Some(f) = &self.factorization {
            let _ = writeln!(s, "factorization of {}:", f.polynomial);
            let _ = writeln!(s, "  unit: {}", f.unit);
            for e in &f.factors {
                let _ = writeln!(s, "  ({})^{}", e.factor, e.multiplicity);
            }
        }
        if let Some(i) = self.irreducible {
            let _ = writeln!(s, "irreducible: {i}");
        }
        if let Some(v) = &self.verdict {
            let _ = writeln!(s, "verdict: {v}");
        }
        if let Some(f) = &self.factor_f {
            let _ = writeln!(s, "f: {f}");
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        for n in &self.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }
}

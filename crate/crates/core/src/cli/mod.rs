//! Command-line front end: JSON input documents in, reports out.
//!
//! Exit codes: 0 success or CONSISTENT, 10 OBSTRUCTED, 2 parse error,
//! 3 validation error, 1 anything else.

mod input;
mod report;

use std::ffi::OsString;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use input::{FieldSpec, InputDocument, POLY_VAR};
pub use report::{
    CoverReport, ErrorReport, FactorEntry, FactorizationReport, FieldReport, InclusionEntry, LiftReport, PeripheralRow,
    ReportDocument, TorsionReport,
};

use crate::arith::NumberField;
use crate::error::{Error, Result};
use crate::factor::{factor_over_nf_with, FactorOptions};
use crate::group::{abelianize, homology, peripheral_cover_map, reidemeister_schreier_index2, GroupPresentation};
use crate::obstruction::{cover_pipeline, free_two_periodicity_check, Lift, LiftSelection, ObstructionReport, Verdict};
use crate::rep::{meridian_trace_sign, validate_representation, Representation, TraceSign};
use crate::torsion::{twisted_alexander, TorsionValue};

pub const EXIT_OK: i32 = 0;
pub const EXIT_OTHER: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_VALIDATION: i32 = 3;
pub const EXIT_OBSTRUCTED: i32 = 10;

pub const TOOL: &str = "periodicity-gate";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Torsion,
    Obstruct,
    Factor,
    Cover,
}

impl Command {
    pub fn as_str(self) -> &'static str {
        match self {
            Command::Torsion => "torsion",
            Command::Obstruct => "obstruct",
            Command::Factor => "factor",
            Command::Cover => "cover",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LiftArg {
    Plus,
    Minus,
    Both,
}

#[derive(Debug, Parser)]
#[command(name = TOOL, version, about = "Twisted Alexander invariants and the free 2-periodicity test")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Twisted Alexander invariant of a group and representation
    Torsion(CommonArgs),
    /// Test whether T(-t^2) splits as f(t) f(-t)
    Obstruct(CommonArgs),
    /// Factor a polynomial over the field
    Factor(CommonArgs),
    /// Index-2 kernel, its abelianization and the peripheral map
    Cover(CommonArgs),
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// JSON input file, or a directory of them (batch mode); stdin if absent
    #[arg(long)]
    input: Option<PathBuf>,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
    /// Seed for randomized internals
    #[arg(long)]
    seed: Option<u64>,
    /// Which lift(s) to test
    #[arg(long, value_enum)]
    lift: Option<LiftArg>,
}

/// Settings shared by every document of one invocation.
#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub factor: FactorOptions,
    pub lift: Option<LiftSelection>,
}

pub fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse { .. } => EXIT_PARSE,
        Error::Validation(_) | Error::InvalidField(_) => EXIT_VALIDATION,
        _ => EXIT_OTHER,
    }
}

fn new_report(command: Command) -> ReportDocument {
    ReportDocument {
        tool: TOOL.into(),
        version: VERSION.into(),
        command: command.as_str().into(),
        ..Default::default()
    }
}

/// Runs one command on one document's text. Errors are folded into the
/// report, so this never fails.
pub fn run_text(command: Command, text: &str, opts: &RunOptions) -> ReportDocument {
    let start = Instant::now();
    let mut report = new_report(command);
    let outcome = InputDocument::from_json(text).and_then(|doc| {
        report.name = doc.name.clone();
        run_document(command, &doc, opts, &mut report)
    });
    if let Err(e) = outcome {
        report.exit_code = exit_code_for(&e);
        report.error = Some(ErrorReport::new(&e));
    }
    report.timings_ms.insert("total".into(), ms(start));
    report
}

fn ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

fn field_report(k: &NumberField) -> FieldReport {
    FieldReport {
        variable: k.variable().to_string(),
        min_poly: k.min_poly_string(),
        degree: k.degree(),
    }
}

/// Fills `report` for `command` run on `doc`.
pub fn run_document(
    command: Command,
    doc: &InputDocument,
    opts: &RunOptions,
    report: &mut ReportDocument,
) -> Result<()> {
    let t0 = Instant::now();
    let field = doc.field()?;
    report.field = Some(field_report(&field));
    let group = doc.group()?;
    let rep = match &group {
        Some(g) => doc.representation(g, &field)?,
        None if doc.representation.is_some() => {
            return Err(Error::Validation("representation given without a group".into()))
        }
        None => None,
    };
    let poly = doc.polynomial(&field)?;
    report.timings_ms.insert("parse".into(), ms(t0));
    match command {
        Command::Factor => {
            let p = poly.ok_or_else(|| Error::Validation("factor needs a `polynomial`".into()))?;
            let t = Instant::now();
            let f = factor_over_nf_with(&p, &opts.factor)?;
            report.timings_ms.insert("factor".into(), ms(t));
            report.irreducible = Some(p.degree().unwrap_or(0) >= 1 && f.is_irreducible());
            report.factorization = Some(FactorizationReport::new(&p, &f));
        }
        Command::Torsion => {
            let (g, rho) = group_and_rep(group, rep)?;
            let t = compute_torsion(&g, &rho, doc, report)?;
            report.torsion = Some(TorsionReport::new(&t, &g.generators));
        }
        Command::Obstruct => {
            let selection = opts.lift.or(doc.lift_selection()?).unwrap_or_default();
            let (tpoly, declared) = match (poly, group) {
                (Some(_), Some(_)) => {
                    return Err(Error::Validation(
                        "give either `polynomial` or `group` + `representation`, not both".into(),
                    ))
                }
                (Some(p), None) => (p, doc.declared_lift()?.unwrap_or(Lift::Plus)),
                (None, g) => {
                    let (g, rho) = group_and_rep(g, rep)?;
                    let t = compute_torsion(&g, &rho, doc, report)?;
                    report.torsion = Some(TorsionReport::new(&t, &g.generators));
                    let declared = match doc.declared_lift()? {
                        Some(l) => l,
                        None => match meridian_trace_sign(&rho) {
                            Ok(TraceSign::Minus) => Lift::Minus,
                            Ok(TraceSign::Plus) => Lift::Plus,
                            _ => {
                                report
                                    .notes
                                    .push("meridian is missing or not parabolic; assuming the plus lift".into());
                                Lift::Plus
                            }
                        },
                    };
                    if !t.exact_division {
                        return Err(Error::Validation(format!(
                            "the torsion {t} is not a polynomial; the periodicity test needs polynomial torsion"
                        )));
                    }
                    (t.polynomial()?.clone(), declared)
                }
            };
            let t = Instant::now();
            let r = free_two_periodicity_check(&tpoly, declared, selection, &opts.factor)?;
            report.timings_ms.insert("obstruct".into(), ms(t));
            fill_obstruction(report, &r);
        }
        Command::Cover => {
            let g = group.ok_or_else(|| Error::Validation("cover needs a `group`".into()))?;
            report.cover = Some(cover_report(&g, rep.as_ref(), report)?);
        }
    }
    Ok(())
}

fn group_and_rep(
    g: Option<GroupPresentation>,
    rep: Option<Representation>,
) -> Result<(GroupPresentation, Representation)> {
    let g = g.ok_or_else(|| Error::Validation("needs a `group` and a `representation`".into()))?;
    let rho = rep.ok_or_else(|| Error::Validation("needs a `representation` for the group".into()))?;
    Ok((g, rho))
}

fn compute_torsion(
    g: &GroupPresentation,
    rho: &Representation,
    doc: &InputDocument,
    report: &mut ReportDocument,
) -> Result<TorsionValue> {
    let t = Instant::now();
    report.warnings.extend(validate_representation(rho).into_result(g)?);
    let ab = abelianize(g)?;
    if ab.values.is_empty() {
        return Err(Error::Validation(format!("H_1 = {} has no map onto Z", ab.describe())));
    }
    let delete = doc
        .delete_column
        .as_deref()
        .map(|name| {
            g.generator_index(name)
                .ok_or_else(|| Error::Validation(format!("delete_column: `{name}` is not a generator")))
        })
        .transpose()?;
    if let Ok(sign) = meridian_trace_sign(rho) {
        report.meridian_trace = Some(sign.as_str().into());
    }
    let value = twisted_alexander(g, &ab.values, rho, delete)?;
    report.timings_ms.insert("torsion".into(), ms(t));
    Ok(value)
}

fn fill_obstruction(report: &mut ReportDocument, r: &ObstructionReport) {
    report.verdict = Some(r.verdict.as_str().into());
    report.factor_f = r.factor_f.as_ref().map(|f| f.to_string());
    report.lift_tested = Some(r.lift_tested.as_str().into());
    report.lifts = r
        .lifts
        .iter()
        .map(|l| LiftReport {
            lift: l.lift.as_str().into(),
            polynomial: l.outcome.polynomial.to_string(),
            verdict: l.outcome.verdict.as_str().into(),
            factor_f: l.outcome.factor_f.as_ref().map(|f| f.to_string()),
            factors: FactorizationReport::new(&l.outcome.polynomial, &l.outcome.factorization).factors,
            failures: l.outcome.failures.iter().map(|f| f.to_string()).collect(),
        })
        .collect();
    report.notes.extend(r.notes.iter().cloned());
    report.exit_code = match r.verdict {
        Verdict::Consistent => EXIT_OK,
        Verdict::Obstructed => EXIT_OBSTRUCTED,
    };
}

fn cover_report(
    g: &GroupPresentation,
    rep: Option<&Representation>,
    report: &mut ReportDocument,
) -> Result<CoverReport> {
    let t = Instant::now();
    let ab = abelianize(g)?;
    let kernel = reidemeister_schreier_index2(g)?;
    let kab = homology(&kernel.group);
    let peripheral_map = [("meridian", (1, 0)), ("longitude", (0, 1))]
        .into_iter()
        .map(|(name, (p, q))| {
            let (a, b) = peripheral_cover_map(p, q);
            PeripheralRow {
                cover_class: name.into(),
                cover: [p, q],
                quotient: [a, b],
            }
        })
        .collect();
    let mut c = CoverReport {
        kernel: kernel.group.to_string(),
        inclusion: kernel
            .group
            .generators
            .iter()
            .zip(&kernel.inclusion)
            .map(|(n, w)| InclusionEntry {
                generator: n.clone(),
                word: g.word_string(w),
            })
            .collect(),
        quotient_homology: ab.describe(),
        quotient_alpha: ab.values.clone(),
        epsilon: kernel.epsilon.clone(),
        kernel_homology: kab.describe(),
        kernel_alpha: kernel.alpha.clone(),
        peripheral_map,
        ..Default::default()
    };
    report.timings_ms.insert("cover".into(), ms(t));
    if let Some(rho) = rep {
        let t = Instant::now();
        let check = cover_pipeline(rho)?;
        c.quotient_torsion = Some(TorsionReport::new(&check.quotient_torsion, &g.generators));
        c.restricted_torsion = Some(TorsionReport::new(
            &check.restricted_torsion,
            &check.kernel.group.generators,
        ));
        c.cover_torsion = Some(TorsionReport::new(&check.cover_torsion, &check.kernel.group.generators));
        c.restricted_meridian_trace = check.restricted_meridian.map(|s| s.as_str().into());
        c.identity_holds = Some(check.identity_holds);
        report.timings_ms.insert("cover_torsion".into(), ms(t));
    }
    Ok(c)
}

/// JSON files of a directory in name order, or the single path given.
pub fn input_files(path: &Path) -> Result<Vec<PathBuf>> {
    if !path.is_dir() {
        return Ok(vec![path.to_path_buf()]);
    }
    let mut files: Vec<PathBuf> = std::fs::read_dir(path)
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    Ok(files)
}

/// Runs one file; unreadable files become error reports.
pub fn run_file(command: Command, path: &Path, opts: &RunOptions) -> ReportDocument {
    let mut report = match std::fs::read_to_string(path) {
        Ok(text) => run_text(command, &text, opts),
        Err(e) => {
            let err = Error::Io(format!("{}: {e}", path.display()));
            let mut r = new_report(command);
            r.exit_code = exit_code_for(&err);
            r.error = Some(ErrorReport::new(&err));
            r
        }
    };
    report.source = Some(path.display().to_string());
    report
}

/// Exit code of a batch: the first error if any, else 10 if any document
/// was obstructed, else 0.
pub fn batch_exit_code(reports: &[ReportDocument]) -> i32 {
    reports
        .iter()
        .map(|r| r.exit_code)
        .find(|c| *c != EXIT_OK && *c != EXIT_OBSTRUCTED)
        .unwrap_or_else(|| {
            if reports.iter().any(|r| r.exit_code == EXIT_OBSTRUCTED) {
                EXIT_OBSTRUCTED
            } else {
                EXIT_OK
            }
        })
}

/// Entry point of the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_PARSE,
            };
        }
    };
    let (command, args) = match cli.command {
        Sub::Torsion(a) => (Command::Torsion, a),
        Sub::Obstruct(a) => (Command::Obstruct, a),
        Sub::Factor(a) => (Command::Factor, a),
        Sub::Cover(a) => (Command::Cover, a),
    };
    let opts = RunOptions {
        factor: args.seed.map(FactorOptions::with_seed).unwrap_or_default(),
        lift: args.lift.map(|l| match l {
            LiftArg::Plus => LiftSelection::Plus,
            LiftArg::Minus => LiftSelection::Minus,
            LiftArg::Both => LiftSelection::Both,
        }),
    };
    let (reports, batch) = match &args.input {
        Some(path) => match input_files(path) {
            Ok(files) => (
                files.iter().map(|f| run_file(command, f, &opts)).collect::<Vec<_>>(),
                path.is_dir(),
            ),
            Err(e) => {
                eprintln!("{e}");
                return exit_code_for(&e);
            }
        },
        None => {
            let mut text = String::new();
            if let Err(e) = std::io::stdin().read_to_string(&mut text) {
                eprintln!("reading stdin: {e}");
                return EXIT_OTHER;
            }
            (vec![run_text(command, &text, &opts)], false)
        }
    };
    if args.json {
        let out = if batch {
            serde_json::to_string_pretty(&reports)
        } else {
            reports[0].to_json()
        };
        println!("{}", out.expect("reports serialize"));
    } else {
        for r in &reports {
            print!("{}", r.render_text());
        }
    }
    batch_exit_code(&reports)
}

#[cfg(test)]
mod tests;

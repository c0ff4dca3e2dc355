//! C ABI over `periodicity_gate`.
//!
//! Objects are opaque heap handles created by `pg_*_new`/`pg_*_parse` or
//! returned through out-pointers, and released with the matching
//! `pg_*_free`. Every fallible call returns a [`PgStatus`]; on failure
//! [`pg_last_error`] holds a message for the calling thread. Strings
//! returned as `char *` belong to the caller and go back through
//! [`pg_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use periodicity_gate::cli::{self, Command, RunOptions};
use periodicity_gate::obstruction::{free_two_periodicity_check, Lift, LiftSelection};
use periodicity_gate::{
    factor, parse, Error, FactorOptions, Factorization, NumberField, ObstructionReport, Polynomial, Verdict,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Validation = 4,
    Domain = 5,
    OutOfRange = 6,
    Panic = 7,
    Other = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PgVerdict {
    Consistent = 0,
    Obstructed = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PgLift {
    Plus = 0,
    Minus = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PgLiftSelection {
    Plus = 0,
    Minus = 1,
    Both = 2,
}

/// A number field `Q[z]/(m)`.
pub struct PgField(NumberField);

/// A polynomial in `t` over a field.
pub struct PgPoly(Polynomial);

/// A factorization `unit * prod g_i^m_i`.
pub struct PgFactorization(Factorization);

/// Outcome of the free 2-periodicity test.
pub struct PgReport(ObstructionReport);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(s).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> PgStatus {
    match e {
        Error::Parse { .. } => PgStatus::Parse,
        Error::Validation(_) | Error::InvalidField(_) => PgStatus::Validation,
        Error::Domain(_) | Error::DivisionByZero | Error::FieldMismatch => PgStatus::Domain,
        Error::Io(_) => PgStatus::Other,
    }
}

struct Fail(PgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PgStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PgStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".into());
            set_error(format!("panic: {msg}"));
            PgStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref()
        .ok_or_else(|| Fail(PgStatus::NullPointer, format!("{what} is null")))
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail(PgStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Fail(PgStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn out<T>(p: *mut T, what: &str) -> Result<&'static mut T, Fail> {
    p.as_mut()
        .ok_or_else(|| Fail(PgStatus::NullPointer, format!("{what} is null")))
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).unwrap().into_raw()
}

fn options(seed: u64) -> FactorOptions {
    FactorOptions::with_seed(seed)
}

/// Library version, a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn pg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or NULL. Valid until
/// the next call into the library from the same thread.
#[no_mangle]
pub extern "C" fn pg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by the library.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn pg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds `Q[var]/(min_poly)`. `min_poly` must be monic and irreducible;
/// pass `"z"` as the polynomial for `Q` itself.
///
/// # Safety
/// `var` and `min_poly` are NUL-terminated strings, `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn pg_field_new(
    var: *const c_char,
    min_poly: *const c_char,
    out_field: *mut *mut PgField,
) -> PgStatus {
    guard(|| {
        let var = text(var, "var")?;
        let m = text(min_poly, "min_poly")?;
        let slot = out(out_field, "out_field")?;
        let k = parse::parse_field(var, m)?;
        *slot = Box::into_raw(Box::new(PgField(k)));
        Ok(())
    })
}

/// The rational field.
#[no_mangle]
pub extern "C" fn pg_field_rationals() -> *mut PgField {
    Box::into_raw(Box::new(PgField(NumberField::rationals())))
}

/// Degree of the field over `Q`, 0 for NULL.
///
/// # Safety
/// `field` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_field_degree(field: *const PgField) -> usize {
    field.as_ref().map_or(0, |k| k.0.degree())
}

/// # Safety
/// `field` is NULL or a live handle not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pg_field_free(field: *mut PgField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Parses a polynomial in `t` with coefficients in `field`.
///
/// # Safety
/// `field` is a live handle, `src` NUL-terminated, `out_poly` writable.
#[no_mangle]
pub unsafe extern "C" fn pg_poly_parse(
    field: *const PgField,
    src: *const c_char,
    out_poly: *mut *mut PgPoly,
) -> PgStatus {
    guard(|| {
        let k = borrow(field, "field")?;
        let s = text(src, "text")?;
        let slot = out(out_poly, "out_poly")?;
        let p = parse::parse_polynomial(s, &k.0, cli::POLY_VAR)?;
        *slot = Box::into_raw(Box::new(PgPoly(p)));
        Ok(())
    })
}

/// Text form of the polynomial; release with [`pg_string_free`]. NULL for
/// a NULL handle.
///
/// # Safety
/// `poly` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_poly_to_string(poly: *const PgPoly) -> *mut c_char {
    match poly.as_ref() {
        Some(p) => to_c_string(p.0.to_string()),
        None => ptr::null_mut(),
    }
}

/// Degree, or -1 for the zero polynomial or NULL.
///
/// # Safety
/// `poly` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_poly_degree(poly: *const PgPoly) -> c_int {
    poly.as_ref().and_then(|p| p.0.degree()).map_or(-1, |d| d as c_int)
}

/// # Safety
/// `poly` is NULL or a live handle not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pg_poly_free(poly: *mut PgPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// Factors `poly` into monic irreducibles over its field.
///
/// # Safety
/// `poly` is a live handle, `out_factorization` writable.
#[no_mangle]
pub unsafe extern "C" fn pg_factor(
    poly: *const PgPoly,
    seed: u64,
    out_factorization: *mut *mut PgFactorization,
) -> PgStatus {
    guard(|| {
        let p = borrow(poly, "poly")?;
        let slot = out(out_factorization, "out_factorization")?;
        let f = factor::factor_over_nf_with(&p.0, &options(seed))?;
        *slot = Box::into_raw(Box::new(PgFactorization(f)));
        Ok(())
    })
}

/// Number of distinct irreducible factors, 0 for NULL.
///
/// # Safety
/// `f` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_factorization_len(f: *const PgFactorization) -> usize {
    f.as_ref().map_or(0, |f| f.0.factors.len())
}

/// The `index`-th factor as a new polynomial handle and its multiplicity.
///
/// # Safety
/// `f` is a live handle; `out_poly` and `out_multiplicity` are writable.
#[no_mangle]
pub unsafe extern "C" fn pg_factorization_get(
    f: *const PgFactorization,
    index: usize,
    out_poly: *mut *mut PgPoly,
    out_multiplicity: *mut usize,
) -> PgStatus {
    guard(|| {
        let f = borrow(f, "factorization")?;
        let slot = out(out_poly, "out_poly")?;
        let mult = out(out_multiplicity, "out_multiplicity")?;
        let (g, m) = f.0.factors.get(index).ok_or_else(|| {
            Fail(
                PgStatus::OutOfRange,
                format!("factor index {index} out of range (have {})", f.0.factors.len()),
            )
        })?;
        *slot = Box::into_raw(Box::new(PgPoly(g.clone())));
        *mult = *m;
        Ok(())
    })
}

/// The leading unit as text; release with [`pg_string_free`].
///
/// # Safety
/// `f` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_factorization_unit(f: *const PgFactorization) -> *mut c_char {
    match f.as_ref() {
        Some(f) => to_c_string(f.0.unit.to_string()),
        None => ptr::null_mut(),
    }
}

/// # Safety
/// `f` is NULL or a live handle not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pg_factorization_free(f: *mut PgFactorization) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Irreducibility over the polynomial's field. Constants are a domain
/// error.
///
/// # Safety
/// `poly` is a live handle, `out_irreducible` writable.
#[no_mangle]
pub unsafe extern "C" fn pg_is_irreducible(poly: *const PgPoly, seed: u64, out_irreducible: *mut bool) -> PgStatus {
    guard(|| {
        let p = borrow(poly, "poly")?;
        let slot = out(out_irreducible, "out_irreducible")?;
        *slot = factor::is_irreducible_with(&p.0, &options(seed))?;
        Ok(())
    })
}

/// Free 2-periodicity test on a torsion polynomial `torsion` whose
/// representation has meridian trace sign `declared`.
///
/// # Safety
/// `torsion` is a live handle, `out_report` writable.
#[no_mangle]
pub unsafe extern "C" fn pg_obstruct(
    torsion: *const PgPoly,
    declared: PgLift,
    selection: PgLiftSelection,
    seed: u64,
    out_report: *mut *mut PgReport,
) -> PgStatus {
    guard(|| {
        let t = borrow(torsion, "torsion")?;
        let slot = out(out_report, "out_report")?;
        let declared = match declared {
            PgLift::Plus => Lift::Plus,
            PgLift::Minus => Lift::Minus,
        };
        let selection = match selection {
            PgLiftSelection::Plus => LiftSelection::Plus,
            PgLiftSelection::Minus => LiftSelection::Minus,
            PgLiftSelection::Both => LiftSelection::Both,
        };
        let r = free_two_periodicity_check(&t.0, declared, selection, &options(seed))?;
        *slot = Box::into_raw(Box::new(PgReport(r)));
        Ok(())
    })
}

/// Verdict of a report; OBSTRUCTED for NULL.
///
/// # Safety
/// `report` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_report_verdict(report: *const PgReport) -> PgVerdict {
    match report.as_ref().map(|r| r.0.verdict) {
        Some(Verdict::Consistent) => PgVerdict::Consistent,
        _ => PgVerdict::Obstructed,
    }
}

/// The factor `f` with `T(-t^2) = unit * f(t) f(-t)` as a new handle, or
/// NULL when obstructed.
///
/// # Safety
/// `report` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_report_factor_f(report: *const PgReport) -> *mut PgPoly {
    report
        .as_ref()
        .and_then(|r| r.0.factor_f.clone())
        .map_or(ptr::null_mut(), |f| Box::into_raw(Box::new(PgPoly(f))))
}

/// Number of explanatory notes.
///
/// # Safety
/// `report` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_report_note_count(report: *const PgReport) -> usize {
    report.as_ref().map_or(0, |r| r.0.notes.len())
}

/// The `index`-th note; release with [`pg_string_free`]. NULL when out of
/// range.
///
/// # Safety
/// `report` is NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pg_report_note(report: *const PgReport, index: usize) -> *mut c_char {
    report
        .as_ref()
        .and_then(|r| r.0.notes.get(index).cloned())
        .map_or(ptr::null_mut(), to_c_string)
}

/// # Safety
/// `report` is NULL or a live handle not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pg_report_free(report: *mut PgReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// Runs a CLI command (`"torsion"`, `"obstruct"`, `"factor"` or `"cover"`)
/// on a JSON input document and returns the JSON report, exactly as
/// `periodicity-gate <command> --json` prints it. `out_exit_code` receives
/// the CLI exit code. Errors inside the document are part of the report
/// and do not make this call fail.
///
/// # Safety
/// `command` and `input_json` are NUL-terminated; the out-pointers are
/// writable.
#[no_mangle]
pub unsafe extern "C" fn pg_run_json(
    command: *const c_char,
    input_json: *const c_char,
    seed: u64,
    out_json: *mut *mut c_char,
    out_exit_code: *mut c_int,
) -> PgStatus {
    guard(|| {
        let name = text(command, "command")?;
        let input = text(input_json, "input_json")?;
        let json_slot = out(out_json, "out_json")?;
        let code_slot = out(out_exit_code, "out_exit_code")?;
        let command = match name {
            "torsion" => Command::Torsion,
            "obstruct" => Command::Obstruct,
            "factor" => Command::Factor,
            "cover" => Command::Cover,
            other => return Err(Fail(PgStatus::Validation, format!("unknown command `{other}`"))),
        };
        let opts = RunOptions {
            factor: options(seed),
            lift: None,
        };
        let report = cli::run_text(command, input, &opts);
        let json = serde_json_string(&report)?;
        *code_slot = report.exit_code;
        *json_slot = to_c_string(json);
        Ok(())
    })
}

fn serde_json_string(report: &cli::ReportDocument) -> Result<String, Fail> {
    report
        .to_json()
        .map_err(|e| Fail(PgStatus::Other, format!("serializing report: {e}")))
}

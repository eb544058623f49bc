//! C ABI over `pcflap`.
//!
//! Every function returns a [`PcfStatus`]; results go through out-pointers.
//! On failure the message of the most recent error on the calling thread
//! is available from [`pcf_last_error_message`]. Verification reports are
//! opaque handles released with [`pcf_report_free`]; strings returned by
//! the library are released with [`pcf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;

use pcflap::catalog::{self, ReportFormat, Verdict, VerificationReport};
use pcflap::special;
use pcflap::{Complex64, Error};

/// Status codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcfStatus {
    Ok = 0,
    Pole = 1,
    ParameterPole = 2,
    NonConvergence = 3,
    Domain = 4,
    NonFinite = 5,
    InvalidParams = 6,
    UnknownCase = 7,
    Config = 8,
    Io = 9,
    NullPointer = 10,
    Panic = 11,
}

/// Verdict of a verification report.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PcfVerdict {
    Pass = 0,
    Fail = 1,
    Skipped = 2,
}

/// A complex number with the layout of C99 `double _Complex`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PcfComplex {
    pub re: f64,
    pub im: f64,
}

impl From<PcfComplex> for Complex64 {
    fn from(z: PcfComplex) -> Self {
        Complex64::new(z.re, z.im)
    }
}

impl From<Complex64> for PcfComplex {
    fn from(z: Complex64) -> Self {
        PcfComplex { re: z.re, im: z.im }
    }
}

/// Opaque verification report.
pub struct PcfReport {
    inner: VerificationReport,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let text = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = text);
}

fn status_of(e: &Error) -> PcfStatus {
    match e {
        Error::Pole(_) => PcfStatus::Pole,
        Error::ParameterPole { .. } => PcfStatus::ParameterPole,
        Error::NonConvergence { .. } => PcfStatus::NonConvergence,
        Error::Domain(_) => PcfStatus::Domain,
        Error::NonFinite(_) => PcfStatus::NonFinite,
        Error::InvalidParams { .. } => PcfStatus::InvalidParams,
        Error::UnknownCase(_) => PcfStatus::UnknownCase,
        Error::Config(_) => PcfStatus::Config,
        Error::Io(_) => PcfStatus::Io,
    }
}

enum Failure {
    Lib(Error),
    Null(&'static str),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Run `body`, translating errors and panics into status codes.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> PcfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PcfStatus::Ok,
        Ok(Err(Failure::Lib(e))) => {
            set_last_error(&e.to_string());
            status_of(&e)
        }
        Ok(Err(Failure::Null(what))) => {
            set_last_error(&format!("null pointer: {what}"));
            PcfStatus::NullPointer
        }
        Err(_) => {
            set_last_error("internal panic");
            PcfStatus::Panic
        }
    }
}

fn write<T>(out: *mut T, value: T, what: &'static str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null(what));
    }
    // SAFETY: non-null, and the caller guarantees it points to writable storage for a T.
    unsafe { out.write(value) };
    Ok(())
}

fn report<'a>(handle: *const PcfReport) -> Result<&'a VerificationReport, Failure> {
    if handle.is_null() {
        return Err(Failure::Null("report"));
    }
    // SAFETY: non-null handles come from `pcf_verify` and stay valid until `pcf_report_free`.
    Ok(unsafe { &(*handle).inner })
}

/// Message of the last failed call on this thread (empty if none). The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn pcf_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Γ(z).
#[no_mangle]
pub extern "C" fn pcf_gamma(z: PcfComplex, out: *mut PcfComplex) -> PcfStatus {
    guard(|| write(out, special::gamma(z.into())?.into(), "out"))
}

/// 1/Γ(z); zero at the poles of Γ.
#[no_mangle]
pub extern "C" fn pcf_reciprocal_gamma(z: PcfComplex, out: *mut PcfComplex) -> PcfStatus {
    guard(|| write(out, special::reciprocal_gamma(z.into()).into(), "out"))
}

/// erf(x).
#[no_mangle]
pub extern "C" fn pcf_erf(x: f64, out: *mut f64) -> PcfStatus {
    guard(|| write(out, special::erf(x), "out"))
}

/// erfc(x).
#[no_mangle]
pub extern "C" fn pcf_erfc(x: f64, out: *mut f64) -> PcfStatus {
    guard(|| write(out, special::erfc(x), "out"))
}

/// Kummer's Φ(a; b; z) = ₁F₁(a; b; z).
#[no_mangle]
pub extern "C" fn pcf_kummer_phi(a: PcfComplex, b: PcfComplex, z: PcfComplex, out: *mut PcfComplex) -> PcfStatus {
    guard(|| write(out, special::kummer_phi(a.into(), b.into(), z.into())?.into(), "out"))
}

/// ₂F₁(a, b; c; z) for real `z ≤ 1` (complex `z` only for `|z| ≤ 1/2`).
#[no_mangle]
pub extern "C" fn pcf_gauss_2f1(
    a: PcfComplex,
    b: PcfComplex,
    c: PcfComplex,
    z: PcfComplex,
    out: *mut PcfComplex,
) -> PcfStatus {
    guard(|| write(out, special::gauss_2f1(a.into(), b.into(), c.into(), z.into())?.into(), "out"))
}

/// ₂F₂(a1, a2; b1, b2; z).
#[no_mangle]
pub extern "C" fn pcf_hyp_2f2(
    a1: PcfComplex,
    a2: PcfComplex,
    b1: PcfComplex,
    b2: PcfComplex,
    z: PcfComplex,
    out: *mut PcfComplex,
) -> PcfStatus {
    guard(|| write(out, special::hyp_2f2(a1.into(), a2.into(), b1.into(), b2.into(), z.into())?.into(), "out"))
}

/// Appell F₁(a; b1, b2; c; z1, z2) for `Re c > Re a > 0`, `z1, z2 < 1`.
#[no_mangle]
pub extern "C" fn pcf_appell_f1(
    a: PcfComplex,
    b1: PcfComplex,
    b2: PcfComplex,
    c: PcfComplex,
    z1: f64,
    z2: f64,
    out: *mut PcfComplex,
) -> PcfStatus {
    guard(|| write(out, special::appell_f1(a.into(), b1.into(), b2.into(), c.into(), z1, z2)?.into(), "out"))
}

/// Parabolic cylinder function D_ν(z) for real `|z| ≤ 40`.
#[no_mangle]
pub extern "C" fn pcf_parabolic_d(nu: PcfComplex, z: f64, out: *mut PcfComplex) -> PcfStatus {
    guard(|| write(out, special::pcf_d(nu.into(), Complex64::new(z, 0.0))?.into(), "out"))
}

fn case_ids() -> &'static [CString] {
    static IDS: OnceLock<Vec<CString>> = OnceLock::new();
    IDS.get_or_init(|| catalog::registry().iter().map(|c| CString::new(c.id).expect("ids have no NUL")).collect())
}

/// Number of registered cases.
#[no_mangle]
pub extern "C" fn pcf_catalog_len() -> usize {
    case_ids().len()
}

/// Id of case `index` as a static NUL-terminated string, or null when out of range.
#[no_mangle]
pub extern "C" fn pcf_catalog_id(index: usize) -> *const c_char {
    case_ids().get(index).map_or(std::ptr::null(), |s| s.as_ptr())
}

/// Verify case `id` on its default grid. `tol <= 0` selects the case's
/// default tolerance. On success `*out` receives a report handle.
///
/// # Safety
/// `id` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pcf_verify(id: *const c_char, tol: f64, out: *mut *mut PcfReport) -> PcfStatus {
    guard(|| {
        if id.is_null() {
            return Err(Failure::Null("id"));
        }
        if out.is_null() {
            return Err(Failure::Null("out"));
        }
        // SAFETY: checked non-null; the caller guarantees NUL termination.
        let id = unsafe { CStr::from_ptr(id) }.to_str().map_err(|_| Error::Config("case id is not UTF-8".into()))?;
        let tol = (tol > 0.0).then_some(tol);
        let inner = catalog::verify(id, None, tol)?;
        write(out, Box::into_raw(Box::new(PcfReport { inner })), "out")
    })
}

/// Raw verdict of the report (negative controls report `FAIL`).
///
/// # Safety
/// `report` must be a live handle from [`pcf_verify`].
#[no_mangle]
pub unsafe extern "C" fn pcf_report_verdict(report_handle: *const PcfReport, out: *mut PcfVerdict) -> PcfStatus {
    guard(|| {
        let v = match report(report_handle)?.verdict {
            Verdict::Pass => PcfVerdict::Pass,
            Verdict::Fail => PcfVerdict::Fail,
            Verdict::Skipped => PcfVerdict::Skipped,
        };
        write(out, v, "out")
    })
}

/// 1 when the verdict is the expected one for the case, 0 otherwise.
///
/// # Safety
/// `report` must be a live handle from [`pcf_verify`].
#[no_mangle]
pub unsafe extern "C" fn pcf_report_as_expected(report_handle: *const PcfReport, out: *mut i32) -> PcfStatus {
    guard(|| write(out, i32::from(report(report_handle)?.as_expected()), "out"))
}

/// Largest relative error over the evaluated points (NaN if none).
///
/// # Safety
/// `report` must be a live handle from [`pcf_verify`].
#[no_mangle]
pub unsafe extern "C" fn pcf_report_max_rel_error(report_handle: *const PcfReport, out: *mut f64) -> PcfStatus {
    guard(|| write(out, report(report_handle)?.max_rel_error.unwrap_or(f64::NAN), "out"))
}

/// Number of grid points in the report.
///
/// # Safety
/// `report` must be a live handle from [`pcf_verify`].
#[no_mangle]
pub unsafe extern "C" fn pcf_report_len(report_handle: *const PcfReport, out: *mut usize) -> PcfStatus {
    guard(|| write(out, report(report_handle)?.records.len(), "out"))
}

/// The report as a JSON array; release with [`pcf_string_free`].
///
/// # Safety
/// `report` must be a live handle from [`pcf_verify`].
#[no_mangle]
pub unsafe extern "C" fn pcf_report_json(report_handle: *const PcfReport, out: *mut *mut c_char) -> PcfStatus {
    guard(|| {
        let rep = report(report_handle)?;
        let mut buf = Vec::new();
        catalog::write_report(std::slice::from_ref(rep), ReportFormat::Json, &mut buf)?;
        let text = CString::new(buf).map_err(|_| Error::Io("report contains NUL".into()))?;
        write(out, text.into_raw(), "out")
    })
}

/// Release a report handle. Null is ignored.
///
/// # Safety
/// `report` must be null or a handle from [`pcf_verify`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pcf_report_free(report_handle: *mut PcfReport) {
    if !report_handle.is_null() {
        // SAFETY: the handle was produced by Box::into_raw in pcf_verify.
        drop(unsafe { Box::from_raw(report_handle) });
    }
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn pcf_string_free(s: *mut c_char) {
    if !s.is_null() {
        // SAFETY: the string was produced by CString::into_raw.
        drop(unsafe { CString::from_raw(s) });
    }
}

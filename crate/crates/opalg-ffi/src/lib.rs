//! C ABI for the opalg engine.
//!
//! Handles are opaque pointers owned by Rust; every constructor has a
//! matching `*_free`, and strings returned as `char*` must be released
//! with [`opalg_string_free`]. Functions report an [`OpalgStatus`]; on
//! `OPALG_STATUS_ERROR` the message is available through
//! [`opalg_last_error`].

use std::cell::RefCell;
use std::ffi::{CStr, CString};

use libc::c_char;
use opalg::cli::{AlgebraDocument, AlgebraKind};
use opalg::exactlin::homology_with_contraction;
use opalg::halg::{check_ainf, check_linf};
use opalg::operad::{
    ainf_generator_diff, check_d_squared, linf_generator_diff, DgFreeOperad,
};
use opalg::report::Report;
use opalg::transfer::{transfer, verify_transfer, TransferProblem};

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OpalgStatus {
    /// The operation succeeded and, if it ran checks, they all passed.
    Ok = 0,
    /// The operation ran to completion but at least one check failed.
    CheckFailed = 1,
    /// The operation could not run; see `opalg_last_error`.
    Error = 2,
    /// A required pointer argument was null.
    NullArgument = 3,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 4,
}

/// An algebra description plus the arity bound its checks run to.
pub struct OpalgAlgebra {
    doc: AlgebraDocument,
    max_arity: usize,
}

/// Result lines of a finished check run.
pub struct OpalgReport {
    report: Report,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) -> OpalgStatus {
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(msg).ok();
    });
    OpalgStatus::Error
}

fn alloc_string(s: String) -> *mut c_char {
    CString::new(s).map_or(std::ptr::null_mut(), CString::into_raw)
}

unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, OpalgStatus> {
    if ptr.is_null() {
        return Err(OpalgStatus::NullArgument);
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| OpalgStatus::InvalidUtf8)
}

fn family_operad(family: &str, max_arity: usize) -> Result<DgFreeOperad, OpalgStatus> {
    match family {
        "ainf" => Ok(DgFreeOperad::a_infinity(max_arity)),
        "linf" => Ok(DgFreeOperad::l_infinity(max_arity)),
        other => Err(set_error(format!(
            "unknown family `{other}`: expected `ainf` or `linf`"
        ))),
    }
}

fn report_out(report: Report, out: *mut *mut OpalgReport) -> OpalgStatus {
    let status = if report.passed() {
        OpalgStatus::Ok
    } else {
        OpalgStatus::CheckFailed
    };
    unsafe {
        *out = Box::into_raw(Box::new(OpalgReport { report }));
    }
    status
}

/// The most recent error message on this thread, or an empty string.
/// Free with [`opalg_string_free`].
#[no_mangle]
pub extern "C" fn opalg_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        let msg = slot
            .borrow()
            .as_ref()
            .map(|c| c.to_string_lossy().into_owned())
            .unwrap_or_default();
        alloc_string(msg)
    })
}

/// Verifies that the generator differential of `family` (`"ainf"` or
/// `"linf"`) squares to zero up to `max_arity`.
///
/// # Safety
/// `family` must be a valid NUL-terminated string and `out` a valid
/// pointer; the report must be freed with [`opalg_report_free`].
#[no_mangle]
pub unsafe extern "C" fn opalg_check_dsq(
    family: *const c_char,
    max_arity: usize,
    out: *mut *mut OpalgReport,
) -> OpalgStatus {
    if out.is_null() {
        return OpalgStatus::NullArgument;
    }
    let family = match read_str(family) {
        Ok(f) => f,
        Err(s) => return s,
    };
    let op = match family_operad(family, max_arity) {
        Ok(op) => op,
        Err(s) => return s,
    };
    match check_d_squared(&op, max_arity) {
        Ok(report) => report_out(report, out),
        Err(e) => set_error(e.to_string()),
    }
}

/// Number of terms of the generator differential at one arity.
///
/// # Safety
/// `family` and `out_count` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn opalg_diff_term_count(
    family: *const c_char,
    arity: usize,
    out_count: *mut usize,
) -> OpalgStatus {
    if out_count.is_null() {
        return OpalgStatus::NullArgument;
    }
    let family = match read_str(family) {
        Ok(f) => f,
        Err(s) => return s,
    };
    let elem = match family {
        "ainf" => ainf_generator_diff(arity),
        "linf" => linf_generator_diff(arity),
        other => {
            return set_error(format!(
                "unknown family `{other}`: expected `ainf` or `linf`"
            ))
        }
    };
    match elem {
        Ok(e) => {
            *out_count = e.term_count();
            OpalgStatus::Ok
        }
        Err(e) => set_error(e.to_string()),
    }
}

/// Parses an algebra description in the text document format and fixes
/// the arity bound for later checks.
///
/// # Safety
/// `text` must be a valid NUL-terminated string and `out` a valid
/// pointer; the handle must be freed with [`opalg_algebra_free`].
#[no_mangle]
pub unsafe extern "C" fn opalg_algebra_parse(
    text: *const c_char,
    max_arity: usize,
    out: *mut *mut OpalgAlgebra,
) -> OpalgStatus {
    if out.is_null() {
        return OpalgStatus::NullArgument;
    }
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match AlgebraDocument::parse(text) {
        Ok(doc) => {
            // surface load-time validation errors (degrees, d∘d) eagerly
            let valid = match doc.kind {
                AlgebraKind::Ainf => doc.to_ainf(max_arity).map(|_| ()),
                AlgebraKind::Linf => doc.to_linf(max_arity).map(|_| ()),
            };
            if let Err(e) = valid {
                return set_error(e.to_string());
            }
            *out = Box::into_raw(Box::new(OpalgAlgebra { doc, max_arity }));
            OpalgStatus::Ok
        }
        Err(e) => set_error(e.to_string()),
    }
}

/// Runs the axiom checker matching the document kind.
///
/// # Safety
/// `alg` must be a live handle from [`opalg_algebra_parse`] and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn opalg_algebra_check(
    alg: *const OpalgAlgebra,
    out: *mut *mut OpalgReport,
) -> OpalgStatus {
    if alg.is_null() || out.is_null() {
        return OpalgStatus::NullArgument;
    }
    let alg = &*alg;
    let checked = match alg.doc.kind {
        AlgebraKind::Ainf => alg
            .doc
            .to_ainf(alg.max_arity)
            .and_then(|a| check_ainf(&a)),
        AlgebraKind::Linf => alg
            .doc
            .to_linf(alg.max_arity)
            .and_then(|a| check_linf(&a)),
    };
    match checked {
        Ok(report) => report_out(report, out),
        Err(e) => set_error(e.to_string()),
    }
}

/// Contracts the algebra onto its homology, transfers the structure and
/// verifies it. On success `out_alg` owns the transferred structure
/// (serialize it to read the operations and the morphism table).
///
/// # Safety
/// `alg` must be a live handle; `out_alg` and `out_report` must be valid
/// pointers.
#[no_mangle]
pub unsafe extern "C" fn opalg_algebra_transfer(
    alg: *const OpalgAlgebra,
    max_arity: usize,
    out_alg: *mut *mut OpalgAlgebra,
    out_report: *mut *mut OpalgReport,
) -> OpalgStatus {
    if alg.is_null() || out_alg.is_null() || out_report.is_null() {
        return OpalgStatus::NullArgument;
    }
    let alg = &*alg;
    let run = || -> opalg::Result<(AlgebraDocument, Report)> {
        let source = alg.doc.to_ainf(max_arity)?;
        let contraction = homology_with_contraction(&source.space, &source.d)?;
        let result = transfer(&TransferProblem {
            source,
            contraction,
            max_arity,
        })?;
        let report = verify_transfer(&result)?;
        Ok((AlgebraDocument::from_transfer(&result), report))
    };
    match run() {
        Ok((doc, report)) => {
            *out_alg = Box::into_raw(Box::new(OpalgAlgebra { doc, max_arity }));
            report_out(report, out_report)
        }
        Err(e) => set_error(e.to_string()),
    }
}

/// Serializes the handle's document back to text. Free the result with
/// [`opalg_string_free`].
///
/// # Safety
/// `alg` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn opalg_algebra_serialize(alg: *const OpalgAlgebra) -> *mut c_char {
    if alg.is_null() {
        return std::ptr::null_mut();
    }
    alloc_string((*alg).doc.serialize())
}

/// True when every line of the report passed.
///
/// # Safety
/// `report` must be a live handle from a check entry point.
#[no_mangle]
pub unsafe extern "C" fn opalg_report_passed(report: *const OpalgReport) -> bool {
    if report.is_null() {
        return false;
    }
    (*report).report.passed()
}

/// Number of check lines in the report.
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn opalg_report_len(report: *const OpalgReport) -> usize {
    if report.is_null() {
        return 0;
    }
    (*report).report.lines.len()
}

/// The machine-readable rendering, one `name arity pass|fail count` line
/// per check. Free with [`opalg_string_free`].
///
/// # Safety
/// `report` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn opalg_report_machine(report: *const OpalgReport) -> *mut c_char {
    if report.is_null() {
        return std::ptr::null_mut();
    }
    alloc_string((*report).report.machine())
}

/// # Safety
/// `ptr` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn opalg_report_free(ptr: *mut OpalgReport) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

/// # Safety
/// `ptr` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn opalg_algebra_free(ptr: *mut OpalgAlgebra) {
    if !ptr.is_null() {
        drop(Box::from_raw(ptr));
    }
}

/// # Safety
/// `ptr` must be a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn opalg_string_free(ptr: *mut c_char) {
    if !ptr.is_null() {
        drop(CString::from_raw(ptr));
    }
}

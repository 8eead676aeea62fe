//! C ABI for the verification library: opaque handles, integer status
//! codes, and JSON-string results.
//!
//! Conventions, uniform across the surface:
//!
//! * quartic coefficient sets travel as opaque [`TqQuartic`] handles,
//!   created by [`tq_quartic_reference`] or [`tq_quartic_from_json`] and
//!   released only by [`tq_quartic_free`];
//! * every fallible call returns a [`TqStatus`] and writes results through
//!   out-pointers, which are left untouched on failure;
//! * strings handed to the caller are NUL-terminated UTF-8 owned by this
//!   library — release them with [`tq_string_free`];
//! * panics never unwind across the boundary: they are caught and
//!   reported as [`TqStatus::Panic`];
//! * after an `InvalidInput` failure, [`tq_last_error_message`] returns a
//!   human-readable diagnostic for the calling thread.
//!
//! Report results are returned as the JSON rendering of the claim
//! records (an array sorted by claim id), so callers reuse one schema
//! across the CLI and this ABI.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use tetraquartic::quartic::QuarticCoefficients;
use tetraquartic::report::{
    failure_count, render_json, run_section, ReportSection, CLAIM_MANIFEST,
};

/// Status code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TqStatus {
    /// Success.
    Ok = 0,
    /// A required pointer argument was NULL.
    NullArgument = 1,
    /// A string argument was not valid UTF-8.
    Utf8 = 2,
    /// The input could not be parsed or a parameter was out of range;
    /// see [`tq_last_error_message`].
    InvalidInput = 3,
    /// An internal panic was caught at the boundary.
    Panic = 4,
}

/// Claim-battery sections, accepted by [`tq_report_run`] as plain
/// integers.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TqSection {
    /// Lattice invariants, class identities, Riemann-Roch arithmetic.
    Lattice = 0,
    /// Discriminant-form values, dual lifts, automorphism group.
    DiscForm = 1,
    /// Isometries and induced discriminant actions.
    Isometry = 2,
    /// Projective geometry of the quartic.
    Quartic = 3,
    /// Everything.
    All = 4,
}

/// Opaque coefficient set of one tetrahedral quartic.
pub struct TqQuartic {
    coeffs: QuarticCoefficients,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

/// Records a diagnostic for the calling thread.
fn set_last_error(message: String) {
    let stored = CString::new(message)
        .unwrap_or_else(|_| CString::new("diagnostic contained a NUL byte").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(stored));
}

/// Runs a closure with panics converted to [`TqStatus::Panic`].
fn guarded(body: impl FnOnce() -> TqStatus) -> TqStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(TqStatus::Panic)
}

/// The most recent `InvalidInput` diagnostic of the calling thread, or
/// NULL when none was recorded.  The caller owns the returned string and
/// must release it with [`tq_string_free`].
#[no_mangle]
pub extern "C" fn tq_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match slot.borrow().as_ref() {
        Some(msg) => msg.clone().into_raw(),
        None => std::ptr::null_mut(),
    })
}

/// Releases a string returned by this library.  NULL is a no-op.
///
/// # Safety
///
/// `s` must be NULL or a pointer previously returned by a function of
/// this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Creates a handle holding the built-in reference sample.  Never fails;
/// release with [`tq_quartic_free`].
#[no_mangle]
pub extern "C" fn tq_quartic_reference() -> *mut TqQuartic {
    Box::into_raw(Box::new(TqQuartic {
        coeffs: QuarticCoefficients::reference_sample(),
    }))
}

/// Parses a coefficient set from JSON (twelve mandatory `"p/q"` string
/// fields `a0..d3`, optional `delta`) and writes the new handle to
/// `out`.
///
/// # Safety
///
/// `json` must be a valid NUL-terminated string and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn tq_quartic_from_json(
    json: *const c_char,
    out: *mut *mut TqQuartic,
) -> TqStatus {
    if json.is_null() || out.is_null() {
        return TqStatus::NullArgument;
    }
    let text = match CStr::from_ptr(json).to_str() {
        Ok(text) => text,
        Err(_) => return TqStatus::Utf8,
    };
    guarded(|| match QuarticCoefficients::from_json_str(text) {
        Ok(coeffs) => {
            *out = Box::into_raw(Box::new(TqQuartic { coeffs }));
            TqStatus::Ok
        }
        Err(e) => {
            set_last_error(e.to_string());
            TqStatus::InvalidInput
        }
    })
}

/// Releases a quartic handle.  NULL is a no-op.
///
/// # Safety
///
/// `handle` must be NULL or a pointer previously returned by a
/// constructor of this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn tq_quartic_free(handle: *mut TqQuartic) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Writes 1 to `out` when every genericity flag of the handle's
/// coefficients holds, 0 otherwise.
///
/// # Safety
///
/// `handle` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn tq_quartic_is_generic(
    handle: *const TqQuartic,
    out: *mut c_int,
) -> TqStatus {
    if handle.is_null() || out.is_null() {
        return TqStatus::NullArgument;
    }
    guarded(|| {
        *out = (*handle).coeffs.genericity().all() as c_int;
        TqStatus::Ok
    })
}

/// Number of claim ids a full report emits (the frozen manifest size).
#[no_mangle]
pub extern "C" fn tq_claim_count() -> usize {
    CLAIM_MANIFEST.len()
}

/// Runs one section of the claim battery (`section` is a [`TqSection`]
/// value) on the handle's coefficients with `jobs` worker threads (0
/// defers to the `TETRAQUARTIC_JOBS` environment variable, then to one
/// worker per core).  On success writes the JSON claim-record array to
/// `out_json` (release with [`tq_string_free`]) and, when `out_failures`
/// is non-NULL, the number of failing claims.
///
/// # Safety
///
/// `handle` and `out_json` must be valid pointers; `out_failures` may be
/// NULL.
#[no_mangle]
pub unsafe extern "C" fn tq_report_run(
    handle: *const TqQuartic,
    section: c_int,
    jobs: usize,
    out_json: *mut *mut c_char,
    out_failures: *mut usize,
) -> TqStatus {
    if handle.is_null() || out_json.is_null() {
        return TqStatus::NullArgument;
    }
    let section = match section {
        0 => ReportSection::Lattice,
        1 => ReportSection::DiscForm,
        2 => ReportSection::Isometry,
        3 => ReportSection::Quartic,
        4 => ReportSection::All,
        other => {
            set_last_error(format!("unknown section code {other}"));
            return TqStatus::InvalidInput;
        }
    };
    let jobs = if jobs == 0 { None } else { Some(jobs) };
    guarded(|| {
        let records = run_section(&(*handle).coeffs, jobs, section);
        let json = render_json(&records);
        let owned = CString::new(json).expect("JSON rendering contains no NUL bytes");
        *out_json = owned.into_raw();
        if !out_failures.is_null() {
            *out_failures = failure_count(&records);
        }
        TqStatus::Ok
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    /// The reference sample as the JSON schema the parser accepts.
    const REFERENCE_JSON: &str = r#"{
        "a0": "1", "a1": "2", "a2": "3",
        "b0": "2", "b1": "5", "b3": "1",
        "c0": "3", "c2": "1", "c3": "2",
        "d1": "1", "d2": "4", "d3": "3",
        "delta": "1"
    }"#;

    fn take_string(ptr: *mut c_char) -> String {
        assert!(!ptr.is_null());
        let text = unsafe { CStr::from_ptr(ptr) }
            .to_str()
            .expect("library strings are UTF-8")
            .to_string();
        unsafe { tq_string_free(ptr) };
        text
    }

    #[test]
    fn reference_handle_runs_the_lattice_section() {
        let handle = tq_quartic_reference();
        let mut json: *mut c_char = ptr::null_mut();
        let mut failures: usize = usize::MAX;
        let status = unsafe {
            tq_report_run(handle, TqSection::Lattice as c_int, 2, &mut json, &mut failures)
        };
        assert_eq!(status, TqStatus::Ok);
        assert_eq!(failures, 0);
        let text = take_string(json);
        let records: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
        let array = records.as_array().expect("array of records");
        assert_eq!(array.len(), 34);
        assert_eq!(array[0]["status"], "pass");
        unsafe { tq_quartic_free(handle) };
    }

    #[test]
    fn json_construction_round_trips_and_reports_genericity() {
        let text = CString::new(REFERENCE_JSON).unwrap();
        let mut handle: *mut TqQuartic = ptr::null_mut();
        let status = unsafe { tq_quartic_from_json(text.as_ptr(), &mut handle) };
        assert_eq!(status, TqStatus::Ok);
        assert!(!handle.is_null());
        let mut generic: c_int = -1;
        assert_eq!(
            unsafe { tq_quartic_is_generic(handle, &mut generic) },
            TqStatus::Ok
        );
        assert_eq!(generic, 1);
        unsafe { tq_quartic_free(handle) };
    }

    #[test]
    fn invalid_input_sets_a_diagnostic() {
        let text = CString::new(r#"{"a0": "1.5"}"#).unwrap();
        let mut handle: *mut TqQuartic = ptr::null_mut();
        let status = unsafe { tq_quartic_from_json(text.as_ptr(), &mut handle) };
        assert_eq!(status, TqStatus::InvalidInput);
        assert!(handle.is_null());
        let message = take_string(tq_last_error_message());
        assert!(message.contains("field"), "{message}");
    }

    #[test]
    fn null_and_range_violations_are_rejected() {
        let mut handle: *mut TqQuartic = ptr::null_mut();
        assert_eq!(
            unsafe { tq_quartic_from_json(ptr::null(), &mut handle) },
            TqStatus::NullArgument
        );
        let reference = tq_quartic_reference();
        let mut json: *mut c_char = ptr::null_mut();
        assert_eq!(
            unsafe { tq_report_run(ptr::null(), 0, 0, &mut json, ptr::null_mut()) },
            TqStatus::NullArgument
        );
        assert_eq!(
            unsafe { tq_report_run(reference, 99, 0, &mut json, ptr::null_mut()) },
            TqStatus::InvalidInput
        );
        let message = take_string(tq_last_error_message());
        assert!(message.contains("99"), "{message}");
        let bad_utf8 = [0xffu8, 0xfe, 0x00];
        assert_eq!(
            unsafe {
                tq_quartic_from_json(bad_utf8.as_ptr() as *const c_char, &mut handle)
            },
            TqStatus::Utf8
        );
        unsafe { tq_quartic_free(reference) };
        // Frees of NULL are no-ops.
        unsafe {
            tq_quartic_free(ptr::null_mut());
            tq_string_free(ptr::null_mut());
        }
    }

    #[test]
    fn claim_count_matches_the_manifest() {
        assert_eq!(tq_claim_count(), CLAIM_MANIFEST.len());
        assert_eq!(tq_claim_count(), 113);
    }

    #[test]
    fn generated_header_declares_the_surface() {
        let header_path = concat!(env!("CARGO_MANIFEST_DIR"), "/include/tetraquartic.h");
        let header = std::fs::read_to_string(header_path).expect("header generated at build time");
        for symbol in [
            "tq_quartic_reference",
            "tq_quartic_from_json",
            "tq_quartic_free",
            "tq_quartic_is_generic",
            "tq_report_run",
            "tq_string_free",
            "tq_last_error_message",
            "tq_claim_count",
            "TETRAQUARTIC_H",
        ] {
            assert!(header.contains(symbol), "header lacks {symbol}");
        }
        // The header must stand alone as C.
        let check = std::process::Command::new("cc")
            .args(["-std=c11", "-fsyntax-only", "-x", "c", header_path])
            .status()
            .expect("cc is available");
        assert!(check.success(), "header does not compile as C11");
    }
}

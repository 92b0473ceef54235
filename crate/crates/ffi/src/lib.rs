//! C ABI over the circulant Hadamard toolkit.
//!
//! Rows and search outcomes cross the boundary as opaque handles owned by
//! this library; strings returned through `out` parameters are
//! NUL-terminated copies the caller must release with [`chm_string_free`].
//! Every fallible call returns a [`ChmStatus`] and writes its result only
//! on `CHM_STATUS_OK`. Panics never unwind across the boundary; they
//! surface as `CHM_STATUS_PANIC`.

// One safety contract covers the whole surface: pointer arguments must be
// null or valid for the declared type, and handles must come from this
// library and not be used after free. Restating that per function would
// only pad the generated header.
#![allow(clippy::missing_safety_doc)]

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use circulant_hadamard::correlation::{is_circulant_hadamard, paf};
use circulant_hadamard::report;
use circulant_hadamard::search::{enumerate, verify_solutions, SearchConfig, SearchOutcome, Symmetry};
use circulant_hadamard::{Error, SignRow};

/// Result of an FFI call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChmStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// An argument was rejected (bad sign value, odd length, bad config).
    InvalidArgument = 2,
    /// A row literal could not be parsed.
    ParseError = 3,
    /// Two rows had different lengths.
    LengthMismatch = 4,
    /// An index was outside its documented range.
    IndexOutOfRange = 5,
    /// An internal panic was caught at the boundary.
    Panic = 6,
}

/// Bit for rotation equivalence in search symmetry masks.
pub const CHM_SYMMETRY_ROTATION: u32 = 1;
/// Bit for negation equivalence in search symmetry masks.
pub const CHM_SYMMETRY_NEGATION: u32 = 2;

/// Opaque handle to a ±1 row.
#[repr(C)]
pub struct ChmRow {
    _private: [u8; 0],
}

/// Opaque handle to the result of one search run.
#[repr(C)]
pub struct ChmSearchOutcome {
    _private: [u8; 0],
}

struct OutcomeBox {
    config: SearchConfig,
    outcome: SearchOutcome,
    verified: bool,
}

fn status_of(err: &Error) -> ChmStatus {
    match err {
        Error::EmptyRow | Error::InvalidEntry(_) | Error::OddLength(_) | Error::Config(_) => {
            ChmStatus::InvalidArgument
        }
        Error::LengthMismatch { .. } => ChmStatus::LengthMismatch,
        Error::IndexOutOfRange { .. } => ChmStatus::IndexOutOfRange,
        Error::Parse(_) => ChmStatus::ParseError,
    }
}

unsafe fn row_ref<'a>(ptr: *const ChmRow) -> Option<&'a SignRow> {
    (ptr as *const SignRow).as_ref()
}

unsafe fn outcome_ref<'a>(ptr: *const ChmSearchOutcome) -> Option<&'a OutcomeBox> {
    (ptr as *const OutcomeBox).as_ref()
}

fn row_handle(row: SignRow) -> *mut ChmRow {
    Box::into_raw(Box::new(row)) as *mut ChmRow
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> ChmStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            ChmStatus::Ok
        }
        Err(_) => ChmStatus::InvalidArgument,
    }
}

fn guarded(body: impl FnOnce() -> ChmStatus) -> ChmStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(ChmStatus::Panic)
}

/// Parses a row literal (compact "+---" or comma-separated "+1,-1,-1,-1")
/// into a new row handle.
#[no_mangle]
pub unsafe extern "C" fn chm_row_parse(literal: *const c_char, out: *mut *mut ChmRow) -> ChmStatus {
    guarded(|| {
        if literal.is_null() || out.is_null() {
            return ChmStatus::NullPointer;
        }
        let text = match CStr::from_ptr(literal).to_str() {
            Ok(t) => t,
            Err(_) => return ChmStatus::ParseError,
        };
        match text.parse::<SignRow>() {
            Ok(row) => {
                *out = row_handle(row);
                ChmStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Builds a row from `len` integers that must each be +1 or -1.
#[no_mangle]
pub unsafe extern "C" fn chm_row_from_signs(
    signs: *const i32,
    len: usize,
    out: *mut *mut ChmRow,
) -> ChmStatus {
    guarded(|| {
        if signs.is_null() || out.is_null() {
            return ChmStatus::NullPointer;
        }
        let slice = std::slice::from_raw_parts(signs, len);
        match SignRow::new(slice.iter().map(|&v| i64::from(v))) {
            Ok(row) => {
                *out = row_handle(row);
                ChmStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a row handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn chm_row_free(row: *mut ChmRow) {
    if !row.is_null() {
        drop(Box::from_raw(row as *mut SignRow));
    }
}

/// Length of the row, or 0 for a null handle.
#[no_mangle]
pub unsafe extern "C" fn chm_row_len(row: *const ChmRow) -> usize {
    row_ref(row).map_or(0, SignRow::len)
}

/// Writes the compact "+/-" literal of the row.
#[no_mangle]
pub unsafe extern "C" fn chm_row_format(row: *const ChmRow, out: *mut *mut c_char) -> ChmStatus {
    guarded(|| {
        if out.is_null() {
            return ChmStatus::NullPointer;
        }
        match row_ref(row) {
            Some(r) => write_string(out, r.to_string()),
            None => ChmStatus::NullPointer,
        }
    })
}

/// New handle holding the row rotated by `shift` (the one-step rotation
/// moves the last entry to the front).
#[no_mangle]
pub unsafe extern "C" fn chm_row_rotate(
    row: *const ChmRow,
    shift: i64,
    out: *mut *mut ChmRow,
) -> ChmStatus {
    guarded(|| {
        if out.is_null() {
            return ChmStatus::NullPointer;
        }
        match row_ref(row) {
            Some(r) => {
                *out = row_handle(r.rotate(shift));
                ChmStatus::Ok
            }
            None => ChmStatus::NullPointer,
        }
    })
}

/// Exact scalar product of two rows of equal length.
#[no_mangle]
pub unsafe extern "C" fn chm_row_dot(
    left: *const ChmRow,
    right: *const ChmRow,
    out: *mut i64,
) -> ChmStatus {
    guarded(|| {
        if out.is_null() {
            return ChmStatus::NullPointer;
        }
        match (row_ref(left), row_ref(right)) {
            (Some(a), Some(b)) => match a.dot(b) {
                Ok(v) => {
                    *out = v;
                    ChmStatus::Ok
                }
                Err(e) => status_of(&e),
            },
            _ => ChmStatus::NullPointer,
        }
    })
}

/// Periodic autocorrelation of the row at the given shift.
#[no_mangle]
pub unsafe extern "C" fn chm_row_paf(
    row: *const ChmRow,
    shift: usize,
    out: *mut i64,
) -> ChmStatus {
    guarded(|| {
        if out.is_null() {
            return ChmStatus::NullPointer;
        }
        match row_ref(row) {
            Some(r) => {
                *out = paf(r, shift);
                ChmStatus::Ok
            }
            None => ChmStatus::NullPointer,
        }
    })
}

/// Sum of the entries (the all-ones eigenvalue of the circulant matrix).
#[no_mangle]
pub unsafe extern "C" fn chm_row_ones_eigenvalue(
    row: *const ChmRow,
    out: *mut i64,
) -> ChmStatus {
    guarded(|| {
        if out.is_null() {
            return ChmStatus::NullPointer;
        }
        match row_ref(row) {
            Some(r) => {
                *out = r.ones_eigenvalue();
                ChmStatus::Ok
            }
            None => ChmStatus::NullPointer,
        }
    })
}

/// Whether the circulant matrix generated by the row is Hadamard,
/// decided in exact integer arithmetic.
#[no_mangle]
pub unsafe extern "C" fn chm_row_is_hadamard(row: *const ChmRow, out: *mut bool) -> ChmStatus {
    guarded(|| {
        if out.is_null() {
            return ChmStatus::NullPointer;
        }
        match row_ref(row) {
            Some(r) => {
                *out = is_circulant_hadamard(r);
                ChmStatus::Ok
            }
            None => ChmStatus::NullPointer,
        }
    })
}

/// Full verification report (Hadamard status, regularity, identities,
/// spectrum) as a JSON string with sorted keys.
#[no_mangle]
pub unsafe extern "C" fn chm_verify_report_json(
    row: *const ChmRow,
    tolerance: f64,
    out: *mut *mut c_char,
) -> ChmStatus {
    guarded(|| {
        if out.is_null() {
            return ChmStatus::NullPointer;
        }
        if tolerance.is_nan() || tolerance <= 0.0 {
            return ChmStatus::InvalidArgument;
        }
        match row_ref(row) {
            Some(r) => {
                let literal = r.to_string();
                let value = report::verify_report(&literal, r, tolerance);
                write_string(out, report::to_json(&value))
            }
            None => ChmStatus::NullPointer,
        }
    })
}

/// Catalogue report of the ten known matrices as a JSON string.
#[no_mangle]
pub unsafe extern "C" fn chm_known_report_json(
    tolerance: f64,
    out: *mut *mut c_char,
) -> ChmStatus {
    guarded(|| {
        if out.is_null() {
            return ChmStatus::NullPointer;
        }
        if tolerance.is_nan() || tolerance <= 0.0 {
            return ChmStatus::InvalidArgument;
        }
        write_string(out, report::to_json(&report::known_report(tolerance)))
    })
}

/// Runs an exhaustive search. `symmetry` is a mask of the CHM_SYMMETRY_*
/// bits; `node_limit` 0 means unlimited. The outcome handle must be
/// released with `chm_search_outcome_free`.
#[no_mangle]
pub unsafe extern "C" fn chm_search(
    order: usize,
    use_regularity_filter: bool,
    use_paf_pruning: bool,
    symmetry: u32,
    worker_count: usize,
    node_limit: u64,
    emit_all: bool,
    out: *mut *mut ChmSearchOutcome,
) -> ChmStatus {
    guarded(|| {
        if out.is_null() {
            return ChmStatus::NullPointer;
        }
        if symmetry & !(CHM_SYMMETRY_ROTATION | CHM_SYMMETRY_NEGATION) != 0 {
            return ChmStatus::InvalidArgument;
        }
        let config = SearchConfig {
            order,
            use_regularity_filter,
            use_paf_pruning,
            symmetry: Symmetry {
                rotation: symmetry & CHM_SYMMETRY_ROTATION != 0,
                negation: symmetry & CHM_SYMMETRY_NEGATION != 0,
            },
            worker_count,
            node_limit: (node_limit > 0).then_some(node_limit),
            emit_all,
        };
        match enumerate(&config) {
            Ok(outcome) => {
                let verified = verify_solutions(&outcome);
                let boxed = Box::new(OutcomeBox {
                    config,
                    outcome,
                    verified,
                });
                *out = Box::into_raw(boxed) as *mut ChmSearchOutcome;
                ChmStatus::Ok
            }
            Err(e) => status_of(&e),
        }
    })
}

/// Releases a search outcome handle. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn chm_search_outcome_free(outcome: *mut ChmSearchOutcome) {
    if !outcome.is_null() {
        drop(Box::from_raw(outcome as *mut OutcomeBox));
    }
}

/// Number of solutions including symmetry copies; 0 for null.
#[no_mangle]
pub unsafe extern "C" fn chm_search_outcome_raw_count(outcome: *const ChmSearchOutcome) -> u64 {
    outcome_ref(outcome).map_or(0, |o| o.outcome.raw_count)
}

/// Number of solution orbits; 0 for null.
#[no_mangle]
pub unsafe extern "C" fn chm_search_outcome_canonical_count(
    outcome: *const ChmSearchOutcome,
) -> u64 {
    outcome_ref(outcome).map_or(0, |o| o.outcome.canonical_count)
}

/// Entry assignments performed by the run; 0 for null.
#[no_mangle]
pub unsafe extern "C" fn chm_search_outcome_nodes_explored(
    outcome: *const ChmSearchOutcome,
) -> u64 {
    outcome_ref(outcome).map_or(0, |o| o.outcome.nodes_explored)
}

/// False when a node limit stopped the run early (or for null).
#[no_mangle]
pub unsafe extern "C" fn chm_search_outcome_complete(outcome: *const ChmSearchOutcome) -> bool {
    outcome_ref(outcome).is_some_and(|o| o.outcome.complete)
}

/// Whether every emitted solution passed independent re-verification.
#[no_mangle]
pub unsafe extern "C" fn chm_search_outcome_verified(outcome: *const ChmSearchOutcome) -> bool {
    outcome_ref(outcome).is_some_and(|o| o.verified)
}

/// Number of emitted rows (raw or canonical per the run's configuration).
#[no_mangle]
pub unsafe extern "C" fn chm_search_outcome_solution_count(
    outcome: *const ChmSearchOutcome,
) -> usize {
    outcome_ref(outcome).map_or(0, |o| o.outcome.solutions.len())
}

/// Writes the compact literal of the emitted row at `index`.
#[no_mangle]
pub unsafe extern "C" fn chm_search_outcome_solution(
    outcome: *const ChmSearchOutcome,
    index: usize,
    out: *mut *mut c_char,
) -> ChmStatus {
    guarded(|| {
        if out.is_null() {
            return ChmStatus::NullPointer;
        }
        match outcome_ref(outcome) {
            Some(o) => match o.outcome.solutions.get(index) {
                Some(row) => write_string(out, row.to_string()),
                None => ChmStatus::IndexOutOfRange,
            },
            None => ChmStatus::NullPointer,
        }
    })
}

/// Full search report as a JSON string; timing (and with it the worker
/// count) is included only on request so outputs stay byte-comparable.
#[no_mangle]
pub unsafe extern "C" fn chm_search_outcome_report_json(
    outcome: *const ChmSearchOutcome,
    include_timing: bool,
    out: *mut *mut c_char,
) -> ChmStatus {
    guarded(|| {
        if out.is_null() {
            return ChmStatus::NullPointer;
        }
        match outcome_ref(outcome) {
            Some(o) => {
                let value =
                    report::search_report(&o.config, &o.outcome, o.verified, include_timing);
                write_string(out, report::to_json(&value))
            }
            None => ChmStatus::NullPointer,
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn chm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

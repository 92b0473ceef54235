//! Exercises the C ABI from Rust: status discipline, handle lifecycles,
//! and agreement with the underlying library.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use chm_ffi::*;

unsafe fn take_string(raw: *mut c_char) -> String {
    assert!(!raw.is_null());
    let s = CStr::from_ptr(raw).to_str().unwrap().to_owned();
    chm_string_free(raw);
    s
}

unsafe fn parse(literal: &str) -> *mut ChmRow {
    let c = CString::new(literal).unwrap();
    let mut row = ptr::null_mut();
    assert_eq!(chm_row_parse(c.as_ptr(), &mut row), ChmStatus::Ok);
    assert!(!row.is_null());
    row
}

#[test]
fn null_arguments_are_rejected_not_dereferenced() {
    unsafe {
        let mut row = ptr::null_mut();
        assert_eq!(
            chm_row_parse(ptr::null(), &mut row),
            ChmStatus::NullPointer
        );

        let literal = CString::new("+---").unwrap();
        assert_eq!(
            chm_row_parse(literal.as_ptr(), ptr::null_mut()),
            ChmStatus::NullPointer
        );

        let mut out = 0i64;
        assert_eq!(
            chm_row_ones_eigenvalue(ptr::null(), &mut out),
            ChmStatus::NullPointer
        );

        assert_eq!(chm_row_len(ptr::null()), 0);
        assert_eq!(chm_search_outcome_raw_count(ptr::null()), 0);
        assert!(!chm_search_outcome_complete(ptr::null()));

        // free functions tolerate null
        chm_row_free(ptr::null_mut());
        chm_search_outcome_free(ptr::null_mut());
        chm_string_free(ptr::null_mut());
    }
}

#[test]
fn parse_and_construction_errors_map_to_statuses() {
    unsafe {
        let bad = CString::new("+-x-").unwrap();
        let mut row = ptr::null_mut();
        assert_eq!(chm_row_parse(bad.as_ptr(), &mut row), ChmStatus::ParseError);

        let signs = [1i32, -1, 2, -1];
        assert_eq!(
            chm_row_from_signs(signs.as_ptr(), signs.len(), &mut row),
            ChmStatus::InvalidArgument
        );
        assert_eq!(
            chm_row_from_signs(signs.as_ptr(), 0, &mut row),
            ChmStatus::InvalidArgument
        );
    }
}

#[test]
fn row_operations_round_trip() {
    unsafe {
        let row = parse("+---");

        assert_eq!(chm_row_len(row), 4);

        let mut text = ptr::null_mut();
        assert_eq!(chm_row_format(row, &mut text), ChmStatus::Ok);
        assert_eq!(take_string(text), "+---");

        let mut eig = 0i64;
        assert_eq!(chm_row_ones_eigenvalue(row, &mut eig), ChmStatus::Ok);
        assert_eq!(eig, -2);

        let mut hadamard = false;
        assert_eq!(chm_row_is_hadamard(row, &mut hadamard), ChmStatus::Ok);
        assert!(hadamard);

        // off-peak autocorrelations vanish, the peak is the length
        let mut value = -1i64;
        assert_eq!(chm_row_paf(row, 0, &mut value), ChmStatus::Ok);
        assert_eq!(value, 4);
        for shift in 1..4 {
            assert_eq!(chm_row_paf(row, shift, &mut value), ChmStatus::Ok);
            assert_eq!(value, 0, "shift {shift}");
        }

        let mut rotated = ptr::null_mut();
        assert_eq!(chm_row_rotate(row, 1, &mut rotated), ChmStatus::Ok);
        let mut rotated_text = ptr::null_mut();
        assert_eq!(chm_row_format(rotated, &mut rotated_text), ChmStatus::Ok);
        assert_eq!(take_string(rotated_text), "-+--");

        let mut dot = 0i64;
        assert_eq!(chm_row_dot(row, rotated, &mut dot), ChmStatus::Ok);
        assert_eq!(dot, 0);

        let signs = [1i32, -1, -1, -1];
        let mut built = ptr::null_mut();
        assert_eq!(
            chm_row_from_signs(signs.as_ptr(), signs.len(), &mut built),
            ChmStatus::Ok
        );
        assert_eq!(chm_row_dot(row, built, &mut dot), ChmStatus::Ok);
        assert_eq!(dot, 4);

        let short = parse("+-");
        assert_eq!(chm_row_dot(row, short, &mut dot), ChmStatus::LengthMismatch);

        chm_row_free(short);
        chm_row_free(built);
        chm_row_free(rotated);
        chm_row_free(row);
    }
}

#[test]
fn verify_report_is_valid_json() {
    unsafe {
        let row = parse("+---");

        let mut raw = ptr::null_mut();
        assert_eq!(chm_verify_report_json(row, 1e-9, &mut raw), ChmStatus::Ok);
        let report: serde_json::Value = serde_json::from_str(&take_string(raw)).unwrap();
        assert_eq!(report["hadamard"], serde_json::json!(true));
        assert_eq!(report["order"], serde_json::json!(4));
        assert_eq!(report["input"], serde_json::json!("+---"));

        assert_eq!(
            chm_verify_report_json(row, 0.0, &mut raw),
            ChmStatus::InvalidArgument
        );
        assert_eq!(
            chm_verify_report_json(row, f64::NAN, &mut raw),
            ChmStatus::InvalidArgument
        );

        chm_row_free(row);
    }
}

#[test]
fn known_report_lists_the_catalogue() {
    unsafe {
        let mut raw = ptr::null_mut();
        assert_eq!(chm_known_report_json(1e-9, &mut raw), ChmStatus::Ok);
        let report: serde_json::Value = serde_json::from_str(&take_string(raw)).unwrap();
        let records = report["records"].as_array().unwrap();
        assert_eq!(records.len(), 10);
        assert!(records
            .iter()
            .all(|r| r["hadamard"] == serde_json::json!(true)));
    }
}

#[test]
fn search_handle_reports_the_order_4_catalogue() {
    unsafe {
        let mut outcome = ptr::null_mut();
        let status = chm_search(
            4,
            true,
            true,
            CHM_SYMMETRY_ROTATION | CHM_SYMMETRY_NEGATION,
            1,
            0,
            false,
            &mut outcome,
        );
        assert_eq!(status, ChmStatus::Ok);

        assert_eq!(chm_search_outcome_raw_count(outcome), 8);
        assert_eq!(chm_search_outcome_canonical_count(outcome), 1);
        assert!(chm_search_outcome_nodes_explored(outcome) > 0);
        assert!(chm_search_outcome_complete(outcome));
        assert!(chm_search_outcome_verified(outcome));
        assert_eq!(chm_search_outcome_solution_count(outcome), 1);

        let mut text = ptr::null_mut();
        assert_eq!(
            chm_search_outcome_solution(outcome, 0, &mut text),
            ChmStatus::Ok
        );
        assert_eq!(take_string(text), "+++-");
        assert_eq!(
            chm_search_outcome_solution(outcome, 1, &mut text),
            ChmStatus::IndexOutOfRange
        );

        let mut raw = ptr::null_mut();
        assert_eq!(
            chm_search_outcome_report_json(outcome, false, &mut raw),
            ChmStatus::Ok
        );
        let report: serde_json::Value = serde_json::from_str(&take_string(raw)).unwrap();
        assert_eq!(report["search"]["raw_count"], serde_json::json!(8));
        assert_eq!(report["search"]["verified"], serde_json::json!(true));
        assert!(report.get("timing").is_none());

        assert_eq!(
            chm_search_outcome_report_json(outcome, true, &mut raw),
            ChmStatus::Ok
        );
        let timed: serde_json::Value = serde_json::from_str(&take_string(raw)).unwrap();
        assert_eq!(timed["timing"]["worker_count"], serde_json::json!(1));

        chm_search_outcome_free(outcome);
    }
}

#[test]
fn search_rejects_bad_configurations() {
    unsafe {
        let mut outcome = ptr::null_mut();
        assert_eq!(
            chm_search(0, true, true, 0, 1, 0, false, &mut outcome),
            ChmStatus::InvalidArgument
        );
        assert_eq!(
            chm_search(4, true, true, 0, 0, 0, false, &mut outcome),
            ChmStatus::InvalidArgument
        );
        assert_eq!(
            chm_search(4, true, true, 0xff, 1, 0, false, &mut outcome),
            ChmStatus::InvalidArgument
        );
    }
}

#[test]
fn generated_header_declares_the_surface() {
    let header = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/include/chm_ffi.h"
    ))
    .expect("header should be generated at build time");

    for needle in [
        "#ifndef CHM_FFI_H",
        "typedef enum ChmStatus",
        "CHM_STATUS_OK = 0",
        "#define CHM_SYMMETRY_ROTATION 1",
        "#define CHM_SYMMETRY_NEGATION 2",
        "typedef struct ChmRow",
        "typedef struct ChmSearchOutcome",
        "chm_row_parse",
        "chm_row_from_signs",
        "chm_row_free",
        "chm_row_paf",
        "chm_row_is_hadamard",
        "chm_verify_report_json",
        "chm_known_report_json",
        "chm_search(",
        "chm_search_outcome_solution(",
        "chm_search_outcome_report_json",
        "chm_string_free",
    ] {
        assert!(header.contains(needle), "header is missing {needle:?}");
    }
}

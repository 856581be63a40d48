//! Exercises the C entry points exactly as a foreign caller would.

use std::ffi::{CStr, CString};

use opalg_ffi::*;

fn cstr(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(ptr: *mut libc::c_char) -> String {
    assert!(!ptr.is_null());
    let s = CStr::from_ptr(ptr).to_string_lossy().into_owned();
    opalg_string_free(ptr);
    s
}

const MASSEY: &str = include_str!("../../opalg/tests/data/massey.alg");
const NONASSOC: &str = include_str!("../../opalg/tests/data/nonassoc.alg");

#[test]
fn dsq_through_the_c_abi() {
    unsafe {
        let mut report: *mut OpalgReport = std::ptr::null_mut();
        let family = cstr("ainf");
        let status = opalg_check_dsq(family.as_ptr(), 4, &mut report);
        assert_eq!(status, OpalgStatus::Ok);
        assert!(opalg_report_passed(report));
        assert_eq!(opalg_report_len(report), 3);
        let machine = take_string(opalg_report_machine(report));
        assert!(machine.contains("dsq-ainf 4 pass 0"));
        opalg_report_free(report);
    }
}

#[test]
fn unknown_family_sets_the_error_message() {
    unsafe {
        let mut report: *mut OpalgReport = std::ptr::null_mut();
        let family = cstr("assoc");
        let status = opalg_check_dsq(family.as_ptr(), 3, &mut report);
        assert_eq!(status, OpalgStatus::Error);
        let msg = take_string(opalg_last_error());
        assert!(msg.contains("unknown family"), "{msg}");
    }
}

#[test]
fn null_arguments_are_rejected() {
    unsafe {
        let mut count = 0usize;
        assert_eq!(
            opalg_diff_term_count(std::ptr::null(), 3, &mut count),
            OpalgStatus::NullArgument
        );
        let family = cstr("ainf");
        assert_eq!(
            opalg_diff_term_count(family.as_ptr(), 3, std::ptr::null_mut()),
            OpalgStatus::NullArgument
        );
    }
}

#[test]
fn term_counts_match_the_engine() {
    unsafe {
        let mut count = 0usize;
        let family = cstr("linf");
        assert_eq!(
            opalg_diff_term_count(family.as_ptr(), 4, &mut count),
            OpalgStatus::Ok
        );
        assert_eq!(count, 10);
    }
}

#[test]
fn parse_check_and_transfer_round_trip() {
    unsafe {
        let text = cstr(MASSEY);
        let mut alg: *mut OpalgAlgebra = std::ptr::null_mut();
        assert_eq!(
            opalg_algebra_parse(text.as_ptr(), 4, &mut alg),
            OpalgStatus::Ok
        );

        let mut report: *mut OpalgReport = std::ptr::null_mut();
        assert_eq!(opalg_algebra_check(alg, &mut report), OpalgStatus::Ok);
        assert!(opalg_report_passed(report));
        opalg_report_free(report);

        let mut transferred: *mut OpalgAlgebra = std::ptr::null_mut();
        let mut certificate: *mut OpalgReport = std::ptr::null_mut();
        assert_eq!(
            opalg_algebra_transfer(alg, 4, &mut transferred, &mut certificate),
            OpalgStatus::Ok
        );
        assert!(opalg_report_passed(certificate));
        let doc = take_string(opalg_algebra_serialize(transferred));
        assert!(doc.contains("op 3"), "{doc}");
        assert!(doc.contains("morphism"), "{doc}");

        opalg_report_free(certificate);
        opalg_algebra_free(transferred);
        opalg_algebra_free(alg);
    }
}

#[test]
fn failing_checks_come_back_as_check_failed() {
    unsafe {
        let text = cstr(NONASSOC);
        let mut alg: *mut OpalgAlgebra = std::ptr::null_mut();
        assert_eq!(
            opalg_algebra_parse(text.as_ptr(), 3, &mut alg),
            OpalgStatus::Ok
        );
        let mut report: *mut OpalgReport = std::ptr::null_mut();
        assert_eq!(
            opalg_algebra_check(alg, &mut report),
            OpalgStatus::CheckFailed
        );
        assert!(!opalg_report_passed(report));
        opalg_report_free(report);
        opalg_algebra_free(alg);
    }
}

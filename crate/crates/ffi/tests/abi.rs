use std::ffi::{CStr, CString};
use std::ptr;

use clutterbetti_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    let p = cb_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

#[test]
fn clutter_round_trip_and_chordality() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(cb_clutter_from_fixture(c("figure1-c").as_ptr(), &mut h), CbStatus::Ok);
        assert_eq!((cb_clutter_n(h), cb_clutter_d(h), cb_clutter_len(h)), (6, 3, 8));
        let mut steps = 0usize;
        assert_eq!(cb_clutter_chordal(h, CbChordalMode::Deletion, 1_000_000, &mut steps), CbStatus::Ok);
        assert_eq!(steps, 6);
        cb_clutter_free(h);

        let mut d = ptr::null_mut();
        assert_eq!(cb_clutter_from_fixture(c("figure1-d").as_ptr(), &mut d), CbStatus::Ok);
        assert_eq!(cb_clutter_chordal(d, CbChordalMode::Deletion, 1_000_000, ptr::null_mut()), CbStatus::Refuted);
        assert!(last_error().contains("step 0"));
        cb_clutter_free(d);
    }
}

#[test]
fn betti_table_through_handles() {
    unsafe {
        let mut i = ptr::null_mut();
        assert_eq!(cb_ideal_parse(c("5\n1 4 5\n2 3 5\n").as_ptr(), &mut i), CbStatus::Ok);
        assert_eq!(cb_ideal_num_generators(i), 2);
        let mut t = ptr::null_mut();
        assert_eq!(cb_betti_table(i, CbField::Rationals, 0, &mut t), CbStatus::Ok);
        assert_eq!(cb_betti_get(t, 1, 0b11111), 1);
        assert_eq!(cb_betti_graded(t, 0, 3), 2);
        assert_eq!(cb_betti_reg(t), 4);
        assert_eq!(cb_betti_pd_quotient(t), 2);
        let mut js = ptr::null_mut();
        assert_eq!(cb_betti_to_json(t, &mut js), CbStatus::Ok);
        assert!(CStr::from_ptr(js).to_str().unwrap().contains("\"count\": 1"));
        cb_string_free(js);
        assert_eq!(cb_betti_table(i, CbField::PrimeField, 4, &mut t), CbStatus::InvalidInput);
        cb_betti_free(t);
        cb_ideal_free(i);
    }
}

#[test]
fn errors_are_reported() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(cb_clutter_parse(c("4 2\n1 2\n1 9\n").as_ptr(), &mut h), CbStatus::Parse);
        assert!(last_error().contains("line 3"));
        assert!(h.is_null());
        assert_eq!(cb_clutter_parse(ptr::null(), &mut h), CbStatus::NullPointer);
        assert_eq!(cb_clutter_from_fixture(c("five-cycle").as_ptr(), &mut h), CbStatus::InvalidInput);
        assert_eq!(cb_clutter_from_fixture(c("nope").as_ptr(), &mut h), CbStatus::InvalidInput);
        let mut i = ptr::null_mut();
        assert_eq!(cb_clutter_complement_ideal(ptr::null(), &mut i), CbStatus::NullPointer);
        cb_clutter_free(ptr::null_mut());
    }
}

#[test]
fn header_declares_the_api() {
    let header = include_str!("../include/clutterbetti.h");
    for sym in ["cb_clutter_parse", "cb_betti_table", "cb_last_error", "CB_STATUS_REFUTED", "typedef struct CbClutter"] {
        assert!(header.contains(sym), "{sym} missing from header");
    }
}

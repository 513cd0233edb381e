//! Exercises the C ABI the way a foreign caller would: raw pointers,
//! status codes, and owned strings.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use zetastar_ffi::*;

fn take_string(ptr: *mut c_char) -> String {
    assert!(!ptr.is_null());
    let s = unsafe { CStr::from_ptr(ptr) }.to_str().unwrap().to_string();
    unsafe { zs_string_free(ptr) };
    s
}

fn last_error() -> String {
    take_string(zs_last_error_message())
}

#[test]
fn version_is_a_static_string() {
    let v = unsafe { CStr::from_ptr(zs_version()) }.to_str().unwrap();
    assert!(!v.is_empty());
}

#[test]
fn eval_round_trip() {
    let engine = zs_engine_new(30, 10);
    assert!(!engine.is_null());
    let index = CString::new("3,1").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { zs_eval(engine, index.as_ptr(), false, &mut out) };
    assert_eq!(status, ZsStatus::Ok);
    let value = take_string(out);
    assert!(value.starts_with("0.270580808427784547879000924135"), "{value}");

    // Star value through the same handle.
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { zs_eval(engine, index.as_ptr(), true, &mut out) };
    assert_eq!(status, ZsStatus::Ok);
    let star = take_string(out);
    assert_eq!(star, "1.352904042138922739395004620676");
    unsafe { zs_engine_free(engine) };
}

#[test]
fn eval_error_paths() {
    let engine = zs_engine_new(30, 10);
    let bad = CString::new("1,2").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { zs_eval(engine, bad.as_ptr(), false, &mut out) };
    assert_eq!(status, ZsStatus::NotAdmissible);
    assert!(out.is_null());
    assert!(last_error().contains("not admissible"));

    let status = unsafe { zs_eval(engine, ptr::null(), false, &mut out) };
    assert_eq!(status, ZsStatus::NullPointer);

    let garbage = CString::new("2,x").unwrap();
    let status = unsafe { zs_eval(engine, garbage.as_ptr(), false, &mut out) };
    assert_eq!(status, ZsStatus::ParseError);
    unsafe { zs_engine_free(engine) };
}

#[test]
fn engine_new_rejects_bad_budget() {
    assert!(zs_engine_new(3, 10).is_null());
    assert!(last_error().contains("digits"));
}

#[test]
fn product_and_reg_through_the_abi() {
    let lhs = CString::new("2").unwrap();
    let rhs = CString::new("2").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let status =
        unsafe { zs_product(ZsProduct::Harmonic, lhs.as_ptr(), rhs.as_ptr(), &mut out) };
    assert_eq!(status, ZsStatus::Ok);
    assert_eq!(take_string(out), "1 xxxy + 2 xyxy");

    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { zs_product(ZsProduct::Tilde, lhs.as_ptr(), rhs.as_ptr(), &mut out) };
    assert_eq!(status, ZsStatus::Ok);
    assert_eq!(take_string(out), "2 xyxy");

    let word = CString::new("yxy").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { zs_reg(word.as_ptr(), &mut out) };
    assert_eq!(status, ZsStatus::Ok);
    assert_eq!(take_string(out), "-2 xyy");

    // Membership violation surfaces as a typed status.
    let bad = CString::new("yx").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { zs_reg(bad.as_ptr(), &mut out) };
    assert_eq!(status, ZsStatus::NotInH1);
}

#[test]
fn dmap_routes_agree() {
    let input = CString::new("2,2").unwrap();
    let mut via_auto: *mut c_char = ptr::null_mut();
    let mut via_key: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { zs_dmap(input.as_ptr(), false, &mut via_auto) }, ZsStatus::Ok);
    assert_eq!(unsafe { zs_dmap(input.as_ptr(), true, &mut via_key) }, ZsStatus::Ok);
    assert_eq!(take_string(via_auto), take_string(via_key));
}

#[test]
fn reconstruction_record_is_json() {
    let engine = zs_engine_new(50, 10);
    let index = CString::new("3,1").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { zs_reconstruct_index(engine, index.as_ptr(), true, 4, &mut out) };
    assert_eq!(status, ZsStatus::Ok);
    let record: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(record["accepted"], serde_json::json!(true));
    assert_eq!(record["numerator"], serde_json::json!("1"));
    assert_eq!(record["denominator"], serde_json::json!("72"));
    unsafe { zs_engine_free(engine) };
}

#[test]
fn qmax_budget_is_respected() {
    let engine = zs_engine_new(50, 10);
    assert_eq!(unsafe { zs_engine_set_qmax(engine, 50) }, ZsStatus::Ok);
    let index = CString::new("3,1").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    // 1/72 needs q = 72 > 50, so the reconstruction must be rejected.
    let status = unsafe { zs_reconstruct_index(engine, index.as_ptr(), true, 4, &mut out) };
    assert_eq!(status, ZsStatus::Ok);
    let record: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(record["accepted"], serde_json::json!(false));
    unsafe { zs_engine_free(engine) };
}

#[test]
fn orbit_and_membership_checks() {
    let engine = zs_engine_new(50, 10);
    let vector = CString::new("0,0").unwrap();
    let mut accepted = false;
    let mut out: *mut c_char = ptr::null_mut();
    let status =
        unsafe { zs_orbit_sum(engine, vector.as_ptr(), 0, &mut accepted, &mut out) };
    assert_eq!(status, ZsStatus::Ok);
    assert!(accepted);
    let record: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(record["pi_power"], serde_json::json!(4));

    let mut accepted = false;
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { zs_two_insertion_membership(engine, 0, &mut accepted, &mut out) };
    assert_eq!(status, ZsStatus::Ok);
    assert!(accepted);
    let record: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(record["reconstruction"]["numerator"], serde_json::json!("7"));
    assert_eq!(record["reconstruction"]["denominator"], serde_json::json!("360"));
    unsafe { zs_engine_free(engine) };
}

#[test]
fn verify_through_the_abi() {
    let suite = CString::new("alpha").unwrap();
    let mut holds = false;
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { zs_verify(suite.as_ptr(), 1, 3, 1, 2, &mut holds, &mut out) };
    assert_eq!(status, ZsStatus::Ok);
    assert!(holds);
    let record: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(record["holds"], serde_json::json!(true));

    let suite = CString::new("weight6").unwrap();
    let mut holds = false;
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { zs_verify(suite.as_ptr(), 0, 0, 0, 0, &mut holds, &mut out) };
    assert_eq!(status, ZsStatus::Ok);
    assert!(holds);

    let suite = CString::new("nonsense").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    let status = unsafe { zs_verify(suite.as_ptr(), 0, 0, 0, 0, ptr::null_mut(), &mut out) };
    assert_eq!(status, ZsStatus::InvalidArgument);
}

#[test]
fn cache_backed_engine_works() {
    let dir = tempfile::tempdir().unwrap();
    let path = CString::new(dir.path().to_str().unwrap()).unwrap();
    let engine = unsafe { zs_engine_new_with_cache(30, 10, path.as_ptr()) };
    assert!(!engine.is_null());
    let index = CString::new("2").unwrap();
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { zs_eval(engine, index.as_ptr(), false, &mut out) }, ZsStatus::Ok);
    let first = take_string(out);
    unsafe { zs_engine_free(engine) };

    // A fresh engine sees the persisted value.
    let engine = unsafe { zs_engine_new_with_cache(30, 10, path.as_ptr()) };
    let mut out: *mut c_char = ptr::null_mut();
    assert_eq!(unsafe { zs_eval(engine, index.as_ptr(), false, &mut out) }, ZsStatus::Ok);
    assert_eq!(take_string(out), first);
    unsafe { zs_engine_free(engine) };
}

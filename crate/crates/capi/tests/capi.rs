//! Exercises the C ABI exactly as a foreign caller would: NUL-terminated
//! strings in, status codes and owned strings out.

use std::ffi::{CStr, CString};
use std::ptr;

use cyclaut_capi::{
    cyclaut_classify, cyclaut_equivalent, cyclaut_last_error, cyclaut_object_free,
    cyclaut_object_parse, cyclaut_string_free, cyclaut_version, CyclautObject, CyclautStatus,
};

fn parse(json: &str) -> *mut CyclautObject {
    let c = CString::new(json).unwrap();
    let mut handle: *mut CyclautObject = ptr::null_mut();
    let status = unsafe { cyclaut_object_parse(c.as_ptr(), &mut handle) };
    assert_eq!(status, CyclautStatus::Ok, "parse failed: {}", last_error());
    assert!(!handle.is_null());
    handle
}

fn last_error() -> String {
    unsafe {
        let p = cyclaut_last_error();
        if p.is_null() {
            String::new()
        } else {
            CStr::from_ptr(p).to_string_lossy().into_owned()
        }
    }
}

fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned();
    unsafe { cyclaut_string_free(p) };
    s
}

#[test]
fn version_is_static() {
    let v = unsafe { CStr::from_ptr(cyclaut_version()) };
    assert!(!v.to_str().unwrap().is_empty());
}

#[test]
fn classify_code_through_abi() {
    let obj = parse(r#"{"n":7,"q":2,"defining_set":[1,2,4]}"#);
    let mut out: *mut std::ffi::c_char = ptr::null_mut();
    let status = unsafe { cyclaut_classify(obj, &mut out) };
    assert_eq!(status, CyclautStatus::Ok);
    let report = take_string(out);
    let v: serde_json::Value = serde_json::from_str(&report).unwrap();
    assert_eq!(v["tag"], "Projective");
    assert_eq!(v["order"]["value"], "168");
    unsafe { cyclaut_object_free(obj) };
}

#[test]
fn classify_graph_through_abi() {
    let obj = parse(r#"{"n":7,"connection":[1,6],"directed":false}"#);
    let mut out: *mut std::ffi::c_char = ptr::null_mut();
    assert_eq!(unsafe { cyclaut_classify(obj, &mut out) }, CyclautStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["tag"], "AffineSubgroup");
    assert_eq!(v["order"]["value"], "14");
    unsafe { cyclaut_object_free(obj) };
}

#[test]
fn equivalence_through_abi() {
    let a = parse(r#"{"n":9,"connection":[1,8],"directed":false}"#);
    let b = parse(r#"{"n":9,"connection":[2,7],"directed":false}"#);
    let mut eq = false;
    let mut out: *mut std::ffi::c_char = ptr::null_mut();
    let status = unsafe { cyclaut_equivalent(a, b, 10_000_000, 1, &mut eq, &mut out) };
    assert_eq!(status, CyclautStatus::Ok);
    assert!(eq);
    let v: serde_json::Value = serde_json::from_str(&take_string(out)).unwrap();
    assert_eq!(v["witness"]["kind"], "multiplier");
    assert_eq!(v["witness"]["a"], 2);
    unsafe {
        cyclaut_object_free(a);
        cyclaut_object_free(b);
    }
}

#[test]
fn equivalence_cap_reports_status() {
    let a = parse(r#"{"n":9,"connection":[1,8],"directed":false}"#);
    let b = parse(r#"{"n":9,"connection":[2,7],"directed":false}"#);
    let mut eq = false;
    let status = unsafe { cyclaut_equivalent(a, b, 10, 1, &mut eq, ptr::null_mut()) };
    assert_eq!(status, CyclautStatus::CapExceeded);
    assert!(last_error().contains("cap"));
    unsafe {
        cyclaut_object_free(a);
        cyclaut_object_free(b);
    }
}

#[test]
fn bad_inputs_report_errors() {
    let mut handle: *mut CyclautObject = ptr::null_mut();
    let c = CString::new("{\"nope\": 1}").unwrap();
    let status = unsafe { cyclaut_object_parse(c.as_ptr(), &mut handle) };
    assert_eq!(status, CyclautStatus::ParseError);
    assert!(!last_error().is_empty());

    let status = unsafe { cyclaut_object_parse(ptr::null(), &mut handle) };
    assert_eq!(status, CyclautStatus::NullArgument);

    // mixed categories
    let a = parse(r#"{"n":9,"connection":[1,8],"directed":false}"#);
    let b = parse(r#"{"n":9,"q":2,"defining_set":[3,6]}"#);
    let mut eq = false;
    let status = unsafe { cyclaut_equivalent(a, b, 1000, 1, &mut eq, ptr::null_mut()) };
    assert_eq!(status, CyclautStatus::ParseError);
    unsafe {
        cyclaut_object_free(a);
        cyclaut_object_free(b);
    }

    // free of NULL is a no-op
    unsafe {
        cyclaut_object_free(ptr::null_mut());
        cyclaut_string_free(ptr::null_mut());
    }
}

#[test]
fn generated_header_contains_the_surface() {
    let header = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/include/cyclaut.h"))
        .expect("cbindgen header generated at build time");
    for symbol in [
        "cyclaut_object_parse",
        "cyclaut_object_free",
        "cyclaut_classify",
        "cyclaut_equivalent",
        "cyclaut_string_free",
        "cyclaut_last_error",
        "CyclautStatus",
        "CyclautObject",
    ] {
        assert!(header.contains(symbol), "missing {symbol}");
    }
}

//! C ABI for the cyclaut library.
//!
//! Objects are parsed from the same JSON descriptors the CLI accepts and
//! held behind opaque handles; reports come back as JSON strings allocated
//! by this library. Every function returns a [`CyclautStatus`]; on failure
//! a thread-local message is available through `cyclaut_last_error`.
//!
//! Ownership rules:
//! - handles from `cyclaut_object_parse` are released with
//!   `cyclaut_object_free`;
//! - strings written to out-parameters are released with
//!   `cyclaut_string_free`;
//! - `cyclaut_last_error` and `cyclaut_version` return borrowed pointers
//!   that must not be freed (the error pointer is valid until the next
//!   failing call on the same thread).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use cyclaut::autgroup::{classify_code, classify_graph};
use cyclaut::codes::{CodeDescriptor, CyclicCode};
use cyclaut::equivalence::{equivalent, EquivConfig};
use cyclaut::error::Error;
use cyclaut::graphs::{CirculantGraph, GraphDescriptor};

/// Status codes returned by every entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CyclautStatus {
    Ok = 0,
    NullArgument = 1,
    ParseError = 2,
    Unsupported = 3,
    CapExceeded = 4,
    InternalError = 5,
}

/// Opaque handle to a parsed cyclic object (code or graph).
pub struct CyclautObject {
    inner: Inner,
}

enum Inner {
    Code(CyclicCode),
    Graph(CirculantGraph),
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg).unwrap_or_else(|_| CString::new("invalid error text").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(err: &Error) -> CyclautStatus {
    match err {
        Error::UnsupportedLength(_) | Error::EvenPrime => CyclautStatus::Unsupported,
        Error::EnumerationCap { .. }
        | Error::DistanceCap { .. }
        | Error::LengthCap { .. }
        | Error::FieldCap { .. } => CyclautStatus::CapExceeded,
        Error::Internal(_) => CyclautStatus::InternalError,
        _ => CyclautStatus::ParseError,
    }
}

fn fail(err: &Error) -> CyclautStatus {
    let status = status_of(err);
    set_error(err.to_string());
    status
}

fn write_string(out: *mut *mut c_char, s: String) -> CyclautStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            CyclautStatus::Ok
        }
        Err(_) => {
            set_error("output contained an interior NUL byte".into());
            CyclautStatus::InternalError
        }
    }
}

/// Version of the underlying library, as a static string.
#[no_mangle]
pub extern "C" fn cyclaut_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Message of the last error raised on this thread, or NULL.
#[no_mangle]
pub extern "C" fn cyclaut_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr())
    })
}

/// Parses a JSON descriptor (`{"n":..,"q":..,"defining_set":[..]}` for a
/// cyclic code, `{"n":..,"connection":[..],"directed":..}` for a circulant
/// graph) into an opaque handle.
///
/// # Safety
/// `json` must be a NUL-terminated C string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn cyclaut_object_parse(
    json: *const c_char,
    out: *mut *mut CyclautObject,
) -> CyclautStatus {
    if json.is_null() || out.is_null() {
        set_error("null argument".into());
        return CyclautStatus::NullArgument;
    }
    let Ok(text) = CStr::from_ptr(json).to_str() else {
        set_error("descriptor is not valid UTF-8".into());
        return CyclautStatus::ParseError;
    };
    let inner = if let Ok(d) = serde_json::from_str::<CodeDescriptor>(text) {
        match CyclicCode::from_descriptor(&d) {
            Ok(c) => Inner::Code(c),
            Err(e) => return fail(&e),
        }
    } else if let Ok(d) = serde_json::from_str::<GraphDescriptor>(text) {
        match CirculantGraph::from_descriptor(&d) {
            Ok(g) => Inner::Graph(g),
            Err(e) => return fail(&e),
        }
    } else {
        set_error("descriptor is neither a code nor a graph".into());
        return CyclautStatus::ParseError;
    };
    *out = Box::into_raw(Box::new(CyclautObject { inner }));
    CyclautStatus::Ok
}

/// Releases a handle returned by `cyclaut_object_parse`. NULL is a no-op.
///
/// # Safety
/// `obj` must be a pointer previously returned by `cyclaut_object_parse`
/// and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cyclaut_object_free(obj: *mut CyclautObject) {
    if !obj.is_null() {
        drop(Box::from_raw(obj));
    }
}

/// Classifies the automorphism group; writes the JSON report
/// (`{"tag":..,"order":..,"evidence":..}`) to `out_json`.
///
/// # Safety
/// `obj` must be a live handle; `out_json` must be a valid pointer. The
/// written string is released with `cyclaut_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cyclaut_classify(
    obj: *const CyclautObject,
    out_json: *mut *mut c_char,
) -> CyclautStatus {
    if obj.is_null() || out_json.is_null() {
        set_error("null argument".into());
        return CyclautStatus::NullArgument;
    }
    let res = match &(*obj).inner {
        Inner::Code(c) => classify_code(c),
        Inner::Graph(g) => classify_graph(g),
    };
    match res {
        Ok(c) => match serde_json::to_string(&c) {
            Ok(s) => write_string(out_json, s),
            Err(e) => {
                set_error(e.to_string());
                CyclautStatus::InternalError
            }
        },
        Err(e) => fail(&e),
    }
}

/// Decides equivalence of two objects of the same category and length.
/// Writes the verdict into `out_equivalent` and, when `out_json` is not
/// NULL, the full witness report
/// (`{"equivalent":..,"witness":..,"checked":..,"space":..}`).
///
/// # Safety
/// `a` and `b` must be live handles; `out_equivalent` must be valid;
/// `out_json` may be NULL. A written string is released with
/// `cyclaut_string_free`.
#[no_mangle]
pub unsafe extern "C" fn cyclaut_equivalent(
    a: *const CyclautObject,
    b: *const CyclautObject,
    enumeration_cap: u64,
    jobs: u32,
    out_equivalent: *mut bool,
    out_json: *mut *mut c_char,
) -> CyclautStatus {
    if a.is_null() || b.is_null() || out_equivalent.is_null() {
        set_error("null argument".into());
        return CyclautStatus::NullArgument;
    }
    let cfg = EquivConfig {
        enumeration_cap: enumeration_cap.max(1) as u128,
        jobs: jobs.max(1) as usize,
    };
    let verdict = match (&(*a).inner, &(*b).inner) {
        (Inner::Code(x), Inner::Code(y)) => {
            if x.field_spec() != y.field_spec() {
                set_error("codes live over different fields".into());
                return CyclautStatus::ParseError;
            }
            equivalent(x, y, &cfg)
        }
        (Inner::Graph(x), Inner::Graph(y)) => {
            if x.directed() != y.directed() {
                set_error("directedness differs".into());
                return CyclautStatus::ParseError;
            }
            equivalent(x, y, &cfg)
        }
        _ => {
            set_error("objects are from different categories".into());
            return CyclautStatus::ParseError;
        }
    };
    match verdict {
        Ok(v) => {
            *out_equivalent = v.equivalent;
            if out_json.is_null() {
                CyclautStatus::Ok
            } else {
                match serde_json::to_string(&v) {
                    Ok(s) => write_string(out_json, s),
                    Err(e) => {
                        set_error(e.to_string());
                        CyclautStatus::InternalError
                    }
                }
            }
        }
        Err(e) => fail(&e),
    }
}

/// Releases a string written by this library. NULL is a no-op.
///
/// # Safety
/// `s` must have been written by a cyclaut function and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cyclaut_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

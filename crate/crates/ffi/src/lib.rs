//! C ABI for the glab library.
//!
//! Conventions:
//! - Every fallible call returns a `GLAB_*` status code; `0` is success.
//! - Results come back through out-pointers: either an opaque `GlabPoly`
//!   handle or a NUL-terminated UTF-8 string.
//! - Strings returned by the library must be released with
//!   [`glab_string_free`]; handles with [`glab_poly_free`].
//! - On failure the out-pointer is left untouched and a human-readable
//!   message is available from [`glab_last_error`] until the next failing
//!   call on the same thread.
//! - All functions are panic-safe: a caught panic reports `GLAB_PANIC`
//!   instead of unwinding across the boundary.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

use glab::{
    binomial_determinant, gpoly_by_rpp, jt_determinant, phi, verify_box, NPathJson, Polynomial,
    SkewShape, VerifyConfig,
};

/// Success.
pub const GLAB_OK: i32 = 0;
/// A box verification ran to completion and found a failing identity.
pub const GLAB_VERIFY_FAILED: i32 = 1;
/// Malformed input: bad UTF-8, bad JSON, or an unparseable shape.
pub const GLAB_PARSE_ERROR: i32 = 2;
/// Structurally valid input outside the domain (e.g. a non-nested shape).
pub const GLAB_DOMAIN_ERROR: i32 = 3;
/// A required pointer argument was NULL.
pub const GLAB_NULL_POINTER: i32 = 4;
/// An internal invariant failed; see [`glab_last_error`].
pub const GLAB_PANIC: i32 = 5;

/// Opaque polynomial handle.
pub struct GlabPoly(Polynomial);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(code: i32, msg: &str) -> i32 {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
    code
}

fn guarded(f: impl FnOnce() -> i32) -> i32 {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(code) => code,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".into());
            set_error(GLAB_PANIC, &msg)
        }
    }
}

/// # Safety
/// `ptr` must be NULL or a NUL-terminated string valid for reads.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, i32> {
    if ptr.is_null() {
        return Err(set_error(GLAB_NULL_POINTER, "string argument is NULL"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|e| set_error(GLAB_PARSE_ERROR, &format!("invalid UTF-8: {e}")))
}

fn write_poly(out: *mut *mut GlabPoly, p: Polynomial) -> i32 {
    if out.is_null() {
        return set_error(GLAB_NULL_POINTER, "out pointer is NULL");
    }
    unsafe { *out = Box::into_raw(Box::new(GlabPoly(p))) };
    GLAB_OK
}

fn write_string(out: *mut *mut c_char, s: String) -> i32 {
    if out.is_null() {
        return set_error(GLAB_NULL_POINTER, "out pointer is NULL");
    }
    let c = match CString::new(s) {
        Ok(c) => c,
        Err(e) => return set_error(GLAB_PANIC, &format!("interior NUL in output: {e}")),
    };
    unsafe { *out = c.into_raw() };
    GLAB_OK
}

fn parse_shape(s: &str) -> Result<SkewShape, i32> {
    SkewShape::from_str(s).map_err(|e| set_error(GLAB_PARSE_ERROR, &e.to_string()))
}

/// The last error message recorded on this thread. The pointer stays valid
/// until the next failing call on the same thread; do not free it.
#[no_mangle]
pub extern "C" fn glab_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Computes the polynomial for `shape` (e.g. "3,2,2/1,1") in `xvars`
/// x-variables by enumerating reverse plane partitions.
///
/// # Safety
/// `shape` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn glab_poly_enumerate(
    shape: *const c_char,
    xvars: u32,
    out: *mut *mut GlabPoly,
) -> i32 {
    guarded(|| {
        let shape = match read_str(shape).and_then(parse_shape) {
            Ok(s) => s,
            Err(code) => return code,
        };
        if !shape.is_contained() {
            return set_error(
                GLAB_DOMAIN_ERROR,
                "the inner shape is not contained in the outer shape",
            );
        }
        write_poly(out, gpoly_by_rpp(&shape.outer, &shape.inner, xvars))
    })
}

/// Computes the same polynomial as a determinant. Non-nested shapes yield
/// the zero polynomial rather than an error.
///
/// If `t_equals_one` is nonzero, uses the binomial entries that evaluate the
/// polynomial at t = 1.
///
/// # Safety
/// `shape` must be a NUL-terminated string; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn glab_poly_determinant(
    shape: *const c_char,
    xvars: u32,
    t_equals_one: i32,
    out: *mut *mut GlabPoly,
) -> i32 {
    guarded(|| {
        let shape = match read_str(shape).and_then(parse_shape) {
            Ok(s) => s,
            Err(code) => return code,
        };
        let p = if t_equals_one != 0 {
            binomial_determinant(&shape.outer, &shape.inner, xvars)
        } else {
            jt_determinant(&shape.outer, &shape.inner, xvars)
        };
        write_poly(out, p)
    })
}

/// Sets every t variable to `value` (0 or 1).
///
/// # Safety
/// `p` must be a live handle from this library; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn glab_poly_specialize_t(
    p: *const GlabPoly,
    value: u8,
    out: *mut *mut GlabPoly,
) -> i32 {
    guarded(|| {
        if p.is_null() {
            return set_error(GLAB_NULL_POINTER, "polynomial handle is NULL");
        }
        if value > 1 {
            return set_error(GLAB_DOMAIN_ERROR, "t can only be specialized to 0 or 1");
        }
        write_poly(out, (*p).0.clone().specialize_t(value))
    })
}

/// Renders the canonical text form (graded ordering, stable across runs).
///
/// # Safety
/// `p` must be a live handle from this library; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn glab_poly_to_string(p: *const GlabPoly, out: *mut *mut c_char) -> i32 {
    guarded(|| {
        if p.is_null() {
            return set_error(GLAB_NULL_POINTER, "polynomial handle is NULL");
        }
        write_string(out, (*p).0.to_string())
    })
}

/// Renders the polynomial as JSON (a list of term records).
///
/// # Safety
/// `p` must be a live handle from this library; `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn glab_poly_to_json(p: *const GlabPoly, out: *mut *mut c_char) -> i32 {
    guarded(|| {
        if p.is_null() {
            return set_error(GLAB_NULL_POINTER, "polynomial handle is NULL");
        }
        match serde_json::to_string(&(*p).0) {
            Ok(s) => write_string(out, s),
            Err(e) => set_error(GLAB_PANIC, &e.to_string()),
        }
    })
}

/// Number of terms; -1 if the handle is NULL.
///
/// # Safety
/// `p` must be NULL or a live handle from this library.
#[no_mangle]
pub unsafe extern "C" fn glab_poly_num_terms(p: *const GlabPoly) -> i64 {
    if p.is_null() {
        return -1;
    }
    (*p).0.num_terms() as i64
}

/// Structural equality; 1 equal, 0 different, -1 if either handle is NULL.
///
/// # Safety
/// Both arguments must be NULL or live handles from this library.
#[no_mangle]
pub unsafe extern "C" fn glab_poly_eq(a: *const GlabPoly, b: *const GlabPoly) -> i32 {
    if a.is_null() || b.is_null() {
        return -1;
    }
    ((*a).0 == (*b).0) as i32
}

/// Releases a polynomial handle. NULL is a no-op.
///
/// # Safety
/// `p` must be NULL or a handle not freed before.
#[no_mangle]
pub unsafe extern "C" fn glab_poly_free(p: *mut GlabPoly) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Releases a string returned by this library. NULL is a no-op.
///
/// # Safety
/// `s` must be NULL or a string from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn glab_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Checks the full identity chain on every nested shape pair in the
/// `rows` x `cols` box with `xvars` x-variables and writes the JSON report.
/// Returns `GLAB_VERIFY_FAILED` (with the report still written) if any
/// identity fails.
///
/// # Safety
/// `out_report_json` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn glab_verify_box(
    rows: usize,
    cols: usize,
    xvars: u32,
    out_report_json: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let report = verify_box(&VerifyConfig {
            rows,
            cols,
            p: xvars,
            identities: Vec::new(),
            mutate: false,
        });
        let ok = report.ok;
        let json = match serde_json::to_string(&report) {
            Ok(s) => s,
            Err(e) => return set_error(GLAB_PANIC, &e.to_string()),
        };
        let code = write_string(out_report_json, json);
        if code != GLAB_OK {
            return code;
        }
        if ok {
            GLAB_OK
        } else {
            set_error(GLAB_VERIFY_FAILED, "an identity failed; see the report")
        }
    })
}

/// Runs the involution on a serialized path family (the same JSON the CLI's
/// `involution-trace` command reads) and writes the full trace as JSON.
///
/// # Safety
/// `family_json` must be a NUL-terminated string; `out_trace_json` valid
/// for writes.
#[no_mangle]
pub unsafe extern "C" fn glab_involution_trace(
    family_json: *const c_char,
    out_trace_json: *mut *mut c_char,
) -> i32 {
    guarded(|| {
        let raw = match read_str(family_json) {
            Ok(s) => s,
            Err(code) => return code,
        };
        let parsed: NPathJson = match serde_json::from_str(raw) {
            Ok(p) => p,
            Err(e) => return set_error(GLAB_PARSE_ERROR, &e.to_string()),
        };
        let (shape, np) = match parsed.decode() {
            Ok(x) => x,
            Err(e) => return set_error(GLAB_DOMAIN_ERROR, &e),
        };
        let trace = match phi(&np, &shape) {
            Ok(t) => t,
            Err(e) => return set_error(GLAB_DOMAIN_ERROR, &e),
        };
        let mut v = trace.to_json();
        v["shape"] = match serde_json::to_value(&shape) {
            Ok(s) => s,
            Err(e) => return set_error(GLAB_PANIC, &e.to_string()),
        };
        write_string(out_trace_json, v.to_string())
    })
}

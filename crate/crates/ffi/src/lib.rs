//! C ABI for `fh-blend`.
//!
//! Interpolants are exposed as an opaque `FhbInterpolant` handle created by
//! one of the `fhb_interpolant_new*` functions and released with
//! `fhb_interpolant_free`. Every fallible call returns an `FhbStatus`; on
//! failure a description is available from `fhb_last_error_message` on the
//! same thread. Handles are immutable, so one handle may be evaluated from
//! several threads concurrently.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use fh_blend::{ExtParams, InterpError, Interpolant, NodeSet, Samples};

/// Opaque interpolant handle.
pub struct FhbInterpolant {
    inner: Interpolant,
}

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FhbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidNodes = 2,
    LengthMismatch = 3,
    NonFinite = 4,
    DegreeOutOfRange = 5,
    EndCountOutOfRange = 6,
    WeightRange = 7,
    BufferTooSmall = 8,
    Internal = 99,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn fail(status: FhbStatus, msg: &str) -> FhbStatus {
    set_last_error(msg);
    status
}

fn status_of(err: &InterpError) -> FhbStatus {
    match err {
        InterpError::InvalidInterval { .. }
        | InterpError::NodesNotIncreasing { .. }
        | InterpError::TooFewNodes(_) => FhbStatus::InvalidNodes,
        InterpError::LengthMismatch { .. } => FhbStatus::LengthMismatch,
        InterpError::NonFiniteSample { .. } | InterpError::NonFiniteInput(_) => FhbStatus::NonFinite,
        InterpError::DegreeOutOfRange { .. } => FhbStatus::DegreeOutOfRange,
        InterpError::EndCountOutOfRange { .. } => FhbStatus::EndCountOutOfRange,
        InterpError::WeightRange { .. } => FhbStatus::WeightRange,
        _ => FhbStatus::Internal,
    }
}

/// Runs `body`, converting library errors and panics into status codes.
fn guarded(body: impl FnOnce() -> Result<(), FhbStatus>) -> FhbStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => FhbStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(FhbStatus::Internal, "internal panic"),
    }
}

fn lib<T>(r: fh_blend::Result<T>) -> Result<T, FhbStatus> {
    r.map_err(|e| fail(status_of(&e), &e.to_string()))
}

/// # Safety
/// `p` must be null or valid for `len` reads.
unsafe fn input<'a>(p: *const f64, len: usize, what: &str) -> Result<&'a [f64], FhbStatus> {
    if p.is_null() {
        return Err(fail(FhbStatus::NullPointer, &format!("{what} is null")));
    }
    Ok(slice::from_raw_parts(p, len))
}

/// # Safety
/// `h` must be null or a live handle.
unsafe fn handle<'a>(h: *const FhbInterpolant) -> Result<&'a Interpolant, FhbStatus> {
    h.as_ref()
        .map(|h| &h.inner)
        .ok_or_else(|| fail(FhbStatus::NullPointer, "interpolant handle is null"))
}

fn out_ptr<T>(p: *mut T) -> Result<*mut T, FhbStatus> {
    if p.is_null() {
        Err(fail(FhbStatus::NullPointer, "output pointer is null"))
    } else {
        Ok(p)
    }
}

fn boxed(inner: Interpolant) -> *mut FhbInterpolant {
    Box::into_raw(Box::new(FhbInterpolant { inner }))
}

/// Builds `r^(d,e)` through `(xs[i], ys[i])`, `i < len`. Nodes must be
/// strictly increasing; `len` is `n + 1`.
///
/// # Safety
/// `xs` and `ys` must be valid for `len` reads; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fhb_interpolant_new(
    xs: *const f64,
    ys: *const f64,
    len: usize,
    d: usize,
    e: usize,
    out: *mut *mut FhbInterpolant,
) -> FhbStatus {
    guarded(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let xs = input(xs, len, "xs")?;
        let ys = input(ys, len, "ys")?;
        let nodes = lib(NodeSet::new(xs.to_vec()))?;
        let samples = lib(Samples::new(ys.to_vec()))?;
        let interp = lib(Interpolant::new(nodes, samples, ExtParams::new(d, e)))?;
        *out = boxed(interp);
        Ok(())
    })
}

/// Like `fhb_interpolant_new` with `len` equispaced nodes on `[a, b]`.
///
/// # Safety
/// `ys` must be valid for `len` reads; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn fhb_interpolant_new_equispaced(
    a: f64,
    b: f64,
    ys: *const f64,
    len: usize,
    d: usize,
    e: usize,
    out: *mut *mut FhbInterpolant,
) -> FhbStatus {
    guarded(|| {
        let out = out_ptr(out)?;
        *out = ptr::null_mut();
        let ys = input(ys, len, "ys")?;
        if len < 2 {
            return Err(fail(FhbStatus::InvalidNodes, "need at least two nodes"));
        }
        let nodes = lib(NodeSet::equispaced(a, b, len - 1))?;
        let samples = lib(Samples::new(ys.to_vec()))?;
        let interp = lib(Interpolant::new(nodes, samples, ExtParams::new(d, e)))?;
        *out = boxed(interp);
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fhb_interpolant_free(h: *mut FhbInterpolant) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of nodes, `n + 1`. Zero for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn fhb_interpolant_len(h: *const FhbInterpolant) -> usize {
    h.as_ref().map_or(0, |h| h.inner.nodes().len())
}

/// Evaluates at `x`. At a node the stored sample is returned exactly.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fhb_interpolant_eval(h: *const FhbInterpolant, x: f64, out: *mut f64) -> FhbStatus {
    guarded(|| {
        let interp = handle(h)?;
        let out = out_ptr(out)?;
        *out = lib(interp.value(x))?;
        Ok(())
    })
}

/// Evaluates at `count` points. Stops at the first failure.
///
/// # Safety
/// `xs` must be valid for `count` reads and `out` for `count` writes.
#[no_mangle]
pub unsafe extern "C" fn fhb_interpolant_eval_many(
    h: *const FhbInterpolant,
    xs: *const f64,
    count: usize,
    out: *mut f64,
) -> FhbStatus {
    guarded(|| {
        let interp = handle(h)?;
        let xs = input(xs, count, "xs")?;
        let out = slice::from_raw_parts_mut(out_ptr(out)?, count);
        for (o, &x) in out.iter_mut().zip(xs) {
            *o = lib(interp.value(x))?;
        }
        Ok(())
    })
}

/// Writes all basis values at `x` into `out`, which must hold at least
/// `fhb_interpolant_len(h)` doubles.
///
/// # Safety
/// `out` must be valid for `out_len` writes.
#[no_mangle]
pub unsafe extern "C" fn fhb_interpolant_basis(
    h: *const FhbInterpolant,
    x: f64,
    out: *mut f64,
    out_len: usize,
) -> FhbStatus {
    guarded(|| {
        let interp = handle(h)?;
        let out = out_ptr(out)?;
        let beta = lib(interp.scheme().basis_values(x))?;
        if out_len < beta.len() {
            return Err(fail(
                FhbStatus::BufferTooSmall,
                &format!("basis needs {} slots, got {out_len}", beta.len()),
            ));
        }
        slice::from_raw_parts_mut(out, beta.len()).copy_from_slice(&beta);
        Ok(())
    })
}

/// Lebesgue function `Σ |β_j(x)|` at `x`.
///
/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn fhb_interpolant_lebesgue(h: *const FhbInterpolant, x: f64, out: *mut f64) -> FhbStatus {
    guarded(|| {
        let interp = handle(h)?;
        let out = out_ptr(out)?;
        *out = lib(interp.scheme().lebesgue(x))?;
        Ok(())
    })
}

/// Static description of a status code.
#[no_mangle]
pub extern "C" fn fhb_status_message(status: FhbStatus) -> *const c_char {
    let s: &'static [u8] = match status {
        FhbStatus::Ok => b"ok\0",
        FhbStatus::NullPointer => b"null pointer argument\0",
        FhbStatus::InvalidNodes => b"nodes must be finite and strictly increasing\0",
        FhbStatus::LengthMismatch => b"node and sample counts differ\0",
        FhbStatus::NonFinite => b"non-finite input\0",
        FhbStatus::DegreeOutOfRange => b"d must satisfy 0 <= d <= n\0",
        FhbStatus::EndCountOutOfRange => b"e must satisfy 0 <= e <= d\0",
        FhbStatus::WeightRange => b"weights leave the floating-point range\0",
        FhbStatus::BufferTooSmall => b"output buffer too small\0",
        FhbStatus::Internal => b"internal error\0",
    };
    s.as_ptr().cast()
}

/// Message for the most recent failure on this thread, or an empty string.
/// Valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fhb_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

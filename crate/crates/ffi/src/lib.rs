//! C ABI for the `shortloc` engine.
//!
//! Algebras and modules are opaque handles owned by the caller and released
//! with [`sl_algebra_free`] / [`sl_module_free`]. Every fallible call returns
//! an [`SlStatus`]; on failure [`sl_last_error_message`] describes the error
//! for the calling thread. Strings returned by the library are released with
//! [`sl_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use shortloc::amodule::ModuleFile;
use shortloc::exactla::PrimeField;
use shortloc::resolution::{betti_sequence_named, is_aligned, is_koszul_up_to_capped};
use shortloc::spectral::spectral_data;
use shortloc::{presets, Error, ModulePresentation, ShortLocalAlgebra};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    /// Malformed input: bad JSON, shapes, non-prime modulus, span deficiency.
    InvalidInput = 3,
    UnknownPreset = 4,
    /// The module has Loewy length greater than 2.
    NotLoewy2 = 5,
    /// The output buffer is too small; the required length is reported.
    BufferTooSmall = 6,
    /// Any other error raised by a computation.
    Computation = 7,
    /// A panic was caught at the boundary.
    Panic = 8,
}

/// An immutable short local algebra.
pub struct SlAlgebra(Arc<ShortLocalAlgebra>);

/// An immutable module, holding a reference to its algebra.
pub struct SlModule(ModulePresentation);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(err: &Error) -> SlStatus {
    match err {
        Error::UnknownPreset(_) | Error::UnknownModule { .. } => SlStatus::UnknownPreset,
        Error::NotLoewy2 => SlStatus::NotLoewy2,
        Error::NotPrime(_)
        | Error::BadShape(_)
        | Error::SpanDeficient { .. }
        | Error::GeneratorNotInRadical
        | Error::NotMinimal
        | Error::OutOfRange(_)
        | Error::Input(_)
        | Error::Json(_)
        | Error::Io(_) => SlStatus::InvalidInput,
        _ => SlStatus::Computation,
    }
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), (SlStatus, String)>) -> SlStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => SlStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside shortloc");
            SlStatus::Panic
        }
    }
}

fn lib(err: Error) -> (SlStatus, String) {
    (status_of(&err), err.to_string())
}

fn null() -> (SlStatus, String) {
    (SlStatus::NullPointer, "null pointer argument".into())
}

unsafe fn str_arg<'a>(s: *const c_char) -> Result<&'a str, (SlStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| (SlStatus::InvalidUtf8, "string argument is not UTF-8".into()))
}

unsafe fn out_arg<'a, T>(p: *mut T) -> Result<&'a mut T, (SlStatus, String)> {
    p.as_mut().ok_or_else(null)
}

unsafe fn ref_arg<'a, T>(p: *const T) -> Result<&'a T, (SlStatus, String)> {
    p.as_ref().ok_or_else(null)
}

fn field(p: u32) -> Result<PrimeField, (SlStatus, String)> {
    PrimeField::new(if p == 0 { shortloc::exactla::DEFAULT_PRIME } else { p }).map_err(lib)
}

/// Message of the last failed call on this thread; empty if none. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn sl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Built-in algebra by name. `p = 0` selects the default prime 32003.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_preset(name: *const c_char, p: u32, out: *mut *mut SlAlgebra) -> SlStatus {
    guard(|| {
        let name = str_arg(name)?;
        let out = out_arg(out)?;
        let pre = presets::preset(name, field(p)?).map_err(lib)?;
        *out = Box::into_raw(Box::new(SlAlgebra(pre.algebra)));
        Ok(())
    })
}

/// Algebra from the JSON algebra file format.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_from_json(json: *const c_char, out: *mut *mut SlAlgebra) -> SlStatus {
    guard(|| {
        let json = str_arg(json)?;
        let out = out_arg(out)?;
        let alg = ShortLocalAlgebra::from_json(json).map_err(lib)?;
        *out = Box::into_raw(Box::new(SlAlgebra(Arc::new(alg))));
        Ok(())
    })
}

/// # Safety
/// `alg` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_free(alg: *mut SlAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_hilbert_type(alg: *const SlAlgebra, e: *mut usize, a: *mut usize) -> SlStatus {
    guard(|| {
        let alg = ref_arg(alg)?;
        let (e, a) = (out_arg(e)?, out_arg(a)?);
        (*e, *a) = alg.0.hilbert_type();
        Ok(())
    })
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_algebra_is_commutative(alg: *const SlAlgebra, out: *mut bool) -> SlStatus {
    guard(|| {
        *out_arg(out)? = ref_arg(alg)?.0.is_commutative();
        Ok(())
    })
}

/// The simple module `S = A/J`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_module_simple(alg: *const SlAlgebra, out: *mut *mut SlModule) -> SlStatus {
    guard(|| {
        let alg = ref_arg(alg)?;
        *out_arg(out)? = Box::into_raw(Box::new(SlModule(ModulePresentation::simple(alg.0.clone()))));
        Ok(())
    })
}

/// The free module `A^t`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_module_free_module(alg: *const SlAlgebra, t: usize, out: *mut *mut SlModule) -> SlStatus {
    guard(|| {
        let alg = ref_arg(alg)?;
        *out_arg(out)? = Box::into_raw(Box::new(SlModule(ModulePresentation::free(alg.0.clone(), t))));
        Ok(())
    })
}

/// A distinguished module of a preset (`"S"` is the simple module).
///
/// # Safety
/// Strings must be NUL-terminated and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn sl_module_preset(preset: *const c_char, module: *const c_char, p: u32, out: *mut *mut SlModule) -> SlStatus {
    guard(|| {
        let (preset, module) = (str_arg(preset)?, str_arg(module)?);
        let out = out_arg(out)?;
        let m = presets::preset(preset, field(p)?).and_then(|pre| pre.module(module)).map_err(lib)?;
        *out = Box::into_raw(Box::new(SlModule(m)));
        Ok(())
    })
}

/// Module from the JSON module file format over `alg`; an `algebra` entry
/// in the JSON is ignored.
///
/// # Safety
/// All pointers must be valid and `json` NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn sl_module_from_json(alg: *const SlAlgebra, json: *const c_char, out: *mut *mut SlModule) -> SlStatus {
    guard(|| {
        let alg = ref_arg(alg)?;
        let json = str_arg(json)?;
        let out = out_arg(out)?;
        let file: ModuleFile = serde_json::from_str(json).map_err(|e| lib(e.into()))?;
        let m = ModulePresentation::from_file(alg.0.clone(), &file).map_err(lib)?;
        *out = Box::into_raw(Box::new(SlModule(m)));
        Ok(())
    })
}

/// # Safety
/// `m` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sl_module_free(m: *mut SlModule) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Dimension vector `(t(M), |JM|)`; fails with `NotLoewy2` when `J^2 M != 0`.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_module_dimension(m: *const SlModule, top: *mut u64, rad: *mut u64) -> SlStatus {
    guard(|| {
        let m = ref_arg(m)?;
        let (top, rad) = (out_arg(top)?, out_arg(rad)?);
        let d = m.0.dimension_vector().map_err(lib)?;
        (*top, *rad) = (d.top, d.rad);
        Ok(())
    })
}

/// Writes `t_0..t_n` into `buf`. `written` receives the number of values
/// computed (fewer than `n + 1` when the dimension cap stops the run, in
/// which case `truncated` is set). If `buf_len` is too small nothing is
/// written, `written` holds the required length and `BufferTooSmall` is
/// returned. `cap = 0` selects the default cap.
///
/// # Safety
/// `buf` must point to `buf_len` writable values; other pointers valid.
#[no_mangle]
pub unsafe extern "C" fn sl_betti_numbers(
    m: *const SlModule,
    n: usize,
    cap: usize,
    buf: *mut u64,
    buf_len: usize,
    written: *mut usize,
    truncated: *mut bool,
) -> SlStatus {
    guard(|| {
        let m = ref_arg(m)?;
        let (written, truncated) = (out_arg(written)?, out_arg(truncated)?);
        let rep = betti_sequence_named(&m.0, n, cap_or_default(cap), "M").map_err(lib)?;
        *written = rep.t_seq.len();
        *truncated = rep.truncated;
        if rep.t_seq.len() > buf_len {
            return Err((SlStatus::BufferTooSmall, format!("need {} slots", rep.t_seq.len())));
        }
        if buf.is_null() {
            return Err(null());
        }
        ptr::copy_nonoverlapping(rep.t_seq.as_ptr(), buf, rep.t_seq.len());
        Ok(())
    })
}

fn cap_or_default(cap: usize) -> usize {
    if cap == 0 {
        shortloc::resolution::DEFAULT_DIM_CAP
    } else {
        cap
    }
}

/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_is_aligned(m: *const SlModule, out: *mut bool) -> SlStatus {
    guard(|| {
        let m = ref_arg(m)?;
        *out_arg(out)? = is_aligned(&m.0).map_err(lib)?.aligned;
        Ok(())
    })
}

/// Koszul-up-to-`n` verdict. `first_failure` receives the first `n` with
/// `dim Omega^n M != omega^n dim M`, or -1.
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_koszul_up_to(m: *const SlModule, n: usize, cap: usize, out: *mut bool, first_failure: *mut i64) -> SlStatus {
    guard(|| {
        let m = ref_arg(m)?;
        let (out, ff) = (out_arg(out)?, out_arg(first_failure)?);
        let rep = is_koszul_up_to_capped(&m.0, n, cap_or_default(cap)).map_err(lib)?;
        *out = rep.koszul_up_to_bound;
        *ff = rep.first_failure.map_or(-1, |k| k as i64);
        Ok(())
    })
}

/// Spectral radius of `omega(e, a)`.
///
/// # Safety
/// `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_spectral_radius(e: u64, a: u64, out: *mut f64) -> SlStatus {
    guard(|| {
        *out_arg(out)? = spectral_data(e, a).rho;
        Ok(())
    })
}

/// Betti report as JSON; release the string with [`sl_string_free`].
///
/// # Safety
/// All pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn sl_betti_report_json(m: *const SlModule, n: usize, cap: usize, out: *mut *mut c_char) -> SlStatus {
    guard(|| {
        let m = ref_arg(m)?;
        let out = out_arg(out)?;
        let rep = betti_sequence_named(&m.0, n, cap_or_default(cap), "M").map_err(lib)?;
        let s = serde_json::to_string(&rep).map_err(|e| lib(e.into()))?;
        *out = CString::new(s).expect("JSON has no NUL").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn sl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

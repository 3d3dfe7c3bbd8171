//! C ABI over `theta-core`.
//!
//! Objects cross the boundary as opaque handles created from and rendered to
//! the same JSON used by the command-line tool. Every fallible call returns a
//! [`ThetaStatus`]; on failure the structured error `{code, message,
//! context}` is kept per thread and can be fetched with [`theta_last_error`].
//! Strings returned by the library are owned by the caller and released with
//! [`theta_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use theta_core::cycles;
use theta_core::orbits::{self, AdmissibleTableau};
use theta_core::theta::{self, DescentResult};
use theta_core::{Error, FormedSpace};

/// Status codes. `Ok` is zero; the others mirror the library error codes,
/// followed by failures specific to the boundary.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThetaStatus {
    Ok = 0,
    InvalidSpace = 1,
    MismatchedType = 2,
    NotEmbeddable = 3,
    BadSign = 4,
    NotAdmissible = 5,
    BadShape = 6,
    BoundExceeded = 7,
    UnsupportedRealClosure = 8,
    IncompatiblePair = 9,
    NotInImage = 10,
    EmptyLift = 11,
    AmbiguousMaximum = 12,
    NotNilpotent = 13,
    NotInAlgebra = 14,
    IdentityViolated = 15,
    NotDescentPair = 16,
    IncomparableSupports = 17,
    NonpositiveDimCirc = 18,
    Unsupported = 19,
    Parse = 20,
    NullPointer = 100,
    InvalidUtf8 = 101,
    IndexOutOfRange = 102,
}

impl From<&Error> for ThetaStatus {
    fn from(e: &Error) -> Self {
        use ThetaStatus::*;
        match e {
            Error::InvalidSpace(_) => InvalidSpace,
            Error::MismatchedType(_) => MismatchedType,
            Error::NotEmbeddable { .. } => NotEmbeddable,
            Error::BadSign { .. } => BadSign,
            Error::NotAdmissible { .. } => NotAdmissible,
            Error::BadShape(_) => BadShape,
            Error::BoundExceeded { .. } => BoundExceeded,
            Error::UnsupportedRealClosure => UnsupportedRealClosure,
            Error::IncompatiblePair(_) => IncompatiblePair,
            Error::NotInImage => NotInImage,
            Error::EmptyLift => EmptyLift,
            Error::AmbiguousMaximum(_) => AmbiguousMaximum,
            Error::NotNilpotent => NotNilpotent,
            Error::NotInAlgebra => NotInAlgebra,
            Error::IdentityViolated(_) => IdentityViolated,
            Error::NotDescentPair(_) => NotDescentPair,
            Error::IncomparableSupports(_) => IncomparableSupports,
            Error::NonpositiveDimCirc => NonpositiveDimCirc,
            Error::Unsupported(_) => Unsupported,
            Error::Parse(_) => Parse,
        }
    }
}

/// A formed space.
pub struct ThetaSpace(FormedSpace);

/// An admissible tableau, i.e. a nilpotent orbit.
pub struct ThetaTableau(AdmissibleTableau);

/// A list of tableaux.
pub struct ThetaTableauList(Vec<AdmissibleTableau>);

/// The result of a generalized descent.
pub struct ThetaDescent(DescentResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

fn set_error(status: ThetaStatus, obj: serde_json::Value) -> ThetaStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(obj.to_string()));
    status
}

fn fail(e: Error) -> ThetaStatus {
    let status = ThetaStatus::from(&e);
    set_error(status, serde_json::to_value(e.to_object()).expect("error object serializes"))
}

fn boundary(status: ThetaStatus, code: &str, message: &str) -> ThetaStatus {
    set_error(status, serde_json::json!({ "code": code, "message": message, "context": null }))
}

fn null() -> ThetaStatus {
    boundary(ThetaStatus::NullPointer, "NullPointer", "null pointer argument")
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, ThetaStatus> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| boundary(ThetaStatus::InvalidUtf8, "InvalidUtf8", "argument is not valid UTF-8"))
}

unsafe fn read<'a, T>(p: *const T) -> Result<&'a T, ThetaStatus> {
    p.as_ref().ok_or_else(null)
}

unsafe fn write<T>(out: *mut T, value: T) -> ThetaStatus {
    if out.is_null() {
        return null();
    }
    *out = value;
    ThetaStatus::Ok
}

unsafe fn write_box<T>(out: *mut *mut T, value: T) -> ThetaStatus {
    if out.is_null() {
        return null();
    }
    *out = Box::into_raw(Box::new(value));
    ThetaStatus::Ok
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> ThetaStatus {
    if out.is_null() {
        return null();
    }
    // serde_json and the renderers never emit interior NULs
    *out = CString::new(s).expect("no interior NUL").into_raw();
    ThetaStatus::Ok
}

fn parse_json<T: serde::de::DeserializeOwned>(s: &str, what: &str) -> Result<T, ThetaStatus> {
    serde_json::from_str(s).map_err(|e| fail(Error::Parse(format!("{what}: {e}"))))
}

macro_rules! tri {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! lib {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return fail(e),
        }
    };
}

/// The library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn theta_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Copy of the last error on this thread as JSON `{code, message,
/// context}`, or NULL if no call has failed. Free with
/// [`theta_string_free`].
#[no_mangle]
pub extern "C" fn theta_last_error() -> *mut c_char {
    LAST_ERROR.with(|e| match e.borrow().as_ref() {
        Some(s) => CString::new(s.as_str()).map(CString::into_raw).unwrap_or(ptr::null_mut()),
        None => ptr::null_mut(),
    })
}

#[no_mangle]
pub extern "C" fn theta_clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

/// # Safety
/// `s` must be NULL or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn theta_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a formed space, e.g. `{"base":"C","division":"C","epsilon":-1,"dim":4}`.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_space_from_json(json: *const c_char, out: *mut *mut ThetaSpace) -> ThetaStatus {
    let s = tri!(read_str(json));
    let v: FormedSpace = tri!(parse_json(s, "formed space"));
    write_box(out, ThetaSpace(v))
}

/// # Safety
/// `space` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_space_to_json(space: *const ThetaSpace, out: *mut *mut c_char) -> ThetaStatus {
    let v = tri!(read(space));
    write_string(out, serde_json::to_string(&v.0).expect("space serializes"))
}

/// Dimension over the division algebra.
///
/// # Safety
/// `space` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_space_dim(space: *const ThetaSpace, out: *mut u32) -> ThetaStatus {
    let v = tri!(read(space));
    write(out, v.0.dim())
}

/// # Safety
/// `space` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn theta_space_free(space: *mut ThetaSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Parse and validate a tableau.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_tableau_from_json(json: *const c_char, out: *mut *mut ThetaTableau) -> ThetaStatus {
    let s = tri!(read_str(json));
    let t: AdmissibleTableau = tri!(parse_json(s, "tableau"));
    lib!(orbits::validate(&t));
    write_box(out, ThetaTableau(t))
}

/// # Safety
/// `tab` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_tableau_to_json(tab: *const ThetaTableau, out: *mut *mut c_char) -> ThetaStatus {
    let t = tri!(read(tab));
    write_string(out, serde_json::to_string(&t.0).expect("tableau serializes"))
}

/// One line per row length with the multiplicity form in brackets.
///
/// # Safety
/// `tab` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_tableau_render(tab: *const ThetaTableau, out: *mut *mut c_char) -> ThetaStatus {
    let t = tri!(read(tab));
    write_string(out, format!("{}\n{}", t.0, t.0.render_ascii()))
}

/// Lie algebra dimension of the stabilizer.
///
/// # Safety
/// `tab` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_tableau_stabilizer_dim(tab: *const ThetaTableau, out: *mut u32) -> ThetaStatus {
    let t = tri!(read(tab));
    let g = lib!(orbits::stabilizer(&t.0));
    write(out, g.lie_dim())
}

/// # Safety
/// `tab` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn theta_tableau_free(tab: *mut ThetaTableau) {
    if !tab.is_null() {
        drop(Box::from_raw(tab));
    }
}

/// All nilpotent orbits of a space, in canonical order.
///
/// # Safety
/// `space` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_enumerate_orbits(space: *const ThetaSpace, out: *mut *mut ThetaTableauList) -> ThetaStatus {
    let v = tri!(read(space));
    let list = lib!(orbits::enumerate_orbits(&v.0));
    write_box(out, ThetaTableauList(list))
}

/// # Safety
/// `list` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn theta_list_len(list: *const ThetaTableauList) -> usize {
    list.as_ref().map(|l| l.0.len()).unwrap_or(0)
}

/// A fresh copy of element `i`; free it with [`theta_tableau_free`].
///
/// # Safety
/// `list` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_list_get(list: *const ThetaTableauList, i: usize, out: *mut *mut ThetaTableau) -> ThetaStatus {
    let l = tri!(read(list));
    match l.0.get(i) {
        Some(t) => write_box(out, ThetaTableau(t.clone())),
        None => boundary(ThetaStatus::IndexOutOfRange, "IndexOutOfRange", "list index out of range"),
    }
}

/// # Safety
/// `list` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn theta_list_free(list: *mut ThetaTableauList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Generalized descent of `orbit_prime` to the space `v`.
///
/// # Safety
/// Handles must be live and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_descend(
    orbit_prime: *const ThetaTableau,
    v: *const ThetaSpace,
    out: *mut *mut ThetaDescent,
) -> ThetaStatus {
    let (op, v) = (tri!(read(orbit_prime)), tri!(read(v)));
    let dr = lib!(theta::generalized_descent(&op.0, &v.0));
    write_box(out, ThetaDescent(dr))
}

/// # Safety
/// `dr` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_descent_to_json(dr: *const ThetaDescent, out: *mut *mut c_char) -> ThetaStatus {
    let d = tri!(read(dr));
    write_string(out, serde_json::to_string(&d.0).expect("descent serializes"))
}

/// # Safety
/// `dr` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_descent_target(dr: *const ThetaDescent, out: *mut *mut ThetaTableau) -> ThetaStatus {
    let d = tri!(read(dr));
    write_box(out, ThetaTableau(d.0.target.clone()))
}

/// # Safety
/// `dr` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_descent_is_strict(dr: *const ThetaDescent, out: *mut bool) -> ThetaStatus {
    let d = tri!(read(dr));
    write(out, d.0.strict)
}

/// Stabilizer factorization of the pair as JSON.
///
/// # Safety
/// `dr` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_descent_factorization(dr: *const ThetaDescent, out: *mut *mut c_char) -> ThetaStatus {
    let d = tri!(read(dr));
    let pf = theta::pair_factorization(&d.0);
    write_string(out, serde_json::to_string(&pf).expect("factorization serializes"))
}

/// # Safety
/// `dr` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn theta_descent_free(dr: *mut ThetaDescent) {
    if !dr.is_null() {
        drop(Box::from_raw(dr));
    }
}

/// Theta lift of `orbit` to the space `vp`.
///
/// # Safety
/// Handles must be live and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_lift(orbit: *const ThetaTableau, vp: *const ThetaSpace, out: *mut *mut ThetaTableau) -> ThetaStatus {
    let (o, vp) = (tri!(read(orbit)), tri!(read(vp)));
    let l = lib!(theta::theta_lift(&o.0, &vp.0));
    write_box(out, ThetaTableau(l))
}

/// Whether `nu` (a rational such as `"3/2"`) lies in the convergent range
/// of the pair `(v, vp)`.
///
/// # Safety
/// `nu` must be a valid C string, handles live and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn theta_in_range(
    nu: *const c_char,
    v: *const ThetaSpace,
    vp: *const ThetaSpace,
    out: *mut bool,
) -> ThetaStatus {
    let nu = lib!(theta_core::rational::parse(tri!(read_str(nu))));
    let (v, vp) = (tri!(read(v)), tri!(read(vp)));
    let r = lib!(cycles::range_report(&nu, &v.0, &vp.0));
    write(out, r.in_range)
}

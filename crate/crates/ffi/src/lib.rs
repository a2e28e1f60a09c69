//! C ABI over `clutterbetti`.
//!
//! Objects are opaque heap handles created by `cb_*_parse`/`cb_*_from_fixture`
//! and released with the matching `cb_*_free`. Every fallible call returns a
//! [`CbStatus`]; on failure [`cb_last_error`] describes the problem for the
//! calling thread until its next call into this library.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use clutterbetti::betti::{betti_table, BettiTable};
use clutterbetti::fixtures::{self, Fixture};
use clutterbetti::io::{self, TableFormat};
use clutterbetti::reduction::{chordality_search_with_budget, ChordalMode};
use clutterbetti::{Error, Face, FieldSpec, SearchOutcome, SquarefreeMonomialIdeal, UniformClutter};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidInput = 4,
    TooLarge = 5,
    /// A search proved that no witness exists.
    Refuted = 6,
    /// A search ran out of budget.
    Unknown = 7,
    Internal = 8,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CbField {
    Rationals = 0,
    /// Uses the accompanying prime.
    PrimeField = 1,
    Integers = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CbChordalMode {
    Deletion = 0,
    EmptySubclutter = 1,
}

pub struct CbClutter(UniformClutter);
pub struct CbIdeal(SquarefreeMonomialIdeal);
pub struct CbBettiTable(BettiTable);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(status: CbStatus, msg: impl Into<String>) -> CbStatus {
    set_error(msg.into());
    status
}

fn from_error(e: Error) -> CbStatus {
    let status = match e {
        Error::Parse { .. } => CbStatus::Parse,
        Error::TooLarge { .. } => CbStatus::TooLarge,
        _ => CbStatus::InvalidInput,
    };
    fail(status, e.to_string())
}

/// Clears the last error, runs `f`, and turns panics into `Internal`.
fn guard(f: impl FnOnce() -> CbStatus) -> CbStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| fail(CbStatus::Internal, "internal panic"))
}

unsafe fn utf8<'a>(p: *const c_char) -> Result<&'a str, CbStatus> {
    if p.is_null() {
        return Err(fail(CbStatus::NullPointer, "null string"));
    }
    CStr::from_ptr(p).to_str().map_err(|_| fail(CbStatus::InvalidUtf8, "string is not UTF-8"))
}

unsafe fn emit<T>(out: *mut *mut T, value: T) -> CbStatus {
    *out = Box::into_raw(Box::new(value));
    CbStatus::Ok
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(CbStatus::NullPointer, concat!(stringify!($p), " is null"));
        })+
    };
}

/// Description of the last failure on this thread, or NULL. Owned by the
/// library; valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn cb_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Parses the text or JSON clutter format.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_clutter_parse(text: *const c_char, out: *mut *mut CbClutter) -> CbStatus {
    guard(|| {
        non_null!(out);
        let s = try_status!(utf8(text));
        match io::parse_clutter(s) {
            Ok(c) => emit(out, CbClutter(c)),
            Err(e) => from_error(e),
        }
    })
}

/// Loads a named clutter fixture, or the facet clutter of a pure complex fixture.
///
/// # Safety
/// `name` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_clutter_from_fixture(name: *const c_char, out: *mut *mut CbClutter) -> CbStatus {
    guard(|| {
        non_null!(out);
        let s = try_status!(utf8(name));
        let c = match fixtures::load(s) {
            Ok(Fixture::Clutter(c)) => Ok(c),
            Ok(Fixture::Complex(c)) if c.is_pure() && !c.facets().is_empty() => {
                UniformClutter::new(c.n(), c.facets()[0].len(), c.facets().to_vec())
            }
            Ok(_) => return fail(CbStatus::InvalidInput, format!("{s} is not a clutter fixture")),
            Err(e) => Err(e),
        };
        match c {
            Ok(c) => emit(out, CbClutter(c)),
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `c` is NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cb_clutter_free(c: *mut CbClutter) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

/// # Safety
/// `c` is a live clutter handle.
#[no_mangle]
pub unsafe extern "C" fn cb_clutter_n(c: *const CbClutter) -> u32 {
    c.as_ref().map_or(0, |c| c.0.n())
}

/// # Safety
/// `c` is a live clutter handle.
#[no_mangle]
pub unsafe extern "C" fn cb_clutter_d(c: *const CbClutter) -> usize {
    c.as_ref().map_or(0, |c| c.0.d())
}

/// Number of circuits.
///
/// # Safety
/// `c` is a live clutter handle.
#[no_mangle]
pub unsafe extern "C" fn cb_clutter_len(c: *const CbClutter) -> usize {
    c.as_ref().map_or(0, |c| c.0.len())
}

/// The ideal generated by the `d`-sets that are not circuits.
///
/// # Safety
/// `c` is a live clutter handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_clutter_complement_ideal(c: *const CbClutter, out: *mut *mut CbIdeal) -> CbStatus {
    guard(|| {
        non_null!(c, out);
        emit(out, CbIdeal((*c).0.circuit_ideal_of_complement()))
    })
}

/// Simplicial-order search. On `Ok`, `steps` receives the order's length.
///
/// # Safety
/// `c` is a live clutter handle; `steps` is NULL or writable.
#[no_mangle]
pub unsafe extern "C" fn cb_clutter_chordal(
    c: *const CbClutter,
    mode: CbChordalMode,
    budget: usize,
    steps: *mut usize,
) -> CbStatus {
    guard(|| {
        non_null!(c);
        let mode = match mode {
            CbChordalMode::Deletion => ChordalMode::Deletion,
            CbChordalMode::EmptySubclutter => ChordalMode::EmptySubclutter,
        };
        match chordality_search_with_budget(&(*c).0, mode, budget) {
            SearchOutcome::Found(seq) => {
                if !steps.is_null() {
                    *steps = seq.steps.len();
                }
                CbStatus::Ok
            }
            SearchOutcome::Refuted { reason } => fail(CbStatus::Refuted, reason),
            SearchOutcome::Unknown { explored } => fail(CbStatus::Unknown, format!("budget exhausted after {explored} states")),
        }
    })
}

/// Parses the text or JSON ideal format.
///
/// # Safety
/// `text` is a NUL-terminated string; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_ideal_parse(text: *const c_char, out: *mut *mut CbIdeal) -> CbStatus {
    guard(|| {
        non_null!(out);
        let s = try_status!(utf8(text));
        match io::parse_ideal(s) {
            Ok(i) => emit(out, CbIdeal(i)),
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `i` is NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cb_ideal_free(i: *mut CbIdeal) {
    if !i.is_null() {
        drop(Box::from_raw(i));
    }
}

/// # Safety
/// `i` is a live ideal handle.
#[no_mangle]
pub unsafe extern "C" fn cb_ideal_num_generators(i: *const CbIdeal) -> usize {
    i.as_ref().map_or(0, |i| i.0.generators().len())
}

/// Full multigraded table. `prime` is read only for `CB_FIELD_PRIME_FIELD`.
///
/// # Safety
/// `i` is a live ideal handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_betti_table(i: *const CbIdeal, field: CbField, prime: u64, out: *mut *mut CbBettiTable) -> CbStatus {
    guard(|| {
        non_null!(i, out);
        let field = match field {
            CbField::Rationals => FieldSpec::Rationals,
            CbField::Integers => FieldSpec::Integers,
            CbField::PrimeField => match FieldSpec::prime(prime) {
                Ok(f) => f,
                Err(e) => return from_error(e),
            },
        };
        match betti_table(&(*i).0, field) {
            Ok(t) => emit(out, CbBettiTable(t)),
            Err(e) => from_error(e),
        }
    })
}

/// # Safety
/// `t` is NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cb_betti_free(t: *mut CbBettiTable) {
    if !t.is_null() {
        drop(Box::from_raw(t));
    }
}

/// `β_{i,W}` with `W` given as a bitmask (vertex `v` is bit `v-1`).
///
/// # Safety
/// `t` is a live table handle.
#[no_mangle]
pub unsafe extern "C" fn cb_betti_get(t: *const CbBettiTable, i: usize, w: u64) -> u64 {
    t.as_ref().map_or(0, |t| t.0.get(i, Face::from_bits(w)))
}

/// Graded `β_{i,j}`.
///
/// # Safety
/// `t` is a live table handle.
#[no_mangle]
pub unsafe extern "C" fn cb_betti_graded(t: *const CbBettiTable, i: usize, j: usize) -> u64 {
    t.as_ref().map_or(0, |t| t.0.graded_entry(i, j))
}

/// Regularity of the ideal, or -1 for the zero ideal.
///
/// # Safety
/// `t` is a live table handle.
#[no_mangle]
pub unsafe extern "C" fn cb_betti_reg(t: *const CbBettiTable) -> i64 {
    t.as_ref().and_then(|t| t.0.reg()).map_or(-1, |r| r as i64)
}

/// Projective dimension of the quotient ring.
///
/// # Safety
/// `t` is a live table handle.
#[no_mangle]
pub unsafe extern "C" fn cb_betti_pd_quotient(t: *const CbBettiTable) -> usize {
    t.as_ref().map_or(0, |t| t.0.pd_quotient())
}

/// JSON `(i, W, count)` listing; release with [`cb_string_free`].
///
/// # Safety
/// `t` is a live table handle; `out` is writable.
#[no_mangle]
pub unsafe extern "C" fn cb_betti_to_json(t: *const CbBettiTable, out: *mut *mut c_char) -> CbStatus {
    guard(|| {
        non_null!(t, out);
        let s = io::emit_betti_table(&(*t).0, TableFormat::Json);
        *out = CString::new(s).expect("JSON has no NUL").into_raw();
        CbStatus::Ok
    })
}

/// # Safety
/// `s` is NULL or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cb_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

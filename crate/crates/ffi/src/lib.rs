//! C interface to the `maltsev` crate.
//!
//! Every function returns an [`MwStatus`]. Results are written through out
//! pointers. Strings returned to the caller are owned by the caller and must
//! be released with [`mw_string_free`]; algebra handles with
//! [`mw_algebra_free`]. After a non-`OK` status, [`mw_last_error_message`]
//! describes the failure on the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use maltsev::algebra::{self, FiniteAlgebra};
use maltsev::congruence;
use maltsev::free_group::{heap_mu, HeapWord, ReducedWord};
use maltsev::rewrite;
use maltsev::search::{self, SearchOutcome};
use maltsev::term::{parse_term, Signature};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MwStatus {
    Ok = 0,
    /// A definitive negative answer, e.g. no Mal'tsev term exists.
    NotFound = 1,
    NullPointer = 2,
    InvalidUtf8 = 3,
    Parse = 4,
    InvalidAlgebra = 5,
    BudgetExhausted = 6,
    Panic = 7,
}

/// Opaque handle to a finite algebra.
pub struct MwAlgebra {
    inner: FiniteAlgebra,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(MwStatus, String);

type FfiResult<T> = Result<T, Failure>;

fn fail<T>(status: MwStatus, msg: impl ToString) -> FfiResult<T> {
    Err(Failure(status, msg.to_string()))
}

fn guard(f: impl FnOnce() -> FfiResult<MwStatus>) -> MwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            status
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MwStatus::Panic
        }
    }
}

unsafe fn input<'a>(p: *const c_char) -> FfiResult<&'a str> {
    if p.is_null() {
        return fail(MwStatus::NullPointer, "null input string");
    }
    CStr::from_ptr(p)
        .to_str()
        .or_else(|e| fail(MwStatus::InvalidUtf8, e))
}

unsafe fn write<T>(out: *mut T, value: T) -> FfiResult<()> {
    if out.is_null() {
        return fail(MwStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> FfiResult<()> {
    let c = CString::new(s).or_else(|e| fail(MwStatus::Parse, e))?;
    if out.is_null() {
        return fail(MwStatus::NullPointer, "null output pointer");
    }
    out.write(c.into_raw());
    Ok(())
}

unsafe fn algebra<'a>(alg: *const MwAlgebra) -> FfiResult<&'a FiniteAlgebra> {
    match alg.as_ref() {
        Some(a) => Ok(&a.inner),
        None => fail(MwStatus::NullPointer, "null algebra handle"),
    }
}

fn mu_term(s: &str) -> FfiResult<maltsev::Term> {
    parse_term(s, &Signature::maltsev()).or_else(|e| fail(MwStatus::Parse, e))
}

/// Normal form of a `mu`-term.
///
/// # Safety
/// `term` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mw_normalize(term: *const c_char, out: *mut *mut c_char) -> MwStatus {
    guard(|| {
        let t = mu_term(input(term)?)?;
        write_string(out, rewrite::normalize(&t).to_string())?;
        Ok(MwStatus::Ok)
    })
}

/// Equality in the free Mal'tsev algebra.
///
/// # Safety
/// `lhs` and `rhs` must be NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mw_equal(lhs: *const c_char, rhs: *const c_char, out: *mut bool) -> MwStatus {
    guard(|| {
        let (l, r) = (mu_term(input(lhs)?)?, mu_term(input(rhs)?)?);
        write(out, rewrite::equal_in_free(&l, &r))?;
        Ok(MwStatus::Ok)
    })
}

/// Freely reduces a space-separated word such as `x y^-1`.
///
/// # Safety
/// `word` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mw_fg_reduce(word: *const c_char, out: *mut *mut c_char) -> MwStatus {
    guard(|| {
        let w: ReducedWord = input(word)?.parse().or_else(|e| fail(MwStatus::Parse, e))?;
        write_string(out, w.to_string())?;
        Ok(MwStatus::Ok)
    })
}

/// `a b^-1 c` on heap words.
///
/// # Safety
/// `a`, `b`, `c` must be NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mw_heap_mu(
    a: *const c_char,
    b: *const c_char,
    c: *const c_char,
    out: *mut *mut c_char,
) -> MwStatus {
    guard(|| {
        let parse = |p| -> FfiResult<HeapWord> { input(p)?.parse().or_else(|e| fail(MwStatus::Parse, e)) };
        let r = heap_mu(&parse(a)?, &parse(b)?, &parse(c)?);
        write_string(out, r.to_string())?;
        Ok(MwStatus::Ok)
    })
}

/// Loads an algebra document.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mw_algebra_from_json(json: *const c_char, out: *mut *mut MwAlgebra) -> MwStatus {
    guard(|| {
        let inner = algebra::load_algebra(input(json)?).or_else(|e| fail(MwStatus::InvalidAlgebra, e))?;
        if out.is_null() {
            return fail(MwStatus::NullPointer, "null output pointer");
        }
        out.write(Box::into_raw(Box::new(MwAlgebra { inner })));
        Ok(MwStatus::Ok)
    })
}

/// Releases a handle from [`mw_algebra_from_json`]. Null is ignored.
///
/// # Safety
/// `alg` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mw_algebra_free(alg: *mut MwAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mw_algebra_size(alg: *const MwAlgebra, out: *mut usize) -> MwStatus {
    guard(|| {
        write(out, algebra(alg)?.size())?;
        Ok(MwStatus::Ok)
    })
}

/// Whether the ternary operation `symbol` satisfies the Mal'tsev identities.
///
/// # Safety
/// `alg` must be a live handle, `symbol` a NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mw_algebra_is_maltsev(
    alg: *const MwAlgebra,
    symbol: *const c_char,
    out: *mut bool,
) -> MwStatus {
    guard(|| {
        let ok = algebra::is_maltsev_operation(algebra(alg)?, input(symbol)?)
            .or_else(|e| fail(MwStatus::InvalidAlgebra, e))?;
        write(out, ok)?;
        Ok(MwStatus::Ok)
    })
}

/// Number of congruences; carriers larger than `limit` are rejected with
/// `MW_STATUS_BUDGET_EXHAUSTED`.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mw_algebra_congruence_count(
    alg: *const MwAlgebra,
    limit: usize,
    out: *mut usize,
) -> MwStatus {
    guard(|| {
        let cons = congruence::all_congruences(algebra(alg)?, limit).or_else(|e| match e {
            congruence::CongruenceError::BudgetExceeded { .. } => fail(MwStatus::BudgetExhausted, e),
            e => fail(MwStatus::InvalidAlgebra, e),
        })?;
        write(out, cons.len())?;
        Ok(MwStatus::Ok)
    })
}

/// Searches for a Mal'tsev term. On `MW_STATUS_OK` the term is written to
/// `out`; `MW_STATUS_NOT_FOUND` means no term exists, and
/// `MW_STATUS_BUDGET_EXHAUSTED` that the search was cut off. `out` is left
/// untouched in the latter two cases.
///
/// # Safety
/// `alg` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mw_algebra_find_maltsev_term(
    alg: *const MwAlgebra,
    budget: usize,
    out: *mut *mut c_char,
) -> MwStatus {
    guard(|| {
        let report = search::find_maltsev_term(algebra(alg)?, budget);
        match report.outcome {
            SearchOutcome::Found { term, verified: true, .. } => {
                write_string(out, term.to_string())?;
                Ok(MwStatus::Ok)
            }
            SearchOutcome::Found { term, .. } => fail(MwStatus::Panic, format!("term {term} failed verification")),
            SearchOutcome::NoTerm => Ok(MwStatus::NotFound),
            SearchOutcome::BudgetExhausted => {
                fail(MwStatus::BudgetExhausted, format!("budget exhausted after {} vectors", report.explored))
            }
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failure on this thread, or null. The pointer is valid
/// until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn mw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

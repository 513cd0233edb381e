//! C ABI for the zetastar engine.
//!
//! Conventions:
//!
//! * The engine is an opaque handle created by [`zs_engine_new`] and
//!   released by [`zs_engine_free`].
//! * Every fallible call returns a [`ZsStatus`]; `ZS_STATUS_OK` is zero.
//!   On failure a thread-local message is retrievable with
//!   [`zs_last_error_message`].
//! * String results are heap-allocated, NUL-terminated UTF-8 written to an
//!   out-pointer; release them with [`zs_string_free`]. Structured results
//!   are JSON strings.
//! * No call unwinds across the boundary; internal panics surface as
//!   `ZS_STATUS_INTERNAL`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;

use zetastar::conjectures::{check_two_insertion_membership, orbit_sum, JVector, OrbitVariant};
use zetastar::error::Error;
use zetastar::identities::{
    check_alpha, check_beta, check_d_block_recursion, check_d_power_recursion, check_d_reduction,
    check_family_expansions, check_weight6_identities, IdentityReport,
};
use zetastar::maps::{dmap, dmap_via_key_identity};
use zetastar::numerics::{Evaluator, PrecisionConfig};
use zetastar::products::{harmonic, reg_shuffle, shuffle, tilde};
use zetastar::reconstruct::{reconstruct_pi_power, DEFAULT_QMAX};
use zetastar::words::Composition;
use zetastar::NcPoly;

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZsStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    ParseError = 4,
    NotAdmissible = 5,
    NotInH1 = 6,
    NotInH0 = 7,
    DivergentEvaluation = 8,
    PrecisionInsufficient = 9,
    Io = 10,
    Internal = 11,
}

/// Product selector for [`zs_product`].
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZsProduct {
    Harmonic = 0,
    Tilde = 1,
    Shuffle = 2,
}

/// Opaque evaluation engine.
pub struct ZsEngine {
    eval: Evaluator,
    cfg: PrecisionConfig,
    qmax: u128,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).ok();
    });
}

fn status_of(err: &Error) -> ZsStatus {
    match err {
        Error::InvalidComposition | Error::InvalidJVector(_) => ZsStatus::InvalidArgument,
        Error::NotInH1(_) => ZsStatus::NotInH1,
        Error::NotInH0(_) => ZsStatus::NotInH0,
        Error::UndefinedWeight => ZsStatus::InvalidArgument,
        Error::Inadmissible(_) => ZsStatus::NotAdmissible,
        Error::DivergentEvaluation(_) => ZsStatus::DivergentEvaluation,
        Error::PrecisionInsufficient(_) => ZsStatus::PrecisionInsufficient,
        Error::WeightCapExceeded { .. } => ZsStatus::InvalidArgument,
        Error::Parse(_) => ZsStatus::ParseError,
        Error::InvalidArgument(_) => ZsStatus::InvalidArgument,
        Error::Io(_) => ZsStatus::Io,
    }
}

fn fail(err: Error) -> ZsStatus {
    let status = status_of(&err);
    set_last_error(&err.to_string());
    status
}

fn guarded(f: impl FnOnce() -> ZsStatus) -> ZsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_last_error("internal panic");
            ZsStatus::Internal
        }
    }
}

/// # Safety
/// `ptr` must be valid for reads up to its NUL terminator.
unsafe fn read_str<'a>(ptr: *const c_char) -> Result<&'a str, ZsStatus> {
    if ptr.is_null() {
        set_last_error("null string argument");
        return Err(ZsStatus::NullPointer);
    }
    unsafe { CStr::from_ptr(ptr) }.to_str().map_err(|_| {
        set_last_error("argument is not valid UTF-8");
        ZsStatus::InvalidUtf8
    })
}

fn write_out(out: *mut *mut c_char, text: String) -> ZsStatus {
    if out.is_null() {
        set_last_error("null output pointer");
        return ZsStatus::NullPointer;
    }
    match CString::new(text) {
        Ok(cstring) => {
            unsafe { *out = cstring.into_raw() };
            ZsStatus::Ok
        }
        Err(_) => {
            set_last_error("result contained an interior NUL");
            ZsStatus::Internal
        }
    }
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn zs_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Last error message for this thread, or null. Free with
/// [`zs_string_free`].
#[no_mangle]
pub extern "C" fn zs_last_error_message() -> *mut c_char {
    LAST_ERROR
        .with(|slot| slot.borrow().clone())
        .map_or(std::ptr::null_mut(), CString::into_raw)
}

/// Release a string returned by this library.
///
/// # Safety
/// `s` must be null or a pointer previously returned by this library and
/// not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Create an engine with the given digit budget (`guard` extra working
/// digits). Returns null on invalid arguments.
#[no_mangle]
pub extern "C" fn zs_engine_new(digits: u32, guard: u32) -> *mut ZsEngine {
    let cfg = PrecisionConfig { digits, guard, oracle_digits: 8 };
    match Evaluator::new(cfg) {
        Ok(eval) => Box::into_raw(Box::new(ZsEngine { eval, cfg, qmax: DEFAULT_QMAX })),
        Err(err) => {
            set_last_error(&err.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Create an engine backed by a persistent value cache in `cache_dir`.
///
/// # Safety
/// `cache_dir` must be a valid NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn zs_engine_new_with_cache(
    digits: u32,
    guard: u32,
    cache_dir: *const c_char,
) -> *mut ZsEngine {
    let dir = match unsafe { read_str(cache_dir) } {
        Ok(s) => PathBuf::from(s),
        Err(_) => return std::ptr::null_mut(),
    };
    let cfg = PrecisionConfig { digits, guard, oracle_digits: 8 };
    match Evaluator::with_cache_dir(cfg, &dir) {
        Ok(eval) => Box::into_raw(Box::new(ZsEngine { eval, cfg, qmax: DEFAULT_QMAX })),
        Err(err) => {
            set_last_error(&err.to_string());
            std::ptr::null_mut()
        }
    }
}

/// Set the reconstruction denominator budget (0 restores the default).
///
/// # Safety
/// `engine` must be a live pointer from `zs_engine_new*`.
#[no_mangle]
pub unsafe extern "C" fn zs_engine_set_qmax(engine: *mut ZsEngine, qmax: u64) -> ZsStatus {
    if engine.is_null() {
        set_last_error("null engine");
        return ZsStatus::NullPointer;
    }
    let engine = unsafe { &mut *engine };
    engine.qmax = if qmax == 0 { DEFAULT_QMAX } else { qmax as u128 };
    ZsStatus::Ok
}

/// Destroy an engine.
///
/// # Safety
/// `engine` must be null or a pointer from `zs_engine_new*`, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn zs_engine_free(engine: *mut ZsEngine) {
    if !engine.is_null() {
        drop(unsafe { Box::from_raw(engine) });
    }
}

unsafe fn engine_ref<'a>(engine: *const ZsEngine) -> Result<&'a ZsEngine, ZsStatus> {
    if engine.is_null() {
        set_last_error("null engine");
        return Err(ZsStatus::NullPointer);
    }
    Ok(unsafe { &*engine })
}

/// Evaluate an admissible index (`star` selects the zeta-star value) and
/// write its decimal value.
///
/// # Safety
/// `engine` must be live; `index` a valid string; `out_value` writable.
#[no_mangle]
pub unsafe extern "C" fn zs_eval(
    engine: *const ZsEngine,
    index: *const c_char,
    star: bool,
    out_value: *mut *mut c_char,
) -> ZsStatus {
    guarded(|| {
        let engine = match unsafe { engine_ref(engine) } {
            Ok(e) => e,
            Err(s) => return s,
        };
        let index = match unsafe { read_str(index) } {
            Ok(s) => s,
            Err(s) => return s,
        };
        let k: Composition = match index.parse() {
            Ok(k) => k,
            Err(err) => return fail(err),
        };
        let value = match if star { engine.eval.mzsv(&k) } else { engine.eval.mzv(&k) } {
            Ok(v) => v,
            Err(err) => return fail(err),
        };
        write_out(out_value, value.published(engine.cfg.digits).0)
    })
}

/// Like [`zs_eval`] but writes a JSON record
/// `{"index", "star", "digits", "value", "err"}`.
///
/// # Safety
/// As [`zs_eval`].
#[no_mangle]
pub unsafe extern "C" fn zs_eval_json(
    engine: *const ZsEngine,
    index: *const c_char,
    star: bool,
    out_json: *mut *mut c_char,
) -> ZsStatus {
    guarded(|| {
        let engine = match unsafe { engine_ref(engine) } {
            Ok(e) => e,
            Err(s) => return s,
        };
        let index = match unsafe { read_str(index) } {
            Ok(s) => s,
            Err(s) => return s,
        };
        let k: Composition = match index.parse() {
            Ok(k) => k,
            Err(err) => return fail(err),
        };
        let value = match if star { engine.eval.mzsv(&k) } else { engine.eval.mzv(&k) } {
            Ok(v) => v,
            Err(err) => return fail(err),
        };
        let (decimal, err) = value.published(engine.cfg.digits);
        let record = serde_json::json!({
            "index": k.to_string(),
            "star": star,
            "digits": engine.cfg.digits,
            "value": decimal,
            "err": err,
        });
        write_out(out_json, record.to_string())
    })
}

fn parse_poly(input: &str) -> Result<NcPoly, Error> {
    let trimmed = input.trim();
    let composition_like = !trimmed.is_empty()
        && trimmed.chars().all(|c| c.is_ascii_digit() || c == ',' || c == '(' || c == ')');
    if composition_like && trimmed.contains(|c: char| c.is_ascii_digit()) {
        let k: Composition = trimmed.trim_matches(['(', ')']).parse()?;
        return Ok(NcPoly::from_word(zetastar::word_from_composition(&k)));
    }
    trimmed.parse()
}

/// Multiply two inputs (compositions like `3,1` or polynomials like
/// `xy + 2 xxy`) under the selected product and write the canonical
/// polynomial string.
///
/// # Safety
/// `lhs`, `rhs` must be valid strings; `out_poly` writable.
#[no_mangle]
pub unsafe extern "C" fn zs_product(
    kind: ZsProduct,
    lhs: *const c_char,
    rhs: *const c_char,
    out_poly: *mut *mut c_char,
) -> ZsStatus {
    guarded(|| {
        let lhs = match unsafe { read_str(lhs) } {
            Ok(s) => s,
            Err(s) => return s,
        };
        let rhs = match unsafe { read_str(rhs) } {
            Ok(s) => s,
            Err(s) => return s,
        };
        let (u, v) = match (parse_poly(lhs), parse_poly(rhs)) {
            (Ok(u), Ok(v)) => (u, v),
            (Err(err), _) | (_, Err(err)) => return fail(err),
        };
        let result = match kind {
            ZsProduct::Harmonic => harmonic(&u, &v),
            ZsProduct::Tilde => tilde(&u, &v),
            ZsProduct::Shuffle => Ok(shuffle(&u, &v)),
        };
        match result {
            Ok(p) => write_out(out_poly, p.to_string()),
            Err(err) => fail(err),
        }
    })
}

/// Apply the star-transfer map `d` (optionally via the prefix-sum
/// recursion route) and write the canonical polynomial string.
///
/// # Safety
/// `input` must be a valid string; `out_poly` writable.
#[no_mangle]
pub unsafe extern "C" fn zs_dmap(
    input: *const c_char,
    via_key_identity: bool,
    out_poly: *mut *mut c_char,
) -> ZsStatus {
    guarded(|| {
        let input = match unsafe { read_str(input) } {
            Ok(s) => s,
            Err(s) => return s,
        };
        let p = match parse_poly(input) {
            Ok(p) => p,
            Err(err) => return fail(err),
        };
        let image = if via_key_identity { dmap_via_key_identity(&p) } else { dmap(&p) };
        match image {
            Ok(q) => write_out(out_poly, q.to_string()),
            Err(err) => fail(err),
        }
    })
}

/// Shuffle-regularize an `H1` polynomial and write the canonical string.
///
/// # Safety
/// `input` must be a valid string; `out_poly` writable.
#[no_mangle]
pub unsafe extern "C" fn zs_reg(input: *const c_char, out_poly: *mut *mut c_char) -> ZsStatus {
    guarded(|| {
        let input = match unsafe { read_str(input) } {
            Ok(s) => s,
            Err(s) => return s,
        };
        match parse_poly(input).and_then(|p| reg_shuffle(&p)) {
            Ok(q) => write_out(out_poly, q.to_string()),
            Err(err) => fail(err),
        }
    })
}

fn reconstruction_record(
    rec: &zetastar::reconstruct::ReconstructionResult,
) -> serde_json::Value {
    serde_json::json!({
        "numerator": rec.numerator.to_string(),
        "denominator": rec.denominator.to_string(),
        "residual": rec.residual,
        "accepted": rec.accepted,
        "qmax": rec.qmax_used.to_string(),
    })
}

/// Evaluate an index and reconstruct it against `pi^pi_power`; writes a
/// JSON reconstruction record.
///
/// # Safety
/// `engine` must be live; `index` valid; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn zs_reconstruct_index(
    engine: *const ZsEngine,
    index: *const c_char,
    star: bool,
    pi_power: u32,
    out_json: *mut *mut c_char,
) -> ZsStatus {
    guarded(|| {
        let engine = match unsafe { engine_ref(engine) } {
            Ok(e) => e,
            Err(s) => return s,
        };
        let index = match unsafe { read_str(index) } {
            Ok(s) => s,
            Err(s) => return s,
        };
        let outcome = index
            .parse::<Composition>()
            .and_then(|k| if star { engine.eval.mzsv(&k) } else { engine.eval.mzv(&k) })
            .and_then(|v| reconstruct_pi_power(&v, pi_power, &engine.cfg, engine.qmax));
        match outcome {
            Ok(rec) => write_out(out_json, reconstruction_record(&rec).to_string()),
            Err(err) => fail(err),
        }
    })
}

/// Reconstruct a literal decimal value against `pi^pi_power`; writes a
/// JSON reconstruction record.
///
/// # Safety
/// `engine` must be live; `value` valid; `out_json` writable.
#[no_mangle]
pub unsafe extern "C" fn zs_reconstruct_value(
    engine: *const ZsEngine,
    value: *const c_char,
    pi_power: u32,
    out_json: *mut *mut c_char,
) -> ZsStatus {
    guarded(|| {
        let engine = match unsafe { engine_ref(engine) } {
            Ok(e) => e,
            Err(s) => return s,
        };
        let text = match unsafe { read_str(value) } {
            Ok(s) => s,
            Err(s) => return s,
        };
        let scale = engine.cfg.working_scale();
        let outcome = zetastar::numerics::fixed::BigFixed::parse_decimal(text, scale)
            .map(|parsed| {
                let frac = text.split('.').nth(1).map_or(0, str::len) as i32;
                zetastar::numerics::HighPrecReal::new(parsed, 10f64.powi(-frac))
            })
            .and_then(|v| reconstruct_pi_power(&v, pi_power, &engine.cfg, engine.qmax));
        match outcome {
            Ok(rec) => write_out(out_json, reconstruction_record(&rec).to_string()),
            Err(err) => fail(err),
        }
    })
}

/// Run one orbit-sum membership check (`variant` 0 appends a zero slot,
/// 1 bumps the last slot) on the comma-separated vector; writes a JSON
/// record with the reconstruction. `out_accepted` receives the verdict.
///
/// # Safety
/// `engine` must be live; `vector` valid; out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn zs_orbit_sum(
    engine: *const ZsEngine,
    vector: *const c_char,
    variant: u32,
    out_accepted: *mut bool,
    out_json: *mut *mut c_char,
) -> ZsStatus {
    guarded(|| {
        let engine = match unsafe { engine_ref(engine) } {
            Ok(e) => e,
            Err(s) => return s,
        };
        let vector = match unsafe { read_str(vector) } {
            Ok(s) => s,
            Err(s) => return s,
        };
        let variant = match variant {
            0 => OrbitVariant::AppendZero,
            1 => OrbitVariant::BumpLast,
            _ => {
                set_last_error("variant must be 0 (append zero) or 1 (bump last)");
                return ZsStatus::InvalidArgument;
            }
        };
        let outcome = vector
            .parse::<JVector>()
            .and_then(|s| orbit_sum(&s, variant, &engine.eval, engine.qmax));
        match outcome {
            Ok(report) => {
                if !out_accepted.is_null() {
                    unsafe { *out_accepted = report.accepted };
                }
                let record = serde_json::json!({
                    "id": report.id,
                    "params": report.params,
                    "pi_power": report.pi_power,
                    "sum": report.sum.published(engine.cfg.digits).0,
                    "reconstruction": reconstruction_record(&report.reconstruction),
                    "accepted": report.accepted,
                });
                write_out(out_json, record.to_string())
            }
            Err(err) => fail(err),
        }
    })
}

/// Membership check for the two-insertion star sum at `n`.
///
/// # Safety
/// `engine` must be live; out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn zs_two_insertion_membership(
    engine: *const ZsEngine,
    n: u32,
    out_accepted: *mut bool,
    out_json: *mut *mut c_char,
) -> ZsStatus {
    guarded(|| {
        let engine = match unsafe { engine_ref(engine) } {
            Ok(e) => e,
            Err(s) => return s,
        };
        match check_two_insertion_membership(n, &engine.eval, engine.qmax) {
            Ok(report) => {
                if !out_accepted.is_null() {
                    unsafe { *out_accepted = report.accepted };
                }
                let record = serde_json::json!({
                    "id": report.id,
                    "params": report.params,
                    "pi_power": report.pi_power,
                    "sum": report.sum.published(engine.cfg.digits).0,
                    "reconstruction": reconstruction_record(&report.reconstruction),
                    "accepted": report.accepted,
                });
                write_out(out_json, record.to_string())
            }
            Err(err) => fail(err),
        }
    })
}

/// Run one exact identity check. Suites: `alpha`, `beta`, `families`,
/// `reduction`, `power`, `block` (parameterized by `n`/`l` and `a, b, c`)
/// and `weight6` (no parameters). `out_holds` receives the verdict.
///
/// # Safety
/// `suite` must be a valid string; out-pointers writable.
#[no_mangle]
pub unsafe extern "C" fn zs_verify(
    suite: *const c_char,
    n: u32,
    a: u32,
    b: u32,
    c: u32,
    out_holds: *mut bool,
    out_json: *mut *mut c_char,
) -> ZsStatus {
    guarded(|| {
        let suite = match unsafe { read_str(suite) } {
            Ok(s) => s,
            Err(s) => return s,
        };
        let reports: Result<Vec<IdentityReport>, Error> = match suite {
            "alpha" => check_alpha(n, a, b, c).map(|r| vec![r]),
            "beta" => check_beta(n, a, b, c).map(|r| vec![r]),
            "families" => check_family_expansions(n, a, b, c).map(|r| r.to_vec()),
            "reduction" => check_d_reduction(n, a, b, c).map(|r| vec![r]),
            "power" => check_d_power_recursion(n, a, b).map(|r| vec![r]),
            "block" => check_d_block_recursion(n, a, b).map(|r| vec![r]),
            "weight6" => check_weight6_identities().map(|(x, y)| vec![x, y]),
            other => Err(Error::InvalidArgument(format!("unknown suite `{other}`"))),
        };
        match reports {
            Ok(reports) => {
                let holds = reports.iter().all(|r| r.holds);
                if !out_holds.is_null() {
                    unsafe { *out_holds = holds };
                }
                let record = serde_json::json!({
                    "suite": suite,
                    "holds": holds,
                    "checks": reports
                        .iter()
                        .map(|r| {
                            serde_json::json!({
                                "name": r.name,
                                "params": r.params,
                                "holds": r.holds,
                                "difference_head": r.difference_head(10),
                            })
                        })
                        .collect::<Vec<_>>(),
                });
                write_out(out_json, record.to_string())
            }
            Err(err) => fail(err),
        }
    })
}

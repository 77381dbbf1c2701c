//! C ABI for the kostant library.
//!
//! Conventions:
//! - every function is `extern "C"` and panic-free;
//! - functions returning pointers return NULL on failure and store a
//!   message retrievable via [`kostant_last_error_message`];
//! - strings returned to the caller are heap-allocated, NUL-terminated and
//!   must be released with [`kostant_string_free`];
//! - tables are opaque handles released with [`kostant_table_free`].
//!
//! The matching header is generated into `include/kostant.h` at build time.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;
use std::str::FromStr;

use num_rational::Rational64;

use kostant::cli::{self, OutputFormat};
use kostant::classify::{self, ClassifiedRep};
use kostant::reps::{HighestWeight, KostantPair};
use kostant::rootsys::{HalfInt, RankContext};
use kostant::spectral::CuspidalDatum;

/// Status codes returned by the fallible entry points.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KostantStatus {
    Ok = 0,
    /// Some oracle check failed (verification ran to completion).
    VerificationFailed = 1,
    /// Malformed arguments: bad rank data, non-dominant weight, bad UTF-8...
    InvalidArgument = 2,
    /// Null pointer where data was required.
    NullPointer = 3,
    /// Internal rendering failure.
    Internal = 4,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: impl Into<Vec<u8>>) {
    let cstring = CString::new(message).unwrap_or_else(|_| {
        CString::new("error message contained a NUL byte").expect("static string is NUL-free")
    });
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(cstring));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

/// Message describing the most recent failure on this thread, or NULL if
/// none. The caller owns the returned string (free with
/// `kostant_string_free`).
#[no_mangle]
pub extern "C" fn kostant_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|slot| match slot.borrow().as_ref() {
        Some(msg) => msg.clone().into_raw(),
        None => ptr::null_mut(),
    })
}

/// Crate version as a static string; do not free.
#[no_mangle]
pub extern "C" fn kostant_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Frees a string allocated by this library. NULL is accepted.
///
/// # Safety
/// `s` must have been returned by a function of this library and not freed
/// before.
#[no_mangle]
pub unsafe extern "C" fn kostant_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

unsafe fn read_str<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, KostantStatus> {
    if ptr.is_null() {
        set_last_error(format!("{what} is NULL"));
        return Err(KostantStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_last_error(format!("{what} is not valid UTF-8"));
        KostantStatus::InvalidArgument
    })
}

fn into_c_string(s: String) -> *mut c_char {
    match CString::new(s) {
        Ok(cs) => cs.into_raw(),
        Err(_) => {
            set_last_error("rendered output contained a NUL byte");
            ptr::null_mut()
        }
    }
}

fn parse_format(format: u32) -> Result<OutputFormat, KostantStatus> {
    match format {
        0 => Ok(OutputFormat::Json),
        1 => Ok(OutputFormat::Csv),
        2 => Ok(OutputFormat::Markdown),
        other => {
            set_last_error(format!("unknown format code {other} (0=json 1=csv 2=markdown)"));
            Err(KostantStatus::InvalidArgument)
        }
    }
}

fn context_and_weight(
    n: usize,
    k: usize,
    lambda: &str,
) -> Result<(RankContext, HighestWeight), KostantStatus> {
    let ctx = RankContext::new(n, k).map_err(|e| {
        set_last_error(e.to_string());
        KostantStatus::InvalidArgument
    })?;
    let lam = HighestWeight::from_str(lambda).map_err(|e| {
        set_last_error(e.to_string());
        KostantStatus::InvalidArgument
    })?;
    if lam.n() != n {
        set_last_error(format!("lambda has {} entries, expected {n}", lam.n()));
        return Err(KostantStatus::InvalidArgument);
    }
    Ok((ctx, lam))
}

/// Opaque classified table: every Kostant representative for one
/// (n, k, lambda), with evaluation data, in the table sort order.
pub struct KostantTable {
    ctx: RankContext,
    lam: HighestWeight,
    rows: Vec<ClassifiedRep>,
}

/// Builds a table handle, or NULL on error. `lambda` is a comma-separated
/// dominant weight such as "2,1,0".
///
/// # Safety
/// `lambda` must be a valid NUL-terminated string or NULL.
#[no_mangle]
pub unsafe extern "C" fn kostant_table_new(
    n: usize,
    k: usize,
    lambda: *const c_char,
) -> *mut KostantTable {
    clear_last_error();
    let lambda = match read_str(lambda, "lambda") {
        Ok(s) => s,
        Err(_) => return ptr::null_mut(),
    };
    let (ctx, lam) = match context_and_weight(n, k, lambda) {
        Ok(v) => v,
        Err(_) => return ptr::null_mut(),
    };
    let mut rows = Vec::new();
    for rep in kostant::reps::enumerate_kostant(ctx) {
        match classify::classify_rep(rep, &lam) {
            Ok(c) => rows.push(c),
            Err(e) => {
                set_last_error(e.to_string());
                return ptr::null_mut();
            }
        }
    }
    rows.sort_by(|a, b| {
        b.t.cmp(&a.t)
            .then(a.rep.length().cmp(&b.rep.length()))
            .then(a.rep.pair().i_set().cmp(b.rep.pair().i_set()))
            .then(a.rep.pair().j_set().cmp(b.rep.pair().j_set()))
    });
    Box::into_raw(Box::new(KostantTable { ctx, lam, rows }))
}

/// Number of rows (Kostant representatives) in the table.
///
/// # Safety
/// `table` must be a live handle from `kostant_table_new` or NULL.
#[no_mangle]
pub unsafe extern "C" fn kostant_table_len(table: *const KostantTable) -> usize {
    table.as_ref().map_or(0, |t| t.rows.len())
}

/// Rank n of the table's context (0 for NULL).
///
/// # Safety
/// `table` must be a live handle from `kostant_table_new` or NULL.
#[no_mangle]
pub unsafe extern "C" fn kostant_table_n(table: *const KostantTable) -> usize {
    table.as_ref().map_or(0, |t| t.ctx.n())
}

/// Parabolic index k of the table's context (0 for NULL).
///
/// # Safety
/// `table` must be a live handle from `kostant_table_new` or NULL.
#[no_mangle]
pub unsafe extern "C" fn kostant_table_k(table: *const KostantTable) -> usize {
    table.as_ref().map_or(0, |t| t.ctx.k())
}

/// The table's highest weight as a comma-separated list (caller frees).
///
/// # Safety
/// `table` must be a live handle from `kostant_table_new` or NULL.
#[no_mangle]
pub unsafe extern "C" fn kostant_table_lambda(table: *const KostantTable) -> *mut c_char {
    let Some(table) = table.as_ref() else {
        return ptr::null_mut();
    };
    let entries = table
        .lam
        .entries()
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",");
    into_c_string(entries)
}

/// JSON object for one row, or NULL if the index is out of range.
///
/// # Safety
/// `table` must be a live handle from `kostant_table_new` or NULL.
#[no_mangle]
pub unsafe extern "C" fn kostant_table_row_json(
    table: *const KostantTable,
    index: usize,
) -> *mut c_char {
    clear_last_error();
    let Some(table) = table.as_ref() else {
        set_last_error("table is NULL");
        return ptr::null_mut();
    };
    let Some(row) = table.rows.get(index) else {
        set_last_error(format!(
            "row {index} out of range (table has {} rows)",
            table.rows.len()
        ));
        return ptr::null_mut();
    };
    match serde_json::to_string(row) {
        Ok(json) => into_c_string(json),
        Err(e) => {
            set_last_error(e.to_string());
            ptr::null_mut()
        }
    }
}

/// Releases a table handle. NULL is accepted.
///
/// # Safety
/// `table` must be a live handle from `kostant_table_new`, freed only once.
#[no_mangle]
pub unsafe extern "C" fn kostant_table_free(table: *mut KostantTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Full rendered table (same bytes as `kostant table` on the CLI).
/// `format`: 0 = json, 1 = csv, 2 = markdown. NULL on error.
///
/// # Safety
/// `lambda` must be a valid NUL-terminated string or NULL.
#[no_mangle]
pub unsafe extern "C" fn kostant_table_render(
    n: usize,
    k: usize,
    lambda: *const c_char,
    format: u32,
) -> *mut c_char {
    clear_last_error();
    let result = (|| {
        let lambda = read_str(lambda, "lambda")?;
        let format = parse_format(format)?;
        let (ctx, lam) = context_and_weight(n, k, lambda)?;
        cli::cmd_table(ctx, &lam, format).map_err(|e| {
            set_last_error(e.to_string());
            KostantStatus::Internal
        })
    })();
    match result {
        Ok(rendered) => into_c_string(rendered),
        Err(_) => ptr::null_mut(),
    }
}

/// Rendered classification at the evaluation point `t` given as "p" or
/// "p/q" (e.g. "1/2"). NULL on error.
///
/// # Safety
/// `lambda` and `t` must be valid NUL-terminated strings or NULL.
#[no_mangle]
pub unsafe extern "C" fn kostant_classify_render(
    n: usize,
    k: usize,
    lambda: *const c_char,
    t: *const c_char,
    format: u32,
) -> *mut c_char {
    clear_last_error();
    let result = (|| {
        let lambda = read_str(lambda, "lambda")?;
        let t = read_str(t, "t")?;
        let format = parse_format(format)?;
        let (ctx, lam) = context_and_weight(n, k, lambda)?;
        let target: Rational64 = cli::parse_rational(t).map_err(|e| {
            set_last_error(e.to_string());
            KostantStatus::InvalidArgument
        })?;
        cli::cmd_classify(ctx, &lam, target, format).map_err(|e| {
            set_last_error(e.to_string());
            KostantStatus::Internal
        })
    })();
    match result {
        Ok(rendered) => into_c_string(rendered),
        Err(_) => ptr::null_mut(),
    }
}

/// Analytic flags for `kostant_verdict_render`. For k = n the two
/// Rankin-Selberg fields must be `Absent`.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum KostantFlag {
    Absent = 0,
    False = 1,
    True = 2,
}

impl KostantFlag {
    fn to_option(self) -> Option<bool> {
        match self {
            KostantFlag::Absent => None,
            KostantFlag::False => Some(false),
            KostantFlag::True => Some(true),
        }
    }
}

/// Verdict for one representative (I, J) under the given analytic flags,
/// rendered as by the CLI. `i_csv`/`j_csv` are comma-separated 1-based
/// index lists; empty strings name the empty set. NULL on error.
///
/// # Safety
/// `lambda`, `i_csv` and `j_csv` must be valid NUL-terminated strings or
/// NULL.
#[no_mangle]
pub unsafe extern "C" fn kostant_verdict_render(
    n: usize,
    k: usize,
    lambda: *const c_char,
    i_csv: *const c_char,
    j_csv: *const c_char,
    sigma_self_dual: bool,
    omega_trivial: bool,
    l_half_nonzero: KostantFlag,
    rs_pole_at_one: KostantFlag,
    lift_from_so_k: bool,
    local_kernel: bool,
    format: u32,
) -> *mut c_char {
    clear_last_error();
    let result = (|| {
        let lambda = read_str(lambda, "lambda")?;
        let i_csv = read_str(i_csv, "i_csv")?;
        let j_csv = read_str(j_csv, "j_csv")?;
        let format = parse_format(format)?;
        let (ctx, lam) = context_and_weight(n, k, lambda)?;
        let invalid = |e: kostant::Error| {
            set_last_error(e.to_string());
            KostantStatus::InvalidArgument
        };
        let pair = KostantPair::new(
            cli::parse_index_list(i_csv).map_err(invalid)?,
            cli::parse_index_list(j_csv).map_err(invalid)?,
            ctx,
        )
        .map_err(invalid)?;
        let datum = CuspidalDatum::new(
            ctx,
            sigma_self_dual,
            omega_trivial,
            l_half_nonzero.to_option(),
            rs_pole_at_one.to_option(),
            lift_from_so_k,
        )
        .map_err(invalid)?;
        cli::cmd_verdict(&datum, &lam, &pair, local_kernel, format).map_err(|e| {
            set_last_error(e.to_string());
            KostantStatus::Internal
        })
    })();
    match result {
        Ok(rendered) => into_c_string(rendered),
        Err(_) => ptr::null_mut(),
    }
}

/// Degree data for (n, k): the cuspidal ranges plus, when requested, the
/// residual window at `t_twice/2` (pass `has_t = false` to skip). NULL on
/// error.
#[no_mangle]
pub extern "C" fn kostant_degrees_render(
    n: usize,
    k: usize,
    has_t: bool,
    t_twice: i64,
    format: u32,
) -> *mut c_char {
    clear_last_error();
    let result = (|| {
        let format = parse_format(format)?;
        let ctx = RankContext::new(n, k).map_err(|e| {
            set_last_error(e.to_string());
            KostantStatus::InvalidArgument
        })?;
        let t = has_t.then(|| HalfInt::from_twice(t_twice));
        cli::cmd_degrees(ctx, t, None, None, format).map_err(|e| {
            set_last_error(e.to_string());
            KostantStatus::InvalidArgument
        })
    })();
    match result {
        Ok(rendered) => into_c_string(rendered),
        Err(_) => ptr::null_mut(),
    }
}

/// Runs the verification suite over the box n <= n_max, k <= k_max,
/// dominant lambda entries <= lambda_cap. Returns Ok on a clean pass,
/// VerificationFailed if any check failed, InvalidArgument on cap
/// violations. When `report_json_out` is non-NULL it receives the JSON
/// report (caller frees).
///
/// # Safety
/// `report_json_out`, when non-NULL, must point to writable memory for one
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn kostant_verify(
    n_max: usize,
    k_max: usize,
    lambda_cap: i64,
    report_json_out: *mut *mut c_char,
) -> KostantStatus {
    clear_last_error();
    if !report_json_out.is_null() {
        *report_json_out = ptr::null_mut();
    }
    match cli::cmd_verify(n_max, k_max, lambda_cap, kostant::oracle::DEFAULT_WEYL_CAP) {
        Ok((report, rendered)) => {
            if !report_json_out.is_null() {
                *report_json_out = into_c_string(rendered);
            }
            if report.is_pass() {
                KostantStatus::Ok
            } else {
                set_last_error(format!("{} oracle checks failed", report.failures.len()));
                KostantStatus::VerificationFailed
            }
        }
        Err(e) => {
            set_last_error(e.to_string());
            KostantStatus::InvalidArgument
        }
    }
}

//! C ABI for `precision-lda`.
//!
//! Objects cross the boundary as opaque handles created by `plda_*_new`,
//! `plda_*_fit` or `plda_*_load` functions and released by the matching
//! `plda_*_free`. Every fallible call returns a [`PldaStatus`]; on failure the
//! message is kept per thread and can be copied out with
//! [`plda_last_error_message`]. Panics never unwind into the caller.
//!
//! Matrices and sample blocks are dense row-major `double` arrays.

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use precision_lda::dataset::{Label, LabeledDataset};
use precision_lda::discriminant::{fit_with, predict, score, LdaModel};
use precision_lda::error_theory::{expected_error_general, GaussianPair};
use precision_lda::estimators::{desparsify, Centering, EstimatorKind, PrecisionOptions};
use precision_lda::glasso::{graphical_lasso, GlassoConfig};
use precision_lda::{Error, SymMatrix};

/// Result of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PldaStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    DimensionMismatch = 3,
    NotPositiveDefinite = 4,
    NotConverged = 5,
    Numerical = 6,
    Io = 7,
    Parse = 8,
    BufferTooSmall = 9,
    Panic = 10,
}

/// Covariance centering used when fitting.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PldaCentering {
    Global = 0,
    PooledClass = 1,
}

/// Symmetric matrix handle.
pub struct PldaMatrix(SymMatrix);

/// Fitted discriminant handle.
pub struct PldaModel(LdaModel);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn set_error(message: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = message);
}

fn status_of(e: &Error) -> PldaStatus {
    match e {
        Error::NotPositiveDefinite { .. } => PldaStatus::NotPositiveDefinite,
        Error::NotConverged { .. } => PldaStatus::NotConverged,
        Error::DegenerateDirection(_) | Error::NonFinite(_) => PldaStatus::Numerical,
        Error::DimensionMismatch { .. } => PldaStatus::DimensionMismatch,
        Error::Io(_) => PldaStatus::Io,
        Error::Parse(_) | Error::Csv(_) | Error::Json(_) | Error::MalformedDate(_) => PldaStatus::Parse,
        _ => PldaStatus::InvalidArgument,
    }
}

struct Failure(PldaStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(PldaStatus::NullPointer, format!("{what} is null"))
}

fn guard(body: impl FnOnce() -> Result<(), Failure>) -> PldaStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => {
            set_error(String::new());
            PldaStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_error(message);
            status
        }
        Err(payload) => {
            let message = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(format!("internal panic: {message}"));
            PldaStatus::Panic
        }
    }
}

/// # Safety
/// `ptr` must be null or valid for `len` reads.
unsafe fn slice<'a, T>(ptr: *const T, len: usize, what: &str) -> Result<&'a [T], Failure> {
    if ptr.is_null() {
        return Err(null(what));
    }
    Ok(std::slice::from_raw_parts(ptr, len))
}

/// # Safety
/// `ptr` must be null or a valid NUL-terminated string.
unsafe fn string<'a>(ptr: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if ptr.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| Failure(PldaStatus::InvalidArgument, format!("{what} is not UTF-8")))
}

/// # Safety
/// `out` must be null or valid for one write.
unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

/// Copies the calling thread's last error message, NUL-terminated and
/// truncated to fit, into `buf`. Returns the full message length in bytes
/// excluding the terminator; an empty message means the last call succeeded.
///
/// # Safety
/// `buf` must be null or valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn plda_last_error_message(buf: *mut c_char, len: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && len > 0 {
            let n = msg.len().min(len - 1);
            ptr::copy_nonoverlapping(msg.as_ptr().cast::<c_char>(), buf, n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Builds a `dim × dim` matrix from row-major `data`; the input is
/// symmetrized as `(A + Aᵀ)/2`.
///
/// # Safety
/// `data` must hold `dim * dim` doubles; `out` must be valid for one write.
#[no_mangle]
pub unsafe extern "C" fn plda_matrix_new(data: *const f64, dim: usize, out: *mut *mut PldaMatrix) -> PldaStatus {
    guard(|| {
        let values = slice(data, dim.saturating_mul(dim), "data")?.to_vec();
        let m = SymMatrix::from_row_major(dim, values)?;
        write_out(out, Box::into_raw(Box::new(PldaMatrix(m))), "out")
    })
}

/// Dimension of `matrix`, or 0 for a null handle.
///
/// # Safety
/// `matrix` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn plda_matrix_dim(matrix: *const PldaMatrix) -> usize {
    matrix.as_ref().map_or(0, |m| m.0.dim())
}

/// Copies the row-major entries into `out`, which must hold `dim * dim`
/// doubles (`len` is checked).
///
/// # Safety
/// `matrix` must be a live handle; `out` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn plda_matrix_copy(matrix: *const PldaMatrix, out: *mut f64, len: usize) -> PldaStatus {
    guard(|| {
        let m = matrix.as_ref().ok_or_else(|| null("matrix"))?;
        let src = m.0.as_slice();
        if len < src.len() {
            return Err(Failure(
                PldaStatus::BufferTooSmall,
                format!("buffer holds {len} values, {} needed", src.len()),
            ));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        ptr::copy_nonoverlapping(src.as_ptr(), out, src.len());
        Ok(())
    })
}

/// # Safety
/// `matrix` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn plda_matrix_free(matrix: *mut PldaMatrix) {
    if !matrix.is_null() {
        drop(Box::from_raw(matrix));
    }
}

/// Graphical lasso of the covariance `sigma` with penalty `lambda` on the
/// off-diagonal entries (and on the diagonal when `penalize_diagonal` is
/// non-zero). Non-convergence is reported as `NotConverged`.
///
/// # Safety
/// `sigma` must be a live handle; `out` valid for one write; `iters` null or
/// valid for one write.
#[no_mangle]
pub unsafe extern "C" fn plda_glasso(
    sigma: *const PldaMatrix,
    lambda: f64,
    penalize_diagonal: i32,
    out: *mut *mut PldaMatrix,
    iters: *mut usize,
) -> PldaStatus {
    guard(|| {
        let s = sigma.as_ref().ok_or_else(|| null("sigma"))?;
        let config = GlassoConfig {
            penalize_diagonal: penalize_diagonal != 0,
            ..GlassoConfig::with_lambda(lambda)
        };
        let result = graphical_lasso(&s.0, &config)?;
        if let Some(it) = iters.as_mut() {
            *it = result.iters;
        }
        if !result.converged {
            return Err(Error::NotConverged { iters: result.iters }.into());
        }
        write_out(out, Box::into_raw(Box::new(PldaMatrix(result.theta))), "out")
    })
}

/// `2Θ − ΘΣΘ`.
///
/// # Safety
/// `theta` and `sigma` must be live handles; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn plda_desparsify(
    theta: *const PldaMatrix,
    sigma: *const PldaMatrix,
    out: *mut *mut PldaMatrix,
) -> PldaStatus {
    guard(|| {
        let t = theta.as_ref().ok_or_else(|| null("theta"))?;
        let s = sigma.as_ref().ok_or_else(|| null("sigma"))?;
        let d = desparsify(&t.0, &s.0)?;
        write_out(out, Box::into_raw(Box::new(PldaMatrix(d))), "out")
    })
}

/// Fits a discriminant on `m` samples of dimension `p` (row-major `x`) with
/// labels in {-1, +1}. `estimator` uses the command-line syntax: `mle`, `lda`,
/// `diag`, `shrinkage:0.5`, `crda:10`, `e2d2:10`.
///
/// # Safety
/// `x` must hold `m * p` doubles, `labels` `m` ints, `estimator` a
/// NUL-terminated string; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn plda_model_fit(
    x: *const f64,
    labels: *const i32,
    m: usize,
    p: usize,
    estimator: *const c_char,
    centering: PldaCentering,
    out: *mut *mut PldaModel,
) -> PldaStatus {
    guard(|| {
        let kind: EstimatorKind = string(estimator, "estimator")?.parse()?;
        let xs = slice(x, m.saturating_mul(p), "x")?;
        let ls = slice(labels, m, "labels")?;
        let labels = ls
            .iter()
            .map(|&l| match l {
                1 => Ok(Label::Positive),
                -1 => Ok(Label::Negative),
                other => Err(Failure(PldaStatus::InvalidArgument, format!("label {other} is not -1 or +1"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        let samples = if p == 0 { Vec::new() } else { xs.chunks(p).map(<[f64]>::to_vec).collect() };
        let data = LabeledDataset::new(p, samples, labels)?;
        let options = PrecisionOptions {
            centering: match centering {
                PldaCentering::Global => Centering::Global,
                PldaCentering::PooledClass => Centering::PooledClass,
            },
            ..PrecisionOptions::default()
        };
        let model = fit_with(&data, kind, &options)?;
        write_out(out, Box::into_raw(Box::new(PldaModel(model))), "out")
    })
}

/// Loads a model saved by the command line tool or [`plda_model_save`].
///
/// # Safety
/// `path` must be a NUL-terminated string; `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn plda_model_load(path: *const c_char, out: *mut *mut PldaModel) -> PldaStatus {
    guard(|| {
        let model = LdaModel::load(string(path, "path")?)?;
        write_out(out, Box::into_raw(Box::new(PldaModel(model))), "out")
    })
}

/// # Safety
/// `model` must be a live handle and `path` a NUL-terminated string.
#[no_mangle]
pub unsafe extern "C" fn plda_model_save(model: *const PldaModel, path: *const c_char) -> PldaStatus {
    guard(|| {
        let m = model.as_ref().ok_or_else(|| null("model"))?;
        m.0.save(string(path, "path")?)?;
        Ok(())
    })
}

/// Feature dimension of `model`, or 0 for a null handle.
///
/// # Safety
/// `model` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn plda_model_dim(model: *const PldaModel) -> usize {
    model.as_ref().map_or(0, |m| m.0.dim())
}

/// Discriminant score of one sample and its label (+1 when the score is
/// non-negative, -1 otherwise). Either output may be null.
///
/// # Safety
/// `model` must be a live handle, `x` hold `p` doubles; outputs null or valid
/// for one write.
#[no_mangle]
pub unsafe extern "C" fn plda_model_predict(
    model: *const PldaModel,
    x: *const f64,
    p: usize,
    score_out: *mut f64,
    label_out: *mut i32,
) -> PldaStatus {
    guard(|| {
        let m = model.as_ref().ok_or_else(|| null("model"))?;
        let xs = slice(x, p, "x")?;
        let s = score(&m.0, xs)?;
        let l = predict(&m.0, xs)?;
        if let Some(o) = score_out.as_mut() {
            *o = s;
        }
        if let Some(o) = label_out.as_mut() {
            *o = i32::from(l.as_i8());
        }
        Ok(())
    })
}

/// Expected misclassification rate of `model` when the classes are
/// `N(mu_plus, sigma)` and `N(mu_minus, sigma)` with prior `prior_plus`.
///
/// # Safety
/// `model` and `sigma` must be live handles, the means hold `dim` doubles,
/// `out` valid for one write.
#[no_mangle]
pub unsafe extern "C" fn plda_expected_error(
    model: *const PldaModel,
    mu_plus: *const f64,
    mu_minus: *const f64,
    sigma: *const PldaMatrix,
    prior_plus: f64,
    out: *mut f64,
) -> PldaStatus {
    guard(|| {
        let m = model.as_ref().ok_or_else(|| null("model"))?;
        let s = sigma.as_ref().ok_or_else(|| null("sigma"))?;
        let p = s.0.dim();
        let truth = GaussianPair::new(
            slice(mu_plus, p, "mu_plus")?.to_vec(),
            slice(mu_minus, p, "mu_minus")?.to_vec(),
            s.0.clone(),
            prior_plus,
        )?;
        let e = expected_error_general(&truth, m.0.mu_plus(), m.0.mu_minus(), m.0.precision())?;
        write_out(out, e, "out")
    })
}

/// # Safety
/// `model` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn plda_model_free(model: *mut PldaModel) {
    if !model.is_null() {
        drop(Box::from_raw(model));
    }
}

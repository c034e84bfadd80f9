//! Covariance and precision estimators: the maximum-likelihood sample
//! covariance, diagonal shrinkage, de-sparsification of a graphical-lasso
//! estimate, and a dispatcher producing the plug-in precision for each
//! discriminant variant.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dataset::{Label, LabeledDataset};
use crate::error::{check_dim, Error, Result};
use crate::glasso::{graphical_lasso, GlassoConfig};
use crate::matrix::{invert_spd, pseudo_inverse, SymMatrix, DEFAULT_PINV_RTOL};

/// Plug-in precision estimator used by a discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EstimatorKind {
    /// Inverse of the sample covariance; fails when it is singular.
    SampleMle,
    /// Classical LDA: Moore–Penrose pseudo-inverse of the sample covariance.
    PseudoInverseLda,
    /// Inverse of `diag(Σ̄)`.
    Diag,
    /// Inverse of `β Σ̄ + (1 − β) diag(Σ̄)`.
    Shrinkage { beta: f64 },
    /// Graphical-lasso precision `Θ̂`.
    Crda { lambda: f64 },
    /// De-sparsified graphical lasso `2Θ̂ − Θ̂ Σ̄ Θ̂`.
    E2d2 { lambda: f64 },
}

impl EstimatorKind {
    pub fn validate(&self) -> Result<()> {
        match *self {
            EstimatorKind::Shrinkage { beta } if !(0.0..=1.0).contains(&beta) => {
                Err(Error::BetaOutOfRange(beta))
            }
            EstimatorKind::Crda { lambda } | EstimatorKind::E2d2 { lambda }
                if !(lambda >= 0.0 && lambda.is_finite()) =>
            {
                Err(Error::InvalidParameter(format!(
                    "penalty must be a finite non-negative number, got {lambda}"
                )))
            }
            _ => Ok(()),
        }
    }

    /// Short label used in report tables, e.g. `CRDA(10)`.
    pub fn label(&self) -> String {
        match self {
            EstimatorKind::SampleMle => "MLE".into(),
            EstimatorKind::PseudoInverseLda => "LDA".into(),
            EstimatorKind::Diag => "DIAG".into(),
            EstimatorKind::Shrinkage { beta } => format!("Shrinkage({beta})"),
            EstimatorKind::Crda { lambda } => format!("CRDA({lambda})"),
            EstimatorKind::E2d2 { lambda } => format!("E2D2({lambda})"),
        }
    }
}

impl fmt::Display for EstimatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Parses `mle`, `lda`, `diag`, `shrinkage:<β>`, `crda:<λ>`, `e2d2:<λ>`.
impl FromStr for EstimatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        let (name, arg) = match lower.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (lower.as_str(), None),
        };
        let param = |what: &str| -> Result<f64> {
            let raw = arg.ok_or_else(|| {
                Error::Parse(format!("estimator `{name}` needs a parameter, e.g. {name}:{what}"))
            })?;
            raw.parse::<f64>()
                .map_err(|_| Error::Parse(format!("invalid estimator parameter {raw:?}")))
        };
        let kind = match name {
            "mle" => EstimatorKind::SampleMle,
            "lda" | "pinv" => EstimatorKind::PseudoInverseLda,
            "diag" => EstimatorKind::Diag,
            "shrinkage" => EstimatorKind::Shrinkage { beta: param("0.5")? },
            "crda" => EstimatorKind::Crda { lambda: param("10")? },
            "e2d2" => EstimatorKind::E2d2 { lambda: param("10")? },
            other => return Err(Error::Parse(format!("unknown estimator {other:?}"))),
        };
        kind.validate()?;
        Ok(kind)
    }
}

/// Which mean the samples are centered at before forming the covariance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Centering {
    /// Grand mean of all samples.
    #[default]
    Global,
    /// Each sample centered at its own class mean.
    PooledClass,
}

pub fn mean_vector<S: AsRef<[f64]>>(samples: &[S]) -> Result<Vec<f64>> {
    let first = samples.first().ok_or(Error::EmptyInput("no samples"))?;
    let p = first.as_ref().len();
    let mut mean = vec![0.0; p];
    for s in samples {
        let s = s.as_ref();
        check_dim(p, s.len())?;
        for (m, v) in mean.iter_mut().zip(s) {
            *m += v;
        }
    }
    let n = samples.len() as f64;
    mean.iter_mut().for_each(|m| *m /= n);
    Ok(mean)
}

/// `(1/m) Σ (x − c)(x − c)ᵀ` for caller-supplied centers.
fn scatter<'a>(p: usize, centered: impl Iterator<Item = (&'a [f64], &'a [f64])>, m: usize) -> SymMatrix {
    let mut acc = vec![0.0; p * p];
    let mut diff = vec![0.0; p];
    for (x, center) in centered {
        for ((d, xi), ci) in diff.iter_mut().zip(x).zip(center) {
            *d = xi - ci;
        }
        for i in 0..p {
            let di = diff[i];
            if di == 0.0 {
                continue;
            }
            let row = &mut acc[i * p..i * p + i + 1];
            for (a, dj) in row.iter_mut().zip(&diff[..=i]) {
                *a += di * dj;
            }
        }
    }
    let inv_m = 1.0 / m as f64;
    for i in 0..p {
        for j in 0..=i {
            let v = acc[i * p + j] * inv_m;
            acc[i * p + j] = v;
            acc[j * p + i] = v;
        }
    }
    SymMatrix::from_raw(p, acc)
}

/// Grand-mean-centered covariance with divisor `m`.
pub fn covariance_mle<S: AsRef<[f64]>>(samples: &[S]) -> Result<SymMatrix> {
    let mean = mean_vector(samples)?;
    let p = mean.len();
    if p == 0 {
        return Err(Error::EmptyInput("zero-length samples"));
    }
    Ok(scatter(
        p,
        samples.iter().map(|s| (s.as_ref(), mean.as_slice())),
        samples.len(),
    ))
}

/// Maximum-likelihood sample covariance (divisor `m`, not `m − 1`).
pub fn sample_covariance_mle(data: &LabeledDataset, centering: Centering) -> Result<SymMatrix> {
    if data.len() < 2 {
        return Err(Error::EmptyInput("sample covariance needs at least two samples"));
    }
    match centering {
        Centering::Global => covariance_mle(data.samples()),
        Centering::PooledClass => {
            let pos = data.class_samples(Label::Positive);
            let neg = data.class_samples(Label::Negative);
            let mu_pos = if pos.is_empty() { None } else { Some(mean_vector(&pos)?) };
            let mu_neg = if neg.is_empty() { None } else { Some(mean_vector(&neg)?) };
            let centers = data.iter().map(|(x, l)| {
                let c = match l {
                    Label::Positive => mu_pos.as_deref(),
                    Label::Negative => mu_neg.as_deref(),
                };
                (x, c.expect("class present since a sample carries its label"))
            });
            Ok(scatter(data.p(), centers, data.len()))
        }
    }
}

/// `β Σ̄ + (1 − β) diag(Σ̄)`; the diagonal is preserved for every `β`.
pub fn shrinkage_covariance(sigma_bar: &SymMatrix, beta: f64) -> Result<SymMatrix> {
    if !(0.0..=1.0).contains(&beta) {
        return Err(Error::BetaOutOfRange(beta));
    }
    let p = sigma_bar.dim();
    let mut data = sigma_bar.as_slice().to_vec();
    for i in 0..p {
        for j in 0..p {
            if i != j {
                data[i * p + j] *= beta;
            }
        }
    }
    Ok(SymMatrix::from_raw(p, data))
}

/// `2Θ̂ − Θ̂ Σ̄ Θ̂`, symmetrized. The result need not be positive definite.
pub fn desparsify(theta_hat: &SymMatrix, sigma_bar: &SymMatrix) -> Result<SymMatrix> {
    check_dim(theta_hat.dim(), sigma_bar.dim())?;
    let correction = theta_hat.sandwich(sigma_bar)?;
    Ok(&theta_hat.scaled(2.0) - &correction)
}

/// Settings shared by the precision estimators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionOptions {
    pub centering: Centering,
    pub pinv_rtol: f64,
    /// Penalty is overridden per estimator; the remaining solver settings apply.
    pub glasso: GlassoConfig,
}

impl Default for PrecisionOptions {
    fn default() -> Self {
        Self {
            centering: Centering::Global,
            pinv_rtol: DEFAULT_PINV_RTOL,
            glasso: GlassoConfig::default(),
        }
    }
}

pub fn make_precision(data: &LabeledDataset, kind: EstimatorKind) -> Result<SymMatrix> {
    make_precision_with(data, kind, &PrecisionOptions::default())
}

pub fn make_precision_with(
    data: &LabeledDataset,
    kind: EstimatorKind,
    options: &PrecisionOptions,
) -> Result<SymMatrix> {
    kind.validate()?;
    let sigma_bar = sample_covariance_mle(data, options.centering)?;
    precision_from_covariance(&sigma_bar, kind, options)
}

/// Plug-in precision for an already-computed sample covariance.
pub fn precision_from_covariance(
    sigma_bar: &SymMatrix,
    kind: EstimatorKind,
    options: &PrecisionOptions,
) -> Result<SymMatrix> {
    kind.validate()?;
    match kind {
        EstimatorKind::SampleMle => invert_spd(sigma_bar),
        EstimatorKind::PseudoInverseLda => pseudo_inverse(sigma_bar, options.pinv_rtol),
        EstimatorKind::Diag => on_support(sigma_bar, invert_diagonal),
        EstimatorKind::Shrinkage { beta: 0.0 } => on_support(sigma_bar, invert_diagonal),
        EstimatorKind::Shrinkage { beta } => on_support(sigma_bar, |s| invert_spd(&shrinkage_covariance(s, beta)?)),
        EstimatorKind::Crda { lambda } => on_support(sigma_bar, |s| solve_glasso(s, lambda, options)),
        EstimatorKind::E2d2 { lambda } => on_support(sigma_bar, |s| {
            let theta = solve_glasso(s, lambda, options)?;
            desparsify(&theta, s)
        }),
    }
}

/// Applies `estimate` to the features with positive sample variance and
/// gives constant features zero precision rows and columns, as the
/// pseudo-inverse does.
fn on_support(sigma_bar: &SymMatrix, estimate: impl Fn(&SymMatrix) -> Result<SymMatrix>) -> Result<SymMatrix> {
    let diag = sigma_bar.diagonal();
    let active: Vec<usize> = (0..diag.len()).filter(|&i| diag[i] > 0.0).collect();
    if active.len() == diag.len() {
        return estimate(sigma_bar);
    }
    if active.is_empty() {
        return Err(Error::NotPositiveDefinite { index: 0, pivot: diag[0] });
    }
    let sub = estimate(&sigma_bar.principal_submatrix(&active)?)?;
    Ok(SymMatrix::embed(diag.len(), &active, &sub))
}

fn invert_diagonal(sigma_bar: &SymMatrix) -> Result<SymMatrix> {
    let diag = sigma_bar.diagonal();
    if let Some((index, &pivot)) = diag.iter().enumerate().find(|(_, d)| !(**d > 0.0)) {
        return Err(Error::NotPositiveDefinite { index, pivot });
    }
    Ok(SymMatrix::from_diag(
        &diag.iter().map(|d| 1.0 / d).collect::<Vec<_>>(),
    ))
}

fn solve_glasso(sigma_bar: &SymMatrix, lambda: f64, options: &PrecisionOptions) -> Result<SymMatrix> {
    let config = GlassoConfig {
        lambda,
        ..options.glasso
    };
    let result = graphical_lasso(sigma_bar, &config)?;
    if !result.converged {
        return Err(Error::NotConverged {
            iters: result.iters,
        });
    }
    Ok(result.theta)
}

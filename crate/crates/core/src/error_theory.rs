//! Expected misclassification rates of plug-in LDA under two Gaussians with
//! a shared covariance, and the Frobenius-norm upper bounds built on them.

use crate::error::{check_dim, Error, Result};
use crate::matrix::{cholesky, dot, euclidean_norm, invert_spd, norms, vec_sub, SymMatrix};

/// Ground truth `N(μ₊, Σ)` vs `N(μ₋, Σ)` with prior `π₊` on the positive class.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianPair {
    pub mu_plus: Vec<f64>,
    pub mu_minus: Vec<f64>,
    pub sigma: SymMatrix,
    pub prior_plus: f64,
}

impl GaussianPair {
    pub fn new(mu_plus: Vec<f64>, mu_minus: Vec<f64>, sigma: SymMatrix, prior_plus: f64) -> Result<Self> {
        check_dim(sigma.dim(), mu_plus.len())?;
        check_dim(sigma.dim(), mu_minus.len())?;
        if !(prior_plus > 0.0 && prior_plus < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "prior must lie in (0, 1), got {prior_plus}"
            )));
        }
        cholesky(&sigma)?;
        Ok(Self {
            mu_plus,
            mu_minus,
            sigma,
            prior_plus,
        })
    }

    pub fn dim(&self) -> usize {
        self.sigma.dim()
    }

    pub fn delta(&self) -> Vec<f64> {
        vec_sub(&self.mu_plus, &self.mu_minus)
    }

    /// `Δ = √(δᵀ Σ⁻¹ δ)`
    pub fn mahalanobis_separation(&self) -> Result<f64> {
        let delta = self.delta();
        let solved = cholesky(&self.sigma)?.solve(&delta);
        Ok(dot(&delta, &solved).sqrt())
    }

    /// Error of the equal-prior Bayes rule, `Φ(−Δ/2)`.
    pub fn bayes_error(&self) -> Result<f64> {
        Ok(std_normal_cdf(-0.5 * self.mahalanobis_separation()?))
    }
}

/// Standard normal CDF, `½ erfc(−z/√2)`.
pub fn std_normal_cdf(z: f64) -> f64 {
    0.5 * libm::erfc(-z * std::f64::consts::FRAC_1_SQRT_2)
}

/// `P̂ δ̂` and the variance `δ̂ᵀ P̂ Σ P̂ δ̂` of the discriminant under the truth.
fn direction_and_variance(delta_hat: &[f64], precision_hat: &SymMatrix, sigma: &SymMatrix) -> Result<(Vec<f64>, f64)> {
    let direction = precision_hat.mul_vec(delta_hat);
    let variance = sigma.bilinear(&direction, &direction);
    if !(variance > 0.0) {
        return Err(Error::DegenerateDirection(variance));
    }
    Ok((direction, variance))
}

/// Misclassification probability of the rule `sign((x − (μ̂₊+μ̂₋)/2)ᵀ P̂ δ̂)`
/// when data come from `truth`.
pub fn expected_error_general(
    truth: &GaussianPair,
    mu_hat_plus: &[f64],
    mu_hat_minus: &[f64],
    precision_hat: &SymMatrix,
) -> Result<f64> {
    let p = truth.dim();
    check_dim(p, mu_hat_plus.len())?;
    check_dim(p, mu_hat_minus.len())?;
    check_dim(p, precision_hat.dim())?;
    let delta_hat = vec_sub(mu_hat_plus, mu_hat_minus);
    let (direction, variance) = direction_and_variance(&delta_hat, precision_hat, &truth.sigma)?;
    let sd = variance.sqrt();
    let midpoint: Vec<f64> = mu_hat_plus
        .iter()
        .zip(mu_hat_minus)
        .map(|(a, b)| 0.5 * (a + b))
        .collect();
    let plus_arg = dot(&vec_sub(&truth.mu_plus, &midpoint), &direction) / sd;
    let minus_arg = dot(&vec_sub(&truth.mu_minus, &midpoint), &direction) / sd;
    Ok(truth.prior_plus * std_normal_cdf(-plus_arg) + (1.0 - truth.prior_plus) * std_normal_cdf(minus_arg))
}

/// `Φ(−δ̄ᵀP̂δ̄ / (2 √(δ̄ᵀ P̂ Σ P̂ δ̄)))`, the general rate with `μ̂ = μ` and
/// equal priors.
pub fn expected_error_reduced(
    mu_hat_plus: &[f64],
    mu_hat_minus: &[f64],
    sigma: &SymMatrix,
    precision_hat: &SymMatrix,
) -> Result<f64> {
    check_dim(sigma.dim(), mu_hat_plus.len())?;
    check_dim(sigma.dim(), mu_hat_minus.len())?;
    check_dim(sigma.dim(), precision_hat.dim())?;
    let delta = vec_sub(mu_hat_plus, mu_hat_minus);
    let (direction, variance) = direction_and_variance(&delta, precision_hat, sigma)?;
    Ok(std_normal_cdf(-dot(&delta, &direction) / (2.0 * variance.sqrt())))
}

/// `Φ(−(‖δ̄‖₂/2) √(‖P̂‖_F + ‖Σ⁻¹ − P̂‖_F))`
pub fn bound_result1(
    mu_hat_plus: &[f64],
    mu_hat_minus: &[f64],
    precision_hat: &SymMatrix,
    sigma: &SymMatrix,
) -> Result<f64> {
    check_dim(sigma.dim(), precision_hat.dim())?;
    check_dim(sigma.dim(), mu_hat_plus.len())?;
    check_dim(sigma.dim(), mu_hat_minus.len())?;
    let sigma_inv = invert_spd(sigma)?;
    let gap = euclidean_norm(&vec_sub(mu_hat_plus, mu_hat_minus));
    let radicand = norms(precision_hat).frobenius + norms(&(&sigma_inv - precision_hat)).frobenius;
    Ok(std_normal_cdf(-0.5 * gap * radicand.sqrt()))
}

/// Default stand-in for the unspecified constant of the `√(ln p / m)` rate.
pub const DEFAULT_C_RATE: f64 = 1.0;

/// `Φ(−(‖δ̄‖₂/2) √(‖T̂‖_F + c · p · √(ln p / m)))`, with `c` standing in for
/// the constant of the stochastic rate.
pub fn bound_result3(
    mu_hat_plus: &[f64],
    mu_hat_minus: &[f64],
    t_hat: &SymMatrix,
    m: usize,
    c_rate: f64,
) -> Result<f64> {
    let p = t_hat.dim();
    check_dim(p, mu_hat_plus.len())?;
    check_dim(p, mu_hat_minus.len())?;
    if m < 2 {
        return Err(Error::InvalidParameter(format!("sample size must be at least 2, got {m}")));
    }
    if !(c_rate >= 0.0 && c_rate.is_finite()) {
        return Err(Error::InvalidParameter(format!("rate constant must be non-negative, got {c_rate}")));
    }
    let gap = euclidean_norm(&vec_sub(mu_hat_plus, mu_hat_minus));
    let rate = c_rate * p as f64 * ((p as f64).ln() / m as f64).sqrt();
    let radicand = norms(t_hat).frobenius + rate;
    Ok(std_normal_cdf(-0.5 * gap * radicand.sqrt()))
}

/// `max_i |{j : |θ_ij| > zero_tol}|`, diagonal included.
pub fn max_vector_support(theta: &SymMatrix, zero_tol: f64) -> usize {
    (0..theta.dim())
        .map(|i| theta.row(i).iter().filter(|v| v.abs() > zero_tol).count())
        .max()
        .unwrap_or(0)
}

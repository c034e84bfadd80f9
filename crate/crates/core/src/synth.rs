//! Seeded synthetic data: multivariate normal draws and sparse
//! ground-truth precision matrices.
//!
//! All randomness comes from [`ChaCha8Rng`] seeded with
//! `ChaCha8Rng::seed_from_u64(seed)`; standard normal variates are produced by
//! `rand_distr::StandardNormal` (ziggurat). The same seed therefore yields
//! bit-identical output on every platform for a given lockfile.

use rand::seq::index::sample as sample_indices;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::dataset::LabeledDataset;
use crate::error::{check_dim, Error, Result};
use crate::error_theory::GaussianPair;
use crate::matrix::{cholesky, symmetric_eigen, CholeskyFactor, SymMatrix};

/// Diagonal loading target for generated precision matrices.
pub const MIN_EIGENVALUE: f64 = 0.05;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Sparsity pattern of a generated precision matrix.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Structure {
    /// Nonzero on `|i − j| ≤ bandwidth`.
    Banded { bandwidth: usize },
    /// Each row links to `per_row` random partners; fill is symmetric and no
    /// row exceeds `2 · per_row` off-diagonal nonzeros.
    RandomSparse { per_row: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SparsePrecisionSpec {
    pub p: usize,
    pub structure: Structure,
    pub offdiag_strength: f64,
    pub seed: u64,
}

impl SparsePrecisionSpec {
    pub fn banded(p: usize, bandwidth: usize, offdiag_strength: f64) -> Self {
        Self {
            p,
            structure: Structure::Banded { bandwidth },
            offdiag_strength,
            seed: 0,
        }
    }
}

/// Unit-diagonal precision with the declared support, diagonally loaded
/// until its smallest eigenvalue is at least [`MIN_EIGENVALUE`].
pub fn make_precision_truth(spec: &SparsePrecisionSpec) -> Result<SymMatrix> {
    let p = spec.p;
    if p == 0 {
        return Err(Error::InvalidSpec("dimension must be positive".into()));
    }
    if !spec.offdiag_strength.is_finite() {
        return Err(Error::InvalidSpec("off-diagonal strength must be finite".into()));
    }
    let s = spec.offdiag_strength;
    let mut data = vec![0.0; p * p];
    for i in 0..p {
        data[i * p + i] = 1.0;
    }
    match spec.structure {
        Structure::Banded { bandwidth } => {
            if bandwidth >= p.max(2) {
                return Err(Error::InvalidSpec(format!(
                    "bandwidth {bandwidth} must be below the dimension {p}"
                )));
            }
            for i in 0..p {
                for j in (i + 1)..p.min(i + bandwidth + 1) {
                    data[i * p + j] = s;
                    data[j * p + i] = s;
                }
            }
        }
        Structure::RandomSparse { per_row } => {
            if per_row >= p.max(2) {
                return Err(Error::InvalidSpec(format!(
                    "per-row support {per_row} must be below the dimension {p}"
                )));
            }
            let cap = 2 * per_row;
            let mut degree = vec![0usize; p];
            let mut rng = rng_from_seed(spec.seed);
            for i in 0..p {
                let mut picked = 0;
                // random visiting order over all other rows
                let order = sample_indices(&mut rng, p, p);
                for j in order.iter() {
                    if picked == per_row || degree[i] >= cap {
                        break;
                    }
                    if j == i || degree[j] >= cap || data[i * p + j] != 0.0 {
                        continue;
                    }
                    data[i * p + j] = s;
                    data[j * p + i] = s;
                    degree[i] += 1;
                    degree[j] += 1;
                    picked += 1;
                }
            }
        }
    }
    let theta = SymMatrix::from_raw(p, data);
    let min_eig = symmetric_eigen(&theta).min_value();
    if min_eig >= MIN_EIGENVALUE {
        return Ok(theta);
    }
    let shift = MIN_EIGENVALUE - min_eig;
    let mut loaded = theta.as_slice().to_vec();
    for i in 0..p {
        loaded[i * p + i] += shift;
    }
    Ok(SymMatrix::from_raw(p, loaded))
}

/// Draws `n` vectors `μ + L z`, `L Lᵀ = Σ`, `z ~ N(0, I)`.
pub fn sample_mvn(mu: &[f64], sigma: &SymMatrix, n: usize, seed: u64) -> Result<Vec<Vec<f64>>> {
    let factor = cholesky(sigma)?;
    sample_mvn_factor(mu, &factor, n, &mut rng_from_seed(seed))
}

/// Same as [`sample_mvn`] with a precomputed factor and a caller-owned stream.
pub fn sample_mvn_factor<R: Rng + ?Sized>(
    mu: &[f64],
    factor: &CholeskyFactor,
    n: usize,
    rng: &mut R,
) -> Result<Vec<Vec<f64>>> {
    check_dim(factor.dim(), mu.len())?;
    if n == 0 {
        return Err(Error::InvalidParameter("sample count must be positive".into()));
    }
    let p = mu.len();
    let mut z = vec![0.0; p];
    Ok((0..n)
        .map(|_| {
            for zi in z.iter_mut() {
                *zi = rng.sample(StandardNormal);
            }
            factor
                .mul_vec(&z)
                .into_iter()
                .zip(mu)
                .map(|(v, m)| v + m)
                .collect()
        })
        .collect())
}

/// `d · ln p / √m`; values well below one indicate the sparse regime.
pub fn regime_ratio(d: usize, m: usize, p: usize) -> f64 {
    d as f64 * (p as f64).ln() / (m as f64).sqrt()
}

/// Two-class Gaussian problem with a sparse precision and a mean shift
/// concentrated on the first `signal_coords` coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SyntheticProblem {
    pub precision: SparsePrecisionSpec,
    /// Euclidean length of `μ₊ − μ₋`.
    pub separation: f64,
    pub signal_coords: usize,
}

impl SyntheticProblem {
    pub fn gaussian_pair(&self) -> Result<GaussianPair> {
        let p = self.precision.p;
        if self.signal_coords == 0 || self.signal_coords > p {
            return Err(Error::InvalidSpec(format!(
                "signal coordinates must be in 1..={p}, got {}",
                self.signal_coords
            )));
        }
        if !(self.separation >= 0.0 && self.separation.is_finite()) {
            return Err(Error::InvalidSpec("separation must be finite and non-negative".into()));
        }
        let theta = make_precision_truth(&self.precision)?;
        let sigma = crate::matrix::invert_spd(&theta)?;
        let half = 0.5 * self.separation / (self.signal_coords as f64).sqrt();
        let mu_plus: Vec<f64> = (0..p)
            .map(|i| if i < self.signal_coords { half } else { 0.0 })
            .collect();
        let mu_minus = mu_plus.iter().map(|v| -v).collect();
        GaussianPair::new(mu_plus, mu_minus, sigma, 0.5)
    }
}

/// Labeled draws from both classes, positives first.
pub fn sample_pair<R: Rng + ?Sized>(
    pair: &GaussianPair,
    factor: &CholeskyFactor,
    n_plus: usize,
    n_minus: usize,
    rng: &mut R,
) -> Result<LabeledDataset> {
    let pos = sample_mvn_factor(&pair.mu_plus, factor, n_plus, rng)?;
    let neg = sample_mvn_factor(&pair.mu_minus, factor, n_minus, rng)?;
    LabeledDataset::from_classes(pos, neg)
}

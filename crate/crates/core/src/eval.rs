//! Repeated-trial experiments: classification metrics over paired
//! train/test splits, and the estimator ℓ1-error study.
//!
//! Trial `t` draws its randomness from `ChaCha8(base_seed + t)`; each sample
//! size within a trial uses its own ChaCha stream (the size itself), so cells
//! do not depend on the order of the size list. Trials run on the rayon pool
//! and are collected by index before any reduction, which keeps every output
//! bit-reproducible.

use std::fmt::Write as _;
use std::io::Write;

use rand::seq::index;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataset::{Label, LabeledDataset};
use crate::discriminant::{fit_with, predict_all};
use crate::error::{Error, Result};
use crate::estimators::{covariance_mle, desparsify, precision_from_covariance, EstimatorKind, PrecisionOptions};
use crate::matrix::{cholesky, invert_spd, norms, pseudo_inverse, SymMatrix, DEFAULT_PINV_RTOL};
use crate::synth::{make_precision_truth, rng_from_seed, sample_mvn_factor, sample_pair, SparsePrecisionSpec, SyntheticProblem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Confusion {
    pub tp: u64,
    pub tn: u64,
    pub fp: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
}

impl Confusion {
    pub fn from_labels(truth: &[Label], predicted: &[Label]) -> Result<Self> {
        crate::error::check_dim(truth.len(), predicted.len())?;
        let mut c = Self::default();
        for (t, p) in truth.iter().zip(predicted) {
            match (t, p) {
                (Label::Positive, Label::Positive) => c.tp += 1,
                (Label::Negative, Label::Negative) => c.tn += 1,
                (Label::Negative, Label::Positive) => c.fp += 1,
                (Label::Positive, Label::Negative) => c.fn_ += 1,
            }
        }
        Ok(c)
    }

    pub fn total(&self) -> u64 {
        self.tp + self.tn + self.fp + self.fn_
    }
}

/// Each value is a single rounded division of two exact integer counts.
/// Metrics whose denominator is zero are `None`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Metrics {
    pub accuracy: f64,
    pub f1: Option<f64>,
    pub sensitivity: Option<f64>,
    pub specificity: Option<f64>,
}

fn ratio(num: u64, den: u64) -> Option<f64> {
    (den > 0).then(|| num as f64 / den as f64)
}

pub fn metrics(c: &Confusion) -> Result<Metrics> {
    let total = c.total();
    if total == 0 {
        return Err(Error::EmptyConfusion);
    }
    Ok(Metrics {
        accuracy: (c.tp + c.tn) as f64 / total as f64,
        f1: ratio(2 * c.tp, 2 * c.tp + c.fp + c.fn_),
        sensitivity: ratio(c.tp, c.tp + c.fn_),
        specificity: ratio(c.tn, c.tn + c.fp),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub mean: f64,
    /// Sample standard deviation (divisor `n − 1`), zero for a single value.
    pub std: f64,
    /// Number of trials where the metric was defined.
    pub n: usize,
}

impl Summary {
    pub fn of(values: &[f64]) -> Option<Self> {
        let n = values.len();
        if n == 0 {
            return None;
        }
        let mean = values.iter().sum::<f64>() / n as f64;
        let std = if n > 1 {
            (values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
        } else {
            0.0
        };
        Some(Self { mean, std, n })
    }
}

pub fn median(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    Some(if n % 2 == 1 { v[n / 2] } else { 0.5 * (v[n / 2 - 1] + v[n / 2]) })
}

/// FNV-1a over the bit patterns of a dataset's labels and features.
pub fn dataset_hash(data: &LabeledDataset) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut feed = |bytes: &[u8]| {
        for &b in bytes {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    for (x, l) in data.iter() {
        feed(&[l.as_i8() as u8]);
        for v in x {
            feed(&v.to_bits().to_le_bytes());
        }
    }
    h
}

#[derive(Debug, Clone)]
pub enum TrialData {
    /// Fresh Gaussian draws for every split.
    Synthetic(SyntheticProblem),
    /// Class-balanced subsampling without replacement.
    Pool(LabeledDataset),
}

#[derive(Debug, Clone)]
pub struct ClassificationConfig {
    pub data: TrialData,
    /// Training samples per class, one table column group each.
    pub train_sizes: Vec<usize>,
    pub test_per_class: usize,
    pub algorithms: Vec<EstimatorKind>,
    pub repeats: usize,
    pub base_seed: u64,
    pub options: PrecisionOptions,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialOutcome {
    pub trial: usize,
    pub seed: u64,
    pub train_per_class: usize,
    pub algorithm: EstimatorKind,
    /// Hash of the (train, test) pair the algorithm saw.
    pub split_hash: u64,
    pub confusion: Confusion,
    pub metrics: Metrics,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellSummary {
    pub algorithm: EstimatorKind,
    pub train_per_class: usize,
    pub accuracy: Summary,
    pub f1: Option<Summary>,
    pub sensitivity: Option<Summary>,
    pub specificity: Option<Summary>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialReport {
    pub repeats: usize,
    pub base_seed: u64,
    pub seeds: Vec<u64>,
    pub train_sizes: Vec<usize>,
    pub cells: Vec<CellSummary>,
    pub outcomes: Vec<TrialOutcome>,
}

impl TrialReport {
    pub fn cell(&self, algorithm: EstimatorKind, train_per_class: usize) -> Option<&CellSummary> {
        self.cells
            .iter()
            .find(|c| c.algorithm == algorithm && c.train_per_class == train_per_class)
    }

    /// Rows are algorithms; for each training size the columns are mean and
    /// standard deviation of accuracy, F1, sensitivity and specificity.
    pub fn table1_csv(&self) -> String {
        let mut out = String::from("algorithm");
        for n in &self.train_sizes {
            for m in ["accuracy", "f1", "sensitivity", "specificity"] {
                let _ = write!(out, ",n{n}_{m}_mean,n{n}_{m}_std");
            }
        }
        out.push('\n');
        let mut algorithms: Vec<EstimatorKind> = Vec::new();
        for c in &self.cells {
            if !algorithms.contains(&c.algorithm) {
                algorithms.push(c.algorithm);
            }
        }
        for a in algorithms {
            out.push_str(&a.label());
            for &n in &self.train_sizes {
                let cell = self.cell(a, n);
                let fields = cell.map(|c| [Some(c.accuracy), c.f1, c.sensitivity, c.specificity]);
                for s in fields.unwrap_or([None; 4]) {
                    match s {
                        Some(s) => {
                            let _ = write!(out, ",{:.6},{:.6}", s.mean, s.std);
                        }
                        None => out.push_str(",NA,NA"),
                    }
                }
            }
            out.push('\n');
        }
        out
    }
}

impl ClassificationConfig {
    fn validate(&self) -> Result<()> {
        if self.repeats == 0 {
            return Err(Error::InvalidParameter("repeats must be positive".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::InvalidParameter("at least one algorithm is required".into()));
        }
        if self.train_sizes.is_empty() || self.train_sizes.contains(&0) || self.test_per_class == 0 {
            return Err(Error::InvalidParameter("train and test sizes must be positive".into()));
        }
        for a in &self.algorithms {
            a.validate()?;
        }
        if let TrialData::Pool(pool) = &self.data {
            let need = self.train_sizes.iter().max().copied().unwrap_or(0) + self.test_per_class;
            for label in [Label::Positive, Label::Negative] {
                let have = pool.count(label);
                if have < need {
                    return Err(Error::InsufficientData(format!(
                        "class {} has {have} samples, {need} needed for disjoint train/test draws",
                        label.as_i8()
                    )));
                }
            }
        }
        Ok(())
    }
}

enum Source<'a> {
    Synthetic {
        pair: crate::error_theory::GaussianPair,
        factor: crate::matrix::CholeskyFactor,
    },
    Pool {
        data: &'a LabeledDataset,
        positives: Vec<usize>,
        negatives: Vec<usize>,
    },
}

impl Source<'_> {
    fn split(&self, n_train: usize, n_test: usize, rng: &mut ChaCha8Rng) -> Result<(LabeledDataset, LabeledDataset)> {
        match self {
            Source::Synthetic { pair, factor } => {
                let train = sample_pair(pair, factor, n_train, n_train, rng)?;
                let test = sample_pair(pair, factor, n_test, n_test, rng)?;
                Ok((train, test))
            }
            Source::Pool {
                data,
                positives,
                negatives,
            } => {
                let mut train = Vec::with_capacity(2 * n_train);
                let mut test = Vec::with_capacity(2 * n_test);
                for class in [positives, negatives] {
                    let picked = index::sample(rng, class.len(), n_train + n_test).into_vec();
                    train.extend(picked[..n_train].iter().map(|&i| class[i]));
                    test.extend(picked[n_train..].iter().map(|&i| class[i]));
                }
                Ok((data.select(&train)?, data.select(&test)?))
            }
        }
    }
}

fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = rng_from_seed(seed);
    rng.set_stream(stream);
    rng
}

pub fn run_classification_trials(config: &ClassificationConfig) -> Result<TrialReport> {
    config.validate()?;
    let source = match &config.data {
        TrialData::Synthetic(problem) => {
            let pair = problem.gaussian_pair()?;
            let factor = cholesky(&pair.sigma)?;
            Source::Synthetic { pair, factor }
        }
        TrialData::Pool(data) => {
            let by_class = |l: Label| (0..data.len()).filter(|&i| data.labels()[i] == l).collect::<Vec<_>>();
            Source::Pool {
                data,
                positives: by_class(Label::Positive),
                negatives: by_class(Label::Negative),
            }
        }
    };

    let seeds: Vec<u64> = (0..config.repeats as u64).map(|t| config.base_seed.wrapping_add(t)).collect();
    let per_trial: Vec<Vec<TrialOutcome>> = seeds
        .par_iter()
        .enumerate()
        .map(|(trial, &seed)| {
            let mut outcomes = Vec::new();
            for &n in &config.train_sizes {
                let mut rng = trial_rng(seed, n as u64);
                let (train, test) = source.split(n, config.test_per_class, &mut rng)?;
                let split_hash = dataset_hash(&train) ^ dataset_hash(&test).rotate_left(1);
                for &algorithm in &config.algorithms {
                    let model = fit_with(&train, algorithm, &config.options)?;
                    let predicted = predict_all(&model, test.samples())?;
                    let confusion = Confusion::from_labels(test.labels(), &predicted)?;
                    outcomes.push(TrialOutcome {
                        trial,
                        seed,
                        train_per_class: n,
                        algorithm,
                        split_hash,
                        confusion,
                        metrics: metrics(&confusion)?,
                    });
                }
            }
            Ok(outcomes)
        })
        .collect::<Result<_>>()?;
    let outcomes: Vec<TrialOutcome> = per_trial.into_iter().flatten().collect();

    let mut cells = Vec::new();
    for &algorithm in &config.algorithms {
        for &n in &config.train_sizes {
            let rows: Vec<&Metrics> = outcomes
                .iter()
                .filter(|o| o.algorithm == algorithm && o.train_per_class == n)
                .map(|o| &o.metrics)
                .collect();
            let collect = |f: fn(&Metrics) -> Option<f64>| Summary::of(&rows.iter().filter_map(|m| f(m)).collect::<Vec<_>>());
            cells.push(CellSummary {
                algorithm,
                train_per_class: n,
                accuracy: collect(|m| Some(m.accuracy)).expect("at least one trial"),
                f1: collect(|m| m.f1),
                sensitivity: collect(|m| m.sensitivity),
                specificity: collect(|m| m.specificity),
            });
        }
    }

    Ok(TrialReport {
        repeats: config.repeats,
        base_seed: config.base_seed,
        seeds,
        train_sizes: config.train_sizes.clone(),
        cells,
        outcomes,
    })
}

/// What the small-sample estimators are compared against.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reference {
    /// Inverse (pseudo-inverse when singular) of the covariance of a fresh
    /// large sample.
    LargeSample { n: usize },
    /// The true precision matrix.
    Truth,
}

/// How the entries of the λ list are turned into penalties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PenaltyRule {
    /// λ is used as given.
    #[default]
    Absolute,
    /// λ is a constant `c`, the penalty is `c √(ln p / n)`.
    RateScaled,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ErrorStudyConfig {
    pub truth: SparsePrecisionSpec,
    pub reference: Reference,
    pub sample_sizes: Vec<usize>,
    pub lambdas: Vec<f64>,
    pub penalty_rule: PenaltyRule,
    pub repeats: usize,
    pub base_seed: u64,
    pub options: PrecisionOptions,
}

/// Distances of the three estimators to the reference for one
/// (trial, sample size, λ).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorRecord {
    pub trial: usize,
    pub seed: u64,
    pub n: usize,
    pub lambda: f64,
    pub penalty: f64,
    pub l1_lda: f64,
    pub l1_theta: f64,
    pub l1_t: f64,
    /// `|ref − Θ̂|₁ − |ref − T̂|₁`; positive when `T̂` is closer.
    pub gap: f64,
    pub induced_lda: f64,
    pub induced_theta: f64,
    pub induced_t: f64,
    pub max_lda: f64,
    pub max_theta: f64,
    pub max_t: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorCell {
    pub n: usize,
    pub lambda: f64,
    pub mean_gap: f64,
    pub median_gap: f64,
    pub fraction_positive: f64,
    pub mean_l1_lda: f64,
    pub mean_l1_theta: f64,
    pub mean_l1_t: f64,
    pub median_max_t: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorStudyReport {
    pub repeats: usize,
    pub base_seed: u64,
    pub sample_sizes: Vec<usize>,
    pub lambdas: Vec<f64>,
    pub records: Vec<ErrorRecord>,
    pub cells: Vec<ErrorCell>,
}

impl ErrorStudyReport {
    pub fn cell(&self, n: usize, lambda: f64) -> Option<&ErrorCell> {
        self.cells.iter().find(|c| c.n == n && c.lambda == lambda)
    }

    pub fn records_for(&self, n: usize, lambda: f64) -> impl Iterator<Item = &ErrorRecord> {
        self.records.iter().filter(move |r| r.n == n && r.lambda == lambda)
    }

    /// One row per trial, sample size and λ.
    pub fn records_csv(&self) -> String {
        let mut out = String::from(
            "trial,seed,n,lambda,penalty,l1_lda,l1_theta,l1_t,gap,induced_lda,induced_theta,induced_t,max_lda,max_theta,max_t\n",
        );
        for r in &self.records {
            let _ = writeln!(
                out,
                "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                r.trial,
                r.seed,
                r.n,
                r.lambda,
                r.penalty,
                r.l1_lda,
                r.l1_theta,
                r.l1_t,
                r.gap,
                r.induced_lda,
                r.induced_theta,
                r.induced_t,
                r.max_lda,
                r.max_theta,
                r.max_t
            );
        }
        out
    }

    /// Mean gap with rows = sample size and columns = λ.
    pub fn table2_csv(&self) -> String {
        let mut out = String::from("n");
        for l in &self.lambdas {
            let _ = write!(out, ",lambda={l}");
        }
        out.push('\n');
        for &n in &self.sample_sizes {
            let _ = write!(out, "{n}");
            for &l in &self.lambdas {
                let gap = self.cell(n, l).map(|c| c.mean_gap).unwrap_or(f64::NAN);
                let _ = write!(out, ",{gap:.6}");
            }
            out.push('\n');
        }
        out
    }

    /// Whitespace-separated mean ℓ1 errors per sample size, one column per
    /// estimator and λ, for plotting.
    pub fn gnuplot_data(&self) -> String {
        let mut out = String::from("# n lda");
        for l in &self.lambdas {
            let _ = write!(out, " theta_{l} t_{l}");
        }
        out.push('\n');
        for &n in &self.sample_sizes {
            let lda = self.cells.iter().find(|c| c.n == n).map(|c| c.mean_l1_lda).unwrap_or(f64::NAN);
            let _ = write!(out, "{n} {lda:.6}");
            for &l in &self.lambdas {
                if let Some(c) = self.cell(n, l) {
                    let _ = write!(out, " {:.6} {:.6}", c.mean_l1_theta, c.mean_l1_t);
                }
            }
            out.push('\n');
        }
        out
    }
}

fn distances(reference: &SymMatrix, estimate: &SymMatrix) -> (f64, f64, f64) {
    let n = norms(&(reference - estimate));
    (n.entrywise_l1, n.induced_inf, n.entrywise_max)
}

pub fn estimator_error_study(config: &ErrorStudyConfig) -> Result<ErrorStudyReport> {
    if config.repeats == 0 || config.sample_sizes.is_empty() || config.lambdas.is_empty() {
        return Err(Error::InvalidParameter(
            "repeats, sample sizes and lambdas must be non-empty".into(),
        ));
    }
    if config.sample_sizes.iter().any(|&n| n < 2) {
        return Err(Error::InvalidParameter("sample sizes must be at least 2".into()));
    }
    if let Reference::LargeSample { n } = config.reference {
        if n < 2 {
            return Err(Error::InvalidParameter("reference sample size must be at least 2".into()));
        }
    }
    let theta_true = make_precision_truth(&config.truth)?;
    let sigma = invert_spd(&theta_true)?;
    let factor = cholesky(&sigma)?;
    let p = sigma.dim();
    let zero = vec![0.0; p];

    let seeds: Vec<u64> = (0..config.repeats as u64).map(|t| config.base_seed.wrapping_add(t)).collect();
    let per_trial: Vec<Vec<ErrorRecord>> = seeds
        .par_iter()
        .enumerate()
        .map(|(trial, &seed)| {
            let reference = match config.reference {
                Reference::Truth => theta_true.clone(),
                Reference::LargeSample { n } => {
                    let mut rng = trial_rng(seed, 0);
                    let s = covariance_mle(&sample_mvn_factor(&zero, &factor, n, &mut rng)?)?;
                    if n > p {
                        invert_spd(&s).or_else(|_| pseudo_inverse(&s, DEFAULT_PINV_RTOL))?
                    } else {
                        pseudo_inverse(&s, DEFAULT_PINV_RTOL)?
                    }
                }
            };
            let mut records = Vec::new();
            for &n in &config.sample_sizes {
                let mut rng = trial_rng(seed, n as u64);
                let sigma_bar = covariance_mle(&sample_mvn_factor(&zero, &factor, n, &mut rng)?)?;
                let lda = precision_from_covariance(&sigma_bar, EstimatorKind::PseudoInverseLda, &config.options)?;
                let (l1_lda, induced_lda, max_lda) = distances(&reference, &lda);
                for &lambda in &config.lambdas {
                    let penalty = match config.penalty_rule {
                        PenaltyRule::Absolute => lambda,
                        PenaltyRule::RateScaled => lambda * ((p as f64).ln() / n as f64).sqrt(),
                    };
                    let theta = precision_from_covariance(
                        &sigma_bar,
                        EstimatorKind::Crda { lambda: penalty },
                        &config.options,
                    )?;
                    let t = desparsify(&theta, &sigma_bar)?;
                    let (l1_theta, induced_theta, max_theta) = distances(&reference, &theta);
                    let (l1_t, induced_t, max_t) = distances(&reference, &t);
                    records.push(ErrorRecord {
                        trial,
                        seed,
                        n,
                        lambda,
                        penalty,
                        l1_lda,
                        l1_theta,
                        l1_t,
                        gap: l1_theta - l1_t,
                        induced_lda,
                        induced_theta,
                        induced_t,
                        max_lda,
                        max_theta,
                        max_t,
                    });
                }
            }
            Ok(records)
        })
        .collect::<Result<_>>()?;
    let records: Vec<ErrorRecord> = per_trial.into_iter().flatten().collect();

    let mut cells = Vec::new();
    for &n in &config.sample_sizes {
        for &lambda in &config.lambdas {
            let rows: Vec<&ErrorRecord> = records.iter().filter(|r| r.n == n && r.lambda == lambda).collect();
            let k = rows.len() as f64;
            let gaps: Vec<f64> = rows.iter().map(|r| r.gap).collect();
            let max_t: Vec<f64> = rows.iter().map(|r| r.max_t).collect();
            cells.push(ErrorCell {
                n,
                lambda,
                mean_gap: gaps.iter().sum::<f64>() / k,
                median_gap: median(&gaps).unwrap_or(f64::NAN),
                fraction_positive: gaps.iter().filter(|&&g| g > 0.0).count() as f64 / k,
                mean_l1_lda: rows.iter().map(|r| r.l1_lda).sum::<f64>() / k,
                mean_l1_theta: rows.iter().map(|r| r.l1_theta).sum::<f64>() / k,
                mean_l1_t: rows.iter().map(|r| r.l1_t).sum::<f64>() / k,
                median_max_t: median(&max_t).unwrap_or(f64::NAN),
            });
        }
    }

    Ok(ErrorStudyReport {
        repeats: config.repeats,
        base_seed: config.base_seed,
        sample_sizes: config.sample_sizes.clone(),
        lambdas: config.lambdas.clone(),
        records,
        cells,
    })
}

pub fn write_string(path: impl AsRef<std::path::Path>, text: &str) -> Result<()> {
    let mut f = std::fs::File::create(path)?;
    f.write_all(text.as_bytes())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn metric_examples() {
        let m = metrics(&Confusion { tp: 50, tn: 40, fp: 10, fn_: 0 }).unwrap();
        assert_eq!(m.accuracy, 0.9);
        assert_eq!(m.f1, Some(100.0 / 110.0));
        assert_eq!(m.sensitivity, Some(1.0));
        assert_eq!(m.specificity, Some(0.8));

        let m = metrics(&Confusion { tp: 5, tn: 0, fp: 5, fn_: 0 }).unwrap();
        assert_eq!(m.accuracy, 0.5);
        assert_eq!(m.specificity, Some(0.0));
        assert_eq!(m.f1, Some(2.0 / 3.0));

        let m = metrics(&Confusion { tp: 0, tn: 7, fp: 0, fn_: 0 }).unwrap();
        assert_eq!(m.f1, None);
        assert_eq!(m.sensitivity, None);

        assert!(matches!(metrics(&Confusion::default()), Err(Error::EmptyConfusion)));
    }

    #[test]
    fn confusion_from_labels() {
        use Label::*;
        let c = Confusion::from_labels(&[Positive, Positive, Negative, Negative], &[Positive, Negative, Positive, Negative]).unwrap();
        assert_eq!(c, Confusion { tp: 1, tn: 1, fp: 1, fn_: 1 });
    }

    #[test]
    fn summary_statistics() {
        let s = Summary::of(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(s.mean, 2.0);
        assert_eq!(s.std, 1.0);
        assert_eq!(Summary::of(&[4.0]).unwrap().std, 0.0);
        assert_eq!(median(&[3.0, 1.0, 2.0, 10.0]), Some(2.5));
    }
}

//! Two-class Fisher discriminant with an arbitrary plug-in precision.
//!
//! The decision rule is the difference of the class discriminants
//! `δ_c(x) = xᵀP̂μ_c − ½ μ_cᵀP̂μ_c + log π_c`, evaluated in the equivalent
//! centered form `(x − (μ₊+μ₋)/2)ᵀ P̂ (μ₊ − μ₋) + log(π₊/π₋)`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::dataset::{Label, LabeledDataset};
use crate::error::{check_dim, Error, Result};
use crate::estimators::{make_precision_with, mean_vector, EstimatorKind, PrecisionOptions};
use crate::matrix::{dot, SymMatrix};

#[derive(Debug, Clone, PartialEq)]
pub struct LdaModel {
    mu_plus: Vec<f64>,
    mu_minus: Vec<f64>,
    precision: SymMatrix,
    log_prior_plus: f64,
    log_prior_minus: f64,
    midpoint: Vec<f64>,
    weights: Vec<f64>,
}

impl LdaModel {
    pub fn new(
        mu_plus: Vec<f64>,
        mu_minus: Vec<f64>,
        precision: SymMatrix,
        log_prior_plus: f64,
        log_prior_minus: f64,
    ) -> Result<Self> {
        let p = precision.dim();
        check_dim(p, mu_plus.len())?;
        check_dim(p, mu_minus.len())?;
        for lp in [log_prior_plus, log_prior_minus] {
            if !(lp < 0.0 && lp.is_finite()) {
                return Err(Error::InvalidParameter(format!(
                    "log-prior {lp} is not the log of a probability in (0, 1)"
                )));
            }
        }
        let total = log_prior_plus.exp() + log_prior_minus.exp();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidParameter(format!("priors sum to {total}, not 1")));
        }
        let midpoint = mu_plus.iter().zip(&mu_minus).map(|(a, b)| 0.5 * (a + b)).collect();
        let delta: Vec<f64> = mu_plus.iter().zip(&mu_minus).map(|(a, b)| a - b).collect();
        let weights = precision.mul_vec(&delta);
        Ok(Self {
            mu_plus,
            mu_minus,
            precision,
            log_prior_plus,
            log_prior_minus,
            midpoint,
            weights,
        })
    }

    pub fn dim(&self) -> usize {
        self.precision.dim()
    }

    pub fn mu_plus(&self) -> &[f64] {
        &self.mu_plus
    }

    pub fn mu_minus(&self) -> &[f64] {
        &self.mu_minus
    }

    pub fn precision(&self) -> &SymMatrix {
        &self.precision
    }

    pub fn log_priors(&self) -> (f64, f64) {
        (self.log_prior_plus, self.log_prior_minus)
    }

    /// Discriminant direction `P̂ (μ₊ − μ₋)`.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// Same model with the class roles exchanged.
    pub fn swapped(&self) -> Result<Self> {
        Self::new(
            self.mu_minus.clone(),
            self.mu_plus.clone(),
            self.precision.clone(),
            self.log_prior_minus,
            self.log_prior_plus,
        )
    }

    /// Same means and priors with a different precision.
    pub fn with_precision(&self, precision: SymMatrix) -> Result<Self> {
        Self::new(
            self.mu_plus.clone(),
            self.mu_minus.clone(),
            precision,
            self.log_prior_plus,
            self.log_prior_minus,
        )
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&ModelDocument::from(self))?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str::<ModelDocument>(text)?.try_into()
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json()? + "\n")?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }
}

/// Persisted form of a fitted model.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ModelDocument {
    pub p: usize,
    pub mu_plus: Vec<f64>,
    pub mu_minus: Vec<f64>,
    /// Row-major `p × p`.
    pub precision: Vec<f64>,
    pub log_priors: LogPriors,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct LogPriors {
    pub plus: f64,
    pub minus: f64,
}

impl From<&LdaModel> for ModelDocument {
    fn from(m: &LdaModel) -> Self {
        Self {
            p: m.dim(),
            mu_plus: m.mu_plus.clone(),
            mu_minus: m.mu_minus.clone(),
            precision: m.precision.as_slice().to_vec(),
            log_priors: LogPriors {
                plus: m.log_prior_plus,
                minus: m.log_prior_minus,
            },
        }
    }
}

impl TryFrom<ModelDocument> for LdaModel {
    type Error = Error;

    fn try_from(doc: ModelDocument) -> Result<Self> {
        let precision = SymMatrix::from_row_major(doc.p, doc.precision)?;
        LdaModel::new(
            doc.mu_plus,
            doc.mu_minus,
            precision,
            doc.log_priors.plus,
            doc.log_priors.minus,
        )
    }
}

pub fn fit(data: &LabeledDataset, kind: EstimatorKind) -> Result<LdaModel> {
    fit_with(data, kind, &PrecisionOptions::default())
}

pub fn fit_with(data: &LabeledDataset, kind: EstimatorKind, options: &PrecisionOptions) -> Result<LdaModel> {
    let pos = data.class_samples(Label::Positive);
    let neg = data.class_samples(Label::Negative);
    if pos.is_empty() || neg.is_empty() {
        return Err(Error::SingleClassData);
    }
    let mu_plus = mean_vector(&pos)?;
    let mu_minus = mean_vector(&neg)?;
    let precision = make_precision_with(data, kind, options)?;
    let m = data.len() as f64;
    LdaModel::new(
        mu_plus,
        mu_minus,
        precision,
        (pos.len() as f64 / m).ln(),
        (neg.len() as f64 / m).ln(),
    )
}

/// `δ₊(x) − δ₋(x)`; positive favours the positive class.
pub fn score(model: &LdaModel, x: &[f64]) -> Result<f64> {
    check_dim(model.dim(), x.len())?;
    let centered: f64 = x
        .iter()
        .zip(&model.midpoint)
        .zip(&model.weights)
        .map(|((xi, mi), wi)| (xi - mi) * wi)
        .sum();
    Ok(centered + (model.log_prior_plus - model.log_prior_minus))
}

/// `+1` iff the score is non-negative (a zero score is classified positive).
pub fn predict(model: &LdaModel, x: &[f64]) -> Result<Label> {
    Ok(if score(model, x)? >= 0.0 {
        Label::Positive
    } else {
        Label::Negative
    })
}

pub fn predict_all(model: &LdaModel, xs: &[Vec<f64>]) -> Result<Vec<Label>> {
    xs.iter().map(|x| predict(model, x)).collect()
}

/// Term-by-term discriminant `xᵀP̂μ − ½ μᵀP̂μ + log π` for one class.
pub fn class_discriminant(precision: &SymMatrix, mu: &[f64], log_prior: f64, x: &[f64]) -> f64 {
    let p_mu = precision.mul_vec(mu);
    dot(x, &p_mu) - 0.5 * dot(mu, &p_mu) + log_prior
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn half() -> f64 {
        0.5f64.ln()
    }

    fn simple_model() -> LdaModel {
        LdaModel::new(vec![1.0, 0.0], vec![-1.0, 0.0], SymMatrix::identity(2), half(), half()).unwrap()
    }

    #[test]
    fn hand_score() {
        assert_abs_diff_eq!(score(&simple_model(), &[2.0, 0.0]).unwrap(), 4.0, epsilon = 1e-15);
    }

    #[test]
    fn midpoint_scores_zero_and_ties_positive() {
        let prec = SymMatrix::from_rows(&[vec![2.0, 0.3], vec![0.3, 0.7]]).unwrap();
        let model = LdaModel::new(vec![0.3, 1.7], vec![-1.1, 0.4], prec, half(), half()).unwrap();
        let mid: Vec<f64> = [0.3f64, 1.7].iter().zip([-1.1, 0.4]).map(|(a, b)| (a + b) / 2.0).collect();
        assert_eq!(score(&model, &mid).unwrap(), 0.0);
        assert_eq!(predict(&model, &mid).unwrap(), Label::Positive);
    }

    #[test]
    fn class_means_are_classified() {
        let m = simple_model();
        assert_eq!(predict(&m, &[1.0, 0.0]).unwrap(), Label::Positive);
        assert_eq!(predict(&m, &[-1.0, 0.0]).unwrap(), Label::Negative);
    }

    #[test]
    fn score_matches_term_by_term() {
        let prec = SymMatrix::from_rows(&[vec![1.2, -0.4, 0.1], vec![-0.4, 0.9, 0.2], vec![0.1, 0.2, 2.0]]).unwrap();
        let (mp, mm) = (vec![0.5, -1.0, 2.0], vec![0.1, 0.3, -0.7]);
        let (lp, lm) = (0.3f64.ln(), 0.7f64.ln());
        let model = LdaModel::new(mp.clone(), mm.clone(), prec.clone(), lp, lm).unwrap();
        let x = [0.7, 0.2, -1.3];
        let brute = class_discriminant(&prec, &mp, lp, &x) - class_discriminant(&prec, &mm, lm, &x);
        assert_abs_diff_eq!(score(&model, &x).unwrap(), brute, epsilon = 1e-12);
    }

    #[test]
    fn swapping_negates() {
        let prec = SymMatrix::from_rows(&[vec![1.2, -0.4], vec![-0.4, 0.9]]).unwrap();
        let model = LdaModel::new(vec![0.5, -1.0], vec![0.1, 0.3], prec, 0.25f64.ln(), 0.75f64.ln()).unwrap();
        let sw = model.swapped().unwrap();
        for x in [[0.0, 0.0], [1.3, -2.2], [-0.4, 7.0]] {
            assert_eq!(score(&sw, &x).unwrap(), -score(&model, &x).unwrap());
        }
    }

    #[test]
    fn dimension_mismatch() {
        assert!(matches!(
            score(&simple_model(), &[1.0]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn priors_from_frequencies() {
        let samples = vec![vec![1.0, 0.0], vec![1.2, 0.1], vec![0.8, -0.2], vec![-1.0, 0.3]];
        let labels = vec![Label::Positive, Label::Positive, Label::Positive, Label::Negative];
        let data = LabeledDataset::new(2, samples, labels).unwrap();
        let model = fit(&data, EstimatorKind::Diag).unwrap();
        let (lp, lm) = model.log_priors();
        assert_abs_diff_eq!(lp, 0.75f64.ln(), epsilon = 1e-15);
        assert_abs_diff_eq!(lm, 0.25f64.ln(), epsilon = 1e-15);
    }

    #[test]
    fn balanced_priors_equal_and_single_class_rejected() {
        let data = LabeledDataset::from_classes(
            vec![vec![1.0, 0.5], vec![2.0, 0.1]],
            vec![vec![-1.0, 0.2], vec![-2.0, 0.4]],
        )
        .unwrap();
        let model = fit(&data, EstimatorKind::PseudoInverseLda).unwrap();
        let (lp, lm) = model.log_priors();
        assert_eq!(lp, lm);

        let one = LabeledDataset::from_classes(vec![vec![1.0], vec![2.0]], vec![]).unwrap();
        assert!(matches!(fit(&one, EstimatorKind::Diag), Err(Error::SingleClassData)));
    }

    #[test]
    fn json_round_trip() {
        let model = simple_model();
        let back = LdaModel::from_json(&model.to_json().unwrap()).unwrap();
        assert_eq!(back, model);
        let doc: serde_json::Value = serde_json::from_str(&model.to_json().unwrap()).unwrap();
        assert_eq!(doc["p"], 2);
        assert_eq!(doc["precision"].as_array().unwrap().len(), 4);
        assert!(doc["log_priors"]["plus"].is_number());
    }

    #[test]
    fn invalid_priors_rejected() {
        let id = SymMatrix::identity(1);
        assert!(LdaModel::new(vec![0.0], vec![1.0], id.clone(), 0.0, half()).is_err());
        assert!(LdaModel::new(vec![0.0], vec![1.0], id, 0.2f64.ln(), 0.2f64.ln()).is_err());
    }
}

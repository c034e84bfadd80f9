//! Command-line front end. [`dispatch`] parses arguments, runs one
//! subcommand and returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0    | success |
//! | 1    | invalid input or parameters |
//! | 2    | numerical failure (non-convergence, loss of definiteness) |
//! | 64   | usage error |
//!
//! Failures are reported on stderr as a single JSON line
//! `{"error": "<kind>", "message": "<text>"}`.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::dataset::LabeledDataset;
use crate::discriminant::{fit_with, predict, score, LdaModel};
use crate::ehr::{build_frequency_vectors, read_visits, CodeMap, UnmappedPolicy};
use crate::error::{Error, Result};
use crate::error_theory::{
    bound_result1, bound_result3, expected_error_general, expected_error_reduced, GaussianPair, DEFAULT_C_RATE,
};
use crate::estimators::{desparsify, Centering, EstimatorKind, PrecisionOptions};
use crate::eval::{
    estimator_error_study, run_classification_trials, write_string, ClassificationConfig, Confusion,
    ErrorStudyConfig, PenaltyRule, Reference, TrialData,
};
use crate::glasso::{graphical_lasso, GlassoConfig};
use crate::matrix::{read_matrix, read_vector, write_matrix, write_vector};
use crate::synth::{make_precision_truth, rng_from_seed, sample_pair, SparsePrecisionSpec, Structure, SyntheticProblem};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NUMERICAL: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, Parser)]
#[command(name = "plda", version, about = "Covariance-regularized LDA for high-dimension, low-sample-size data")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = LogLevel::Warn)]
    log_level: LogLevel,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum LogLevel {
    Error,
    Warn,
    Info,
    Debug,
}

impl From<LogLevel> for log::LevelFilter {
    fn from(l: LogLevel) -> Self {
        match l {
            LogLevel::Error => log::LevelFilter::Error,
            LogLevel::Warn => log::LevelFilter::Warn,
            LogLevel::Info => log::LevelFilter::Info,
            LogLevel::Debug => log::LevelFilter::Debug,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Estimate a sparse precision matrix from a covariance matrix file.
    Glasso(GlassoArgs),
    /// Fit a discriminant model on a labeled CSV dataset.
    Fit(FitArgs),
    /// Score a labeled CSV dataset with a saved model.
    Predict(PredictArgs),
    /// Expected error rate and bounds of a model under known Gaussians.
    ErrorRate(ErrorRateArgs),
    /// Draw a synthetic two-class Gaussian dataset and write its truth.
    Simulate(SimulateArgs),
    /// Turn a visit log into labeled diagnosis-frequency vectors.
    Ingest(IngestArgs),
    /// Compare precision estimators against a reference over repeated draws.
    BenchEstimators(BenchEstimatorsArgs),
    /// Repeated train/test classification trials.
    BenchClassify(BenchClassifyArgs),
}

#[derive(Debug, Args)]
struct SolverArgs {
    /// Maximum outer sweeps of the graphical lasso.
    #[arg(long, default_value_t = 200)]
    max_iter: usize,
    /// Outer convergence tolerance of the graphical lasso.
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
    /// Also penalize the diagonal (W_ii = S_ii + λ).
    #[arg(long)]
    penalize_diagonal: bool,
}

impl SolverArgs {
    fn config(&self, lambda: f64) -> Result<GlassoConfig> {
        let config = GlassoConfig {
            lambda,
            max_outer_iters: self.max_iter,
            tol: self.tol,
            penalize_diagonal: self.penalize_diagonal,
            ..GlassoConfig::default()
        };
        config.validate()?;
        Ok(config)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CenteringArg {
    Global,
    Pooled,
}

#[derive(Debug, Args)]
struct ModelArgs {
    /// Mean used to center samples for the covariance.
    #[arg(long, value_enum, default_value_t = CenteringArg::Global)]
    centering: CenteringArg,
    #[command(flatten)]
    solver: SolverArgs,
}

impl ModelArgs {
    fn options(&self) -> Result<PrecisionOptions> {
        Ok(PrecisionOptions {
            centering: match self.centering {
                CenteringArg::Global => Centering::Global,
                CenteringArg::Pooled => Centering::PooledClass,
            },
            glasso: self.solver.config(0.0)?,
            ..PrecisionOptions::default()
        })
    }
}

#[derive(Debug, Args)]
struct GlassoArgs {
    /// Covariance matrix in text format.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    lambda: f64,
    /// Destination of the precision estimate.
    #[arg(long)]
    output: PathBuf,
    /// Also write the de-sparsified estimate here.
    #[arg(long)]
    desparsified: Option<PathBuf>,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Debug, Args)]
struct FitArgs {
    /// Labeled dataset CSV (`label,f1,...,fp`).
    #[arg(long)]
    data: PathBuf,
    /// One of mle, lda, diag, shrinkage:β, crda:λ, e2d2:λ.
    #[arg(long)]
    estimator: String,
    /// Destination of the model JSON.
    #[arg(long)]
    output: PathBuf,
    #[command(flatten)]
    model: ModelArgs,
}

#[derive(Debug, Args)]
struct PredictArgs {
    #[arg(long)]
    model: PathBuf,
    #[arg(long)]
    data: PathBuf,
    /// Per-sample scores and predicted labels as CSV.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct ErrorRateArgs {
    /// True positive-class mean (vector text).
    #[arg(long)]
    mu_plus: PathBuf,
    /// True negative-class mean (vector text).
    #[arg(long)]
    mu_minus: PathBuf,
    /// True covariance (matrix text).
    #[arg(long)]
    sigma: PathBuf,
    /// Fitted model supplying the estimated means and precision.
    #[arg(long)]
    model: PathBuf,
    #[arg(long, default_value_t = 0.5)]
    prior_plus: f64,
    /// Training sample size, enables the rate-based bound.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_C_RATE)]
    c_rate: f64,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("structure").required(true).args(["bandwidth", "random_sparse"])))]
struct TruthArgs {
    #[arg(long)]
    p: usize,
    /// Banded precision with this bandwidth.
    #[arg(long)]
    bandwidth: Option<usize>,
    /// Random sparse precision with this many off-diagonals per row.
    #[arg(long)]
    random_sparse: Option<usize>,
    #[arg(long, default_value_t = 0.3)]
    strength: f64,
}

impl TruthArgs {
    fn spec(&self, seed: u64) -> SparsePrecisionSpec {
        let structure = match (self.bandwidth, self.random_sparse) {
            (Some(b), _) => Structure::Banded { bandwidth: b },
            (None, Some(k)) => Structure::RandomSparse { per_row: k },
            (None, None) => unreachable!("clap enforces the structure group"),
        };
        SparsePrecisionSpec {
            p: self.p,
            structure,
            offdiag_strength: self.strength,
            seed,
        }
    }
}

#[derive(Debug, Args)]
struct SimulateArgs {
    #[command(flatten)]
    truth: TruthArgs,
    /// Training samples per class.
    #[arg(long)]
    n: usize,
    /// Test samples per class; no test file when omitted.
    #[arg(long)]
    n_test: Option<usize>,
    /// Euclidean length of μ₊ − μ₋.
    #[arg(long, default_value_t = 2.0)]
    separation: f64,
    /// Coordinates carrying the mean shift (default: all).
    #[arg(long)]
    signal_coords: Option<usize>,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum UnmappedArg {
    Skip,
    Fail,
}

#[derive(Debug, Args)]
struct IngestArgs {
    /// Visits CSV (`patient_id,visit_date,code`).
    #[arg(long)]
    visits: PathBuf,
    /// Code map CSV (`code,cluster`).
    #[arg(long)]
    code_map: PathBuf,
    /// Comma-separated cluster labels defining a positive patient.
    #[arg(long)]
    target_clusters: String,
    #[arg(long, default_value_t = 30)]
    horizon: u32,
    #[arg(long, value_enum, default_value_t = UnmappedArg::Skip)]
    unmapped: UnmappedArg,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReferenceArg {
    LargeSample,
    Truth,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum PenaltyArg {
    Absolute,
    RateScaled,
}

#[derive(Debug, Args)]
struct BenchEstimatorsArgs {
    #[command(flatten)]
    truth: TruthArgs,
    #[arg(long, value_enum, default_value_t = ReferenceArg::LargeSample)]
    reference: ReferenceArg,
    #[arg(long, default_value_t = 10_000)]
    n_large: usize,
    /// Comma-separated small sample sizes.
    #[arg(long, default_value = "50,100,150,200")]
    sizes: String,
    /// Comma-separated penalties (constants when --penalty rate-scaled).
    #[arg(long, default_value = "0.1,1,10")]
    lambdas: String,
    #[arg(long, value_enum, default_value_t = PenaltyArg::Absolute)]
    penalty: PenaltyArg,
    #[arg(long, default_value_t = 30)]
    repeats: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    #[command(flatten)]
    solver: SolverArgs,
}

#[derive(Debug, Args)]
struct BenchClassifyArgs {
    /// Labeled pool to subsample; synthetic data when omitted.
    #[arg(long)]
    data: Option<PathBuf>,
    #[arg(long, default_value_t = 200)]
    p: usize,
    #[arg(long, default_value_t = 3)]
    bandwidth: usize,
    #[arg(long, default_value_t = 0.2)]
    strength: f64,
    #[arg(long, default_value_t = 2.0)]
    separation: f64,
    #[arg(long)]
    signal_coords: Option<usize>,
    /// Comma-separated training sizes per class.
    #[arg(long, default_value = "50")]
    train_sizes: String,
    /// Test samples per class.
    #[arg(long, default_value_t = 500)]
    test_size: usize,
    /// Comma-separated estimators.
    #[arg(long, default_value = "lda,diag,shrinkage:0.5,crda:10,e2d2:10")]
    algorithms: String,
    #[arg(long, default_value_t = 30)]
    repeats: usize,
    #[arg(long)]
    seed: u64,
    #[arg(long, default_value = ".")]
    out_dir: PathBuf,
    #[command(flatten)]
    model: ModelArgs,
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. Summaries go to `out`, errors to `err`.
pub fn dispatch<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e.render());
                return EXIT_OK;
            }
            let message = e.render().to_string();
            let first = message.lines().next().unwrap_or("usage error").trim_start_matches("error: ");
            let _ = writeln!(err, "{}", json!({"error": "Usage", "message": first}));
            return EXIT_USAGE;
        }
    };
    let _ = env_logger::Builder::new()
        .filter_level(cli.log_level.into())
        .format_timestamp(None)
        .try_init();

    match run(cli.command) {
        Ok(summary) => {
            let _ = writeln!(out, "{summary}");
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "{}", json!({"error": e.kind(), "message": e.to_string()}));
            if e.is_numerical() {
                EXIT_NUMERICAL
            } else {
                EXIT_INVALID
            }
        }
    }
}

fn run(command: Command) -> Result<serde_json::Value> {
    match command {
        Command::Glasso(a) => glasso(a),
        Command::Fit(a) => fit(a),
        Command::Predict(a) => predict_cmd(a),
        Command::ErrorRate(a) => error_rate(a),
        Command::Simulate(a) => simulate(a),
        Command::Ingest(a) => ingest(a),
        Command::BenchEstimators(a) => bench_estimators(a),
        Command::BenchClassify(a) => bench_classify(a),
    }
}

fn parse_list<T: FromStr>(text: &str, what: &str) -> Result<Vec<T>> {
    let items = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<T>()
                .map_err(|_| Error::InvalidParameter(format!("invalid {what} {s:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if items.is_empty() {
        return Err(Error::InvalidParameter(format!("empty {what} list")));
    }
    Ok(items)
}

fn parse_estimators(text: &str) -> Result<Vec<EstimatorKind>> {
    let kinds = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| EstimatorKind::from_str(s).map_err(|e| Error::InvalidParameter(e.to_string())))
        .collect::<Result<Vec<_>>>()?;
    if kinds.is_empty() {
        return Err(Error::InvalidParameter("empty estimator list".into()));
    }
    Ok(kinds)
}

fn ensure_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    Ok(())
}

fn glasso(a: GlassoArgs) -> Result<serde_json::Value> {
    let config = a.solver.config(a.lambda)?;
    let sigma = read_matrix(&a.input)?;
    let result = graphical_lasso(&sigma, &config)?;
    if !result.converged {
        return Err(Error::NotConverged { iters: result.iters });
    }
    write_matrix(&a.output, &result.theta)?;
    if let Some(path) = &a.desparsified {
        write_matrix(path, &desparsify(&result.theta, &sigma)?)?;
    }
    log::info!("glasso converged after {} sweeps", result.iters);
    Ok(json!({
        "p": sigma.dim(),
        "lambda": a.lambda,
        "iters": result.iters,
        "converged": result.converged,
        "objective": result.objective,
        "offdiag_nonzeros": result.theta.count_offdiag_nonzeros(0.0),
    }))
}

fn fit(a: FitArgs) -> Result<serde_json::Value> {
    let kind: EstimatorKind = a.estimator.parse().map_err(|e: Error| Error::InvalidParameter(e.to_string()))?;
    let options = a.model.options()?;
    let data = LabeledDataset::load(&a.data)?;
    let model = fit_with(&data, kind, &options)?;
    model.save(&a.output)?;
    Ok(json!({
        "estimator": kind.label(),
        "p": data.p(),
        "n_plus": data.count(crate::dataset::Label::Positive),
        "n_minus": data.count(crate::dataset::Label::Negative),
    }))
}

fn predict_cmd(a: PredictArgs) -> Result<serde_json::Value> {
    let model = LdaModel::load(&a.model)?;
    let data = LabeledDataset::load(&a.data)?;
    crate::error::check_dim(model.dim(), data.p())?;
    let mut predicted = Vec::with_capacity(data.len());
    let mut rows = String::from("index,score,label\n");
    for (i, x) in data.samples().iter().enumerate() {
        let s = score(&model, x)?;
        let l = predict(&model, x)?;
        rows.push_str(&format!("{i},{s:e},{}\n", l.as_i8()));
        predicted.push(l);
    }
    if let Some(path) = &a.output {
        write_string(path, &rows)?;
    }
    let confusion = Confusion::from_labels(data.labels(), &predicted)?;
    Ok(json!({
        "n": data.len(),
        "confusion": confusion,
        "metrics": crate::eval::metrics(&confusion)?,
    }))
}

fn error_rate(a: ErrorRateArgs) -> Result<serde_json::Value> {
    let sigma = read_matrix(&a.sigma)?;
    let truth = GaussianPair::new(read_vector(&a.mu_plus)?, read_vector(&a.mu_minus)?, sigma, a.prior_plus)?;
    let model = LdaModel::load(&a.model)?;
    crate::error::check_dim(truth.dim(), model.dim())?;
    let (mp, mm, ph) = (model.mu_plus(), model.mu_minus(), model.precision());
    let bound3 = match a.m {
        Some(m) => Some(bound_result3(mp, mm, ph, m, a.c_rate)?),
        None => None,
    };
    Ok(json!({
        "epsilon": expected_error_general(&truth, mp, mm, ph)?,
        "epsilon_reduced": expected_error_reduced(mp, mm, &truth.sigma, ph)?,
        "bayes_error": truth.bayes_error()?,
        "bound_result1": bound_result1(mp, mm, ph, &truth.sigma)?,
        "bound_result3": bound3,
    }))
}

fn simulate(a: SimulateArgs) -> Result<serde_json::Value> {
    if a.n == 0 || a.n_test == Some(0) {
        return Err(Error::InvalidParameter("sample counts must be positive".into()));
    }
    let problem = SyntheticProblem {
        precision: a.truth.spec(a.seed),
        separation: a.separation,
        signal_coords: a.signal_coords.unwrap_or(a.truth.p),
    };
    let pair = problem.gaussian_pair()?;
    let theta = make_precision_truth(&problem.precision)?;
    let factor = crate::matrix::cholesky(&pair.sigma)?;
    let mut rng = rng_from_seed(a.seed);
    let train = sample_pair(&pair, &factor, a.n, a.n, &mut rng)?;

    ensure_dir(&a.out_dir)?;
    let dir = &a.out_dir;
    train.save(dir.join("train.csv"))?;
    if let Some(n_test) = a.n_test {
        sample_pair(&pair, &factor, n_test, n_test, &mut rng)?.save(dir.join("test.csv"))?;
    }
    write_matrix(dir.join("sigma.txt"), &pair.sigma)?;
    write_matrix(dir.join("precision.txt"), &theta)?;
    write_vector(dir.join("mu_plus.txt"), &pair.mu_plus)?;
    write_vector(dir.join("mu_minus.txt"), &pair.mu_minus)?;
    let meta = json!({
        "problem": problem,
        "seed": a.seed,
        "n_per_class": a.n,
        "n_test_per_class": a.n_test,
        "bayes_error": pair.bayes_error()?,
    });
    write_string(dir.join("truth.json"), &format!("{meta:#}\n"))?;
    Ok(meta)
}

fn ingest(a: IngestArgs) -> Result<serde_json::Value> {
    let targets: Vec<String> = parse_list(&a.target_clusters, "target cluster")?;
    let map = CodeMap::read_csv(std::fs::File::open(&a.code_map)?, &targets)?;
    let visits = read_visits(std::fs::File::open(&a.visits)?)?;
    let policy = match a.unmapped {
        UnmappedArg::Skip => UnmappedPolicy::Skip,
        UnmappedArg::Fail => UnmappedPolicy::Fail,
    };
    let output = build_frequency_vectors(&visits, &map, a.horizon, policy)?;

    ensure_dir(&a.out_dir)?;
    let dir = &a.out_dir;
    output.dataset.save(dir.join("data.csv"))?;
    output.write_audit(std::fs::File::create(dir.join("audit.jsonl"))?)?;
    write_string(dir.join("features.txt"), &(map.cluster_labels().join("\n") + "\n"))?;
    write_string(dir.join("patients.txt"), &(output.patient_ids.join("\n") + "\n"))?;
    let excluded = output.audit.iter().filter(|e| e.excluded.is_some()).count();
    Ok(json!({
        "patients": output.audit.len(),
        "included": output.dataset.len(),
        "excluded": excluded,
        "positives": output.dataset.count(crate::dataset::Label::Positive),
        "features": map.n_clusters(),
        "unmapped_codes_skipped": output.unmapped_skipped,
        "horizon_days": a.horizon,
    }))
}

fn bench_estimators(a: BenchEstimatorsArgs) -> Result<serde_json::Value> {
    let config = ErrorStudyConfig {
        truth: a.truth.spec(a.seed),
        reference: match a.reference {
            ReferenceArg::LargeSample => Reference::LargeSample { n: a.n_large },
            ReferenceArg::Truth => Reference::Truth,
        },
        sample_sizes: parse_list(&a.sizes, "sample size")?,
        lambdas: parse_list(&a.lambdas, "lambda")?,
        penalty_rule: match a.penalty {
            PenaltyArg::Absolute => PenaltyRule::Absolute,
            PenaltyArg::RateScaled => PenaltyRule::RateScaled,
        },
        repeats: a.repeats,
        base_seed: a.seed,
        options: PrecisionOptions {
            glasso: a.solver.config(0.0)?,
            ..PrecisionOptions::default()
        },
    };
    let report = estimator_error_study(&config)?;
    ensure_dir(&a.out_dir)?;
    let dir = &a.out_dir;
    write_string(dir.join("records.csv"), &report.records_csv())?;
    write_string(dir.join("table2.csv"), &report.table2_csv())?;
    write_string(dir.join("figure2.dat"), &report.gnuplot_data())?;
    Ok(json!({ "repeats": report.repeats, "base_seed": report.base_seed, "cells": report.cells }))
}

fn bench_classify(a: BenchClassifyArgs) -> Result<serde_json::Value> {
    let data = match &a.data {
        Some(path) => TrialData::Pool(LabeledDataset::load(path)?),
        None => TrialData::Synthetic(SyntheticProblem {
            precision: SparsePrecisionSpec {
                p: a.p,
                structure: Structure::Banded { bandwidth: a.bandwidth },
                offdiag_strength: a.strength,
                seed: a.seed,
            },
            separation: a.separation,
            signal_coords: a.signal_coords.unwrap_or(a.p),
        }),
    };
    let config = ClassificationConfig {
        data,
        train_sizes: parse_list(&a.train_sizes, "training size")?,
        test_per_class: a.test_size,
        algorithms: parse_estimators(&a.algorithms)?,
        repeats: a.repeats,
        base_seed: a.seed,
        options: a.model.options()?,
    };
    let report = run_classification_trials(&config)?;
    ensure_dir(&a.out_dir)?;
    let dir = &a.out_dir;
    write_string(dir.join("table1.csv"), &report.table1_csv())?;
    let mut lines = String::new();
    for o in &report.outcomes {
        lines.push_str(&serde_json::to_string(o)?);
        lines.push('\n');
    }
    write_string(dir.join("outcomes.jsonl"), &lines)?;
    Ok(json!({ "repeats": report.repeats, "seeds": report.seeds, "cells": report.cells }))
}

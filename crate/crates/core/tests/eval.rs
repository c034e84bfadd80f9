use precision_lda::dataset::{Label, LabeledDataset};
use precision_lda::discriminant::{fit_with, predict};
use precision_lda::estimators::{EstimatorKind, PrecisionOptions};
use precision_lda::eval::{
    dataset_hash, estimator_error_study, metrics, run_classification_trials, ClassificationConfig, Confusion,
    ErrorStudyConfig, PenaltyRule, Reference, TrialData,
};
use precision_lda::matrix::cholesky;
use precision_lda::synth::{rng_from_seed, sample_pair, SparsePrecisionSpec, SyntheticProblem};
use precision_lda::Error;

fn problem() -> SyntheticProblem {
    SyntheticProblem {
        precision: SparsePrecisionSpec::banded(12, 1, 0.3),
        separation: 2.0,
        signal_coords: 12,
    }
}

fn config(repeats: usize) -> ClassificationConfig {
    ClassificationConfig {
        data: TrialData::Synthetic(problem()),
        train_sizes: vec![8, 15],
        test_per_class: 40,
        algorithms: vec![
            EstimatorKind::PseudoInverseLda,
            EstimatorKind::Diag,
            EstimatorKind::E2d2 { lambda: 0.5 },
        ],
        repeats,
        base_seed: 100,
        options: PrecisionOptions::default(),
    }
}

#[test]
fn trials_are_reproducible() {
    let a = run_classification_trials(&config(6)).unwrap();
    let b = run_classification_trials(&config(6)).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.table1_csv(), b.table1_csv());
    assert_eq!(a.seeds, (100..106).collect::<Vec<_>>());
}

#[test]
fn algorithms_share_each_split() {
    let report = run_classification_trials(&config(5)).unwrap();
    for trial in 0..5 {
        for n in [8, 15] {
            let hashes: Vec<u64> = report
                .outcomes
                .iter()
                .filter(|o| o.trial == trial && o.train_per_class == n)
                .map(|o| o.split_hash)
                .collect();
            assert_eq!(hashes.len(), 3);
            assert!(hashes.iter().all(|&h| h == hashes[0]));
        }
    }
    let distinct: std::collections::BTreeSet<u64> = report.outcomes.iter().map(|o| o.split_hash).collect();
    assert_eq!(distinct.len(), 10);
}

#[test]
fn single_trial_equals_direct_pipeline() {
    let mut cfg = config(1);
    cfg.train_sizes = vec![15];
    let report = run_classification_trials(&cfg).unwrap();

    let pair = problem().gaussian_pair().unwrap();
    let factor = cholesky(&pair.sigma).unwrap();
    let mut rng = rng_from_seed(100);
    rng.set_stream(15);
    let train = sample_pair(&pair, &factor, 15, 15, &mut rng).unwrap();
    let test = sample_pair(&pair, &factor, 40, 40, &mut rng).unwrap();
    let hash = dataset_hash(&train) ^ dataset_hash(&test).rotate_left(1);

    for outcome in &report.outcomes {
        assert_eq!(outcome.split_hash, hash);
        let model = fit_with(&train, outcome.algorithm, &cfg.options).unwrap();
        let predicted: Vec<Label> = test.samples().iter().map(|x| predict(&model, x).unwrap()).collect();
        let confusion = Confusion::from_labels(test.labels(), &predicted).unwrap();
        assert_eq!(outcome.confusion, confusion);
        assert_eq!(outcome.metrics, metrics(&confusion).unwrap());
        let cell = report.cell(outcome.algorithm, 15).unwrap();
        assert_eq!(cell.accuracy.mean, outcome.metrics.accuracy);
    }
}

#[test]
fn pool_draws_are_disjoint_and_checked() {
    let pair = problem().gaussian_pair().unwrap();
    let factor = cholesky(&pair.sigma).unwrap();
    let pool = sample_pair(&pair, &factor, 30, 30, &mut rng_from_seed(1)).unwrap();
    let mut cfg = config(3);
    cfg.data = TrialData::Pool(pool.clone());
    cfg.train_sizes = vec![10];
    cfg.test_per_class = 20;
    let report = run_classification_trials(&cfg).unwrap();
    assert_eq!(report.outcomes.len(), 9);
    for o in &report.outcomes {
        assert_eq!(o.confusion.total(), 40);
    }

    cfg.test_per_class = 21;
    let err = run_classification_trials(&cfg).unwrap_err();
    assert!(matches!(err, Error::InsufficientData(_)), "{err}");
}

#[test]
fn hash_tracks_content() {
    let a = LabeledDataset::new(2, vec![vec![1.0, 2.0], vec![3.0, 4.0]], vec![Label::Positive, Label::Negative]).unwrap();
    let b = LabeledDataset::new(2, vec![vec![1.0, 2.0], vec![3.0, 4.0]], vec![Label::Negative, Label::Positive]).unwrap();
    assert_eq!(dataset_hash(&a), dataset_hash(&a.clone()));
    assert_ne!(dataset_hash(&a), dataset_hash(&b));
}

#[test]
fn error_study_is_reproducible() {
    let cfg = ErrorStudyConfig {
        truth: SparsePrecisionSpec::banded(10, 1, 0.3),
        reference: Reference::LargeSample { n: 500 },
        sample_sizes: vec![20, 40],
        lambdas: vec![0.1, 1.0],
        penalty_rule: PenaltyRule::Absolute,
        repeats: 4,
        base_seed: 9,
        options: PrecisionOptions::default(),
    };
    let a = estimator_error_study(&cfg).unwrap();
    let b = estimator_error_study(&cfg).unwrap();
    assert_eq!(a.records_csv(), b.records_csv());
    assert_eq!(a.table2_csv(), b.table2_csv());
    assert_eq!(a.records.len(), 16);
    for r in &a.records {
        assert!((r.gap - (r.l1_theta - r.l1_t)).abs() < 1e-12);
        assert!(r.max_t <= r.induced_t + 1e-12);
    }
    // the pseudo-inverse baseline does not depend on λ
    for r in a.records_for(20, 0.1) {
        let other = a.records_for(20, 1.0).find(|o| o.trial == r.trial).unwrap();
        assert_eq!(r.l1_lda, other.l1_lda);
    }
}

//! Epochal training loop combining gradient descent with lexicase selection.
//!
//! Each epoch partitions the training data into disjoint subsets, trains one
//! candidate per subset, then runs a single selection event over the full
//! dataset to pick the parent that seeds the next epoch's candidates. The
//! learner is abstract; the built-in candidate is a multiclass linear model
//! trained by softmax cross-entropy SGD on synthetic Gaussian blobs.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use thiserror::Error;

use crate::evaluate::{ErrorSource, Evaluator};
use crate::scalar::Scalar;
use crate::select::{
    fast_lexicase_select, lexicase_select, CandidatePool, SelectError, SelectionOutcome,
};
use crate::shuffle::{uniform_shuffle, ShufflePolicy};
use crate::weights::{init_weights, InitPolicy, WeightError, WeightVector};

#[derive(Debug, Error, PartialEq)]
pub enum GradientError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("dataset holds {cases} cases, cannot split into {parts} subsets")]
    DataTooSmall { cases: usize, parts: usize },
    #[error("candidate {candidate} has non-finite parameters after epoch {epoch}")]
    NonFiniteParameters { candidate: usize, epoch: usize },
    #[error(transparent)]
    Select(#[from] SelectError),
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// A trainable candidate: cloning copies parameters exactly, so clones
/// predict identically to their source until trained.
pub trait Learner<S>: Clone {
    fn predict(&self, features: &[S]) -> usize;
    fn train_on(&mut self, data: &Dataset<S>, subset: &[usize]);
    fn params_finite(&self) -> bool;
}

/// Labeled classification cases with a flat row-major feature buffer.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset<S> {
    features: Vec<S>,
    labels: Vec<usize>,
    n_features: usize,
    n_classes: usize,
}

impl<S: Scalar> Dataset<S> {
    pub fn new(
        features: Vec<S>,
        labels: Vec<usize>,
        n_features: usize,
        n_classes: usize,
    ) -> Result<Self, GradientError> {
        if n_features == 0 || n_classes < 2 {
            return Err(GradientError::InvalidConfig(
                "need at least 1 feature and 2 classes".into(),
            ));
        }
        if features.len() != labels.len() * n_features {
            return Err(GradientError::InvalidConfig(format!(
                "feature buffer holds {} values for {} labels x {} features",
                features.len(),
                labels.len(),
                n_features
            )));
        }
        if labels.iter().any(|&y| y >= n_classes) {
            return Err(GradientError::InvalidConfig(
                "label out of class range".into(),
            ));
        }
        Ok(Self {
            features,
            labels,
            n_features,
            n_classes,
        })
    }

    /// Gaussian blob classes: centers spaced on a circle in the first two
    /// feature dimensions (on a line if only one), spherical noise `spread`.
    /// Class labels cycle round-robin, so classes stay balanced.
    pub fn gaussian_blobs<R: Rng + ?Sized>(
        n_cases: usize,
        n_classes: usize,
        n_features: usize,
        spread: f64,
        rng: &mut R,
    ) -> Result<Self, GradientError> {
        if n_features == 0 || n_classes < 2 {
            return Err(GradientError::InvalidConfig(
                "need at least 1 feature and 2 classes".into(),
            ));
        }
        const RADIUS: f64 = 2.0;
        let centers: Vec<Vec<f64>> = (0..n_classes)
            .map(|k| {
                let mut center = vec![0.0; n_features];
                if n_features == 1 {
                    center[0] = (k as f64 - (n_classes - 1) as f64 / 2.0) * RADIUS;
                } else {
                    let theta = 2.0 * std::f64::consts::PI * k as f64 / n_classes as f64;
                    center[0] = RADIUS * theta.cos();
                    center[1] = RADIUS * theta.sin();
                }
                center
            })
            .collect();
        let noise = Normal::new(0.0, spread)
            .map_err(|e| GradientError::InvalidConfig(format!("bad spread: {e}")))?;

        let mut features = Vec::with_capacity(n_cases * n_features);
        let mut labels = Vec::with_capacity(n_cases);
        for i in 0..n_cases {
            let class = i % n_classes;
            labels.push(class);
            for j in 0..n_features {
                let value = centers[class][j] + noise.sample(rng);
                features.push(S::from_f64(value).expect("f64 convertible to scalar"));
            }
        }
        Self::new(features, labels, n_features, n_classes)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn case(&self, i: usize) -> &[S] {
        &self.features[i * self.n_features..(i + 1) * self.n_features]
    }

    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    pub fn n_features(&self) -> usize {
        self.n_features
    }

    pub fn n_classes(&self) -> usize {
        self.n_classes
    }
}

/// Multiclass linear classifier trained by softmax cross-entropy SGD.
#[derive(Debug, Clone, PartialEq)]
pub struct ToyLinearLearner<S> {
    weights: Vec<S>, // classes x features, row-major
    bias: Vec<S>,
    n_features: usize,
    n_classes: usize,
    learning_rate: S,
}

impl<S: Scalar> ToyLinearLearner<S> {
    /// Zero-initialized parameters; every fresh learner predicts class 0.
    pub fn new(n_classes: usize, n_features: usize, learning_rate: S) -> Self {
        Self {
            weights: vec![S::zero(); n_classes * n_features],
            bias: vec![S::zero(); n_classes],
            n_features,
            n_classes,
            learning_rate,
        }
    }

    fn logits(&self, features: &[S]) -> Vec<S> {
        (0..self.n_classes)
            .map(|k| {
                let row = &self.weights[k * self.n_features..(k + 1) * self.n_features];
                row.iter()
                    .zip(features)
                    .fold(self.bias[k], |acc, (&w, &x)| acc + w * x)
            })
            .collect()
    }
}

impl<S: Scalar> Learner<S> for ToyLinearLearner<S> {
    fn predict(&self, features: &[S]) -> usize {
        let logits = self.logits(features);
        let mut best = 0;
        for (k, &value) in logits.iter().enumerate() {
            if value > logits[best] {
                best = k;
            }
        }
        best
    }

    fn train_on(&mut self, data: &Dataset<S>, subset: &[usize]) {
        for &i in subset {
            let x = data.case(i);
            let y = data.label(i);
            let logits = self.logits(x);
            let max = logits
                .iter()
                .copied()
                .fold(S::neg_infinity(), |acc, v| acc.max(v));
            let exps: Vec<S> = logits.iter().map(|&v| (v - max).exp()).collect();
            let total = exps.iter().fold(S::zero(), |acc, &v| acc + v);
            for k in 0..self.n_classes {
                let target = if k == y { S::one() } else { S::zero() };
                let gradient = exps[k] / total - target;
                let step = self.learning_rate * gradient;
                let row = &mut self.weights[k * self.n_features..(k + 1) * self.n_features];
                for (w, &xj) in row.iter_mut().zip(x) {
                    *w = *w - step * xj;
                }
                self.bias[k] = self.bias[k] - step;
            }
        }
    }

    fn params_finite(&self) -> bool {
        self.weights.iter().chain(&self.bias).all(|v| v.is_finite())
    }
}

/// Fraction of `data` the learner labels correctly.
pub fn accuracy<S: Scalar, L: Learner<S>>(learner: &L, data: &Dataset<S>) -> f64 {
    if data.is_empty() {
        return 0.0;
    }
    let correct = (0..data.len())
        .filter(|&i| learner.predict(data.case(i)) == data.label(i))
        .count();
    correct as f64 / data.len() as f64
}

struct LearnerSource<'a, S, L> {
    data: &'a Dataset<S>,
    candidates: &'a [L],
}

impl<S: Scalar, L: Learner<S>> ErrorSource<S> for LearnerSource<'_, S, L> {
    fn n_candidates(&self) -> usize {
        self.candidates.len()
    }

    fn n_cases(&self) -> usize {
        self.data.len()
    }

    fn error(&self, candidate: usize, case: usize) -> S {
        if self.candidates[candidate].predict(self.data.case(case)) == self.data.label(case) {
            S::zero()
        } else {
            S::one()
        }
    }
}

/// Configuration for the gradient-lexicase experiment.
#[derive(Debug, Clone, PartialEq)]
pub struct GradientConfig {
    /// Number of candidate models trained per epoch.
    pub population_size: usize,
    pub epochs: usize,
    pub n_cases: usize,
    pub n_classes: usize,
    pub n_features: usize,
    /// Standard deviation of the blob noise; larger means more overlap.
    pub spread: f64,
    pub learning_rate: f64,
    pub shuffle: ShufflePolicy,
    pub init: InitPolicy,
    pub seed: u64,
}

impl Default for GradientConfig {
    fn default() -> Self {
        Self {
            population_size: 4,
            epochs: 200,
            n_cases: 2000,
            n_classes: 4,
            n_features: 2,
            spread: 0.9,
            learning_rate: 0.1,
            shuffle: ShufflePolicy::Uniform,
            init: InitPolicy::DefaultMax,
            seed: 0,
        }
    }
}

impl GradientConfig {
    pub fn validate(&self) -> Result<(), GradientError> {
        if self.population_size < 2 {
            return Err(GradientError::InvalidConfig(
                "population size must be at least 2".into(),
            ));
        }
        if self.n_cases < self.population_size {
            return Err(GradientError::DataTooSmall {
                cases: self.n_cases,
                parts: self.population_size,
            });
        }
        if self.n_classes < 2 || self.n_features == 0 {
            return Err(GradientError::InvalidConfig(
                "need at least 2 classes and 1 feature".into(),
            ));
        }
        if !(self.learning_rate.is_finite() && self.learning_rate > 0.0) {
            return Err(GradientError::InvalidConfig(format!(
                "learning rate {} must be finite and positive",
                self.learning_rate
            )));
        }
        if !(self.spread.is_finite() && self.spread > 0.0) {
            return Err(GradientError::InvalidConfig(format!(
                "spread {} must be finite and positive",
                self.spread
            )));
        }
        Ok(())
    }
}

/// Splits `0..n_cases` into `parts` disjoint subsets of `n_cases / parts`
/// indices each, drawn without replacement; the remainder sits out this
/// epoch. Redrawn from the run's stream every epoch.
pub fn partition_subsets<R: Rng + ?Sized>(
    n_cases: usize,
    parts: usize,
    rng: &mut R,
) -> Result<Vec<Vec<usize>>, GradientError> {
    if parts == 0 {
        return Err(GradientError::InvalidConfig(
            "cannot partition into zero subsets".into(),
        ));
    }
    if n_cases < parts {
        return Err(GradientError::DataTooSmall {
            cases: n_cases,
            parts,
        });
    }
    let per_subset = n_cases / parts;
    let order = uniform_shuffle(n_cases, rng);
    Ok(order
        .chunks_exact(per_subset)
        .take(parts)
        .map(|chunk| chunk.to_vec())
        .collect())
}

/// One epoch: train candidate `j` on subset `j`, run a single selection event
/// over the full dataset, then reset all candidates to clones of the parent.
///
/// Uniform shuffle runs the classic selection event with no weight updates;
/// weighted and ranked policies run fast selection against `weights`.
pub fn gradient_lexicase_epoch<S, L, R>(
    candidates: &mut Vec<L>,
    data: &Dataset<S>,
    weights: &mut WeightVector<S>,
    config: &GradientConfig,
    epoch: usize,
    rng: &mut R,
) -> Result<(L, SelectionOutcome), GradientError>
where
    S: Scalar,
    L: Learner<S>,
    R: Rng + ?Sized,
{
    let p = candidates.len();
    if p == 0 {
        return Err(GradientError::InvalidConfig("no candidates".into()));
    }
    let subsets = partition_subsets(data.len(), p, rng)?;
    for (candidate, subset) in candidates.iter_mut().zip(&subsets) {
        candidate.train_on(data, subset);
    }
    if let Some(candidate) = candidates.iter().position(|c| !c.params_finite()) {
        return Err(GradientError::NonFiniteParameters { candidate, epoch });
    }

    let outcome = {
        let source = LearnerSource {
            data,
            candidates: candidates.as_slice(),
        };
        let mut evaluator = Evaluator::new(source);
        let pool = CandidatePool::full(p);
        match config.shuffle {
            ShufflePolicy::Uniform => {
                let order = uniform_shuffle(data.len(), rng);
                lexicase_select(&pool, &order, &mut evaluator, rng)?
            }
            policy => fast_lexicase_select(&pool, weights, policy, &mut evaluator, rng)?,
        }
    };

    let parent = candidates[outcome.selected].clone();
    *candidates = vec![parent.clone(); p];
    Ok((parent, outcome))
}

/// One row of `epochs.csv`.
#[derive(Debug, Clone, PartialEq)]
pub struct EpochRecord {
    pub epoch: usize,
    pub evaluations: u64,
    pub pool_final_size: usize,
    pub parent_train_acc: f64,
}

impl EpochRecord {
    pub const CSV_HEADER: &'static str = "epoch,evaluations,pool_final_size,parent_train_acc";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{}",
            self.epoch, self.evaluations, self.pool_final_size, self.parent_train_acc
        )
    }
}

/// Full gradient-lexicase experiment output.
#[derive(Debug, Clone, PartialEq)]
pub struct GradientResult<S, L> {
    pub epochs: Vec<EpochRecord>,
    pub parent: L,
    pub train_accuracy: f64,
    pub test_accuracy: f64,
    pub final_weights: WeightVector<S>,
}

/// Runs the built-in experiment: Gaussian-blob data, toy linear learners.
///
/// The master seed fixes the dataset, the test split, and every epoch's
/// randomness. One weight vector persists across all epochs.
pub fn run_gradient_experiment<S: Scalar>(
    config: &GradientConfig,
) -> Result<GradientResult<S, ToyLinearLearner<S>>, GradientError> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let train = Dataset::<S>::gaussian_blobs(
        config.n_cases,
        config.n_classes,
        config.n_features,
        config.spread,
        &mut rng,
    )?;
    let test = Dataset::<S>::gaussian_blobs(
        (config.n_cases / 4).max(1).max(config.n_classes),
        config.n_classes,
        config.n_features,
        config.spread,
        &mut rng,
    )?;
    let learning_rate = S::from_f64(config.learning_rate).expect("learning rate fits scalar");
    let initial = ToyLinearLearner::new(config.n_classes, config.n_features, learning_rate);
    run_gradient_experiment_with(config, &train, &test, initial, &mut rng)
}

/// As [`run_gradient_experiment`], but over caller-supplied data and an
/// arbitrary initial learner.
pub fn run_gradient_experiment_with<S, L, R>(
    config: &GradientConfig,
    train: &Dataset<S>,
    test: &Dataset<S>,
    initial: L,
    rng: &mut R,
) -> Result<GradientResult<S, L>, GradientError>
where
    S: Scalar,
    L: Learner<S>,
    R: Rng + ?Sized,
{
    let p = config.population_size;
    let mut weights = init_weights::<S>(train.len(), config.init, p)?;
    let mut candidates = vec![initial.clone(); p];
    let mut parent = initial;
    let mut epochs = Vec::with_capacity(config.epochs);

    for epoch in 1..=config.epochs {
        let (selected, outcome) = gradient_lexicase_epoch(
            &mut candidates,
            train,
            &mut weights,
            config,
            epoch,
            rng,
        )?;
        parent = selected;
        epochs.push(EpochRecord {
            epoch,
            evaluations: outcome.evaluations,
            pool_final_size: outcome.final_pool_size,
            parent_train_acc: accuracy(&parent, train),
        });
    }

    let train_accuracy = accuracy(&parent, train);
    let test_accuracy = accuracy(&parent, test);
    Ok(GradientResult {
        epochs,
        parent,
        train_accuracy,
        test_accuracy,
        final_weights: weights,
    })
}

//! Desk-scale generational harness: a bitstring GA with per-case pass/fail
//! errors, plus a synthetic error-matrix mode for controlled experiments.
//!
//! Each generation performs one selection event per population slot, mutates
//! the selected parents into the next population, and rolls the events up
//! into a telemetry row. A run stops early once some candidate scores zero
//! error on every case.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::evaluate::{generation_rollup, ErrorSource, Evaluator, GenerationStats};
use crate::scalar::Scalar;
use crate::select::{select_with_policy, CandidatePool, SelectError, SelectionOutcome};
use crate::shuffle::ShufflePolicy;
use crate::weights::{init_weights, InitPolicy, WeightError, WeightVector};

pub type Genome = Vec<bool>;

#[derive(Debug, Error, PartialEq)]
pub enum GaError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Select(#[from] SelectError),
    #[error(transparent)]
    Weight(#[from] WeightError),
    #[error("failed to start worker pool: {0}")]
    WorkerPool(String),
}

/// Bit-matching problem: case `i` scores 0 when `genome[i]` equals the target
/// bit, 1 otherwise. Per-case difficulty is shaped by the probability that a
/// freshly sampled genome already matches each target bit.
#[derive(Debug, Clone, PartialEq)]
pub struct BitstringProblem {
    target: Vec<bool>,
    init_match_prob: Vec<f64>,
}

impl BitstringProblem {
    /// Every case initialized at a 50% match rate: homogeneous difficulty.
    pub fn uniform(n_cases: usize) -> Self {
        Self::with_match_probs(vec![0.5; n_cases])
    }

    /// Initial match probability ramps linearly from 5% (hard cases) to 95%
    /// (easy cases) across the genome, so case difficulty is heterogeneous
    /// and hard-first orderings have something to exploit.
    pub fn heterogeneous(n_cases: usize) -> Self {
        let probs = (0..n_cases)
            .map(|i| {
                if n_cases <= 1 {
                    0.5
                } else {
                    0.05 + 0.9 * i as f64 / (n_cases - 1) as f64
                }
            })
            .collect();
        Self::with_match_probs(probs)
    }

    /// Target is all-ones; `init_match_prob[i]` is the chance that a fresh
    /// genome's bit `i` is already correct.
    pub fn with_match_probs(init_match_prob: Vec<f64>) -> Self {
        Self {
            target: vec![true; init_match_prob.len()],
            init_match_prob,
        }
    }

    pub fn n_cases(&self) -> usize {
        self.target.len()
    }

    pub fn random_genome<R: Rng + ?Sized>(&self, rng: &mut R) -> Genome {
        self.target
            .iter()
            .zip(&self.init_match_prob)
            .map(|(&bit, &p)| if rng.random_bool(p) { bit } else { !bit })
            .collect()
    }

    pub fn is_solution(&self, genome: &Genome) -> bool {
        genome == &self.target
    }
}

/// Evaluation adapter for one generation's population.
pub struct BitstringSource<'a, S> {
    problem: &'a BitstringProblem,
    population: &'a [Genome],
    _scalar: std::marker::PhantomData<S>,
}

impl<'a, S> BitstringSource<'a, S> {
    pub fn new(problem: &'a BitstringProblem, population: &'a [Genome]) -> Self {
        Self {
            problem,
            population,
            _scalar: std::marker::PhantomData,
        }
    }
}

impl<S: Scalar> ErrorSource<S> for BitstringSource<'_, S> {
    fn n_candidates(&self) -> usize {
        self.population.len()
    }

    fn n_cases(&self) -> usize {
        self.problem.n_cases()
    }

    fn error(&self, candidate: usize, case: usize) -> S {
        if self.population[candidate][case] == self.problem.target[case] {
            S::zero()
        } else {
            S::one()
        }
    }
}

/// A fixed error matrix: `n_candidates` rows by `n_cases` columns.
///
/// In the synthetic harness mode a fresh matrix is sampled each generation
/// from per-case pass probabilities; tests also build matrices directly.
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticErrorMatrix<S> {
    values: Vec<S>,
    n_candidates: usize,
    n_cases: usize,
}

impl<S: Scalar> SyntheticErrorMatrix<S> {
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self, GaError> {
        let n_candidates = rows.len();
        let n_cases = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cases) {
            return Err(GaError::InvalidConfig(
                "error matrix rows differ in length".into(),
            ));
        }
        Self::from_raw(rows.into_iter().flatten().collect(), n_candidates, n_cases)
    }

    /// Builds from a flat row-major buffer. Entries must be non-negative;
    /// non-finite entries are allowed only so the engine's guards can be
    /// exercised, negative ones never are.
    pub fn from_raw(values: Vec<S>, n_candidates: usize, n_cases: usize) -> Result<Self, GaError> {
        if values.len() != n_candidates * n_cases {
            return Err(GaError::InvalidConfig(format!(
                "matrix buffer holds {} values, expected {}",
                values.len(),
                n_candidates * n_cases
            )));
        }
        if values.iter().any(|&v| v < S::zero()) {
            return Err(GaError::InvalidConfig(
                "error values must be non-negative".into(),
            ));
        }
        Ok(Self {
            values,
            n_candidates,
            n_cases,
        })
    }

    /// Samples a pass/fail matrix: candidate `c` scores 0 on case `k` with
    /// probability `pass_prob[k]`, 1 otherwise.
    pub fn sample<R: Rng + ?Sized>(
        pass_prob: &[f64],
        n_candidates: usize,
        rng: &mut R,
    ) -> Result<Self, GaError> {
        if pass_prob.iter().any(|&p| !(0.0..=1.0).contains(&p)) {
            return Err(GaError::InvalidConfig(
                "pass probabilities must lie in [0, 1]".into(),
            ));
        }
        let mut values = Vec::with_capacity(n_candidates * pass_prob.len());
        for _ in 0..n_candidates {
            for &p in pass_prob {
                values.push(if rng.random_bool(p) { S::zero() } else { S::one() });
            }
        }
        Self::from_raw(values, n_candidates, pass_prob.len())
    }

    pub fn has_perfect_row(&self) -> bool {
        (0..self.n_candidates).any(|c| {
            self.values[c * self.n_cases..(c + 1) * self.n_cases]
                .iter()
                .all(|&v| v == S::zero())
        })
    }
}

impl<S: Scalar> ErrorSource<S> for SyntheticErrorMatrix<S> {
    fn n_candidates(&self) -> usize {
        self.n_candidates
    }

    fn n_cases(&self) -> usize {
        self.n_cases
    }

    fn error(&self, candidate: usize, case: usize) -> S {
        self.values[candidate * self.n_cases + case]
    }
}

/// Experiment configuration shared by the bitstring and synthetic modes.
///
/// Library defaults mirror the full experimental scale (50 runs, population
/// 1000, 300 generations); the CLI applies smaller desk-scale defaults.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub runs: usize,
    pub population_size: usize,
    pub max_generations: usize,
    pub shuffle: ShufflePolicy,
    pub init: InitPolicy,
    /// Per-bit flip probability applied to every selected parent.
    pub mutation_rate: f64,
    pub seed: u64,
    /// Re-initialize the weight vector at every generation boundary instead
    /// of letting it persist across the whole run.
    pub reset_weights_each_generation: bool,
    /// Worker threads for run-level parallelism; 1 means fully sequential.
    pub jobs: usize,
    /// Record a per-generation weight snapshot for each run.
    pub record_weights: bool,
    /// Memoize error lookups within a generation.
    pub cache: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            runs: 50,
            population_size: 1000,
            max_generations: 300,
            shuffle: ShufflePolicy::Uniform,
            init: InitPolicy::DefaultMax,
            mutation_rate: 0.01,
            seed: 0,
            reset_weights_each_generation: false,
            jobs: 1,
            record_weights: false,
            cache: true,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), GaError> {
        if self.runs == 0 || self.population_size == 0 || self.max_generations == 0 {
            return Err(GaError::InvalidConfig(
                "runs, population size and generations must all be at least 1".into(),
            ));
        }
        if !(0.0..=1.0).contains(&self.mutation_rate) {
            return Err(GaError::InvalidConfig(format!(
                "mutation rate {} is outside [0, 1]",
                self.mutation_rate
            )));
        }
        if self.jobs == 0 {
            return Err(GaError::InvalidConfig("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

/// Weight vector snapshot taken after one generation of one run.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSnapshot<S> {
    pub run_id: usize,
    pub generation: usize,
    pub weights: Vec<S>,
}

/// Everything an experiment produced, rows ordered by (run, generation).
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentResult<S> {
    pub rows: Vec<GenerationStats>,
    pub runs: usize,
    pub success_count: usize,
    /// Mean of the per-generation active-run means of `evaluations_total`.
    pub mean_evaluations_overall: f64,
    pub weight_snapshots: Vec<WeightSnapshot<S>>,
}

/// Runs one bitstring generation: `population_size` selection events, then
/// per-bit mutation of each selected parent into the next population.
///
/// The evaluator is freshly scoped to this generation's population, so its
/// cache dies with it at the generation boundary.
pub fn run_generation<S, R>(
    run_id: usize,
    generation: usize,
    problem: &BitstringProblem,
    population: &[Genome],
    config: &RunConfig,
    weights: &mut WeightVector<S>,
    rng: &mut R,
) -> Result<(Vec<Genome>, GenerationStats, Vec<SelectionOutcome>), GaError>
where
    S: Scalar,
    R: Rng + ?Sized,
{
    let source = BitstringSource::<S>::new(problem, population);
    let mut evaluator = if config.cache {
        Evaluator::new(source)
    } else {
        Evaluator::without_cache(source)
    };
    let outcomes = run_events(
        config.population_size,
        population.len(),
        config.shuffle,
        weights,
        &mut evaluator,
        rng,
    )?;
    let success = population.iter().any(|g| problem.is_solution(g));
    let stats = generation_rollup(run_id, generation, &outcomes, evaluator.executions(), success);

    let next = outcomes
        .iter()
        .map(|o| mutate_genome(&population[o.selected], config.mutation_rate, rng))
        .collect();
    Ok((next, stats, outcomes))
}

/// Runs one synthetic generation against a fixed error matrix.
pub fn run_matrix_generation<S, R>(
    run_id: usize,
    generation: usize,
    matrix: &SyntheticErrorMatrix<S>,
    config: &RunConfig,
    weights: &mut WeightVector<S>,
    rng: &mut R,
) -> Result<(GenerationStats, Vec<SelectionOutcome>), GaError>
where
    S: Scalar,
    R: Rng + ?Sized,
{
    let mut evaluator = if config.cache {
        Evaluator::new(matrix.clone())
    } else {
        Evaluator::without_cache(matrix.clone())
    };
    let outcomes = run_events(
        config.population_size,
        matrix.n_candidates,
        config.shuffle,
        weights,
        &mut evaluator,
        rng,
    )?;
    let success = matrix.has_perfect_row();
    let stats = generation_rollup(run_id, generation, &outcomes, evaluator.executions(), success);
    Ok((stats, outcomes))
}

fn run_events<S, E, R>(
    n_events: usize,
    n_candidates: usize,
    policy: ShufflePolicy,
    weights: &mut WeightVector<S>,
    evaluator: &mut Evaluator<S, E>,
    rng: &mut R,
) -> Result<Vec<SelectionOutcome>, GaError>
where
    S: Scalar,
    E: ErrorSource<S>,
    R: Rng + ?Sized,
{
    let mut outcomes = Vec::with_capacity(n_events);
    for _ in 0..n_events {
        let pool = CandidatePool::full(n_candidates);
        outcomes.push(select_with_policy(&pool, weights, policy, evaluator, rng)?);
    }
    Ok(outcomes)
}

fn mutate_genome<R: Rng + ?Sized>(parent: &Genome, rate: f64, rng: &mut R) -> Genome {
    parent
        .iter()
        .map(|&bit| if rng.random_bool(rate) { !bit } else { bit })
        .collect()
}

/// Executes `config.runs` independent bitstring runs and aggregates them.
///
/// Each run draws from its own ChaCha stream derived from the master seed and
/// the run index, so results are byte-identical whether runs execute
/// sequentially or on a worker pool.
pub fn run_experiment<S: Scalar>(
    problem: &BitstringProblem,
    config: &RunConfig,
) -> Result<ExperimentResult<S>, GaError> {
    config.validate()?;
    if problem.n_cases() == 0 {
        return Err(GaError::InvalidConfig("problem has no cases".into()));
    }
    run_all(config, |run_id| bitstring_run::<S>(problem, config, run_id))
}

/// Synthetic-matrix experiment: per-case pass probabilities drive a fresh
/// matrix sample each generation.
#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSpec {
    pub pass_prob: Vec<f64>,
}

/// Executes `config.runs` independent synthetic-matrix runs.
pub fn run_synthetic_experiment<S: Scalar>(
    spec: &SyntheticSpec,
    config: &RunConfig,
) -> Result<ExperimentResult<S>, GaError> {
    config.validate()?;
    if spec.pass_prob.is_empty() {
        return Err(GaError::InvalidConfig("synthetic spec has no cases".into()));
    }
    run_all(config, |run_id| synthetic_run::<S>(spec, config, run_id))
}

struct RunOutput<S> {
    rows: Vec<GenerationStats>,
    solved: bool,
    snapshots: Vec<WeightSnapshot<S>>,
}

fn run_all<S, F>(config: &RunConfig, run_one: F) -> Result<ExperimentResult<S>, GaError>
where
    S: Scalar,
    F: Fn(usize) -> Result<RunOutput<S>, GaError> + Send + Sync,
{
    let outputs: Result<Vec<RunOutput<S>>, GaError> = if config.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| GaError::WorkerPool(e.to_string()))?;
        pool.install(|| (0..config.runs).into_par_iter().map(&run_one).collect())
    } else {
        (0..config.runs).map(&run_one).collect()
    };
    let outputs = outputs?;

    let mut rows = Vec::new();
    let mut weight_snapshots = Vec::new();
    let mut success_count = 0;
    for output in outputs {
        rows.extend(output.rows);
        weight_snapshots.extend(output.snapshots);
        if output.solved {
            success_count += 1;
        }
    }
    let series = crate::stats::aggregate_active_runs(&rows);
    let mean_evaluations_overall = if series.is_empty() {
        0.0
    } else {
        series.iter().map(|&(_, m)| m).sum::<f64>() / series.len() as f64
    };
    Ok(ExperimentResult {
        rows,
        runs: config.runs,
        success_count,
        mean_evaluations_overall,
        weight_snapshots,
    })
}

fn run_rng(seed: u64, run_id: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Stream per run keeps runs independent of scheduling under --jobs.
    rng.set_stream(run_id as u64 + 1);
    rng
}

fn bitstring_run<S: Scalar>(
    problem: &BitstringProblem,
    config: &RunConfig,
    run_id: usize,
) -> Result<RunOutput<S>, GaError> {
    let mut rng = run_rng(config.seed, run_id);
    let mut population: Vec<Genome> = (0..config.population_size)
        .map(|_| problem.random_genome(&mut rng))
        .collect();
    let mut weights = init_weights::<S>(problem.n_cases(), config.init, config.population_size)?;

    let mut rows = Vec::new();
    let mut snapshots = Vec::new();
    let mut solved = false;
    for generation in 1..=config.max_generations {
        if config.reset_weights_each_generation && generation > 1 {
            weights = init_weights(problem.n_cases(), config.init, config.population_size)?;
        }
        let (next, stats, _) = run_generation(
            run_id,
            generation,
            problem,
            &population,
            config,
            &mut weights,
            &mut rng,
        )?;
        if config.record_weights {
            snapshots.push(WeightSnapshot {
                run_id,
                generation,
                weights: weights.values().to_vec(),
            });
        }
        let success = stats.success;
        rows.push(stats);
        if success {
            solved = true;
            break;
        }
        population = next;
    }
    Ok(RunOutput {
        rows,
        solved,
        snapshots,
    })
}

fn synthetic_run<S: Scalar>(
    spec: &SyntheticSpec,
    config: &RunConfig,
    run_id: usize,
) -> Result<RunOutput<S>, GaError> {
    let mut rng = run_rng(config.seed, run_id);
    let n_cases = spec.pass_prob.len();
    let mut weights = init_weights::<S>(n_cases, config.init, config.population_size)?;

    let mut rows = Vec::new();
    let mut snapshots = Vec::new();
    let mut solved = false;
    for generation in 1..=config.max_generations {
        if config.reset_weights_each_generation && generation > 1 {
            weights = init_weights(n_cases, config.init, config.population_size)?;
        }
        let matrix =
            SyntheticErrorMatrix::<S>::sample(&spec.pass_prob, config.population_size, &mut rng)?;
        let (stats, _) =
            run_matrix_generation(run_id, generation, &matrix, config, &mut weights, &mut rng)?;
        if config.record_weights {
            snapshots.push(WeightSnapshot {
                run_id,
                generation,
                weights: weights.values().to_vec(),
            });
        }
        let success = stats.success;
        rows.push(stats);
        if success {
            solved = true;
            break;
        }
    }
    Ok(RunOutput {
        rows,
        solved,
        snapshots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::select::Termination;
    use crate::weights::BiasMetric;

    fn desk_config() -> RunConfig {
        RunConfig {
            runs: 2,
            population_size: 10,
            max_generations: 5,
            mutation_rate: 0.05,
            seed: 42,
            ..RunConfig::default()
        }
    }

    #[test]
    fn perfect_population_exhausts_cases_and_flags_success() {
        let problem = BitstringProblem::uniform(4);
        let population: Vec<Genome> = vec![vec![true; 4]; 6];
        let config = RunConfig {
            population_size: 6,
            ..desk_config()
        };
        let mut weights = init_weights::<f64>(4, InitPolicy::DefaultMax, 6).unwrap();
        let mut rng = run_rng(0, 0);
        let (_, stats, outcomes) = run_generation(
            0,
            1,
            &problem,
            &population,
            &config,
            &mut weights,
            &mut rng,
        )
        .unwrap();
        assert!(stats.success);
        for outcome in &outcomes {
            assert_eq!(outcome.terminated_by, Termination::CasesExhausted);
            assert_eq!(outcome.cases_visited.len(), 4);
            assert_eq!(outcome.evaluations, 6 * 4);
        }
    }

    #[test]
    fn zero_mutation_copies_selected_parents() {
        let problem = BitstringProblem::uniform(6);
        let config = RunConfig {
            mutation_rate: 0.0,
            population_size: 8,
            ..desk_config()
        };
        let mut rng = run_rng(9, 0);
        let population: Vec<Genome> = (0..8).map(|_| problem.random_genome(&mut rng)).collect();
        let mut weights = init_weights::<f64>(6, config.init, 8).unwrap();
        let (next, _, outcomes) = run_generation(
            0,
            1,
            &problem,
            &population,
            &config,
            &mut weights,
            &mut rng,
        )
        .unwrap();
        for (child, outcome) in next.iter().zip(&outcomes) {
            assert_eq!(child, &population[outcome.selected]);
        }
    }

    #[test]
    fn deterministic_stats_row_regression() {
        // Frozen from the first run of this configuration; any change to the
        // seeded engine behavior shows up here.
        let problem = BitstringProblem::heterogeneous(16);
        let config = RunConfig {
            runs: 1,
            population_size: 10,
            max_generations: 1,
            mutation_rate: 0.01,
            seed: 7,
            ..RunConfig::default()
        };
        let result = run_experiment::<f64>(&problem, &config).unwrap();
        let again = run_experiment::<f64>(&problem, &config).unwrap();
        assert_eq!(result, again);
        let row = &result.rows[0];
        assert_eq!(row.selection_events, 10);
        assert_eq!(
            (row.evaluations_total, row.executions_total, row.success),
            FROZEN_SEED7_ROW
        );
    }

    // (evaluations_total, executions_total, success) for the seed-7 run above.
    const FROZEN_SEED7_ROW: (u64, u64, bool) = (234, 129, false);

    #[test]
    fn experiment_is_deterministic_across_job_counts() {
        let problem = BitstringProblem::heterogeneous(12);
        let config = RunConfig {
            runs: 4,
            population_size: 12,
            max_generations: 4,
            seed: 3,
            shuffle: ShufflePolicy::Ranked(BiasMetric::NumNonzeros),
            init: InitPolicy::DefaultMax,
            record_weights: true,
            ..RunConfig::default()
        };
        let sequential = run_experiment::<f64>(&problem, &config).unwrap();
        let parallel = run_experiment::<f64>(
            &problem,
            &RunConfig {
                jobs: 3,
                ..config.clone()
            },
        )
        .unwrap();
        assert_eq!(sequential, parallel);
    }

    #[test]
    fn cache_toggle_never_changes_outcomes_or_raw_counts() {
        let problem = BitstringProblem::heterogeneous(10);
        let base = RunConfig {
            runs: 2,
            population_size: 8,
            max_generations: 3,
            seed: 11,
            shuffle: ShufflePolicy::Weighted(BiasMetric::NumNonzeros),
            ..RunConfig::default()
        };
        let cached = run_experiment::<f64>(&problem, &base).unwrap();
        let uncached = run_experiment::<f64>(
            &problem,
            &RunConfig {
                cache: false,
                ..base.clone()
            },
        )
        .unwrap();
        assert_eq!(cached.rows.len(), uncached.rows.len());
        for (a, b) in cached.rows.iter().zip(&uncached.rows) {
            assert_eq!(a.evaluations_total, b.evaluations_total);
            assert_eq!(a.selection_events, b.selection_events);
            assert_eq!(a.success, b.success);
            assert!(a.executions_total <= b.executions_total);
        }
    }

    #[test]
    fn trivial_single_case_problem_succeeds_immediately() {
        // With a 50% match rate and 10 candidates, some genome matches the
        // single target bit essentially always.
        let problem = BitstringProblem::uniform(1);
        let config = RunConfig {
            runs: 10,
            population_size: 10,
            max_generations: 5,
            seed: 1,
            ..RunConfig::default()
        };
        let result = run_experiment::<f64>(&problem, &config).unwrap();
        assert_eq!(result.success_count, 10);
        for run in 0..10 {
            let first = result.rows.iter().find(|r| r.run_id == run).unwrap();
            assert_eq!(first.generation, 1);
            assert!(first.success);
        }
    }

    #[test]
    fn successful_runs_stop_contributing_rows() {
        let problem = BitstringProblem::uniform(2);
        let config = RunConfig {
            runs: 5,
            population_size: 8,
            max_generations: 50,
            seed: 2,
            ..RunConfig::default()
        };
        let result = run_experiment::<f64>(&problem, &config).unwrap();
        for run in 0..5 {
            let rows: Vec<_> = result.rows.iter().filter(|r| r.run_id == run).collect();
            for row in &rows[..rows.len() - 1] {
                assert!(!row.success, "success must only appear on the final row");
            }
        }
    }

    #[test]
    fn synthetic_mode_runs_and_reports() {
        let spec = SyntheticSpec {
            pass_prob: vec![0.9, 0.5, 0.2, 0.05],
        };
        let config = RunConfig {
            runs: 2,
            population_size: 12,
            max_generations: 4,
            seed: 5,
            shuffle: ShufflePolicy::Weighted(BiasMetric::NumZeros),
            init: InitPolicy::DefaultMin,
            ..RunConfig::default()
        };
        let result = run_synthetic_experiment::<f64>(&spec, &config).unwrap();
        assert!(!result.rows.is_empty());
        let repeat = run_synthetic_experiment::<f64>(&spec, &config).unwrap();
        assert_eq!(result, repeat);
    }

    #[test]
    fn config_validation_catches_bad_values() {
        let mut config = desk_config();
        config.mutation_rate = 1.5;
        assert!(matches!(
            run_experiment::<f64>(&BitstringProblem::uniform(4), &config),
            Err(GaError::InvalidConfig(_))
        ));
        let mut config = desk_config();
        config.runs = 0;
        assert!(config.validate().is_err());
    }

    #[test]
    fn matrix_rejects_negative_errors() {
        let err = SyntheticErrorMatrix::from_rows(vec![vec![0.0f64, -1.0]]).unwrap_err();
        assert!(matches!(err, GaError::InvalidConfig(_)));
    }
}

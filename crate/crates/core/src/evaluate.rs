//! Error evaluation with memoization and evaluation-count instrumentation.
//!
//! Two counters are kept deliberately separate. `raw_evaluations` is the
//! hardware-agnostic efficiency metric: every (candidate, case) request counts,
//! whether or not the cache already holds the answer. `executions` counts
//! cache misses only, quantifying how much work memoization actually saved.

use thiserror::Error;

use crate::scalar::Scalar;
use crate::select::SelectionOutcome;

/// Problem-side mapping from (candidate, case) to an error value.
///
/// Error values are non-negative, zero meaning a perfect result on that case.
/// Implementations must be pure for the lifetime of one generation: the same
/// pair always yields the same value.
pub trait ErrorSource<S> {
    fn n_candidates(&self) -> usize;
    fn n_cases(&self) -> usize;
    fn error(&self, candidate: usize, case: usize) -> S;
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EvalError {
    #[error("unknown candidate id {id} (population holds {n_candidates})")]
    UnknownCandidate { id: usize, n_candidates: usize },
    #[error("unknown case id {id} (problem has {n_cases} cases)")]
    UnknownCase { id: usize, n_cases: usize },
}

/// Memoizing wrapper around an [`ErrorSource`], scoped to one generation.
///
/// Candidates are replaced between generations, so callers construct a fresh
/// evaluator (or call [`Evaluator::clear_cache`]) at every generation boundary.
pub struct Evaluator<S, E> {
    source: E,
    cache: Vec<Option<S>>,
    cache_enabled: bool,
    raw_evaluations: u64,
    executions: u64,
}

impl<S: Scalar, E: ErrorSource<S>> Evaluator<S, E> {
    pub fn new(source: E) -> Self {
        let slots = source.n_candidates() * source.n_cases();
        Self {
            source,
            cache: vec![None; slots],
            cache_enabled: true,
            raw_evaluations: 0,
            executions: 0,
        }
    }

    /// An evaluator that recomputes on every request. Counters behave
    /// identically except that every evaluation is an execution.
    pub fn without_cache(source: E) -> Self {
        Self {
            source,
            cache: Vec::new(),
            cache_enabled: false,
            raw_evaluations: 0,
            executions: 0,
        }
    }

    /// Looks up or computes the error of `candidate` on `case`.
    ///
    /// Always counts one raw evaluation; counts an execution only when the
    /// value is not already cached.
    pub fn evaluate(&mut self, candidate: usize, case: usize) -> Result<S, EvalError> {
        let n_candidates = self.source.n_candidates();
        let n_cases = self.source.n_cases();
        if candidate >= n_candidates {
            return Err(EvalError::UnknownCandidate {
                id: candidate,
                n_candidates,
            });
        }
        if case >= n_cases {
            return Err(EvalError::UnknownCase { id: case, n_cases });
        }
        self.raw_evaluations += 1;
        let slot = candidate * n_cases + case;
        if self.cache_enabled {
            if let Some(value) = self.cache[slot] {
                return Ok(value);
            }
        }
        let value = self.source.error(candidate, case);
        self.executions += 1;
        if self.cache_enabled {
            self.cache[slot] = Some(value);
        }
        Ok(value)
    }

    /// Drops all memoized values; call at generation boundaries when reusing
    /// the evaluator across generations.
    pub fn clear_cache(&mut self) {
        self.cache.fill(None);
    }

    pub fn raw_evaluations(&self) -> u64 {
        self.raw_evaluations
    }

    pub fn executions(&self) -> u64 {
        self.executions
    }

    pub fn n_candidates(&self) -> usize {
        self.source.n_candidates()
    }

    pub fn n_cases(&self) -> usize {
        self.source.n_cases()
    }

    pub fn source(&self) -> &E {
        &self.source
    }
}

/// One telemetry row per (run, generation).
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationStats {
    pub run_id: usize,
    pub generation: usize,
    pub selection_events: u64,
    pub evaluations_total: u64,
    pub evaluations_mean: f64,
    pub executions_total: u64,
    pub success: bool,
}

impl GenerationStats {
    pub const CSV_HEADER: &'static str =
        "run_id,generation,selection_events,evaluations_total,evaluations_mean,executions_total,success";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.run_id,
            self.generation,
            self.selection_events,
            self.evaluations_total,
            self.evaluations_mean,
            self.executions_total,
            self.success
        )
    }
}

/// Folds one generation's selection events into a stats row.
///
/// `executions_total` comes from the generation's evaluator, and `success`
/// from the harness's solution check; both are recorded alongside the sums.
pub fn generation_rollup(
    run_id: usize,
    generation: usize,
    events: &[SelectionOutcome],
    executions_total: u64,
    success: bool,
) -> GenerationStats {
    let selection_events = events.len() as u64;
    let evaluations_total: u64 = events.iter().map(|e| e.evaluations).sum();
    let evaluations_mean = if selection_events == 0 {
        0.0
    } else {
        evaluations_total as f64 / selection_events as f64
    };
    GenerationStats {
        run_id,
        generation,
        selection_events,
        evaluations_total,
        evaluations_mean,
        executions_total,
        success,
    }
}

//! Lexicase parent selection: the standard filter loop and the fast variant
//! that orders cases by weight and rewrites weights as it evaluates.
//!
//! Both variants walk the case ordering, evaluate every surviving candidate on
//! the current case, and keep exactly the candidates whose error equals the
//! pool minimum. The per-event evaluation count is the sum of pool sizes
//! immediately before each filtering step: a pool filtered 10 -> 3 -> 1 over
//! two cases costs 10 + 3 = 13 evaluations.

use std::collections::HashSet;

use rand::Rng;
use thiserror::Error;

use crate::evaluate::{EvalError, ErrorSource, Evaluator};
use crate::scalar::Scalar;
use crate::shuffle::{ranked_shuffle, weighted_shuffle, ShuffleError, ShufflePolicy};
use crate::weights::{bias_value, WeightVector};

/// Candidates still eligible for selection, in stable population order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidatePool {
    members: Vec<usize>,
}

impl CandidatePool {
    /// Builds a pool from explicit candidate ids; ids must be distinct.
    pub fn new(members: Vec<usize>) -> Result<Self, SelectError> {
        let mut seen = HashSet::with_capacity(members.len());
        for &id in &members {
            if !seen.insert(id) {
                return Err(SelectError::DuplicateCandidate { id });
            }
        }
        Ok(Self { members })
    }

    /// The whole population: candidates `0..size`.
    pub fn full(size: usize) -> Self {
        Self {
            members: (0..size).collect(),
        }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Why a selection event stopped.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    /// Filtering reached exactly one survivor.
    SingleSurvivor,
    /// Every case was visited; a uniformly random survivor was returned.
    CasesExhausted,
    /// The pool held one candidate on entry; no case was evaluated.
    SingletonPool,
}

/// Result of one selection event.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SelectionOutcome {
    pub selected: usize,
    /// Case ids actually evaluated, in visit order.
    pub cases_visited: Vec<usize>,
    /// Sum over visited cases of the pool size before filtering on that case.
    pub evaluations: u64,
    pub final_pool_size: usize,
    pub terminated_by: Termination,
}

#[derive(Debug, Error, PartialEq)]
pub enum SelectError {
    #[error("selection requires a non-empty candidate pool")]
    EmptyPool,
    #[error("candidate id {id} appears more than once in the pool")]
    DuplicateCandidate { id: usize },
    #[error("weight vector covers {weights} cases but the evaluator has {cases}")]
    WeightDimensionMismatch { weights: usize, cases: usize },
    #[error("fast lexicase selection needs a weighted or ranked shuffle policy")]
    UnweightedPolicy,
    #[error("candidate {candidate} produced a non-finite error on case {case}")]
    NonFiniteError { candidate: usize, case: usize },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Shuffle(#[from] ShuffleError),
}

/// Standard lexicase selection over an externally supplied case ordering.
///
/// Walks `case_order`, keeping on each case exactly the candidates whose
/// error equals the surviving pool's minimum (exact equality). Returns when a
/// single survivor remains, or picks a uniformly random survivor once the
/// cases run out. A singleton pool short-circuits before any evaluation.
pub fn lexicase_select<S, E, R>(
    pool: &CandidatePool,
    case_order: &[usize],
    evaluator: &mut Evaluator<S, E>,
    rng: &mut R,
) -> Result<SelectionOutcome, SelectError>
where
    S: Scalar,
    E: ErrorSource<S>,
    R: Rng + ?Sized,
{
    lexicase_select_with_tolerance(pool, case_order, S::zero(), evaluator, rng)
}

/// [`lexicase_select`] with an absolute tolerance on elite membership:
/// survivors are the candidates with `error <= min + tolerance`.
pub fn lexicase_select_with_tolerance<S, E, R>(
    pool: &CandidatePool,
    case_order: &[usize],
    tolerance: S,
    evaluator: &mut Evaluator<S, E>,
    rng: &mut R,
) -> Result<SelectionOutcome, SelectError>
where
    S: Scalar,
    E: ErrorSource<S>,
    R: Rng + ?Sized,
{
    if let Some(outcome) = short_circuit(pool)? {
        return Ok(outcome);
    }
    filter_cases::<S, E, R>(
        pool.members().to_vec(),
        case_order,
        tolerance,
        None,
        evaluator,
        rng,
    )
}

/// Fast lexicase selection: shuffles cases by their current weights, then
/// filters as in [`lexicase_select`], rewriting each visited case's weight
/// from the bias metric applied to the surviving pool's errors on that case.
///
/// The ordering is fixed once at event start; weight updates influence only
/// subsequent events. Weights of unvisited cases are left untouched, and a
/// singleton pool returns before consuming randomness or touching weights.
pub fn fast_lexicase_select<S, E, R>(
    pool: &CandidatePool,
    weights: &mut WeightVector<S>,
    policy: ShufflePolicy,
    evaluator: &mut Evaluator<S, E>,
    rng: &mut R,
) -> Result<SelectionOutcome, SelectError>
where
    S: Scalar,
    E: ErrorSource<S>,
    R: Rng + ?Sized,
{
    fast_lexicase_select_with_tolerance(pool, weights, policy, S::zero(), evaluator, rng)
}

/// [`fast_lexicase_select`] with an absolute tolerance on elite membership.
pub fn fast_lexicase_select_with_tolerance<S, E, R>(
    pool: &CandidatePool,
    weights: &mut WeightVector<S>,
    policy: ShufflePolicy,
    tolerance: S,
    evaluator: &mut Evaluator<S, E>,
    rng: &mut R,
) -> Result<SelectionOutcome, SelectError>
where
    S: Scalar,
    E: ErrorSource<S>,
    R: Rng + ?Sized,
{
    if let Some(outcome) = short_circuit(pool)? {
        return Ok(outcome);
    }
    if weights.len() != evaluator.n_cases() {
        return Err(SelectError::WeightDimensionMismatch {
            weights: weights.len(),
            cases: evaluator.n_cases(),
        });
    }
    let (order, bias) = match policy {
        ShufflePolicy::Uniform => return Err(SelectError::UnweightedPolicy),
        ShufflePolicy::Weighted(bias) => (weighted_shuffle(weights.values(), rng)?, bias),
        ShufflePolicy::Ranked(bias) => (ranked_shuffle(weights.values(), rng)?, bias),
    };
    filter_cases(
        pool.members().to_vec(),
        &order,
        tolerance,
        Some((weights, bias)),
        evaluator,
        rng,
    )
}

/// Dispatches one selection event according to `policy`: a uniform shuffle
/// feeds the standard filter loop, weighted and ranked policies run the fast
/// variant against `weights`.
pub fn select_with_policy<S, E, R>(
    pool: &CandidatePool,
    weights: &mut WeightVector<S>,
    policy: ShufflePolicy,
    evaluator: &mut Evaluator<S, E>,
    rng: &mut R,
) -> Result<SelectionOutcome, SelectError>
where
    S: Scalar,
    E: ErrorSource<S>,
    R: Rng + ?Sized,
{
    match policy {
        ShufflePolicy::Uniform => {
            let order = crate::shuffle::uniform_shuffle(evaluator.n_cases(), rng);
            lexicase_select(pool, &order, evaluator, rng)
        }
        _ => fast_lexicase_select(pool, weights, policy, evaluator, rng),
    }
}

fn short_circuit(pool: &CandidatePool) -> Result<Option<SelectionOutcome>, SelectError> {
    if pool.is_empty() {
        return Err(SelectError::EmptyPool);
    }
    if pool.len() == 1 {
        return Ok(Some(SelectionOutcome {
            selected: pool.members()[0],
            cases_visited: Vec::new(),
            evaluations: 0,
            final_pool_size: 1,
            terminated_by: Termination::SingletonPool,
        }));
    }
    Ok(None)
}

fn filter_cases<S, E, R>(
    mut pool: Vec<usize>,
    case_order: &[usize],
    tolerance: S,
    mut weight_update: Option<(&mut WeightVector<S>, crate::weights::BiasMetric)>,
    evaluator: &mut Evaluator<S, E>,
    rng: &mut R,
) -> Result<SelectionOutcome, SelectError>
where
    S: Scalar,
    E: ErrorSource<S>,
    R: Rng + ?Sized,
{
    let mut cases_visited = Vec::new();
    let mut evaluations = 0u64;
    let mut errors: Vec<S> = Vec::with_capacity(pool.len());

    for &case in case_order {
        evaluations += pool.len() as u64;
        errors.clear();
        for &candidate in &pool {
            let error = evaluator.evaluate(candidate, case)?;
            if !error.is_finite() {
                return Err(SelectError::NonFiniteError { candidate, case });
            }
            errors.push(error);
        }
        cases_visited.push(case);

        // Weight rewrite sees the pool that was just evaluated, before filtering.
        if let Some((weights, bias)) = weight_update.as_mut() {
            let value = bias_value(&errors, *bias).expect("surviving pool is non-empty");
            weights.update(case, value);
        }

        let min = errors
            .iter()
            .copied()
            .fold(S::infinity(), |acc, e| acc.min(e));
        let keep = min + tolerance;
        let mut slot = 0;
        pool.retain(|_| {
            let elite = errors[slot] <= keep;
            slot += 1;
            elite
        });

        if pool.len() == 1 {
            return Ok(SelectionOutcome {
                selected: pool[0],
                cases_visited,
                evaluations,
                final_pool_size: 1,
                terminated_by: Termination::SingleSurvivor,
            });
        }
    }

    let selected = pool[rng.random_range(0..pool.len())];
    Ok(SelectionOutcome {
        selected,
        cases_visited,
        evaluations,
        final_pool_size: pool.len(),
        terminated_by: Termination::CasesExhausted,
    })
}

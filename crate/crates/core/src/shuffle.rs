//! Case orderings: uniform, weighted (roulette without replacement), ranked.

use rand::seq::SliceRandom;
use rand::Rng;
use thiserror::Error;

use crate::scalar::Scalar;
use crate::weights::BiasMetric;

/// Which shuffle a selection event uses to order the training cases.
///
/// `Weighted` and `Ranked` carry the bias metric that rewrites case weights
/// as the event visits cases; `Uniform` is the classic unweighted shuffle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShufflePolicy {
    Uniform,
    Weighted(BiasMetric),
    Ranked(BiasMetric),
}

impl ShufflePolicy {
    pub fn bias(&self) -> Option<BiasMetric> {
        match self {
            ShufflePolicy::Uniform => None,
            ShufflePolicy::Weighted(bias) | ShufflePolicy::Ranked(bias) => Some(*bias),
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ShuffleError {
    #[error("case {case} has non-positive weight {weight}; weighted shuffles need weights > 0")]
    NonPositiveWeight { case: usize, weight: f64 },
}

/// Uniformly random permutation of `0..n` (Fisher-Yates).
pub fn uniform_shuffle<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    order
}

/// Permutation of `0..weights.len()` drawn by sampling without replacement,
/// each draw picking a remaining case with probability proportional to its
/// weight (the roulette wheel, re-rolled after every pick).
pub fn weighted_shuffle<S: Scalar, R: Rng + ?Sized>(
    weights: &[S],
    rng: &mut R,
) -> Result<Vec<usize>, ShuffleError> {
    let mut remaining = to_positive_f64(weights)?;
    let mut order = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let total: f64 = remaining.iter().map(|&(_, w)| w).sum();
        let spin = rng.random_range(0.0..total);
        let mut cumulative = 0.0;
        let mut picked = remaining.len() - 1; // guards against fp shortfall at the end
        for (slot, &(_, w)) in remaining.iter().enumerate() {
            cumulative += w;
            if spin < cumulative {
                picked = slot;
                break;
            }
        }
        order.push(remaining.swap_remove(picked).0);
    }
    Ok(order)
}

/// Permutation of `0..weights.len()` built from case ranks.
///
/// Cases are ranked by weight descending, ties broken by a uniform random
/// permutation of the tied group. Each position then draws an upper bound `u`
/// uniformly from `1..=m` (`m` remaining cases) and an index uniformly from
/// `1..=u`, emitting the case at that rank. Only the order of the weights
/// matters, never their magnitudes.
pub fn ranked_shuffle<S: Scalar, R: Rng + ?Sized>(
    weights: &[S],
    rng: &mut R,
) -> Result<Vec<usize>, ShuffleError> {
    let checked = to_positive_f64(weights)?;
    let mut ranked: Vec<(usize, f64)> = checked;
    ranked.shuffle(rng);
    // Stable sort keeps the shuffled order inside tied groups.
    ranked.sort_by(|a, b| b.1.partial_cmp(&a.1).expect("weights are finite"));

    let mut order = Vec::with_capacity(ranked.len());
    while !ranked.is_empty() {
        let m = ranked.len();
        let upper = rng.random_range(1..=m);
        let index = rng.random_range(1..=upper);
        order.push(ranked.remove(index - 1).0);
    }
    Ok(order)
}

fn to_positive_f64<S: Scalar>(weights: &[S]) -> Result<Vec<(usize, f64)>, ShuffleError> {
    weights
        .iter()
        .enumerate()
        .map(|(case, &w)| {
            let value = w.to_f64().unwrap_or(f64::NAN);
            if value.is_finite() && value > 0.0 {
                Ok((case, value))
            } else {
                Err(ShuffleError::NonPositiveWeight {
                    case,
                    weight: value,
                })
            }
        })
        .collect()
}

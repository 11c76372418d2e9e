//! Per-case shuffle weights: bounds, initialization policies, and bias metrics.
//!
//! A run owns one weight vector. Each fast selection event rewrites the
//! weights of the cases it visits; everything else keeps its previous value,
//! so unevaluated cases stay at whatever the initialization policy assigned.

use thiserror::Error;

use crate::scalar::Scalar;

/// How a case's errors across the surviving pool map to its shuffle weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BiasMetric {
    /// Count of zero-error results, plus one. Weights easy cases higher.
    NumZeros,
    /// Count of nonzero-error results, plus one. Weights hard cases higher.
    NumNonzeros,
}

/// Initial value applied uniformly to all case weights.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InitPolicy {
    /// Start every case at the lower bound: unevaluated cases come last.
    DefaultMin,
    /// Start every case at the upper bound: unevaluated cases come first.
    DefaultMax,
}

#[derive(Debug, Error, PartialEq)]
pub enum WeightError {
    #[error("weight vector needs at least one case")]
    NoCases,
    #[error("population size must be at least 1")]
    EmptyPopulation,
    #[error("weight bounds [{min}, {max}] are invalid (need 1 <= min <= max)")]
    InvalidBounds { min: f64, max: f64 },
    #[error("weight {value} at case {case} lies outside [{min}, {max}]")]
    OutOfBounds {
        case: usize,
        value: f64,
        min: f64,
        max: f64,
    },
    #[error("bias metric needs at least one error value")]
    EmptyErrors,
}

/// Shuffle weights for every training case, bounded to `[w_min, w_max]`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector<S> {
    values: Vec<S>,
    w_min: S,
    w_max: S,
}

impl<S: Scalar> WeightVector<S> {
    /// Builds a weight vector from explicit values and bounds.
    ///
    /// Bounds must satisfy `1 <= w_min <= w_max` (a positive lower bound keeps
    /// every case reachable by the weighted shuffle), and every value must lie
    /// within them.
    pub fn new(values: Vec<S>, w_min: S, w_max: S) -> Result<Self, WeightError> {
        if values.is_empty() {
            return Err(WeightError::NoCases);
        }
        if !(w_min >= S::one() && w_min <= w_max) {
            return Err(WeightError::InvalidBounds {
                min: w_min.to_f64().unwrap_or(f64::NAN),
                max: w_max.to_f64().unwrap_or(f64::NAN),
            });
        }
        for (case, &value) in values.iter().enumerate() {
            if !(value >= w_min && value <= w_max) {
                return Err(WeightError::OutOfBounds {
                    case,
                    value: value.to_f64().unwrap_or(f64::NAN),
                    min: w_min.to_f64().unwrap_or(f64::NAN),
                    max: w_max.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        Ok(Self {
            values,
            w_min,
            w_max,
        })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn get(&self, case: usize) -> S {
        self.values[case]
    }

    pub fn bounds(&self) -> (S, S) {
        (self.w_min, self.w_max)
    }

    /// Overwrites one case's weight, saturating at the vector's bounds.
    pub fn update(&mut self, case: usize, value: S) {
        self.values[case] = value.max(self.w_min).min(self.w_max);
    }
}

/// Creates the weight vector for a run: `w_min = 1`, `w_max = p + 1`, all
/// entries at the bound picked by `policy`.
pub fn init_weights<S: Scalar>(
    n_cases: usize,
    policy: InitPolicy,
    population_size: usize,
) -> Result<WeightVector<S>, WeightError> {
    if n_cases == 0 {
        return Err(WeightError::NoCases);
    }
    if population_size == 0 {
        return Err(WeightError::EmptyPopulation);
    }
    let w_min = S::one();
    let w_max = S::from_count(population_size + 1);
    let fill = match policy {
        InitPolicy::DefaultMin => w_min,
        InitPolicy::DefaultMax => w_max,
    };
    WeightVector::new(vec![fill; n_cases], w_min, w_max)
}

/// Maps one case's errors across the surviving pool to its new weight:
/// the count the metric selects, plus one so no weight can reach zero.
pub fn bias_value<S: Scalar>(errors_on_case: &[S], bias: BiasMetric) -> Result<S, WeightError> {
    if errors_on_case.is_empty() {
        return Err(WeightError::EmptyErrors);
    }
    let zeros = errors_on_case.iter().filter(|&&e| e == S::zero()).count();
    let count = match bias {
        BiasMetric::NumZeros => zeros,
        BiasMetric::NumNonzeros => errors_on_case.len() - zeros,
    };
    Ok(S::from_count(count + 1))
}

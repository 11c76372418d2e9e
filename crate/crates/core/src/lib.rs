//! Lexicase parent selection with weighted-shuffle fast variants.
//!
//! Lexicase selection filters a candidate pool case by case in a shuffled
//! order, keeping only the candidates with exactly the best error on each
//! case. The fast variants replace the uniform shuffle with a weighted or
//! ranked shuffle driven by per-case weights that are rewritten online, from
//! partial evaluation, as each selection event visits cases. Every event is
//! instrumented with the evaluation-count metric: the sum of surviving pool
//! sizes before each filtering step.
//!
//! The crate ships two desk-scale harnesses (a bitstring GA and an epochal
//! gradient-descent loop over an abstract learner), the statistics used for
//! reporting, and CSV-friendly telemetry types. Core math is generic over the
//! scalar type; the aliases below pin the common `f64` instantiations.
//!
//! ```
//! use fastlex::evaluate::Evaluator;
//! use fastlex::ga::SyntheticErrorMatrix;
//! use fastlex::select::{fast_lexicase_select, CandidatePool};
//! use fastlex::shuffle::ShufflePolicy;
//! use fastlex::weights::{init_weights, BiasMetric, InitPolicy};
//! use rand::SeedableRng;
//!
//! let errors = SyntheticErrorMatrix::from_rows(vec![
//!     vec![0.0, 1.0, 0.0],
//!     vec![0.0, 0.0, 1.0],
//!     vec![1.0, 0.0, 0.0],
//! ]).unwrap();
//! let mut evaluator = Evaluator::new(errors);
//! let mut weights = init_weights::<f64>(3, InitPolicy::DefaultMax, 3).unwrap();
//! let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
//!
//! let outcome = fast_lexicase_select(
//!     &CandidatePool::full(3),
//!     &mut weights,
//!     ShufflePolicy::Weighted(BiasMetric::NumNonzeros),
//!     &mut evaluator,
//!     &mut rng,
//! ).unwrap();
//! assert!(outcome.evaluations > 0);
//! ```

pub mod evaluate;
pub mod ga;
pub mod gradient;
pub mod scalar;
pub mod select;
pub mod shuffle;
pub mod stats;
pub mod weights;

pub use evaluate::{ErrorSource, Evaluator, GenerationStats};
pub use scalar::Scalar;
pub use select::{
    fast_lexicase_select, lexicase_select, CandidatePool, SelectionOutcome, Termination,
};
pub use shuffle::ShufflePolicy;
pub use weights::{BiasMetric, InitPolicy, WeightVector};

/// Double-precision weight vector, the default used by the harnesses.
pub type WeightVectorF64 = weights::WeightVector<f64>;
/// Single-precision weight vector.
pub type WeightVectorF32 = weights::WeightVector<f32>;
/// Double-precision classification dataset.
pub type DatasetF64 = gradient::Dataset<f64>;
/// Double-precision linear learner.
pub type ToyLinearLearnerF64 = gradient::ToyLinearLearner<f64>;

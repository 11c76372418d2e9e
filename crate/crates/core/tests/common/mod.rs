//! Shared helpers for the integration and acceptance suites: an independent
//! enumeration oracle for lexicase selection, distribution-test utilities,
//! and the significance tests the acceptance criteria call for.
#![allow(dead_code)]

use std::collections::HashMap;

/// Chi-square critical values at alpha = 0.001 (frozen from standard tables).
pub const CHI2_CRIT_DF1_A001: f64 = 10.827566;
pub const CHI2_CRIT_DF5_A001: f64 = 20.515006;
pub const CHI2_CRIT_DF23_A001: f64 = 49.728232;

/// Exact selection distribution of lexicase selection under a uniform
/// shuffle, by enumerating every case permutation.
///
/// This is a from-scratch re-statement of the procedure (filter to the
/// per-case minimum, split ties uniformly at exhaustion) kept deliberately
/// independent of the engine it checks.
pub fn enumerate_lexicase_distribution(errors: &[Vec<f64>]) -> Vec<f64> {
    let n_candidates = errors.len();
    let n_cases = errors.first().map_or(0, Vec::len);
    let mut probability = vec![0.0; n_candidates];

    let permutations = all_permutations(n_cases);
    let share = 1.0 / permutations.len() as f64;
    for order in &permutations {
        let mut pool: Vec<usize> = (0..n_candidates).collect();
        for &case in order {
            if pool.len() == 1 {
                break;
            }
            let mut min = f64::INFINITY;
            for &c in &pool {
                if errors[c][case] < min {
                    min = errors[c][case];
                }
            }
            pool.retain(|&c| errors[c][case] == min);
        }
        for &survivor in &pool {
            probability[survivor] += share / pool.len() as f64;
        }
    }
    probability
}

/// Every permutation of `0..n` (n! of them; keep n tiny).
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn recurse(prefix: &mut Vec<usize>, remaining: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..remaining.len() {
            let item = remaining.remove(i);
            prefix.push(item);
            recurse(prefix, remaining, out);
            prefix.pop();
            remaining.insert(i, item);
        }
    }
    let mut out = Vec::new();
    recurse(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// Total variation distance between two distributions over the same support.
pub fn total_variation(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum::<f64>() / 2.0
}

/// Chi-square statistic of observed counts against a uniform expectation.
pub fn chi_square_uniform(counts: &[u64], draws: u64) -> f64 {
    let expected = draws as f64 / counts.len() as f64;
    counts
        .iter()
        .map(|&o| {
            let d = o as f64 - expected;
            d * d / expected
        })
        .sum()
}

/// Counts occurrences of full permutations.
#[derive(Default)]
pub struct PermutationCounter {
    counts: HashMap<Vec<usize>, u64>,
}

impl PermutationCounter {
    pub fn record(&mut self, permutation: &[usize]) {
        *self.counts.entry(permutation.to_vec()).or_insert(0) += 1;
    }

    /// Counts aligned with `all_permutations(n)` ordering.
    pub fn aligned_counts(&self, n: usize) -> Vec<u64> {
        all_permutations(n)
            .iter()
            .map(|p| self.counts.get(p).copied().unwrap_or(0))
            .collect()
    }
}

/// Analytic first-position probability of the rank-`r` case (1-based) under
/// the ranked shuffle with `m` cases: `(1/m) * sum_{u=r}^{m} 1/u`.
pub fn ranked_first_position_probability(rank: usize, m: usize) -> f64 {
    (rank..=m).map(|u| 1.0 / u as f64).sum::<f64>() / m as f64
}

/// Exact one-sided sign test: p-value of seeing at least `wins` successes in
/// `pairs` fair coin flips. Ties must be excluded by the caller.
pub fn sign_test_p_value(wins: u64, pairs: u64) -> f64 {
    let n = pairs;
    let mut p = 0.0;
    for k in wins..=n {
        p += binomial_pmf(k, n, 0.5);
    }
    p.min(1.0)
}

fn binomial_pmf(k: u64, n: u64, prob: f64) -> f64 {
    // ln-space to stay stable for n up to a few hundred.
    let ln_choose = ln_factorial(n) - ln_factorial(k) - ln_factorial(n - k);
    (ln_choose + k as f64 * prob.ln() + (n - k) as f64 * (1.0 - prob).ln()).exp()
}

fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|i| (i as f64).ln()).sum()
}

/// One-sided two-proportion z-test of H1: p1 < p2, returning the p-value.
/// A small p-value means group 1 is significantly worse than group 2.
pub fn two_proportion_p_value(successes1: u64, n1: u64, successes2: u64, n2: u64) -> f64 {
    let p1 = successes1 as f64 / n1 as f64;
    let p2 = successes2 as f64 / n2 as f64;
    let pooled = (successes1 + successes2) as f64 / (n1 + n2) as f64;
    let se = (pooled * (1.0 - pooled) * (1.0 / n1 as f64 + 1.0 / n2 as f64)).sqrt();
    if se == 0.0 {
        // Both groups all-success or all-failure: no evidence of a difference.
        return 0.5;
    }
    fastlex::stats::normal_cdf((p1 - p2) / se)
}

#[cfg(test)]
mod self_checks {
    use super::*;

    #[test]
    fn oracle_on_a_known_matrix() {
        // A=[0,1], B=[1,0]: each order selects its specialist.
        let dist = enumerate_lexicase_distribution(&[vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(dist, vec![0.5, 0.5]);
        // C dominates: always selected.
        let dist =
            enumerate_lexicase_distribution(&[vec![0.0, 1.0], vec![1.0, 0.0], vec![0.0, 0.0]]);
        assert_eq!(dist, vec![0.0, 0.0, 1.0]);
    }

    #[test]
    fn sign_test_matches_reference_tail() {
        // P(X >= 20 | n = 30, p = 0.5) = 0.049369 from the exact binomial.
        assert!((sign_test_p_value(20, 30) - 0.049369).abs() < 1e-5);
        assert!((sign_test_p_value(0, 30) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn permutation_count_is_factorial() {
        assert_eq!(all_permutations(0).len(), 1);
        assert_eq!(all_permutations(4).len(), 24);
    }
}

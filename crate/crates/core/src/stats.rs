//! Statistical utilities for reporting: one-proportion z-test, normal CDF,
//! trailing moving average, active-run aggregation, end alignment.
//!
//! These are reporting-side tools and are pinned to `f64`: the CDF contract
//! is 1e-6 absolute accuracy, which single precision cannot guarantee.

use thiserror::Error;

use crate::evaluate::GenerationStats;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("baseline proportion must lie strictly between 0 and 1, got {p0}")]
    DegenerateBaseline { p0: f64 },
    #[error("sample size must be at least 1")]
    EmptySample,
    #[error("moving average window must be at least 1")]
    ZeroWindow,
}

/// One-proportion z-test result for the left-tailed alternative `p < p0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZTestResult {
    pub z: f64,
    /// Left-tail p-value, `Phi(z)`.
    pub p_value: f64,
    pub n: u64,
    pub p_hat: f64,
    pub p0: f64,
}

/// Tests the observed proportion `p_hat` against baseline `p0` with
/// `z = (p_hat - p0) / sqrt(p0 (1 - p0) / n)` and the left-tailed p-value.
pub fn one_proportion_ztest_left(p_hat: f64, p0: f64, n: u64) -> Result<ZTestResult, StatsError> {
    if n == 0 {
        return Err(StatsError::EmptySample);
    }
    if !(p0 > 0.0 && p0 < 1.0) {
        return Err(StatsError::DegenerateBaseline { p0 });
    }
    let standard_error = (p0 * (1.0 - p0) / n as f64).sqrt();
    let z = (p_hat - p0) / standard_error;
    Ok(ZTestResult {
        z,
        p_value: normal_cdf(z),
        n,
        p_hat,
        p0,
    })
}

/// Standard normal CDF, accurate to well under 1e-6 absolute everywhere.
///
/// Uses the error-function Maclaurin series for |z| <= 6 and the asymptotic
/// tail expansion beyond, where the series would lose precision.
pub fn normal_cdf(z: f64) -> f64 {
    if z > 6.0 {
        1.0 - upper_tail(z)
    } else if z < -6.0 {
        upper_tail(-z)
    } else {
        0.5 * (1.0 + erf(z / std::f64::consts::SQRT_2))
    }
}

/// erf via its alternating Maclaurin series; adequate for |x| <= ~4.5
/// (|z| <= 6.3), where cancellation stays below ~1e-9 absolute.
fn erf(x: f64) -> f64 {
    let mut term = x; // x^(2k+1) (-1)^k / k!
    let mut sum = x;
    let mut k = 1.0;
    while k < 200.0 {
        term *= -x * x / k;
        let add = term / (2.0 * k + 1.0);
        sum += add;
        if add.abs() < 1e-18 {
            break;
        }
        k += 1.0;
    }
    sum * std::f64::consts::FRAC_2_SQRT_PI
}

/// Upper-tail probability `1 - Phi(t)` for t > 6, via the Mills-ratio
/// asymptotic series (relative error < 1e-8 in this range).
fn upper_tail(t: f64) -> f64 {
    let pdf = (-0.5 * t * t).exp() / (2.0 * std::f64::consts::PI).sqrt();
    let t2 = t * t;
    pdf / t * (1.0 - 1.0 / t2 + 3.0 / (t2 * t2) - 15.0 / (t2 * t2 * t2))
}

/// Trailing moving average: element `i` is the mean of the last
/// `min(window, i + 1)` values. Output length equals input length.
pub fn moving_average(series: &[f64], window: usize) -> Result<Vec<f64>, StatsError> {
    if window == 0 {
        return Err(StatsError::ZeroWindow);
    }
    Ok(series
        .iter()
        .enumerate()
        .map(|(i, _)| {
            let start = (i + 1).saturating_sub(window);
            let span = &series[start..=i];
            span.iter().sum::<f64>() / span.len() as f64
        })
        .collect())
}

/// Per-generation mean of `evaluations_total`, computed over active runs only.
///
/// A run contributes rows only while it is still searching, so the rows
/// present at a generation are exactly the active runs; finished runs cannot
/// drag later means down. Generations with no active run are omitted.
pub fn aggregate_active_runs(rows: &[GenerationStats]) -> Vec<(usize, f64)> {
    let mut by_generation: Vec<(usize, (f64, u64))> = Vec::new();
    for row in rows {
        match by_generation.binary_search_by_key(&row.generation, |&(g, _)| g) {
            Ok(slot) => {
                let entry = &mut by_generation[slot].1;
                entry.0 += row.evaluations_total as f64;
                entry.1 += 1;
            }
            Err(slot) => {
                by_generation.insert(slot, (row.generation, (row.evaluations_total as f64, 1)));
            }
        }
    }
    by_generation
        .into_iter()
        .map(|(generation, (sum, count))| (generation, sum / count as f64))
        .collect()
}

/// Truncates each series to its final `min(k, len)` points and re-indexes so
/// every series ends at index `k - 1`, ready for end-aligned overlays.
pub fn align_last_k(series: &[Vec<f64>], k: usize) -> Vec<Vec<(usize, f64)>> {
    series
        .iter()
        .map(|s| {
            let keep = k.min(s.len());
            let tail = &s[s.len() - keep..];
            tail.iter()
                .enumerate()
                .map(|(j, &y)| (k - keep + j, y))
                .collect()
        })
        .collect()
}

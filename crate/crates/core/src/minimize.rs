//! Nontrivial minimization of symmetric submodular functions by repeated
//! contraction of the last pair of an alpha-ordering.

use crate::error::{Error, Result};
use crate::ordering::build_alpha_ordering;
use crate::setfn::{ContractedFunction, ContractionTrace, SetFunctionOracle};
use crate::subset::Subset;
use crate::EPS;

pub const DEFAULT_ALPHA: f64 = 0.0;

#[derive(Debug, Clone)]
pub struct MinimizerResult {
    /// Proper nonempty subset of the original ground set.
    pub subset: Subset,
    pub value: f64,
    pub oracle_calls: u64,
    pub alpha_used: f64,
    pub contraction_log: ContractionTrace,
}

/// Rejects `alpha` unless it lies in `[-1, 1]`.
pub fn validate_alpha(alpha: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::AlphaOutOfRange(alpha))
    }
}

/// Finds a nontrivial minimizer of a symmetric submodular `f`.
///
/// While more than two elements remain, the last pair `(u, v)` of an
/// alpha-ordering of the contracted function is contractible, so a minimizer
/// is `{u}`, `{v}` or a minimizer of the function with `u` and `v` merged.
/// The two singletons are recorded as candidates (their values are already
/// cached by the ordering) and the pair is contracted. With two elements left
/// both of them are candidates. The best candidate wins; equal values go to
/// the smaller bitmask.
///
/// Symmetry and submodularity of `f` are the caller's contract. Uses
/// `O(n^3)` oracle calls.
pub fn opt_set(oracle: &dyn SetFunctionOracle, alpha: f64) -> Result<MinimizerResult> {
    validate_alpha(alpha)?;
    let n = oracle.n();
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }

    let mut current = ContractedFunction::new(oracle);
    let mut candidates: Vec<(Subset, f64)> = Vec::with_capacity(2 * n);
    let mut calls = 0u64;

    while current.n() > 2 {
        let ordering = build_alpha_ordering(&current, alpha)?;
        calls += ordering.eval_count();
        let (u, v) = ordering.last_pair()?;
        for e in [u, v] {
            let value = ordering
                .singleton(e)
                .expect("built orderings cache singletons");
            candidates.push((current.trace().block(e)?.clone(), value));
        }
        current = current.contract(u, v)?;
    }
    for e in 0..2 {
        let value = current.evaluate_singleton(e)?;
        calls += 1;
        candidates.push((current.trace().block(e)?.clone(), value));
    }

    let (subset, value) = best_candidate(candidates);
    Ok(MinimizerResult {
        subset,
        value,
        oracle_calls: calls,
        alpha_used: alpha,
        contraction_log: current.into_trace(),
    })
}

fn best_candidate(candidates: Vec<(Subset, f64)>) -> (Subset, f64) {
    let min = candidates
        .iter()
        .map(|(_, v)| *v)
        .fold(f64::INFINITY, f64::min);
    candidates
        .into_iter()
        .filter(|(_, v)| *v <= min + EPS)
        .min_by(|a, b| a.0.cmp(&b.0))
        .expect("at least two candidates")
}

/// Least-squares slope of `ln y` against `ln x`; `None` with fewer than two
/// distinct `x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    (logs.len() >= 2 && sxx > 0.0).then(|| sxy / sxx)
}

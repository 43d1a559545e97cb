//! Greedy alpha-orderings.
//!
//! An ordering `(v_1, …, v_n)` is an alpha-ordering of `f` when every prefix
//! extension is greedy for the key `f(V_{i-1} + u) + alpha * f({u})`, where
//! `V_{i-1}` is the set of the first `i - 1` elements. `alpha = -1, 0, 1`
//! give the maximum-adjacency (MA), minimum-capacity (MC) and minimum-degree
//! (MD) orderings respectively.

use crate::error::{Error, Result};
use crate::setfn::SetFunctionOracle;
use crate::subset::Subset;

pub const MA_ALPHA: f64 = -1.0;
pub const MC_ALPHA: f64 = 0.0;
pub const MD_ALPHA: f64 = 1.0;

/// Relative width of the band inside which greedy keys count as tied.
const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct AlphaOrdering {
    sequence: Vec<usize>,
    alpha: f64,
    eval_count: u64,
    singletons: Vec<f64>,
    keys: Vec<f64>,
}

impl AlphaOrdering {
    /// Wraps a given permutation, e.g. to test it against the ordering
    /// condition. Carries no cached values.
    pub fn from_sequence(n: usize, sequence: Vec<usize>, alpha: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGroundSet);
        }
        let mut seen = vec![false; n];
        for &v in &sequence {
            if v >= n {
                return Err(Error::ElementOutOfRange { index: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidFunction(format!(
                    "element {v} appears twice in the ordering"
                )));
            }
        }
        if sequence.len() != n {
            return Err(Error::InvalidFunction(format!(
                "ordering has {} elements, ground set has {n}",
                sequence.len()
            )));
        }
        Ok(Self {
            sequence,
            alpha,
            eval_count: 0,
            singletons: Vec::new(),
            keys: Vec::new(),
        })
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Oracle calls spent building the ordering.
    pub fn eval_count(&self) -> u64 {
        self.eval_count
    }

    /// Cached `f({v})`, present for built orderings.
    pub fn singleton(&self, element: usize) -> Option<f64> {
        self.singletons.get(element).copied()
    }

    /// Greedy key of the element chosen at each step.
    pub fn keys(&self) -> &[f64] {
        &self.keys
    }

    /// `V_k`, the first `k` elements.
    pub fn prefix(&self, k: usize) -> Subset {
        Subset::from_indices(self.sequence.len(), self.sequence[..k].iter().copied())
    }

    /// `(v_{n-1}, v_n)`.
    pub fn last_pair(&self) -> Result<(usize, usize)> {
        match self.sequence.as_slice() {
            [.., a, b] => Ok((*a, *b)),
            _ => Err(Error::TooSmall {
                n: self.sequence.len(),
                min: 2,
            }),
        }
    }
}

/// Builds an alpha-ordering greedily, breaking near-ties by smallest index.
///
/// Uses exactly `n + n(n-1)/2` oracle calls: one per singleton, then one per
/// candidate at every step after the first.
pub fn build_alpha_ordering(oracle: &dyn SetFunctionOracle, alpha: f64) -> Result<AlphaOrdering> {
    let n = oracle.n();
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let singletons = (0..n)
        .map(|v| oracle.evaluate_singleton(v))
        .collect::<Result<Vec<_>>>()?;
    let mut eval_count = n as u64;

    let first_keys: Vec<(usize, f64)> = singletons
        .iter()
        .enumerate()
        .map(|(v, &s)| (v, (1.0 + alpha) * s))
        .collect();
    let (first, first_key) = pick_min(&first_keys);

    let mut sequence = Vec::with_capacity(n);
    let mut keys = Vec::with_capacity(n);
    let mut prefix = Subset::empty(n);
    sequence.push(first);
    keys.push(first_key);
    prefix.insert(first);

    while sequence.len() < n {
        let candidates = (0..n)
            .filter(|&u| !prefix.contains(u))
            .map(|u| Ok((u, oracle.evaluate(&prefix.with(u))? + alpha * singletons[u])))
            .collect::<Result<Vec<_>>>()?;
        eval_count += candidates.len() as u64;
        let (next, key) = pick_min(&candidates);
        sequence.push(next);
        keys.push(key);
        prefix.insert(next);
    }

    Ok(AlphaOrdering {
        sequence,
        alpha,
        eval_count,
        singletons,
        keys,
    })
}

pub fn build_ma(oracle: &dyn SetFunctionOracle) -> Result<AlphaOrdering> {
    build_alpha_ordering(oracle, MA_ALPHA)
}

pub fn build_mc(oracle: &dyn SetFunctionOracle) -> Result<AlphaOrdering> {
    build_alpha_ordering(oracle, MC_ALPHA)
}

pub fn build_md(oracle: &dyn SetFunctionOracle) -> Result<AlphaOrdering> {
    build_alpha_ordering(oracle, MD_ALPHA)
}

/// Smallest-index candidate whose key is within the tie band of the minimum.
/// `candidates` must be non-empty and sorted by index.
fn pick_min(candidates: &[(usize, f64)]) -> (usize, f64) {
    let min = candidates
        .iter()
        .map(|&(_, k)| k)
        .fold(f64::INFINITY, f64::min);
    let band = TIE_TOLERANCE * (1.0 + min.abs());
    candidates
        .iter()
        .copied()
        .find(|&(_, k)| k <= min + band)
        .expect("non-empty candidate list")
}

/// Upper bound on the calls [`build_alpha_ordering`] may use.
pub fn call_budget(n: usize) -> u64 {
    let n = n as u64;
    n + n * n.saturating_sub(1) / 2 + n.saturating_sub(1)
}

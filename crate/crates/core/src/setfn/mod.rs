//! Set functions behind a call-counting evaluation oracle.
//!
//! Every oracle exposes `evaluate`, which validates the subset, bumps the
//! oracle's own call counter by one and returns `f(X)`. Derived oracles
//! (shifted and contracted functions) evaluate their base oracle exactly once
//! per call, so the base counter always reflects the true cost measured in
//! evaluations of the original function.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};
use crate::subset::{GroundSet, Subset};

mod contraction;
mod families;
mod shifted;

pub use contraction::{ContractedFunction, ContractionTrace, Merge};
pub use families::{
    ConcaveCardinalityFunction, CoverageFunction, CoverageItem, DenseTableFunction, Edge,
    GraphCutFunction, MAX_TABLE_SIZE,
};
pub use shifted::ShiftedFunction;

/// Monotone evaluation counter, safe to bump from concurrent readers.
#[derive(Debug, Default)]
pub struct CallCounter(AtomicU64);

impl CallCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn increment(&self) {
        self.0.fetch_add(1, Ordering::Relaxed);
    }

    pub fn get(&self) -> u64 {
        self.0.load(Ordering::Relaxed)
    }

    pub fn reset(&self) {
        self.0.store(0, Ordering::Relaxed);
    }
}

impl Clone for CallCounter {
    fn clone(&self) -> Self {
        Self(AtomicU64::new(self.get()))
    }
}

/// Black-box access to a set function `f: 2^V -> R`.
pub trait SetFunctionOracle: Sync {
    fn ground(&self) -> &GroundSet;

    fn counter(&self) -> &CallCounter;

    /// The function value, without validation or counting. Callers should go
    /// through [`SetFunctionOracle::evaluate`].
    fn compute(&self, x: &Subset) -> Result<f64>;

    /// Returns `f(x)` and counts one oracle call.
    fn evaluate(&self, x: &Subset) -> Result<f64> {
        let n = self.ground().len();
        if x.universe() != n {
            return Err(Error::GroundSetMismatch {
                expected: n,
                found: x.universe(),
            });
        }
        self.counter().increment();
        self.compute(x)
    }

    fn evaluate_singleton(&self, element: usize) -> Result<f64> {
        let n = self.n();
        if element >= n {
            return Err(Error::ElementOutOfRange { index: element, n });
        }
        self.evaluate(&Subset::singleton(n, element))
    }

    fn n(&self) -> usize {
        self.ground().len()
    }

    fn calls(&self) -> u64 {
        self.counter().get()
    }

    fn reset_calls(&self) {
        self.counter().reset();
    }
}

impl<T: SetFunctionOracle + ?Sized> SetFunctionOracle for &T {
    fn ground(&self) -> &GroundSet {
        (**self).ground()
    }

    fn counter(&self) -> &CallCounter {
        (**self).counter()
    }

    fn compute(&self, x: &Subset) -> Result<f64> {
        (**self).compute(x)
    }
}

/// `f(X)` for every subset, indexed by bitmask. Costs `2^n` calls.
pub(crate) fn value_table(oracle: &dyn SetFunctionOracle) -> Result<Vec<f64>> {
    let n = oracle.n();
    (0..1u64 << n)
        .map(|mask| oracle.evaluate(&Subset::from_mask(n, mask)))
        .collect()
}

use super::{CallCounter, SetFunctionOracle};
use crate::error::Result;
use crate::subset::{GroundSet, Subset};

/// `g(S) = f(S) + alpha * sum_{v in S} f({v})`.
///
/// Singleton values are cached on construction (`n` base calls); afterwards
/// each evaluation of `g` costs exactly one base evaluation.
pub struct ShiftedFunction<'a> {
    base: &'a dyn SetFunctionOracle,
    alpha: f64,
    singletons: Vec<f64>,
    counter: CallCounter,
}

impl<'a> ShiftedFunction<'a> {
    pub fn new(base: &'a dyn SetFunctionOracle, alpha: f64) -> Result<Self> {
        let singletons = (0..base.n())
            .map(|v| base.evaluate_singleton(v))
            .collect::<Result<_>>()?;
        Ok(Self {
            base,
            alpha,
            singletons,
            counter: CallCounter::new(),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Cached `f({v})` for every element.
    pub fn singletons(&self) -> &[f64] {
        &self.singletons
    }
}

impl SetFunctionOracle for ShiftedFunction<'_> {
    fn ground(&self) -> &GroundSet {
        self.base.ground()
    }

    fn counter(&self) -> &CallCounter {
        &self.counter
    }

    fn compute(&self, x: &Subset) -> Result<f64> {
        let shift: f64 = x.iter().map(|v| self.singletons[v]).sum();
        Ok(self.base.evaluate(x)? + self.alpha * shift)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfn::GraphCutFunction;
    use crate::subset::all_subsets;

    fn path3() -> GraphCutFunction {
        GraphCutFunction::new(
            GroundSet::new(["p1", "p2", "p3"]).unwrap(),
            [(0, 1, 1.0), (1, 2, 1.0)],
        )
        .unwrap()
    }

    #[test]
    fn zero_shift_is_identity() {
        let f = path3();
        let g = ShiftedFunction::new(&f, 0.0).unwrap();
        for x in all_subsets(3) {
            assert_eq!(g.evaluate(&x).unwrap(), f.compute(&x).unwrap());
        }
    }

    #[test]
    fn unit_shift_on_path() {
        let f = path3();
        let g = ShiftedFunction::new(&f, 1.0).unwrap();
        // f({p1,p2}) + f({p1}) + f({p2}) = 1 + 1 + 2
        assert_eq!(g.evaluate(&Subset::from_mask(3, 0b011)).unwrap(), 4.0);
    }

    #[test]
    fn negative_unit_shift_zeroes_singletons() {
        let f = path3();
        let g = ShiftedFunction::new(&f, -1.0).unwrap();
        for v in 0..3 {
            assert_eq!(g.evaluate_singleton(v).unwrap(), 0.0);
        }
    }

    #[test]
    fn call_accounting() {
        let f = path3();
        let g = ShiftedFunction::new(&f, 0.5).unwrap();
        assert_eq!(f.calls(), 3);
        g.evaluate(&Subset::from_mask(3, 0b101)).unwrap();
        assert_eq!(f.calls(), 4);
        assert_eq!(g.calls(), 1);
    }
}

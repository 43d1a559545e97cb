use super::{CallCounter, SetFunctionOracle};
use crate::error::{Error, Result};
use crate::subset::{GroundSet, Subset};

/// One contraction step: live elements `u` and `v` became `w`.
#[derive(Debug, Clone, PartialEq)]
pub struct Merge {
    pub u: String,
    pub v: String,
    pub w: String,
    /// Original elements represented by `w`.
    pub block: Subset,
}

/// Maps each live element of a contracted ground set to the block of
/// original elements it stands for.
///
/// Merging `(u, v)` puts the new element `w` at the position of the smaller of
/// the two indices and drops the larger one, shifting later elements down.
#[derive(Debug, Clone, PartialEq)]
pub struct ContractionTrace {
    original: GroundSet,
    current: GroundSet,
    blocks: Vec<Subset>,
    merges: Vec<Merge>,
}

impl ContractionTrace {
    /// The trivial trace: every element is its own block.
    pub fn identity(original: GroundSet) -> Self {
        let n = original.len();
        Self {
            current: original.clone(),
            blocks: (0..n).map(|i| Subset::singleton(n, i)).collect(),
            original,
            merges: Vec::new(),
        }
    }

    pub fn original(&self) -> &GroundSet {
        &self.original
    }

    /// Labels of the live elements; merged elements are named `(u+v)`.
    pub fn current(&self) -> &GroundSet {
        &self.current
    }

    pub fn live(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn block(&self, element: usize) -> Result<&Subset> {
        self.blocks.get(element).ok_or(Error::StaleElement {
            index: element,
            live: self.live(),
        })
    }

    pub fn merges(&self) -> &[Merge] {
        &self.merges
    }

    /// The trace after contracting live elements `u` and `v`.
    pub fn merge(&self, u: usize, v: usize) -> Result<Self> {
        if u == v {
            return Err(Error::InvalidPair(u));
        }
        let block = self.block(u)?.union(self.block(v)?);
        let (keep, drop) = (u.min(v), u.max(v));
        let label = format!("({}+{})", self.current.label(u), self.current.label(v));

        let mut labels = self.current.labels().to_vec();
        let mut blocks = self.blocks.clone();
        labels[keep] = label.clone();
        blocks[keep] = block.clone();
        labels.remove(drop);
        blocks.remove(drop);

        let mut merges = self.merges.clone();
        merges.push(Merge {
            u: self.current.label(u).to_owned(),
            v: self.current.label(v).to_owned(),
            w: label,
            block,
        });
        Ok(Self {
            original: self.original.clone(),
            current: GroundSet::from_labels_unchecked(labels)?,
            blocks,
            merges,
        })
    }

    /// Union of the blocks of the members of `x`.
    pub fn expand(&self, x: &Subset) -> Result<Subset> {
        if x.universe() != self.live() {
            return Err(Error::GroundSetMismatch {
                expected: self.live(),
                found: x.universe(),
            });
        }
        let mut out = Subset::empty(self.original.len());
        for e in x.iter() {
            out = out.union(&self.blocks[e]);
        }
        Ok(out)
    }

    /// Lifts a subset of the contracted ground set to the original one. With
    /// `avoid = Some(r)` the result is complemented whenever it contains the
    /// original element `r`, so the returned side never holds `r`.
    pub fn lift(&self, x: &Subset, avoid: Option<usize>) -> Result<Subset> {
        let lifted = self.expand(x)?;
        match avoid {
            Some(r) if r >= self.original.len() => Err(Error::ElementOutOfRange {
                index: r,
                n: self.original.len(),
            }),
            Some(r) if lifted.contains(r) => Ok(lifted.complement()),
            _ => Ok(lifted),
        }
    }
}

/// `f'(X) = f(expand(X))` on a contracted ground set.
///
/// For symmetric `f` this equals the complement-normalized contraction, and
/// it is symmetric and submodular whenever `f` is. Each evaluation costs
/// exactly one evaluation of the root oracle. Contraction is only meaningful
/// for symmetric roots; this is the caller's contract and is not checked.
pub struct ContractedFunction<'a> {
    root: &'a dyn SetFunctionOracle,
    trace: ContractionTrace,
    counter: CallCounter,
}

impl<'a> ContractedFunction<'a> {
    /// Wraps `root` with the identity trace.
    pub fn new(root: &'a dyn SetFunctionOracle) -> Self {
        Self {
            trace: ContractionTrace::identity(root.ground().clone()),
            root,
            counter: CallCounter::new(),
        }
    }

    pub fn with_trace(root: &'a dyn SetFunctionOracle, trace: ContractionTrace) -> Result<Self> {
        if trace.original().len() != root.n() {
            return Err(Error::GroundSetMismatch {
                expected: root.n(),
                found: trace.original().len(),
            });
        }
        Ok(Self {
            root,
            trace,
            counter: CallCounter::new(),
        })
    }

    /// Contracts live elements `u` and `v` into a single element.
    pub fn contract(&self, u: usize, v: usize) -> Result<ContractedFunction<'a>> {
        Ok(Self {
            root: self.root,
            trace: self.trace.merge(u, v)?,
            counter: CallCounter::new(),
        })
    }

    pub fn trace(&self) -> &ContractionTrace {
        &self.trace
    }

    pub fn into_trace(self) -> ContractionTrace {
        self.trace
    }

    pub fn root(&self) -> &'a dyn SetFunctionOracle {
        self.root
    }
}

impl SetFunctionOracle for ContractedFunction<'_> {
    fn ground(&self) -> &GroundSet {
        self.trace.current()
    }

    fn counter(&self) -> &CallCounter {
        &self.counter
    }

    fn compute(&self, x: &Subset) -> Result<f64> {
        self.root.evaluate(&self.trace.expand(x)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::setfn::GraphCutFunction;
    use crate::subset::all_subsets;
    use crate::EPS;
    use proptest::prelude::*;

    fn path3() -> GraphCutFunction {
        GraphCutFunction::new(
            GroundSet::new(["p1", "p2", "p3"]).unwrap(),
            [(0, 1, 1.0), (1, 2, 1.0)],
        )
        .unwrap()
    }

    #[test]
    fn contract_path_tail() {
        let f = path3();
        let c = ContractedFunction::new(&f).contract(1, 2).unwrap();
        assert_eq!(c.ground().labels(), ["p1", "(p2+p3)"]);
        // f'({w}) = f({p2, p3}): only p1-p2 crosses
        assert_eq!(c.evaluate(&Subset::from_mask(2, 0b10)).unwrap(), 1.0);
        assert_eq!(c.evaluate(&Subset::empty(2)).unwrap(), 0.0);
    }

    #[test]
    fn contract_errors() {
        let f = path3();
        let c = ContractedFunction::new(&f);
        assert_eq!(c.contract(1, 1).err(), Some(Error::InvalidPair(1)));
        let c = c.contract(0, 1).unwrap();
        assert_eq!(
            c.contract(0, 2).err(),
            Some(Error::StaleElement { index: 2, live: 2 })
        );
    }

    #[test]
    fn lift_composes_blocks() {
        let g = GroundSet::new(["p1", "p2", "p3", "p4"]).unwrap();
        let t = ContractionTrace::identity(g);
        let x = Subset::from_mask(4, 0b0101);
        assert_eq!(t.lift(&x, None).unwrap(), x);

        let t1 = t.merge(2, 3).unwrap();
        assert_eq!(t1.current().labels(), ["p1", "p2", "(p3+p4)"]);
        assert_eq!(
            t1.lift(&Subset::from_mask(3, 0b100), None).unwrap().mask(),
            Some(0b1100)
        );

        let t2 = t.merge(0, 1).unwrap().merge(0, 1).unwrap();
        assert_eq!(t2.current().labels(), ["((p1+p2)+p3)", "p4"]);
        assert_eq!(
            t2.lift(&Subset::from_mask(2, 0b01), None).unwrap().mask(),
            Some(0b0111)
        );
        assert_eq!(t2.merges().len(), 2);
        assert_eq!(t2.merges()[1].block.mask(), Some(0b0111));

        // complemented when it would contain the avoided element
        assert_eq!(
            t2.lift(&Subset::from_mask(2, 0b01), Some(0))
                .unwrap()
                .mask(),
            Some(0b1000)
        );
        assert!(t2.lift(&Subset::from_mask(3, 0b01), None).is_err());
    }

    #[test]
    fn each_contracted_evaluation_costs_one_root_call() {
        let f = path3();
        let c = ContractedFunction::new(&f).contract(0, 2).unwrap();
        f.reset_calls();
        c.evaluate(&Subset::from_mask(2, 0b01)).unwrap();
        assert_eq!(f.calls(), 1);
        assert_eq!(c.calls(), 1);
    }

    fn random_cut(n: usize, weights: &[u8]) -> GraphCutFunction {
        let mut edges = Vec::new();
        let mut k = 0;
        for u in 0..n {
            for v in u + 1..n {
                let w = weights[k % weights.len()] % 4;
                k += 1;
                if w > 0 {
                    edges.push((u, v, w as f64));
                }
            }
        }
        GraphCutFunction::new(GroundSet::indexed(n).unwrap(), edges).unwrap()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn contraction_is_expansion_and_stays_symmetric(
            n in 3usize..=8,
            weights in prop::collection::vec(any::<u8>(), 1..40),
            picks in prop::collection::vec((any::<usize>(), any::<usize>()), 1..6),
        ) {
            let f = random_cut(n, &weights);
            let mut c = ContractedFunction::new(&f);
            for (a, b) in picks {
                let live = c.n();
                if live < 2 { break; }
                let u = a % live;
                let v = (u + 1 + b % (live - 1)) % live;
                c = c.contract(u, v).unwrap();

                let blocks = c.trace().blocks();
                let union = blocks.iter().fold(Subset::empty(n), |acc, b| acc.union(b));
                prop_assert_eq!(union, Subset::full(n));
                prop_assert_eq!(blocks.iter().map(Subset::len).sum::<usize>(), n);

                for x in all_subsets(c.n()) {
                    let expanded = c.trace().expand(&x).unwrap();
                    let value = c.evaluate(&x).unwrap();
                    prop_assert_eq!(value, f.compute(&expanded).unwrap());
                    let mirrored = c.evaluate(&x.complement()).unwrap();
                    prop_assert!((value - mirrored).abs() <= EPS);
                }
            }
        }
    }
}

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{CallCounter, SetFunctionOracle};
use crate::error::{Error, Result};
use crate::subset::{GroundSet, Subset};
use crate::EPS;

/// Largest ground set a dense table may cover (2^20 doubles, about 8 MB).
pub const MAX_TABLE_SIZE: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: f64,
}

/// Cut capacity function of an undirected graph with nonnegative capacities.
#[derive(Debug, Clone)]
pub struct GraphCutFunction {
    ground: GroundSet,
    edges: Vec<Edge>,
    counter: CallCounter,
}

impl GraphCutFunction {
    /// Parallel edges are merged by adding their weights; edges keep the order
    /// in which their endpoint pair first appeared.
    pub fn new<I>(ground: GroundSet, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, f64)>,
    {
        let n = ground.len();
        let mut merged: Vec<Edge> = Vec::new();
        let mut slot: HashMap<(usize, usize), usize> = HashMap::new();
        for (u, v, weight) in edges {
            for index in [u, v] {
                if index >= n {
                    return Err(Error::ElementOutOfRange { index, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(ground.label(u).to_owned()));
            }
            if !(weight.is_finite() && weight >= 0.0) {
                return Err(Error::InvalidWeight(weight));
            }
            let key = (u.min(v), u.max(v));
            match slot.get(&key) {
                Some(&i) => merged[i].weight += weight,
                None => {
                    slot.insert(key, merged.len());
                    merged.push(Edge {
                        u: key.0,
                        v: key.1,
                        weight,
                    });
                }
            }
        }
        Ok(Self {
            ground,
            edges: merged,
            counter: CallCounter::new(),
        })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Total weight between `u` and `v` (0 when not adjacent).
    pub fn weight(&self, u: usize, v: usize) -> f64 {
        self.edges
            .iter()
            .filter(|e| (e.u, e.v) == (u.min(v), u.max(v)))
            .map(|e| e.weight)
            .sum()
    }
}

impl SetFunctionOracle for GraphCutFunction {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn counter(&self) -> &CallCounter {
        &self.counter
    }

    fn compute(&self, x: &Subset) -> Result<f64> {
        Ok(self
            .edges
            .iter()
            .filter(|e| x.contains(e.u) != x.contains(e.v))
            .map(|e| e.weight)
            .sum())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoverageItem {
    pub weight: f64,
    pub covered_by: Subset,
}

/// Weighted coverage: item `j` contributes its weight whenever `X` meets
/// `covered_by_j`. Monotone and submodular, generally not symmetric.
#[derive(Debug, Clone)]
pub struct CoverageFunction {
    ground: GroundSet,
    items: Vec<CoverageItem>,
    counter: CallCounter,
}

impl CoverageFunction {
    pub fn new(ground: GroundSet, items: Vec<CoverageItem>) -> Result<Self> {
        for item in &items {
            if !(item.weight.is_finite() && item.weight >= 0.0) {
                return Err(Error::InvalidWeight(item.weight));
            }
            if item.covered_by.universe() != ground.len() {
                return Err(Error::GroundSetMismatch {
                    expected: ground.len(),
                    found: item.covered_by.universe(),
                });
            }
        }
        Ok(Self {
            ground,
            items,
            counter: CallCounter::new(),
        })
    }

    pub fn items(&self) -> &[CoverageItem] {
        &self.items
    }
}

impl SetFunctionOracle for CoverageFunction {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn counter(&self) -> &CallCounter {
        &self.counter
    }

    fn compute(&self, x: &Subset) -> Result<f64> {
        Ok(self
            .items
            .iter()
            .filter(|item| !item.covered_by.intersection(x).is_empty())
            .map(|item| item.weight)
            .sum())
    }
}

/// `f(X) = h(|X|)`.
#[derive(Debug, Clone)]
pub struct ConcaveCardinalityFunction {
    ground: GroundSet,
    h: Vec<f64>,
    counter: CallCounter,
}

impl ConcaveCardinalityFunction {
    /// Any profile `h(0..=n)`; symmetry and concavity are not checked.
    pub fn new(ground: GroundSet, h: Vec<f64>) -> Result<Self> {
        if h.len() != ground.len() + 1 {
            return Err(Error::InvalidFunction(format!(
                "cardinality profile needs {} values, got {}",
                ground.len() + 1,
                h.len()
            )));
        }
        Ok(Self {
            ground,
            h,
            counter: CallCounter::new(),
        })
    }

    /// Rejects `h` unless `h(k) = h(n-k)` and `h` is concave.
    pub fn symmetric_submodular(ground: GroundSet, h: Vec<f64>) -> Result<Self> {
        let f = Self::new(ground, h)?;
        let n = f.ground.len();
        if let Some(k) = (0..=n).find(|&k| (f.h[k] - f.h[n - k]).abs() > EPS) {
            return Err(Error::InvalidFunction(format!(
                "profile is not symmetric: h({k}) = {} but h({}) = {}",
                f.h[k],
                n - k,
                f.h[n - k]
            )));
        }
        if let Some(k) = (1..n).find(|&k| f.h[k + 1] - f.h[k] > f.h[k] - f.h[k - 1] + EPS) {
            return Err(Error::InvalidFunction(format!(
                "profile is not concave at k = {k}"
            )));
        }
        Ok(f)
    }

    pub fn profile(&self) -> &[f64] {
        &self.h
    }
}

impl SetFunctionOracle for ConcaveCardinalityFunction {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn counter(&self) -> &CallCounter {
        &self.counter
    }

    fn compute(&self, x: &Subset) -> Result<f64> {
        Ok(self.h[x.len()])
    }
}

/// Explicit value table over `2^n` subsets, `n <= 20`.
///
/// Text form: the first line holds `n`, followed by `2^n` whitespace-separated
/// values; position `i` is the value of the subset whose bit `j` is bit `j` of
/// `i`. Elements are labelled `e0 … e{n-1}`.
#[derive(Debug, Clone)]
pub struct DenseTableFunction {
    ground: GroundSet,
    values: Vec<f64>,
    counter: CallCounter,
}

impl DenseTableFunction {
    pub fn new(ground: GroundSet, values: Vec<f64>) -> Result<Self> {
        let n = ground.len();
        if n > MAX_TABLE_SIZE {
            return Err(Error::TooLarge {
                n,
                max: MAX_TABLE_SIZE,
            });
        }
        if values.len() != 1 << n {
            return Err(Error::InvalidFunction(format!(
                "table for n = {n} needs {} values, got {}",
                1u64 << n,
                values.len()
            )));
        }
        Ok(Self {
            ground,
            values,
            counter: CallCounter::new(),
        })
    }

    /// Tabulates an arbitrary function of the bitmask.
    pub fn from_fn(n: usize, f: impl Fn(&Subset) -> f64) -> Result<Self> {
        if n > MAX_TABLE_SIZE {
            return Err(Error::TooLarge {
                n,
                max: MAX_TABLE_SIZE,
            });
        }
        let ground = GroundSet::indexed(n)?;
        let values = (0..1u64 << n)
            .map(|m| f(&Subset::from_mask(n, m)))
            .collect();
        Self::new(ground, values)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing element count".into(),
        })?;
        let n: usize = header.parse().map_err(|_| Error::Parse {
            line: header_line,
            message: format!("expected element count, found `{header}`"),
        })?;
        if n == 0 || n > MAX_TABLE_SIZE {
            return Err(Error::Parse {
                line: header_line,
                message: format!("element count must be in 1..={MAX_TABLE_SIZE}, got {n}"),
            });
        }

        let expected = 1usize << n;
        let mut values = Vec::with_capacity(expected);
        let mut last_line = header_line;
        for (line, content) in lines {
            last_line = line;
            for token in content.split_whitespace() {
                let value: f64 = token.parse().map_err(|_| Error::Parse {
                    line,
                    message: format!("invalid value `{token}`"),
                })?;
                if !value.is_finite() {
                    return Err(Error::Parse {
                        line,
                        message: format!("value `{token}` is not finite"),
                    });
                }
                values.push(value);
            }
        }
        if values.len() != expected {
            return Err(Error::Parse {
                line: last_line,
                message: format!("expected {expected} values, found {}", values.len()),
            });
        }
        Self::new(GroundSet::indexed(n)?, values)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.ground.len());
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(out, "{v}");
        }
        out.push('\n');
        out
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }
}

impl SetFunctionOracle for DenseTableFunction {
    fn ground(&self) -> &GroundSet {
        &self.ground
    }

    fn counter(&self) -> &CallCounter {
        &self.counter
    }

    fn compute(&self, x: &Subset) -> Result<f64> {
        let index = x
            .mask()
            .expect("table ground sets have at most 20 elements");
        Ok(self.values[index as usize])
    }
}

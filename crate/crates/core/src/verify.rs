//! Exhaustive checkers for desk-scale instances.
//!
//! Everything here enumerates subsets by bitmask, so the first violation
//! reported is always the one with the smallest mask. All inequalities are
//! checked with the absolute slack [`EPS`].

use std::fmt;

use crate::error::{Error, Result};
use crate::ordering::AlphaOrdering;
use crate::setfn::{value_table, SetFunctionOracle};
use crate::subset::Subset;
use crate::EPS;

pub const MAX_BRUTE_FORCE: usize = 20;
pub const MAX_PAIR_CHECK: usize = 20;
pub const MAX_SYMMETRY_CHECK: usize = 20;
pub const MAX_SUBMODULAR_CHECK: usize = 14;
pub const MAX_INEQUALITY_CHECK: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairProperty {
    /// `f(X) >= min_{x in V} f({x})`
    Contractible,
    /// `f(X) >= f({v})` for the second element `v` of the pair
    Pendent,
    /// `f(X) >= min_{x in X} f({x})`
    Flat,
}

impl PairProperty {
    pub const ALL: [PairProperty; 3] = [Self::Contractible, Self::Pendent, Self::Flat];

    pub fn name(self) -> &'static str {
        match self {
            Self::Contractible => "contractible",
            Self::Pendent => "pendent",
            Self::Flat => "flat",
        }
    }
}

impl fmt::Display for PairProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for PairProperty {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown pair property `{s}`"))
    }
}

/// Outcome of checking one pair property over every separating subset.
#[derive(Debug, Clone, PartialEq)]
pub struct PairReport {
    pub pair: (usize, usize),
    pub property: PairProperty,
    pub holds: bool,
    /// First separating subset (bitmask order) violating the property.
    pub witness: Option<Subset>,
    /// `f(witness)` and the bound it falls below.
    pub witness_value: Option<f64>,
    pub witness_bound: Option<f64>,
    /// Minimum of `f(X) - bound(X)` over all separating `X`.
    pub margin: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ViolationKind {
    Symmetry,
    Submodularity,
    OrderingCondition,
    MinCapacityInequality,
    AlphaOrderingInequality,
}

/// A failed inequality `lhs >= rhs`, i.e. `lhs < rhs - EPS`.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub sets: Vec<Subset>,
    pub lhs: f64,
    pub rhs: f64,
    /// 1-based ordering positions `(i, j)` for ordering-condition failures.
    pub positions: Option<(usize, usize)>,
}

fn guard(oracle: &dyn SetFunctionOracle, min: usize, max: usize) -> Result<usize> {
    let n = oracle.n();
    if n < min {
        return Err(Error::TooSmall { n, min });
    }
    if n > max {
        return Err(Error::TooLarge { n, max });
    }
    Ok(n)
}

fn singleton_values(oracle: &dyn SetFunctionOracle) -> Result<Vec<f64>> {
    (0..oracle.n())
        .map(|v| oracle.evaluate_singleton(v))
        .collect()
}

fn min_over(x: &Subset, values: &[f64]) -> f64 {
    x.iter().map(|v| values[v]).fold(f64::INFINITY, f64::min)
}

/// Exact nontrivial minimum by enumeration; ties go to the smallest mask.
pub fn brute_force_min(oracle: &dyn SetFunctionOracle) -> Result<(Subset, f64)> {
    let n = guard(oracle, 2, MAX_BRUTE_FORCE)?;
    let mut best: Option<(u64, f64)> = None;
    for mask in 1..(1u64 << n) - 1 {
        let value = oracle.evaluate(&Subset::from_mask(n, mask))?;
        if best.is_none_or(|(_, b)| value < b) {
            best = Some((mask, value));
        }
    }
    let (mask, value) = best.expect("n >= 2 leaves a proper nonempty subset");
    Ok((Subset::from_mask(n, mask), value))
}

/// The right-hand side of `property` for a separating subset `x`.
pub fn property_bound(
    property: PairProperty,
    pair: (usize, usize),
    x: &Subset,
    singletons: &[f64],
) -> f64 {
    match property {
        PairProperty::Contractible => singletons.iter().copied().fold(f64::INFINITY, f64::min),
        PairProperty::Pendent => singletons[pair.1],
        PairProperty::Flat => min_over(x, singletons),
    }
}

/// Checks `property` for the ordered pair `(u, v)` over every `X` containing
/// exactly one of `u`, `v`.
pub fn check_pair(
    oracle: &dyn SetFunctionOracle,
    u: usize,
    v: usize,
    property: PairProperty,
) -> Result<PairReport> {
    let n = guard(oracle, 2, MAX_PAIR_CHECK)?;
    for index in [u, v] {
        if index >= n {
            return Err(Error::ElementOutOfRange { index, n });
        }
    }
    if u == v {
        return Err(Error::InvalidPair(u));
    }
    let singletons = singleton_values(oracle)?;
    let mut report = PairReport {
        pair: (u, v),
        property,
        holds: true,
        witness: None,
        witness_value: None,
        witness_bound: None,
        margin: f64::INFINITY,
    };
    for mask in 1..(1u64 << n) - 1 {
        let x = Subset::from_mask(n, mask);
        if x.count_of((u, v)) != 1 {
            continue;
        }
        let value = oracle.evaluate(&x)?;
        let bound = property_bound(property, (u, v), &x, &singletons);
        report.margin = report.margin.min(value - bound);
        if report.holds && value < bound - EPS {
            report.holds = false;
            report.witness = Some(x);
            report.witness_value = Some(value);
            report.witness_bound = Some(bound);
        }
    }
    Ok(report)
}

/// First `X` with `|f(X) - f(V \ X)| > EPS`.
pub fn check_symmetric(oracle: &dyn SetFunctionOracle) -> Result<Option<Violation>> {
    let n = guard(oracle, 1, MAX_SYMMETRY_CHECK)?;
    let full = (1u64 << n) - 1;
    for mask in 0..=full {
        let rest = full & !mask;
        if rest < mask {
            continue;
        }
        let x = Subset::from_mask(n, mask);
        let y = Subset::from_mask(n, rest);
        let (a, b) = (oracle.evaluate(&x)?, oracle.evaluate(&y)?);
        if (a - b).abs() > EPS {
            return Ok(Some(Violation {
                kind: ViolationKind::Symmetry,
                sets: vec![x, y],
                lhs: a.min(b),
                rhs: a.max(b),
                positions: None,
            }));
        }
    }
    Ok(None)
}

/// Checks `f(X+a) + f(X+b) >= f(X+a+b) + f(X)` for all `X` and `a != b`
/// outside `X`, which is equivalent to submodularity. Costs `2^n` calls.
pub fn check_submodular(oracle: &dyn SetFunctionOracle) -> Result<Option<Violation>> {
    let n = guard(oracle, 1, MAX_SUBMODULAR_CHECK)?;
    let table = value_table(oracle)?;
    for mask in 0..1usize << n {
        for a in (0..n).filter(|a| mask >> a & 1 == 0) {
            for b in (a + 1..n).filter(|b| mask >> b & 1 == 0) {
                let (xa, xb, xab) = (mask | 1 << a, mask | 1 << b, mask | 1 << a | 1 << b);
                let lhs = table[xa] + table[xb];
                let rhs = table[xab] + table[mask];
                if lhs < rhs - EPS {
                    return Ok(Some(Violation {
                        kind: ViolationKind::Submodularity,
                        sets: [xa, xb, xab, mask]
                            .iter()
                            .map(|&m| Subset::from_mask(n, m as u64))
                            .collect(),
                        lhs,
                        rhs,
                        positions: None,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Re-checks `f(V_{i-1} + v_i) + alpha f({v_i}) <= f(V_{i-1} + v_j) +
/// alpha f({v_j})` for every `i <= j`.
pub fn check_ordering_condition(
    oracle: &dyn SetFunctionOracle,
    ordering: &AlphaOrdering,
    alpha: f64,
) -> Result<Option<Violation>> {
    let n = oracle.n();
    if ordering.len() != n {
        return Err(Error::GroundSetMismatch {
            expected: n,
            found: ordering.len(),
        });
    }
    let singletons = singleton_values(oracle)?;
    let seq = ordering.sequence();
    let mut prefix = Subset::empty(n);
    for i in 0..n {
        let key = |v: usize| -> Result<(Subset, f64)> {
            let set = prefix.with(v);
            let value = oracle.evaluate(&set)? + alpha * singletons[v];
            Ok((set, value))
        };
        let (chosen_set, chosen) = key(seq[i])?;
        for (j, &v) in seq.iter().enumerate().skip(i + 1) {
            let (other_set, other) = key(v)?;
            if other < chosen - EPS {
                return Ok(Some(Violation {
                    kind: ViolationKind::OrderingCondition,
                    sets: vec![chosen_set, other_set],
                    lhs: other,
                    rhs: chosen,
                    positions: Some((i + 1, j + 1)),
                }));
            }
        }
        prefix.insert(seq[i]);
    }
    Ok(None)
}

fn separating_masks(n: usize, pair: (usize, usize)) -> impl Iterator<Item = u64> {
    (1..(1u64 << n) - 1).filter(move |m| (m >> pair.0 & 1) != (m >> pair.1 & 1))
}

/// `f(X) + f(V \ X) >= min_{x in X} f({x}) + f(V_{n-1})` for every `X`
/// separating the last pair of an MC-ordering of a submodular `f`.
pub fn check_min_capacity_inequality(
    oracle: &dyn SetFunctionOracle,
    ordering: &AlphaOrdering,
) -> Result<Option<Violation>> {
    let n = guard(oracle, 2, MAX_INEQUALITY_CHECK)?;
    let table = value_table(oracle)?;
    let full = (1u64 << n) - 1;
    let singletons: Vec<f64> = (0..n).map(|v| table[1 << v]).collect();
    let pair = ordering.last_pair()?;
    let head = ordering.prefix(n - 1);
    let head_value = table[head.mask().expect("n <= 16") as usize];
    for mask in separating_masks(n, pair) {
        let x = Subset::from_mask(n, mask);
        let lhs = table[mask as usize] + table[(full & !mask) as usize];
        let rhs = min_over(&x, &singletons) + head_value;
        if lhs < rhs - EPS {
            return Ok(Some(Violation {
                kind: ViolationKind::MinCapacityInequality,
                sets: vec![x.clone(), x.complement(), head],
                lhs,
                rhs,
                positions: None,
            }));
        }
    }
    Ok(None)
}

/// `2 f(X) >= min_{x in X} (1 + alpha) f({x}) + (1 - alpha) f({v_n})` for
/// every `X` separating the last pair of an alpha-ordering of a symmetric
/// submodular `f`.
pub fn check_alpha_inequality(
    oracle: &dyn SetFunctionOracle,
    ordering: &AlphaOrdering,
    alpha: f64,
) -> Result<Option<Violation>> {
    let n = guard(oracle, 2, MAX_INEQUALITY_CHECK)?;
    let table = value_table(oracle)?;
    let singletons: Vec<f64> = (0..n).map(|v| table[1 << v]).collect();
    let pair = ordering.last_pair()?;
    let last = singletons[pair.1];
    for mask in separating_masks(n, pair) {
        let x = Subset::from_mask(n, mask);
        let lhs = 2.0 * table[mask as usize];
        let rhs = x
            .iter()
            .map(|v| (1.0 + alpha) * singletons[v])
            .fold(f64::INFINITY, f64::min)
            + (1.0 - alpha) * last;
        if lhs < rhs - EPS {
            return Ok(Some(Violation {
                kind: ViolationKind::AlphaOrderingInequality,
                sets: vec![x],
                lhs,
                rhs,
                positions: None,
            }));
        }
    }
    Ok(None)
}

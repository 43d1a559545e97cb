//! Graphs on which an alpha-ordering ends in a pair lacking a given property.
//!
//! Vertices `p1 … pk` get indices `0 … k-1`, so the smallest-index tie-break
//! of [`build_alpha_ordering`](crate::ordering::build_alpha_ordering) makes
//! the same choices the constructions rely on.

use super::p_labels;
use crate::error::{Error, Result};
use crate::setfn::GraphCutFunction;
use crate::subset::{GroundSet, Subset};
use crate::verify::PairProperty;

#[derive(Debug, Clone)]
pub struct CounterexampleInstance {
    pub graph: GraphCutFunction,
    pub alpha: f64,
    /// Expected last pair of the ordering, smaller index first.
    pub expected_last_pair: (usize, usize),
    pub violated_property: PairProperty,
    /// A subset separating the pair that violates the property.
    pub witness: Subset,
    /// The variable edge capacity, when the construction has one.
    pub kappa: Option<f64>,
}

fn graph(n: usize, edges: &[(usize, usize, f64)]) -> GraphCutFunction {
    let ground = GroundSet::new(p_labels(n)).expect("generated labels are valid");
    GraphCutFunction::new(ground, edges.iter().map(|&(u, v, w)| (u - 1, v - 1, w)))
        .expect("construction weights are nonnegative")
}

fn witness(n: usize, members: &[usize]) -> Subset {
    Subset::from_indices(n, members.iter().map(|p| p - 1))
}

fn require_finite(alpha: f64) -> Result<()> {
    if alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidFunction(format!(
            "alpha must be finite, got {alpha}"
        )))
    }
}

/// Four vertices: `p1-p4` and `p2-p3` of capacity 1, `p3-p4` of capacity
/// `kappa`. Last pair `{p3, p4}`, witness `{p1, p4}` with cut `kappa`.
fn four_vertex(alpha: f64, kappa: f64, property: PairProperty) -> CounterexampleInstance {
    CounterexampleInstance {
        graph: graph(4, &[(1, 4, 1.0), (2, 3, 1.0), (3, 4, kappa)]),
        alpha,
        expected_last_pair: (2, 3),
        violated_property: property,
        witness: witness(4, &[1, 4]),
        kappa: Some(kappa),
    }
}

/// Five vertices: `p1-p3`, `p3-p5` of capacity 1, `p1-p5` of capacity 2,
/// `p1-p2` and `p3-p4` as given. Last pair `{p4, p5}`, witness `{p3, p4}`.
fn five_vertex(
    alpha: f64,
    c12: f64,
    c34: f64,
    kappa: Option<f64>,
    property: PairProperty,
) -> CounterexampleInstance {
    CounterexampleInstance {
        graph: graph(
            5,
            &[
                (1, 2, c12),
                (1, 3, 1.0),
                (1, 5, 2.0),
                (3, 4, c34),
                (3, 5, 1.0),
            ],
        ),
        alpha,
        expected_last_pair: (3, 4),
        violated_property: property,
        witness: witness(5, &[3, 4]),
        kappa,
    }
}

fn non_contractible(alpha: f64, property: PairProperty) -> CounterexampleInstance {
    if alpha > 1.0 {
        four_vertex(alpha, 2.0 / (1.0 + alpha), property)
    } else if alpha > -2.0 {
        let kappa = 1.0 + 2.0 / (-1.0 - alpha);
        five_vertex(alpha, kappa, kappa, Some(kappa), property)
    } else {
        five_vertex(alpha, 7.0, 4.0, None, property)
    }
}

/// An instance whose alpha-ordering ends in a non-contractible pair; exists
/// exactly when `alpha` lies outside `[-1, 1]`.
pub fn counterexample_contractible(alpha: f64) -> Result<CounterexampleInstance> {
    require_finite(alpha)?;
    if (-1.0..=1.0).contains(&alpha) {
        return Err(Error::NoCounterexample {
            property: PairProperty::Contractible,
            alpha,
            reason: "the last pair of an alpha-ordering is contractible for every alpha in [-1, 1]",
        });
    }
    Ok(non_contractible(alpha, PairProperty::Contractible))
}

/// An instance whose alpha-ordering ends in a non-pendent pair; exists for
/// every `alpha != -1`.
pub fn counterexample_pendent(alpha: f64) -> Result<CounterexampleInstance> {
    require_finite(alpha)?;
    if alpha == -1.0 {
        return Err(Error::NoCounterexample {
            property: PairProperty::Pendent,
            alpha,
            reason: "the last pair of a maximum-adjacency ordering is always pendent",
        });
    }
    if alpha > -1.0 && alpha <= 1.0 {
        Ok(four_vertex(
            alpha,
            2.0 / (1.0 + alpha),
            PairProperty::Pendent,
        ))
    } else {
        Ok(non_contractible(alpha, PairProperty::Pendent))
    }
}

/// An instance whose alpha-ordering ends in a non-flat pair; exists for every
/// `alpha != 1`.
pub fn counterexample_flat(alpha: f64) -> Result<CounterexampleInstance> {
    require_finite(alpha)?;
    if alpha == 1.0 {
        return Err(Error::NoCounterexample {
            property: PairProperty::Flat,
            alpha,
            reason: "the last pair of a minimum-degree ordering is always flat",
        });
    }
    if (-1.0..1.0).contains(&alpha) {
        // any capacity in (1, 2/(1+alpha)] works; 2 whenever that is allowed
        let kappa = if alpha == -1.0 {
            2.0
        } else {
            f64::min(2.0, 2.0 / (1.0 + alpha))
        };
        Ok(CounterexampleInstance {
            graph: graph(5, &[(1, 2, 1.0), (2, 3, 1.0), (3, 4, kappa), (4, 5, 1.0)]),
            alpha,
            expected_last_pair: (3, 4),
            violated_property: PairProperty::Flat,
            witness: witness(5, &[3, 4]),
            kappa: Some(kappa),
        })
    } else {
        Ok(non_contractible(alpha, PairProperty::Flat))
    }
}

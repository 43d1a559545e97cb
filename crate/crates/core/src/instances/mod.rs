//! Instance supply: graphs from edge lists and files, seeded random families,
//! graph adjacency/degree helpers, and the counterexample constructions for
//! orderings whose last pair fails to be contractible, pendent or flat.

mod counterexamples;
mod graph_file;

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::setfn::{CoverageFunction, CoverageItem, GraphCutFunction, SetFunctionOracle};
use crate::subset::{GroundSet, Subset};

pub use counterexamples::{
    counterexample_contractible, counterexample_flat, counterexample_pendent,
    CounterexampleInstance,
};
pub use graph_file::{parse_graph, write_graph};

/// Cut function of a graph given by labelled edges.
pub fn graph_from_edges<L, S>(labels: L, edges: &[(&str, &str, f64)]) -> Result<GraphCutFunction>
where
    L: IntoIterator<Item = S>,
    S: Into<String>,
{
    let ground = GroundSet::new(labels)?;
    let indexed = edges
        .iter()
        .map(|&(u, v, w)| Ok((ground.index_of(u)?, ground.index_of(v)?, w)))
        .collect::<Result<Vec<_>>>()?;
    GraphCutFunction::new(ground, indexed)
}

/// Labels `p1 … pn`.
pub fn p_labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("p{i}")).collect()
}

/// Path `p1 – p2 – … – p(k+1)` with the given edge weights.
pub fn path_graph(weights: &[f64]) -> GraphCutFunction {
    let ground = GroundSet::new(p_labels(weights.len() + 1)).expect("generated labels are valid");
    GraphCutFunction::new(
        ground,
        weights.iter().enumerate().map(|(i, &w)| (i, i + 1, w)),
    )
    .expect("path weights must be nonnegative")
}

/// Unit-weight cycle on `p1 … pn`.
pub fn cycle_graph(n: usize) -> Result<GraphCutFunction> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let ground = GroundSet::new(p_labels(n))?;
    GraphCutFunction::new(ground, (0..n).map(|i| (i, (i + 1) % n, 1.0)))
}

/// Connected random graph on `p1 … pn` with integer weights in
/// `1..=max_weight`: a random spanning tree plus each remaining pair with
/// probability `edge_prob`.
pub fn random_graph(
    n: usize,
    edge_prob: f64,
    max_weight: u32,
    seed: u64,
) -> Result<GraphCutFunction> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let max_weight = max_weight.max(1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);

    let mut edges = Vec::new();
    let mut tree = HashSet::new();
    for i in 1..n {
        let parent = order[rng.gen_range(0..i)];
        let child = order[i];
        tree.insert((parent.min(child), parent.max(child)));
        edges.push((parent, child, f64::from(rng.gen_range(1..=max_weight))));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !tree.contains(&(u, v)) && rng.gen_bool(edge_prob.clamp(0.0, 1.0)) {
                edges.push((u, v, f64::from(rng.gen_range(1..=max_weight))));
            }
        }
    }
    GraphCutFunction::new(GroundSet::new(p_labels(n))?, edges)
}

/// Random weighted coverage function on `e0 … e{n-1}` with integer item
/// weights in `1..=10` and non-empty covering sets.
pub fn random_coverage(n: usize, items: usize, seed: u64) -> Result<CoverageFunction> {
    if n < 2 {
        return Err(Error::TooSmall { n, min: 2 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let items = (0..items)
        .map(|_| {
            let mut covered_by = Subset::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.35)));
            if covered_by.is_empty() {
                covered_by.insert(rng.gen_range(0..n));
            }
            CoverageItem {
                weight: f64::from(rng.gen_range(1..=10u32)),
                covered_by,
            }
        })
        .collect();
    CoverageFunction::new(GroundSet::indexed(n)?, items)
}

fn check_outside(g: &GraphCutFunction, w: &Subset, y: usize) -> Result<()> {
    let n = g.n();
    if w.universe() != n {
        return Err(Error::GroundSetMismatch {
            expected: n,
            found: w.universe(),
        });
    }
    if y >= n {
        return Err(Error::ElementOutOfRange { index: y, n });
    }
    if w.contains(y) {
        return Err(Error::NotOutside(y));
    }
    Ok(())
}

/// Total weight of edges between `w` and `y ∉ w`, summed over the edge list.
pub fn adjacency(g: &GraphCutFunction, w: &Subset, y: usize) -> Result<f64> {
    check_outside(g, w, y)?;
    let direct: f64 = g
        .edges()
        .iter()
        .filter_map(|e| match (e.u == y, e.v == y) {
            (true, _) if w.contains(e.v) => Some(e.weight),
            (_, true) if w.contains(e.u) => Some(e.weight),
            _ => None,
        })
        .sum();
    debug_assert!(
        (direct - adjacency_via_cut(g, w, y)?).abs() <= crate::EPS,
        "adjacency disagrees with its cut formula"
    );
    Ok(direct)
}

/// `adj(W, y) = (κ({y}) + κ(W) − κ(W ∪ {y})) / 2`, three oracle calls.
pub fn adjacency_via_cut(g: &GraphCutFunction, w: &Subset, y: usize) -> Result<f64> {
    check_outside(g, w, y)?;
    let single = g.evaluate_singleton(y)?;
    Ok(0.5 * (single + g.evaluate(w)? - g.evaluate(&w.with(y))?))
}

/// Degree of `y` after deleting `w` from the graph, summed over the edge list.
pub fn residual_degree(g: &GraphCutFunction, w: &Subset, y: usize) -> Result<f64> {
    check_outside(g, w, y)?;
    let direct: f64 = g
        .edges()
        .iter()
        .filter_map(|e| match (e.u == y, e.v == y) {
            (true, _) if !w.contains(e.v) => Some(e.weight),
            (_, true) if !w.contains(e.u) => Some(e.weight),
            _ => None,
        })
        .sum();
    debug_assert!(
        (direct - residual_degree_via_cut(g, w, y)?).abs() <= crate::EPS,
        "residual degree disagrees with its cut formula"
    );
    Ok(direct)
}

/// `deg_W(y) = (κ({y}) − κ(W) + κ(W ∪ {y})) / 2`, three oracle calls.
pub fn residual_degree_via_cut(g: &GraphCutFunction, w: &Subset, y: usize) -> Result<f64> {
    check_outside(g, w, y)?;
    let single = g.evaluate_singleton(y)?;
    Ok(0.5 * (single - g.evaluate(w)? + g.evaluate(&w.with(y))?))
}

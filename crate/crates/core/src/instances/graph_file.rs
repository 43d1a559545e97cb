use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::setfn::{GraphCutFunction, SetFunctionOracle};
use crate::subset::GroundSet;

/// Parses the edge-list text format: one `u v w` triple per line, `#` starts
/// a comment line, and a line holding a single label declares a vertex.
/// Vertices are numbered by first appearance and repeated pairs add up.
pub fn parse_graph(text: &str) -> Result<GraphCutFunction> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut edges = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line, message };
        let mut id = |label: &str| -> Result<usize> {
            if let Some(&k) = index.get(label) {
                return Ok(k);
            }
            GroundSet::new([label]).map_err(|e| parse_err(e.to_string()))?;
            index.insert(label.to_owned(), labels.len());
            labels.push(label.to_owned());
            Ok(labels.len() - 1)
        };
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let (u, v, w) = match tokens[..] {
            [vertex] => {
                id(vertex)?;
                continue;
            }
            [u, v, w] => (u, v, w),
            _ => {
                return Err(parse_err(format!(
                    "expected `u v weight` or a single vertex label, found {} fields",
                    tokens.len()
                )))
            }
        };
        let weight: f64 = w
            .parse()
            .map_err(|_| parse_err(format!("invalid weight `{w}`")))?;
        if !(weight.is_finite() && weight >= 0.0) {
            return Err(parse_err(format!(
                "weight `{w}` must be a nonnegative number"
            )));
        }
        if u == v {
            return Err(parse_err(format!("self-loop on `{u}`")));
        }
        let (a, b) = (id(u)?, id(v)?);
        edges.push((a, b, weight));
    }

    if labels.is_empty() {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: "graph has no vertices".into(),
        });
    }
    GraphCutFunction::new(GroundSet::new(labels)?, edges)
}

/// Inverse of [`parse_graph`]: vertex declarations in index order, then the
/// edges.
pub fn write_graph(g: &GraphCutFunction) -> String {
    let mut out = String::new();
    for label in g.ground().labels() {
        let _ = writeln!(out, "{label}");
    }
    for e in g.edges() {
        let _ = writeln!(
            out,
            "{} {} {}",
            g.ground().label(e.u),
            g.ground().label(e.v),
            e.weight
        );
    }
    out
}

use std::fmt::Write as _;

use serde::Serialize;
use ssmin::instances::{
    counterexample_contractible, counterexample_flat, counterexample_pendent, cycle_graph,
    random_graph, CounterexampleInstance,
};
use ssmin::minimize::{loglog_slope, opt_set, validate_alpha};
use ssmin::setfn::SetFunctionOracle;
use ssmin::verify::{
    check_pair, check_submodular, check_symmetric, property_bound, PairProperty, PairReport,
    Violation, MAX_PAIR_CHECK,
};
use ssmin::{build_alpha_ordering, Error, GroundSet, Subset, EPS};

use crate::input::Loaded;
use crate::CheckProperty;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;

/// Random graphs in `bench` use this edge probability and weights `1..=10`.
const BENCH_EDGE_PROB: f64 = 0.3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn input(message: String) -> Self {
        Self {
            code: EXIT_INPUT,
            message,
        }
    }
}

impl From<Error> for CliError {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::AlphaOutOfRange(_) | Error::NoCounterexample { .. } => EXIT_DOMAIN,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: err.to_string(),
        }
    }
}

pub struct Report {
    pub output: String,
    pub code: u8,
}

impl Report {
    fn new(output: String, code: u8) -> Self {
        Self { output, code }
    }

    fn json<T: Serialize>(value: &T, code: u8) -> Self {
        let mut output = serde_json::to_string_pretty(value).expect("serializable report");
        output.push('\n');
        Self { output, code }
    }
}

fn require_finite(alpha: f64) -> Result<(), CliError> {
    if alpha.is_finite() {
        Ok(())
    } else {
        Err(CliError {
            code: EXIT_DOMAIN,
            message: format!("alpha must be a finite number, got {alpha}"),
        })
    }
}

fn labels(ground: &GroundSet, x: &Subset) -> Vec<String> {
    ground.labels_of(x).into_iter().map(str::to_owned).collect()
}

#[derive(Serialize)]
struct MinimizeJson {
    subset: Vec<String>,
    value: f64,
    oracle_calls: u64,
    alpha: f64,
}

pub fn minimize(input: &Loaded, alpha: f64, json: bool) -> Result<Report, CliError> {
    validate_alpha(alpha)?;
    let f = input.oracle();
    let result = opt_set(f, alpha)?;
    let subset = labels(f.ground(), &result.subset);
    if json {
        return Ok(Report::json(
            &MinimizeJson {
                subset,
                value: result.value,
                oracle_calls: result.oracle_calls,
                alpha,
            },
            EXIT_OK,
        ));
    }
    let mut out = String::new();
    let _ = writeln!(
        out,
        "minimizer:    {}",
        f.ground().format_subset(&result.subset)
    );
    let _ = writeln!(out, "value:        {}", result.value);
    let _ = writeln!(out, "oracle calls: {}", result.oracle_calls);
    let _ = writeln!(out, "alpha:        {alpha}");
    Ok(Report::new(out, EXIT_OK))
}

#[derive(Serialize)]
struct PairJson {
    property: &'static str,
    holds: bool,
    witness: Option<Vec<String>>,
    value: Option<f64>,
    bound: Option<f64>,
}

impl PairJson {
    fn new(ground: &GroundSet, r: &PairReport) -> Self {
        Self {
            property: r.property.name(),
            holds: r.holds,
            witness: r.witness.as_ref().map(|w| labels(ground, w)),
            value: r.witness_value,
            bound: r.witness_bound,
        }
    }
}

#[derive(Serialize)]
struct OrderJson {
    ordering: Vec<String>,
    alpha: f64,
    oracle_calls: u64,
    last_pair: Option<[String; 2]>,
    classification: Option<Vec<PairJson>>,
}

pub fn order(input: &Loaded, alpha: f64, json: bool) -> Result<Report, CliError> {
    require_finite(alpha)?;
    let f = input.oracle();
    let ground = f.ground();
    let ord = build_alpha_ordering(f, alpha)?;
    let sequence: Vec<String> = ord
        .sequence()
        .iter()
        .map(|&v| ground.label(v).to_owned())
        .collect();
    let pair = ord.last_pair().ok();
    let reports = match pair {
        Some((u, v)) if f.n() <= MAX_PAIR_CHECK => Some(
            PairProperty::ALL
                .into_iter()
                .map(|p| check_pair(f, u, v, p))
                .collect::<Result<Vec<_>, _>>()?,
        ),
        _ => None,
    };

    if json {
        return Ok(Report::json(
            &OrderJson {
                ordering: sequence,
                alpha,
                oracle_calls: ord.eval_count(),
                last_pair: pair
                    .map(|(u, v)| [ground.label(u).to_owned(), ground.label(v).to_owned()]),
                classification: reports
                    .as_ref()
                    .map(|rs| rs.iter().map(|r| PairJson::new(ground, r)).collect()),
            },
            EXIT_OK,
        ));
    }
    let mut out = String::new();
    let _ = writeln!(out, "ordering:  ({})", sequence.join(", "));
    let _ = writeln!(out, "alpha:     {alpha}");
    let _ = writeln!(out, "calls:     {}", ord.eval_count());
    match pair {
        Some((u, v)) => {
            let _ = writeln!(out, "last pair: ({}, {})", ground.label(u), ground.label(v));
        }
        None => out.push_str("last pair: none (single element)\n"),
    }
    match &reports {
        Some(rs) => {
            for r in rs {
                let _ = write!(out, "{:<13} {}", format!("{}:", r.property), r.holds);
                if let (Some(w), Some(value), Some(bound)) =
                    (&r.witness, r.witness_value, r.witness_bound)
                {
                    let _ = write!(
                        out,
                        "  (X = {}, f(X) = {value} < {bound})",
                        ground.format_subset(w)
                    );
                }
                out.push('\n');
            }
        }
        None if pair.is_some() => {
            let _ = writeln!(
                out,
                "classification skipped: n = {} exceeds {MAX_PAIR_CHECK}",
                f.n()
            );
        }
        None => {}
    }
    Ok(Report::new(out, EXIT_OK))
}

#[derive(Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
enum CheckOutcome {
    Pass,
    Violated {
        sets: Vec<Vec<String>>,
        lhs: f64,
        rhs: f64,
    },
}

#[derive(Serialize)]
struct CheckJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    symmetric: Option<CheckOutcome>,
    #[serde(skip_serializing_if = "Option::is_none")]
    submodular: Option<CheckOutcome>,
}

pub fn check(input: &Loaded, property: CheckProperty, json: bool) -> Result<Report, CliError> {
    let f = input.oracle();
    let ground = f.ground();
    let symmetric = match property {
        CheckProperty::Symmetric | CheckProperty::Both => Some(check_symmetric(f)?),
        CheckProperty::Submodular => None,
    };
    let submodular = match property {
        CheckProperty::Submodular | CheckProperty::Both => Some(check_submodular(f)?),
        CheckProperty::Symmetric => None,
    };
    let violated = symmetric.iter().chain(&submodular).any(Option::is_some);
    let code = if violated { EXIT_VIOLATION } else { EXIT_OK };

    if json {
        let to_json = |o: &Option<Violation>| match o {
            None => CheckOutcome::Pass,
            Some(v) => CheckOutcome::Violated {
                sets: v.sets.iter().map(|x| labels(ground, x)).collect(),
                lhs: v.lhs,
                rhs: v.rhs,
            },
        };
        return Ok(Report::json(
            &CheckJson {
                symmetric: symmetric.as_ref().map(to_json),
                submodular: submodular.as_ref().map(to_json),
            },
            code,
        ));
    }
    let mut out = String::new();
    if let Some(result) = &symmetric {
        match result {
            None => out.push_str("symmetric:  pass\n"),
            Some(v) => {
                let (x, y) = (&v.sets[0], &v.sets[1]);
                let _ = writeln!(
                    out,
                    "symmetric:  violated: f({}) = {} but f({}) = {}",
                    ground.format_subset(x),
                    f.compute(x)?,
                    ground.format_subset(y),
                    f.compute(y)?
                );
            }
        }
    }
    if let Some(result) = &submodular {
        match result {
            None => out.push_str("submodular: pass\n"),
            Some(v) => {
                let s: Vec<String> = v.sets.iter().map(|x| ground.format_subset(x)).collect();
                let _ = writeln!(
                    out,
                    "submodular: violated: f({}) + f({}) = {} < f({}) + f({}) = {}",
                    s[0], s[1], v.lhs, s[2], s[3], v.rhs
                );
            }
        }
    }
    Ok(Report::new(out, code))
}

#[derive(Serialize)]
struct DemoJson {
    property: &'static str,
    alpha: f64,
    edges: Vec<(String, String, f64)>,
    ordering: Vec<String>,
    expected_last_pair: [String; 2],
    actual_last_pair: [String; 2],
    witness: Vec<String>,
    witness_value: f64,
    bound: f64,
    reproduced: bool,
}

pub fn demo(property: PairProperty, alpha: f64, json: bool) -> Result<Report, CliError> {
    require_finite(alpha)?;
    let inst: CounterexampleInstance = match property {
        PairProperty::Contractible => counterexample_contractible(alpha),
        PairProperty::Pendent => counterexample_pendent(alpha),
        PairProperty::Flat => counterexample_flat(alpha),
    }?;
    let g = &inst.graph;
    let ground = g.ground();
    let ord = build_alpha_ordering(g, alpha)?;
    let (a, b) = ord.last_pair()?;
    let singletons = (0..g.n())
        .map(|v| g.compute(&Subset::singleton(g.n(), v)))
        .collect::<Result<Vec<_>, _>>()?;
    let value = g.compute(&inst.witness)?;
    let bound = property_bound(property, (a, b), &inst.witness, &singletons);
    let pair_matches = (a.min(b), a.max(b)) == inst.expected_last_pair;
    let reproduced = pair_matches
        && inst.witness.count_of((a, b)) == 1
        && value < bound - EPS
        && !check_pair(g, a, b, property)?.holds;
    let code = if reproduced { EXIT_OK } else { EXIT_VIOLATION };
    let (eu, ev) = inst.expected_last_pair;
    let name = |v: usize| ground.label(v).to_owned();

    if json {
        return Ok(Report::json(
            &DemoJson {
                property: property.name(),
                alpha,
                edges: g
                    .edges()
                    .iter()
                    .map(|e| (name(e.u), name(e.v), e.weight))
                    .collect(),
                ordering: ord.sequence().iter().map(|&v| name(v)).collect(),
                expected_last_pair: [name(eu), name(ev)],
                actual_last_pair: [name(a), name(b)],
                witness: labels(ground, &inst.witness),
                witness_value: value,
                bound,
                reproduced,
            },
            code,
        ));
    }
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|e| format!("{}-{}:{}", name(e.u), name(e.v), e.weight))
        .collect();
    let sequence: Vec<String> = ord.sequence().iter().map(|&v| name(v)).collect();
    let mut out = String::new();
    let _ = writeln!(out, "property:           {property}");
    let _ = writeln!(out, "alpha:              {alpha}");
    let _ = writeln!(out, "edges:              {}", edges.join(" "));
    let _ = writeln!(out, "ordering:           ({})", sequence.join(", "));
    let _ = writeln!(out, "expected last pair: {{{}, {}}}", name(eu), name(ev));
    let _ = writeln!(out, "actual last pair:   ({}, {})", name(a), name(b));
    let _ = writeln!(
        out,
        "witness X:          {}",
        ground.format_subset(&inst.witness)
    );
    let _ = writeln!(out, "f(X):               {value}");
    let _ = writeln!(out, "violated bound:     {bound}");
    let _ = writeln!(
        out,
        "reproduced:         {}",
        if reproduced { "yes" } else { "no" }
    );
    Ok(Report::new(out, code))
}

#[derive(Serialize)]
struct BenchRow {
    n: usize,
    oracle_calls: u64,
    value: f64,
}

#[derive(Serialize)]
struct BenchJson {
    family: &'static str,
    alpha: f64,
    rows: Vec<BenchRow>,
    slope: Option<f64>,
}

pub fn bench(
    sizes: &[usize],
    seed: Option<u64>,
    alpha: f64,
    json: bool,
) -> Result<Report, CliError> {
    validate_alpha(alpha)?;
    if let Some(&n) = sizes.iter().find(|&&n| n < 2) {
        return Err(CliError::input(format!("benchmark size {n} is below 2")));
    }
    let mut rows = Vec::with_capacity(sizes.len());
    for &n in sizes {
        let g = match seed {
            Some(s) => random_graph(n, BENCH_EDGE_PROB, 10, s.wrapping_add(n as u64))?,
            None => cycle_graph(n)?,
        };
        let r = opt_set(&g, alpha)?;
        rows.push(BenchRow {
            n,
            oracle_calls: r.oracle_calls,
            value: r.value,
        });
    }
    let points: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| (r.n as f64, r.oracle_calls as f64))
        .collect();
    let slope = loglog_slope(&points);
    let family = if seed.is_some() { "random" } else { "cycle" };

    if json {
        return Ok(Report::json(
            &BenchJson {
                family,
                alpha,
                rows,
                slope,
            },
            EXIT_OK,
        ));
    }
    let mut out = format!("{:>6} {:>12} {:>10}\n", "n", "calls", "min value");
    for r in &rows {
        let _ = writeln!(out, "{:>6} {:>12} {:>10}", r.n, r.oracle_calls, r.value);
    }
    if let Some(s) = slope {
        let _ = writeln!(out, "log-log slope: {s:.3}");
    }
    Ok(Report::new(out, EXIT_OK))
}

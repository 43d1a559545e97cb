//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use ssmin::instances::{
    adjacency, adjacency_via_cut, counterexample_contractible, counterexample_flat,
    counterexample_pendent, cycle_graph, random_coverage, random_graph, residual_degree,
    residual_degree_via_cut, CounterexampleInstance,
};
use ssmin::minimize::{loglog_slope, opt_set};
use ssmin::ordering::{build_alpha_ordering, build_ma, build_mc, build_md, call_budget};
use ssmin::setfn::GraphCutFunction;
use ssmin::subset::all_subsets;
use ssmin::verify::{
    brute_force_min, check_alpha_inequality, check_min_capacity_inequality, check_pair,
    property_bound, PairProperty,
};
use ssmin::{SetFunctionOracle, Subset};

const TOL: f64 = 1e-9;
const ALPHAS: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];
const CORPUS_SIZE: u64 = 105;

type Outcome = Result<String, String>;
type Criterion<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn corpus() -> Vec<GraphCutFunction> {
    (0..CORPUS_SIZE)
        .map(|seed| random_graph(4 + (seed % 7) as usize, 0.4, 10, seed).expect("valid graph"))
        .collect()
}

fn optimality(corpus: &[GraphCutFunction]) -> Outcome {
    let mut runs = 0;
    for (seed, g) in corpus.iter().enumerate() {
        let (_, best) = brute_force_min(g).map_err(|e| e.to_string())?;
        for alpha in ALPHAS {
            let r = opt_set(g, alpha).map_err(|e| e.to_string())?;
            if r.value != best {
                return Err(format!(
                    "seed {seed} n={} alpha={alpha}: opt_set {} vs brute force {best}",
                    g.n(),
                    r.value
                ));
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} runs on {} graphs, all exact", corpus.len()))
}

fn last_pair_holds(
    g: &GraphCutFunction,
    alpha: f64,
    property: PairProperty,
) -> Result<bool, String> {
    let ord = build_alpha_ordering(g, alpha).map_err(|e| e.to_string())?;
    let (u, v) = ord.last_pair().map_err(|e| e.to_string())?;
    Ok(check_pair(g, u, v, property)
        .map_err(|e| e.to_string())?
        .holds)
}

fn pair_and_inequality_suites(corpus: &[GraphCutFunction]) -> Outcome {
    let mut checks = 0;
    for (seed, g) in corpus.iter().enumerate() {
        let fixed = [
            (-1.0, PairProperty::Pendent),
            (1.0, PairProperty::Flat),
            (0.0, PairProperty::Contractible),
        ];
        let grid = ALPHAS.iter().map(|&a| (a, PairProperty::Contractible));
        for (alpha, property) in fixed.into_iter().chain(grid) {
            if !last_pair_holds(g, alpha, property)? {
                return Err(format!(
                    "seed {seed} alpha={alpha}: last pair not {property}"
                ));
            }
            checks += 1;
        }
        for alpha in ALPHAS {
            let ord = build_alpha_ordering(g, alpha).map_err(|e| e.to_string())?;
            if let Some(v) = check_alpha_inequality(g, &ord, alpha).map_err(|e| e.to_string())? {
                return Err(format!("seed {seed} alpha={alpha}: {} < {}", v.lhs, v.rhs));
            }
            checks += 1;
        }
    }
    for seed in 0..CORPUS_SIZE {
        let f = random_coverage(4 + (seed % 7) as usize, 8, seed).map_err(|e| e.to_string())?;
        let ord = build_mc(&f).map_err(|e| e.to_string())?;
        if let Some(v) = check_min_capacity_inequality(&f, &ord).map_err(|e| e.to_string())? {
            return Err(format!("coverage seed {seed}: {} < {}", v.lhs, v.rhs));
        }
        checks += 1;
    }
    Ok(format!("{checks} checks, zero violations"))
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= TOL
}

/// Reproduces one counterexample: the ordering ends in the expected pair and
/// the witness breaks the property by the expected amounts.
fn reproduce(
    label: &str,
    inst: &CounterexampleInstance,
    expected_value: f64,
    expected_bound: f64,
) -> Result<(), String> {
    let g = &inst.graph;
    let ord = build_alpha_ordering(g, inst.alpha).map_err(|e| e.to_string())?;
    let (a, b) = ord.last_pair().map_err(|e| e.to_string())?;
    if (a.min(b), a.max(b)) != inst.expected_last_pair {
        return Err(format!("{label}: last pair ({a},{b})"));
    }
    let singletons: Vec<f64> = (0..g.n())
        .map(|v| g.compute(&Subset::singleton(g.n(), v)).unwrap())
        .collect();
    let value = g.compute(&inst.witness).map_err(|e| e.to_string())?;
    let bound = property_bound(inst.violated_property, (a, b), &inst.witness, &singletons);
    if !close(value, expected_value) || !close(bound, expected_bound) {
        return Err(format!(
            "{label}: f(X)={value} bound={bound}, expected {expected_value} vs {expected_bound}"
        ));
    }
    if check_pair(g, a, b, inst.violated_property)
        .map_err(|e| e.to_string())?
        .holds
    {
        return Err(format!(
            "{label}: pair unexpectedly {}",
            inst.violated_property
        ));
    }
    Ok(())
}

fn counterexamples() -> Outcome {
    let err = |e: ssmin::Error| e.to_string();

    let a = counterexample_contractible(2.0).map_err(err)?;
    let ord = build_alpha_ordering(&a.graph, 2.0).map_err(err)?;
    if ord.sequence() != [0, 1, 2, 3] {
        return Err(format!("(a) ordering {:?}", ord.sequence()));
    }
    if a.graph.ground().format_subset(&a.witness) != "{p1, p4}" {
        return Err("(a) witness".into());
    }
    reproduce("(a)", &a, 2.0 / 3.0, 1.0)?;

    let b = counterexample_contractible(-1.5).map_err(err)?;
    if b.expected_last_pair != (3, 4) {
        return Err("(b) expected pair".into());
    }
    reproduce("(b)", &b, 2.0, 3.0)?;

    let c = counterexample_contractible(-3.0).map_err(err)?;
    let profile: Vec<f64> = (0..5)
        .map(|v| c.graph.evaluate_singleton(v).unwrap())
        .collect();
    if profile != [10.0, 7.0, 6.0, 4.0, 3.0] {
        return Err(format!("(c) singleton profile {profile:?}"));
    }
    reproduce("(c)", &c, 2.0, 3.0)?;

    let d = counterexample_pendent(0.0).map_err(err)?;
    reproduce("(d)", &d, 2.0, 3.0)?;

    let e = counterexample_flat(0.0).map_err(err)?;
    reproduce("(e)", &e, 2.0, 3.0)?;

    Ok("(a)-(e) reproduced".into())
}

fn scaling() -> Outcome {
    let mut points = Vec::new();
    for n in [8, 16, 32, 64] {
        let g = cycle_graph(n).map_err(|e| e.to_string())?;
        let r = opt_set(&g, 0.0).map_err(|e| e.to_string())?;
        if r.value != 2.0 {
            return Err(format!("cycle n={n}: value {}", r.value));
        }
        points.push((n as f64, r.oracle_calls as f64));
    }
    let slope = loglog_slope(&points).ok_or("no slope")?;
    let table: Vec<String> = points.iter().map(|(n, c)| format!("{n}:{c}")).collect();
    let summary = format!("slope {slope:.3} ({})", table.join(" "));
    if (2.5..=3.2).contains(&slope) {
        Ok(summary)
    } else {
        Err(summary)
    }
}

fn budget() -> Outcome {
    let mut worst = 0u64;
    for n in 2..=40 {
        let g = cycle_graph(n).map_err(|e| e.to_string())?;
        for alpha in ALPHAS.iter().chain(&[-3.0, 2.0]) {
            g.reset_calls();
            build_alpha_ordering(&g, *alpha).map_err(|e| e.to_string())?;
            let calls = g.calls();
            if calls > call_budget(n) {
                return Err(format!("n={n} alpha={alpha}: {calls} > {}", call_budget(n)));
            }
            worst = worst.max(calls);
        }
    }
    for seed in 0..20u64 {
        let g = random_graph(10, 0.5, 10, seed).map_err(|e| e.to_string())?;
        for ord in [build_ma(&g), build_mc(&g), build_md(&g)] {
            let ord = ord.map_err(|e| e.to_string())?;
            if ord.eval_count() > call_budget(10) {
                return Err(format!("seed {seed}: {}", ord.eval_count()));
            }
        }
    }
    Ok(format!("n in 2..=40 within budget, max {worst} calls"))
}

fn cross_formula() -> Outcome {
    let mut pairs = 0;
    for seed in 0..50u64 {
        let n = 2 + (seed % 7) as usize;
        let g = random_graph(n, 0.5, 10, 1000 + seed).map_err(|e| e.to_string())?;
        for w in all_subsets(n) {
            for y in (0..n).filter(|&y| !w.contains(y)) {
                let adj = adjacency(&g, &w, y).map_err(|e| e.to_string())?;
                let deg = residual_degree(&g, &w, y).map_err(|e| e.to_string())?;
                let adj_cut = adjacency_via_cut(&g, &w, y).map_err(|e| e.to_string())?;
                let deg_cut = residual_degree_via_cut(&g, &w, y).map_err(|e| e.to_string())?;
                if !close(adj, adj_cut) || !close(deg, deg_cut) {
                    return Err(format!("seed {seed} W={w:?} y={y}"));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} (W, y) pairs agree"))
}

fn main() -> ExitCode {
    let corpus = corpus();
    let criteria: [(&str, Criterion); 6] = [
        (
            "1 optimality vs brute force",
            Box::new(|| optimality(&corpus)),
        ),
        (
            "2 pair and inequality suites",
            Box::new(|| pair_and_inequality_suites(&corpus)),
        ),
        ("3 counterexample reproduction", Box::new(counterexamples)),
        ("4 call-count scaling", Box::new(scaling)),
        ("5 ordering call budget", Box::new(budget)),
        ("6 adjacency/degree formulas", Box::new(cross_formula)),
    ];
    let mut failed = 0;
    for (name, run) in &criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} [{secs:.2}s]"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail} [{secs:.2}s]");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

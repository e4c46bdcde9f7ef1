use std::fs;
use std::path::Path;

use kconn_core::connectivity::vertex_connectivity;
use kconn_core::constructions::{
    build_family_member, construct_case1, construct_case2, BoundProxy, CaseChoice, ConstructionParams, Family,
};
use kconn_core::generate::{gen_colouring, gen_digraph, Distribution};
use kconn_core::proof::{
    case1_strategy, case2_strategy, digraph_colouring, StrategyOptions, StrategyOutcome,
};
use kconn_core::ramsey::{arrows_with, ramsey_number, SearchLimits};
use kconn_core::{parse_graph6, Digraph, Graph, RamseyValue, TwoColouring};
use serde_json::{json, Value};

use crate::args::*;
use crate::report::{CliError, Report, EXIT_ASSERTION, EXIT_CAPACITY};

type Outcome = Result<Report, CliError>;

pub fn run(cmd: &Command) -> Outcome {
    match cmd {
        Command::Construct(a) => construct(a),
        Command::Kappa(a) => kappa(a),
        Command::Arrows(a) => arrows(a),
        Command::Ramsey(a) => ramsey(a),
        Command::Strategy(a) => strategy(a),
        Command::ColorDigraph(a) => color_digraph(a),
        Command::GenColoring(a) => gen_coloring(a),
    }
}

/// Contents of `arg` if it names an existing file, else `arg` itself; in
/// either case the first non-blank line.
fn inline_or_file(arg: &str) -> Result<String, CliError> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        fs::read_to_string(path).map_err(|e| CliError::io(path, e))?
    } else {
        arg.into()
    };
    Ok(text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("").to_string())
}

fn graph_arg(arg: &str) -> Result<Graph, CliError> {
    Ok(parse_graph6(&inline_or_file(arg)?)?)
}

fn write_line(path: &Path, line: &str) -> Result<(), CliError> {
    fs::write(path, format!("{line}\n")).map_err(|e| CliError::io(path, e))
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::Biclique => "biclique",
        Family::Clique => "clique",
    }
}

fn list(vs: &[usize]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn construct(a: &ConstructArgs) -> Outcome {
    let (graph, params, proxy) = match (a.t, a.f) {
        (Some(t), _) => {
            let family = match a.case {
                CaseArg::One => Family::Biclique,
                CaseArg::Two => Family::Clique,
                CaseArg::Auto => return Err(CliError::Param("--t needs an explicit --case 1 or 2".into())),
            };
            let p = ConstructionParams::new(a.n, t, a.k, family)?;
            let g = match family {
                Family::Biclique => construct_case1(&p)?,
                Family::Clique => construct_case2(&p)?,
            };
            (g, p, None)
        }
        (None, Some(f)) => {
            let proxy = match a.proxy {
                ProxyArg::Exp => BoundProxy::ExpLower,
                ProxyArg::Exact => BoundProxy::Exact { cap: a.cap },
            };
            let choice = match a.case {
                CaseArg::Auto => CaseChoice::Auto,
                CaseArg::One => CaseChoice::Biclique,
                CaseArg::Two => CaseChoice::Clique,
            };
            let m = build_family_member(a.n, a.k, f, proxy, choice)?;
            (m.graph, m.params, Some((m.proxy, m.proxy_t)))
        }
        (None, None) => unreachable!("clap requires --f or --t"),
    };
    let cert = vertex_connectivity(&graph)?;
    let code = kconn_core::serialize_graph6(&graph);
    if let Some(out) = &a.out {
        write_line(out, &code)?;
    }

    let mut r = Report::new();
    r.field("family", family_name(params.family), family_name(params.family))
        .field("n", params.n, params.n)
        .field("t", params.t, params.t)
        .field("k", params.k, params.k)
        .field("hub", params.hub.clone(), list(&params.hub))
        .field("pendants", params.pendant_count(), params.pendant_count())
        .field("edges", graph.edge_count(), graph.edge_count())
        .field("kappa", cert.kappa, cert.kappa);
    match proxy {
        Some((p, t)) => {
            let shown = match p {
                BoundProxy::ExpLower => "exp".to_string(),
                BoundProxy::Exact { cap } => format!("exact (cap {cap})"),
            };
            r.field("proxy", serde_json::to_value(p).expect("proxy serialises"), shown)
                .field("proxy_t", t, t);
        }
        None => {
            r.json_only("proxy", Value::Null);
        }
    }
    r.field("graph6", code.clone(), code);
    Ok(r)
}

fn kappa(a: &KappaArgs) -> Outcome {
    let g = graph_arg(&a.input)?;
    let cert = vertex_connectivity(&g)?;
    let mut r = Report::new();
    r.field("n", g.order(), g.order())
        .field("edges", g.edge_count(), g.edge_count())
        .field("kappa", cert.kappa, cert.kappa)
        .field("cut", cert.cut.clone(), cert.cut.as_deref().map_or("none (complete)".into(), list))
        .field(
            "witness_pair",
            cert.witness_pair.map(|(s, t)| vec![s, t]),
            cert.witness_pair.map_or("-".into(), |(s, t)| format!("{s} {t}")),
        )
        .field("certificate_valid", cert.validate(&g), cert.validate(&g));
    if let Some(k) = a.assert_k {
        r.field("assert_k", k, k);
        if cert.kappa != k {
            r.fail(EXIT_ASSERTION, format!("assertion failed: kappa = {}, expected {k}", cert.kappa));
        }
    }
    Ok(r)
}

fn arrows(a: &ArrowsArgs) -> Outcome {
    let red = graph_arg(&a.pattern)?;
    let blue = match &a.pattern2 {
        Some(p) => graph_arg(p)?,
        None => red.clone(),
    };
    let res = arrows_with(a.n, &red, &blue, &SearchLimits { max_order: a.cap })?;
    let witness = res.witness.as_ref().map(TwoColouring::encode);
    let mut r = Report::new();
    r.field("n", a.n, a.n).field("holds", res.holds, res.holds).field(
        "witness",
        witness.clone(),
        witness.unwrap_or_else(|| "-".into()),
    );
    Ok(r)
}

fn ramsey(a: &RamseyArgs) -> Outcome {
    let g = graph_arg(&a.pattern)?;
    let mut r = Report::new();
    match ramsey_number(&g, a.cap)? {
        RamseyValue::Exact { value, witness } => {
            let w = witness.as_ref().map(TwoColouring::encode);
            r.field("value", value, value).field("witness", w.clone(), w.unwrap_or_else(|| "-".into()));
        }
        RamseyValue::OverCap { cap, witness_order, witness } => {
            let w = witness.encode();
            r.field("over_cap", true, true)
                .field("cap", cap, cap)
                .field("lower_bound", witness_order + 1, format!(">= {}", witness_order + 1))
                .field("witness", w.clone(), w)
                .fail(EXIT_CAPACITY, format!("value exceeds the cap of {cap}"));
        }
    }
    Ok(r)
}

fn strategy(a: &StrategyArgs) -> Outcome {
    let c = TwoColouring::decode(&inline_or_file(&a.colouring)?)?;
    let mut opts = if a.case == "1" { StrategyOptions::case1() } else { StrategyOptions::case2() };
    if let Some(eps) = a.epsilon {
        opts.epsilon = eps;
    }
    let report = if a.case == "1" {
        case1_strategy(&c, a.n, a.t, a.k, &opts)?
    } else {
        case2_strategy(&c, a.n, a.t, a.k, &opts)?
    };
    let stages = serde_json::to_value(&report.stages).expect("stage records serialise");
    if let Some(path) = &a.trace {
        write_line(path, &serde_json::to_string_pretty(&stages).expect("JSON values serialise"))?;
    }

    let mut r = Report::new();
    r.field("case", a.case.parse::<u64>().expect("validated by clap"), &a.case)
        .field("N", c.order(), c.order())
        .field("n", a.n, a.n)
        .field("t", a.t, a.t)
        .field("k", a.k, a.k)
        .field("epsilon", opts.epsilon.to_string(), opts.epsilon);
    match &report.outcome {
        StrategyOutcome::Found(e) => {
            r.field("outcome", "found", "FOUND").field("colour", e.colour.to_string(), e.colour).field(
                "map",
                e.map.clone(),
                list(&e.map),
            );
        }
        StrategyOutcome::Exhausted { stage, diagnostics } => {
            r.field("outcome", "exhausted", "EXHAUSTED")
                .field("stage", *stage, stage)
                .field("diagnostics", diagnostics.clone(), diagnostics)
                .fail(EXIT_ASSERTION, format!("no copy found (stage {stage})"));
        }
    }
    r.field("stages", stages, report.stages.iter().map(|s| s.stage).collect::<Vec<_>>().join(" > "));
    Ok(r)
}

/// Independent audit of a digraph colouring: proper on the underlying graph,
/// at most `2Δ + 1` colours, and at most `2Δ` neighbours before each vertex
/// in the greedy order.
fn audit_colouring(d: &Digraph, colours: &[usize], order: &[usize], count: usize) -> Vec<String> {
    let delta = d.max_in_degree();
    let mut problems = Vec::new();
    for (u, v) in d.arcs() {
        if colours[u] == colours[v] {
            problems.push(format!("arc {u} -> {v} is monochromatic"));
        }
    }
    if count > 2 * delta + 1 {
        problems.push(format!("{count} colours exceed 2*{delta}+1"));
    }
    let mut pos = vec![0; d.order()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in order {
        let mut around = d.out_neighbours(v).clone();
        around.union_with(d.in_neighbours(v));
        let earlier = around.iter().filter(|&w| pos[w] < pos[v]).count();
        if earlier > 2 * delta {
            problems.push(format!("vertex {v} has {earlier} earlier neighbours"));
        }
    }
    problems
}

fn color_digraph(a: &ColorDigraphArgs) -> Outcome {
    let d = match (&a.input, a.random) {
        (Some(path), _) => {
            Digraph::parse_text(&fs::read_to_string(path).map_err(|e| CliError::io(path, e))?)?
        }
        (None, Some(n)) => gen_digraph(n, a.max_in, a.seed),
        (None, None) => unreachable!("clap requires --in or --random"),
    };
    let col = digraph_colouring(&d);
    let problems = audit_colouring(&d, &col.colours, &col.order, col.colour_count);
    let largest = col.classes().iter().map(Vec::len).max().unwrap_or(0);

    let mut r = Report::new();
    r.field("n", d.order(), d.order())
        .field("arcs", d.arc_count(), d.arc_count())
        .field("max_in_degree", col.max_in_degree, col.max_in_degree)
        .field("colour_count", col.colour_count, col.colour_count)
        .field("largest_class", largest, largest)
        .field("colours", col.colours.clone(), list(&col.colours))
        .json_only("order", col.order.clone())
        .field(
            "checks",
            json!({ "passed": problems.is_empty(), "problems": problems }),
            if problems.is_empty() { "passed".to_string() } else { problems.join("; ") },
        );
    if !problems.is_empty() {
        r.fail(EXIT_ASSERTION, "colouring audit failed");
    }
    Ok(r)
}

fn gen_coloring(a: &GenColoringArgs) -> Outcome {
    let (dist, name) = match a.dist {
        DistArg::Uniform => (Distribution::Uniform(a.p), "uniform"),
        DistArg::AllRed => (Distribution::AllRed, "all-red"),
        DistArg::AllBlue => (Distribution::AllBlue, "all-blue"),
        DistArg::Pentagon => (Distribution::PentagonLike, "pentagon"),
    };
    let c = gen_colouring(a.n, dist, a.seed)?;
    let line = c.encode();
    if let Some(out) = &a.out {
        write_line(out, &line)?;
    }
    let mut r = Report::new();
    r.json_only("n", a.n)
        .json_only("dist", name)
        .json_only("seed", a.seed)
        .json_only("red_edges", c.red_edge_count())
        .json_only("colouring", line.clone())
        .plain(line);
    if let DistArg::Uniform = a.dist {
        r.json_only("p", a.p.to_string());
    }
    Ok(r)
}

//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each export returns a JSON string. The `*_json` functions hold the logic
//! and are plain Rust so they can be tested natively; the exported wrappers
//! only convert errors into JavaScript exceptions.

use serde::Serialize;
use trifree::bounds::{bound_report, envelope_constant, f_alpha, f_max, BoundReport};
use trifree::constructions::NamedGraph;
use trifree::io::decode_graph6;
use trifree::spectral::{spectrum, Cluster};
use trifree::srg::{
    enumerate_feasible, existence_of, feasibility, srg_eigen, srg_recognize, theorem2_chain, ChainVerdict, SrgParams,
    Tier,
};
use trifree::Graph;
use wasm_bindgen::prelude::*;

/// Largest order accepted from the page; keeps the dense solver interactive.
pub const WEB_MAX_N: usize = 400;
/// Largest `n_max` for the table view.
pub const WEB_TABLE_MAX_N: u32 = 2000;

#[derive(Serialize)]
struct GraphView {
    n: usize,
    edges: usize,
    triangle_free: bool,
    spectrum: Vec<f64>,
    clusters: Vec<Cluster>,
    ratio: f64,
    envelope: f64,
    srg: Option<String>,
    exact_ratio: Option<String>,
    bounds: Option<BoundReport>,
}

fn load(input: &str) -> Result<Graph, String> {
    let input = input.trim();
    let g = match input.strip_prefix("named:") {
        Some(name) => name.parse::<NamedGraph>().and_then(NamedGraph::build),
        None => decode_graph6(input),
    }
    .map_err(|e| e.to_string())?;
    if g.n() > WEB_MAX_N {
        return Err(format!("the demo accepts at most {WEB_MAX_N} vertices, got {}", g.n()));
    }
    Ok(g)
}

/// Spectrum, ratio and bound report of `named:NAME` or a graph6 string.
pub fn analyze_json(input: &str) -> Result<String, String> {
    let g = load(input)?;
    let s = spectrum(&g).map_err(|e| e.to_string())?;
    let triangle_free = g.is_triangle_free();
    let params = srg_recognize(&g).params();
    let view = GraphView {
        n: g.n(),
        edges: g.edge_count(),
        triangle_free,
        ratio: (s.mu1() + s.mun()) / g.n() as f64,
        envelope: envelope_constant(),
        srg: params.map(|p| p.to_string()),
        exact_ratio: params.and_then(|p| srg_eigen(p).ok().map(|e| e.ratio(p).to_string())),
        bounds: triangle_free.then(|| bound_report(&g, &s)),
        clusters: s.clusters(),
        spectrum: s.values,
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct Curve {
    alpha: Vec<f64>,
    value: Vec<f64>,
    argmax: f64,
    max: f64,
}

/// `samples` evenly spaced points of `f` on `[0, 0.5]`, plus its maximum.
pub fn f_curve_json(samples: usize) -> Result<String, String> {
    if !(2..=10_000).contains(&samples) {
        return Err(format!("samples must lie in 2..=10000, got {samples}"));
    }
    let alpha: Vec<f64> = (0..samples).map(|i| 0.5 * i as f64 / (samples - 1) as f64).collect();
    let value = alpha
        .iter()
        .map(|&a| f_alpha(a).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let m = f_max();
    serde_json::to_string(&Curve {
        alpha,
        value,
        argmax: m.argmax,
        max: m.value,
    })
    .map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct CheckView {
    params: String,
    feasible_basic: bool,
    failed: Vec<&'static str>,
    eigenvalues: Option<String>,
    ratio: Option<String>,
    ratio_approx: Option<f64>,
    triggered: Option<bool>,
    inertia: Option<String>,
    existence: &'static str,
    verdict: String,
}

/// Feasibility, eigenvalues and threshold chain for `(n, k, a, b)`.
pub fn srg_check_json(n: u32, k: u32, a: u32, b: u32) -> Result<String, String> {
    let p = SrgParams::new(n, k, a, b);
    let report = feasibility(p, Tier::Extended);
    let chain = theorem2_chain(p).ok();
    let failed: Vec<&'static str> = report.failed().map(|c| c.name).collect();
    let verdict = if !report.basic_pass {
        "infeasible".to_string()
    } else if chain.as_ref().is_some_and(|c| c.verdict.implies_nonexistence()) || !failed.is_empty() {
        "no such graph".to_string()
    } else if chain
        .as_ref()
        .is_some_and(|c| c.verdict == ChainVerdict::TriggeredConsistent)
    {
        "feasible; above the threshold".to_string()
    } else {
        "feasible".to_string()
    };
    let ratio = report.eigen.map(|e| e.ratio(p));
    let view = CheckView {
        params: p.to_string(),
        feasible_basic: report.basic_pass,
        failed,
        eigenvalues: report
            .eigen
            .map(|e| format!("{k}^1, {}^{}, {}^{}", e.theta1, e.m1, e.theta2, e.m2)),
        ratio: ratio.map(|r| r.to_string()),
        ratio_approx: ratio.map(|r| r.to_f64()),
        triggered: chain.as_ref().map(|c| c.triggered),
        inertia: chain.as_ref().filter(|c| c.inertia.applicable).map(|c| {
            let mark = if c.inertia.ok { "holds" } else { "fails" };
            format!("m2 = {} >= k = {} {mark}", c.inertia.m_neg, c.inertia.k)
        }),
        existence: existence_of(p).0.label(),
        verdict,
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct TableEntry {
    params: String,
    ratio: String,
    ratio_approx: f64,
    existence: &'static str,
}

/// Feasible `(n, k, 0, b)` rows up to `n_max` in the chosen tier.
pub fn srg_table_json(n_max: u32, extended: bool) -> Result<String, String> {
    if n_max > WEB_TABLE_MAX_N {
        return Err(format!("the demo enumerates up to n = {WEB_TABLE_MAX_N}"));
    }
    let tier = if extended { Tier::Extended } else { Tier::Basic };
    let rows = enumerate_feasible(n_max, tier).map_err(|e| e.to_string())?;
    let entries: Vec<TableEntry> = rows
        .iter()
        .map(|r| TableEntry {
            params: r.params.to_string(),
            ratio: r.ratio.to_string(),
            ratio_approx: r.ratio_approx,
            existence: r.existence.label(),
        })
        .collect();
    serde_json::to_string(&entries).map_err(|e| e.to_string())
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn analyze(input: &str) -> Result<String, JsError> {
    js(analyze_json(input))
}

#[wasm_bindgen]
pub fn f_curve(samples: usize) -> Result<String, JsError> {
    js(f_curve_json(samples))
}

#[wasm_bindgen]
pub fn srg_check(n: u32, k: u32, a: u32, b: u32) -> Result<String, JsError> {
    js(srg_check_json(n, k, a, b))
}

#[wasm_bindgen]
pub fn srg_table(n_max: u32, extended: bool) -> Result<String, JsError> {
    js(srg_table_json(n_max, extended))
}

#[wasm_bindgen]
pub fn named_graphs() -> String {
    let names: Vec<&str> = NamedGraph::ALL.iter().map(|g| g.name()).collect();
    serde_json::to_string(&names).expect("names serialise")
}

//! Subcommand implementations. Each returns the full rendered output.

use std::fmt::Write;
use std::path::Path;

use serde::Serialize;
use trifree::bounds::{bound_report_with_tol, envelope_constant, f_max, hoffman_delsarte, BoundReport, FMax};
use trifree::constructions::NamedGraph;
use trifree::explorer::{random_search, scan_all, ScanOptions, ScanReport};
use trifree::independence::independence_number;
use trifree::io::{decode_graph6, encode_graph6, parse_edge_list, GRAPH6_MAX_N};
use trifree::spectral::{spectrum, trace_identity_report, Cluster, TraceReport};
use trifree::srg::{
    annotate, compare_with_published, enumerate_feasible, existence_of, feasibility, published_table, render_table,
    srg_eigen, srg_recognize, theorem2_chain, ChainReport, ChainVerdict, Condition, FeasibilityReport, PublishedDiff,
    SrgEigenData, SrgParams, TableFormat, Tier,
};
use trifree::surd::Surd;
use trifree::{DegreeStats, Error, Graph, Result};

use crate::output::{csv_line, json, num, KeyValues};
use crate::{Cli, Command, Format, Rendered};

pub fn run(cli: &Cli) -> Result<Rendered> {
    match &cli.command {
        Command::Analyze { input } => analyze(cli, input),
        Command::SrgTable {
            n_max,
            tier,
            diff_paper,
        } => srg_table(cli, *n_max, (*tier).into(), *diff_paper),
        Command::SrgCheck { n, k, a, b, tier } => srg_check(cli, SrgParams::new(*n, *k, *a, *b), (*tier).into()),
        Command::Scan { n, allow_n8 } => {
            let report = scan_all(*n, ScanOptions { allow_n8: *allow_n8 })?;
            Ok(scan_output(cli, "scan", report))
        }
        Command::Search { n, iters, seed } => Ok(scan_output(cli, "search", random_search(*n, *iters, *seed)?)),
        Command::Named { name: Some(name), .. } => named_graph(cli, name),
        Command::Named { name: None, .. } => named_list(cli),
        Command::Fmax => Ok(fmax(cli)),
    }
}

fn ok(text: String) -> Rendered {
    Rendered { text, violation: false }
}

/// `named:NAME`, a path to an edge-list or graph6 file, or a graph6 string.
fn load_graph(input: &str) -> Result<Graph> {
    if let Some(name) = input.strip_prefix("named:") {
        return name.parse::<NamedGraph>()?.build();
    }
    let path = Path::new(input);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Domain(format!("{input}: {e}")))?;
        let lines: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        return match lines.as_slice() {
            [single] if !single.contains(char::is_whitespace) => decode_graph6(single),
            _ => parse_edge_list(&text),
        };
    }
    decode_graph6(input)
}

#[derive(Serialize)]
struct SrgSummary {
    params: SrgParams,
    theta1: Surd,
    theta2: Surd,
    m1: u64,
    m2: u64,
    ratio: Surd,
}

#[derive(Serialize)]
struct IndependenceSummary {
    size: usize,
    exact: bool,
    expansions: u64,
}

#[derive(Serialize)]
struct AnalyzeDoc {
    source: String,
    n: usize,
    edges: usize,
    graph6: Option<String>,
    triangles: u64,
    triangle_free: bool,
    bipartite: bool,
    connected: bool,
    degree: DegreeStats,
    spectrum: Vec<f64>,
    clusters: Vec<Cluster>,
    trace: TraceReport,
    ratio: f64,
    bounds: Option<BoundReport>,
    srg: Option<SrgSummary>,
    independence: IndependenceSummary,
    hoffman_bound: Option<f64>,
}

fn cluster_text(clusters: &[Cluster]) -> String {
    clusters
        .iter()
        .map(|c| format!("{}^{}", num(c.value), c.multiplicity))
        .collect::<Vec<_>>()
        .join(", ")
}

fn analyze(cli: &Cli, input: &str) -> Result<Rendered> {
    let g = load_graph(input)?;
    let s = spectrum(&g)?;
    let trace = trace_identity_report(&g, &s);
    let triangle_free = g.is_triangle_free();
    let bounds = triangle_free.then(|| bound_report_with_tol(&g, &s, cli.tol));
    let srg = srg_recognize(&g).params().and_then(|p| {
        let e = srg_eigen(p).ok()?;
        Some(SrgSummary {
            params: p,
            theta1: e.theta1,
            theta2: e.theta2,
            m1: e.m1,
            m2: e.m2,
            ratio: e.ratio(p),
        })
    });
    let mis = independence_number(&g, cli.budget);
    let degree = g.degree_stats()?;
    let doc = AnalyzeDoc {
        source: input.to_string(),
        n: g.n(),
        edges: g.edge_count(),
        graph6: (g.n() <= GRAPH6_MAX_N).then(|| encode_graph6(&g).ok()).flatten(),
        triangles: g.triangle_count(),
        triangle_free,
        bipartite: g.is_bipartite(),
        connected: g.is_connected(),
        degree,
        ratio: (s.mu1() + s.mun()) / g.n() as f64,
        clusters: s.clusters(),
        spectrum: s.values.clone(),
        trace,
        bounds,
        srg,
        independence: IndependenceSummary {
            size: mis.size,
            exact: mis.exact,
            expansions: mis.expansions,
        },
        hoffman_bound: degree.degree.filter(|&d| d > 0).and_then(|_| hoffman_delsarte(&g).ok()),
    };
    let violation = doc.bounds.as_ref().is_some_and(|b| !b.holds());
    if cli.format == Format::Json {
        return Ok(Rendered {
            text: json(&doc),
            violation,
        });
    }
    let mut kv = KeyValues::default();
    kv.push("source", &doc.source);
    kv.push("n", doc.n);
    kv.push("edges", doc.edges);
    if let Some(g6) = &doc.graph6 {
        kv.push("graph6", g6);
    }
    kv.push("triangles", doc.triangles);
    kv.push("bipartite", doc.bipartite);
    kv.push("connected", doc.connected);
    match doc.degree.degree {
        Some(d) => kv.push("degree", format!("{d} (regular)")),
        None => kv.push(
            "degree",
            format!("{}..{}", doc.degree.min_degree, doc.degree.max_degree),
        ),
    }
    if let Some(srg) = &doc.srg {
        kv.push("strongly regular", srg.params);
    }
    kv.push("spectrum", cluster_text(&doc.clusters));
    kv.push("mu1", num(s.mu1()));
    kv.push("mun", num(s.mun()));
    kv.push("ratio (mu1+mun)/n", num(doc.ratio));
    if let Some(srg) = &doc.srg {
        kv.push("exact ratio", srg.ratio);
    }
    let t = &doc.trace;
    kv.push("trace sum mu", format!("{} (target {})", num(t.sum1), num(t.target1)));
    kv.push("trace sum mu^2", format!("{} (target {})", num(t.sum2), num(t.target2)));
    kv.push("trace sum mu^3", format!("{} (target {})", num(t.sum3), num(t.target3)));
    match &doc.bounds {
        Some(b) => {
            let verdict = |holds: bool| if holds { "holds" } else { "VIOLATED" };
            kv.push(
                "lemma mu1 <= -n mun/(mu1-mun)",
                format!(
                    "{} <= {} {}",
                    num(b.lemma_lhs),
                    num(b.lemma_rhs),
                    verdict(b.lemma_holds)
                ),
            );
            kv.push(
                "theorem mu1+mun <= (3-2√2)n",
                format!(
                    "{} <= {} {}",
                    num(b.mu1 + b.mun),
                    num(b.theorem_bound),
                    verdict(b.theorem_holds())
                ),
            );
        }
        None => kv.push("bounds", "not applicable: the graph has a triangle"),
    }
    let exact = if doc.independence.exact {
        "exact"
    } else {
        "lower bound, budget exhausted"
    };
    kv.push("independence number", format!("{} ({exact})", doc.independence.size));
    if let Some(h) = doc.hoffman_bound {
        kv.push("ratio bound on alpha", num(h));
    }
    Ok(Rendered {
        text: kv.render(cli.format),
        violation,
    })
}

fn table_format(f: Format) -> TableFormat {
    match f {
        Format::Text => TableFormat::Text,
        Format::Csv => TableFormat::Csv,
        Format::Json => TableFormat::Json,
    }
}

fn diff_text(diff: &PublishedDiff) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "\nComparison with the published table");
    let _ = writeln!(s, "published rows: {}", diff.published_rows);
    let _ = writeln!(s, "computed rows: {}", diff.computed_rows);
    let _ = writeln!(s, "rows matching n,k,b,theta1,theta2: {}", diff.matched);
    for p in &diff.missing {
        let _ = writeln!(s, "missing: {p}");
    }
    for m in &diff.mismatches {
        let kind = if m.published_self_consistent {
            ""
        } else {
            " [printed row is self-inconsistent]"
        };
        let _ = writeln!(
            s,
            "mismatch {} {}: printed {}, computed {}; {}{kind}",
            m.params, m.field, m.published, m.computed, m.note
        );
    }
    for e in &diff.extras {
        if e.open {
            let _ = writeln!(s, "extra {}: passes every extended condition; open", e.params);
        } else {
            let _ = writeln!(s, "extra {}: removed by {}", e.params, e.eliminated_by.join(", "));
        }
    }
    if diff.extras.is_empty() {
        let _ = writeln!(s, "extra rows: none");
    }
    for a in &diff.appr_notes {
        let _ = writeln!(
            s,
            "Appr. {}: printed {}, rounded {}, truncated {} (printed matches {})",
            a.params, a.published, a.rounded, a.truncated, a.published_matches
        );
    }
    s
}

fn srg_table(cli: &Cli, n_max: u32, tier: Tier, diff_paper: bool) -> Result<Rendered> {
    let mut rows = enumerate_feasible(n_max, tier)?;
    let format = table_format(cli.format);
    if !diff_paper {
        return Ok(ok(render_table(&rows, format)));
    }
    let published: Vec<_> = published_table().into_iter().filter(|r| r.params.n <= n_max).collect();
    let diff = compare_with_published(&rows, &published);
    annotate(&mut rows, &diff);
    let table = render_table(&rows, format);
    let text = match cli.format {
        Format::Text => table + &diff_text(&diff),
        Format::Csv => table,
        Format::Json => {
            let mut doc: serde_json::Value = serde_json::from_str(&table).expect("table JSON parses");
            doc["diff"] = serde_json::to_value(&diff).expect("diff serialises");
            json(&doc)
        }
    };
    Ok(ok(text))
}

#[derive(Serialize)]
struct SrgCheckDoc {
    params: SrgParams,
    tier: Tier,
    feasible: bool,
    conditions: Vec<Condition>,
    eigen: Option<SrgEigenData>,
    ratio: Option<Surd>,
    existence: &'static str,
    existence_note: Option<&'static str>,
    chain: Option<ChainReport>,
    chain_skipped: Option<String>,
    verdict: String,
}

fn verdict_text(report: &FeasibilityReport, chain: Option<&ChainReport>, existence: &str) -> String {
    let failed = |tier: Tier| -> Vec<&str> { report.failed().filter(|c| c.tier == tier).map(|c| c.name).collect() };
    if !report.basic_pass {
        return format!("infeasible: fails {}", failed(Tier::Basic).join(", "));
    }
    let mut reasons: Vec<String> = failed(Tier::Extended)
        .into_iter()
        .map(|c| format!("fails {c}"))
        .collect();
    match chain.map(|c| (c.verdict, c)) {
        Some((ChainVerdict::InertiaContradiction, c)) => reasons.push(format!(
            "inertia contradiction (m2 = {} < k = {})",
            c.inertia.m_neg, c.inertia.k
        )),
        Some((ChainVerdict::ChainContradiction, _)) => reasons.push("threshold chain contradiction".into()),
        _ => {}
    }
    if !reasons.is_empty() {
        return format!("no such graph: {}", reasons.join("; "));
    }
    match chain.map(|c| c.verdict) {
        Some(ChainVerdict::TriggeredConsistent) => "feasible; ratio above 7/50 with a consistent chain".into(),
        _ => format!("feasible; existence {existence}"),
    }
}

fn srg_check(cli: &Cli, p: SrgParams, tier: Tier) -> Result<Rendered> {
    let report = feasibility(p, tier);
    let feasible = report.passed();
    let (chain, chain_skipped) = match theorem2_chain(p) {
        Ok(c) => (Some(c), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let (existence, note) = existence_of(p);
    let doc = SrgCheckDoc {
        params: p,
        tier,
        feasible,
        verdict: verdict_text(&report, chain.as_ref(), existence.label()),
        conditions: report.conditions.clone(),
        ratio: report.eigen.map(|e| e.ratio(p)),
        eigen: report.eigen,
        existence: existence.label(),
        existence_note: note,
        chain,
        chain_skipped,
    };
    let text = match cli.format {
        Format::Json => json(&doc),
        Format::Csv => {
            let mut s = csv_line(&["condition", "tier", "passed", "detail"]);
            for c in &doc.conditions {
                let tier = match c.tier {
                    Tier::Basic => "basic",
                    Tier::Extended => "extended",
                };
                s.push_str(&csv_line(&[c.name, tier, &c.passed.to_string(), &c.detail]));
            }
            s
        }
        Format::Text => srg_check_text(&doc),
    };
    Ok(ok(text))
}

fn srg_check_text(doc: &SrgCheckDoc) -> String {
    let mut s = format!("parameters {}\n", doc.params);
    for c in &doc.conditions {
        let mark = if c.passed { "pass" } else { "FAIL" };
        let _ = writeln!(s, "  {mark} {:<28} {}", c.name, c.detail);
    }
    if let (Some(e), Some(r)) = (&doc.eigen, &doc.ratio) {
        let _ = writeln!(
            s,
            "eigenvalues {}^1, {}^{}, {}^{}",
            doc.params.k, e.theta1, e.m1, e.theta2, e.m2
        );
        let _ = writeln!(s, "ratio (k+theta2)/n = {r} ≈ {}", num(r.to_f64()));
    }
    match (&doc.chain, &doc.chain_skipped) {
        (Some(c), _) => {
            let trigger = if c.triggered { "yes" } else { "no" };
            let _ = writeln!(s, "ratio > 7/50: {trigger}");
            for check in &c.checks {
                let mark = if check.holds { "holds" } else { "fails" };
                let _ = writeln!(
                    s,
                    "  {:<34} {} {} {} {mark}",
                    check.name, check.lhs, check.relation, check.rhs
                );
            }
            if c.inertia.applicable {
                let mark = if c.inertia.ok { "holds" } else { "fails" };
                let _ = writeln!(s, "inertia m2 >= k: {} >= {} {mark}", c.inertia.m_neg, c.inertia.k);
            } else {
                let _ = writeln!(s, "inertia m2 >= k: not applicable (theta1 <= 0)");
            }
        }
        (None, Some(reason)) => {
            let _ = writeln!(s, "threshold chain skipped: {reason}");
        }
        (None, None) => {}
    }
    match doc.existence_note {
        Some(note) if !note.is_empty() => {
            let _ = writeln!(s, "existence {} ({note})", doc.existence);
        }
        _ => {
            let _ = writeln!(s, "existence {}", doc.existence);
        }
    }
    let _ = writeln!(s, "verdict: {}", doc.verdict);
    s
}

#[derive(Serialize)]
struct ScanDoc<'a> {
    mode: &'a str,
    envelope: f64,
    within_envelope: bool,
    #[serde(flatten)]
    report: ScanReport,
}

fn scan_output(cli: &Cli, mode: &str, mut report: ScanReport) -> Rendered {
    if !cli.timing {
        report.runtime_secs = None;
    }
    let violation = !report.violation_free() || !report.within_envelope();
    let doc = ScanDoc {
        mode,
        envelope: envelope_constant(),
        within_envelope: report.within_envelope(),
        report,
    };
    if cli.format == Format::Json {
        return Rendered {
            text: json(&doc),
            violation,
        };
    }
    let r = &doc.report;
    let mut kv = KeyValues::default();
    kv.push("mode", mode);
    kv.push("n", r.n);
    kv.push("graphs visited", r.graphs_scanned);
    kv.push("triangle-free graphs", r.triangle_free_count);
    kv.push("lemma violations", r.lemma_violations.len());
    kv.push("theorem violations", r.theorem_violations.len());
    kv.push("max ratio", num(r.max_ratio));
    kv.push("argmax graph6", &r.argmax_graph);
    kv.push("envelope 3-2√2", num(doc.envelope));
    if let Some(t) = r.runtime_secs {
        kv.push("runtime seconds", format!("{t:.3}"));
    }
    for c in r.lemma_violations.iter().chain(&r.theorem_violations) {
        kv.push("counterexample", format!("{} ratio {}", c.graph6, num(c.report.ratio)));
    }
    Rendered {
        text: kv.render(cli.format),
        violation,
    }
}

#[derive(Serialize)]
struct NamedRow {
    name: &'static str,
    params: SrgParams,
    exact_ratio: Surd,
    ratio: f64,
    graph6: String,
}

fn named_rows() -> Result<Vec<NamedRow>> {
    NamedGraph::ALL
        .into_iter()
        .map(|name| {
            let (n, k, a, b) = name.parameters();
            let params = SrgParams::new(n, k, a, b);
            let g = name.build()?;
            let s = spectrum(&g)?;
            Ok(NamedRow {
                name: name.name(),
                params,
                exact_ratio: srg_eigen(params)?.ratio(params),
                ratio: (s.mu1() + s.mun()) / g.n() as f64,
                graph6: encode_graph6(&g)?,
            })
        })
        .collect()
}

fn named_list(cli: &Cli) -> Result<Rendered> {
    let rows = named_rows()?;
    let text = match cli.format {
        Format::Json => json(&rows),
        Format::Csv => {
            let mut s = csv_line(&["name", "n", "k", "a", "b", "exact_ratio", "ratio", "graph6"]);
            for r in &rows {
                let p = r.params;
                s.push_str(&csv_line(&[
                    r.name.to_string(),
                    p.n.to_string(),
                    p.k.to_string(),
                    p.a.to_string(),
                    p.b.to_string(),
                    r.exact_ratio.to_string(),
                    num(r.ratio),
                    r.graph6.clone(),
                ]));
            }
            s
        }
        Format::Text => {
            let mut s = format!(
                "{:<18} {:<16} {:<12} {}\n",
                "name", "(n,k,a,b)", "exact ratio", "computed ratio"
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{:<18} {:<16} {:<12} {}",
                    r.name,
                    r.params.to_string(),
                    r.exact_ratio.to_string(),
                    num(r.ratio)
                );
            }
            s
        }
    };
    Ok(ok(text))
}

fn named_graph(cli: &Cli, name: &str) -> Result<Rendered> {
    let row = named_rows()?
        .into_iter()
        .find(|r| r.name == name.parse::<NamedGraph>().map(NamedGraph::name).unwrap_or(""))
        .ok_or_else(|| Error::Domain(format!("unknown graph '{name}'")))?;
    let text = match cli.format {
        Format::Json => json(&row),
        Format::Csv => csv_line(&["name", "graph6"]) + &csv_line(&[row.name, row.graph6.as_str()]),
        Format::Text => format!("{}\n", row.graph6),
    };
    Ok(ok(text))
}

#[derive(Serialize)]
struct FMaxDoc {
    #[serde(flatten)]
    fmax: FMax,
    argmax_exact: &'static str,
    value_exact: &'static str,
    agreement: f64,
}

fn fmax(cli: &Cli) -> Rendered {
    let f = f_max();
    let doc = FMaxDoc {
        fmax: f,
        argmax_exact: "1-1/√2",
        value_exact: "3-2√2",
        agreement: f.agreement(),
    };
    if cli.format == Format::Json {
        return ok(json(&doc));
    }
    let mut kv = KeyValues::default();
    kv.push("argmax", format!("{:.15} (1-1/√2)", f.argmax));
    kv.push("value", format!("{:.15} (3-2√2)", f.value));
    kv.push("golden-section argmax", format!("{:.15}", f.search_argmax));
    kv.push("golden-section value", format!("{:.15}", f.search_value));
    kv.push("agreement", format!("{:.1e}", f.agreement()));
    ok(kv.render(cli.format))
}

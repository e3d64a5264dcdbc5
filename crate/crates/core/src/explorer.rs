//! Exhaustive and randomised checks of the eigenvalue bounds on
//! triangle-free graphs.
//!
//! `scan_all` walks every labelled graph on `n <= 8` vertices as a sequence
//! of edge decisions in graph6 pair order. An edge `(u, v)` is only added
//! when `N(u) ∩ N(v)` is empty; a rejected edge discards its whole subtree,
//! whose `2^(remaining pairs)` graphs all contain a triangle and are only
//! counted. Every surviving graph gets a full spectrum and bound report.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::bounds::{bound_report, envelope_constant, BoundReport, Counterexample, VERDICT_TOL};
use crate::constructions::{rng, triangle_free_process};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::encode_graph6;
use crate::spectral::spectrum;

/// Largest order accepted by [`scan_all`].
pub const SCAN_MAX_N: usize = 8;
/// Ratios closer than this count as ties; the earlier graph is kept.
const TIE_EPS: f64 = 1e-12;
/// Number of leading edge decisions that define one work chunk.
const CHUNK_DEPTH: usize = 10;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanReport {
    pub n: usize,
    pub graphs_scanned: u64,
    pub triangle_free_count: u64,
    pub lemma_violations: Vec<Counterexample>,
    pub theorem_violations: Vec<Counterexample>,
    pub max_ratio: f64,
    /// graph6 of the first graph attaining `max_ratio`.
    pub argmax_graph: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_secs: Option<f64>,
}

impl ScanReport {
    pub fn violation_free(&self) -> bool {
        self.lemma_violations.is_empty() && self.theorem_violations.is_empty()
    }

    /// `max_ratio <= 3 - 2√2 + VERDICT_TOL`.
    pub fn within_envelope(&self) -> bool {
        self.max_ratio <= envelope_constant() + VERDICT_TOL
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ScanOptions {
    /// `n = 8` visits 2^28 masks and is refused unless set.
    pub allow_n8: bool,
}

/// Partial result over one chunk. Merging in chunk order is what makes the
/// argmax independent of the worker count.
#[derive(Clone, Debug, Default)]
struct Partial {
    scanned: u64,
    triangle_free: u64,
    lemma: Vec<Counterexample>,
    theorem: Vec<Counterexample>,
    best: Option<(f64, String)>,
}

impl Partial {
    fn offer(&mut self, ratio: f64, g: impl FnOnce() -> String) {
        match &self.best {
            Some((b, _)) if ratio <= b + TIE_EPS => {}
            _ => self.best = Some((ratio, g())),
        }
    }

    fn check(&mut self, g: &Graph, report: BoundReport) {
        let ratio = report.ratio;
        if !report.lemma_holds {
            self.lemma.push(Counterexample::new(g, report.clone()));
        }
        if !report.theorem_holds() {
            self.theorem.push(Counterexample::new(g, report));
        }
        self.offer(ratio, || encode_graph6(g).expect("small graph encodes"));
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.scanned += other.scanned;
        self.triangle_free += other.triangle_free;
        self.lemma.extend(other.lemma);
        self.theorem.extend(other.theorem);
        if let Some((r, g)) = other.best {
            self.offer(r, || g);
        }
        self
    }
}

struct Walker {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl Walker {
    fn new(n: usize) -> Self {
        let pairs = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        Self { n, pairs }
    }

    fn evaluate(&self, adj: &[u8; SCAN_MAX_N], out: &mut Partial) -> Result<()> {
        let g = Graph::from_fn(self.n, |u, v| adj[u] >> v & 1 == 1);
        let s = spectrum(&g)?;
        out.scanned += 1;
        out.triangle_free += 1;
        out.check(&g, bound_report(&g, &s));
        Ok(())
    }

    fn walk(&self, idx: usize, adj: &mut [u8; SCAN_MAX_N], out: &mut Partial) -> Result<()> {
        if idx == self.pairs.len() {
            return self.evaluate(adj, out);
        }
        self.walk(idx + 1, adj, out)?;
        let (u, v) = self.pairs[idx];
        if adj[u] & adj[v] == 0 {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            self.walk(idx + 1, adj, out)?;
            adj[u] &= !(1 << v);
            adj[v] &= !(1 << u);
        } else {
            out.scanned += 1u64 << (self.pairs.len() - idx - 1);
        }
        Ok(())
    }

    /// Triangle-free adjacency states after the first `depth` decisions, in
    /// walk order, plus the number of masks pruned on the way.
    fn prefixes(&self, depth: usize) -> (Vec<[u8; SCAN_MAX_N]>, u64) {
        let mut states = vec![[0u8; SCAN_MAX_N]];
        let mut pruned = 0u64;
        for idx in 0..depth {
            let (u, v) = self.pairs[idx];
            let mut next = Vec::with_capacity(states.len() * 2);
            for s in states {
                next.push(s);
                if s[u] & s[v] == 0 {
                    let mut t = s;
                    t[u] |= 1 << v;
                    t[v] |= 1 << u;
                    next.push(t);
                } else {
                    pruned += 1u64 << (self.pairs.len() - idx - 1);
                }
            }
            states = next;
        }
        (states, pruned)
    }
}

/// Checks both bounds on every labelled triangle-free graph on `n` vertices.
pub fn scan_all(n: usize, opts: ScanOptions) -> Result<ScanReport> {
    if n == 0 || n > SCAN_MAX_N {
        return Err(Error::Domain(format!("scan needs 1 <= n <= {SCAN_MAX_N}, got {n}")));
    }
    if n == SCAN_MAX_N && !opts.allow_n8 {
        return Err(Error::Domain("n = 8 scans 2^28 graphs; enable it explicitly".into()));
    }
    let start = Instant::now();
    let walker = Walker::new(n);
    let depth = CHUNK_DEPTH.min(walker.pairs.len());
    let (states, pruned) = walker.prefixes(depth);

    let run = |mut s: [u8; SCAN_MAX_N]| -> Result<Partial> {
        let mut p = Partial::default();
        walker.walk(depth, &mut s, &mut p)?;
        Ok(p)
    };
    #[cfg(feature = "parallel")]
    let parts: Vec<Result<Partial>> = {
        use rayon::prelude::*;
        states.into_par_iter().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<Result<Partial>> = states.into_iter().map(run).collect();

    let mut total = Partial {
        scanned: pruned,
        ..Partial::default()
    };
    for p in parts {
        total = total.merge(p?);
    }
    let (max_ratio, argmax_graph) = total.best.expect("the edgeless graph is always scanned");
    Ok(ScanReport {
        n,
        graphs_scanned: total.scanned,
        triangle_free_count: total.triangle_free,
        lemma_violations: total.lemma,
        theorem_violations: total.theorem,
        max_ratio,
        argmax_graph,
        runtime_secs: Some(start.elapsed().as_secs_f64()),
    })
}

/// Restarts happen every this many iterations.
const RESTART_PERIOD: usize = 200;

/// Seeded hill climbing on `(mu1 + mun) / n` over triangle-free graphs.
///
/// Moves add a pair that closes no triangle or delete an edge, each with
/// probability 1/2 when both exist; moves that do not lower the ratio are
/// accepted. The walk restarts from a fresh triangle-free process graph
/// every `RESTART_PERIOD` iterations. Every visited graph is checked.
pub fn random_search(n: usize, iterations: usize, seed: u64) -> Result<ScanReport> {
    if n < 5 {
        return Err(Error::Domain(format!("search needs n >= 5, got {n}")));
    }
    let start = Instant::now();
    let mut rng = rng(seed);
    let mut acc = Partial::default();
    let visit = |g: &Graph, acc: &mut Partial| -> Result<f64> {
        let report = bound_report(g, &spectrum(g)?);
        acc.scanned += 1;
        acc.triangle_free += 1;
        let ratio = report.ratio;
        acc.check(g, report);
        Ok(ratio)
    };

    let mut current = triangle_free_process(n, &mut rng);
    let mut current_ratio = visit(&current, &mut acc)?;
    for it in 1..=iterations {
        if it % RESTART_PERIOD == 0 {
            current = triangle_free_process(n, &mut rng);
            current_ratio = visit(&current, &mut acc)?;
            continue;
        }
        let additions: Vec<(usize, usize)> = (1..n)
            .flat_map(|v| (0..v).map(move |u| (u, v)))
            .filter(|&(u, v)| !current.has_edge(u, v) && !current.neighbors(u).intersects(current.neighbors(v)))
            .collect();
        let edges: Vec<(usize, usize)> = current.edges().collect();
        let add = match (additions.is_empty(), edges.is_empty()) {
            (true, true) => break,
            (false, true) => true,
            (true, false) => false,
            (false, false) => rng.gen_bool(0.5),
        };
        let mut candidate = current.clone();
        if add {
            let &(u, v) = additions.choose(&mut rng).expect("non-empty");
            candidate.add_edge(u, v);
        } else {
            let &(u, v) = edges.choose(&mut rng).expect("non-empty");
            candidate.remove_edge(u, v);
        }
        let ratio = visit(&candidate, &mut acc)?;
        if ratio >= current_ratio - TIE_EPS {
            current = candidate;
            current_ratio = ratio;
        }
    }
    let (max_ratio, argmax_graph) = acc.best.expect("at least one graph visited");
    Ok(ScanReport {
        n,
        graphs_scanned: acc.scanned,
        triangle_free_count: acc.triangle_free,
        lemma_violations: acc.lemma,
        theorem_violations: acc.theorem,
        max_ratio,
        argmax_graph,
        runtime_secs: Some(start.elapsed().as_secs_f64()),
    })
}

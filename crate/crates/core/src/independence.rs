//! Exact independence number by branch and bound on bit-sets.
//!
//! Vertices of degree at most one in the remaining subgraph are taken
//! without branching; otherwise the search branches on a maximum-degree
//! vertex (take it, or drop it). A greedy clique cover of the candidate set
//! (a greedy colouring of the complement) bounds the independent sets still
//! reachable.

use serde::Serialize;

use crate::bitset::BitSet;
use crate::graph::Graph;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceResult {
    pub size: usize,
    /// `false` when the node budget ran out; `size` is then a lower bound.
    pub exact: bool,
    pub expansions: u64,
    pub witness: Vec<usize>,
}

struct Search<'g> {
    g: &'g Graph,
    budget: u64,
    expansions: u64,
    exhausted: bool,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

fn closed_neighborhood(g: &Graph, v: usize) -> BitSet {
    let mut s = g.neighbors(v).clone();
    s.insert(v);
    s
}

fn clique_cover_size(g: &Graph, cand: &BitSet) -> usize {
    let mut rest = cand.clone();
    let mut cliques = 0;
    while let Some(u) = rest.first() {
        rest.remove(u);
        let mut common = g.neighbors(u).clone();
        common.intersect_with(&rest);
        while let Some(w) = common.first() {
            rest.remove(w);
            common.remove(w);
            common.intersect_with(g.neighbors(w));
        }
        cliques += 1;
    }
    cliques
}

impl Search<'_> {
    fn record(&mut self, extra: impl Iterator<Item = usize>) {
        let mut candidate = self.chosen.clone();
        candidate.extend(extra);
        if candidate.len() > self.best.len() {
            self.best = candidate;
        }
    }

    fn run(&mut self, mut cand: BitSet) {
        let depth = self.chosen.len();
        self.expand(&mut cand);
        self.chosen.truncate(depth);
    }

    fn expand(&mut self, cand: &mut BitSet) {
        if self.exhausted {
            return;
        }
        self.expansions += 1;
        if self.expansions > self.budget {
            self.exhausted = true;
            return;
        }
        // Take vertices of degree <= 1 in G[cand].
        loop {
            let low = cand.iter().find(|&v| self.g.neighbors(v).intersection_count(cand) <= 1);
            match low {
                Some(v) => {
                    self.chosen.push(v);
                    cand.difference_with(&closed_neighborhood(self.g, v));
                }
                None => break,
            }
        }
        if cand.is_empty() {
            self.record(std::iter::empty());
            return;
        }
        if self.chosen.len() + clique_cover_size(self.g, cand) <= self.best.len() {
            return;
        }
        let v = cand
            .iter()
            .max_by_key(|&v| (self.g.neighbors(v).intersection_count(cand), std::cmp::Reverse(v)))
            .expect("candidate set is non-empty");

        let mut with = cand.clone();
        with.difference_with(&closed_neighborhood(self.g, v));
        self.chosen.push(v);
        self.run(with);
        self.chosen.pop();

        let mut without = cand.clone();
        without.remove(v);
        self.run(without);
    }
}

/// Greedy minimum-degree independent set, used as the initial incumbent.
fn greedy(g: &Graph) -> Vec<usize> {
    let mut cand = BitSet::full(g.n());
    let mut out = Vec::new();
    while let Some(v) = cand.iter().min_by_key(|&v| g.neighbors(v).intersection_count(&cand)) {
        out.push(v);
        cand.difference_with(&closed_neighborhood(g, v));
    }
    out
}

pub fn independence_number(g: &Graph, budget: u64) -> IndependenceResult {
    let mut best = greedy(g);
    // In a triangle-free graph every neighbourhood is independent.
    for v in 0..g.n() {
        let nb = g.neighbors(v);
        if nb.count() > best.len() && nb.iter().all(|u| !g.neighbors(u).intersects(nb)) {
            best = nb.iter().collect();
        }
    }
    let mut s = Search {
        g,
        budget,
        expansions: 0,
        exhausted: false,
        best,
        chosen: Vec::new(),
    };
    s.run(BitSet::full(g.n()));
    let mut witness = s.best;
    witness.sort_unstable();
    IndependenceResult {
        size: witness.len(),
        exact: !s.exhausted,
        expansions: s.expansions.min(budget),
        witness,
    }
}

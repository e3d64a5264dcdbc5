//! Simple undirected graphs on dense vertex indices `0..n`, stored as one
//! adjacency bit-set per vertex.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// Simple undirected graph. Immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BitSet>,
    edges: usize,
}

/// Degree summary of a graph with at least one vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_regular: bool,
    /// Common degree when the graph is regular.
    pub degree: Option<usize>,
}

impl Graph {
    /// Builds a graph from an edge list. Repeated pairs are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: (0..n).map(|_| BitSet::new(n)).collect(),
            edges: 0,
        }
    }

    /// Builds a graph from a symmetric adjacency predicate evaluated on `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v);
        if self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edges += 1;
        true
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.adj[u].contains(v) {
            return false;
        }
        self.adj[u].remove(v);
        self.adj[v].remove(u);
        self.edges -= 1;
        true
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Number of triangles. Each edge contributes its common-neighbourhood
    /// size, so every triangle is seen exactly three times.
    pub fn triangle_count(&self) -> u64 {
        let total: u64 = self
            .edges()
            .map(|(u, v)| self.adj[u].intersection_count(&self.adj[v]) as u64)
            .sum();
        total / 3
    }

    /// Some triangle `[u, v, w]` with `u < v < w`, if one exists.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        self.edges().find_map(|(u, v)| {
            let mut common = self.adj[u].clone();
            common.intersect_with(&self.adj[v]);
            common.iter().next().map(|w| {
                let mut t = [u, v, w];
                t.sort_unstable();
                t
            })
        })
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| !self.adj[u].intersects(&self.adj[v]))
    }

    /// Replaces vertex `v` by an independent set of `sizes[v]` vertices and
    /// joins the classes of adjacent vertices completely. Classes are laid out
    /// consecutively in vertex order.
    pub fn blow_up(&self, sizes: &[usize]) -> Result<Graph> {
        if sizes.len() != self.n() {
            return Err(Error::Domain(format!(
                "blow-up needs {} class sizes, got {}",
                self.n(),
                sizes.len()
            )));
        }
        if let Some(v) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::Domain(format!("blow-up class {v} has size 0")));
        }
        let mut offsets = Vec::with_capacity(self.n() + 1);
        offsets.push(0);
        for &s in sizes {
            offsets.push(offsets.last().unwrap() + s);
        }
        let mut out = Graph::empty(offsets[self.n()]);
        for (u, v) in self.edges() {
            for x in offsets[u]..offsets[u + 1] {
                for y in offsets[v]..offsets[v + 1] {
                    out.add_edge(x, y);
                }
            }
        }
        Ok(out)
    }

    /// Balanced blow-up with every class of size `t`.
    pub fn blow_up_uniform(&self, t: usize) -> Result<Graph> {
        self.blow_up(&vec![t; self.n()])
    }

    /// Breadth-first 2-colouring.
    pub fn is_bipartite(&self) -> bool {
        let n = self.n();
        let mut color: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for v in self.adj[u].iter() {
                    match color[v] {
                        None => {
                            color[v] = Some(!cu);
                            queue.push_back(v);
                        }
                        Some(cv) if cv == cu => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = BitSet::new(n);
        seen.insert(0);
        let mut stack = vec![0];
        while let Some(u) = stack.pop() {
            for v in self.adj[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    stack.push(v);
                }
            }
        }
        seen.count() == n
    }

    pub fn degree_stats(&self) -> Result<DegreeStats> {
        if self.n() == 0 {
            return Err(Error::EmptyGraph);
        }
        let (mut lo, mut hi) = (usize::MAX, 0);
        for v in 0..self.n() {
            let d = self.degree(v);
            lo = lo.min(d);
            hi = hi.max(d);
        }
        Ok(DegreeStats {
            min_degree: lo,
            max_degree: hi,
            is_regular: lo == hi,
            degree: (lo == hi).then_some(lo),
        })
    }

    /// Copy with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Domain("relabelling is not a permutation".into()));
        }
        let mut out = Graph::empty(n);
        for (u, v) in self.edges() {
            out.add_edge(perm[u], perm[v]);
        }
        Ok(out)
    }

    /// Dense row-major 0/1 adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let n = self.n();
        let mut a = vec![0.0; n * n];
        for (u, v) in self.edges() {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        a
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

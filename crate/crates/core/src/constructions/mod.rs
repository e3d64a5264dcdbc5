//! Named triangle-free strongly regular graphs, parameterised families and
//! seeded random triangle-free graphs.

mod random;
mod steiner;

pub use random::{random_triangle_free, RandomModel};
pub(crate) use random::{rng, triangle_free_process};
pub use steiner::{gewirtz, higman_sims, m22_graph, steiner_s3_6_22, ProjectivePlane4, SteinerSystem, INFINITY_POINT};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)))
}

/// Kneser graph K(m, t): `t`-subsets of `0..m`, adjacent when disjoint.
/// Vertices are the subsets in colexicographic order of their bitmasks.
pub fn kneser(m: usize, t: usize) -> Result<Graph> {
    if t == 0 || m < 2 * t || m > 63 {
        return Err(Error::Domain(format!("kneser({m}, {t}) needs m >= 2t >= 2, m <= 63")));
    }
    let subsets: Vec<u64> = (0u64..1 << m).filter(|s| s.count_ones() as usize == t).collect();
    Ok(Graph::from_fn(subsets.len(), |u, v| subsets[u] & subsets[v] == 0))
}

pub fn petersen() -> Graph {
    kneser(5, 2).expect("valid Kneser parameters")
}

/// 4-bit vectors, adjacent when they differ in exactly one or in all four
/// coordinates.
pub fn clebsch() -> Graph {
    Graph::from_fn(16, |u, v| matches!((u ^ v).count_ones(), 1 | 4))
}

/// Five pentagons `P_h` (vertices `5h + j`) and five pentagrams `Q_i`
/// (vertices `25 + 5i + j`); `P_h[j] ~ Q_i[h·i + j mod 5]`.
pub fn hoffman_singleton() -> Graph {
    let mut g = Graph::empty(50);
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    for h in 0..5 {
        for j in 0..5 {
            g.add_edge(p(h, j), p(h, j + 1));
            g.add_edge(q(h, j), q(h, j + 2));
            for i in 0..5 {
                g.add_edge(p(h, j), q(i, h * i + j));
            }
        }
    }
    g
}

/// The seven known triangle-free strongly regular graphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NamedGraph {
    C5,
    Petersen,
    Clebsch,
    HoffmanSingleton,
    Gewirtz,
    M22,
    HigmanSims,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 7] = [
        NamedGraph::C5,
        NamedGraph::Petersen,
        NamedGraph::Clebsch,
        NamedGraph::HoffmanSingleton,
        NamedGraph::Gewirtz,
        NamedGraph::M22,
        NamedGraph::HigmanSims,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::C5 => "c5",
            NamedGraph::Petersen => "petersen",
            NamedGraph::Clebsch => "clebsch",
            NamedGraph::HoffmanSingleton => "hoffman-singleton",
            NamedGraph::Gewirtz => "gewirtz",
            NamedGraph::M22 => "m22",
            NamedGraph::HigmanSims => "higman-sims",
        }
    }

    /// Strongly regular parameters `(n, k, a, b)`.
    pub fn parameters(self) -> (u32, u32, u32, u32) {
        match self {
            NamedGraph::C5 => (5, 2, 0, 1),
            NamedGraph::Petersen => (10, 3, 0, 1),
            NamedGraph::Clebsch => (16, 5, 0, 2),
            NamedGraph::HoffmanSingleton => (50, 7, 0, 1),
            NamedGraph::Gewirtz => (56, 10, 0, 2),
            NamedGraph::M22 => (77, 16, 0, 4),
            NamedGraph::HigmanSims => (100, 22, 0, 6),
        }
    }

    pub fn build(self) -> Result<Graph> {
        match self {
            NamedGraph::C5 => cycle(5),
            NamedGraph::Petersen => Ok(petersen()),
            NamedGraph::Clebsch => Ok(clebsch()),
            NamedGraph::HoffmanSingleton => Ok(hoffman_singleton()),
            NamedGraph::Gewirtz => gewirtz(),
            NamedGraph::M22 => m22_graph(),
            NamedGraph::HigmanSims => higman_sims(),
        }
    }
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown named graph '{s}'")))
    }
}

//! Adjacency and signless-Laplacian spectra of graphs.

mod symmetric;

pub use symmetric::symmetric_eigenvalues;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on the number of vertices handed to the dense solver.
pub const DEFAULT_MAX_N: usize = 4096;
/// Default QL sweep cap per eigenvalue.
pub const DEFAULT_MAX_SWEEPS: usize = 50;
/// Relative gap below which two eigenvalues are counted as one.
pub const CLUSTER_REL_GAP: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolverOptions {
    /// Absolute tolerance per unit of `max(1, n)`.
    pub tol_per_vertex: f64,
    pub max_n: usize,
    pub max_sweeps: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        Self {
            tol_per_vertex: 1e-10,
            max_n: DEFAULT_MAX_N,
            max_sweeps: DEFAULT_MAX_SWEEPS,
        }
    }
}

impl SolverOptions {
    pub fn tol_for(&self, n: usize) -> f64 {
        self.tol_per_vertex * n.max(1) as f64
    }
}

/// Adjacency eigenvalues in non-increasing order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<f64>,
    pub tol: f64,
}

/// A run of numerically equal eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Cluster {
    pub value: f64,
    pub multiplicity: usize,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Largest eigenvalue.
    pub fn mu1(&self) -> f64 {
        self.values[0]
    }

    /// Second largest eigenvalue; `mu1` again for a single vertex.
    pub fn mu2(&self) -> f64 {
        self.values[1.min(self.values.len() - 1)]
    }

    /// Smallest eigenvalue.
    pub fn mun(&self) -> f64 {
        *self.values.last().expect("spectrum is non-empty")
    }

    pub fn power_sum(&self, p: i32) -> f64 {
        self.values.iter().map(|v| v.powi(p)).sum()
    }

    /// Groups eigenvalues whose distance to the first member of the run is
    /// at most `CLUSTER_REL_GAP * max(1, |value|)`. Cluster values are means.
    pub fn clusters(&self) -> Vec<Cluster> {
        let mut out: Vec<(f64, f64, usize)> = Vec::new();
        for &v in &self.values {
            match out.last_mut() {
                Some((head, sum, count)) if (*head - v).abs() <= CLUSTER_REL_GAP * head.abs().max(1.0) => {
                    *sum += v;
                    *count += 1;
                }
                _ => out.push((v, v, 1)),
            }
        }
        out.into_iter()
            .map(|(_, sum, count)| Cluster {
                value: sum / count as f64,
                multiplicity: count,
            })
            .collect()
    }
}

/// Power sums of the spectrum against their combinatorial targets:
/// `sum mu = 0`, `sum mu^2 = 2e`, `sum mu^3 = 6 * triangles`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceReport {
    pub sum1: f64,
    pub sum2: f64,
    pub sum3: f64,
    pub target1: f64,
    pub target2: f64,
    pub target3: f64,
    pub residual1: f64,
    pub residual2: f64,
    pub residual3: f64,
}

impl TraceReport {
    pub fn max_residual(&self) -> f64 {
        self.residual1.max(self.residual2).max(self.residual3)
    }
}

fn sorted_desc(mut values: Vec<f64>) -> Vec<f64> {
    // Stable: equal values keep solver order.
    values.sort_by(|a, b| b.total_cmp(a));
    values
}

fn check_size(n: usize, opts: &SolverOptions) -> Result<()> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    if n > opts.max_n {
        return Err(Error::TooLarge { n, cap: opts.max_n });
    }
    Ok(())
}

pub fn spectrum(g: &Graph) -> Result<Spectrum> {
    spectrum_with(g, &SolverOptions::default())
}

pub fn spectrum_with(g: &Graph, opts: &SolverOptions) -> Result<Spectrum> {
    let n = g.n();
    check_size(n, opts)?;
    let values = symmetric_eigenvalues(&g.adjacency_matrix(), n, opts.max_sweeps)?;
    Ok(Spectrum {
        values: sorted_desc(values),
        tol: opts.tol_for(n),
    })
}

pub fn trace_identity_report(g: &Graph, s: &Spectrum) -> TraceReport {
    let (sum1, sum2, sum3) = (s.power_sum(1), s.power_sum(2), s.power_sum(3));
    let target2 = 2.0 * g.edge_count() as f64;
    let target3 = 6.0 * g.triangle_count() as f64;
    TraceReport {
        sum1,
        sum2,
        sum3,
        target1: 0.0,
        target2,
        target3,
        residual1: sum1.abs(),
        residual2: (sum2 - target2).abs(),
        residual3: (sum3 - target3).abs(),
    }
}

/// Smallest eigenvalue of `D + A`.
pub fn signless_laplacian_min(g: &Graph) -> Result<f64> {
    signless_laplacian_min_with(g, &SolverOptions::default())
}

pub fn signless_laplacian_min_with(g: &Graph, opts: &SolverOptions) -> Result<f64> {
    let n = g.n();
    check_size(n, opts)?;
    let mut q = g.adjacency_matrix();
    for v in 0..n {
        q[v * n + v] = g.degree(v) as f64;
    }
    let values = symmetric_eigenvalues(&q, n, opts.max_sweeps)?;
    Ok(values.into_iter().fold(f64::INFINITY, f64::min))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    fn petersen() -> Graph {
        // Outer 5-cycle, inner pentagram, spokes.
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((5 + i, 5 + (i + 2) % 5));
            e.push((i, 5 + i));
        }
        Graph::new(10, &e).unwrap()
    }

    #[test]
    fn c5_spectrum() {
        let s = spectrum(&cycle(5)).unwrap();
        let phi = (5f64.sqrt() - 1.0) / 2.0;
        let psi = (-(5f64.sqrt()) - 1.0) / 2.0;
        let expect = [2.0, phi, phi, psi, psi];
        for (a, b) in s.values.iter().zip(expect) {
            assert!((a - b).abs() < 1e-12);
        }
        assert_eq!(s.tol, 5e-10);
    }

    #[test]
    fn edgeless_spectrum_is_zero() {
        let s = spectrum(&Graph::empty(4)).unwrap();
        assert!(s.values.iter().all(|v| v.abs() < 1e-15));
        assert_eq!(s.clusters().len(), 1);
    }

    #[test]
    fn petersen_clusters() {
        let s = spectrum(&petersen()).unwrap();
        let c = s.clusters();
        assert_eq!(c.len(), 3);
        let got: Vec<(i64, usize)> = c.iter().map(|c| (c.value.round() as i64, c.multiplicity)).collect();
        assert_eq!(got, vec![(3, 1), (1, 5), (-2, 4)]);
        for cl in &c {
            assert!((cl.value - cl.value.round()).abs() < 1e-10);
        }
    }

    #[test]
    fn trace_reports() {
        let k3 = Graph::from_fn(3, |_, _| true);
        let r = trace_identity_report(&k3, &spectrum(&k3).unwrap());
        assert_eq!(r.target3, 6.0);
        assert!(r.max_residual() < 1e-10);
        let c5 = cycle(5);
        let r = trace_identity_report(&c5, &spectrum(&c5).unwrap());
        assert_eq!(r.target3, 0.0);
        assert!(r.residual3 <= 1e-8);
    }

    #[test]
    fn signless_laplacian() {
        assert!(signless_laplacian_min(&cycle(4)).unwrap().abs() < 1e-12);
        assert!((signless_laplacian_min(&petersen()).unwrap() - 1.0).abs() < 1e-10);
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(signless_laplacian_min(&star).unwrap().abs() < 1e-12);
    }

    #[test]
    fn size_guards() {
        assert_eq!(spectrum(&Graph::empty(0)), Err(Error::EmptyGraph));
        let opts = SolverOptions {
            max_n: 3,
            ..Default::default()
        };
        assert_eq!(spectrum_with(&cycle(5), &opts), Err(Error::TooLarge { n: 5, cap: 3 }));
    }
}

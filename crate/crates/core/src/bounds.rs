//! Eigenvalue bounds for triangle-free graphs.
//!
//! For a triangle-free graph on `n` vertices with extreme adjacency
//! eigenvalues `mu1 >= ... >= mun`:
//!
//! * `mu1 <= -n mun / (mu1 - mun)`;
//! * `mu1 + mun <= (3 - 2√2) n`, the maximum of
//!   `f(a) = (a - 2a²) / (1 - a)` over `a = mu1 / n` in `[0, 1)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::encode_graph6;
use crate::spectral::{spectrum, Spectrum};

/// Absolute tolerance for every eigenvalue-derived verdict.
pub const VERDICT_TOL: f64 = 1e-9;

/// `3 - 2√2`.
pub fn envelope_constant() -> f64 {
    3.0 - 2.0 * std::f64::consts::SQRT_2
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub mu1: f64,
    pub mun: f64,
    pub lemma_lhs: f64,
    pub lemma_rhs: f64,
    pub lemma_holds: bool,
    /// No edges: both sides are reported as 0.
    pub degenerate: bool,
    /// `(3 - 2√2) n`.
    pub theorem_bound: f64,
    /// `(3 - 2√2) n - (mu1 + mun)`.
    pub theorem_margin: f64,
    /// `(mu1 + mun) / n`.
    pub ratio: f64,
    /// Slack allowed in both verdicts.
    pub tol: f64,
}

impl BoundReport {
    pub fn theorem_holds(&self) -> bool {
        self.theorem_margin >= -self.tol
    }

    pub fn holds(&self) -> bool {
        self.lemma_holds && self.theorem_holds()
    }
}

fn require_triangle_free(g: &Graph) -> Result<()> {
    match g.find_triangle() {
        Some(t) => Err(Error::HasTriangle(t)),
        None => Ok(()),
    }
}

/// Builds the report from a precomputed spectrum. The caller guarantees
/// that `s` belongs to `g` and that `g` is triangle-free.
pub fn bound_report(g: &Graph, s: &Spectrum) -> BoundReport {
    bound_report_with_tol(g, s, VERDICT_TOL)
}

pub fn bound_report_with_tol(g: &Graph, s: &Spectrum, tol: f64) -> BoundReport {
    let n = g.n();
    let (mu1, mun) = (s.mu1(), s.mun());
    let degenerate = g.edge_count() == 0;
    let (lhs, rhs) = if degenerate {
        (0.0, 0.0)
    } else {
        (mu1, -(n as f64) * mun / (mu1 - mun))
    };
    let theorem_bound = envelope_constant() * n as f64;
    BoundReport {
        n,
        mu1,
        mun,
        lemma_lhs: lhs,
        lemma_rhs: rhs,
        lemma_holds: lhs <= rhs + tol,
        degenerate,
        theorem_bound,
        theorem_margin: theorem_bound - (mu1 + mun),
        ratio: (mu1 + mun) / n as f64,
        tol,
    }
}

/// `mu1 <= -n mun / (mu1 - mun)` on a triangle-free graph.
pub fn lemma_bound(g: &Graph) -> Result<BoundReport> {
    require_triangle_free(g)?;
    Ok(bound_report(g, &spectrum(g)?))
}

/// `mu1 + mun <= (3 - 2√2) n` on a triangle-free graph.
pub fn theorem1_check(g: &Graph) -> Result<BoundReport> {
    lemma_bound(g)
}

/// A graph refuting one of the bounds, kept with its graph6 encoding.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub report: BoundReport,
}

impl Counterexample {
    pub fn new(g: &Graph, report: BoundReport) -> Self {
        Self {
            graph6: encode_graph6(g).unwrap_or_else(|e| format!("<{e}>")),
            report,
        }
    }
}

/// Ratio bound `alpha(G) <= -n mun / (d - mun)` for a `d`-regular graph.
pub fn hoffman_delsarte(g: &Graph) -> Result<f64> {
    let stats = g.degree_stats()?;
    let d = stats.degree.ok_or(Error::NotRegular {
        min: stats.min_degree,
        max: stats.max_degree,
    })?;
    if d == 0 {
        return Err(Error::Domain("ratio bound needs degree >= 1".into()));
    }
    let mun = spectrum(g)?.mun();
    Ok(-(g.n() as f64) * mun / (d as f64 - mun))
}

/// `f(a) = (a - 2a²) / (1 - a)` on `[0, 1)`.
pub fn f_alpha(alpha: f64) -> Result<f64> {
    if !(0.0..1.0).contains(&alpha) {
        return Err(Error::Domain(format!("f is defined on [0, 1), got {alpha}")));
    }
    Ok((alpha - 2.0 * alpha * alpha) / (1.0 - alpha))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct FMax {
    /// `1 - 1/√2`.
    pub argmax: f64,
    /// `3 - 2√2`.
    pub value: f64,
    pub search_argmax: f64,
    pub search_value: f64,
}

impl FMax {
    pub fn agreement(&self) -> f64 {
        (self.argmax - self.search_argmax)
            .abs()
            .max((self.value - self.search_value).abs())
    }
}

/// Grid resolution of the golden-section cross-check: `2^-40`.
const GRID_BITS: u32 = 40;

/// Golden-section search for the maximiser of `f` over the grid
/// `{m / 2^40 : m < 2^40}`. Probe values are compared exactly by
/// cross-multiplying `f(m/S) = (mS - 2m²) / (S (S - m))` in `i128`, so the
/// flat top of `f` does not drown the comparison in rounding noise.
pub fn golden_section_argmax() -> f64 {
    let scale: i128 = 1 << GRID_BITS;
    let greater = |x: i128, y: i128| (x * scale - 2 * x * x) * (scale - y) > (y * scale - 2 * y * y) * (scale - x);
    let (mut lo, mut hi) = (0i128, scale - 1);
    let shrink = |w: i128| ((w as f64) * 0.381_966_011_250_105_1).round() as i128;
    while hi - lo > 3 {
        let x1 = lo + shrink(hi - lo);
        let x2 = hi - shrink(hi - lo);
        if greater(x2, x1) {
            lo = x1;
        } else {
            hi = x2;
        }
    }
    let best = (lo..=hi).fold(lo, |b, m| if greater(m, b) { m } else { b });
    best as f64 / scale as f64
}

pub fn f_max() -> FMax {
    let argmax = 1.0 - std::f64::consts::FRAC_1_SQRT_2;
    let search_argmax = golden_section_argmax();
    FMax {
        argmax,
        value: envelope_constant(),
        search_argmax,
        search_value: f_alpha(search_argmax).expect("grid point lies in [0, 1)"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, petersen, NamedGraph};

    #[test]
    fn lemma_examples() {
        let r = lemma_bound(&cycle(5).unwrap()).unwrap();
        assert!((r.lemma_lhs - 2.0).abs() < 1e-12);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((r.lemma_rhs - 5.0 * phi / (2.0 + phi)).abs() < 1e-12);
        assert!((r.lemma_rhs - 2.2361).abs() < 1e-4);
        assert!(r.lemma_holds);

        let hs = NamedGraph::HigmanSims.build().unwrap();
        let r = lemma_bound(&hs).unwrap();
        assert!((r.lemma_lhs - 22.0).abs() < 1e-9);
        assert!((r.lemma_rhs - 800.0 / 30.0).abs() < 1e-9);
        assert!(r.lemma_holds);

        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        let r = lemma_bound(&k2).unwrap();
        assert!((r.lemma_lhs - 1.0).abs() < 1e-14 && (r.lemma_rhs - 1.0).abs() < 1e-14);
        assert!(r.lemma_holds);
    }

    #[test]
    fn lemma_preconditions() {
        let k3 = Graph::from_fn(3, |_, _| true);
        assert_eq!(lemma_bound(&k3), Err(Error::HasTriangle([0, 1, 2])));
        let r = lemma_bound(&Graph::empty(3)).unwrap();
        assert!(r.degenerate && r.lemma_holds);
        assert_eq!((r.lemma_lhs, r.lemma_rhs), (0.0, 0.0));
        assert_eq!(lemma_bound(&Graph::empty(0)), Err(Error::EmptyGraph));
    }

    #[test]
    fn theorem_examples() {
        let hs = NamedGraph::HigmanSims.build().unwrap();
        let r = theorem1_check(&hs).unwrap();
        assert!((r.mu1 + r.mun - 14.0).abs() < 1e-9);
        assert!((r.theorem_bound - 17.157).abs() < 1e-3);
        assert!(r.theorem_holds());
        let r = theorem1_check(&cycle(4).unwrap()).unwrap();
        assert!((r.mu1 + r.mun).abs() < 1e-12);
        assert!(r.theorem_holds());
        let r = theorem1_check(&cycle(5).unwrap()).unwrap();
        assert!((r.mu1 + r.mun - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-12);
        assert!((r.theorem_bound - 0.858).abs() < 1e-3);
    }

    #[test]
    fn ratio_bound_examples() {
        assert!((hoffman_delsarte(&petersen()).unwrap() - 4.0).abs() < 1e-10);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((hoffman_delsarte(&cycle(5).unwrap()).unwrap() - 5.0 * phi / (2.0 + phi)).abs() < 1e-12);
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert!((hoffman_delsarte(&k2).unwrap() - 1.0).abs() < 1e-14);
        let star = Graph::new(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(hoffman_delsarte(&star), Err(Error::NotRegular { min: 1, max: 3 }));
        assert!(hoffman_delsarte(&Graph::empty(2)).is_err());
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_alpha(0.0).unwrap(), 0.0);
        assert_eq!(f_alpha(0.5).unwrap(), 0.0);
        let a = 1.0 - 1.0 / 2f64.sqrt();
        assert!((f_alpha(a).unwrap() - 0.171573).abs() < 1e-6);
        assert!((f_alpha(a).unwrap() - envelope_constant()).abs() < 1e-15);
        assert!(f_alpha(1.0).is_err());
        assert!(f_alpha(-0.1).is_err());
        assert!(f_alpha(f64::NAN).is_err());
    }

    #[test]
    fn f_max_cross_check() {
        let m = f_max();
        assert!((m.argmax - 0.29289).abs() < 1e-5);
        assert!((m.value - 0.171573).abs() < 1e-6);
        assert!(m.agreement() < 1e-10, "{m:?}");
        for delta in [1e-4, -1e-4] {
            assert!(f_alpha(m.argmax + delta).unwrap() < m.value);
        }
    }
}

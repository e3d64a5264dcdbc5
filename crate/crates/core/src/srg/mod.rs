//! Strongly regular graph parameters: recognition, exact eigenvalues and
//! multiplicities, feasibility conditions, and the inequality chain that
//! bounds `(k + theta_2) / n` for triangle-free parameter sets.

mod chain;
mod table;

pub use chain::{theorem2_chain, ChainCheck, ChainReport, ChainVerdict, InertiaCheck, TRIGGER};
pub use table::{
    annotate, appr_rounded, appr_truncated, compare_with_published, enumerate_feasible, existence_of,
    parse_published_table, parse_surd, published_table, render_table, ApprNote, Existence, ExtraRow, FieldMismatch,
    PublishedDiff, PublishedRow, TableFormat, TableRow, N_MAX_CAP,
};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::surd::{exact_sqrt, Surd};

/// Parameters `(n, k, a, b)`: `n` vertices, degree `k`, `a` common
/// neighbours for adjacent pairs and `b` for non-adjacent pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: u32,
    pub k: u32,
    pub a: u32,
    pub b: u32,
}

impl SrgParams {
    pub const fn new(n: u32, k: u32, a: u32, b: u32) -> Self {
        Self { n, k, a, b }
    }

    fn wide(&self) -> (i128, i128, i128, i128) {
        (self.n as i128, self.k as i128, self.a as i128, self.b as i128)
    }

    /// `k (k - a - 1) = (n - k - 1) b`.
    pub fn counting_identity(&self) -> bool {
        let (n, k, a, b) = self.wide();
        k * (k - a - 1) == (n - k - 1) * b
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.a, self.b)
    }
}

/// Outcome of [`srg_recognize`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Recognition {
    Srg { params: SrgParams },
    NotSrg { reason: String },
}

impl Recognition {
    pub fn params(&self) -> Option<SrgParams> {
        match self {
            Recognition::Srg { params } => Some(*params),
            Recognition::NotSrg { .. } => None,
        }
    }
}

pub fn srg_recognize(g: &Graph) -> Recognition {
    let not = |reason: String| Recognition::NotSrg { reason };
    let n = g.n();
    if n < 2 {
        return not(format!("{n} vertices"));
    }
    let stats = g.degree_stats().expect("n >= 2");
    let Some(k) = stats.degree else {
        return not(format!(
            "not regular (degrees {}..={})",
            stats.min_degree, stats.max_degree
        ));
    };
    if k == n - 1 {
        return not("complete graph".into());
    }
    if !g.is_connected() {
        return not("disconnected".into());
    }
    let (mut a, mut b) = (None, None);
    for u in 0..n {
        for v in u + 1..n {
            let common = g.neighbors(u).intersection_count(g.neighbors(v));
            let (slot, kind) = if g.has_edge(u, v) {
                (&mut a, "adjacent")
            } else {
                (&mut b, "non-adjacent")
            };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return not(format!("{kind} pairs have {c} and {common} common neighbours")),
                Some(_) => {}
            }
        }
    }
    Recognition::Srg {
        params: SrgParams::new(n as u32, k as u32, a.unwrap_or(0) as u32, b.unwrap_or(0) as u32),
    }
}

/// Exact restricted eigenvalues `theta1 > theta2` with multiplicities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SrgEigenData {
    pub theta1: Surd,
    pub theta2: Surd,
    pub m1: u64,
    pub m2: u64,
    /// Irrational eigenvalues, which force `m1 = m2 = (n - 1) / 2`.
    pub conference: bool,
}

/// `theta = ((a - b) ± √((a - b)² + 4(k - b))) / 2` and
/// `m = ((n - 1) ∓ (2k + (n - 1)(a - b)) / (theta1 - theta2)) / 2`.
pub fn srg_eigen(p: SrgParams) -> Result<SrgEigenData> {
    let (n, k, a, b) = p.wide();
    if !(0 < k && k < n) {
        return Err(Error::Infeasible(format!("{p}: need 0 < k < n")));
    }
    let disc = (a - b) * (a - b) + 4 * (k - b);
    if disc <= 0 {
        return Err(Error::Infeasible(format!("{p}: discriminant {disc} is not positive")));
    }
    let theta1 = Surd::new(a - b, 1, disc, 2);
    let theta2 = Surd::new(a - b, -1, disc, 2);
    let t = 2 * k + (n - 1) * (a - b);
    let (m1, m2, conference) = match exact_sqrt(disc) {
        Some(s) => {
            if t % s != 0 || ((n - 1) - t / s) % 2 != 0 {
                return Err(Error::Infeasible(format!("{p}: multiplicities are not integers")));
            }
            let m1 = ((n - 1) - t / s) / 2;
            (m1, n - 1 - m1, false)
        }
        None => {
            if t != 0 || (n - 1) % 2 != 0 {
                return Err(Error::Infeasible(format!(
                    "{p}: irrational eigenvalues without the conference condition"
                )));
            }
            ((n - 1) / 2, (n - 1) / 2, true)
        }
    };
    if m1 <= 0 || m2 <= 0 {
        return Err(Error::Infeasible(format!(
            "{p}: non-positive multiplicity ({m1}, {m2})"
        )));
    }
    let data = SrgEigenData {
        theta1,
        theta2,
        m1: m1 as u64,
        m2: m2 as u64,
        conference,
    };
    debug_assert!(data.trace(p).is_zero() || !p.counting_identity());
    Ok(data)
}

impl SrgEigenData {
    /// `k + m1 theta1 + m2 theta2`; zero for feasible parameters.
    pub fn trace(&self, p: SrgParams) -> Surd {
        Surd::int(p.k as i128) + Surd::int(self.m1 as i128) * self.theta1 + Surd::int(self.m2 as i128) * self.theta2
    }

    /// `(k + theta2) / n`.
    pub fn ratio(&self, p: SrgParams) -> Surd {
        (Surd::int(p.k as i128) + self.theta2).div_int(p.n as i128)
    }

    /// Full spectrum as `(value, multiplicity)`, largest first.
    pub fn spectrum(&self, p: SrgParams) -> [(Surd, u64); 3] {
        [
            (Surd::int(p.k as i128), 1),
            (self.theta1, self.m1),
            (self.theta2, self.m2),
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tier {
    Basic,
    Extended,
}

impl std::str::FromStr for Tier {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "basic" => Ok(Tier::Basic),
            "extended" => Ok(Tier::Extended),
            _ => Err(Error::Domain(format!("unknown tier '{s}'"))),
        }
    }
}

/// One named necessary condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub name: &'static str,
    pub tier: Tier,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FeasibilityReport {
    pub params: SrgParams,
    pub tier: Tier,
    pub conditions: Vec<Condition>,
    pub basic_pass: bool,
    /// `None` when the extended conditions were not requested or could not
    /// be evaluated because a basic condition failed.
    pub extended_pass: Option<bool>,
    pub eigen: Option<SrgEigenData>,
}

impl FeasibilityReport {
    pub fn passed(&self) -> bool {
        match self.tier {
            Tier::Basic => self.basic_pass,
            Tier::Extended => self.basic_pass && self.extended_pass == Some(true),
        }
    }

    pub fn failed(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.passed)
    }
}

/// Basic tier: range `0 < b <= k < n`, counting identity, `k != b`, and
/// integral positive multiplicities. Extended tier adds both Krein
/// conditions and the absolute bound `n <= m (m + 3) / 2` for each
/// multiplicity. All arithmetic is exact.
pub fn feasibility(p: SrgParams, tier: Tier) -> FeasibilityReport {
    let (n, k, a, b) = p.wide();
    let mut conditions = Vec::new();
    let mut push = |name, tier, passed, detail: String| {
        conditions.push(Condition {
            name,
            tier,
            passed,
            detail,
        });
    };
    push(
        "range",
        Tier::Basic,
        0 < b && b <= k && k < n && a < k,
        format!("0 < b={b} <= k={k} < n={n}, a={a} < k"),
    );
    let lhs = k * (k - a - 1);
    let rhs = (n - k - 1) * b;
    push(
        "counting-identity",
        Tier::Basic,
        lhs == rhs,
        format!("k(k-a-1) = {lhs}, (n-k-1)b = {rhs}"),
    );
    push(
        "not-complete-multipartite",
        Tier::Basic,
        k != b,
        format!("k={k}, b={b}"),
    );
    let eigen = srg_eigen(p);
    push(
        "integral-multiplicities",
        Tier::Basic,
        eigen.is_ok(),
        match &eigen {
            Ok(e) => format!("m1={}, m2={}", e.m1, e.m2),
            Err(err) => err.to_string(),
        },
    );
    let basic_pass = conditions.iter().all(|c| c.passed);
    let eigen = eigen.ok().filter(|_| basic_pass);

    let mut extended_pass = None;
    if let (Tier::Extended, Some(e)) = (tier, eigen) {
        let kk = Surd::int(k);
        let one = Surd::int(1);
        let two = Surd::int(2);
        let (r, s) = (e.theta1, e.theta2);
        let krein = |x: Surd, y: Surd| {
            let lhs = (x + one) * (kk + x + two * x * y);
            let rhs = (kk + x) * (y + one) * (y + one);
            (lhs <= rhs, format!("{lhs} <= {rhs}"))
        };
        let (ok1, d1) = krein(r, s);
        let (ok2, d2) = krein(s, r);
        let absolute = |m: u64| {
            let cap = m as i128 * (m as i128 + 3);
            (2 * n <= cap, format!("n={n} <= m(m+3)/2 = {}", Surd::ratio(cap, 2)))
        };
        let (ok3, d3) = absolute(e.m1);
        let (ok4, d4) = absolute(e.m2);
        let ext = [
            ("krein-1", ok1, d1),
            ("krein-2", ok2, d2),
            ("absolute-bound-1", ok3, d3),
            ("absolute-bound-2", ok4, d4),
        ]
        .map(|(name, passed, detail)| Condition {
            name,
            tier: Tier::Extended,
            passed,
            detail,
        });
        extended_pass = Some(ext.iter().all(|c| c.passed));
        conditions.extend(ext);
    }
    FeasibilityReport {
        params: p,
        tier,
        conditions,
        basic_pass,
        extended_pass,
        eigen,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{cycle, NamedGraph};

    #[test]
    fn recognise_examples() {
        let hs = NamedGraph::HigmanSims.build().unwrap();
        assert_eq!(srg_recognize(&hs).params(), Some(SrgParams::new(100, 22, 0, 6)));
        assert_eq!(
            srg_recognize(&cycle(5).unwrap()).params(),
            Some(SrgParams::new(5, 2, 0, 1))
        );
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(srg_recognize(&p3), Recognition::NotSrg { reason } if reason.contains("not regular")));
        let k4 = Graph::from_fn(4, |_, _| true);
        assert!(srg_recognize(&k4).params().is_none());
        let two_triangles = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert_eq!(
            srg_recognize(&two_triangles),
            Recognition::NotSrg {
                reason: "disconnected".into()
            }
        );
        // C6 is regular and connected but not strongly regular.
        assert!(srg_recognize(&cycle(6).unwrap()).params().is_none());
    }

    #[test]
    fn eigen_examples() {
        let e = srg_eigen(SrgParams::new(100, 22, 0, 6)).unwrap();
        assert_eq!((e.theta1, e.theta2, e.m1, e.m2), (Surd::int(2), Surd::int(-8), 77, 22));
        let e = srg_eigen(SrgParams::new(5, 2, 0, 1)).unwrap();
        assert_eq!(e.theta1, Surd::new(-1, 1, 5, 2));
        assert_eq!(e.theta2, Surd::new(-1, -1, 5, 2));
        assert_eq!((e.m1, e.m2, e.conference), (2, 2, true));
        let e = srg_eigen(SrgParams::new(16, 5, 0, 2)).unwrap();
        assert_eq!((e.theta1, e.theta2, e.m1, e.m2), (Surd::int(1), Surd::int(-3), 10, 5));
        // The computed Petersen multiplicities.
        let e = srg_eigen(SrgParams::new(10, 3, 0, 1)).unwrap();
        assert_eq!((e.m1, e.m2), (5, 4));
        assert!(e.trace(SrgParams::new(10, 3, 0, 1)).is_zero());
    }

    #[test]
    fn eigen_rejects_non_integral() {
        // (6,2,0,1): theta = 1/2 ± √5/2 without the conference condition.
        assert!(matches!(
            srg_eigen(SrgParams::new(6, 2, 0, 1)),
            Err(Error::Infeasible(_))
        ));
        assert!(srg_eigen(SrgParams::new(5, 0, 0, 1)).is_err());
    }

    #[test]
    fn feasibility_examples() {
        let r = feasibility(SrgParams::new(100, 22, 0, 6), Tier::Extended);
        assert!(r.basic_pass && r.extended_pass == Some(true) && r.passed());

        let r = feasibility(SrgParams::new(6, 2, 0, 1), Tier::Basic);
        assert!(!r.basic_pass);
        let id = r.conditions.iter().find(|c| c.name == "counting-identity").unwrap();
        assert!(!id.passed);
        assert_eq!(id.detail, "k(k-a-1) = 2, (n-k-1)b = 3");

        let r = feasibility(SrgParams::new(28, 9, 0, 4), Tier::Extended);
        assert!(r.basic_pass);
        assert_eq!(r.extended_pass, Some(false));
        let failed: Vec<_> = r.failed().map(|c| c.name).collect();
        assert!(failed.contains(&"absolute-bound-2"), "{failed:?}");
        let abs = r.conditions.iter().find(|c| c.name == "absolute-bound-2").unwrap();
        assert_eq!(abs.detail, "n=28 <= m(m+3)/2 = 27");
    }

    #[test]
    fn complete_bipartite_is_excluded() {
        let r = feasibility(SrgParams::new(8, 4, 0, 4), Tier::Basic);
        assert!(r
            .conditions
            .iter()
            .any(|c| c.name == "not-complete-multipartite" && !c.passed));
        assert!(!r.basic_pass);
        assert!(r.eigen.is_none());
    }

    #[test]
    fn conference_krein_equality() {
        // C5 meets both Krein conditions with equality.
        let r = feasibility(SrgParams::new(5, 2, 0, 1), Tier::Extended);
        assert!(r.passed(), "{:?}", r.conditions);
    }

    #[test]
    fn named_graphs_are_recognised() {
        for g in NamedGraph::ALL {
            let (n, k, a, b) = g.parameters();
            assert_eq!(
                srg_recognize(&g.build().unwrap()).params(),
                Some(SrgParams::new(n, k, a, b)),
                "{g}"
            );
        }
    }
}

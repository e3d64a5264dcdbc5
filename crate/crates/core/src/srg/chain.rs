//! The inequality chain excluding triangle-free strongly regular graphs with
//! `(k + theta2) / n > 0.14`.
//!
//! With `r = -theta2` and `x = r / k`, a graph above the threshold would
//! need `x > 1/5`, `n > r²` and `n < 16 / 0.14²`. Independently, when
//! `theta1 > 0` the independence number is at most the multiplicity of the
//! negative eigenvalue, while the neighbourhood of a vertex is an
//! independent set of size `k`; so `m2 >= k` is necessary.

use serde::Serialize;

use super::{feasibility, SrgEigenData, SrgParams, Tier};
use crate::error::{Error, Result};
use crate::surd::Surd;

/// The threshold 0.14 = 7/50.
pub const TRIGGER: (i128, i128) = (7, 50);

/// One exact comparison `lhs <op> rhs`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainCheck {
    pub name: &'static str,
    pub relation: &'static str,
    pub lhs: Surd,
    pub rhs: Surd,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InertiaCheck {
    /// `false` when `theta1 <= 0`, where the bound does not apply.
    pub applicable: bool,
    pub m_neg: u64,
    pub k: u32,
    pub ok: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChainVerdict {
    /// Ratio at most 0.14 and the inertia requirement holds.
    NotTriggered,
    /// `m2 < k`: no graph with these parameters exists.
    InertiaContradiction,
    /// Triggered but one of the derived inequalities fails: no such graph.
    ChainContradiction,
    /// Triggered with every derived inequality satisfied.
    TriggeredConsistent,
}

impl ChainVerdict {
    pub fn implies_nonexistence(self) -> bool {
        matches!(
            self,
            ChainVerdict::InertiaContradiction | ChainVerdict::ChainContradiction
        )
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChainReport {
    pub params: SrgParams,
    pub eigen: SrgEigenData,
    pub ratio: Surd,
    pub ratio_approx: f64,
    pub triggered: bool,
    pub x: Surd,
    pub checks: Vec<ChainCheck>,
    pub inertia: InertiaCheck,
    pub verdict: ChainVerdict,
}

fn check(name: &'static str, relation: &'static str, lhs: Surd, rhs: Surd) -> ChainCheck {
    let holds = match relation {
        ">" => lhs > rhs,
        "<" => lhs < rhs,
        ">=" => lhs >= rhs,
        _ => unreachable!("unknown relation {relation}"),
    };
    ChainCheck {
        name,
        relation,
        lhs,
        rhs,
        holds,
    }
}

pub fn theorem2_chain(p: SrgParams) -> Result<ChainReport> {
    if p.a != 0 {
        return Err(Error::Domain(format!("{p}: the chain applies to a = 0 only")));
    }
    let report = feasibility(p, Tier::Basic);
    let eigen = report
        .eigen
        .ok_or_else(|| Error::Infeasible(format!("{p} fails basic feasibility")))?;
    let ratio = eigen.ratio(p);
    let threshold = Surd::ratio(TRIGGER.0, TRIGGER.1);
    let triggered = ratio > threshold;

    let k = Surd::int(p.k as i128);
    let n = Surd::int(p.n as i128);
    let r = -eigen.theta2;
    let x = r / k;
    let t2 = threshold * threshold;
    let checks = vec![
        check("ratio-above-threshold", ">", ratio, threshold),
        check("x-above-one-fifth", ">", x, Surd::ratio(1, 5)),
        check("n-above-r-squared", ">", n, r * r),
        check("n-below-16-over-threshold-squared", "<", n, Surd::int(16) / t2),
    ];

    let applicable = eigen.theta1.signum() > 0;
    let inertia = InertiaCheck {
        applicable,
        m_neg: eigen.m2,
        k: p.k,
        ok: !applicable || eigen.m2 >= p.k as u64,
    };

    let verdict = if !inertia.ok {
        ChainVerdict::InertiaContradiction
    } else if !triggered {
        ChainVerdict::NotTriggered
    } else if checks.iter().any(|c| !c.holds) {
        ChainVerdict::ChainContradiction
    } else {
        ChainVerdict::TriggeredConsistent
    };
    Ok(ChainReport {
        params: p,
        eigen,
        ratio,
        ratio_approx: ratio.to_f64(),
        triggered,
        x,
        checks,
        inertia,
        verdict,
    })
}

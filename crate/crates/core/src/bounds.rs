//! Closed-form spectral thresholds for `d`-regular graphs, asymptotic graph counts,
//! and short-cycle expectations. All eigenvalue thresholds are normalized by `d`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Diameter;

/// Tolerance used to snap `log_{sqrt(d-1)} n` onto an integer.
const INTEGRAL_SNAP: f64 = 1e-12;

/// `2 sqrt(d - 1) / d`.
pub fn ramanujan_threshold(d: usize) -> f64 {
    2.0 * ((d - 1) as f64).sqrt() / d as f64
}

/// Smallest integer `r` with `log_{sqrt(d-1)}(n) <= r - 1`.
pub fn weak_bound_radius(n: usize, d: usize) -> Result<u64> {
    if d < 3 {
        return Err(Error::DegenerateBase(d));
    }
    let k = (n as f64).ln() / ((d - 1) as f64).sqrt().ln();
    let k = if (k - k.round()).abs() < INTEGRAL_SNAP {
        k.round()
    } else {
        k
    };
    Ok(k.ceil().max(0.0) as u64 + 1)
}

/// Alon-Boppana style weak lower bound `ramanujan(d) * (1 - 1/(2r))`.
pub fn weak_lower_bound(n: usize, d: usize) -> Result<f64> {
    let r = weak_bound_radius(n, d)? as f64;
    Ok(ramanujan_threshold(d) * (1.0 - 1.0 / (2.0 * r)))
}

/// `ramanujan(d) * (1 - 1/(2d))`, the target a search aims to cross.
pub fn weak_optimal_threshold(d: usize) -> f64 {
    ramanujan_threshold(d) * (1.0 - 1.0 / (2.0 * d as f64))
}

/// `ramanujan(d) - (2 sqrt(d-1) - 1) / (d * floor(m/2))` for diameter `m`.
///
/// `None` for `m < 2` and for disconnected graphs.
pub fn strict_lower_bound(d: usize, diameter: Diameter) -> Option<f64> {
    let half = diameter.finite()? / 2;
    if half == 0 {
        return None;
    }
    let root = ((d - 1) as f64).sqrt();
    Some(ramanujan_threshold(d) - (2.0 * root - 1.0) / (d as f64 * half as f64))
}

/// Natural log of the asymptotic number of labelled `d`-regular graphs on `n`
/// vertices: `(nd/2)(ln(nd) - 1) + ln(2)/2 + (1 - d^2)/4`.
pub fn log_graph_count(n: usize, d: usize) -> f64 {
    let nd = (n * d) as f64;
    let d = d as f64;
    nd / 2.0 * (nd.ln() - 1.0) + std::f64::consts::LN_2 / 2.0 + (1.0 - d * d) / 4.0
}

/// Poisson mean `(d-1)^k / (2k)` of the number of `k`-cycles in a random
/// `d`-regular graph.
pub fn expected_cycle_count(d: usize, k: usize) -> f64 {
    ((d - 1) as f64).powi(k as i32) / (2 * k) as f64
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundSet {
    pub n: Option<usize>,
    pub d: usize,
    /// Diameter the strict bound was computed from.
    pub m: Option<Diameter>,
    pub ramanujan: f64,
    /// Needs `n` and `d >= 3`.
    pub weak_lower: Option<f64>,
    pub weak_optimal: f64,
    pub strict_lower: Option<f64>,
}

impl BoundSet {
    pub fn new(n: Option<usize>, d: usize, m: Option<Diameter>) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidConfig(format!("bounds need d >= 2, got {d}")));
        }
        let weak_lower = match n {
            Some(n) if d >= 3 => Some(weak_lower_bound(n, d)?),
            _ => None,
        };
        Ok(Self {
            n,
            d,
            m,
            ramanujan: ramanujan_threshold(d),
            weak_lower,
            weak_optimal: weak_optimal_threshold(d),
            strict_lower: m.and_then(|m| strict_lower_bound(d, m)),
        })
    }

    pub fn classify(&self, lambda2: f64) -> Classification {
        classify(lambda2, self)
    }
}

/// Strict comparisons of a measured `lambda2` against a [`BoundSet`]. Margins are
/// `threshold - lambda2`, so a positive margin means the graph is below the line.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub lambda2: f64,
    pub is_ramanujan: bool,
    pub below_weak_optimal: bool,
    pub below_weak_lower: Option<bool>,
    pub above_strict: Option<bool>,
    pub ramanujan_margin: f64,
    pub weak_optimal_margin: f64,
    pub weak_lower_margin: Option<f64>,
    pub strict_margin: Option<f64>,
}

pub fn classify(lambda2: f64, bounds: &BoundSet) -> Classification {
    Classification {
        lambda2,
        is_ramanujan: lambda2 < bounds.ramanujan,
        below_weak_optimal: lambda2 < bounds.weak_optimal,
        below_weak_lower: bounds.weak_lower.map(|w| lambda2 < w),
        above_strict: bounds.strict_lower.map(|s| lambda2 > s),
        ramanujan_margin: bounds.ramanujan - lambda2,
        weak_optimal_margin: bounds.weak_optimal - lambda2,
        weak_lower_margin: bounds.weak_lower.map(|w| w - lambda2),
        strict_margin: bounds.strict_lower.map(|s| s - lambda2),
    }
}

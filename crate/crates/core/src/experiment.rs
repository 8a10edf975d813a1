//! Single-switch progressions: how `lambda2` evolves as switches accumulate on a
//! circulant starting graph.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::bounds::ramanujan_threshold;
use crate::error::Result;
use crate::graph::RegularGraph;
use crate::randomize::switch_in_place;
use crate::spectrum::lambda2;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SwitchProgression {
    pub n: usize,
    pub d: usize,
    /// `lambdas[0]` is the circulant; `lambdas[i]` follows the `i`-th switch attempt.
    pub lambdas: Vec<f64>,
    pub accepted: usize,
}

impl SwitchProgression {
    /// Graphs after at least one switch attempt that fall strictly below the
    /// Ramanujan threshold. With no attempts, the circulant alone is counted.
    pub fn below_ramanujan(&self) -> usize {
        let t = ramanujan_threshold(self.d);
        self.switched().iter().filter(|&&l| l < t).count()
    }

    pub fn fraction_below_ramanujan(&self) -> f64 {
        self.below_ramanujan() as f64 / self.switched().len() as f64
    }

    fn switched(&self) -> &[f64] {
        if self.lambdas.len() > 1 {
            &self.lambdas[1..]
        } else {
            &self.lambdas
        }
    }
}

pub fn switch_progression<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    count: usize,
    rng: &mut R,
) -> Result<SwitchProgression> {
    let mut graph = RegularGraph::circulant(n, d)?;
    let mut lambdas = Vec::with_capacity(count + 1);
    lambdas.push(lambda2(&graph));
    let mut accepted = 0;
    for _ in 0..count {
        if switch_in_place(&mut graph, rng) {
            accepted += 1;
            lambdas.push(lambda2(&graph));
        } else {
            let last = *lambdas.last().unwrap();
            lambdas.push(last);
        }
    }
    Ok(SwitchProgression {
        n,
        d,
        lambdas,
        accepted,
    })
}

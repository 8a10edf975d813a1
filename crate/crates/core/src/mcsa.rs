//! Metropolis coupled simulated annealing.
//!
//! `N` annealing chains start at temperature 1 with linearly spaced cooling rates;
//! chain `i` (1-based) proposes moves made of `i` edge switches. After every chain
//! has run one partial anneal, the chains are ranked by the `lambda2` they reached
//! and the coldest temperature is handed to the best one. With more than two
//! chains a random pair is then exchanged. The outer loop runs until the hottest
//! chain drops to `t_min` or a stop rule fires.

use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::anneal::AnnealChain;
use crate::bounds::{ramanujan_threshold, weak_optimal_threshold};
use crate::error::{Error, Result};
use crate::graph::{check_parity, RegularGraph};
use crate::randomize::random_regular_graph;
use crate::seeded_rng;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "rule", content = "value")]
pub enum StopRule {
    None,
    Ramanujan,
    WeakOptimal,
    Target(f64),
}

impl StopRule {
    /// Threshold that `lambda2` must fall strictly below.
    pub fn threshold(self, d: usize) -> Option<f64> {
        match self {
            StopRule::None => None,
            StopRule::Ramanujan => Some(ramanujan_threshold(d)),
            StopRule::WeakOptimal => Some(weak_optimal_threshold(d)),
            StopRule::Target(t) => Some(t),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SwapRule {
    #[default]
    Unconditional,
    /// Exchange with probability `min(1, exp((l_a - l_b)(1/T_a - 1/T_b)))`.
    Metropolis,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RankingMode {
    /// The best chain of the step receives the coldest temperature.
    #[default]
    ColdestToBest,
    /// Reorder graphs and temperatures together by rank, keeping each graph's
    /// temperature; a random swap then exchanges graphs only.
    ReorderPairs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    TemperatureFloor,
    Ramanujan,
    WeakOptimal,
    Target,
    StepLimit,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct McsaConfig {
    pub vertices: usize,
    pub degree: usize,
    pub chains: usize,
    pub min_cooling: f64,
    pub max_cooling: f64,
    pub t_min: f64,
    pub trials_per_step: usize,
    /// Switch attempts applied to each starting circulant; `None` means `3|E|`.
    pub warmup_switches: Option<usize>,
    pub stop_rule: StopRule,
    pub swap_rule: SwapRule,
    pub ranking: RankingMode,
    pub max_steps: Option<usize>,
    pub seed: u64,
    pub parallel: bool,
}

impl McsaConfig {
    pub fn new(vertices: usize, degree: usize) -> Self {
        Self {
            vertices,
            degree,
            chains: 8,
            min_cooling: 0.90,
            max_cooling: 0.99,
            t_min: 1e-3,
            trials_per_step: 10,
            warmup_switches: None,
            stop_rule: StopRule::None,
            swap_rule: SwapRule::Unconditional,
            ranking: RankingMode::ColdestToBest,
            max_steps: None,
            seed: 0,
            parallel: true,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_parity(self.vertices, self.degree)?;
        if self.chains == 0 {
            return Err(Error::InvalidConfig("need at least one chain".into()));
        }
        let edges = self.vertices * self.degree / 2;
        if self.chains > edges {
            return Err(Error::InvalidConfig(format!(
                "{} chains exceed the {edges} edges available for neighbor widths",
                self.chains
            )));
        }
        let in_unit = |x: f64| x > 0.0 && x < 1.0;
        if !(in_unit(self.min_cooling) && in_unit(self.max_cooling) && self.min_cooling <= self.max_cooling) {
            return Err(Error::InvalidCooling {
                min: self.min_cooling,
                max: self.max_cooling,
            });
        }
        if !(self.t_min > 0.0 && self.t_min.is_finite()) {
            return Err(Error::InvalidConfig(format!("t_min must be positive, got {}", self.t_min)));
        }
        if self.trials_per_step == 0 {
            return Err(Error::InvalidConfig("trials per step must be at least 1".into()));
        }
        if let StopRule::Target(t) = self.stop_rule {
            if !t.is_finite() {
                return Err(Error::InvalidConfig(format!("stop target must be finite, got {t}")));
            }
        }
        Ok(())
    }

    pub fn warmup(&self) -> usize {
        self.warmup_switches
            .unwrap_or(3 * self.vertices * self.degree / 2)
    }

    /// `chains` rates starting at `min_cooling` with spacing `(max - min) / chains`.
    pub fn cooling_rates(&self) -> Vec<f64> {
        let step = (self.max_cooling - self.min_cooling) / self.chains as f64;
        (0..self.chains)
            .map(|i| self.min_cooling + i as f64 * step)
            .collect()
    }

    fn step_options(&self) -> StepOptions {
        StepOptions {
            trials: self.trials_per_step,
            swap_rule: self.swap_rule,
            ranking: self.ranking,
            parallel: self.parallel,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StepOptions {
    pub trials: usize,
    pub swap_rule: SwapRule,
    pub ranking: RankingMode,
    pub parallel: bool,
}

impl Default for StepOptions {
    fn default() -> Self {
        Self {
            trials: 10,
            swap_rule: SwapRule::Unconditional,
            ranking: RankingMode::ColdestToBest,
            parallel: false,
        }
    }
}

/// What one coupled step did.
#[derive(Clone, Debug, PartialEq)]
pub struct StepReport {
    /// Lowest `lambda2` reached by any chain this step.
    pub min_lambda: f64,
    /// Per-slot step `lambda2`, before ranking.
    pub step_lambdas: Vec<f64>,
    /// Per-slot temperatures right after ranking, before the random swap.
    pub ranked_temperatures: Vec<f64>,
    /// Slots exchanged by the random swap, if one happened.
    pub swapped: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TracePoint {
    pub step: usize,
    pub best_lambda2: f64,
    pub coldest_temperature: f64,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub seed: u64,
    /// Step 0 is the state right after the chains were set up.
    pub trace: Vec<TracePoint>,
    pub stop_reason: StopReason,
    pub total_steps: usize,
    pub best_lambda2: f64,
    pub elapsed_seconds: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct McsaOutcome {
    pub best_graph: RegularGraph,
    pub best_lambda: f64,
    pub record: RunRecord,
}

/// Builds the chain ensemble from `config.seed`.
pub fn define_coupling(config: &McsaConfig) -> Result<Vec<AnnealChain>> {
    define_coupling_with(config, &mut seeded_rng(config.seed))
}

pub fn define_coupling_with<R: Rng + ?Sized>(config: &McsaConfig, rng: &mut R) -> Result<Vec<AnnealChain>> {
    config.validate()?;
    let warmup = config.warmup();
    config
        .cooling_rates()
        .into_iter()
        .enumerate()
        .map(|(i, rate)| {
            let start = random_regular_graph(config.vertices, config.degree, warmup, rng)?;
            AnnealChain::new(start.graph, 1.0, rate, i + 1)
        })
        .collect()
}

/// Advances every chain by one partial anneal, ranks, and maybe swaps a pair.
///
/// Each chain draws from its own generator seeded from `rng`, so the parallel and
/// sequential paths give identical results.
pub fn perform_one_step<R: Rng + ?Sized>(
    chains: &mut [AnnealChain],
    opts: &StepOptions,
    rng: &mut R,
) -> StepReport {
    assert!(!chains.is_empty(), "perform_one_step needs at least one chain");
    let seeds: Vec<u64> = (0..chains.len()).map(|_| rng.random()).collect();
    let run = |(chain, seed): (&mut AnnealChain, u64)| chain.partial_anneal(opts.trials, &mut seeded_rng(seed));
    let step_lambdas: Vec<f64> = if opts.parallel {
        chains.par_iter_mut().zip(seeds).map(run).collect()
    } else {
        chains.iter_mut().zip(seeds).map(run).collect()
    };
    let min_lambda = step_lambdas.iter().copied().fold(f64::INFINITY, f64::min);

    let mut order: Vec<usize> = (0..chains.len()).collect();
    order.sort_by(|&a, &b| step_lambdas[a].total_cmp(&step_lambdas[b]).then(a.cmp(&b)));
    match opts.ranking {
        RankingMode::ColdestToBest => {
            let mut temps: Vec<f64> = chains.iter().map(|c| c.temperature).collect();
            temps.sort_by(f64::total_cmp);
            for (rank, &slot) in order.iter().enumerate() {
                chains[slot].temperature = temps[rank];
            }
        }
        RankingMode::ReorderPairs => {
            let states: Vec<_> = order
                .iter()
                .map(|&slot| {
                    let c = &chains[slot];
                    (c.graph.clone(), c.lambda, c.temperature, c.best_graph.clone(), c.best_lambda)
                })
                .collect();
            for (chain, (graph, lambda, temperature, best_graph, best_lambda)) in chains.iter_mut().zip(states) {
                chain.graph = graph;
                chain.lambda = lambda;
                chain.temperature = temperature;
                chain.best_graph = best_graph;
                chain.best_lambda = best_lambda;
            }
        }
    }
    let ranked_temperatures = chains.iter().map(|c| c.temperature).collect();

    let mut swapped = None;
    if chains.len() > 2 {
        let a = rng.random_range(0..chains.len());
        let mut b = rng.random_range(0..chains.len() - 1);
        if b >= a {
            b += 1;
        }
        let accept = match opts.swap_rule {
            SwapRule::Unconditional => true,
            SwapRule::Metropolis => {
                let (ca, cb) = (&chains[a], &chains[b]);
                let exponent = (ca.lambda - cb.lambda) * (1.0 / ca.temperature - 1.0 / cb.temperature);
                exponent.exp().min(1.0) > rng.random::<f64>()
            }
        };
        if accept {
            exchange(chains, a, b, opts.ranking);
            swapped = Some((a, b));
        }
    }

    StepReport {
        min_lambda,
        step_lambdas,
        ranked_temperatures,
        swapped,
    }
}

/// Swaps solution state between two slots. Neighbor widths stay with the slot.
fn exchange(chains: &mut [AnnealChain], a: usize, b: usize, ranking: RankingMode) {
    let (lo, hi) = (a.min(b), a.max(b));
    let (left, right) = chains.split_at_mut(hi);
    let (x, y) = (&mut left[lo], &mut right[0]);
    std::mem::swap(&mut x.graph, &mut y.graph);
    std::mem::swap(&mut x.lambda, &mut y.lambda);
    std::mem::swap(&mut x.best_graph, &mut y.best_graph);
    std::mem::swap(&mut x.best_lambda, &mut y.best_lambda);
    if ranking == RankingMode::ColdestToBest {
        std::mem::swap(&mut x.temperature, &mut y.temperature);
        std::mem::swap(&mut x.cooling_rate, &mut y.cooling_rate);
    }
}

fn max_temperature(chains: &[AnnealChain]) -> f64 {
    chains.iter().map(|c| c.temperature).fold(f64::NEG_INFINITY, f64::max)
}

fn min_temperature(chains: &[AnnealChain]) -> f64 {
    chains.iter().map(|c| c.temperature).fold(f64::INFINITY, f64::min)
}

fn best_chain(chains: &[AnnealChain]) -> &AnnealChain {
    chains
        .iter()
        .min_by(|a, b| a.best_lambda.total_cmp(&b.best_lambda))
        .expect("at least one chain")
}

/// Runs the full coupled search described by `config`.
pub fn coupled_annealing(config: &McsaConfig) -> Result<McsaOutcome> {
    coupled_annealing_with(config, |_, _| {})
}

/// [`coupled_annealing`] with a callback after every step.
pub fn coupled_annealing_with<F>(config: &McsaConfig, mut on_step: F) -> Result<McsaOutcome>
where
    F: FnMut(&[AnnealChain], &StepReport),
{
    let start = Instant::now();
    let mut rng = seeded_rng(config.seed);
    let mut chains = define_coupling_with(config, &mut rng)?;
    let opts = config.step_options();
    let threshold = config.stop_rule.threshold(config.degree);

    let first = best_chain(&chains);
    let mut best_lambda = first.best_lambda;
    let mut best_graph = first.best_graph.clone();
    let mut trace = vec![TracePoint {
        step: 0,
        best_lambda2: best_lambda,
        coldest_temperature: min_temperature(&chains),
        seconds: start.elapsed().as_secs_f64(),
    }];

    let mut steps = 0;
    let stop_reason = loop {
        if max_temperature(&chains) <= config.t_min {
            break StopReason::TemperatureFloor;
        }
        if config.max_steps.is_some_and(|limit| steps >= limit) {
            break StopReason::StepLimit;
        }
        let report = perform_one_step(&mut chains, &opts, &mut rng);
        steps += 1;
        on_step(&chains, &report);

        let leader = best_chain(&chains);
        if leader.best_lambda < best_lambda {
            best_lambda = leader.best_lambda;
            best_graph = leader.best_graph.clone();
        }
        trace.push(TracePoint {
            step: steps,
            best_lambda2: best_lambda,
            coldest_temperature: min_temperature(&chains),
            seconds: start.elapsed().as_secs_f64(),
        });

        if threshold.is_some_and(|t| best_lambda < t) {
            break match config.stop_rule {
                StopRule::Ramanujan => StopReason::Ramanujan,
                StopRule::WeakOptimal => StopReason::WeakOptimal,
                _ => StopReason::Target,
            };
        }
    };

    Ok(McsaOutcome {
        best_graph,
        best_lambda,
        record: RunRecord {
            seed: config.seed,
            trace,
            stop_reason,
            total_steps: steps,
            best_lambda2: best_lambda,
            elapsed_seconds: start.elapsed().as_secs_f64(),
        },
    })
}

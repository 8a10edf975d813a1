//! Single-chain simulated annealing over regular graphs, minimizing `lambda2`.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::RegularGraph;
use crate::randomize::n_switch_neighbor;
use crate::spectrum::lambda2;

/// Metropolis acceptance `min(1, exp((current - candidate) / T))`.
pub fn acceptance_probability(current: f64, candidate: f64, temperature: f64) -> f64 {
    debug_assert!(temperature > 0.0);
    ((current - candidate) / temperature).exp().min(1.0)
}

/// One annealing chain: the current solution plus a separate global-best store.
///
/// The current graph may be worse than the best one; the best store only ever
/// improves.
#[derive(Clone, Debug, PartialEq)]
pub struct AnnealChain {
    pub(crate) graph: RegularGraph,
    pub(crate) lambda: f64,
    pub(crate) temperature: f64,
    pub(crate) cooling_rate: f64,
    pub(crate) neighbor_width: usize,
    pub(crate) best_graph: RegularGraph,
    pub(crate) best_lambda: f64,
}

impl AnnealChain {
    pub fn new(
        graph: RegularGraph,
        temperature: f64,
        cooling_rate: f64,
        neighbor_width: usize,
    ) -> Result<Self> {
        if !(temperature > 0.0 && temperature.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "temperature must be positive, got {temperature}"
            )));
        }
        if !(cooling_rate > 0.0 && cooling_rate < 1.0) {
            return Err(Error::InvalidCooling {
                min: cooling_rate,
                max: cooling_rate,
            });
        }
        if neighbor_width == 0 {
            return Err(Error::InvalidConfig("neighbor width must be at least 1".into()));
        }
        let lambda = lambda2(&graph);
        Ok(Self {
            best_graph: graph.clone(),
            best_lambda: lambda,
            graph,
            lambda,
            temperature,
            cooling_rate,
            neighbor_width,
        })
    }

    pub fn graph(&self) -> &RegularGraph {
        &self.graph
    }

    /// Cached `lambda2` of [`Self::graph`].
    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn cooling_rate(&self) -> f64 {
        self.cooling_rate
    }

    pub fn neighbor_width(&self) -> usize {
        self.neighbor_width
    }

    pub fn best_graph(&self) -> &RegularGraph {
        &self.best_graph
    }

    pub fn best_lambda(&self) -> f64 {
        self.best_lambda
    }

    /// Runs `trials` proposals at the current temperature, then cools once.
    ///
    /// Returns the lowest `lambda2` seen during the call, counting the state the
    /// chain started from.
    pub fn partial_anneal<R: Rng + ?Sized>(&mut self, trials: usize, rng: &mut R) -> f64 {
        self.partial_anneal_observed(trials, rng, |_, _| {})
    }

    /// [`Self::partial_anneal`] with a callback on every proposed graph and its `lambda2`.
    pub fn partial_anneal_observed<R, F>(&mut self, trials: usize, rng: &mut R, mut observe: F) -> f64
    where
        R: Rng + ?Sized,
        F: FnMut(&RegularGraph, f64),
    {
        let mut step_best = self.lambda;
        for _ in 0..trials {
            let candidate = n_switch_neighbor(&self.graph, self.neighbor_width, rng);
            let cand_lambda = lambda2(&candidate);
            observe(&candidate, cand_lambda);
            step_best = step_best.min(cand_lambda);

            if cand_lambda < self.best_lambda {
                self.best_lambda = cand_lambda;
                self.best_graph = candidate.clone();
            }
            let accept = cand_lambda < self.lambda
                || acceptance_probability(self.lambda, cand_lambda, self.temperature)
                    > rng.random::<f64>();
            if accept {
                self.graph = candidate;
                self.lambda = cand_lambda;
            }
        }
        self.temperature *= self.cooling_rate;
        step_best
    }
}

/// Value-style wrapper around [`AnnealChain::partial_anneal`].
pub fn partial_anneal<R: Rng + ?Sized>(mut chain: AnnealChain, trials: usize, rng: &mut R) -> AnnealChain {
    chain.partial_anneal(trials, rng);
    chain
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::randomize::random_regular_graph;
    use crate::seeded_rng;
    use approx::assert_abs_diff_eq;

    fn chain(n: usize, d: usize, seed: u64) -> AnnealChain {
        let g = random_regular_graph(n, d, 3 * n * d / 2, &mut seeded_rng(seed))
            .unwrap()
            .graph;
        AnnealChain::new(g, 1.0, 0.9, 3).unwrap()
    }

    #[test]
    fn acceptance() {
        assert_eq!(acceptance_probability(0.7, 0.6, 0.1), 1.0);
        assert_eq!(acceptance_probability(0.7, 0.7, 0.1), 1.0);
        assert_abs_diff_eq!(
            acceptance_probability(0.70, 0.75, 0.05),
            (-1f64).exp(),
            epsilon = 1e-12
        );
        assert_eq!(acceptance_probability(0.1, 0.9, 1e-300), 0.0);
        assert!(acceptance_probability(0.5, 0.5 + 1e-9, 1e-12) < 1e-9);
    }

    #[test]
    fn zero_trials_only_cools() {
        let c = chain(20, 3, 1);
        let out = partial_anneal(c.clone(), 0, &mut seeded_rng(5));
        assert_eq!(out.graph, c.graph);
        assert_eq!(out.temperature, c.temperature * c.cooling_rate);
    }

    #[test]
    fn single_cooling_per_call() {
        let mut c = chain(30, 3, 2);
        let t0 = c.temperature();
        c.partial_anneal(15, &mut seeded_rng(9));
        assert_eq!(c.temperature(), t0 * 0.9);
    }

    #[test]
    fn complete_graph_chain_stays_put() {
        let k4 = RegularGraph::circulant(4, 3).unwrap();
        let mut c = AnnealChain::new(k4.clone(), 1.0, 0.5, 2).unwrap();
        for _ in 0..5 {
            c.partial_anneal(10, &mut seeded_rng(3));
        }
        assert_abs_diff_eq!(c.best_lambda(), 1.0 / 3.0, epsilon = 1e-12);
        assert_eq!(c.best_graph(), &k4);
    }

    #[test]
    fn best_is_monotone_and_below_every_proposal() {
        let mut c = chain(24, 3, 4);
        let mut rng = seeded_rng(11);
        let mut prev = c.best_lambda();
        let mut min_seen = f64::INFINITY;
        for _ in 0..20 {
            c.partial_anneal_observed(5, &mut rng, |g, l| {
                assert_eq!(g.matrix().is_regular(), Some(3));
                assert!(g.matrix().is_symmetric() && !g.matrix().has_loops());
                min_seen = min_seen.min(l);
            });
            assert!(c.best_lambda() <= prev);
            assert!(c.best_lambda() <= min_seen);
            assert_abs_diff_eq!(c.best_lambda(), lambda2(c.best_graph()), epsilon = 1e-12);
            assert_abs_diff_eq!(c.lambda(), lambda2(c.graph()), epsilon = 1e-12);
            prev = c.best_lambda();
        }
    }

    #[test]
    fn seeded_calls_repeat() {
        let a = partial_anneal(chain(20, 4, 6), 12, &mut seeded_rng(1));
        let b = partial_anneal(chain(20, 4, 6), 12, &mut seeded_rng(1));
        assert_eq!(a, b);
    }

    #[test]
    fn cold_chain_is_greedy() {
        let g = random_regular_graph(30, 3, 200, &mut seeded_rng(8)).unwrap().graph;
        let mut c = AnnealChain::new(g, 1e-12, 0.9, 2).unwrap();
        let mut rng = seeded_rng(2);
        for _ in 0..10 {
            let before = c.lambda();
            c.partial_anneal(5, &mut rng);
            // equal-lambda moves are always taken; allow eigensolver noise
            assert!(c.lambda() <= before + 1e-12);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        let g = RegularGraph::circulant(10, 3).unwrap();
        assert!(AnnealChain::new(g.clone(), 0.0, 0.9, 1).is_err());
        assert!(AnnealChain::new(g.clone(), 1.0, 1.0, 1).is_err());
        assert!(AnnealChain::new(g, 1.0, 0.9, 0).is_err());
    }
}

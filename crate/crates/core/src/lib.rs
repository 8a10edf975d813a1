//! Construction, randomization and spectral optimization of finite regular graphs.
//!
//! The crate builds deterministic circulant `d`-regular graphs, randomizes them with
//! degree-preserving double edge switches, and searches for graphs with a small
//! normalized second eigenvalue using Metropolis coupled simulated annealing. The
//! [`bounds`] module carries the closed-form thresholds (Ramanujan, weak, strict)
//! used to classify the results.
//!
//! ```
//! use rand::SeedableRng;
//! use regraph::{bounds, randomize, spectrum, RegularGraph};
//!
//! let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
//! let base = RegularGraph::circulant(20, 3).unwrap();
//! let random = randomize::random_regular_graph(20, 3, 90, &mut rng).unwrap();
//! assert_eq!(random.graph.edge_count(), base.edge_count());
//! let l2 = spectrum::lambda2(&base);
//! assert!(l2 > bounds::ramanujan_threshold(3));
//! ```

pub mod anneal;
pub mod bounds;
pub mod eigen;
pub mod error;
pub mod experiment;
pub mod graph;
pub mod io;
pub mod mcsa;
pub mod randomize;
pub mod spectrum;

pub use anneal::AnnealChain;
pub use bounds::{BoundSet, Classification};
pub use error::{Error, Result};
pub use graph::{AdjacencyMatrix, Diameter, Edge, RegularGraph};
pub use mcsa::{McsaConfig, McsaOutcome, RunRecord, StopReason, StopRule, SwapRule};
pub use spectrum::SpectrumReport;

/// Seeded generator used by the CLI and the Python bindings.
pub type SeededRng = rand_chacha::ChaCha8Rng;

/// Builds a [`SeededRng`] from a 64-bit seed.
pub fn seeded_rng(seed: u64) -> SeededRng {
    use rand::SeedableRng;
    SeededRng::seed_from_u64(seed)
}

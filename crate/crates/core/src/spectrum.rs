//! Normalized adjacency spectra and the second-eigenvalue objective.
//!
//! Eigenvalues are divided by the degree, so every spectrum lies in `[-1, 1]` with
//! the Perron value at 1. Multiply by `d` to compare against statements about the
//! raw adjacency matrix.

use serde::{Deserialize, Serialize};

use crate::eigen::symmetric_eigenvalues;
use crate::error::Result;
use crate::graph::RegularGraph;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub degree: usize,
    /// Normalized eigenvalues, descending.
    pub eigs: Vec<f64>,
    pub lambda2: f64,
}

impl SpectrumReport {
    /// Counts over `bins` uniform bins on `[-1, 1]`, returned as `(lower edge, count)`.
    /// Bins are half-open except the last, which is closed.
    pub fn histogram(&self, bins: usize) -> Vec<(f64, usize)> {
        histogram(&self.eigs, bins)
    }
}

/// Largest absolute value once one copy of the leading eigenvalue is removed.
/// `eigs` must be sorted descending.
pub fn second_eigenvalue(eigs: &[f64]) -> f64 {
    match eigs.len() {
        0 | 1 => 0.0,
        len => eigs[1].abs().max(eigs[len - 1].abs()),
    }
}

pub fn normalized_spectrum(graph: &RegularGraph) -> Result<SpectrumReport> {
    let n = graph.order();
    let d = graph.degree() as f64;
    let dense: Vec<f64> = graph.matrix().as_slice().iter().map(|&x| x as f64).collect();
    let eigs: Vec<f64> = symmetric_eigenvalues(dense, n)?
        .into_iter()
        .map(|x| x / d)
        .collect();
    let lambda2 = second_eigenvalue(&eigs);
    Ok(SpectrumReport {
        n,
        degree: graph.degree(),
        eigs,
        lambda2,
    })
}

/// The optimization objective. Connected bipartite graphs give 1.
///
/// # Panics
///
/// If the symmetric eigensolver fails to converge, which would be a defect in
/// [`crate::eigen`] rather than a property of the input.
pub fn lambda2(graph: &RegularGraph) -> f64 {
    normalized_spectrum(graph)
        .expect("symmetric eigensolver converges on adjacency matrices")
        .lambda2
}

pub fn eigen_histogram(graph: &RegularGraph, bins: usize) -> Result<Vec<(f64, usize)>> {
    Ok(normalized_spectrum(graph)?.histogram(bins))
}

pub fn histogram(values: &[f64], bins: usize) -> Vec<(f64, usize)> {
    assert!(bins >= 1, "histogram needs at least one bin");
    let width = 2.0 / bins as f64;
    let mut counts = vec![0usize; bins];
    for &x in values {
        let idx = ((x + 1.0) / width).floor();
        let idx = if idx < 0.0 { 0 } else { (idx as usize).min(bins - 1) };
        counts[idx] += 1;
    }
    counts
        .into_iter()
        .enumerate()
        .map(|(i, c)| (-1.0 + i as f64 * width, c))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn complete_graph() {
        let k4 = RegularGraph::circulant(4, 3).unwrap();
        let report = normalized_spectrum(&k4).unwrap();
        assert_abs_diff_eq!(report.eigs[0], 1.0, epsilon = 1e-12);
        for &x in &report.eigs[1..] {
            assert_abs_diff_eq!(x, -1.0 / 3.0, epsilon = 1e-12);
        }
        assert_abs_diff_eq!(lambda2(&k4), 1.0 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn cycles_match_cosines() {
        for n in 3..40 {
            let c = RegularGraph::circulant(n, 2).unwrap();
            let mut expect: Vec<f64> = (0..n).map(|k| (2.0 * PI * k as f64 / n as f64).cos()).collect();
            expect.sort_by(|a, b| b.total_cmp(a));
            let got = normalized_spectrum(&c).unwrap().eigs;
            for (g, e) in got.iter().zip(&expect) {
                assert_abs_diff_eq!(g, e, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn twenty_vertex_cubic_circulant() {
        let g = RegularGraph::circulant(20, 3).unwrap();
        let eigs = normalized_spectrum(&g).unwrap().eigs;
        let target = (2.0 * (9.0 * PI / 10.0).cos() - 1.0) / 3.0;
        assert!(eigs.iter().any(|x| (x - target).abs() < 1e-12));
        assert_abs_diff_eq!(lambda2(&g), -target, epsilon = 1e-12);
    }

    #[test]
    fn bipartite_gives_one() {
        let k33 = RegularGraph::from_edges(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        assert_abs_diff_eq!(lambda2(&k33), 1.0, epsilon = 1e-12);
        let even_cycle = RegularGraph::circulant(10, 2).unwrap();
        assert_abs_diff_eq!(lambda2(&even_cycle), 1.0, epsilon = 1e-12);
    }

    #[test]
    fn histogram_bins() {
        let k4 = RegularGraph::circulant(4, 3).unwrap();
        let h = eigen_histogram(&k4, 4).unwrap();
        assert_eq!(h.iter().map(|b| b.1).collect::<Vec<_>>(), vec![0, 3, 0, 1]);
        assert_abs_diff_eq!(h[1].0, -0.5);
        assert_abs_diff_eq!(h[3].0, 0.5);
        // values hugging the edges land in the outer bins
        let h = histogram(&[-1.0 - 1e-15, 1.0 + 1e-15, 0.0], 3);
        assert_eq!(h.iter().map(|b| b.1).collect::<Vec<_>>(), vec![1, 1, 1]);
        let h = histogram(&[0.3], 1);
        assert_eq!(h, vec![(-1.0, 1)]);
    }
}

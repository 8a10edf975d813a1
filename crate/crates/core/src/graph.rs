//! Dense adjacency-matrix representation of simple undirected regular graphs.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An undirected edge stored as `(u, v)` with `u < v`.
pub type Edge = (usize, usize);

/// Square 0/1 matrix with no structural guarantees.
///
/// This is the raw form read from disk or handed over from Python. It becomes a
/// [`RegularGraph`] only after validation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AdjacencyMatrix {
    n: usize,
    data: Vec<u8>,
}

impl AdjacencyMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0; n * n],
        }
    }

    /// Wraps a row-major buffer. Fails when `data.len() != n * n`.
    pub fn from_row_major(n: usize, data: Vec<u8>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::InvalidAdjacency(format!(
                "expected {} entries for a {n}x{n} matrix, got {}",
                n * n,
                data.len()
            )));
        }
        Ok(Self { n, data })
    }

    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::InvalidAdjacency(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            data.extend_from_slice(row);
        }
        Ok(Self { n, data })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: u8) {
        self.data[i * self.n + j] = value;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.data
    }

    pub fn row_sum(&self, i: usize) -> usize {
        self.row(i).iter().map(|&x| x as usize).sum()
    }

    /// `Some(d)` when every row sums to the same `d`.
    pub fn is_regular(&self) -> Option<usize> {
        if self.n == 0 {
            return None;
        }
        let d = self.row_sum(0);
        (1..self.n).all(|i| self.row_sum(i) == d).then_some(d)
    }

    pub fn has_loops(&self) -> bool {
        (0..self.n).any(|i| self.get(i, i) != 0)
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (i + 1..self.n).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_binary(&self) -> bool {
        self.data.iter().all(|&x| x <= 1)
    }
}

/// Connection state of a graph, as measured by breadth-first search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(m) => Some(m),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(m) => write!(f, "{m}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

/// Checks that a simple `d`-regular graph on `n` vertices can exist.
pub fn check_parity(n: usize, d: usize) -> Result<()> {
    if d == 0 || d >= n {
        return Err(Error::DegreeTooLarge { n, d });
    }
    if n % 2 == 1 && d % 2 == 1 {
        return Err(Error::ParityViolation { n, d });
    }
    Ok(())
}

/// Twice the depth of a `d`-ary tree holding `n` vertices: `2 * ceil(log_d n)`.
///
/// This is a radius heuristic for tree-like graphs and not a bound on the true
/// diameter (`K_4` has diameter 1 but gets 4 here).
pub fn diameter_lower_bound(n: usize, d: usize) -> usize {
    assert!(d >= 2, "diameter_lower_bound needs d >= 2");
    let mut depth = 0;
    let mut reach: u128 = 1;
    while reach < n as u128 {
        reach *= d as u128;
        depth += 1;
    }
    2 * depth
}

/// A validated simple undirected `d`-regular graph.
///
/// Invariants: the adjacency matrix is symmetric and binary, the diagonal is
/// zero, and every row sums to `d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegularGraph {
    degree: usize,
    adj: AdjacencyMatrix,
}

impl RegularGraph {
    /// Circulant graph with offsets `1..=d/2`, plus the diametric offset `n/2`
    /// when `d` is odd.
    pub fn circulant(n: usize, d: usize) -> Result<Self> {
        check_parity(n, d)?;
        let mut adj = AdjacencyMatrix::zeros(n);
        let mut offsets: Vec<usize> = (1..=d / 2).collect();
        if d % 2 == 1 {
            offsets.push(n / 2);
        }
        for i in 0..n {
            for &k in &offsets {
                let j = (i + k) % n;
                adj.set(i, j, 1);
                adj.set(j, i, 1);
            }
        }
        debug_assert_eq!(adj.is_regular(), Some(d));
        Ok(Self { degree: d, adj })
    }

    /// Validates a raw matrix. Disconnected graphs are accepted.
    pub fn from_adjacency(adj: AdjacencyMatrix) -> Result<Self> {
        if adj.order() < 2 {
            return Err(Error::InvalidAdjacency("need at least two vertices".into()));
        }
        if !adj.is_binary() {
            return Err(Error::InvalidAdjacency("entries must be 0 or 1".into()));
        }
        if adj.has_loops() {
            return Err(Error::InvalidAdjacency("nonzero diagonal (loop)".into()));
        }
        if !adj.is_symmetric() {
            return Err(Error::InvalidAdjacency("matrix is not symmetric".into()));
        }
        let degree = adj
            .is_regular()
            .ok_or_else(|| Error::InvalidAdjacency("row sums differ".into()))?;
        if degree == 0 {
            return Err(Error::InvalidAdjacency("graph has no edges".into()));
        }
        Ok(Self { degree, adj })
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self> {
        let mut adj = AdjacencyMatrix::zeros(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidAdjacency(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if adj.get(u, v) == 1 {
                return Err(Error::InvalidAdjacency(format!("duplicate edge ({u}, {v})")));
            }
            adj.set(u, v, 1);
            adj.set(v, u, 1);
        }
        Self::from_adjacency(adj)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.order()
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matrix(&self) -> &AdjacencyMatrix {
        &self.adj
    }

    pub fn into_matrix(self) -> AdjacencyMatrix {
        self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v) == 1
    }

    pub fn edge_count(&self) -> usize {
        self.order() * self.degree / 2
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj
            .row(u)
            .iter()
            .enumerate()
            .filter_map(|(v, &x)| (x == 1).then_some(v))
    }

    /// The `k`-th neighbor of `u` in ascending order.
    pub(crate) fn nth_neighbor(&self, u: usize, k: usize) -> usize {
        self.neighbors(u)
            .nth(k)
            .expect("neighbor index below degree")
    }

    pub fn neighbor_lists(&self) -> Vec<Vec<usize>> {
        (0..self.order()).map(|u| self.neighbors(u).collect()).collect()
    }

    /// All edges `(u, v)` with `u < v`, in ascending lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let n = self.order();
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..n {
            for v in u + 1..n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Largest BFS distance over all vertex pairs.
    pub fn diameter(&self) -> Diameter {
        let n = self.order();
        let lists = self.neighbor_lists();
        let mut dist = vec![usize::MAX; n];
        let mut queue = VecDeque::with_capacity(n);
        let mut best = 0;
        for source in 0..n {
            dist.fill(usize::MAX);
            dist[source] = 0;
            queue.clear();
            queue.push_back(source);
            let mut seen = 1;
            while let Some(u) = queue.pop_front() {
                for &v in &lists[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        best = best.max(dist[v]);
                        seen += 1;
                        queue.push_back(v);
                    }
                }
            }
            if seen < n {
                return Diameter::Infinite;
            }
        }
        Diameter::Finite(best)
    }

    /// Relabels vertices so that old vertex `i` becomes `perm[i]`.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::InvalidConfig("relabeling is not a permutation".into()));
        }
        let mut adj = AdjacencyMatrix::zeros(n);
        for (u, v) in self.edges() {
            adj.set(perm[u], perm[v], 1);
            adj.set(perm[v], perm[u], 1);
        }
        Ok(Self {
            degree: self.degree,
            adj,
        })
    }

    /// Mutable access for the switch operation in `randomize`, which restores the
    /// invariants itself.
    pub(crate) fn matrix_mut(&mut self) -> &mut AdjacencyMatrix {
        &mut self.adj
    }
}

impl TryFrom<AdjacencyMatrix> for RegularGraph {
    type Error = Error;

    fn try_from(adj: AdjacencyMatrix) -> Result<Self> {
        Self::from_adjacency(adj)
    }
}

//! Degree-preserving randomization by double edge switches, and short-cycle counts
//! used to check how well a switch sequence has mixed.

use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, RegularGraph};

/// Result of one switch attempt. A rejected attempt carries the input graph unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchOutcome {
    pub graph: RegularGraph,
    pub accepted: bool,
}

/// A randomized graph together with how many of its switch attempts were accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RandomGraph {
    pub graph: RegularGraph,
    pub attempts: usize,
    pub accepted: usize,
}

/// Removes `e1 = (a, b)` and `e2 = (c, e)` and inserts `(a, e)` and `(c, b)`.
///
/// The matrix writes happen in that order, so a crossed edge that already exists
/// simply stays at 1 and the lost edge shows up as a row-sum deficit. The switch
/// is kept when every touched vertex still has degree `d` and no loop appeared;
/// otherwise the matrix is restored bit for bit and `false` is returned. Edges
/// sharing their first or second endpoint cross back into themselves; that no-op
/// also counts as rejected.
pub fn apply_switch(graph: &mut RegularGraph, e1: Edge, e2: Edge) -> bool {
    let d = graph.degree();
    let (a, b) = e1;
    let (c, e) = e2;
    if a == c || b == e {
        return false;
    }
    let touched = [a, b, c, e];
    let cells = [(a, b), (c, e), (a, e), (c, b)];

    let adj = graph.matrix_mut();
    let saved: Vec<(u8, u8)> = cells
        .iter()
        .map(|&(i, j)| (adj.get(i, j), adj.get(j, i)))
        .collect();

    for (i, j) in [(a, b), (c, e)] {
        adj.set(i, j, 0);
        adj.set(j, i, 0);
    }
    for (i, j) in [(a, e), (c, b)] {
        adj.set(i, j, 1);
        adj.set(j, i, 1);
    }

    let valid = touched
        .iter()
        .all(|&v| adj.get(v, v) == 0 && adj.row_sum(v) == d);
    if !valid {
        for (k, &(i, j)) in cells.iter().enumerate().rev() {
            adj.set(i, j, saved[k].0);
            adj.set(j, i, saved[k].1);
        }
    }
    valid
}

/// Draws an oriented edge uniformly: a uniform (vertex, neighbor slot) pair picks
/// each undirected edge through exactly two orientations. Keeping the orientation
/// random makes both crossings of a pair equally likely, so the switch chain is
/// symmetric and mixes towards the uniform distribution.
fn sample_edge<R: Rng + ?Sized>(graph: &RegularGraph, rng: &mut R) -> Edge {
    let d = graph.degree();
    let t = rng.random_range(0..graph.order() * d);
    let u = t / d;
    (u, graph.nth_neighbor(u, t % d))
}

/// Draws two distinct edges and attempts the crossing in place.
pub fn switch_in_place<R: Rng + ?Sized>(graph: &mut RegularGraph, rng: &mut R) -> bool {
    if graph.edge_count() < 2 {
        return false;
    }
    let e1 = sample_edge(graph, rng);
    let e2 = loop {
        let e = sample_edge(graph, rng);
        if e != e1 && e != (e1.1, e1.0) {
            break e;
        }
    };
    apply_switch(graph, e1, e2)
}

/// One random switch attempt on a copy of `graph`.
pub fn switch_edges<R: Rng + ?Sized>(graph: &RegularGraph, rng: &mut R) -> SwitchOutcome {
    let mut out = graph.clone();
    let accepted = switch_in_place(&mut out, rng);
    SwitchOutcome {
        graph: out,
        accepted,
    }
}

/// Circulant graph followed by exactly `switches` switch attempts.
pub fn random_regular_graph<R: Rng + ?Sized>(
    n: usize,
    d: usize,
    switches: usize,
    rng: &mut R,
) -> Result<RandomGraph> {
    let mut graph = RegularGraph::circulant(n, d)?;
    let accepted = (0..switches)
        .filter(|_| switch_in_place(&mut graph, rng))
        .count();
    Ok(RandomGraph {
        graph,
        attempts: switches,
        accepted,
    })
}

/// Candidate move for annealing: `width` switch attempts applied in sequence.
pub fn n_switch_neighbor<R: Rng + ?Sized>(
    graph: &RegularGraph,
    width: usize,
    rng: &mut R,
) -> RegularGraph {
    let mut out = graph.clone();
    for _ in 0..width {
        switch_in_place(&mut out, rng);
    }
    out
}

/// Number of simple cycles of length `k` (3 to 6).
///
/// Triangles come from `trace(A^3) / 6`. Longer cycles are enumerated as paths
/// rooted at their smallest vertex; each cycle is then seen once per direction.
pub fn count_cycles(graph: &RegularGraph, k: usize) -> Result<u64> {
    match k {
        3 => Ok(trace_cubed(graph) / 6),
        4..=6 => {
            let lists = graph.neighbor_lists();
            let mut on_path = vec![false; graph.order()];
            let mut total = 0u64;
            for root in 0..graph.order() {
                on_path[root] = true;
                total += extend_path(graph, &lists, &mut on_path, root, root, 1, k);
                on_path[root] = false;
            }
            Ok(total / 2)
        }
        _ => Err(Error::UnsupportedLength(k)),
    }
}

fn trace_cubed(graph: &RegularGraph) -> u64 {
    let lists = graph.neighbor_lists();
    let mut trace = 0u64;
    for nbrs in &lists {
        for &j in nbrs {
            let row = graph.matrix().row(j);
            trace += nbrs.iter().filter(|&&l| row[l] == 1).count() as u64;
        }
    }
    trace
}

fn extend_path(
    graph: &RegularGraph,
    lists: &[Vec<usize>],
    on_path: &mut [bool],
    root: usize,
    tip: usize,
    len: usize,
    k: usize,
) -> u64 {
    if len == k {
        return graph.has_edge(tip, root) as u64;
    }
    let mut count = 0;
    for &next in &lists[tip] {
        if next > root && !on_path[next] {
            on_path[next] = true;
            count += extend_path(graph, lists, on_path, root, next, len + 1, k);
            on_path[next] = false;
        }
    }
    count
}

use std::path::PathBuf;

use pyo3::exceptions::{PyOSError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use regraph::mcsa::{McsaConfig, StopRule, SwapRule};
use regraph::{bounds, io, randomize, seeded_rng, spectrum, AdjacencyMatrix, Diameter, Error};

fn to_py(err: Error) -> PyErr {
    match err {
        Error::Io(msg) => PyOSError::new_err(msg),
        Error::ConvergenceFailure(_) => PyRuntimeError::new_err(err.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// A simple undirected d-regular graph.
#[pyclass(name = "RegularGraph", module = "pyregraph", eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyRegularGraph {
    inner: regraph::RegularGraph,
}

impl From<regraph::RegularGraph> for PyRegularGraph {
    fn from(inner: regraph::RegularGraph) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyRegularGraph {
    /// Validates a square 0/1 matrix given as a list of rows.
    #[new]
    fn new(rows: Vec<Vec<u8>>) -> PyResult<Self> {
        let adj = AdjacencyMatrix::from_rows(&rows).map_err(to_py)?;
        regraph::RegularGraph::from_adjacency(adj).map(Self::from).map_err(to_py)
    }

    #[staticmethod]
    fn circulant(n: usize, d: usize) -> PyResult<Self> {
        regraph::RegularGraph::circulant(n, d).map(Self::from).map_err(to_py)
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        regraph::RegularGraph::from_edges(n, &edges).map(Self::from).map_err(to_py)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.order() && v < self.inner.order() && self.inner.has_edge(u, v)
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn adjacency(&self) -> Vec<Vec<u32>> {
        (0..self.inner.order())
            .map(|i| self.inner.matrix().row(i).iter().map(|&x| x as u32).collect())
            .collect()
    }

    /// Longest shortest path, or `None` when disconnected.
    fn diameter(&self) -> Option<usize> {
        self.inner.diameter().finite()
    }

    fn relabeled(&self, perm: Vec<usize>) -> PyResult<Self> {
        self.inner.relabeled(&perm).map(Self::from).map_err(to_py)
    }

    fn spectrum(&self) -> PyResult<Vec<f64>> {
        normalized_spectrum(self)
    }

    fn lambda2(&self) -> PyResult<f64> {
        lambda2(self)
    }

    fn __repr__(&self) -> String {
        format!(
            "RegularGraph(n={}, d={}, edges={})",
            self.inner.order(),
            self.inner.degree(),
            self.inner.edge_count()
        )
    }
}

/// Outcome of a coupled annealing run.
#[pyclass(name = "McsaResult", module = "pyregraph", get_all, skip_from_py_object)]
#[derive(Clone)]
struct PyMcsaResult {
    best_graph: PyRegularGraph,
    best_lambda2: f64,
    stop_reason: String,
    total_steps: usize,
    elapsed_seconds: f64,
    /// `(step, best_lambda2, coldest_temperature, seconds)` rows, step 0 first.
    trace: Vec<(usize, f64, f64, f64)>,
    seed: u64,
}

#[pymethods]
impl PyMcsaResult {
    fn __repr__(&self) -> String {
        format!(
            "McsaResult(best_lambda2={:.6}, stop_reason={:?}, total_steps={})",
            self.best_lambda2, self.stop_reason, self.total_steps
        )
    }
}

#[pyfunction]
fn normalized_spectrum(graph: &PyRegularGraph) -> PyResult<Vec<f64>> {
    spectrum::normalized_spectrum(&graph.inner)
        .map(|r| r.eigs)
        .map_err(to_py)
}

#[pyfunction]
fn lambda2(graph: &PyRegularGraph) -> PyResult<f64> {
    spectrum::normalized_spectrum(&graph.inner)
        .map(|r| r.lambda2)
        .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (graph, bins=20))]
fn eigen_histogram(graph: &PyRegularGraph, bins: usize) -> PyResult<Vec<(f64, usize)>> {
    if bins == 0 {
        return Err(PyValueError::new_err("bins must be at least 1"));
    }
    spectrum::eigen_histogram(&graph.inner, bins).map_err(to_py)
}

/// Circulant graph randomized by `switches` attempts (default 3|E|).
/// Returns `(graph, accepted_switches)`.
#[pyfunction]
#[pyo3(signature = (n, d, switches=None, seed=0))]
fn random_regular_graph(n: usize, d: usize, switches: Option<usize>, seed: u64) -> PyResult<(PyRegularGraph, usize)> {
    let switches = switches.unwrap_or(3 * n * d / 2);
    let r = randomize::random_regular_graph(n, d, switches, &mut seeded_rng(seed)).map_err(to_py)?;
    Ok((r.graph.into(), r.accepted))
}

/// One switch attempt on a copy. Returns `(graph, accepted)`.
#[pyfunction]
#[pyo3(signature = (graph, seed=0))]
fn switch_edges(graph: &PyRegularGraph, seed: u64) -> (PyRegularGraph, bool) {
    let out = randomize::switch_edges(&graph.inner, &mut seeded_rng(seed));
    (out.graph.into(), out.accepted)
}

#[pyfunction]
#[pyo3(signature = (graph, width, seed=0))]
fn n_switch_neighbor(graph: &PyRegularGraph, width: usize, seed: u64) -> PyRegularGraph {
    randomize::n_switch_neighbor(&graph.inner, width, &mut seeded_rng(seed)).into()
}

#[pyfunction]
fn count_cycles(graph: &PyRegularGraph, k: usize) -> PyResult<u64> {
    randomize::count_cycles(&graph.inner, k).map_err(to_py)
}

/// `lambda2` after each of `count` single switches from the circulant graph.
#[pyfunction]
#[pyo3(signature = (n, d, count=499, seed=0))]
fn switch_progression(n: usize, d: usize, count: usize, seed: u64) -> PyResult<Vec<f64>> {
    regraph::experiment::switch_progression(n, d, count, &mut seeded_rng(seed))
        .map(|p| p.lambdas)
        .map_err(to_py)
}

#[pyfunction]
fn ramanujan_threshold(d: usize) -> PyResult<f64> {
    if d < 1 {
        return Err(PyValueError::new_err("d must be at least 1"));
    }
    Ok(bounds::ramanujan_threshold(d))
}

#[pyfunction]
fn weak_optimal_threshold(d: usize) -> PyResult<f64> {
    ramanujan_threshold(d)?;
    Ok(bounds::weak_optimal_threshold(d))
}

#[pyfunction]
fn weak_lower_bound(n: usize, d: usize) -> PyResult<f64> {
    bounds::weak_lower_bound(n, d).map_err(to_py)
}

#[pyfunction]
fn strict_lower_bound(d: usize, m: usize) -> PyResult<Option<f64>> {
    ramanujan_threshold(d)?;
    Ok(bounds::strict_lower_bound(d, Diameter::Finite(m)))
}

#[pyfunction]
fn log_graph_count(n: usize, d: usize) -> f64 {
    bounds::log_graph_count(n, d)
}

#[pyfunction]
fn expected_cycle_count(d: usize, k: usize) -> f64 {
    bounds::expected_cycle_count(d, k)
}

/// All thresholds for `d` (and `n`, `m` when given) as a dict.
#[pyfunction]
#[pyo3(signature = (d, n=None, m=None))]
fn bound_set<'py>(py: Python<'py>, d: usize, n: Option<usize>, m: Option<usize>) -> PyResult<Bound<'py, PyDict>> {
    let b = bounds::BoundSet::new(n, d, m.map(Diameter::Finite)).map_err(to_py)?;
    let out = PyDict::new(py);
    out.set_item("ramanujan", b.ramanujan)?;
    out.set_item("weak_optimal", b.weak_optimal)?;
    out.set_item("weak_lower", b.weak_lower)?;
    out.set_item("strict_lower", b.strict_lower)?;
    Ok(out)
}

fn parse_stop(stop_at: Option<&Bound<'_, PyAny>>) -> PyResult<StopRule> {
    let Some(value) = stop_at else {
        return Ok(StopRule::None);
    };
    if let Ok(target) = value.extract::<f64>() {
        return Ok(StopRule::Target(target));
    }
    match value.extract::<String>()?.to_ascii_lowercase().as_str() {
        "none" => Ok(StopRule::None),
        "ramanujan" => Ok(StopRule::Ramanujan),
        "weak-optimal" | "weak_optimal" => Ok(StopRule::WeakOptimal),
        other => Err(PyValueError::new_err(format!("unknown stop rule {other:?}"))),
    }
}

/// Metropolis coupled simulated annealing. `stop_at` is `None`, `"ramanujan"`,
/// `"weak-optimal"` or a numeric lambda2 target.
#[pyfunction]
#[pyo3(signature = (
    n, d, chains=8, min_cooling=0.90, max_cooling=0.99, t_min=1e-3, trials=10,
    stop_at=None, swap_rule="unconditional", seed=0, max_steps=None, warmup=None
))]
#[allow(clippy::too_many_arguments)]
fn coupled_annealing(
    py: Python<'_>,
    n: usize,
    d: usize,
    chains: usize,
    min_cooling: f64,
    max_cooling: f64,
    t_min: f64,
    trials: usize,
    stop_at: Option<&Bound<'_, PyAny>>,
    swap_rule: &str,
    seed: u64,
    max_steps: Option<usize>,
    warmup: Option<usize>,
) -> PyResult<PyMcsaResult> {
    let swap_rule = match swap_rule {
        "unconditional" => SwapRule::Unconditional,
        "metropolis" => SwapRule::Metropolis,
        other => return Err(PyValueError::new_err(format!("unknown swap rule {other:?}"))),
    };
    let config = McsaConfig {
        chains,
        min_cooling,
        max_cooling,
        t_min,
        trials_per_step: trials,
        stop_rule: parse_stop(stop_at)?,
        swap_rule,
        seed,
        max_steps,
        warmup_switches: warmup,
        ..McsaConfig::new(n, d)
    };
    let out = py
        .detach(|| regraph::mcsa::coupled_annealing(&config))
        .map_err(to_py)?;
    Ok(PyMcsaResult {
        best_graph: out.best_graph.into(),
        best_lambda2: out.best_lambda,
        stop_reason: format!("{:?}", out.record.stop_reason),
        total_steps: out.record.total_steps,
        elapsed_seconds: out.record.elapsed_seconds,
        trace: out
            .record
            .trace
            .iter()
            .map(|p| (p.step, p.best_lambda2, p.coldest_temperature, p.seconds))
            .collect(),
        seed: out.record.seed,
    })
}

#[pyfunction]
fn load_adjacency(path: PathBuf) -> PyResult<PyRegularGraph> {
    io::load_adjacency(path).map(PyRegularGraph::from).map_err(to_py)
}

#[pyfunction]
fn save_adjacency(graph: &PyRegularGraph, path: PathBuf) -> PyResult<()> {
    io::save_adjacency(&graph.inner, path).map_err(to_py)
}

#[pymodule]
fn pyregraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRegularGraph>()?;
    m.add_class::<PyMcsaResult>()?;
    m.add_function(wrap_pyfunction!(normalized_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(lambda2, m)?)?;
    m.add_function(wrap_pyfunction!(eigen_histogram, m)?)?;
    m.add_function(wrap_pyfunction!(random_regular_graph, m)?)?;
    m.add_function(wrap_pyfunction!(switch_edges, m)?)?;
    m.add_function(wrap_pyfunction!(n_switch_neighbor, m)?)?;
    m.add_function(wrap_pyfunction!(count_cycles, m)?)?;
    m.add_function(wrap_pyfunction!(switch_progression, m)?)?;
    m.add_function(wrap_pyfunction!(ramanujan_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(weak_optimal_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(weak_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(strict_lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(log_graph_count, m)?)?;
    m.add_function(wrap_pyfunction!(expected_cycle_count, m)?)?;
    m.add_function(wrap_pyfunction!(bound_set, m)?)?;
    m.add_function(wrap_pyfunction!(coupled_annealing, m)?)?;
    m.add_function(wrap_pyfunction!(load_adjacency, m)?)?;
    m.add_function(wrap_pyfunction!(save_adjacency, m)?)?;
    Ok(())
}

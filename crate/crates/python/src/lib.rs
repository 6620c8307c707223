//! Python bindings: graphs, orderings, the four listers and the brute-force
//! oracle.

use std::time::Duration;

use kclique::ordering::{core_decompose, greedy_color, truss_decompose};
use kclique::{generate, oracle, stats, Algorithm, CliqueSink, EtPolicy, ListConfig, ListReport, Scheme};
use pyo3::exceptions::{PyOSError, PyRuntimeError, PyTimeoutError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn to_py(e: kclique::Error) -> PyErr {
    use kclique::Error as E;
    match e {
        E::TimeLimit(_) => PyTimeoutError::new_err(e.to_string()),
        E::Io(_) => PyOSError::new_err(e.to_string()),
        E::BudgetExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Undirected simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "pykclique", frozen)]
struct PyGraph {
    inner: kclique::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u as usize >= n || v as usize >= n) {
            return Err(PyValueError::new_err(format!(
                "edge ({u}, {v}) out of range for n = {n}"
            )));
        }
        Ok(PyGraph {
            inner: kclique::Graph::from_edges(n, edges),
        })
    }

    /// Reads a whitespace-separated edge list; `#` and `%` start comments.
    /// Vertex labels are renumbered densely; see `raw_id`.
    #[staticmethod]
    fn from_file(path: std::path::PathBuf) -> PyResult<Self> {
        let file = std::fs::File::open(&path).map_err(|e| PyOSError::new_err(format!("{}: {e}", path.display())))?;
        let src = kclique::parse_edge_list(std::io::BufReader::new(file)).map_err(to_py)?;
        Ok(PyGraph {
            inner: kclique::build_graph(&src),
        })
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        let src = kclique::parse_edge_list_str(text).map_err(to_py)?;
        Ok(PyGraph {
            inner: kclique::build_graph(&src),
        })
    }

    #[staticmethod]
    fn complete(n: usize) -> Self {
        PyGraph {
            inner: generate::complete(n),
        }
    }

    #[staticmethod]
    #[pyo3(signature = (p, q=None))]
    fn bipartite(p: usize, q: Option<usize>) -> Self {
        PyGraph {
            inner: generate::bipartite(p, q.unwrap_or(p)),
        }
    }

    #[staticmethod]
    #[pyo3(signature = (n, p, seed=0))]
    fn gnp(n: usize, p: f64, seed: u64) -> PyResult<Self> {
        if !(0.0..=1.0).contains(&p) {
            return Err(PyValueError::new_err("p must lie in [0, 1]"));
        }
        Ok(PyGraph {
            inner: generate::gnp(n, p, seed),
        })
    }

    /// G(n, p) with a clique planted on `k` random vertices.
    #[staticmethod]
    #[pyo3(signature = (n, p, k, seed=0))]
    fn planted(n: usize, p: f64, k: usize, seed: u64) -> PyResult<Self> {
        if !(0.0..=1.0).contains(&p) || k > n {
            return Err(PyValueError::new_err("need 0 <= p <= 1 and k <= n"));
        }
        Ok(PyGraph {
            inner: generate::planted_clique(n, p, k, seed),
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges().to_vec()
    }

    fn neighbors(&self, v: u32) -> PyResult<Vec<u32>> {
        self.check(v)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: u32) -> PyResult<usize> {
        self.check(v)?;
        Ok(self.inner.degree(v))
    }

    fn has_edge(&self, u: u32, v: u32) -> PyResult<bool> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.inner.has_edge(u, v))
    }

    /// Original label of `v` for graphs read from an edge list.
    fn raw_id(&self, v: u32) -> PyResult<u64> {
        self.check(v)?;
        Ok(self.inner.raw_id(v))
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

impl PyGraph {
    fn check(&self, v: u32) -> PyResult<()> {
        if (v as usize) < self.inner.n() {
            Ok(())
        } else {
            Err(PyValueError::new_err(format!("vertex {v} out of range")))
        }
    }
}

fn config(rules: &str, et: &str, scheme: &str, threads: usize, time_limit: Option<f64>) -> PyResult<ListConfig> {
    let mut cfg = ListConfig::default();
    (cfg.prune.rule1, cfg.prune.rule2) = match rules {
        "none" => (false, false),
        "r1" => (true, false),
        "r1r2" => (true, true),
        _ => return Err(PyValueError::new_err(format!("unknown rules {rules:?}"))),
    };
    cfg.prune.et = et.parse::<EtPolicy>().map_err(to_py)?;
    cfg.scheme = scheme.parse::<Scheme>().map_err(to_py)?;
    cfg.threads = threads;
    if let Some(s) = time_limit {
        if !(s >= 0.0 && s.is_finite()) {
            return Err(PyValueError::new_err("time_limit must be a non-negative number"));
        }
        cfg.time_limit = Some(Duration::from_secs_f64(s));
    }
    Ok(cfg)
}

#[allow(clippy::too_many_arguments)]
fn run_list(
    py: Python<'_>,
    graph: &PyGraph,
    k: usize,
    algorithm: &str,
    rules: &str,
    et: &str,
    scheme: &str,
    threads: usize,
    time_limit: Option<f64>,
    mut sink: CliqueSink,
) -> PyResult<(ListReport, CliqueSink)> {
    let algo = algorithm.parse::<Algorithm>().map_err(to_py)?;
    let cfg = config(rules, et, scheme, threads, time_limit)?;
    let g = &graph.inner;
    let report = py
        .detach(|| kclique::list(g, k, algo, &cfg, &mut sink))
        .map_err(to_py)?;
    Ok((report, sink))
}

/// Number of k-cliques.
#[pyfunction]
#[pyo3(signature = (graph, k, algorithm="ebbkc-h", rules="r1r2", et="auto", scheme="np", threads=1, time_limit=None))]
#[allow(clippy::too_many_arguments)]
fn count(
    py: Python<'_>,
    graph: &PyGraph,
    k: usize,
    algorithm: &str,
    rules: &str,
    et: &str,
    scheme: &str,
    threads: usize,
    time_limit: Option<f64>,
) -> PyResult<u64> {
    let (report, _) = run_list(
        py,
        graph,
        k,
        algorithm,
        rules,
        et,
        scheme,
        threads,
        time_limit,
        CliqueSink::counter(),
    )?;
    Ok(report.count)
}

/// Every k-clique as a sorted list of vertex ids, in no particular order.
#[pyfunction]
#[pyo3(signature = (graph, k, algorithm="ebbkc-h", rules="r1r2", et="auto", scheme="np", threads=1, time_limit=None))]
#[allow(clippy::too_many_arguments)]
fn list_cliques(
    py: Python<'_>,
    graph: &PyGraph,
    k: usize,
    algorithm: &str,
    rules: &str,
    et: &str,
    scheme: &str,
    threads: usize,
    time_limit: Option<f64>,
) -> PyResult<Vec<Vec<u32>>> {
    let (_, mut sink) = run_list(
        py,
        graph,
        k,
        algorithm,
        rules,
        et,
        scheme,
        threads,
        time_limit,
        CliqueSink::collector(),
    )?;
    Ok(sink.take_cliques())
}

/// Count plus timings and branch statistics as a dict.
#[pyfunction]
#[pyo3(signature = (graph, k, algorithm="ebbkc-h", rules="r1r2", et="auto", scheme="np", threads=1, time_limit=None))]
#[allow(clippy::too_many_arguments)]
fn run<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    k: usize,
    algorithm: &str,
    rules: &str,
    et: &str,
    scheme: &str,
    threads: usize,
    time_limit: Option<f64>,
) -> PyResult<Bound<'py, PyDict>> {
    let (r, _) = run_list(
        py,
        graph,
        k,
        algorithm,
        rules,
        et,
        scheme,
        threads,
        time_limit,
        CliqueSink::counter(),
    )?;
    let d = PyDict::new(py);
    d.set_item("algorithm", r.algorithm.name())?;
    d.set_item("k", r.k)?;
    d.set_item("count", r.count)?;
    d.set_item("t_order", r.t_order.as_secs_f64())?;
    d.set_item("t_list", r.t_list.as_secs_f64())?;
    d.set_item("t_total", r.t_total().as_secs_f64())?;
    d.set_item("tau", r.tau)?;
    d.set_item("degeneracy", r.degeneracy)?;
    d.set_item("et_threshold", r.et_threshold)?;
    d.set_item("threads", r.threads)?;
    let s = &r.stats;
    d.set_item("top_branches", s.top_branches)?;
    d.set_item("max_top_candidates", s.max_top_candidates)?;
    d.set_item("pruned_size", s.pruned_size)?;
    d.set_item("pruned_r1", s.pruned_r1)?;
    d.set_item("pruned_r2", s.pruned_r2)?;
    d.set_item("et_fired", s.et_fired)?;
    Ok(d)
}

/// Exhaustive enumeration, sorted. Raises RuntimeError past `budget`
/// candidate checks.
#[pyfunction]
#[pyo3(signature = (graph, k, budget=oracle::DEFAULT_BUDGET))]
fn brute_force(py: Python<'_>, graph: &PyGraph, k: usize, budget: u64) -> PyResult<Vec<Vec<u32>>> {
    let g = &graph.inner;
    let set = py.detach(|| oracle::brute_force_list(g, k, budget)).map_err(to_py)?;
    Ok(set.into_iter().collect())
}

/// `(order, core numbers, degeneracy)` from minimum-degree peeling.
#[pyfunction]
fn core_order(graph: &PyGraph) -> (Vec<u32>, Vec<u32>, u32) {
    let d = core_decompose(&graph.inner);
    (d.order, d.core, d.degeneracy)
}

/// `(edges in peel order, support at removal, tau)`.
#[pyfunction]
fn truss_order(graph: &PyGraph) -> (Vec<(u32, u32)>, Vec<u32>, u32) {
    let g = &graph.inner;
    let t = truss_decompose(g);
    let edges = t.order.iter().map(|&e| g.edge(e)).collect();
    (edges, t.support, t.tau)
}

/// `(colors, order)`: greedy colors from 1 and the vertices by descending
/// color.
#[pyfunction]
fn coloring(graph: &PyGraph) -> (Vec<u32>, Vec<u32>) {
    let c = greedy_color(&graph.inner);
    (c.colors, c.order)
}

/// n, m, dmax, delta, tau and omega (None past `omega_budget`).
#[pyfunction]
#[pyo3(signature = (graph, omega_budget=50_000_000))]
fn graph_stats<'py>(py: Python<'py>, graph: &PyGraph, omega_budget: u64) -> PyResult<Bound<'py, PyDict>> {
    let g = &graph.inner;
    let s = py
        .detach(|| stats::graph_stats(g, Some(omega_budget)))
        .or_else(|e| match e {
            kclique::Error::BudgetExceeded { .. } => stats::graph_stats(g, None),
            e => Err(e),
        });
    let s = s.map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("n", s.n)?;
    d.set_item("m", s.m)?;
    d.set_item("dmax", s.max_degree)?;
    d.set_item("delta", s.degeneracy)?;
    d.set_item("tau", s.tau)?;
    d.set_item("omega", s.omega)?;
    Ok(d)
}

#[pymodule]
fn pykclique(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(list_cliques, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(core_order, m)?)?;
    m.add_function(wrap_pyfunction!(truss_order, m)?)?;
    m.add_function(wrap_pyfunction!(coloring, m)?)?;
    m.add_function(wrap_pyfunction!(graph_stats, m)?)?;
    m.add("ALGORITHMS", Algorithm::ALL.map(|a| a.name()).to_vec())?;
    Ok(())
}

//! Python bindings: graphs, games, covers, the exact solver and the
//! acceptance suites. Structured results come back as plain dicts.

use std::path::PathBuf;
use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use catmouse_core::bounds;
use catmouse_core::cats::{CatSpec, ThinCat};
use catmouse_core::game::{play, GameOptions};
use catmouse_core::graph::{
    gen_spider, parse_graph, scattered_cover, set_radius, sphere, thin_level, write_graph, BallCover, DistanceOracle,
    Graph as CoreGraph, GraphSpec, SpiderSpec,
};
use catmouse_core::harness::{
    brute_force_beliefs, exhaustive_game_value, run_experiment, verify_suite, ExperimentConfig, SuiteName,
};
use catmouse_core::mice::MouseSpec;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py(py: Python<'_>, text: &str) -> PyResult<Py<PyAny>> {
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

/// An immutable connected graph with its distance oracle.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    oracle: Arc<DistanceOracle>,
    label: String,
}

impl PyGraph {
    fn wrap(g: CoreGraph, label: String) -> Self {
        PyGraph { oracle: Arc::new(DistanceOracle::from_graph(g)), label }
    }

    fn check(&self, v: usize) -> PyResult<()> {
        self.oracle.graph().check_vertex(v).map_err(value_err)
    }
}

#[pymethods]
impl PyGraph {
    /// Build from a generator spec such as `spider:t=12` or `grid:3x4`.
    #[staticmethod]
    fn from_spec(spec: &str) -> PyResult<Self> {
        let s: GraphSpec = spec.parse().map_err(value_err)?;
        Ok(Self::wrap(s.build().map_err(value_err)?, s.to_string()))
    }

    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Self::wrap(CoreGraph::from_edges(n, edges).map_err(value_err)?, "edges".into()))
    }

    /// Parse the `n m` / `u v` edge-list text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self::wrap(parse_graph(text).map_err(value_err)?, "edges".into()))
    }

    #[staticmethod]
    fn spider(t: usize, extra: usize) -> PyResult<Self> {
        let spec = SpiderSpec { t, extra };
        Ok(Self::wrap(gen_spider(spec).map_err(value_err)?, GraphSpec::Spider(spec).to_string()))
    }

    #[getter]
    fn n(&self) -> usize {
        self.oracle.n()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.oracle.graph().edge_count()
    }

    #[getter]
    fn label(&self) -> &str {
        &self.label
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.oracle.graph().edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(self.oracle.graph().neighbors(v).to_vec())
    }

    fn dist(&self, u: usize, v: usize) -> PyResult<u32> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.oracle.dist(u, v))
    }

    fn diameter(&self) -> u32 {
        self.oracle.diameter()
    }

    fn sphere(&self, v: usize, ell: u32) -> PyResult<Vec<usize>> {
        self.check(v)?;
        Ok(sphere(&self.oracle, v, ell))
    }

    /// `(radius, center)` of a vertex set, ties going to the lowest id.
    fn set_radius(&self, members: Vec<usize>) -> PyResult<(u32, usize)> {
        for &v in &members {
            self.check(v)?;
        }
        set_radius(&self.oracle, &members).map_err(value_err)
    }

    fn to_edge_list(&self) -> String {
        write_graph(self.oracle.graph())
    }

    fn __len__(&self) -> usize {
        self.oracle.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, n={}, m={})", self.label, self.n(), self.edge_count())
    }
}

/// Play one game and return its transcript (1-based lists, index 0 is None).
#[pyfunction]
#[pyo3(signature = (graph, cat, mouse, horizon, seed=None, track_belief=true))]
fn simulate(
    py: Python<'_>,
    graph: &PyGraph,
    cat: &str,
    mouse: &str,
    horizon: usize,
    seed: Option<u64>,
    track_belief: bool,
) -> PyResult<Py<PyAny>> {
    let mut cat: CatSpec = cat.parse().map_err(value_err)?;
    let mut mouse: MouseSpec = mouse.parse().map_err(value_err)?;
    if let Some(s) = seed {
        cat = cat.with_seed(s);
        mouse = mouse.with_seed(s);
    }
    let oracle = Arc::clone(&graph.oracle);
    let text = py
        .detach(move || -> Result<String, String> {
            let mut c = cat.build(&oracle).map_err(|e| e.to_string())?;
            let mut m = mouse.build(oracle.graph()).map_err(|e| e.to_string())?;
            let opts = GameOptions { track_belief, ..GameOptions::new(horizon) };
            let mut tr = play(&oracle, c.as_mut(), m.as_mut(), &opts).map_err(|e| e.to_string())?;
            tr.meta.seed = seed;
            Ok(tr.to_json())
        })
        .map_err(PyValueError::new_err)?;
    json_to_py(py, &text)
}

/// Greedy scattered cover; `separation` defaults to ceil(sqrt(8n)).
#[pyfunction]
#[pyo3(signature = (graph, separation=None))]
fn cover(graph: &PyGraph, separation: Option<u32>) -> PyResult<(Vec<usize>, u32)> {
    let sep = separation.unwrap_or_else(|| bounds::sqrt_8n(graph.oracle.n()));
    if sep == 0 {
        return Err(PyValueError::new_err("separation must be at least 1"));
    }
    let c: BallCover = scattered_cover(&graph.oracle, sep).map_err(value_err)?;
    Ok((c.centers, c.radius_k))
}

/// Smallest thin level of `v` below `k`, or None.
#[pyfunction(name = "thin_level")]
fn py_thin_level(graph: &PyGraph, v: usize, k: u32) -> PyResult<Option<u32>> {
    graph.check(v)?;
    Ok(thin_level(&graph.oracle, v, k))
}

#[pyfunction]
fn auto_k(graph: &PyGraph) -> u32 {
    ThinCat::auto_k(&graph.oracle)
}

/// Exact beliefs `M_1..M_h` for queries `c` and bits `b` (`b[0]` ignored).
#[pyfunction]
fn beliefs(graph: &PyGraph, c: Vec<usize>, b: Vec<Option<bool>>) -> PyResult<Vec<Vec<usize>>> {
    brute_force_beliefs(graph.oracle.graph(), &c, &b).map_err(value_err)
}

/// `"cat_wins"` or `"mouse_wins"`.
#[pyfunction]
fn minimax(py: Python<'_>, graph: &PyGraph, horizon: usize, d: i64) -> PyResult<String> {
    let g = graph.oracle.graph().clone();
    let sol = py.detach(move || exhaustive_game_value(&g, horizon, d)).map_err(value_err)?;
    Ok(serde_json::to_value(sol.value).map_err(value_err)?.as_str().unwrap_or_default().to_string())
}

/// Run an acceptance suite by name and return its report.
#[pyfunction]
fn verify(py: Python<'_>, suite: &str) -> PyResult<Py<PyAny>> {
    let name: SuiteName = suite.parse().map_err(value_err)?;
    let text = py.detach(move || verify_suite(name).to_json());
    json_to_py(py, &text)
}

/// Run an experiment from TOML config text.
#[pyfunction]
#[pyo3(signature = (config, out_dir=None))]
fn experiment(py: Python<'_>, config: &str, out_dir: Option<PathBuf>) -> PyResult<Py<PyAny>> {
    let cfg = ExperimentConfig::from_toml(config).map_err(value_err)?;
    let text = py
        .detach(move || run_experiment(&cfg, out_dir.as_deref()).map(|r| r.to_json()))
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    json_to_py(py, &text)
}

#[pymodule(name = "catmouse")]
fn catmouse_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(simulate, m)?)?;
    m.add_function(wrap_pyfunction!(cover, m)?)?;
    m.add_function(wrap_pyfunction!(py_thin_level, m)?)?;
    m.add_function(wrap_pyfunction!(auto_k, m)?)?;
    m.add_function(wrap_pyfunction!(beliefs, m)?)?;
    m.add_function(wrap_pyfunction!(minimax, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(experiment, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}

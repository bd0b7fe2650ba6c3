//! Python bindings for the banso library: the `Graph` type, the ten
//! vertex-degree-based indices, the bound registry, and tree
//! enumeration/extremal search. Library errors surface as `ValueError`.

use std::fmt::Display;
use std::str::FromStr;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use banso::{BoundOutcome, BoundRecord, ExtremalRecord, IndexKind, TreeFamily};

fn value_err(e: impl Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A simple undirected graph with per-vertex degree bookkeeping.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: banso::Graph,
}

#[pymethods]
impl PyGraph {
    /// Decodes one graph6 string.
    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: banso::parse_graph6(text).map_err(value_err)?,
        })
    }

    /// Builds a graph from an explicit vertex count and edge pairs.
    #[staticmethod]
    fn from_edges(n: usize, edges: Vec<(u32, u32)>) -> PyResult<Self> {
        Ok(Self {
            inner: banso::Graph::from_edges(n, edges).map_err(value_err)?,
        })
    }

    /// Parses a whole edge-list file (one `u v` pair per line).
    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(Self {
            inner: banso::parse_edge_list(text).map_err(value_err)?,
        })
    }

    /// Number of vertices.
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// Number of edges.
    fn m(&self) -> usize {
        self.inner.m()
    }

    /// Vertex degrees, indexed by vertex label.
    fn degrees(&self) -> Vec<u32> {
        self.inner.degrees().to_vec()
    }

    /// Edge list as `(u, v)` pairs with `u < v`.
    fn edges(&self) -> Vec<(u32, u32)> {
        self.inner.edges().to_vec()
    }

    fn to_graph6(&self) -> String {
        banso::to_graph6(&self.inner)
    }

    fn complement(&self) -> Self {
        Self {
            inner: banso::complement(&self.inner),
        }
    }

    /// Degree and structure summary as a dict.
    fn degree_summary<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let s = banso::degree_summary(&self.inner);
        let d = PyDict::new(py);
        d.set_item("n", s.n)?;
        d.set_item("m", s.m)?;
        d.set_item("max_degree", s.max_degree)?;
        d.set_item("min_degree", s.min_degree)?;
        d.set_item("is_connected", s.is_connected)?;
        d.set_item("is_bipartite", s.is_bipartite)?;
        d.set_item("is_regular", s.is_regular)?;
        d.set_item("is_semiregular_bipartite", s.is_semiregular_bipartite)?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// First Banhatti-Sombor index.
#[pyfunction]
fn bso(g: PyRef<'_, PyGraph>) -> PyResult<f64> {
    banso::bso(&g.inner).map_err(value_err)
}

/// Sombor index.
#[pyfunction]
fn sombor(g: PyRef<'_, PyGraph>) -> PyResult<f64> {
    banso::sombor(&g.inner).map_err(value_err)
}

/// One index by tag (BSO, SO, R, M2STAR, H, ID, SDD, ISI, GA, F).
#[pyfunction]
fn index_value(g: PyRef<'_, PyGraph>, kind: &str) -> PyResult<f64> {
    let kind = IndexKind::from_str(kind).map_err(value_err)?;
    Ok(banso::classical_index(&g.inner, kind)
        .map_err(value_err)?
        .value)
}

/// All ten indices as a dict keyed by tag.
#[pyfunction]
fn all_indices<'py>(py: Python<'py>, g: PyRef<'_, PyGraph>) -> PyResult<Bound<'py, PyDict>> {
    let values = banso::all_indices(&g.inner).map_err(value_err)?;
    let d = PyDict::new(py);
    for v in values {
        d.set_item(v.kind.tag(), v.value)?;
    }
    Ok(d)
}

fn record_dict<'py>(py: Python<'py>, r: &BoundRecord) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("id", &r.id)?;
    d.set_item("lhs", r.lhs)?;
    d.set_item("rhs", r.rhs)?;
    d.set_item("slack", r.slack)?;
    d.set_item("holds", r.holds)?;
    d.set_item("equality_detected", r.equality_detected)?;
    d.set_item("equality_predicted", r.equality_predicted)?;
    d.set_item("consistent", r.consistent)?;
    d.set_item("skipped", r.skipped)?;
    d.set_item("skip_reason", r.skip_reason.as_deref())?;
    Ok(d)
}

/// Evaluates one bound by id (e.g. "T3.4"); returns the report dict.
#[pyfunction]
#[pyo3(signature = (g, id, tol = banso::DEFAULT_TOL))]
fn evaluate_bound<'py>(
    py: Python<'py>,
    g: PyRef<'_, PyGraph>,
    id: &str,
    tol: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let id = banso::BoundId::from_str(id).map_err(value_err)?;
    let outcome = match banso::evaluate_bound(&g.inner, id, tol) {
        Ok(report) => BoundOutcome::Evaluated(report),
        Err(reason) => BoundOutcome::Skipped { id, reason },
    };
    record_dict(py, &outcome.record())
}

/// Evaluates the whole registry; returns a list of report dicts.
#[pyfunction]
#[pyo3(signature = (g, tol = banso::DEFAULT_TOL))]
fn check_bounds<'py>(
    py: Python<'py>,
    g: PyRef<'_, PyGraph>,
    tol: f64,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    banso::check_all_bounds(&g.inner, tol)
        .iter()
        .map(|o| record_dict(py, &o.record()))
        .collect()
}

/// All non-isomorphic trees of order `n` (chemical: max degree 4).
#[pyfunction]
#[pyo3(signature = (n, chemical = false))]
fn enumerate_trees(n: usize, chemical: bool) -> PyResult<Vec<PyGraph>> {
    let stream = if chemical {
        banso::enumerate_chemical_trees(n)
    } else {
        banso::enumerate_trees(n)
    };
    Ok(stream
        .map_err(value_err)?
        .map(|inner| PyGraph { inner })
        .collect())
}

/// Number of non-isomorphic trees of order `n`.
#[pyfunction]
#[pyo3(signature = (n, chemical = false))]
fn tree_count(n: usize, chemical: bool) -> PyResult<usize> {
    let stream = if chemical {
        banso::enumerate_chemical_trees(n)
    } else {
        banso::enumerate_trees(n)
    };
    Ok(stream.map_err(value_err)?.count())
}

fn extremal_dict<'py>(py: Python<'py>, r: &ExtremalRecord) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("chemical", r.chemical)?;
    d.set_item("index", r.index.tag())?;
    d.set_item("min_value", r.min_value)?;
    d.set_item("max_value", r.max_value)?;
    d.set_item("closed_form_min", r.closed_form_min)?;
    d.set_item("closed_form_max", r.closed_form_max)?;
    d.set_item("min_trees", &r.min_trees)?;
    d.set_item("max_trees", &r.max_trees)?;
    d.set_item("tree_count", r.tree_count)?;
    Ok(d)
}

/// Exhaustive index minimum/maximum over trees of order `n`.
#[pyfunction]
#[pyo3(signature = (n, chemical = false, index = "BSO"))]
fn extremal<'py>(
    py: Python<'py>,
    n: usize,
    chemical: bool,
    index: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let index = IndexKind::from_str(index).map_err(value_err)?;
    let result = banso::extremal_search(TreeFamily { n, chemical }, index).map_err(value_err)?;
    extremal_dict(py, &result.record())
}

/// Closed-form minimum of the first Banhatti-Sombor index over trees.
#[pyfunction]
fn path_bso_closed_form(n: usize) -> PyResult<f64> {
    banso::path_bso_closed_form(n).map_err(value_err)
}

/// Closed-form maximum of the first Banhatti-Sombor index over trees.
#[pyfunction]
fn star_bso_closed_form(n: usize) -> PyResult<f64> {
    banso::star_bso_closed_form(n).map_err(value_err)
}

/// Closed-form upper bound over chemical trees (n >= 5, n - 2 divisible by 3).
#[pyfunction]
fn chemical_bso_upper_bound(n: usize) -> PyResult<f64> {
    banso::chemical_bso_upper_bound(n).map_err(value_err)
}

#[pymodule]
fn banso_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(bso, m)?)?;
    m.add_function(wrap_pyfunction!(sombor, m)?)?;
    m.add_function(wrap_pyfunction!(index_value, m)?)?;
    m.add_function(wrap_pyfunction!(all_indices, m)?)?;
    m.add_function(wrap_pyfunction!(evaluate_bound, m)?)?;
    m.add_function(wrap_pyfunction!(check_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_trees, m)?)?;
    m.add_function(wrap_pyfunction!(tree_count, m)?)?;
    m.add_function(wrap_pyfunction!(extremal, m)?)?;
    m.add_function(wrap_pyfunction!(path_bso_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(star_bso_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(chemical_bso_upper_bound, m)?)?;
    Ok(())
}

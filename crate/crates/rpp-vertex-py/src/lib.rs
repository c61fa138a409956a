//! Python bindings. Shapes are lists of parts, fillings and pairs are the
//! same JSON documents the `rppv` binary reads and writes, and series are
//! returned as `{(n, k): coefficient}` dictionaries of `q^n t^k` terms.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use rpp_vertex::coupling::{g_via_lozenges, g_via_vertex, pair_config_weight, PairRPP};
use rpp_vertex::partitions::{hook_table as hooks, maya, Partition};
use rpp_vertex::qt_series::{hook_product_pair, hook_product_single, QTSeries};
use rpp_vertex::rpp_core::{count_by_volume, to_slices, RPP};
use rpp_vertex::vertex_model::config_weight_q;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn shape(parts: Vec<usize>) -> PyResult<Partition> {
    Partition::new(parts).map_err(err)
}

fn series_dict(s: &QTSeries) -> BTreeMap<(u32, u32), BigUint> {
    s.terms().map(|(n, k, c)| ((n, k), c.clone())).collect()
}

/// A reverse plane partition, stored bottom row first.
#[pyclass(name = "Rpp", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyRpp(pub RPP);

#[pymethods]
impl PyRpp {
    /// Builds from a shape and rows listed bottom row first.
    #[new]
    fn new(shape_parts: Vec<usize>, rows: Vec<Vec<u64>>) -> PyResult<Self> {
        RPP::new(shape(shape_parts)?, rows).map(PyRpp).map_err(err)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s).map(PyRpp).map_err(err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("RPP serialises")
    }

    #[getter]
    fn shape(&self) -> Vec<usize> {
        self.0.shape().parts().to_vec()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<u64>> {
        self.0.rows().to_vec()
    }

    #[getter]
    fn volume(&self) -> u64 {
        self.0.volume()
    }

    /// The interlacing sequence as text, e.g. `∅ ⪯ (3) ⪰ (1) …`.
    fn slices(&self) -> String {
        to_slices(&self.0).to_text()
    }

    /// Exponent of `q` in the one-colour vertex weight of the filling.
    fn vertex_weight_q(&self) -> PyResult<i64> {
        config_weight_q(&self.0).map(|w| w.q).map_err(err)
    }

    /// Slides back to the non-interacting pair it came from.
    fn unslide(&self) -> PyResult<PyPair> {
        rpp_vertex::sliding::unslide(&self.0).map(PyPair).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Rpp({})", self.to_json())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// A pair of RPPs (blue, red) of one shape.
#[pyclass(name = "Pair", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyPair(pub PairRPP);

#[pymethods]
impl PyPair {
    #[new]
    fn new(blue: &PyRpp, red: &PyRpp) -> PyResult<Self> {
        PairRPP::new(blue.0.clone(), red.0.clone()).map(PyPair).map_err(err)
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s).map(PyPair).map_err(err)
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("pair serialises")
    }

    #[getter]
    fn blue(&self) -> PyRpp {
        PyRpp(self.0.blue().clone())
    }

    #[getter]
    fn red(&self) -> PyRpp {
        PyRpp(self.0.red().clone())
    }

    #[getter]
    fn volume(&self) -> u64 {
        self.0.volume()
    }

    /// The interaction statistic computed from the two-colour vertex model.
    fn g_vertex(&self) -> PyResult<u64> {
        g_via_vertex(&self.0).map_err(err)
    }

    /// The interaction statistic computed by counting coupled lozenges.
    fn g_lozenges(&self) -> PyResult<u64> {
        g_via_lozenges(&self.0).map_err(err)
    }

    /// `(q, t)` exponents of the two-colour vertex weight.
    fn vertex_weight(&self) -> PyResult<(i64, i64)> {
        pair_config_weight(&self.0).map(|w| (w.q, w.t)).map_err(err)
    }

    /// Merges a non-interacting pair into one RPP.
    fn slide(&self) -> PyResult<PyRpp> {
        rpp_vertex::sliding::slide(&self.0).map(PyRpp).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!("Pair({})", self.to_json())
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

/// Hook lengths, bottom row first.
#[pyfunction]
fn hook_table(shape_parts: Vec<usize>) -> PyResult<Vec<Vec<usize>>> {
    Ok(hooks(&shape(shape_parts)?))
}

/// The Maya diagram as a `●`/`○` string with `|` at the centre.
#[pyfunction]
fn maya_ascii(shape_parts: Vec<usize>, half_width: usize) -> PyResult<String> {
    Ok(maya(&shape(shape_parts)?, half_width).map_err(err)?.to_ascii())
}

/// Coefficients of the one-colour hook product up to `q^max_volume`.
#[pyfunction]
fn hook_product(shape_parts: Vec<usize>, max_volume: u32) -> PyResult<BTreeMap<(u32, u32), BigUint>> {
    Ok(series_dict(&hook_product_single(&shape(shape_parts)?, max_volume)))
}

/// Coefficients of the two-colour hook product up to `q^max_volume`.
#[pyfunction]
fn pair_hook_product(shape_parts: Vec<usize>, max_volume: u32) -> PyResult<BTreeMap<(u32, u32), BigUint>> {
    Ok(series_dict(&hook_product_pair(&shape(shape_parts)?, max_volume)))
}

/// Number of RPPs of each volume `0..=max_volume`, by enumeration.
#[pyfunction]
fn count_rpps(shape_parts: Vec<usize>, max_volume: u64) -> PyResult<Vec<u64>> {
    Ok(count_by_volume(&shape(shape_parts)?, max_volume))
}

/// All RPPs of the shape with volume at most `max_volume`.
#[pyfunction]
fn enumerate(shape_parts: Vec<usize>, max_volume: u64) -> PyResult<Vec<PyRpp>> {
    Ok(rpp_vertex::rpp_core::enumerate(&shape(shape_parts)?, max_volume).into_iter().map(PyRpp).collect())
}

/// All pairs of the shape with total volume at most `max_volume`.
#[pyfunction]
fn enumerate_pairs(shape_parts: Vec<usize>, max_volume: u64) -> PyResult<Vec<PyPair>> {
    Ok(rpp_vertex::coupling::enumerate_pairs(&shape(shape_parts)?, max_volume).into_iter().map(PyPair).collect())
}

/// Runs one `rppv` command line (without the program name) and returns
/// `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let argv = std::iter::once("rppv".to_string()).chain(args);
    let (out, diag) = rpp_vertex::cli::run(argv);
    (out.code, out.stdout, diag.unwrap_or_default())
}

#[pymodule]
pub fn rpp_vertex_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRpp>()?;
    m.add_class::<PyPair>()?;
    m.add_function(wrap_pyfunction!(hook_table, m)?)?;
    m.add_function(wrap_pyfunction!(maya_ascii, m)?)?;
    m.add_function(wrap_pyfunction!(hook_product, m)?)?;
    m.add_function(wrap_pyfunction!(pair_hook_product, m)?)?;
    m.add_function(wrap_pyfunction!(count_rpps, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}

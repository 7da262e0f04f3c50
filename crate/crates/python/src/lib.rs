//! Python bindings for `hsalg-core`.

use hsalg_core::cli;
use hsalg_core::exactcore::{fmt_rational, Ring, GR};
use hsalg_core::youngdim::{self, YoungDiagram};
use hsalg_core::{superweyl, verify, weyl, verma, Error};
use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn loads<'py>(py: Python<'py>, s: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (s,))
}

fn to_py<'py, T: serde::Serialize>(py: Python<'py>, v: &T) -> PyResult<Bound<'py, PyAny>> {
    let s = serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    loads(py, &s)
}

/// Exact complex rational `re + im*i`, constructed from strings like "1/2".
#[pyclass(name = "GaussianRational", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyGR(GR);

#[pymethods]
impl PyGR {
    #[new]
    #[pyo3(signature = (re, im = "0"))]
    fn new(re: &str, im: &str) -> PyResult<Self> {
        let re = GR::parse_rational(re).map_err(py_err)?;
        let im = GR::parse_rational(im).map_err(py_err)?;
        Ok(PyGR(GR::new(re, im)))
    }

    #[staticmethod]
    fn parse(s: &str) -> PyResult<Self> {
        s.parse().map(PyGR).map_err(py_err)
    }

    #[staticmethod]
    fn i() -> Self {
        PyGR(GR::i())
    }

    #[getter]
    fn re(&self) -> String {
        fmt_rational(&self.0.re)
    }

    #[getter]
    fn im(&self) -> String {
        fmt_rational(&self.0.im)
    }

    fn conj(&self) -> Self {
        PyGR(self.0.conj())
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, o: &Self) -> Self {
        PyGR(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &Self) -> Self {
        PyGR(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &Self) -> Self {
        PyGR(&self.0 * &o.0)
    }

    fn __truediv__(&self, o: &Self) -> PyResult<Self> {
        let inv = o.0.inv().ok_or_else(|| PyZeroDivisionError::new_err("division by zero"))?;
        Ok(PyGR(&self.0 * &inv))
    }

    fn __neg__(&self) -> Self {
        PyGR(-&self.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("GaussianRational('{}')", self.0)
    }
}

/// A Young diagram given by weakly decreasing row lengths.
#[pyclass(name = "YoungDiagram", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyYoung(YoungDiagram);

#[pymethods]
impl PyYoung {
    #[new]
    fn new(rows: Vec<usize>) -> PyResult<Self> {
        YoungDiagram::new(rows).map(PyYoung).map_err(py_err)
    }

    #[staticmethod]
    fn parse(s: &str) -> PyResult<Self> {
        s.parse().map(PyYoung).map_err(py_err)
    }

    #[getter]
    fn rows(&self) -> Vec<usize> {
        self.0.rows().to_vec()
    }

    fn columns(&self) -> Vec<usize> {
        self.0.columns()
    }

    fn boxes(&self) -> usize {
        self.0.boxes()
    }

    /// Dimension of the O(N) irrep.
    fn o_dim(&self, n: usize) -> PyResult<u128> {
        youngdim::o_dim(&self.0, n).map_err(py_err)
    }

    /// Dimension of the GL(N) irrep.
    fn gl_dim(&self, n: usize) -> PyResult<u128> {
        youngdim::gl_dim(&self.0, n).map_err(py_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("YoungDiagram({:?})", self.0.rows())
    }
}

fn rational(s: &str) -> PyResult<num_rational::BigRational> {
    GR::parse_rational(s).map_err(py_err)
}

/// Label and energy of the spin-s singleton of o(n,2).
#[pyfunction]
fn singleton<'py>(py: Python<'py>, n: usize, s: &str) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &youngdim::singleton_label(n, &rational(s)?).map_err(py_err)?)
}

/// o(n+2) diagrams appearing in the higher-spin algebra.
#[pyfunction]
#[pyo3(signature = (n, s, max_boxes = 8))]
fn hs_diagrams<'py>(py: Python<'py>, n: usize, s: &str, max_boxes: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &youngdim::hs_adjoint_diagrams(n, &rational(s)?, max_boxes).map_err(py_err)?)
}

/// Graded dimensions of the centralizer of sp(2) modulo the ideal, in even degrees up to `degree`.
#[pyfunction]
fn hs_dims(n: usize, degree: u32) -> PyResult<Vec<usize>> {
    Ok(weyl::centralizer_mod_ideal(n, degree).map_err(py_err)?.graded)
}

#[pyfunction]
fn howe_check<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &weyl::howe_check(n).map_err(py_err)?)
}

/// Determinant of the level Gram matrix as a polynomial in E0, with its rational roots.
#[pyfunction]
fn gram_det(n: usize, level: usize) -> PyResult<(String, Vec<String>)> {
    let det = verma::gram_matrix(n, level).and_then(|g| g.det()).map_err(py_err)?;
    let roots = hsalg_core::exactcore::rational_roots(&det).map_err(py_err)?;
    Ok((det.to_string(), roots.iter().map(fmt_rational).collect()))
}

/// Number of null vectors at a level for lowest energy `e0`.
#[pyfunction]
fn null_vector_count(n: usize, level: usize, e0: &str) -> PyResult<usize> {
    Ok(verma::null_vectors(n, level, &rational(e0)?).map_err(py_err)?.len())
}

/// One of the Grassmann-extended checks: "osp", "howe" or "multiform".
#[pyfunction]
fn super_check<'py>(py: Python<'py>, which: &str, n: usize, s: usize) -> PyResult<Bound<'py, PyAny>> {
    let which = match which {
        "osp" => superweyl::SuperCheck::Osp,
        "howe" => superweyl::SuperCheck::Howe,
        "multiform" => superweyl::SuperCheck::Multiform,
        other => return Err(PyValueError::new_err(format!("unknown check {other:?}"))),
    };
    to_py(py, &superweyl::run_check(which, n, s).map_err(py_err)?)
}

/// Runs one acceptance criterion; returns (passed, detail).
#[pyfunction]
#[pyo3(signature = (id, full = false, seed = 2024))]
fn criterion(py: Python<'_>, id: usize, full: bool, seed: u64) -> (bool, String) {
    let profile = if full { verify::Profile::Full } else { verify::Profile::Quick };
    let r = py.detach(|| verify::run_criterion(id, profile, seed));
    (r.check.passed, r.check.detail)
}

/// Runs a command-line invocation and returns its JSON report as a dict.
#[pyfunction]
fn run<'py>(py: Python<'py>, args: Vec<String>) -> PyResult<Bound<'py, PyAny>> {
    let mut c = cli::parse(args).map_err(py_err)?;
    c.format = cli::Format::Json;
    let out = cli::run(&c).map_err(py_err)?;
    loads(py, &cli::render(&c, &out, None))
}

#[pymodule]
fn hsalg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGR>()?;
    m.add_class::<PyYoung>()?;
    m.add_function(wrap_pyfunction!(singleton, m)?)?;
    m.add_function(wrap_pyfunction!(hs_diagrams, m)?)?;
    m.add_function(wrap_pyfunction!(hs_dims, m)?)?;
    m.add_function(wrap_pyfunction!(howe_check, m)?)?;
    m.add_function(wrap_pyfunction!(gram_det, m)?)?;
    m.add_function(wrap_pyfunction!(null_vector_count, m)?)?;
    m.add_function(wrap_pyfunction!(super_check, m)?)?;
    m.add_function(wrap_pyfunction!(criterion, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add("SCHEMA", cli::SCHEMA)?;
    Ok(())
}

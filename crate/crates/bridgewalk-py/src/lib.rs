//! Python bindings: words, curves, plat closures, certificates and the experiments.

use bridgewalk::diagram;
use bridgewalk::lab::{self, ExperimentConfig};
use bridgewalk::lamination::{self, CurveClass};
use bridgewalk::mcg_core::{self, McgWord, SurfaceSpec, WalkDistribution};
use bridgewalk::plat;
use bridgewalk::tangle;
use bridgewalk::Error;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Config(_) | Error::Parse(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn spec(n: usize) -> PyResult<SurfaceSpec> {
    SurfaceSpec::new(n).map_err(to_py)
}

/// A word in the half-twist generators, e.g. `Word(3, "1 -2 3")`.
#[pyclass(name = "Word", frozen)]
struct PyWord {
    inner: McgWord,
}

#[pymethods]
impl PyWord {
    #[new]
    #[pyo3(signature = (n, text = ""))]
    fn new(n: usize, text: &str) -> PyResult<Self> {
        Ok(PyWord { inner: McgWord::parse(spec(n)?, text).map_err(to_py)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.spec().n()
    }

    /// Signed generator indices.
    fn letters(&self) -> Vec<i64> {
        self.inner.letters().iter().map(|g| g.sign as i64 * g.index as i64).collect()
    }

    fn inverse(&self) -> Self {
        PyWord { inner: self.inner.inverse() }
    }

    /// 1-based images of the induced puncture permutation.
    fn permutation(&self) -> Vec<usize> {
        mcg_core::permutation_image(&self.inner).images()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Word({}, {:?})", self.inner.spec().n(), self.inner.to_string())
    }
}

/// A simple closed curve on the 2n-punctured sphere.
#[pyclass(name = "Curve", frozen)]
struct PyCurve {
    inner: CurveClass,
}

#[pymethods]
impl PyCurve {
    /// The round curve enclosing punctures i..j of the line.
    #[staticmethod]
    fn base(n: usize, i: usize, j: usize) -> PyResult<Self> {
        Ok(PyCurve { inner: lamination::base_curve(spec(n)?, i, j).map_err(to_py)? })
    }

    /// `w · self`.
    fn apply(&self, w: &PyWord) -> PyResult<Self> {
        if w.inner.spec() != self.inner.spec() {
            return Err(PyValueError::new_err("word and curve live on different surfaces"));
        }
        Ok(PyCurve { inner: self.inner.apply_word(&w.inner) })
    }

    fn coords(&self) -> String {
        self.inner.coords().to_string()
    }

    /// Loop word in the free generators x_1..x_{2n-1}.
    fn loop_word(&self) -> String {
        self.inner.word().to_string()
    }

    fn norm(&self) -> String {
        self.inner.norm().to_string()
    }

    fn edge_count(&self, j: usize) -> String {
        self.inner.edge_count(j).to_string()
    }

    fn is_essential(&self) -> bool {
        self.inner.is_essential()
    }

    fn is_disk(&self) -> PyResult<bool> {
        tangle::is_disk_standard(&self.inner).map_err(to_py)
    }

    fn is_disk_geometric(&self) -> PyResult<bool> {
        tangle::is_disk_geometric(&self.inner).map_err(to_py)
    }

    fn __eq__(&self, other: &PyCurve) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

#[pyfunction]
fn intersection_number(a: &PyCurve, b: &PyCurve) -> PyResult<usize> {
    diagram::intersection_number(&a.inner, &b.inner).map_err(to_py)
}

#[pyfunction]
fn fills(a: &PyCurve, b: &PyCurve) -> PyResult<bool> {
    diagram::fills(&a.inner, &b.inner).map_err(to_py)
}

/// Disk curves reachable from the standard ones within `bound` half-twists.
#[pyfunction]
fn enumerate_disks(n: usize, bound: usize) -> PyResult<Vec<PyCurve>> {
    Ok(tangle::enumerate_disks(spec(n)?, bound).curves.into_iter().map(|c| PyCurve { inner: c }).collect())
}

#[pyfunction]
fn disk_path(a: &PyCurve, b: &PyCurve) -> PyResult<Vec<PyCurve>> {
    Ok(tangle::disk_path(&a.inner, &b.inner).map_err(to_py)?.into_iter().map(|c| PyCurve { inner: c }).collect())
}

/// `(status, witness or None, verified)` for the word at disk bound L.
#[pyfunction]
fn distance_certificate(w: &PyWord, bound: usize) -> PyResult<(String, Option<(usize, usize)>, bool)> {
    let c = tangle::distance_certificate(&w.inner, bound).map_err(to_py)?;
    Ok((c.status.to_string(), c.witness, c.verified))
}

/// Plat closure exported as "pd", "gauss" or "csv".
#[pyfunction]
#[pyo3(signature = (w, format = "pd"))]
fn plat_export(w: &PyWord, format: &str) -> PyResult<String> {
    let link = plat::plat_closure(&w.inner);
    link.validate().map_err(to_py)?;
    plat::export(&link, format).map_err(to_py)
}

#[pyfunction]
fn plat_components(w: &PyWord) -> usize {
    plat::plat_closure(&w.inner).components
}

#[pyfunction]
fn orbit_components(w: &PyWord) -> usize {
    plat::orbit_components(&w.inner)
}

/// Walk number `sample` of length k under the uniform distribution.
#[pyfunction]
#[pyo3(signature = (n, k, seed, sample = 0))]
fn sample_walk(n: usize, k: usize, seed: u64, sample: u64) -> PyResult<PyWord> {
    let d = WalkDistribution::uniform(spec(n)?);
    Ok(PyWord { inner: mcg_core::sample_walk_indexed(&d, k, seed, sample) })
}

fn config(n: usize, ks: Vec<usize>, samples: usize, seed: u64, bound: usize, workers: usize) -> PyResult<ExperimentConfig> {
    ExperimentConfig::new(n, ks, samples, seed, bound).and_then(|c| c.with_workers(workers)).map_err(to_py)
}

/// Runs an experiment ("components", "hyperproxy" or "growth"); returns (rows_csv, summary_csv).
#[pyfunction]
#[pyo3(signature = (kind, n, ks, samples, seed, bound = 4, workers = 1))]
fn run_experiment(
    py: Python<'_>,
    kind: &str,
    n: usize,
    ks: Vec<usize>,
    samples: usize,
    seed: u64,
    bound: usize,
    workers: usize,
) -> PyResult<(String, String)> {
    let cfg = config(n, ks, samples, seed, bound, workers)?;
    let report = py.detach(|| match kind {
        "components" => lab::run_components_experiment(&cfg),
        "hyperproxy" => lab::run_hyperbolicity_proxy(&cfg).map(|r| r.report),
        "growth" => lab::run_distance_growth(&cfg).map(|r| r.0),
        other => Err(Error::Config(format!("unknown experiment {other:?}"))),
    });
    let report = report.map_err(to_py)?;
    Ok((report.rows, report.summary))
}

#[pymodule]
#[pyo3(name = "bridgewalk")]
fn bridgewalk_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyWord>()?;
    m.add_class::<PyCurve>()?;
    m.add_function(wrap_pyfunction!(intersection_number, m)?)?;
    m.add_function(wrap_pyfunction!(fills, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_disks, m)?)?;
    m.add_function(wrap_pyfunction!(disk_path, m)?)?;
    m.add_function(wrap_pyfunction!(distance_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(plat_export, m)?)?;
    m.add_function(wrap_pyfunction!(plat_components, m)?)?;
    m.add_function(wrap_pyfunction!(orbit_components, m)?)?;
    m.add_function(wrap_pyfunction!(sample_walk, m)?)?;
    m.add_function(wrap_pyfunction!(run_experiment, m)?)?;
    Ok(())
}

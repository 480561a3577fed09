//! Python bindings: certificates, dispatch, verification, bounds and the exact solver.

use std::collections::{BTreeMap, BTreeSet};

use pyo3::create_exception;
use pyo3::exceptions::{PyLookupError, PyValueError};
use pyo3::prelude::*;

use spider_la::bounds::{self, ChiLaBounds};
use spider_la::certificate;
use spider_la::construct::{dispatch, sweep as sweeps};
use spider_la::solver::{self, SearchConfig, SolveStatus};
use spider_la::{
    EdgeLabeling, LabelingCertificate, SpiderGraph, SpiderSignature, TheoremId, VerificationReport,
};

create_exception!(spider_la_py, NoConstructionError, PyLookupError);

type Labels = Vec<Vec<u32>>;
type SweepFailures = Vec<(Vec<usize>, String)>;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn signature(legs: Vec<usize>) -> PyResult<SpiderSignature> {
    SpiderSignature::new(legs).map_err(value_err)
}

#[pyclass(name = "VerificationReport", frozen)]
struct PyReport {
    inner: VerificationReport,
}

#[pymethods]
impl PyReport {
    #[getter]
    fn passed(&self) -> bool {
        self.inner.passed()
    }
    #[getter]
    fn is_bijection(&self) -> bool {
        self.inner.is_bijection
    }
    #[getter]
    fn is_local_antimagic(&self) -> bool {
        self.inner.is_local_antimagic
    }
    #[getter]
    fn color_count(&self) -> usize {
        self.inner.color_count
    }
    #[getter]
    fn colors(&self) -> BTreeSet<u64> {
        self.inner.colors.clone()
    }
    #[getter]
    fn violation(&self) -> Option<String> {
        self.inner.violation.as_ref().map(ToString::to_string)
    }
    fn __repr__(&self) -> String {
        format!(
            "VerificationReport(passed={}, color_count={})",
            self.inner.passed(),
            self.inner.color_count
        )
    }
}

#[pyclass(name = "Certificate", frozen)]
struct PyCertificate {
    inner: LabelingCertificate,
}

#[pymethods]
impl PyCertificate {
    #[getter]
    fn signature(&self) -> Vec<usize> {
        self.inner.signature.legs().to_vec()
    }
    /// Labels per leg, pendant edge first.
    #[getter]
    fn labels(&self) -> Vec<Vec<u32>> {
        self.inner.labeling.legs().to_vec()
    }
    #[getter]
    fn theorem_id(&self) -> &'static str {
        self.inner.theorem_id.as_str()
    }
    #[getter]
    fn params(&self) -> BTreeMap<String, i64> {
        self.inner.params.clone()
    }
    #[getter]
    fn claimed_color_count(&self) -> usize {
        self.inner.claimed_color_count
    }
    fn verify(&self) -> PyReport {
        PyReport {
            inner: self.inner.verify(),
        }
    }
    fn to_json(&self) -> String {
        self.inner.to_json()
    }
    fn to_dot(&self) -> PyResult<String> {
        spider_la::dot::to_dot(&self.inner).map_err(value_err)
    }
    fn __repr__(&self) -> String {
        format!(
            "Certificate({}, theorem_id={:?})",
            self.inner.signature,
            self.inner.theorem_id.as_str()
        )
    }
}

#[pyclass(name = "Bounds", frozen)]
struct PyBounds {
    inner: ChiLaBounds,
}

#[pymethods]
impl PyBounds {
    #[getter]
    fn lower(&self) -> usize {
        self.inner.lower
    }
    #[getter]
    fn upper(&self) -> usize {
        self.inner.upper
    }
    #[getter]
    fn exact(&self) -> Option<usize> {
        self.inner.exact
    }
    /// `(rule, statement)` pairs in the order they were applied.
    #[getter]
    fn provenance(&self) -> Vec<(String, String)> {
        self.inner
            .provenance
            .iter()
            .map(|(r, s)| (r.to_string(), s.clone()))
            .collect()
    }
    fn __repr__(&self) -> String {
        format!(
            "Bounds(lower={}, upper={}, exact={:?})",
            self.inner.lower, self.inner.upper, self.inner.exact
        )
    }
}

/// Verified labeling with `d+1` colors for `legs`, or `NoConstructionError`.
#[pyfunction]
fn construct(legs: Vec<usize>) -> PyResult<PyCertificate> {
    let sig = signature(legs)?;
    dispatch(&sig)
        .map(|inner| PyCertificate { inner })
        .map_err(|e| {
            let misses: Vec<String> = e.near_misses.iter().map(ToString::to_string).collect();
            NoConstructionError::new_err((e.to_string(), misses))
        })
}

#[pyfunction]
fn appendix_labeling(n: usize, m: usize) -> PyResult<PyCertificate> {
    spider_la::construct::appendix_labeling(n, m)
        .map(|inner| PyCertificate { inner })
        .map_err(value_err)
}

#[pyfunction]
fn load_certificate(text: &str) -> PyResult<PyCertificate> {
    let loaded = certificate::load_certificate(text).map_err(value_err)?;
    Ok(PyCertificate {
        inner: loaded.certificate,
    })
}

/// Checks pendant-first `labels` on `Sp(legs)`.
#[pyfunction]
fn verify_labeling(legs: Vec<usize>, labels: Vec<Vec<u32>>) -> PyResult<PyReport> {
    let g = SpiderGraph::new(signature(legs)?);
    Ok(PyReport {
        inner: spider_la::verify(&g, &EdgeLabeling::from_legs(labels)),
    })
}

#[pyfunction]
fn chi_la_bounds(legs: Vec<usize>) -> PyResult<PyBounds> {
    bounds::bounds(&signature(legs)?)
        .map(|inner| PyBounds { inner })
        .map_err(value_err)
}

#[pyfunction]
fn sp23_classify(n: usize, m: usize) -> PyResult<(String, usize)> {
    let c = bounds::sp23_classify(n, m).map_err(value_err)?;
    Ok((format!("{:?}", c.class), c.chi_la))
}

/// Exact `χ_la`, or `None` when the node budget runs out. Returns the value
/// and a pendant-first witness.
#[pyfunction]
#[pyo3(signature = (legs, budget=Some(200_000_000), jobs=0))]
fn chi_la_exact(
    py: Python<'_>,
    legs: Vec<usize>,
    budget: Option<u64>,
    jobs: usize,
) -> PyResult<(Option<usize>, Option<Labels>)> {
    let sig = signature(legs)?;
    if sig.size() > solver::MAX_EDGES {
        return Err(PyValueError::new_err(format!(
            "{sig} has more than {} edges",
            solver::MAX_EDGES
        )));
    }
    let g = SpiderGraph::new(sig);
    let out = py.detach(|| {
        solver::chi_la_exact(
            &g,
            SearchConfig {
                node_budget: budget,
                jobs,
            },
        )
    });
    if out.status == SolveStatus::Unknown {
        return Ok((None, None));
    }
    Ok((out.chi_la, out.witness.map(EdgeLabeling::into_legs)))
}

/// `(signature, chi_la, listed_exception, counterexample)` per scanned spider.
#[pyfunction]
#[pyo3(signature = (max_q, budget=Some(200_000_000)))]
fn conjecture_scan(
    py: Python<'_>,
    max_q: usize,
    budget: Option<u64>,
) -> Vec<(Vec<usize>, Option<usize>, bool, bool)> {
    let report = py.detach(|| {
        solver::conjecture_scan(
            max_q,
            SearchConfig {
                node_budget: budget,
                jobs: 0,
            },
        )
    });
    report
        .entries
        .into_iter()
        .map(|e| {
            (
                e.signature.legs().to_vec(),
                e.chi_la,
                e.listed_exception,
                e.counterexample,
            )
        })
        .collect()
}

/// `(instances, failures)` for one generator id over its grid.
#[pyfunction]
#[pyo3(signature = (theorem_id, grid=12))]
fn sweep(py: Python<'_>, theorem_id: &str, grid: usize) -> PyResult<(usize, SweepFailures)> {
    let t: TheoremId = theorem_id.parse().map_err(value_err)?;
    if !sweeps::SWEEPABLE.contains(&t) {
        return Err(PyValueError::new_err(format!("{t} has no parameter grid")));
    }
    let r = py.detach(|| sweeps::sweep(t, grid));
    Ok((
        r.instances,
        r.failures
            .into_iter()
            .map(|f| (f.params, f.error))
            .collect(),
    ))
}

#[pymodule]
pub fn spider_la_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add(
        "NoConstructionError",
        m.py().get_type::<NoConstructionError>(),
    )?;
    m.add_class::<PyCertificate>()?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyBounds>()?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(appendix_labeling, m)?)?;
    m.add_function(wrap_pyfunction!(load_certificate, m)?)?;
    m.add_function(wrap_pyfunction!(verify_labeling, m)?)?;
    m.add_function(wrap_pyfunction!(chi_la_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(sp23_classify, m)?)?;
    m.add_function(wrap_pyfunction!(chi_la_exact, m)?)?;
    m.add_function(wrap_pyfunction!(conjecture_scan, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    Ok(())
}

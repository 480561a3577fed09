use pyo3::prelude::*;
use pyo3::types::PyModule;

fn with_module(f: impl FnOnce(&Bound<'_, PyModule>) -> PyResult<()>) {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "spider_la_py")?;
        spider_la_py::spider_la_py(&m)?;
        f(&m)
    })
    .unwrap();
}

#[test]
fn construct_and_verify() {
    with_module(|m| {
        let cert = m.getattr("construct")?.call1((vec![4usize, 6, 8],))?;
        assert_eq!(cert.getattr("theorem_id")?.extract::<String>()?, "all_even");
        let report = cert.call_method0("verify")?;
        assert!(report.getattr("passed")?.extract::<bool>()?);
        assert_eq!(report.getattr("color_count")?.extract::<usize>()?, 4);
        let json: String = cert.call_method0("to_json")?.extract()?;
        let again = m.getattr("load_certificate")?.call1((json,))?;
        assert_eq!(
            again.getattr("labels")?.extract::<Vec<Vec<u32>>>()?,
            cert.getattr("labels")?.extract::<Vec<Vec<u32>>>()?
        );
        Ok(())
    });
}

#[test]
fn errors_map_to_python_exceptions() {
    with_module(|m| {
        let py = m.py();
        let err = m
            .getattr("construct")?
            .call1((vec![9usize, 15, 19],))
            .unwrap_err();
        assert!(err.get_type(py).is(m.getattr("NoConstructionError")?));
        let err = m
            .getattr("construct")?
            .call1((vec![2usize, 0, 2],))
            .unwrap_err();
        assert!(err.is_instance_of::<pyo3::exceptions::PyValueError>(py));
        Ok(())
    });
}

#[test]
fn exact_and_bounds() {
    with_module(|m| {
        let (value, witness): (Option<usize>, Option<Vec<Vec<u32>>>) = m
            .getattr("chi_la_exact")?
            .call1((vec![2usize, 2, 2, 2],))?
            .extract()?;
        assert_eq!(value, Some(6));
        assert_eq!(witness.unwrap().len(), 4);
        let b = m
            .getattr("chi_la_bounds")?
            .call1((vec![2usize, 3, 3, 3],))?;
        assert_eq!(b.getattr("exact")?.extract::<Option<usize>>()?, Some(5));
        Ok(())
    });
}

//! Python bindings: `import apolar_lab`.

use apolar_core::apolar;
use apolar_core::artin::{algebra_from_inverse_system, symmetric_decomposition};
use apolar_core::poincare;
use apolar_core::poly::{parse, parse_infer};
use apolar_core::suites::{run_suite, Suite};
use apolar_core::Error;
use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Invariant(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn read(expr: &str, nvars: Option<usize>) -> PyResult<apolar_core::Polynomial> {
    match nvars {
        Some(n) => parse(expr, n),
        None => parse_infer(expr),
    }
    .map_err(py_err)
}

/// A polynomial in `y1..yn` with rational coefficients.
#[pyclass(frozen)]
struct Polynomial {
    inner: apolar_core::Polynomial,
}

#[pymethods]
impl Polynomial {
    #[new]
    #[pyo3(signature = (expr, nvars=None))]
    fn new(expr: &str, nvars: Option<usize>) -> PyResult<Self> {
        Ok(Polynomial { inner: read(expr, nvars)? })
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.inner.nvars()
    }

    #[getter]
    fn degree(&self) -> Option<u32> {
        self.inner.degree()
    }

    fn hilbert(&self) -> PyResult<Vec<usize>> {
        apolar::hilbert_function(&self.inner).map_err(py_err)
    }

    fn capital_degree(&self) -> PyResult<usize> {
        apolar::capital_degree(&self.inner).map_err(py_err)
    }

    /// Minimal generators of `Ann(F)`, written in `x1..xn`.
    fn annihilator(&self) -> PyResult<Vec<String>> {
        let ann = apolar::annihilator(&self.inner).map_err(py_err)?;
        Ok(ann.minimal_generators().iter().map(|g| g.display_as('x').to_string()).collect())
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial('{}')", self.inner)
    }
}

#[pyclass(frozen, get_all)]
struct Decomposition {
    socle_degree: usize,
    hilbert: Vec<usize>,
    rows: Vec<Vec<usize>>,
    f: Vec<usize>,
}

#[pyclass(frozen, get_all)]
struct Prediction {
    closed_form: Option<String>,
    source: Option<String>,
    relation: Option<String>,
    oracle: Vec<BigInt>,
    predicted: Option<Vec<BigInt>>,
    consistent: Option<bool>,
}

#[pyclass(frozen, get_all)]
struct Verdict {
    hilbert: Vec<usize>,
    dim: usize,
    socle_degree: usize,
    capital_degree: usize,
    stretched: bool,
    column_shape: bool,
    small_length: bool,
    low_capital_degree: bool,
    constant_column: bool,
    f3: Option<usize>,
    f3_at_most_4: Option<bool>,
    any: bool,
}

impl From<poincare::TheoremVerdict> for Verdict {
    fn from(v: poincare::TheoremVerdict) -> Self {
        Verdict {
            any: v.any(),
            hilbert: v.hilbert,
            dim: v.dim,
            socle_degree: v.socle_degree,
            capital_degree: v.capital_degree,
            stretched: v.stretched,
            column_shape: v.column_shape,
            small_length: v.small_length,
            low_capital_degree: v.low_capital_degree,
            constant_column: v.constant_column,
            f3: v.f3,
            f3_at_most_4: v.f3_at_most_4,
        }
    }
}

#[pyfunction]
#[pyo3(signature = (expr, nvars=None))]
fn hilbert(expr: &str, nvars: Option<usize>) -> PyResult<Vec<usize>> {
    apolar::hilbert_function(&read(expr, nvars)?).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (expr, nvars=None))]
fn annihilator(expr: &str, nvars: Option<usize>) -> PyResult<Vec<String>> {
    Polynomial::new(expr, nvars)?.annihilator()
}

#[pyfunction]
#[pyo3(signature = (expr, nvars=None))]
fn decompose(expr: &str, nvars: Option<usize>) -> PyResult<Decomposition> {
    let alg = algebra_from_inverse_system(&read(expr, nvars)?).map_err(py_err)?;
    let d = symmetric_decomposition(&alg).map_err(py_err)?;
    Ok(Decomposition { socle_degree: d.s, hilbert: d.total, rows: d.rows, f: d.f })
}

#[pyfunction]
#[pyo3(signature = (expr, pmax=6, nvars=None))]
fn betti(expr: &str, pmax: usize, nvars: Option<usize>) -> PyResult<Vec<BigInt>> {
    let alg = algebra_from_inverse_system(&read(expr, nvars)?).map_err(py_err)?;
    Ok(poincare::betti_numbers(&alg, pmax).map_err(py_err)?.coeffs)
}

#[pyfunction]
#[pyo3(signature = (expr, pmax=6, nvars=None))]
fn predict(expr: &str, pmax: usize, nvars: Option<usize>) -> PyResult<Prediction> {
    let p = poincare::predict(&read(expr, nvars)?, pmax).map_err(py_err)?;
    Ok(Prediction {
        closed_form: p.closed_form.map(|c| c.to_string()),
        source: p.source.map(|s| s.describe().to_string()),
        relation: p.reduction.map(|r| r.relation_text()),
        oracle: p.oracle.coeffs,
        predicted: p.predicted.map(|s| s.coeffs),
        consistent: p.consistent,
    })
}

/// Classify a Hilbert function, or a polynomial when `expr` is given.
#[pyfunction]
#[pyo3(signature = (hilbert=None, dim=None, expr=None))]
fn classify(hilbert: Option<Vec<usize>>, dim: Option<usize>, expr: Option<&str>) -> PyResult<Verdict> {
    let v = match (expr, hilbert) {
        (Some(e), _) => poincare::classify_polynomial(&read(e, None)?).map_err(py_err)?.0,
        (None, Some(h)) => poincare::classify_hilbert(&h, dim).map_err(py_err)?,
        (None, None) => return Err(PyValueError::new_err("give a Hilbert function or expr")),
    };
    Ok(v.into())
}

type TableTuple = (Vec<Vec<usize>>, Vec<usize>, usize, usize, usize);

/// `(rows, hilbert, dim, f3, capital_degree)` for every admissible table.
#[pyfunction]
#[pyo3(signature = (sdeg, max_dim=16, max_h2=4))]
fn enumerate(sdeg: usize, max_dim: usize, max_h2: usize) -> PyResult<Vec<TableTuple>> {
    let tables = poincare::enumerate_decompositions(sdeg, max_dim, max_h2).map_err(py_err)?;
    Ok(tables.into_iter().map(|t| (t.rows, t.hilbert, t.dim, t.f3, t.capital_degree)).collect())
}

/// Run a named suite; returns `(passed, trials, summary)`.
#[pyfunction]
#[pyo3(signature = (suite, trials=50, seed=0))]
fn verify(py: Python<'_>, suite: &str, trials: usize, seed: u64) -> PyResult<(usize, usize, String)> {
    let s = Suite::from_name(suite).ok_or_else(|| PyValueError::new_err(format!("unknown suite `{suite}`")))?;
    let r = py.detach(|| run_suite(s, trials, seed));
    Ok((r.passed(), r.trials.len(), r.summary()))
}

#[pyfunction]
fn suites() -> Vec<(&'static str, &'static str)> {
    Suite::ALL.iter().map(|s| (s.name(), s.alias())).collect()
}

#[pymodule]
fn apolar_lab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Polynomial>()?;
    m.add_class::<Decomposition>()?;
    m.add_class::<Prediction>()?;
    m.add_class::<Verdict>()?;
    m.add_function(wrap_pyfunction!(hilbert, m)?)?;
    m.add_function(wrap_pyfunction!(annihilator, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(betti, m)?)?;
    m.add_function(wrap_pyfunction!(predict, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(suites, m)?)?;
    Ok(())
}

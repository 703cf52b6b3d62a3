//! Python bindings for `du2-core`.
//!
//! Exact values come back as `fractions.Fraction`, matrices as nested lists
//! of floats and eigenvector amplitudes as `complex`.

use std::fmt::Display;

use du2_core::algebra::{self, Form};
use du2_core::{angular, oscillator, CartesianState, IrrepState, VerificationReport};
use nalgebra::DMatrix;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyComplex, PyDict};

fn err(e: du2_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, value: impl Display) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((value.to_string(),))
}

fn rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    m.row_iter().map(|r| r.iter().copied().collect()).collect()
}

fn report_dict<'py>(py: Python<'py>, report: &VerificationReport) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    for check in &report.checks {
        out.set_item(&check.name, (check.residual, check.tolerance, check.passed()))?;
    }
    Ok(out)
}

#[pyclass(name = "FrequencyRatio", module = "du2", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyRatio(oscillator::FrequencyRatio);

#[pymethods]
impl PyRatio {
    #[new]
    fn new(m: u32, n: u32) -> PyResult<Self> {
        oscillator::FrequencyRatio::new(m, n).map(PyRatio).map_err(err)
    }

    #[getter]
    fn m(&self) -> u32 {
        self.0.m()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }

    /// Irrep labels `(N, p, q)` with `N <= max_level`.
    fn irreps(&self, max_level: u32) -> Vec<PyLabel> {
        self.0.irreps(max_level).map(PyLabel).collect()
    }

    fn __repr__(&self) -> String {
        format!("FrequencyRatio({}, {})", self.0.m(), self.0.n())
    }
}

#[pyclass(name = "IrrepLabel", module = "du2", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
struct PyLabel(oscillator::IrrepLabel);

#[pymethods]
impl PyLabel {
    #[new]
    #[pyo3(signature = (level, p, q))]
    fn new(level: u32, p: u32, q: u32) -> Self {
        PyLabel(oscillator::IrrepLabel::new(level, p, q))
    }

    #[getter]
    fn level(&self) -> u32 {
        self.0.level
    }

    #[getter]
    fn p(&self) -> u32 {
        self.0.p
    }

    #[getter]
    fn q(&self) -> u32 {
        self.0.q
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.0.dimension()
    }

    fn __repr__(&self) -> String {
        format!("IrrepLabel({}, {}, {})", self.0.level, self.0.p, self.0.q)
    }
}

#[pyfunction]
fn energy_of_irrep<'py>(py: Python<'py>, ratio: PyRatio, label: PyLabel) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, oscillator::energy_of_irrep(&label.0, &ratio.0).map_err(err)?)
}

#[pyfunction]
fn energy_of_cartesian<'py>(py: Python<'py>, ratio: PyRatio, nx: u32, ny: u32) -> PyResult<Bound<'py, PyAny>> {
    fraction(
        py,
        oscillator::energy_of_cartesian(&CartesianState::new(nx, ny), &ratio.0),
    )
}

/// `(nx, ny) -> (label, k)`.
#[pyfunction]
fn cartesian_to_irrep(ratio: PyRatio, nx: u32, ny: u32) -> (PyLabel, u32) {
    let state = oscillator::cartesian_to_irrep(&CartesianState::new(nx, ny), &ratio.0);
    (PyLabel(state.label), state.k)
}

#[pyfunction]
fn irrep_to_cartesian(ratio: PyRatio, label: PyLabel, k: u32) -> PyResult<(u32, u32)> {
    let state = IrrepState::new(label.0, k).map_err(err)?;
    let cart = oscillator::irrep_to_cartesian(&state, &ratio.0).map_err(err)?;
    Ok((cart.nx, cart.ny))
}

/// Lowest `count` levels as dicts with `energy`, `label`, `degeneracy`, `members`.
#[pyfunction]
fn enumerate_levels<'py>(py: Python<'py>, ratio: PyRatio, count: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    oscillator::enumerate_levels(&ratio.0, count)
        .into_iter()
        .map(|level| {
            let d = PyDict::new(py);
            d.set_item("energy", fraction(py, level.energy)?)?;
            d.set_item("label", PyLabel(level.label))?;
            d.set_item("degeneracy", level.degeneracy)?;
            let members: Vec<(u32, u32)> = level.members.iter().map(|s| (s.nx, s.ny)).collect();
            d.set_item("members", members)?;
            Ok(d)
        })
        .collect()
}

/// `[Phi(0), ..., Phi(N + 1)]`.
#[pyfunction]
fn structure_function<'py>(py: Python<'py>, ratio: PyRatio, label: PyLabel) -> PyResult<Vec<Bound<'py, PyAny>>> {
    let sf = algebra::structure_function(&label.0, &ratio.0, Form::Product).map_err(err)?;
    sf.values().iter().map(|v| fraction(py, v)).collect()
}

/// `[S_-, S_+]` as text and as `{(h_power, s0_power): Fraction}`.
#[pyfunction]
fn commutator_polynomial<'py>(py: Python<'py>, ratio: PyRatio) -> PyResult<(String, Bound<'py, PyDict>)> {
    let cp = algebra::commutator_polynomial(&ratio.0);
    let coeffs = PyDict::new(py);
    for (h, s, c) in cp.polynomial().terms() {
        coeffs.set_item((h, s), fraction(py, c)?)?;
    }
    Ok((cp.to_string(), coeffs))
}

/// `S0`, `S+`, `S-`, `H` on one irrep, plus its energy and `S0` shift.
#[pyfunction]
fn irrep_matrices<'py>(py: Python<'py>, ratio: PyRatio, label: PyLabel) -> PyResult<Bound<'py, PyDict>> {
    let rep = algebra::build_irrep(&label.0, &ratio.0).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("energy", fraction(py, rep.energy)?)?;
    d.set_item("u", fraction(py, rep.u)?)?;
    d.set_item("s0", rows(&rep.s0))?;
    d.set_item("s_plus", rows(&rep.s_plus))?;
    d.set_item("s_minus", rows(&rep.s_minus))?;
    d.set_item("h", rows(&rep.h))?;
    Ok(d)
}

/// Identity residuals as `{name: (residual, tolerance, passed)}`; adds the
/// W3(2) relations for ratio 1:2.
#[pyfunction]
fn verify_irrep<'py>(py: Python<'py>, ratio: PyRatio, label: PyLabel) -> PyResult<Bound<'py, PyDict>> {
    let rep = algebra::build_irrep(&label.0, &ratio.0).map_err(err)?;
    let mut report = algebra::verify_algebra(&rep).map_err(err)?;
    let oracle = algebra::build_oracle(&ratio.0, label.0.level);
    report.extend(algebra::oracle_compare(&oracle, &label.0).map_err(err)?);
    if (ratio.0.m(), ratio.0.n()) == (1, 2) {
        report.extend(algebra::w32_check(&rep).map_err(err)?);
    }
    report_dict(py, &report)
}

/// Ascending eigenvalues of `L0`.
#[pyfunction]
#[pyo3(signature = (ratio, label, method = "tridiagonal"))]
fn angular_eigenvalues(ratio: PyRatio, label: PyLabel, method: &str) -> PyResult<Vec<f64>> {
    match method {
        "tridiagonal" => angular::angular_eigenvalues(&label.0, &ratio.0).map(|s| s.eigenvalues),
        "bisection" => angular::eigenvalues_by_bisection(&label.0, &ratio.0),
        "dense" => angular::eigenvalues_dense(&label.0, &ratio.0),
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown method {other:?}; expected tridiagonal, bisection or dense"
            )))
        }
    }
    .map_err(err)
}

/// Eigenvector of `L0` for `ell` as a dict with `amplitudes` (complex, by `k`),
/// `coefficients`, `states` and `residual`.
#[pyfunction]
fn angular_eigenvector<'py>(py: Python<'py>, ratio: PyRatio, label: PyLabel, ell: f64) -> PyResult<Bound<'py, PyDict>> {
    let v = angular::angular_eigenvector(&label.0, &ratio.0, ell).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("ell", v.ell)?;
    let amplitudes: Vec<Bound<'py, PyComplex>> = v
        .amplitudes
        .iter()
        .map(|a| PyComplex::from_doubles(py, a.re, a.im))
        .collect();
    d.set_item("amplitudes", amplitudes)?;
    d.set_item("coefficients", v.coefficients)?;
    let states: Vec<(u32, u32)> = v.cartesian.iter().map(|(s, _)| (s.nx, s.ny)).collect();
    d.set_item("states", states)?;
    d.set_item("residual", v.residual)?;
    Ok(d)
}

#[pymodule]
fn du2(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRatio>()?;
    m.add_class::<PyLabel>()?;
    m.add_function(wrap_pyfunction!(energy_of_irrep, m)?)?;
    m.add_function(wrap_pyfunction!(energy_of_cartesian, m)?)?;
    m.add_function(wrap_pyfunction!(cartesian_to_irrep, m)?)?;
    m.add_function(wrap_pyfunction!(irrep_to_cartesian, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_levels, m)?)?;
    m.add_function(wrap_pyfunction!(structure_function, m)?)?;
    m.add_function(wrap_pyfunction!(commutator_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(irrep_matrices, m)?)?;
    m.add_function(wrap_pyfunction!(verify_irrep, m)?)?;
    m.add_function(wrap_pyfunction!(angular_eigenvalues, m)?)?;
    m.add_function(wrap_pyfunction!(angular_eigenvector, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}

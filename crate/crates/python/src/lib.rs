//! Python bindings: braid words, Alexander polynomials, coefficient data,
//! family parameters and reports. Reports are returned as JSON strings in
//! the same schema the command-line tool prints.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

use ttknot::braid::{self, BraidWord};
use ttknot::families::{self, FamilyParams, TwistedTorusParams};
use ttknot::tangles::{self, TangleSpec};
use ttknot::{alexander, modarith, LaurentPoly};

fn err(e: ttknot::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_json<T: Serialize>(v: &T) -> PyResult<String> {
    serde_json::to_string(v).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyclass(name = "Braid", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyBraid(BraidWord);

#[pymethods]
impl PyBraid {
    #[new]
    fn new(strands: usize, letters: Vec<i32>) -> PyResult<Self> {
        BraidWord::new(strands, letters).map(Self).map_err(err)
    }

    /// Parses the two-line text form `strands: <n>` / letters.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(err)
    }

    #[getter]
    fn strands(&self) -> usize {
        self.0.strands()
    }

    #[getter]
    fn letters(&self) -> Vec<i32> {
        self.0.letters().to_vec()
    }

    fn permutation(&self) -> Vec<usize> {
        self.0.permutation().image().to_vec()
    }

    fn component_count(&self) -> usize {
        self.0.component_count()
    }

    fn is_knot(&self) -> bool {
        self.0.is_knot()
    }

    fn concat(&self, other: &PyBraid) -> PyResult<Self> {
        self.0.concat(&other.0).map(Self).map_err(err)
    }

    fn mirror(&self) -> Self {
        Self(self.0.mirror())
    }

    fn alexander(&self) -> PyResult<PyPoly> {
        alexander::alexander_from_braid(&self.0).map(PyPoly).map_err(err)
    }

    fn to_text(&self) -> String {
        self.0.to_string()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("Braid({}, {:?})", self.0.strands(), self.0.letters())
    }
}

#[pyclass(name = "Poly", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyPoly(LaurentPoly);

#[pymethods]
impl PyPoly {
    #[new]
    fn new(mindeg: i64, coeffs: Vec<i64>) -> Self {
        Self(LaurentPoly::new(mindeg, coeffs))
    }

    #[getter]
    fn mindeg(&self) -> i64 {
        self.0.mindeg()
    }

    #[getter]
    fn coeffs(&self) -> Vec<i64> {
        self.0.coeffs().to_vec()
    }

    fn canonical(&self) -> Self {
        Self(self.0.canonical())
    }

    fn value_at_one(&self) -> i64 {
        self.0.value_at_one()
    }

    fn __mul__(&self, other: &PyPoly) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Poly({})", self.0)
    }
}

#[pyfunction]
fn torus_braid(p: i64, q: i64) -> PyResult<PyBraid> {
    braid::torus_braid(p, q).map(PyBraid).map_err(err)
}

#[pyfunction]
fn twisted_torus_braid(p: i64, q: i64, r: i64, s: i64) -> PyResult<PyBraid> {
    braid::twisted_torus_braid(p, q, r, s).map(PyBraid).map_err(err)
}

/// Parallelization of `T(p0, q0)` with `x1` and `x2` strings.
#[pyfunction]
fn parallelize_torus(p0: i64, q0: i64, x1: i64, x2: i64) -> PyResult<PyBraid> {
    let base = braid::torus_framed(p0, q0).map_err(err)?;
    braid::parallelize_framed(&base, x1, x2).map(PyBraid).map_err(err)
}

/// Parallelization of the composite base of a family member.
#[pyfunction]
fn parallelize_family(e: i64, k1: i64, k2: i64, x1: i64, x2: i64) -> PyResult<PyBraid> {
    let fp = FamilyParams::new(e, k1, k2, x1, x2).map_err(err)?;
    let b = families::theorem31_params(fp.e, fp.k1, fp.k2).map_err(err)?.base;
    let framed = braid::twisted_torus_framed(b.p, b.q, b.r, b.s).map_err(err)?;
    braid::parallelize_framed(&framed, fp.x1, fp.x2).map(PyBraid).map_err(err)
}

#[pyfunction]
fn torus_alexander(p: i64, q: i64) -> PyResult<PyPoly> {
    alexander::torus_alexander(p, q).map(PyPoly).map_err(err)
}

/// `(a, b, c, d)` for `T(p0, q0)`.
#[pyfunction]
fn coeff_quadruple(p0: i64, q0: i64) -> PyResult<(i64, i64, i64, i64)> {
    let c = modarith::coeff_quadruple(p0, q0).map_err(err)?;
    Ok((c.a, c.b, c.c, c.d))
}

#[pyfunction]
fn trace_arc_slots(p0: i64, q0: i64) -> PyResult<(Vec<i64>, Vec<i64>)> {
    let s = modarith::trace_arc_slots(p0, q0).map_err(err)?;
    Ok((s.arc_a, s.arc_b))
}

/// `(p, q, r, s)` of a family member.
#[pyfunction]
fn family_params(e: i64, k1: i64, k2: i64, x1: i64, x2: i64) -> PyResult<(i64, i64, i64, i64)> {
    let fp = FamilyParams::new(e, k1, k2, x1, x2).map_err(err)?;
    let tp = families::theorem11_params(&fp).map_err(err)?;
    Ok((tp.p, tp.q, tp.r, tp.s))
}

#[pyfunction]
#[pyo3(signature = (e, k1, k2, x1, x2, budget = families::VERIFY_COST))]
fn verify_family(py: Python<'_>, e: i64, k1: i64, k2: i64, x1: i64, x2: i64, budget: usize) -> PyResult<String> {
    let fp = FamilyParams::new(e, k1, k2, x1, x2).map_err(err)?;
    let report = py.detach(|| families::verify_family_instance(&fp, budget)).map_err(err)?;
    to_json(&report)
}

/// JSON of the cable description, or `None` when there is none.
#[pyfunction]
fn cable_detect(p: i64, q: i64, r: i64, s: i64) -> PyResult<Option<String>> {
    let tp = TwistedTorusParams::new(p, q, r, s).map_err(err)?;
    families::cable_detect(&tp).map(|c| to_json(&c)).transpose()
}

#[pyfunction]
fn tangle_report(p: i64, q: i64, k: i64) -> PyResult<String> {
    let spec = TangleSpec::new(p, q, k).map_err(err)?;
    to_json(&tangles::essentiality_report(&spec).map_err(err)?)
}

#[pymodule]
fn ttknot_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyBraid>()?;
    m.add_class::<PyPoly>()?;
    m.add_function(wrap_pyfunction!(torus_braid, m)?)?;
    m.add_function(wrap_pyfunction!(twisted_torus_braid, m)?)?;
    m.add_function(wrap_pyfunction!(parallelize_torus, m)?)?;
    m.add_function(wrap_pyfunction!(parallelize_family, m)?)?;
    m.add_function(wrap_pyfunction!(torus_alexander, m)?)?;
    m.add_function(wrap_pyfunction!(coeff_quadruple, m)?)?;
    m.add_function(wrap_pyfunction!(trace_arc_slots, m)?)?;
    m.add_function(wrap_pyfunction!(family_params, m)?)?;
    m.add_function(wrap_pyfunction!(verify_family, m)?)?;
    m.add_function(wrap_pyfunction!(cable_detect, m)?)?;
    m.add_function(wrap_pyfunction!(tangle_report, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}

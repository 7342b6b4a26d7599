//! Python bindings: root data, parabolic data, structure constants, motives,
//! the residue derivation and the bundled case verifier. Structured results
//! come back as plain dicts and lists; rationals are `int` when integral and
//! `"p/q"` strings otherwise.

use fdq_core::lattice_constants::{structure_constants_for_root, StructureConstants};
use fdq_core::mero::{derive_main_theorem as derive, standard_axioms};
use fdq_core::motive::{measure_quotient_factor, motive_summary};
use fdq_core::parabolic::{levi_data as levi, relative_weyl, shahidi_levels};
use fdq_core::rat::Q;
use fdq_core::root_datum::{builtin_datum, Coroot};
use fdq_core::verify::{bundled_cases, find_case, semisimple_evaluation as semisimple, verify_all, verify_case as verify};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};
use pyo3::IntoPyObjectExt;
use serde::Serialize;
use serde_json::Value;

fn py_err(e: fdq_core::Error) -> PyErr {
    if e.is_input() {
        PyValueError::new_err(e.to_string())
    } else {
        PyRuntimeError::new_err(e.to_string())
    }
}

fn value_to_py<'py>(py: Python<'py>, v: &Value) -> PyResult<Bound<'py, PyAny>> {
    match v {
        Value::Null => Ok(py.None().into_bound(py)),
        Value::Bool(b) => b.into_bound_py_any(py),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_bound_py_any(py),
            None => n.as_f64().unwrap_or(f64::NAN).into_bound_py_any(py),
        },
        Value::String(s) => s.into_bound_py_any(py),
        Value::Array(xs) => {
            let list = PyList::empty(py);
            for x in xs {
                list.append(value_to_py(py, x)?)?;
            }
            Ok(list.into_any())
        }
        Value::Object(m) => {
            let dict = PyDict::new(py);
            for (k, x) in m {
                dict.set_item(k, value_to_py(py, x)?)?;
            }
            Ok(dict.into_any())
        }
    }
}

fn to_py<'py>(py: Python<'py>, x: &impl Serialize) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(x).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    value_to_py(py, &v)
}

/// A root datum: a root system in a character lattice with its coroots.
#[pyclass(name = "RootDatum", frozen)]
struct PyRootDatum {
    inner: fdq_core::root_datum::RootDatum,
}

#[pymethods]
impl PyRootDatum {
    /// `GL<n>`, `SL<n>`, `PGL<n>` or a Cartan type such as `G2`, `B3sc`.
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        Ok(PyRootDatum { inner: builtin_datum(name).map_err(py_err)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyRootDatum { inner: fdq_core::root_datum::RootDatum::from_json(text).map_err(py_err)? })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn name(&self) -> Option<String> {
        self.inner.name().map(str::to_string)
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.semisimple_rank()
    }

    #[getter]
    fn lattice_rank(&self) -> usize {
        self.inner.lattice_rank()
    }

    fn cartan(&self) -> Vec<Vec<i64>> {
        self.inner.cartan().entries().to_vec()
    }

    /// Positive roots in the simple-root basis.
    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner.root_system().positive_roots().iter().map(|r| r.coords.clone()).collect()
    }

    /// Coroots of the positive roots, in the simple-coroot basis.
    fn coroots(&self) -> Vec<Vec<i64>> {
        self.inner.root_system().coroots().iter().map(|c| c.coords.clone()).collect()
    }

    fn simple_root_names(&self) -> Vec<String> {
        self.inner.root_system().simple_root_names()
    }

    /// rho_P, alpha~, Sigma(P) and the level decomposition for the maximal
    /// parabolic obtained by deleting `removed_root`.
    fn parabolic<'py>(&self, py: Python<'py>, removed_root: usize) -> PyResult<Bound<'py, PyAny>> {
        let rs = self.inner.root_system();
        let l = levi(rs, removed_root).map_err(py_err)?;
        let levels = shahidi_levels(rs, &l).map_err(py_err)?;
        let rw = relative_weyl(rs, &l).map_err(py_err)?;
        let mut v = serde_json::to_value(&l).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        v["levels"] = serde_json::to_value(&levels).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        v["WMOrder"] = rw.wm_order.into();
        value_to_py(py, &v)
    }

    fn structure_constants<'py>(&self, py: Python<'py>, removed_root: usize) -> PyResult<Bound<'py, PyAny>> {
        to_py(py, &structure_constants_for_root(&self.inner, removed_root).map_err(py_err)?)
    }

    /// Invariant degrees, Iwahori exponent and point count polynomial.
    fn motive<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        let s = motive_summary(&self.inner).map_err(py_err)?;
        let mut v = serde_json::to_value(&s).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        v["pointCountText"] = s.point_count.to_string().into();
        value_to_py(py, &v)
    }

    /// `|G(F_q)|` for an integer `q`, exactly.
    fn point_count(&self, q: i64) -> PyResult<String> {
        let p = fdq_core::motive::point_count(&self.inner).map_err(py_err)?;
        p.eval(q).map(|x| x.to_string()).ok_or_else(|| PyValueError::new_err("q is a pole"))
    }

    /// gamma(G/M) as text, e.g. `(q^5 + ... + 1)/q^5`.
    fn gamma_gm(&self, removed_root: usize) -> PyResult<String> {
        let theta: Vec<usize> = (0..self.inner.semisimple_rank()).filter(|&i| i != removed_root).collect();
        Ok(measure_quotient_factor(&self.inner, &theta).map_err(py_err)?.gamma_gm.to_string())
    }

    /// Exponent `e` of `q^e` for the coroot on `s_lambda`, `lambda = alpha~/j`.
    fn semisimple_evaluation(&self, removed_root: usize, j: u32, coroot: Vec<i64>) -> PyResult<String> {
        let rs = self.inner.root_system();
        let l = levi(rs, removed_root).map_err(py_err)?;
        let v = semisimple(rs, &l, j, &Coroot { coords: coroot }).map_err(py_err)?;
        Ok(fdq_core::rat::fmt_q(&v.exponent))
    }

    fn __repr__(&self) -> String {
        format!("RootDatum({})", self.inner.name().unwrap_or("custom"))
    }
}

/// Runs the residue derivation for `m_ls` levels, the pole on level `j`, and
/// the given structure constants; returns the report as a dict.
#[pyfunction]
fn derive_main_theorem<'py>(
    py: Python<'py>,
    m_ls: u32,
    j: u32,
    chi_pairing: i64,
    m_idx: i64,
) -> PyResult<Bound<'py, PyAny>> {
    let sc = StructureConstants {
        removed_root: 0,
        theta: Vec::new(),
        chi: Vec::new(),
        chi_pairing,
        m_idx,
        dim_a_m: 1,
        dim_a_g: 0,
        heiermann_constant: Q::new(m_idx, chi_pairing.max(1)),
    };
    let axioms = standard_axioms(m_ls, j).map_err(py_err)?;
    to_py(py, &derive(m_ls, j, &sc, &axioms).map_err(py_err)?)
}

#[pyfunction]
fn list_cases() -> Vec<String> {
    bundled_cases().into_iter().map(|c| c.name).collect()
}

#[pyfunction]
fn case_json(name: &str) -> PyResult<String> {
    Ok(find_case(name).map_err(py_err)?.to_json())
}

/// Verifies one bundled case, or a case given as JSON text.
#[pyfunction]
#[pyo3(signature = (name=None, json=None))]
fn verify_case<'py>(py: Python<'py>, name: Option<&str>, json: Option<&str>) -> PyResult<Bound<'py, PyAny>> {
    let case = match (name, json) {
        (Some(n), None) => find_case(n),
        (None, Some(text)) => fdq_core::verify::CaseRecord::from_json(text),
        _ => return Err(PyValueError::new_err("pass exactly one of name or json")),
    }
    .map_err(py_err)?;
    to_py(py, &verify(&case).map_err(py_err)?)
}

#[pyfunction]
fn verify_all_cases<'py>(py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
    let reports = verify_all(&bundled_cases()).into_iter().collect::<fdq_core::Result<Vec<_>>>().map_err(py_err)?;
    to_py(py, &reports)
}

#[pymodule]
fn fdq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootDatum>()?;
    m.add_function(wrap_pyfunction!(derive_main_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(list_cases, m)?)?;
    m.add_function(wrap_pyfunction!(case_json, m)?)?;
    m.add_function(wrap_pyfunction!(verify_case, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all_cases, m)?)?;
    Ok(())
}

//! Python bindings. Results that carry structure are returned as JSON text.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use toupie::ainf::{check_algebra, check_coalgebra, ext_table, tor_table};
use toupie::duality::{
    double_dual, gr_algebra, hypotheses_check, ideal_equal as ideals_equal, yoneda_presentation, AlgebraPresentation,
};
use toupie::morse::{verify_sdr, ClosedSdr, Resolution};
use toupie::schema::{parse_presentation, presentation_to_json};
use toupie::ToupieAlgebra;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_json(v: &impl serde::Serialize) -> String {
    serde_json::to_string(v).expect("serializable")
}

/// A toupie algebra built from a JSON presentation.
#[pyclass(name = "Algebra", module = "toupie_py", unsendable)]
struct Algebra {
    inner: ToupieAlgebra,
}

fn emit(p: toupie::Result<AlgebraPresentation>) -> PyResult<String> {
    p.map(|p| presentation_to_json(&p.presentation)).map_err(err)
}

#[pymethods]
impl Algebra {
    #[new]
    fn new(json: &str) -> PyResult<Self> {
        Ok(Self { inner: ToupieAlgebra::from_json(json).map_err(err)? })
    }

    #[getter]
    fn dimension(&self) -> usize {
        self.inner.dimension()
    }

    fn to_json(&self) -> String {
        presentation_to_json(self.inner.presentation())
    }

    fn branches(&self) -> Vec<String> {
        self.inner.shape().branches.iter().map(|b| self.inner.fmt_path(b)).collect()
    }

    fn tips(&self) -> Vec<String> {
        self.inner.groebner().tips().iter().map(|t| self.inner.fmt_path(t)).collect()
    }

    /// Chains of index `n` (`-1` for vertices, `0` for arrows).
    fn chains(&self, n: isize) -> Vec<String> {
        self.inner.chains().of_index(n).iter().map(|c| self.inner.fmt_word(c)).collect()
    }

    #[pyo3(signature = (degree = 5))]
    fn betti(&self, degree: usize) -> Vec<usize> {
        self.inner.betti(degree)
    }

    #[pyo3(signature = (arity = 5))]
    fn tor_coalgebra(&self, arity: usize) -> String {
        to_json(&tor_table(&self.inner, arity).to_json(&self.inner))
    }

    #[pyo3(signature = (arity = 5))]
    fn ext_products(&self, arity: usize) -> String {
        to_json(&ext_table(&self.inner, arity).to_json(&self.inner))
    }

    /// Whether SI(n) on Ext and SI(n)' on Tor hold up to `arity`.
    #[pyo3(signature = (arity = 5))]
    fn stasheff(&self, arity: usize) -> bool {
        check_algebra(&self.inner, &ext_table(&self.inner, arity), arity).passed()
            && check_coalgebra(&self.inner, &tor_table(&self.inner, arity), arity).passed()
    }

    #[pyo3(signature = (degree = 5))]
    fn sdr_check(&self, degree: usize) -> bool {
        verify_sdr(&self.inner, &ClosedSdr::new(&self.inner), degree).passed()
    }

    #[pyo3(signature = (degree = 5))]
    fn resolution_check(&self, degree: usize) -> PyResult<bool> {
        Ok(Resolution::new(&self.inner).verify(degree).map_err(err)?.passed())
    }

    /// Reasons the double-dual hypotheses fail; empty when they hold.
    fn hypotheses(&self) -> Vec<String> {
        hypotheses_check(&self.inner).reasons
    }

    fn yoneda(&self) -> PyResult<String> {
        emit(yoneda_presentation(&self.inner))
    }

    fn gr(&self) -> String {
        presentation_to_json(&gr_algebra(&self.inner).presentation)
    }

    fn double_dual(&self) -> PyResult<String> {
        emit(double_dual(&self.inner))
    }

    fn __repr__(&self) -> String {
        format!("Algebra(branches={}, dimension={})", self.inner.shape().branches.len(), self.inner.dimension())
    }
}

/// Whether two presentations on the same quiver generate the same ideal.
#[pyfunction]
fn ideal_equal(a: &str, b: &str) -> PyResult<bool> {
    let (a, b) = (parse_presentation(a).map_err(err)?, parse_presentation(b).map_err(err)?);
    ideals_equal(&a, &b).map_err(err)
}

#[pymodule]
fn toupie_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(ideal_equal, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add("E1", toupie::examples::E1)?;
    Ok(())
}

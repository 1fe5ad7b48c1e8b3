//! Python bindings: `Section`, `Spinor` and module-level functions for the
//! transform, the g₀ action, kernel dimensions and highest weight vectors.

use penrose_core::cochain::{self, g0_action, hwv_complete, weight_of_monomial};
use penrose_core::dirac::{self, build_dirac, graded_kernel_dim, is_monogenic};
use penrose_core::exactalg::{format_rational, parse_rational, Rational};
use penrose_core::interface::{format_poly, parse_poly, Context};
use penrose_core::repn::{decompose_mk, multiplicity_free_check, IrrepLabel};
use penrose_core::{penrose_transform, CochainSection, RootLabel, SpinorField};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(text: &str) -> PyResult<Rational> {
    parse_rational(text).ok_or_else(|| value_err(format!("not a rational number: {text}")))
}

/// A Čech cochain representative on W₀, e.g. `Section("z11^2*zeta1^-1*zeta2^-1*zeta3^-1")`.
#[pyclass(frozen, eq, skip_from_py_object, module = "penrose")]
#[derive(Clone, PartialEq)]
pub struct Section {
    inner: CochainSection,
}

#[pymethods]
impl Section {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        let body = parse_poly(text, Context::Section).map_err(value_err)?;
        Ok(Section {
            inner: CochainSection::new(body).map_err(value_err)?,
        })
    }

    fn __str__(&self) -> String {
        format_poly(self.inner.body())
    }

    fn __repr__(&self) -> String {
        format!("Section({:?})", self.__str__())
    }

    fn __add__(&self, other: &Section) -> Section {
        Section {
            inner: self.inner.add(&other.inner),
        }
    }

    fn __sub__(&self, other: &Section) -> Section {
        Section {
            inner: self.inner.sub(&other.inner),
        }
    }

    fn __mul__(&self, other: &Section) -> Section {
        Section {
            inner: self.inner.mul(&other.inner),
        }
    }

    fn scale(&self, coeff: &str) -> PyResult<Section> {
        Ok(Section {
            inner: self.inner.scale(&rational(coeff)?),
        })
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Monomials with their coefficients as strings.
    fn monomials(&self) -> Vec<(Section, String)> {
        self.inner
            .monomials()
            .into_iter()
            .map(|(m, c)| (Section { inner: m }, format_rational(&c)))
            .collect()
    }

    /// `(gl2, gl4)` weight of a monomial; gl2 entries are strings like `"7/2"`.
    fn weight(&self) -> PyResult<(Vec<String>, Vec<i64>)> {
        let w = weight_of_monomial(&self.inner).map_err(value_err)?;
        Ok((w.gl2.iter().map(format_rational).collect(), w.gl4.to_vec()))
    }

    /// Action of a root vector: one of A12, E12, E21, E23, E32, E34, E43.
    fn act(&self, root: &str) -> PyResult<Section> {
        let r: RootLabel = root.parse().map_err(value_err)?;
        Ok(Section {
            inner: g0_action(r, &self.inner),
        })
    }

    fn transform(&self) -> Spinor {
        Spinor {
            inner: penrose_transform(&self.inner),
        }
    }

    fn class_is_zero(&self) -> bool {
        cochain::class_is_zero(&self.inner)
    }

    fn is_highest_weight(&self) -> bool {
        cochain::hwv_test(&self.inner)
    }
}

/// A polynomial spinor field on U with four components.
#[pyclass(frozen, eq, skip_from_py_object, module = "penrose")]
#[derive(Clone, PartialEq)]
pub struct Spinor {
    inner: SpinorField,
}

#[pymethods]
impl Spinor {
    #[new]
    fn new(components: [String; 4]) -> PyResult<Self> {
        let mut parsed = Vec::with_capacity(4);
        for c in &components {
            parsed.push(parse_poly(c, Context::Spinor).map_err(value_err)?);
        }
        let inner = SpinorField::new(parsed.try_into().expect("four")).map_err(value_err)?;
        Ok(Spinor { inner })
    }

    fn components(&self) -> Vec<String> {
        self.inner.components().iter().map(format_poly).collect()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    #[pyo3(signature = (epsilon = 1, clifford_norm = "1"))]
    fn is_monogenic(&self, epsilon: i8, clifford_norm: &str) -> PyResult<bool> {
        Ok(is_monogenic(
            &build_dirac(epsilon, &rational(clifford_norm)?),
            &self.inner,
        ))
    }

    fn __str__(&self) -> String {
        format!("({})", self.components().join("; "))
    }

    fn __repr__(&self) -> String {
        format!("Spinor({:?})", self.components())
    }
}

#[pyfunction]
fn transform(section: &str) -> PyResult<Spinor> {
    Ok(Section::new(section)?.transform())
}

#[pyfunction]
#[pyo3(signature = (degree, epsilon = 1, clifford_norm = "1"))]
fn kernel_dim(py: Python<'_>, degree: u32, epsilon: i8, clifford_norm: &str) -> PyResult<usize> {
    let op = build_dirac(epsilon, &rational(clifford_norm)?);
    Ok(py.detach(|| graded_kernel_dim(&op, degree)))
}

/// `[((a, b, l), dimension), ...]` for the summands of degree `degree`.
#[pyfunction]
fn decompose(degree: u32) -> Vec<((u32, u32, u32), u64)> {
    decompose_mk(degree)
        .into_iter()
        .map(|(l, m)| ((l.a, l.b, l.l), m.dimension))
        .collect()
}

#[pyfunction]
fn multiplicity_free(k_max: u32) -> bool {
    multiplicity_free_check(k_max)
}

#[pyfunction]
fn hwv(py: Python<'_>, a: u32, b: u32, l: u32) -> PyResult<Section> {
    let label = IrrepLabel::new(a, b, l);
    let f = py
        .detach(|| hwv_complete(&label))
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(Section { inner: f })
}

/// `(epsilon, clifford_norm)` found by the calibration search.
#[pyfunction]
fn calibrate(py: Python<'_>) -> PyResult<(i8, String)> {
    let report = py
        .detach(dirac::calibrate)
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok((
        report.calibration.epsilon,
        format_rational(&report.calibration.clifford_norm),
    ))
}

#[pymodule]
fn penrose(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Section>()?;
    m.add_class::<Spinor>()?;
    m.add_function(wrap_pyfunction!(transform, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_dim, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(multiplicity_free, m)?)?;
    m.add_function(wrap_pyfunction!(hwv, m)?)?;
    m.add_function(wrap_pyfunction!(calibrate, m)?)?;
    Ok(())
}

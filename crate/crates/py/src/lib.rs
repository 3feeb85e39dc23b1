use biquot_core::case::{self, BuiltinParams, RunOptions};
use biquot_core::genus::{self, ChernRootData};
use biquot_core::reps::{self, RootSystem};
use biquot_core::ring::{class_from_json, class_to_json, parse_presentation, presentation_to_json, GradedClass, RingPresentation};
use biquot_core::search::{self, Symmetry};
use biquot_core::{rational, rings, Error};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::Value;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_json(text: &str) -> PyResult<Value> {
    serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn root_system(name: &str) -> PyResult<RootSystem> {
    if name == "A1" {
        return Ok(RootSystem::A1);
    }
    name.strip_prefix('B')
        .and_then(|m| m.parse::<usize>().ok())
        .filter(|&m| m >= 1)
        .map(RootSystem::B)
        .ok_or_else(|| PyValueError::new_err(format!("unknown root system `{name}`, expected A1 or B<m>")))
}

/// A graded ring given by generators and a confluent rewrite system.
/// Classes are passed as JSON text `[[coef, [exponents]], ...]`.
#[pyclass(frozen, module = "biquot")]
struct Ring {
    inner: RingPresentation,
}

impl Ring {
    fn class(&self, text: &str) -> PyResult<GradedClass> {
        class_from_json(&parse_json(text)?, self.inner.nvars(), "class").map_err(err)
    }
}

#[pymethods]
impl Ring {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = parse_presentation(&parse_json(text)?).map_err(err)?;
        Ok(Ring { inner })
    }

    /// One of the built-in rings, e.g. `"su3-t2"`, `"r-p(v, q=3)"` or `"cp2"`.
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        rings::all_builtin()
            .into_iter()
            .find(|(n, _)| n == name)
            .map(|(_, inner)| Ring { inner })
            .ok_or_else(|| PyValueError::new_err(format!("unknown built-in ring `{name}`")))
    }

    #[staticmethod]
    fn builtin_names() -> Vec<String> {
        rings::all_builtin().into_iter().map(|(n, _)| n).collect()
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.inner.generators().to_vec()
    }

    #[getter]
    fn top_degree(&self) -> u32 {
        self.inner.top_degree()
    }

    #[getter]
    fn basis_sizes(&self) -> Vec<usize> {
        self.inner.basis_sizes()
    }

    #[getter]
    fn confluent(&self) -> bool {
        self.inner.check_confluence().passed
    }

    fn poincare_duality(&self) -> bool {
        self.inner.satisfies_poincare_duality()
    }

    fn basis(&self, degree: u32) -> PyResult<Vec<String>> {
        let basis = self.inner.basis(degree).map_err(err)?;
        Ok(basis.iter().map(|m| self.inner.display_monomial(m)).collect())
    }

    fn normal_form(&self, a: &str) -> PyResult<String> {
        let c = self.inner.normal_form(&self.class(a)?).map_err(err)?;
        Ok(class_to_json(&c).to_string())
    }

    fn add(&self, a: &str, b: &str) -> PyResult<String> {
        let c = self.inner.add(&self.class(a)?, &self.class(b)?).map_err(err)?;
        Ok(class_to_json(&c).to_string())
    }

    fn mul(&self, a: &str, b: &str) -> PyResult<String> {
        let c = self.inner.mul(&self.class(a)?, &self.class(b)?).map_err(err)?;
        Ok(class_to_json(&c).to_string())
    }

    fn display(&self, a: &str) -> PyResult<String> {
        Ok(self.inner.display(&self.class(a)?))
    }

    /// The exact integral against the fundamental class, as `"p"` or `"p/q"`.
    fn integrate(&self, a: &str) -> PyResult<String> {
        let r = self.inner.integrate(&self.class(a)?).map_err(err)?;
        Ok(rational::format(&r))
    }

    fn to_json(&self) -> String {
        presentation_to_json(&self.inner).to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "Ring(generators={:?}, top_degree={})",
            self.inner.generators(),
            self.inner.top_degree()
        )
    }
}

#[pyfunction]
fn list_builtin_cases() -> Vec<(String, String)> {
    case::list_builtin_cases()
        .into_iter()
        .map(|(n, info)| (n, info.description.to_string()))
        .collect()
}

#[pyfunction]
#[pyo3(signature = (name, q=None, n=None))]
fn builtin_case(name: &str, q: Option<i64>, n: Option<u32>) -> PyResult<String> {
    let doc = case::builtin_case(name, &BuiltinParams { q, n }).map_err(err)?;
    Ok(serde_json::to_string_pretty(&doc).expect("json"))
}

/// Runs a case document (JSON text) and returns the canonical report.
#[pyfunction]
#[pyo3(signature = (document, timings=false))]
fn run_case(py: Python<'_>, document: &str, timings: bool) -> PyResult<String> {
    let doc = case::parse_case(&parse_json(document)?).map_err(err)?;
    let report = py
        .detach(|| case::run_case(&doc, &RunOptions { timings }))
        .map_err(err)?;
    Ok(case::render_report(&report))
}

#[pyfunction]
fn weyl_dim(root_system_name: &str, weight: Vec<i64>) -> PyResult<u128> {
    reps::weyl_dim(root_system(root_system_name)?, &weight).map_err(err)
}

#[pyfunction]
fn field_type(root_system_name: &str, weight: Vec<i64>) -> PyResult<&'static str> {
    Ok(reps::field_type(root_system(root_system_name)?, &weight).map_err(err)?.as_str())
}

/// chi_y from Chern roots given as degree-2 coordinate vectors; coefficients as strings.
#[pyfunction]
#[pyo3(signature = (ring, roots, trivial_summands=0))]
fn chi_y(ring: &Ring, roots: Vec<Vec<i64>>, trivial_summands: usize) -> PyResult<Vec<String>> {
    let r = &ring.inner;
    let basis = r.basis(2).map_err(err)?;
    let mut classes = Vec::with_capacity(roots.len());
    for root in &roots {
        if root.len() != basis.len() {
            return Err(PyValueError::new_err(format!(
                "root has {} coordinates, the degree-2 basis has {}",
                root.len(),
                basis.len()
            )));
        }
        classes.push(GradedClass::from_coordinates(r.nvars(), basis, root));
    }
    let data = ChernRootData::stable(r, classes, trivial_summands).map_err(err)?;
    let chi = data.chi_y().map_err(err)?;
    Ok(chi.coefficients().iter().map(rational::format).collect())
}

#[pyfunction]
fn hirzebruch_congruence(chi: i64, sigma: i64, m: i64) -> bool {
    genus::hirzebruch_congruence(chi, sigma, m)
}

#[pyfunction]
#[pyo3(signature = (bundles, signs=true))]
fn canonicalize_solution(bundles: Vec<Vec<i64>>, signs: bool) -> Vec<Vec<i64>> {
    let symmetry = if signs {
        Symmetry::PermutationsAndSigns
    } else {
        Symmetry::Permutations
    };
    search::canonicalize_solution(&bundles, symmetry)
}

#[pymodule]
fn biquot(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", case::TOOL_VERSION)?;
    m.add_class::<Ring>()?;
    m.add_function(wrap_pyfunction!(list_builtin_cases, m)?)?;
    m.add_function(wrap_pyfunction!(builtin_case, m)?)?;
    m.add_function(wrap_pyfunction!(run_case, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dim, m)?)?;
    m.add_function(wrap_pyfunction!(field_type, m)?)?;
    m.add_function(wrap_pyfunction!(chi_y, m)?)?;
    m.add_function(wrap_pyfunction!(hirzebruch_congruence, m)?)?;
    m.add_function(wrap_pyfunction!(canonicalize_solution, m)?)?;
    Ok(())
}

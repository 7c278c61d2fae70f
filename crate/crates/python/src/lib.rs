//! Python bindings for the `poisson-hopf` crate.

use clap::Parser;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use poisson_hopf::bialgebra::{check_bialgebra, induce_bialgebra, PresentedPoissonBialgebra};
use poisson_hopf::cli::{main_with, Cli};
use poisson_hopf::coalgebra::{self, validate_coalgebra};
use poisson_hopf::expr::eval_str;
use poisson_hopf::hopf::{self, verify_antipode, TruncatedHopf};
use poisson_hopf::lie::{lyndon_words as lyndon, render_lyndon};
use poisson_hopf::linear::format_scalar;
use poisson_hopf::poisson::{self, Poly};
use poisson_hopf::tensor::render2;
use poisson_hopf::{verify, Error};

create_exception!(poisson_hopf, PoissonHopfError, PyValueError);

fn err(e: Error) -> PyErr {
    PoissonHopfError::new_err(e.to_string())
}

/// A list of law violations; empty means every check passed.
#[pyclass(name = "Report", frozen)]
pub struct PyReport(verify::Report);

#[pymethods]
impl PyReport {
    fn is_clean(&self) -> bool {
        self.0.is_clean()
    }

    /// `(law, witnesses, residual)` triples.
    #[getter]
    fn violations(&self) -> Vec<(String, Vec<String>, String)> {
        self.0
            .violations
            .iter()
            .map(|v| (v.law.clone(), v.witnesses.clone(), v.residual.clone()))
            .collect()
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_text()
    }
}

#[pyclass(name = "CoalgebraSpec", frozen)]
pub struct PyCoalgebraSpec(coalgebra::CoalgebraSpec);

#[pymethods]
impl PyCoalgebraSpec {
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        coalgebra::builtin(name).map(Self).map_err(err)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        coalgebra::load_spec(path).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        coalgebra::parse_spec(text).map(Self).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.0.basis().to_vec()
    }

    fn validate(&self) -> PyReport {
        PyReport(validate_coalgebra(&self.0))
    }
}

/// The free Poisson bialgebra on a coalgebra, truncated at `degree`.
#[pyclass(name = "Bialgebra", frozen)]
pub struct PyBialgebra(PresentedPoissonBialgebra);

#[pymethods]
impl PyBialgebra {
    #[new]
    fn new(spec: &PyCoalgebraSpec, degree: usize) -> PyResult<Self> {
        induce_bialgebra(&spec.0, degree).map(Self).map_err(err)
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.0.ambient().names().to_vec()
    }

    fn graded_dims(&self) -> Vec<usize> {
        self.0.quotient().graded_dims()
    }

    /// Canonical form of an expression such as `{c, s*c}`.
    fn eval(&self, expr: &str) -> PyResult<String> {
        Ok(eval_str(expr, self.0.ambient()).map_err(err)?.to_string())
    }

    fn coproduct(&self, expr: &str) -> PyResult<String> {
        let value = eval_str(expr, self.0.ambient()).map_err(err)?;
        Ok(render2(&self.0.free_coproduct(value.terms()), self.0.ambient().names()))
    }

    fn counit(&self, expr: &str) -> PyResult<String> {
        let value = eval_str(expr, self.0.ambient()).map_err(err)?;
        Ok(format_scalar(&self.0.free_counit(value.terms())))
    }

    fn check(&self) -> PyReport {
        PyReport(check_bialgebra(&self.0))
    }
}

/// Free Poisson Hopf algebra built from `stages` staged copies.
#[pyclass(name = "HopfAlgebra", frozen)]
pub struct PyHopfAlgebra(TruncatedHopf);

impl PyHopfAlgebra {
    fn parse(&self, expr: &str) -> PyResult<Poly> {
        Ok(eval_str(expr, self.0.ambient()).map_err(err)?.into_terms())
    }
}

#[pymethods]
impl PyHopfAlgebra {
    #[new]
    fn new(spec: &PyCoalgebraSpec, stages: usize, degree: usize) -> PyResult<Self> {
        hopf::free_poisson_hopf(&spec.0, stages, degree).map(Self).map_err(err)
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.0.ambient().names().to_vec()
    }

    fn filtration_dims(&self) -> Vec<usize> {
        self.0.filtration_dims()
    }

    fn normal_form(&self, expr: &str) -> PyResult<String> {
        let p = self.parse(expr)?;
        Ok(self.0.ambient().render(&self.0.normal_form(&p)))
    }

    /// `None` when the element reaches the top stage.
    fn antipode(&self, expr: &str) -> PyResult<Option<String>> {
        let p = self.parse(expr)?;
        Ok(self.0.antipode_of(&p).map(|s| self.0.ambient().render(&s)))
    }

    fn certificates(&self) -> PyReport {
        PyReport(self.0.certificates().clone())
    }

    fn verify_antipode(&self, depth: usize) -> PyResult<PyReport> {
        verify_antipode(&self.0, depth).map(PyReport).map_err(err)
    }
}

#[pyfunction]
fn graded_dimension(n: usize, d: usize) -> u128 {
    poisson::graded_dimension(n, d)
}

/// Lyndon words over `names`, grouped by degree `1..=max_degree`.
#[pyfunction]
fn lyndon_words(names: Vec<String>, max_degree: usize) -> Vec<Vec<String>> {
    lyndon(names.len(), max_degree)
        .iter()
        .map(|ws| ws.iter().map(|w| render_lyndon(w, &names)).collect())
        .collect()
}

/// Runs the command-line tool with `args` (without the program name) and
/// returns its exit code.
#[pyfunction]
fn run_cli(args: Vec<String>) -> i32 {
    let argv = std::iter::once("poisson-hopf".to_string()).chain(args);
    match Cli::try_parse_from(argv) {
        Ok(cli) => main_with(cli),
        Err(e) => {
            let _ = e.print();
            e.exit_code()
        }
    }
}

#[pymodule(name = "poisson_hopf")]
fn init_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("PoissonHopfError", m.py().get_type::<PoissonHopfError>())?;
    m.add_class::<PyReport>()?;
    m.add_class::<PyCoalgebraSpec>()?;
    m.add_class::<PyBialgebra>()?;
    m.add_class::<PyHopfAlgebra>()?;
    m.add_function(wrap_pyfunction!(graded_dimension, m)?)?;
    m.add_function(wrap_pyfunction!(lyndon_words, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}

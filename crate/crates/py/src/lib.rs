//! Python bindings. Hyperplane indices are 1-based, as on the command line.

use logarr::arrangement::{format_int_poly, Arrangement as CoreArrangement, Multiplicity};
use logarr::cli::{self, ArrangementSpec, Command, Flags, SideArg};
use logarr::deletion_restriction::{deletion_theorem_verify, EulerTriple};
use logarr::log_modules::{euler_multiplicity, freeness};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyAny;

fn err(e: logarr::Error) -> PyErr {
    match e {
        logarr::Error::Input(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

fn zero_based(i: usize, n: usize) -> PyResult<usize> {
    if i == 0 || i > n {
        return Err(PyValueError::new_err(format!("hyperplane index {i} out of range 1..={n}")));
    }
    Ok(i - 1)
}

/// A central multiarrangement over Q given by integer normal vectors.
#[pyclass(module = "logarr_py", frozen)]
pub struct Arrangement {
    spec: ArrangementSpec,
    arrangement: CoreArrangement,
    multiplicity: Multiplicity,
}

impl Arrangement {
    fn from_spec(spec: ArrangementSpec) -> PyResult<Self> {
        let (arrangement, multiplicity) = spec.parsed().map_err(err)?;
        Ok(Arrangement {
            spec,
            arrangement,
            multiplicity,
        })
    }

    fn triple(&self, hyperplane: usize) -> PyResult<EulerTriple> {
        let h = zero_based(hyperplane, self.arrangement.len())?;
        EulerTriple::new(&self.arrangement, &self.multiplicity, h).map_err(err)
    }
}

#[pymethods]
impl Arrangement {
    #[new]
    #[pyo3(signature = (hyperplanes, multiplicities=None, labels=None))]
    fn new(hyperplanes: Vec<Vec<i64>>, multiplicities: Option<Vec<i64>>, labels: Option<Vec<String>>) -> PyResult<Self> {
        let dim = hyperplanes
            .first()
            .map(|h| h.len())
            .ok_or_else(|| PyValueError::new_err("at least one hyperplane is needed"))?;
        Self::from_spec(ArrangementSpec {
            dim,
            hyperplanes,
            multiplicities,
            labels,
        })
    }

    /// A corpus arrangement such as `EX10`, `G3*m` or `RAND(3,5)`.
    #[staticmethod]
    #[pyo3(signature = (name, seed=0))]
    fn named(name: &str, seed: u64) -> PyResult<Self> {
        let item = cli::corpus(name, seed).map_err(err)?.remove(0);
        Self::from_spec(item.spec)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Self::from_spec(cli::parse(text).map_err(err)?)
    }

    fn to_json(&self) -> String {
        self.spec.to_json()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.arrangement.dim()
    }

    #[getter]
    fn multiplicities(&self) -> Vec<i64> {
        self.multiplicity.values().to_vec()
    }

    fn __len__(&self) -> usize {
        self.arrangement.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "Arrangement(dim={}, n={}, m={:?})",
            self.arrangement.dim(),
            self.arrangement.len(),
            self.multiplicity.values()
        )
    }

    /// Coefficients of the characteristic polynomial, constant term first.
    fn char_poly(&self) -> Vec<i64> {
        self.arrangement.char_poly()
    }

    fn char_poly_string(&self) -> String {
        format_int_poly(&self.arrangement.char_poly())
    }

    fn is_free(&self) -> PyResult<bool> {
        Ok(freeness(&self.arrangement, &self.multiplicity).map_err(err)?.free)
    }

    /// Exponents of D(A, m), or None when the module is not free.
    fn exponents(&self) -> PyResult<Option<Vec<i64>>> {
        Ok(freeness(&self.arrangement, &self.multiplicity).map_err(err)?.exponents)
    }

    /// The Euler multiplicity on the restriction to `hyperplane`, indexed by the restricted hyperplanes.
    fn euler_multiplicity(&self, hyperplane: usize) -> PyResult<Vec<i64>> {
        let h = zero_based(hyperplane, self.arrangement.len())?;
        let m = euler_multiplicity(&self.arrangement, &self.multiplicity, h).map_err(err)?;
        Ok(m.values().to_vec())
    }

    /// Deletion theorem report for the triple at `hyperplane`, with the SPOG classification.
    fn spog<'py>(&self, py: Python<'py>, hyperplane: usize) -> PyResult<Bound<'py, PyAny>> {
        let r = deletion_theorem_verify(&self.triple(hyperplane)?).map_err(err)?;
        to_py(py, &r)
    }

    /// Any command-line command on this arrangement; returns the JSON report as a dict.
    #[pyo3(signature = (command, hyperplane=None, delete=None, p=None, side="d", dmax=None, seed=0))]
    #[allow(clippy::too_many_arguments)]
    fn run<'py>(
        &self,
        py: Python<'py>,
        command: &str,
        hyperplane: Option<usize>,
        delete: Option<usize>,
        p: Option<usize>,
        side: &str,
        dmax: Option<i64>,
        seed: u64,
    ) -> PyResult<Bound<'py, PyAny>> {
        let command: Command = command.parse().map_err(err)?;
        let side: SideArg = side.parse().map_err(err)?;
        let flags = Flags {
            hyperplane,
            delete,
            p,
            side: side.into(),
            dmax,
            seed,
            name: None,
        };
        let report = cli::run(command, Some(&self.spec), &flags).map_err(err)?;
        to_py(py, &report)
    }
}

/// The nine-plane example in dimension 4 with its reproduced table.
#[pyfunction]
fn example5(py: Python<'_>) -> PyResult<Bound<'_, PyAny>> {
    to_py(py, &cli::report_example5().map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (name, seed=0))]
fn corpus<'py>(py: Python<'py>, name: &str, seed: u64) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &cli::corpus(name, seed).map_err(err)?)
}

#[pymodule]
fn logarr_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Arrangement>()?;
    m.add_function(wrap_pyfunction!(example5, m)?)?;
    m.add_function(wrap_pyfunction!(corpus, m)?)?;
    Ok(())
}

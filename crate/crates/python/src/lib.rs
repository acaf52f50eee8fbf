use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use pcring::json::ToJson;
use pcring::report::{self, AnalysisRequest};
use pcring::{instances, oracle, spectral, AbelianGroup, GroupRingElem, PairElem};

fn value_error(e: pcring::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn dense(group: &AbelianGroup, v: Vec<i64>) -> PyResult<GroupRingElem<BigInt>> {
    GroupRingElem::from_dense(group, v.into_iter().map(BigInt::from).collect()).map_err(value_error)
}

fn to_dense(x: &GroupRingElem<BigInt>) -> PyResult<Vec<i64>> {
    x.to_dense()
        .iter()
        .map(|v| i64::try_from(v).map_err(|_| PyRuntimeError::new_err("coefficient exceeds 64 bits")))
        .collect()
}

/// Projective class ring of a structure group with canonical element `c`.
///
/// Group-ring elements are dense integer lists indexed in lexicographic
/// order of exponent tuples; pair elements are `(s, t)` tuples of such lists.
#[pyclass(name = "PcRing", module = "pcring", frozen)]
struct PyPcRing {
    ring: pcring::PcRing,
    name: String,
}

#[pymethods]
impl PyPcRing {
    #[new]
    fn new(orders: Vec<usize>, c: Vec<i64>) -> PyResult<Self> {
        let inst = report::instance_from_dense(&orders, &c).map_err(value_error)?;
        Ok(Self::from_instance(inst))
    }

    #[getter]
    fn name(&self) -> &str {
        &self.name
    }

    #[getter]
    fn orders(&self) -> Vec<usize> {
        self.ring.group().orders().to_vec()
    }

    #[getter]
    fn s(&self) -> usize {
        self.ring.s()
    }

    #[getter]
    fn c(&self) -> PyResult<Vec<i64>> {
        to_dense(self.ring.c())
    }

    /// Exponent tuples in index order.
    fn elements(&self) -> Vec<Vec<usize>> {
        self.ring
            .group()
            .elements()
            .map(|e| e.exponents().to_vec())
            .collect()
    }

    fn r(&self) -> usize {
        spectral::spectrum(&self.ring).r()
    }

    fn decomposition(&self) -> String {
        spectral::decomposition(&self.ring).to_string()
    }

    /// Labels of the characters where the transform of `c` is nonzero.
    fn support(&self) -> Vec<Vec<usize>> {
        spectral::spectrum(&self.ring)
            .support()
            .iter()
            .map(|e| e.exponents().to_vec())
            .collect()
    }

    /// Floating-point values of the transform of `c`, for display.
    fn fourier_c(&self) -> Vec<(f64, f64)> {
        spectral::spectrum(&self.ring)
            .fourier_c()
            .iter()
            .map(|x| x.to_complex())
            .collect()
    }

    fn pair_mul(&self, x: (Vec<i64>, Vec<i64>), y: (Vec<i64>, Vec<i64>)) -> PyResult<(Vec<i64>, Vec<i64>)> {
        let x = self.pair(x)?;
        let y = self.pair(y)?;
        let z = self.ring.pair_mul(&x, &y).map_err(value_error)?;
        Ok((to_dense(z.s_part())?, to_dense(z.t_part())?))
    }

    /// Dimension vector `s + t c`.
    fn bar(&self, x: (Vec<i64>, Vec<i64>)) -> PyResult<Vec<i64>> {
        let x = self.pair(x)?;
        to_dense(&self.ring.bar(&x).map_err(value_error)?)
    }

    /// Primitive orthogonal idempotents as a JSON array of exact pairs.
    fn idempotents(&self) -> String {
        let family = spectral::idempotent_system(&self.ring);
        serde_json::Value::Array(family.iter().map(ToJson::to_json).collect()).to_string()
    }

    /// Basis of the nilradical as a JSON array of exact pairs.
    fn nilradical(&self) -> String {
        let family = spectral::nilradical_basis(&self.ring);
        serde_json::Value::Array(family.iter().map(ToJson::to_json).collect()).to_string()
    }

    /// Brute-force cross-check; returns `(passed, radical_dim)`.
    fn verify(&self) -> PyResult<(bool, usize)> {
        let nil = spectral::nilradical_basis(&self.ring);
        let verdict = oracle::verify(&self.ring, &nil).map_err(value_error)?;
        Ok((verdict.passed(), verdict.radical_dim))
    }

    fn __repr__(&self) -> String {
        format!("PcRing({}, s={})", self.name, self.ring.s())
    }
}

impl PyPcRing {
    fn from_instance(inst: pcring::InstanceDescriptor) -> Self {
        let ring = inst.ring().expect("projective instance").clone();
        PyPcRing { ring, name: inst.name }
    }

    fn pair(&self, (s, t): (Vec<i64>, Vec<i64>)) -> PyResult<PairElem<BigInt>> {
        let g = self.ring.group();
        PairElem::new(dense(g, s)?, dense(g, t)?).map_err(value_error)
    }
}

#[pyfunction]
fn uq_sl2(n: usize) -> PyResult<PyPcRing> {
    Ok(PyPcRing::from_instance(instances::uq_sl2(n).map_err(value_error)?))
}

/// Full JSON report for an instance document; same output as `pcring analyze`.
#[pyfunction]
#[pyo3(signature = (document, verify = true, idempotents = false, nilradical = false))]
fn analyze_json(document: &str, verify: bool, idempotents: bool, nilradical: bool) -> PyResult<String> {
    let parsed = report::parse_input(document).map_err(value_error)?;
    let request = AnalysisRequest {
        verify,
        emit_idempotents: idempotents,
        emit_nilradical: nilradical,
        ..parsed
    };
    Ok(report::run(&request).map_err(value_error)?.render())
}

/// Coefficients of the `n`-th cyclotomic polynomial, constant term first.
#[pyfunction]
fn cyclotomic_polynomial(n: usize) -> PyResult<Vec<i64>> {
    let p = pcring::cyclotomic_polynomial(n).map_err(value_error)?;
    p.coeffs()
        .iter()
        .map(|c| i64::try_from(c).map_err(|_| PyRuntimeError::new_err("coefficient exceeds 64 bits")))
        .collect()
}

#[pymodule]
#[pyo3(name = "pcring")]
fn pcring_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPcRing>()?;
    m.add_function(wrap_pyfunction!(uq_sl2, m)?)?;
    m.add_function(wrap_pyfunction!(analyze_json, m)?)?;
    m.add_function(wrap_pyfunction!(cyclotomic_polynomial, m)?)?;
    Ok(())
}

//! Python bindings. Angles are in radians; tensors are `(xx, xy, yy)` tuples
//! and complex quantities are Python `complex`.

use asym_plane::verify::{kirsch_suite, Corruption, SuiteConfig};
use asym_plane::{self as core, Complex64, Error};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(
    asym_plane,
    DomainError,
    PyValueError,
    "Point or stencil outside the domain."
);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Domain(_) => DomainError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

type Triple = (f64, f64, f64);

#[pyclass(name = "Moduli", frozen, from_py_object)]
#[derive(Clone, Copy)]
struct PyModuli(core::Moduli);

#[pymethods]
impl PyModuli {
    #[new]
    #[pyo3(signature = (lambda0, mu, mu0 = 0.0))]
    fn new(lambda0: f64, mu: f64, mu0: f64) -> PyResult<Self> {
        core::Moduli::new(lambda0, mu, mu0).map(Self).map_err(to_py)
    }

    /// Build from `lambda`, with `lambda0 = lambda + mu`.
    #[staticmethod]
    #[pyo3(signature = (lam, mu, mu0 = 0.0))]
    fn from_lambda(lam: f64, mu: f64, mu0: f64) -> PyResult<Self> {
        core::Moduli::from_lambda(lam, mu, mu0)
            .map(Self)
            .map_err(to_py)
    }

    #[getter]
    fn lambda0(&self) -> f64 {
        self.0.lambda0()
    }

    #[getter]
    fn lam(&self) -> f64 {
        self.0.lambda()
    }

    #[getter]
    fn mu(&self) -> f64 {
        self.0.mu()
    }

    #[getter]
    fn mu0(&self) -> f64 {
        self.0.mu0()
    }

    #[getter]
    fn ae_norm2(&self) -> f64 {
        self.0.ae_norm2()
    }

    fn kappa0(&self) -> PyResult<f64> {
        self.0.kappa0().map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!(
            "Moduli(lambda0={}, mu={}, mu0={})",
            self.0.lambda0(),
            self.0.mu(),
            self.0.mu0()
        )
    }
}

#[pyfunction]
fn stress_from_strain(m: &PyModuli, strain: Triple) -> Triple {
    let s = core::stress_from_strain(&m.0, &core::Strain2::new(strain.0, strain.1, strain.2));
    (s.s11, s.s12, s.s22)
}

#[pyfunction]
fn strain_from_stress(m: &PyModuli, stress: Triple) -> Triple {
    let e = core::strain_from_stress(&m.0, &core::Stress2::new(stress.0, stress.1, stress.2));
    (e.e11, e.e12, e.e22)
}

#[pyfunction]
fn constitutive_matrix(m: &PyModuli) -> [[f64; 3]; 3] {
    core::constitutive_matrix(&m.0)
}

#[pyfunction]
fn inverse_constitutive_matrix(m: &PyModuli) -> [[f64; 3]; 3] {
    core::inverse_constitutive_matrix(&m.0)
}

#[pyfunction]
fn constitutive_determinant(m: &PyModuli) -> f64 {
    core::constitutive_determinant(&m.0)
}

/// Finite Laurent series `sum c_k z^(n_min + k) + log * ln z`.
#[pyclass(name = "LaurentPotential", frozen, from_py_object)]
#[derive(Clone)]
struct PyLaurent(core::LaurentPotential);

#[pymethods]
impl PyLaurent {
    #[new]
    #[pyo3(signature = (n_min, coeffs, log = Complex64::new(0.0, 0.0)))]
    fn new(n_min: i32, coeffs: Vec<Complex64>, log: Complex64) -> Self {
        let series = core::LaurentPotential::new(n_min, coeffs);
        Self(if log == Complex64::new(0.0, 0.0) {
            series
        } else {
            series.with_log(log)
        })
    }

    #[getter]
    fn n_min(&self) -> i32 {
        self.0.n_min()
    }

    #[getter]
    fn coeffs(&self) -> Vec<Complex64> {
        self.0.coeffs().to_vec()
    }

    #[getter]
    fn log(&self) -> Complex64 {
        self.0.log_coeff()
    }

    fn __call__(&self, z: Complex64) -> PyResult<Complex64> {
        self.0.eval(z).map_err(to_py)
    }

    fn derivative(&self) -> Self {
        Self(self.0.derivative())
    }

    fn antiderivative(&self) -> PyResult<Self> {
        self.0.antiderivative().map(Self).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("LaurentPotential({})", self.0)
    }
}

fn sample_dict<'py>(py: Python<'py>, s: &core::FieldSample) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    for (k, v) in [
        ("x", s.x),
        ("y", s.y),
        ("r", s.r),
        ("theta", s.theta),
        ("srr", s.srr),
        ("stt", s.stt),
        ("srt", s.srt),
        ("s11", s.s11),
        ("s12", s.s12),
        ("s22", s.s22),
        ("ur", s.ur),
        ("utheta", s.utheta),
        ("u", s.u),
        ("v", s.v),
        ("U", s.airy),
        ("Q", s.trace),
    ] {
        d.set_item(k, v)?;
    }
    Ok(d)
}

#[pyclass(name = "PotentialPair", frozen)]
struct PyPair(core::PotentialPair);

#[pymethods]
impl PyPair {
    #[new]
    fn new(phi: &PyLaurent, psi: &PyLaurent) -> PyResult<Self> {
        core::PotentialPair::new(phi.0.clone(), psi.0.clone())
            .map(Self)
            .map_err(to_py)
    }

    /// `(s11, s12, s22)` at `z`.
    fn stresses(&self, z: Complex64) -> PyResult<Triple> {
        let s = self.0.stresses(z).map_err(to_py)?;
        Ok((s.s11, s.s12, s.s22))
    }

    /// `u + iv` at `z`.
    fn displacement(&self, m: &PyModuli, z: Complex64) -> PyResult<Complex64> {
        self.0.displacement(&m.0, z).map_err(to_py)
    }

    fn classical_displacement(&self, m: &PyModuli, z: Complex64) -> PyResult<Complex64> {
        self.0.classical_displacement(&m.0, z).map_err(to_py)
    }

    fn airy(&self, z: Complex64) -> PyResult<f64> {
        self.0.airy(z).map_err(to_py)
    }

    fn sample<'py>(
        &self,
        py: Python<'py>,
        m: &PyModuli,
        z: Complex64,
    ) -> PyResult<Bound<'py, PyDict>> {
        sample_dict(py, &self.0.sample(&m.0, z).map_err(to_py)?)
    }
}

#[pyclass(name = "KirschProblem", frozen)]
struct PyKirsch(core::KirschProblem);

#[pymethods]
impl PyKirsch {
    #[new]
    fn new(p: f64, radius: f64, moduli: &PyModuli) -> PyResult<Self> {
        core::KirschProblem::new(p, radius, moduli.0)
            .map(Self)
            .map_err(to_py)
    }

    #[getter]
    fn p(&self) -> f64 {
        self.0.p()
    }

    #[getter]
    fn radius(&self) -> f64 {
        self.0.radius()
    }

    #[getter]
    fn moduli(&self) -> PyModuli {
        PyModuli(*self.0.moduli())
    }

    fn potentials(&self) -> PyPair {
        PyPair(self.0.potentials())
    }

    /// `(srr, stt, srt)` at `(r, theta)`.
    fn stresses_polar(&self, r: f64, theta: f64) -> PyResult<Triple> {
        let s = self.0.stresses_polar(r, theta).map_err(to_py)?;
        Ok((s.srr, s.stt, s.srt))
    }

    /// `(ur, utheta)` from the complex potentials.
    fn displacements(&self, r: f64, theta: f64) -> PyResult<(f64, f64)> {
        let d = self.0.displacements(r, theta).map_err(to_py)?;
        Ok((d.ur, d.utheta))
    }

    fn displacements_closed_form(&self, r: f64, theta: f64) -> PyResult<(f64, f64)> {
        let d = self.0.displacements_closed_form(r, theta).map_err(to_py)?;
        Ok((d.ur, d.utheta))
    }

    fn classical_displacements(&self, r: f64, theta: f64) -> PyResult<(f64, f64)> {
        let d = self.0.classical_displacements(r, theta).map_err(to_py)?;
        Ok((d.ur, d.utheta))
    }

    fn boundary_coefficient(&self) -> f64 {
        self.0.boundary_coefficient()
    }

    fn boundary_displacements(&self, theta: f64) -> (f64, f64) {
        let d = self.0.boundary_displacements(theta);
        (d.ur, d.utheta)
    }

    /// Rows of a full-circle polar grid in r-major order.
    fn sample_grid<'py>(
        &self,
        py: Python<'py>,
        r_min: f64,
        r_max: f64,
        n_r: usize,
        n_theta: usize,
    ) -> PyResult<Vec<Bound<'py, PyDict>>> {
        let spec = core::PolarGridSpec::full(r_min, r_max, n_r, n_theta);
        let rows = py.detach(|| self.0.sample_grid(&spec)).map_err(to_py)?;
        rows.iter().map(|s| sample_dict(py, s)).collect()
    }

    /// Runs the residual checks; steps are fractions of the radius.
    /// Returns `(passed, [{check, order, normalized_residual, passed}, ...])`.
    #[pyo3(signature = (h = 1e-2, h_biharmonic = None, n_theta = 36, corruption = None))]
    fn verify<'py>(
        &self,
        py: Python<'py>,
        h: f64,
        h_biharmonic: Option<f64>,
        n_theta: usize,
        corruption: Option<&str>,
    ) -> PyResult<(bool, Vec<Bound<'py, PyDict>>)> {
        let r = self.0.radius();
        let mut cfg =
            SuiteConfig::around_hole(r, h * r, h_biharmonic.unwrap_or(h.max(1e-2)) * r, n_theta)
                .map_err(to_py)?;
        cfg.corruption = match corruption {
            None => None,
            Some(name) => Some(
                Corruption::from_name(name)
                    .ok_or_else(|| PyValueError::new_err(format!("unknown defect '{name}'")))?,
            ),
        };
        let suite = py.detach(|| kirsch_suite(&self.0, &cfg)).map_err(to_py)?;
        let reports = suite
            .reports
            .iter()
            .map(|rep| {
                let d = PyDict::new(py);
                d.set_item("check", &rep.check)?;
                d.set_item("order", rep.order)?;
                d.set_item("orders", rep.orders.clone())?;
                d.set_item("normalized_residual", rep.normalized_residual)?;
                d.set_item("passed", rep.passed)?;
                Ok(d)
            })
            .collect::<PyResult<Vec<_>>>()?;
        Ok((suite.passed, reports))
    }
}

/// `(ur, utheta)` on the boundary in the limit `mu -> 0`.
#[pyfunction]
fn boundary_limit_mu_to_zero(p: f64, radius: f64, lam: f64, theta: f64) -> PyResult<(f64, f64)> {
    let d = core::boundary_limit_mu_to_zero(p, radius, lam, theta).map_err(to_py)?;
    Ok((d.ur, d.utheta))
}

#[pymodule(name = "asym_plane")]
fn asym_plane_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("DomainError", m.py().get_type::<DomainError>())?;
    m.add_class::<PyModuli>()?;
    m.add_class::<PyLaurent>()?;
    m.add_class::<PyPair>()?;
    m.add_class::<PyKirsch>()?;
    m.add_function(wrap_pyfunction!(stress_from_strain, m)?)?;
    m.add_function(wrap_pyfunction!(strain_from_stress, m)?)?;
    m.add_function(wrap_pyfunction!(constitutive_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(inverse_constitutive_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(constitutive_determinant, m)?)?;
    m.add_function(wrap_pyfunction!(boundary_limit_mu_to_zero, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use pyo3::types::PyDict;
    use pyo3::wrap_pymodule;

    use super::*;

    fn run(code: &std::ffi::CStr) {
        Python::initialize();
        Python::attach(|py| {
            let globals = PyDict::new(py);
            globals
                .set_item("ap", wrap_pymodule!(asym_plane_py)(py))
                .unwrap();
            py.run(code, Some(&globals), None)
                .unwrap_or_else(|e| panic!("{e}"));
        });
    }

    #[test]
    fn constitutive_bindings() {
        run(c"
m = ap.Moduli.from_lambda(1.0, 1.0, 1.0)
assert (m.lambda0, m.lam, m.mu, m.mu0) == (2.0, 1.0, 1.0, 1.0)
assert ap.constitutive_determinant(m) == 32.0
s = ap.stress_from_strain(m, (1.0, 0.5, -0.25))
e = ap.strain_from_stress(m, s)
assert max(abs(a - b) for a, b in zip(e, (1.0, 0.5, -0.25))) < 1e-14
try:
    ap.Moduli(1.0, 0.0, 0.0)
    raise AssertionError
except ValueError:
    pass
");
    }

    #[test]
    fn kirsch_bindings() {
        run(c"
import math
prob = ap.KirschProblem(1.0, 1.0, ap.Moduli(2.0, 1.0, 1.0))
assert prob.stresses_polar(1.0, math.pi / 2)[1] == 3.0
assert abs(prob.displacements(1.0, 0.0)[0] - 0.75) < 1e-14
rows = prob.sample_grid(1.0, 2.0, 2, 4)
assert [r['r'] for r in rows] == [1.0] * 4 + [2.0] * 4
passed, checks = prob.verify(n_theta=12)
assert passed and len(checks) == 10
try:
    prob.stresses_polar(0.5, 0.0)
    raise AssertionError
except ap.DomainError:
    pass
");
    }

    #[test]
    fn laurent_bindings() {
        run(c"
f = ap.LaurentPotential(-1, [1.0, 0.0, 2.0])
assert abs(f(1j) - 1j) < 1e-15
g = f.antiderivative()
assert g.log == 1.0
assert abs(g.derivative()(2.0) - f(2.0)) < 1e-14
pair = ap.PotentialPair(ap.LaurentPotential(1, [0.25]), ap.LaurentPotential(1, [-0.5]))
s11, s12, s22 = pair.stresses(0.3 + 0.2j)
assert abs(s11 - 1.0) < 1e-15 and abs(s12) < 1e-15 and abs(s22) < 1e-15
");
    }
}

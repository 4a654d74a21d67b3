//! Python bindings: the polynomial type, q-binomials, both sides of the key
//! identity, the partition checks, and the sweep runner.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use qgollnitz_core::corollaries::{four_param_sides, FourParams};
use qgollnitz_core::keyid::{self, KeyParams};
use qgollnitz_core::partcomb::{self, Color, ColoredPartition};
use qgollnitz_core::sweep::{self, Format, Identity, Param, SweepSpec};
use qgollnitz_core::{qcomb, Error, LaurentPoly, TruncSeries};

fn to_py(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Exact Laurent polynomial in `q` with integer coefficients.
#[pyclass(
    name = "LaurentPoly",
    module = "qgollnitz",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
struct PyLaurentPoly {
    inner: LaurentPoly,
}

impl From<LaurentPoly> for PyLaurentPoly {
    fn from(inner: LaurentPoly) -> Self {
        Self { inner }
    }
}

#[pymethods]
impl PyLaurentPoly {
    /// Builds from a `{exponent: coefficient}` dict or a string like `1 - q + 2*q^3`.
    #[new]
    #[pyo3(signature = (value=None))]
    fn new(value: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        let Some(value) = value else {
            return Ok(LaurentPoly::zero().into());
        };
        if let Ok(text) = value.extract::<String>() {
            return text.parse::<LaurentPoly>().map(Into::into).map_err(to_py);
        }
        let terms: BTreeMap<i64, BigInt> = value.extract()?;
        Ok(LaurentPoly::from_terms(terms).into())
    }

    #[staticmethod]
    fn q_pow(exp: i64) -> Self {
        LaurentPoly::q_pow(exp).into()
    }

    fn coeff(&self, exp: i64) -> BigInt {
        self.inner.coeff(exp)
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    fn terms(&self) -> Vec<(i64, BigInt)> {
        self.inner.terms().map(|(e, c)| (e, c.clone())).collect()
    }

    fn shift(&self, n: i64) -> Self {
        self.inner.shift(n).into()
    }

    fn eval_at_one(&self) -> BigInt {
        self.inner.eval_at_one()
    }

    #[getter]
    fn min_exp(&self) -> Option<i64> {
        self.inner.min_exp()
    }

    #[getter]
    fn max_exp(&self) -> Option<i64> {
        self.inner.max_exp()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn __add__(&self, other: &Self) -> Self {
        (&self.inner + &other.inner).into()
    }

    fn __sub__(&self, other: &Self) -> Self {
        (&self.inner - &other.inner).into()
    }

    fn __mul__(&self, other: &Self) -> Self {
        (&self.inner * &other.inner).into()
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly('{}')", self.inner)
    }
}

fn series_coeffs(s: &TruncSeries) -> Vec<BigInt> {
    s.coeffs().to_vec()
}

fn parse_color(name: &str) -> PyResult<Color> {
    Color::ALL
        .into_iter()
        .find(|c| c.name() == name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown color {name:?}")))
}

fn partition(parts: Vec<(u32, String)>) -> PyResult<ColoredPartition> {
    let pairs = parts
        .into_iter()
        .map(|(v, c)| Ok((v, parse_color(&c)?)))
        .collect::<PyResult<Vec<_>>>()?;
    Ok(ColoredPartition::from_pairs(&pairs))
}

#[pyfunction]
fn qbinom(top: i64, bottom: i64) -> PyLaurentPoly {
    qcomb::qbinom(top, bottom).into()
}

#[pyfunction]
fn qmultinom(total: i64, parts: Vec<i64>) -> PyLaurentPoly {
    qcomb::qmultinom(total, &parts).into()
}

/// Left side `g_{i,j,k}(L, M)` of the key identity.
#[pyfunction]
#[allow(non_snake_case)]
fn lhs_g(i: i64, j: i64, k: i64, L: i64, M: i64) -> PyLaurentPoly {
    keyid::lhs_g(&KeyParams::new(i, j, k, L, M)).into()
}

/// Right side `p_{i,j,k}(L, M)` of the key identity.
#[pyfunction]
#[allow(non_snake_case)]
fn rhs_p(i: i64, j: i64, k: i64, L: i64, M: i64) -> PyLaurentPoly {
    keyid::rhs_p(&KeyParams::new(i, j, k, L, M)).into()
}

#[pyfunction]
#[allow(non_snake_case)]
fn check_key(i: i64, j: i64, k: i64, L: i64, M: i64) -> bool {
    keyid::check_key(&KeyParams::new(i, j, k, L, M))
}

/// Coefficient lists of both sides of the unbounded key identity mod `q^order`.
#[pyfunction]
fn key_limit_sides(i: i64, j: i64, k: i64, order: usize) -> PyResult<(Vec<BigInt>, Vec<BigInt>)> {
    let lhs = keyid::key_limit_lhs(i, j, k, order).map_err(to_py)?;
    let rhs = keyid::key_limit_rhs(i, j, k, order).map_err(to_py)?;
    Ok((series_coeffs(&lhs), series_coeffs(&rhs)))
}

#[pyfunction]
fn four_param(
    i: i64,
    j: i64,
    k: i64,
    l: i64,
    order: usize,
) -> PyResult<(Vec<BigInt>, Vec<BigInt>)> {
    let (lhs, rhs) = four_param_sides(&FourParams::new(i, j, k, l), order).map_err(to_py)?;
    Ok((series_coeffs(&lhs), series_coeffs(&rhs)))
}

#[pyfunction]
#[allow(non_snake_case)]
fn check_theorem1(L: i64, i: i64, j: i64, k: i64) -> PyResult<bool> {
    partcomb::check_theorem1(L, i, j, k).map_err(to_py)
}

/// Is the partition, given as `(value, color)` pairs, of Type-1?
#[pyfunction]
fn is_type1(parts: Vec<(u32, String)>) -> PyResult<bool> {
    Ok(partcomb::is_type1(&partition(parts)?))
}

/// Staircase image as `{color: parts}`.
#[pyfunction]
fn staircase_forward(parts: Vec<(u32, String)>) -> PyResult<BTreeMap<String, Vec<u32>>> {
    let img = partcomb::staircase_forward(&partition(parts)?).map_err(to_py)?;
    Ok(Color::ALL
        .into_iter()
        .map(|c| (c.name().to_string(), img.part(c).to_vec()))
        .collect())
}

#[pyfunction]
fn remark3_transform(parts: Vec<(u32, String)>) -> PyResult<Vec<u64>> {
    partcomb::remark3_transform(&partition(parts)?).map_err(to_py)
}

#[pyfunction]
fn gollnitz_b(n: u64) -> u64 {
    partcomb::gollnitz_b(n)
}

#[pyfunction]
fn gollnitz_c(n: u64) -> u64 {
    partcomb::gollnitz_c(n)
}

/// Runs a sweep and returns the JSON report. `ranges` maps parameter names
/// (`i`, `j`, `k`, `L`, `M`, `l`, `n`, `s`, `top`, `bottom`) to inclusive
/// `(lo, hi)` pairs.
#[pyfunction]
#[pyo3(signature = (identity, ranges=None, order=None, jobs=1, timing=false))]
fn run_sweep(
    identity: &str,
    ranges: Option<BTreeMap<String, (i64, i64)>>,
    order: Option<usize>,
    jobs: usize,
    timing: bool,
) -> PyResult<String> {
    let id: Identity = identity.parse().map_err(to_py)?;
    let mut spec = SweepSpec::new(id);
    for (name, (lo, hi)) in ranges.unwrap_or_default() {
        let param = id
            .default_ranges()
            .into_iter()
            .map(|(p, _, _)| p)
            .find(|p: &Param| p.name() == name)
            .ok_or_else(|| {
                PyValueError::new_err(format!("{identity} does not take parameter {name}"))
            })?;
        spec = spec.with_range(param, lo, hi).map_err(to_py)?;
    }
    if let Some(order) = order {
        spec = spec.with_order(order).map_err(to_py)?;
    }
    if !timing {
        spec = spec.without_timing();
    }
    let report = sweep::run_sweep(&spec, jobs).map_err(to_py)?;
    Ok(sweep::render_report(&report, Format::Json))
}

#[pymodule]
fn qgollnitz(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLaurentPoly>()?;
    m.add_function(wrap_pyfunction!(qbinom, m)?)?;
    m.add_function(wrap_pyfunction!(qmultinom, m)?)?;
    m.add_function(wrap_pyfunction!(lhs_g, m)?)?;
    m.add_function(wrap_pyfunction!(rhs_p, m)?)?;
    m.add_function(wrap_pyfunction!(check_key, m)?)?;
    m.add_function(wrap_pyfunction!(key_limit_sides, m)?)?;
    m.add_function(wrap_pyfunction!(four_param, m)?)?;
    m.add_function(wrap_pyfunction!(check_theorem1, m)?)?;
    m.add_function(wrap_pyfunction!(is_type1, m)?)?;
    m.add_function(wrap_pyfunction!(staircase_forward, m)?)?;
    m.add_function(wrap_pyfunction!(remark3_transform, m)?)?;
    m.add_function(wrap_pyfunction!(gollnitz_b, m)?)?;
    m.add_function(wrap_pyfunction!(gollnitz_c, m)?)?;
    m.add_function(wrap_pyfunction!(run_sweep, m)?)?;
    m.add("__version__", sweep::VERSION)?;
    Ok(())
}

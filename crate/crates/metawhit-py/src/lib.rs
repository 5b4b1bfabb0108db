//! Python bindings for the `metawhit` core crate.

use metawhit_core::algebra::{GaussNumeric, XPolynomial};
use metawhit_core::crystal::{enumerate_bzl, gk_lhs, gk_rhs, gkw as gkw_pair, whittaker_sum as crystal_sum, Normalization};
use metawhit_core::gt::{compare_crystal_gt, gt_ppart as pattern_sum};
use metawhit_core::lusztig::{local_transition as forward, local_transition_inverse, transition as move_to, weight_of, BzlTuple};
use metawhit_core::padic_sim::{closed_form_cell, from_coordinates, iwasawa, IntegrationOptions, LaurentElem};
use metawhit_core::roots::{build_type_a, gt_word, kostant_partition as kostant, root_order_of, CartanCase, ReducedWord};
use metawhit_core::Error;
use num_bigint::BigInt;
use num_complex::Complex64;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(metawhit, ResourceLimitError, PyException);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::ResourceLimit { .. } => ResourceLimitError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn normalization(name: &str) -> PyResult<Normalization> {
    match name {
        "classical" => Ok(Normalization::Classical),
        "printed" => Ok(Normalization::Printed),
        _ => Err(PyValueError::new_err(format!("unknown normalization {name:?}"))),
    }
}

fn cartan_case(name: &str) -> PyResult<CartanCase> {
    match name.to_ascii_lowercase().as_str() {
        "a1xa1" => Ok(CartanCase::A1xA1),
        "a2" => Ok(CartanCase::A2),
        "b2" => Ok(CartanCase::B2),
        "g2" => Ok(CartanCase::G2),
        _ => Err(PyValueError::new_err(format!("unknown case {name:?}"))),
    }
}

type PyCoefTerm = (String, i64, Vec<(u32, i32)>);

/// Polynomial in `x_1..x_r` whose coefficients carry powers of `q` and Gauss
/// sum tokens `g(a, b)`.
#[pyclass(name = "Polynomial", module = "metawhit", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Polynomial {
    inner: XPolynomial,
}

#[pymethods]
impl Polynomial {
    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn cover(&self) -> u32 {
        self.inner.n()
    }

    /// `[(exponents, [(rational, q_power, [(a, b), ...]), ...]), ...]`
    fn terms(&self) -> Vec<(Vec<u32>, Vec<PyCoefTerm>)> {
        self.inner
            .to_terms()
            .into_iter()
            .map(|t| {
                let c = t
                    .coefficient
                    .into_iter()
                    .map(|c| (c.rational, c.q_power, c.tokens.iter().map(|k| (k.a, k.b)).collect()))
                    .collect();
                (t.exponents, c)
            })
            .collect()
    }

    fn coefficient(&self, exponents: Vec<u32>) -> Vec<PyCoefTerm> {
        self.inner
            .coefficient(&exponents)
            .to_terms()
            .into_iter()
            .map(|c| (c.rational, c.q_power, c.tokens.iter().map(|k| (k.a, k.b)).collect()))
            .collect()
    }

    /// Substitute `x_i -> q^k x_i`.
    fn rescale_q(&self, k: i64) -> Self {
        Polynomial { inner: self.inner.rescale_q(k) }
    }

    /// Numeric value with `q = p` and tokens replaced by Gauss sums mod `p`.
    fn evaluate(&self, p: u64, x: Vec<Complex64>) -> PyResult<Complex64> {
        if x.len() != self.inner.rank() {
            return Err(PyValueError::new_err(format!("need {} x values", self.inner.rank())));
        }
        let ctx = GaussNumeric::new(p, self.inner.n()).map_err(py_err)?;
        Ok(self.inner.eval_with(Complex64::new(p as f64, 0.0), ctx.token_values(), &x))
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial(rank={}, cover={}, terms={})", self.inner.rank(), self.inner.n(), self.inner.len())
    }
}

#[pyfunction]
#[pyo3(signature = (lam, n, normalization="classical"))]
fn whittaker_sum(lam: Vec<i64>, n: u32, normalization: &str) -> PyResult<Polynomial> {
    let rs = build_type_a(lam.len(), n).map_err(py_err)?;
    let inner = crystal_sum(&lam, n, &rs, self::normalization(normalization)?).map_err(py_err)?;
    Ok(Polynomial { inner })
}

#[pyfunction]
#[pyo3(signature = (lam, n, normalization="classical"))]
fn gt_ppart(lam: Vec<i64>, n: u32, normalization: &str) -> PyResult<Polynomial> {
    let rs = build_type_a(lam.len(), n).map_err(py_err)?;
    let inner = pattern_sum(&lam, n, &rs, self::normalization(normalization)?).map_err(py_err)?;
    Ok(Polynomial { inner })
}

/// Returns `(verdict, calibration_q_power, max_abs_diff)`; the last entry is
/// `None` when no numeric check ran.
#[pyfunction]
#[pyo3(signature = (lam, n, normalization="classical", p=None))]
fn compare(lam: Vec<i64>, n: u32, normalization: &str, p: Option<u64>) -> PyResult<(bool, Option<i64>, Option<f64>)> {
    let rs = build_type_a(lam.len(), n).map_err(py_err)?;
    let rep = compare_crystal_gt(&lam, n, &rs, self::normalization(normalization)?, p).map_err(py_err)?;
    Ok((rep.verdict, rep.calibration_q_power, rep.numeric.map(|c| c.max_abs_diff)))
}

/// Both sides of the Gindikin-Karpelevich identity truncated at total degree `degree`.
#[pyfunction]
fn gk(r: usize, n: u32, degree: u32) -> PyResult<(Polynomial, Polynomial)> {
    let rs = build_type_a(r, n).map_err(py_err)?;
    let lhs = gk_lhs(n, &rs, degree).map_err(py_err)?;
    let rhs = gk_rhs(n, &rs, degree).map_err(py_err)?;
    Ok((Polynomial { inner: lhs }, Polynomial { inner: rhs }))
}

#[pyfunction]
fn gkw(word: Vec<usize>, r: usize, n: u32, degree: u32) -> PyResult<(Polynomial, Polynomial)> {
    let rs = build_type_a(r, n).map_err(py_err)?;
    let (sum, product) = gkw_pair(&word, n, &rs, degree).map_err(py_err)?;
    Ok((Polynomial { inner: sum }, Polynomial { inner: product }))
}

/// Members of `B(lambda + rho)` as lexicographically indexed tuples.
#[pyfunction]
fn crystal_tuples(lam: Vec<i64>) -> PyResult<Vec<Vec<u32>>> {
    let rs = build_type_a(lam.len(), 1).map_err(py_err)?;
    Ok(enumerate_bzl(&lam, &rs).map_err(py_err)?.tuples.into_iter().map(|t| t.m).collect())
}

#[pyfunction]
fn kostant_partition(lam: Vec<i64>) -> u128 {
    kostant(&lam)
}

/// Positive roots `(i, j)` in the order induced by a reduced word.
#[pyfunction]
fn root_order(r: usize, word: Vec<usize>) -> PyResult<Vec<(usize, usize)>> {
    Ok(root_order_of(r, &word).map_err(py_err)?.into_iter().map(|a| (a.i, a.j)).collect())
}

#[pyfunction]
#[pyo3(signature = (case, segment, inverse=false))]
fn local_transition(case: &str, segment: Vec<BigInt>, inverse: bool) -> PyResult<Vec<BigInt>> {
    let c = cartan_case(case)?;
    if inverse { local_transition_inverse(c, &segment) } else { forward(c, &segment) }.map_err(py_err)
}

/// Re-express a type A parametrization along `source` in terms of `target`.
#[pyfunction]
fn transition(r: usize, source: Vec<usize>, m: Vec<BigInt>, target: Vec<usize>) -> PyResult<Vec<BigInt>> {
    let from = ReducedWord::new(r, source).map_err(py_err)?;
    let to = ReducedWord::new(r, target).map_err(py_err)?;
    let t = BzlTuple::new(from, m).map_err(py_err)?;
    Ok(move_to(&t, &to).map_err(py_err)?.entries().to_vec())
}

#[pyfunction]
fn weight(r: usize, word: Vec<usize>, m: Vec<BigInt>) -> PyResult<Vec<BigInt>> {
    let w = ReducedWord::new(r, word).map_err(py_err)?;
    Ok(weight_of(&BzlTuple::new(w, m).map_err(py_err)?))
}

/// Character values and Gauss sums over `F_p` for an `n`-th power residue symbol.
#[pyclass(name = "GaussContext", module = "metawhit", frozen)]
pub struct GaussContext {
    inner: GaussNumeric,
}

#[pymethods]
impl GaussContext {
    #[new]
    fn new(p: u64, n: u32) -> PyResult<Self> {
        Ok(GaussContext { inner: GaussNumeric::new(p, n).map_err(py_err)? })
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.p()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn generator(&self) -> u64 {
        self.inner.generator()
    }

    fn chi(&self, u: u64) -> Complex64 {
        self.inner.chi(u)
    }

    fn gauss_sum(&self, a: i64, b: i64) -> Complex64 {
        self.inner.gauss_numeric(a, b)
    }
}

/// Cell index `m` of the unipotent element with the given coordinates along
/// the standard word of rank `r`. Coordinate `k` is the Laurent polynomial
/// `sum_j digits[k][j] t^(low + j)` over `F_p`.
#[pyfunction]
fn iwasawa_cell(r: usize, p: u64, low: i64, digits: Vec<Vec<u64>>) -> PyResult<Vec<u32>> {
    let word = gt_word(r);
    if digits.len() != word.len() {
        return Err(PyValueError::new_err(format!("need {} coordinates", word.len())));
    }
    if !metawhit_core::algebra::is_prime(p) {
        return Err(PyValueError::new_err(format!("{p} is not prime")));
    }
    let x: Vec<LaurentElem> = digits.iter().map(|d| LaurentElem::laurent_poly(p, low, d)).collect();
    let u = from_coordinates(p, &word, &x).map_err(py_err)?;
    Ok(iwasawa(&u, &word).map_err(py_err)?.m)
}

/// `(integral, closed_form, representatives)` for the cell `m` of the standard word.
#[pyfunction]
#[pyo3(signature = (lam, m, p, n, x, max_depth=5))]
fn integrate_cell(
    lam: Vec<i64>,
    m: Vec<u32>,
    p: u64,
    n: u32,
    x: Vec<Complex64>,
    max_depth: u32,
) -> PyResult<(Complex64, Complex64, usize)> {
    let word = gt_word(lam.len());
    let ctx = GaussNumeric::new(p, n).map_err(py_err)?;
    let opts = IntegrationOptions { max_depth };
    let got = metawhit_core::padic_sim::integrate_cell(&word, &m, &lam, &ctx, &x, opts).map_err(py_err)?;
    let want = closed_form_cell(&word, &m, &lam, &ctx, &x, Normalization::Classical).map_err(py_err)?;
    Ok((got.value(), want, got.representatives))
}

#[pymodule(name = "metawhit")]
fn init(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("ResourceLimitError", m.py().get_type::<ResourceLimitError>())?;
    m.add_class::<Polynomial>()?;
    m.add_class::<GaussContext>()?;
    m.add_function(wrap_pyfunction!(whittaker_sum, m)?)?;
    m.add_function(wrap_pyfunction!(gt_ppart, m)?)?;
    m.add_function(wrap_pyfunction!(compare, m)?)?;
    m.add_function(wrap_pyfunction!(gk, m)?)?;
    m.add_function(wrap_pyfunction!(gkw, m)?)?;
    m.add_function(wrap_pyfunction!(crystal_tuples, m)?)?;
    m.add_function(wrap_pyfunction!(kostant_partition, m)?)?;
    m.add_function(wrap_pyfunction!(root_order, m)?)?;
    m.add_function(wrap_pyfunction!(local_transition, m)?)?;
    m.add_function(wrap_pyfunction!(transition, m)?)?;
    m.add_function(wrap_pyfunction!(weight, m)?)?;
    m.add_function(wrap_pyfunction!(iwasawa_cell, m)?)?;
    m.add_function(wrap_pyfunction!(integrate_cell, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn option_names() {
        assert_eq!(normalization("printed").unwrap(), Normalization::Printed);
        assert!(cartan_case("B2").is_ok());
        assert!(cartan_case("c2").is_err());
    }
}

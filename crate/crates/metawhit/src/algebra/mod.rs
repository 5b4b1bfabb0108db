//! Coefficient ring, x-polynomials, Gauss sums and numeric specialization.

mod coef;
mod gauss;
mod xpoly;

pub use coef::{CoefElem, CoefMono, CoefTerm, TokenRef};
pub use gauss::{gauss_token, is_prime, primitive_root, GaussNumeric};
pub(crate) use gauss::pow_mod;
pub use xpoly::{XPolynomial, XTerm};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::roots::Root;

fn check_context(n: u32, q_value: u64, ctx: &GaussNumeric) -> Result<()> {
    if ctx.p() != q_value {
        return Err(Error::InvalidContext(format!("q = {q_value} but the Gauss context uses p = {}", ctx.p())));
    }
    if ctx.n() != n {
        return Err(Error::InvalidContext(format!("element has cover degree {n}, context has {}", ctx.n())));
    }
    ctx.check_symbolic()
}

/// Ring homomorphism `q -> q_value`, `g(a,-1) -> gauss_numeric(a,-1)`.
pub fn specialize_coef(e: &CoefElem, q_value: u64, ctx: &GaussNumeric) -> Result<Complex64> {
    check_context(e.n(), q_value, ctx)?;
    Ok(e.eval_with(Complex64::new(q_value as f64, 0.0), ctx.token_values()))
}

/// As [`specialize_coef`], additionally sending `x_i -> x_values[i]`.
pub fn specialize(p: &XPolynomial, q_value: u64, ctx: &GaussNumeric, x_values: &[Complex64]) -> Result<Complex64> {
    check_context(p.n(), q_value, ctx)?;
    if x_values.len() != p.rank() {
        return Err(Error::InvalidArgument(format!("expected {} x values, got {}", p.rank(), x_values.len())));
    }
    Ok(p.eval_with(Complex64::new(q_value as f64, 0.0), ctx.token_values(), x_values))
}

/// Expansion of `(1 - q^-1 x_a^k)/(1 - x_a^k)` with `k = n_alpha`, truncated at
/// total degree `d` in the simple-root variables.
pub fn gk_factor(alpha: Root, r: usize, n_alpha: u32, d: u32, n: u32) -> XPolynomial {
    let coroot = alpha.coroot(r);
    let height: u32 = coroot.iter().sum();
    let mut out = XPolynomial::one(r, n);
    let c = &CoefElem::one(n) - &CoefElem::q_pow(n, -1);
    let mut k = 1u32;
    while k * n_alpha * height <= d {
        out.add_term(coroot.iter().map(|h| h * k * n_alpha).collect(), c.clone());
        k += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_minus_qinv(n: u32) -> CoefElem {
        &CoefElem::one(n) - &CoefElem::q_pow(n, -1)
    }

    #[test]
    fn gk_factor_examples() {
        let a = Root::new(1, 2);
        assert_eq!(gk_factor(a, 1, 2, 1, 2), XPolynomial::one(1, 2));
        let mut expect = XPolynomial::one(1, 1);
        expect.add_term(vec![1], one_minus_qinv(1));
        expect.add_term(vec![2], one_minus_qinv(1));
        assert_eq!(gk_factor(a, 1, 1, 2, 1), expect);
        let mut expect = XPolynomial::one(1, 2);
        expect.add_term(vec![2], one_minus_qinv(2));
        assert_eq!(gk_factor(a, 1, 2, 3, 2), expect);
    }

    #[test]
    fn specialize_simple() {
        let ctx = GaussNumeric::new(5, 1).unwrap();
        let e = &CoefElem::q_pow(1, 1) - &CoefElem::one(1);
        assert!((specialize_coef(&e, 5, &ctx).unwrap() - Complex64::new(4.0, 0.0)).norm() < 1e-12);
        assert!(specialize_coef(&e, 7, &ctx).is_err());
    }

    #[test]
    fn specialize_token_is_gauss_numeric() {
        let ctx = GaussNumeric::new(5, 2).unwrap();
        let v = specialize_coef(&gauss_token(1, -1, 2), 5, &ctx).unwrap();
        assert!((v - ctx.gauss_numeric(1, -1)).norm() < 1e-12);
    }
}

//! Exact integration over cells by enumerating right cosets of `U^-(O)`.
//!
//! Each coset has a unique representative whose coordinates are polar
//! (`sum_{k>=1} c_k t^-k`), and every coset has volume one. Coordinates are
//! chosen in the order `x_N, .., x_1` so that `m_k` can be checked as soon as
//! `x_k` is fixed.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;

use super::field::LaurentElem;
use super::iwasawa::{f_value, from_coordinates, psi_lambda, step, IwasawaResult};
use super::matrix::Mat;
use crate::algebra::{CoefElem, GaussNumeric};
use crate::crystal::{decorate_tuple, in_crystal, tuple_term, Normalization};
use crate::error::{Error, Result};
use crate::roots::{build_type_a, ReducedWord};

#[derive(Debug, Clone, Copy)]
pub struct IntegrationOptions {
    /// Largest pole order tried before giving up.
    pub max_depth: u32,
}

impl Default for IntegrationOptions {
    fn default() -> Self {
        IntegrationOptions { max_depth: 5 }
    }
}

/// All `sum_{k=1}^{depth} c_k t^-k`.
pub fn polar_elements(p: u64, depth: u32) -> Vec<LaurentElem> {
    let mut out = vec![LaurentElem::zero(p)];
    for d in 1..=depth {
        out = out
            .into_iter()
            .flat_map(|x| (0..p).map(move |c| &x + &LaurentElem::laurent_poly(p, -(d as i64), &[c])))
            .collect();
    }
    out
}

fn walk(
    word: &ReducedWord,
    m: &[u32],
    polar: &[LaurentElem],
    k: usize,
    x: &mut Vec<LaurentElem>,
    steps: &mut Vec<(LaurentElem, LaurentElem, Mat)>,
    p_next: &Mat,
    out: &mut Vec<IwasawaResult>,
) -> Result<()> {
    for cand in polar {
        let s = step(word, k, cand, p_next)?;
        if s.m != m[k] {
            continue;
        }
        x[k] = cand.clone();
        steps[k] = (s.y.clone(), s.w.clone(), s.p.clone());
        if k == 0 {
            out.push(IwasawaResult {
                word: word.clone(),
                x: x.clone(),
                y: steps.iter().map(|t| t.0.clone()).collect(),
                w: steps.iter().map(|t| t.1.clone()).collect(),
                m: m.to_vec(),
                p1: s.p,
            });
        } else {
            walk(word, m, polar, k - 1, x, steps, &s.p, out)?;
        }
    }
    Ok(())
}

/// Coset representatives of `C_m` whose coordinates have pole order at most `depth`.
pub fn cell_representatives(word: &ReducedWord, m: &[u32], p: u64, depth: u32) -> Result<Vec<IwasawaResult>> {
    let nn = word.len();
    if m.len() != nn {
        return Err(Error::InvalidArgument(format!("cell index must have {nn} entries")));
    }
    let polar = polar_elements(p, depth);
    let top = nn - 1;
    let id = Mat::identity(p, word.rank() + 1);
    let parts: Vec<Result<Vec<IwasawaResult>>> = polar
        .par_iter()
        .map(|cand| {
            let mut out = Vec::new();
            let s = step(word, top, cand, &id)?;
            if s.m != m[top] {
                return Ok(out);
            }
            let mut x = vec![LaurentElem::zero(p); nn];
            x[top] = cand.clone();
            let mut steps = vec![(LaurentElem::zero(p), LaurentElem::one(p), id.clone()); nn];
            steps[top] = (s.y.clone(), s.w.clone(), s.p.clone());
            if top == 0 {
                out.push(IwasawaResult { word: word.clone(), x, y: vec![s.y], w: vec![s.w], m: m.to_vec(), p1: s.p });
            } else {
                walk(word, m, &polar, top - 1, &mut x, &mut steps, &s.p, &mut out)?;
            }
            Ok(out)
        })
        .collect();
    let mut out = Vec::new();
    for part in parts {
        out.extend(part?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct CellEnumeration {
    pub depth: u32,
    pub representatives: usize,
}

/// Representatives of the whole cell; the depth grows until one more level
/// adds nothing.
pub fn cell_representatives_adaptive(
    word: &ReducedWord,
    m: &[u32],
    p: u64,
    opts: IntegrationOptions,
) -> Result<(Vec<IwasawaResult>, CellEnumeration)> {
    if word.rank() > 2 {
        return Err(Error::Unsupported("cell enumeration is limited to rank at most two".into()));
    }
    let mut depth = m.iter().sum::<u32>().max(1);
    let mut prev = cell_representatives(word, m, p, depth)?;
    loop {
        if depth + 1 > opts.max_depth {
            return Err(Error::ResourceLimit { depth: depth + 1, detail: format!("cell {m:?} did not stabilize") });
        }
        let next = cell_representatives(word, m, p, depth + 1)?;
        if next.len() == prev.len() {
            let info = CellEnumeration { depth, representatives: prev.len() };
            return Ok((prev, info));
        }
        prev = next;
        depth += 1;
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CellIntegral {
    pub re: f64,
    pub im: f64,
    pub depth: u32,
    pub representatives: usize,
}

impl CellIntegral {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

fn check_ctx(word: &ReducedWord, lambda: Option<&[i64]>, x_values: &[Complex64]) -> Result<()> {
    if x_values.len() != word.rank() {
        return Err(Error::InvalidArgument(format!("need {} x values", word.rank())));
    }
    if let Some(l) = lambda {
        if l.len() != word.rank() || l.iter().any(|&v| v < 0) {
            return Err(Error::InvalidArgument("lambda must be dominant of the word's rank".into()));
        }
    }
    Ok(())
}

/// `sum_reps f(u) psi_lambda(u)`; with `lambda = None` only `f` is summed.
pub fn sum_over_representatives(
    reps: &[IwasawaResult],
    lambda: Option<&[i64]>,
    ctx: &GaussNumeric,
    x_values: &[Complex64],
) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    for res in reps {
        let mut v = f_value(res, ctx, x_values)?;
        if let Some(l) = lambda {
            v *= psi_lambda(&from_coordinates(ctx.p(), &res.word, &res.x)?, l, ctx);
        }
        acc += v;
    }
    Ok(acc)
}

fn integrate(
    word: &ReducedWord,
    m: &[u32],
    lambda: Option<&[i64]>,
    ctx: &GaussNumeric,
    x_values: &[Complex64],
    opts: IntegrationOptions,
) -> Result<CellIntegral> {
    check_ctx(word, lambda, x_values)?;
    let (reps, info) = cell_representatives_adaptive(word, m, ctx.p(), opts)?;
    let v = sum_over_representatives(&reps, lambda, ctx, x_values)?;
    Ok(CellIntegral { re: v.re, im: v.im, depth: info.depth, representatives: info.representatives })
}

/// `int_{C_m} f(u) psi_lambda(u) du`.
pub fn integrate_cell(
    word: &ReducedWord,
    m: &[u32],
    lambda: &[i64],
    ctx: &GaussNumeric,
    x_values: &[Complex64],
    opts: IntegrationOptions,
) -> Result<CellIntegral> {
    integrate(word, m, Some(lambda), ctx, x_values, opts)
}

/// `int_{C_m} f(u) du`.
pub fn integrate_cell_f_only(
    word: &ReducedWord,
    m: &[u32],
    ctx: &GaussNumeric,
    x_values: &[Complex64],
    opts: IntegrationOptions,
) -> Result<CellIntegral> {
    integrate(word, m, None, ctx, x_values, opts)
}

/// Measure of `C_m`, i.e. the number of coset representatives.
pub fn cell_measure(word: &ReducedWord, m: &[u32], p: u64, opts: IntegrationOptions) -> Result<BigRational> {
    let (_, info) = cell_representatives_adaptive(word, m, p, opts)?;
    Ok(BigRational::from_integer(BigInt::from(info.representatives)))
}

/// Value of a token-free coefficient at `q = p`.
pub fn eval_rational_at(c: &CoefElem, p: u64) -> Option<BigRational> {
    let mut acc = BigRational::from_integer(0.into());
    for (mono, coef) in c.terms() {
        if mono.has_tokens() {
            return None;
        }
        let qp = BigRational::from_integer(BigInt::from(p)).pow(mono.q as i32);
        acc += coef * qp;
    }
    Some(acc)
}

/// Crystal tuple (lexicographic) matching the cell `m` of `word`: the entry
/// at position `k`, root `(i,j)`, goes to the root `(r+2-j, r+2-i)`.
pub fn cell_to_crystal_tuple(word: &ReducedWord, m: &[u32]) -> Vec<u32> {
    let r = word.rank();
    let rs = build_type_a(r, 1).expect("rank at least one");
    let mut lex = vec![0u32; rs.num_positive()];
    for (&mi, root) in m.iter().zip(word.root_order()) {
        let star = crate::roots::Root::new(r + 2 - root.j, r + 2 - root.i);
        lex[rs.index_of(star).expect("positive root")] = mi;
    }
    lex
}

/// Closed form for the cell integral at `q = p`: the crystal term
/// `prod_alpha w(m,alpha) x_alpha^{m_alpha}` of [`cell_to_crystal_tuple`],
/// with `lambda` and the `x` values read in reverse; zero off the crystal.
pub fn closed_form_cell(
    word: &ReducedWord,
    m: &[u32],
    lambda: &[i64],
    ctx: &GaussNumeric,
    x_values: &[Complex64],
    norm: Normalization,
) -> Result<Complex64> {
    check_ctx(word, Some(lambda), x_values)?;
    let rs = build_type_a(word.rank(), ctx.n())?;
    let lex = cell_to_crystal_tuple(word, m);
    let lam: Vec<i64> = lambda.iter().rev().copied().collect();
    let xs: Vec<Complex64> = x_values.iter().rev().copied().collect();
    if !in_crystal(&lam, &lex, rs.rank()) {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let t = decorate_tuple(&lam, &lex, &rs)?;
    let term = tuple_term(&t, &rs, ctx.n(), norm);
    crate::algebra::specialize(&term, ctx.p(), ctx, &xs)
}

#[derive(Debug, Clone, Serialize)]
pub struct ContainmentRow {
    pub m: Vec<u32>,
    pub representatives: usize,
    pub conjugate_integral: bool,
    pub in_b_lambda: bool,
    pub in_b_lambda_plus_rho: bool,
}

/// Whether `t^lambda u t^-lambda` is integral on every coset of `C_m`,
/// next to membership of `m` in `B(lambda)` and `B(lambda + rho)`.
pub fn containment_probe(word: &ReducedWord, m: &[u32], lambda: &[i64], p: u64, opts: IntegrationOptions) -> Result<ContainmentRow> {
    let (reps, _) = cell_representatives_adaptive(word, m, p, opts)?;
    let r = word.rank();
    let mut integral = true;
    for res in &reps {
        let u = from_coordinates(p, word, &res.x)?;
        for i in 2..=r + 1 {
            for j in 1..i {
                let shift: i64 = lambda[j - 1..i - 1].iter().sum();
                if !(&LaurentElem::t_pow(p, shift) * u.get(i, j)).is_integral() {
                    integral = false;
                }
            }
        }
    }
    let lex = cell_to_crystal_tuple(word, m);
    let lam: Vec<i64> = lambda.iter().rev().copied().collect();
    let shifted: Vec<i64> = lam.iter().map(|l| l - 1).collect();
    Ok(ContainmentRow {
        m: m.to_vec(),
        representatives: reps.len(),
        conjugate_integral: integral,
        in_b_lambda: in_crystal(&shifted, &lex, r),
        in_b_lambda_plus_rho: in_crystal(&lam, &lex, r),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::cell_volume;
    use crate::roots::gt_word;

    #[test]
    fn polar_count() {
        assert_eq!(polar_elements(3, 2).len(), 9);
    }

    #[test]
    fn sl2_cells() {
        let word = gt_word(1);
        let opts = IntegrationOptions::default();
        for m in 0..3u32 {
            let vol = cell_measure(&word, &[m], 5, opts).unwrap();
            let expect = eval_rational_at(&cell_volume(&word, &[m], 1).unwrap(), 5).unwrap();
            assert_eq!(vol, expect, "m = {m}");
        }
        let ctx = GaussNumeric::new(5, 1).unwrap();
        let x = [Complex64::new(0.3, 0.2)];
        let i = integrate_cell(&word, &[1], &[0], &ctx, &x, opts).unwrap();
        assert!((i.value() - (-x[0] / 5.0)).norm() < 1e-9);
        let i = integrate_cell(&word, &[0], &[0], &ctx, &x, opts).unwrap();
        assert!((i.value() - 1.0).norm() < 1e-9);
    }

    #[test]
    fn sl2_vanishing() {
        let word = gt_word(1);
        let ctx = GaussNumeric::new(5, 2).unwrap();
        let x = [Complex64::new(0.3, 0.2)];
        let i = integrate_cell_f_only(&word, &[1], &ctx, &x, IntegrationOptions::default()).unwrap();
        assert!(i.value().norm() < 1e-9);
    }
}

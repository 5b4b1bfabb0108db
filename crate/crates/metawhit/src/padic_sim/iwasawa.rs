//! Iwasawa decomposition of lower unipotent matrices along a reduced word,
//! and the pointwise integrand `f * psi_lambda`.

use num_complex::Complex64;

use super::field::LaurentElem;
use super::matrix::Mat;
use crate::algebra::{CoefElem, GaussNumeric, XPolynomial};
use crate::error::{Error, Result};
use crate::roots::{ReducedWord, Root};

/// Tame symbol `(x, y)` as an exponent in `Z/n`.
pub fn hilbert(x: &LaurentElem, y: &LaurentElem, ctx: &GaussNumeric) -> Result<u32> {
    let p = ctx.p();
    if x.p() != p || y.p() != p {
        return Err(Error::InvalidContext("field characteristic differs from the Gauss context".into()));
    }
    let (a, b) = match (x.valuation(), y.valuation()) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(Error::InvalidArgument("Hilbert symbol of zero".into())),
    };
    let one = LaurentElem::one(p);
    let sign = if (a * b).rem_euclid(2) == 1 { LaurentElem::constant(p, -1) } else { one };
    let ux = LaurentElem::constant(p, x.residue() as i64);
    let uy = LaurentElem::constant(p, y.residue() as i64);
    let v = &(&sign * &ux.pow(b)?) * &uy.pow(-a)?;
    Ok(ctx.chi_exponent(v.residue()))
}

/// Additive character: `exp(2 pi i a_{-1} / p)`.
pub fn psi(x: &LaurentElem, ctx: &GaussNumeric) -> Complex64 {
    ctx.additive(x.coeff(-1))
}

/// `prod_j e_{-alpha_j}(x_j)` in the word's root order.
pub fn from_coordinates(p: u64, word: &ReducedWord, x: &[LaurentElem]) -> Result<Mat> {
    if x.len() != word.len() {
        return Err(Error::InvalidArgument(format!("need {} coordinates", word.len())));
    }
    let n = word.rank() + 1;
    let mut m = Mat::identity(p, n);
    for (a, xi) in word.root_order().iter().zip(x) {
        m = &m * &Mat::e_neg(p, n, *a, xi);
    }
    Ok(m)
}

/// Inverse of [`from_coordinates`].
pub fn coordinates(u: &Mat, word: &ReducedWord) -> Result<Vec<LaurentElem>> {
    let (p, n) = (u.p(), u.size());
    if n != word.rank() + 1 {
        return Err(Error::InvalidArgument("matrix size does not match the word's rank".into()));
    }
    let mut rest = u.clone();
    let mut out = Vec::with_capacity(word.len());
    for a in word.root_order() {
        let x = rest.get(a.j, a.i).clone();
        rest = &Mat::e_neg(p, n, *a, &-&x) * &rest;
        out.push(x);
    }
    if rest != Mat::identity(p, n) {
        return Err(Error::InvalidArgument("matrix is not lower unitriangular".into()));
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct Step {
    pub y: LaurentElem,
    pub w: LaurentElem,
    pub m: u32,
    pub p: Mat,
}

/// One step: from `p_{k+1}` and `x_k` produce `y_k`, `w_k`, `m_k`, `p_k`.
pub fn step(word: &ReducedWord, k: usize, x: &LaurentElem, p_next: &Mat) -> Result<Step> {
    let (p, n) = (p_next.p(), p_next.size());
    let alpha = word.root_order()[k];
    let (a, b) = (alpha.i, alpha.j);
    let mm = &Mat::e_neg(p, n, alpha, x) * p_next;
    let mut rows: Vec<usize> = (1..a).collect();
    rows.push(b);
    let cols0: Vec<usize> = (1..=a).collect();
    let mut cols1: Vec<usize> = (1..a).collect();
    cols1.push(b);
    let y = mm.minor(&rows, &cols0).det().div(&mm.minor(&rows, &cols1).det())?;
    let p_prime = &mm * &Mat::e_neg(p, n, alpha, &-&y);
    check_supports(&p_prime, word, k)?;
    if y.is_integral() {
        Ok(Step { w: LaurentElem::one(p), m: 0, p: p_prime, y })
    } else {
        let m = (-y.valuation().expect("nonzero")) as u32;
        let pk = &(&p_prime * &Mat::h(p, n, alpha, &y.inv()?)?) * &Mat::e_pos(p, n, alpha, &y);
        Ok(Step { w: y.clone(), m, p: pk, y })
    }
}

/// `p'_k` has lower part in `{alpha_1..alpha_{k-1}}` and upper part in `{alpha_{k+1}..alpha_N}`.
fn check_supports(pp: &Mat, word: &ReducedWord, k: usize) -> Result<()> {
    let (l, _, u) = pp.ldu()?;
    let roots = word.root_order();
    let n = pp.size();
    for i in 1..=n {
        for j in 1..=n {
            let (entry, ok) = if i > j {
                (l.get(i, j), roots[..k].contains(&Root::new(j, i)))
            } else if i < j {
                (u.get(i, j), roots[k + 1..].contains(&Root::new(i, j)))
            } else {
                continue;
            };
            if !entry.is_zero() && !ok {
                return Err(Error::Unsupported(format!("support condition fails at step {} entry ({i},{j})", k + 1)));
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone)]
pub struct IwasawaResult {
    pub word: ReducedWord,
    pub x: Vec<LaurentElem>,
    pub y: Vec<LaurentElem>,
    pub w: Vec<LaurentElem>,
    pub m: Vec<u32>,
    pub p1: Mat,
}

impl IwasawaResult {
    /// `kappa = p_1^{-1} u`.
    pub fn kappa(&self, u: &Mat) -> Result<Mat> {
        Ok(&self.p1.inverse()? * u)
    }

    /// Diagonal of `prod_{i=N}^{1} h_{-alpha_i}(w_i)`.
    pub fn predicted_diagonal(&self) -> Result<Vec<LaurentElem>> {
        let p = self.p1.p();
        let n = self.p1.size();
        let mut d = vec![LaurentElem::one(p); n];
        for (a, w) in self.word.root_order().iter().zip(&self.w) {
            d[a.i - 1] = &d[a.i - 1] * &w.inv()?;
            d[a.j - 1] = &d[a.j - 1] * w;
        }
        Ok(d)
    }

    /// Integral `kappa` of determinant one, and the diagonal prediction.
    pub fn verify(&self, u: &Mat) -> Result<bool> {
        let kappa = self.kappa(u)?;
        Ok(kappa.is_integral()
            && kappa.det() == LaurentElem::one(u.p())
            && self.p1.diagonal() == self.predicted_diagonal()?)
    }
}

pub fn iwasawa(u: &Mat, word: &ReducedWord) -> Result<IwasawaResult> {
    let x = coordinates(u, word)?;
    iwasawa_from_coordinates(word, x, u.p())
}

pub fn iwasawa_from_coordinates(word: &ReducedWord, x: Vec<LaurentElem>, p: u64) -> Result<IwasawaResult> {
    let nn = word.len();
    let mut pk = Mat::identity(p, word.rank() + 1);
    let (mut y, mut w, mut m) = (vec![LaurentElem::zero(p); nn], vec![LaurentElem::one(p); nn], vec![0; nn]);
    for k in (0..nn).rev() {
        let s = step(word, k, &x[k], &pk)?;
        y[k] = s.y;
        w[k] = s.w;
        m[k] = s.m;
        pk = s.p;
    }
    Ok(IwasawaResult { word: word.clone(), x, y, w, m, p1: pk })
}

/// Cell of `u` for the word `(2,1,2)` read off the valuation table in the
/// entries `x = u_{21}`, `y = u_{31}`, `z = u_{32}` and `w = xz - y`.
pub fn classify_cell_sl3(u: &Mat) -> Result<[u32; 3]> {
    if u.size() != 3 {
        return Err(Error::Unsupported("the valuation table is for rank two".into()));
    }
    let (x, y, z) = (u.get(2, 1), u.get(3, 1), u.get(3, 2));
    let w = &(x * z) - y;
    let v = |e: &LaurentElem| e.valuation();
    let ratio = |a: &LaurentElem, b: &LaurentElem| -> Option<i64> {
        if b.is_zero() {
            None
        } else {
            a.div(b).ok().and_then(|r| r.valuation())
        }
    };
    let le1 = |val: Option<i64>| val.map_or(true, |k| k >= 0);
    let neg = |val: Option<i64>| val.filter(|&k| k < 0).map(|k| (-k) as u32);
    let wz_y = if y.is_zero() { None } else { ratio(&(&w * z), y) };
    let y_z = ratio(y, z);
    let x_y = ratio(x, y);

    let mut hits = Vec::new();
    if let (Some(m3), Some(m2)) = (neg(v(z)), neg(y_z)) {
        match neg(wz_y) {
            Some(m1) => hits.push([m1, m2, m3]),
            None if le1(wz_y) => hits.push([0, m2, m3]),
            None => {}
        }
    }
    if let Some(m3) = neg(v(z)) {
        if le1(y_z) {
            match neg(v(&w)) {
                Some(m1) => hits.push([m1, 0, m3]),
                None => hits.push([0, 0, m3]),
            }
        }
    }
    if le1(v(z)) {
        if let Some(m2) = neg(v(y)) {
            match neg(x_y) {
                Some(m1) => hits.push([m1, m2, 0]),
                None => hits.push([0, m2, 0]),
            }
        }
        if le1(v(y)) {
            match neg(v(x)) {
                Some(m1) => hits.push([m1, 0, 0]),
                None => hits.push([0, 0, 0]),
            }
        }
    }
    if hits.len() != 1 {
        return Err(Error::Unsupported(format!("valuation table matched {} rows", hits.len())));
    }
    Ok(hits[0])
}

/// `e_k = m_k + sum_{i<k} <alpha_i, alpha_k^vee> m_i`.
pub fn symbol_exponents(word: &ReducedWord, m: &[u32]) -> Vec<i64> {
    let roots = word.root_order();
    (0..m.len())
        .map(|k| m[k] as i64 + (0..k).map(|i| roots[i].pairing(roots[k]) * m[i] as i64).sum::<i64>())
        .collect()
}

/// Exponent of the `mu_n` factor `prod_k (u_k, t)^{e_k}`, `u_k = t^{m_k} w_k`.
pub fn f_zeta(res: &IwasawaResult, ctx: &GaussNumeric) -> Result<u32> {
    let e = symbol_exponents(&res.word, &res.m);
    let t = LaurentElem::t_pow(ctx.p(), 1);
    let mut acc = 0i64;
    for (k, w) in res.w.iter().enumerate() {
        let uk = &LaurentElem::t_pow(ctx.p(), res.m[k] as i64) * w;
        acc += e[k] * hilbert(&uk, &t, ctx)? as i64;
    }
    Ok(acc.rem_euclid(ctx.n() as i64) as u32)
}

/// `prod_alpha (q^{-<rho,alpha^vee>} x_alpha)^{m_alpha}`.
pub fn f_monomial(word: &ReducedWord, m: &[u32], n: u32) -> XPolynomial {
    let r = word.rank();
    let mut e = vec![0u32; r];
    let mut qpow = 0i64;
    for (&mi, root) in m.iter().zip(word.root_order()) {
        qpow -= root.rho_pairing() * mi as i64;
        for (slot, h) in e.iter_mut().zip(root.coroot(r)) {
            *slot += h * mi;
        }
    }
    XPolynomial::monomial(e, CoefElem::q_pow(n, qpow))
}

/// `f(u)` at `q = p` and the given simple-root parameters.
pub fn f_value(res: &IwasawaResult, ctx: &GaussNumeric, x_values: &[Complex64]) -> Result<Complex64> {
    let zeta = ctx.root_of_unity(f_zeta(res, ctx)? as i64);
    let mono = f_monomial(&res.word, &res.m, ctx.n());
    Ok(zeta * mono.eval_with(Complex64::new(ctx.p() as f64, 0.0), ctx.token_values(), x_values))
}

/// `prod_i psi(t^{lambda_i} u_{i+1,i})`.
pub fn psi_lambda(u: &Mat, lambda: &[i64], ctx: &GaussNumeric) -> Complex64 {
    let p = ctx.p();
    lambda
        .iter()
        .enumerate()
        .map(|(i, &l)| psi(&(&LaurentElem::t_pow(p, l) * u.get(i + 2, i + 1)), ctx))
        .product()
}

/// `prod_{(i,j)} Psi^{i,j}` from the decomposition along the Gelfand-Tsetlin word.
///
/// Factors are labelled in the mirrored frame `(i,j) -> (r+2-j, r+2-i)`,
/// with `lambda` read in reverse; terms off the simple roots enter with a
/// minus sign.
pub fn psi_product_formula(res: &IwasawaResult, lambda: &[i64], ctx: &GaussNumeric) -> Result<Complex64> {
    let p = ctx.p();
    let r = res.word.rank();
    if lambda.len() != r {
        return Err(Error::InvalidArgument(format!("lambda has {} entries, rank is {r}", lambda.len())));
    }
    let idx = |i: usize, j: usize| -> Option<usize> {
        if i < j && j <= r + 1 {
            res.word.position_of(Root::new(r + 2 - j, r + 2 - i))
        } else {
            None
        }
    };
    let w = |i: usize, j: usize| idx(i, j).map_or(LaurentElem::one(p), |k| res.w[k].clone());
    let mut out = Complex64::new(1.0, 0.0);
    for i in 1..=r {
        for j in i + 1..=r + 1 {
            let active = j == i + 1 || idx(i + 1, j).map_or(false, |k| !res.y[k].is_integral());
            if !active {
                continue;
            }
            let pos = idx(i, j).ok_or_else(|| Error::InvalidWord("word does not contain every positive root".into()))?;
            let mut arg = &res.y[pos] * &LaurentElem::t_pow(p, lambda[r - i]);
            for k in j + 1..=r + 1 {
                arg = &arg * &w(i, k).div(&w(i + 1, k))?;
            }
            if j > i + 1 {
                arg = -&arg;
            }
            out *= psi(&arg, ctx);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::gt_word;

    fn lp(p: u64, low: i64, c: &[u64]) -> LaurentElem {
        LaurentElem::laurent_poly(p, low, c)
    }

    #[test]
    fn sl2_decomposition() {
        let p = 5;
        let word = gt_word(1);
        let x = lp(p, -2, &[3, 1]);
        let u = from_coordinates(p, &word, &[x.clone()]).unwrap();
        let res = iwasawa(&u, &word).unwrap();
        assert_eq!(res.m, vec![2]);
        assert_eq!(res.w[0], x);
        assert!(res.verify(&u).unwrap());
        let res = iwasawa(&from_coordinates(p, &word, &[lp(p, 0, &[2])]).unwrap(), &word).unwrap();
        assert_eq!(res.m, vec![0]);
        assert_eq!(res.p1, Mat::identity(p, 2));
    }

    #[test]
    fn symbols() {
        let ctx = GaussNumeric::new(5, 2).unwrap();
        let t = LaurentElem::t_pow(5, 1);
        assert_eq!(hilbert(&t, &t, &ctx).unwrap(), 0);
        let u = LaurentElem::constant(5, 2);
        assert_eq!(hilbert(&u, &LaurentElem::constant(5, 3), &ctx).unwrap(), 0);
        assert_eq!(hilbert(&u, &t, &ctx).unwrap(), 1);
        assert!((psi(&LaurentElem::t_pow(5, -1), &ctx) - Complex64::new(1.0, 0.0)).norm() > 0.1);
        assert!((psi(&u, &ctx) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn sl3_table_rows() {
        let p = 5;
        let word = ReducedWord::new(2, vec![2, 1, 2]).unwrap();
        let mk = |x: LaurentElem, y: LaurentElem, z: LaurentElem| {
            let mut u = Mat::identity(p, 3);
            u.set(2, 1, x);
            u.set(3, 1, y);
            u.set(3, 2, z);
            u
        };
        let zero = LaurentElem::zero(p);
        let u = mk(lp(p, 0, &[1]), lp(p, 1, &[1]), zero.clone());
        assert_eq!(classify_cell_sl3(&u).unwrap(), [0, 0, 0]);
        let u = mk(zero.clone(), zero.clone(), lp(p, -1, &[1]));
        assert_eq!(classify_cell_sl3(&u).unwrap(), [0, 0, 1]);
        assert_eq!(iwasawa(&u, &word).unwrap().m, vec![0, 0, 1]);
        let u = mk(lp(p, -1, &[1]), zero.clone(), zero);
        assert_eq!(classify_cell_sl3(&u).unwrap(), [1, 0, 0]);
        assert_eq!(iwasawa(&u, &word).unwrap().m, vec![1, 0, 0]);
    }
}

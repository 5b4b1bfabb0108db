//! The crystal `B(lambda + rho)` for the Gelfand-Tsetlin word, its decorations
//! and weights, the crystal-sum Whittaker function, cell volumes and the two
//! sides of the Gindikin-Karpelevich identities.

use serde::Serialize;

use crate::algebra::{gauss_token, gk_factor, CoefElem, XPolynomial};
use crate::error::{Error, Result};
use crate::roots::{gt_word, inversion_set, ReducedWord, Root, RootSystemA};

/// Constant attached to an uncircled root, and the matching Gauss-sum powers
/// on the pattern side.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub enum Normalization {
    /// `q^-1 g(r,s)`; this is what the cell integral with `vol(O) = 1` produces.
    #[default]
    Classical,
    /// `(q-1) q^-2 g(r,s)` together with pattern weights lacking `q^(e-1)`.
    Printed,
}

/// Member of `B(lambda + rho)`; entries are indexed by the positive roots in
/// lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct DecoratedTuple {
    pub m: Vec<u32>,
    pub circled: Vec<bool>,
    pub boxed: Vec<bool>,
    pub r_vals: Vec<i64>,
    pub s_vals: Vec<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BzlEnumeration {
    pub tuples: Vec<DecoratedTuple>,
    pub non_dominant: bool,
}

/// Lexicographic index of `(i,j)`, 1-based, rank `r`.
fn lex_index(r: usize, i: usize, j: usize) -> usize {
    (1..i).map(|k| r + 1 - k).sum::<usize>() + (j - i - 1)
}

struct Layout {
    r: usize,
}

impl Layout {
    fn get(&self, m: &[u32], i: usize, j: usize) -> i64 {
        if i > self.r || j > self.r + 1 || j <= i {
            0
        } else {
            m[lex_index(self.r, i, j)] as i64
        }
    }

    /// `sum_{k=j}^{r+1} m_{i,k}`.
    fn tail(&self, m: &[u32], i: usize, j: usize) -> i64 {
        (j.max(i + 1)..=self.r + 1).map(|k| self.get(m, i, k)).sum()
    }

    /// Right side of the membership inequality minus `lambda_i + 1`.
    fn bound(&self, m: &[u32], i: usize, j: usize) -> i64 {
        if i == self.r {
            0
        } else {
            self.tail(m, i + 1, j + 1)
        }
    }
}

fn check_lambda(lambda: &[i64], rs: &RootSystemA) -> Result<()> {
    if lambda.len() != rs.rank() {
        return Err(Error::InvalidArgument(format!("lambda has {} entries, rank is {}", lambda.len(), rs.rank())));
    }
    Ok(())
}

/// Whether `m` satisfies every membership inequality for `lambda`.
pub fn in_crystal(lambda: &[i64], m: &[u32], r: usize) -> bool {
    let lay = Layout { r };
    (1..=r).all(|i| (i + 1..=r + 1).all(|j| lay.tail(m, i, j) <= lambda[i - 1] + 1 + lay.bound(m, i, j)))
}

fn decorate(lambda: &[i64], m: Vec<u32>, r: usize) -> DecoratedTuple {
    let lay = Layout { r };
    let mut t = DecoratedTuple { m: m.clone(), circled: vec![], boxed: vec![], r_vals: vec![], s_vals: vec![] };
    for i in 1..=r {
        for j in i + 1..=r + 1 {
            let lhs = lay.tail(&m, i, j);
            let rhs = lambda[i - 1] + 1 + lay.bound(&m, i, j);
            t.circled.push(lay.get(&m, i, j) == 0);
            t.boxed.push(lhs == rhs);
            t.r_vals.push((1..=i).map(|k| lay.get(&m, k, j)).sum());
            t.s_vals.push(rhs - 1 - lhs);
        }
    }
    t
}

/// All tuples satisfying the inequalities, in lexicographic order.
pub fn enumerate_bzl(lambda: &[i64], rs: &RootSystemA) -> Result<BzlEnumeration> {
    check_lambda(lambda, rs)?;
    if lambda.iter().any(|&x| x < 0) {
        return Ok(BzlEnumeration { tuples: vec![], non_dominant: true });
    }
    let r = rs.rank();
    let lay = Layout { r };
    let mut out = Vec::new();
    let mut m = vec![0u32; rs.num_positive()];

    // Fill rows from the bottom; within a row fill j = r+1 down to i+1.
    fn rec(lambda: &[i64], lay: &Layout, m: &mut Vec<u32>, i: usize, j: usize, out: &mut Vec<Vec<u32>>) {
        let r = lay.r;
        if i == 0 {
            out.push(m.clone());
            return;
        }
        if j == i {
            rec(lambda, lay, m, i - 1, r + 1, out);
            return;
        }
        let rest = lay.tail(m, i, j + 1);
        let cap = lambda[i - 1] + 1 + lay.bound(m, i, j) - rest;
        let idx = lex_index(r, i, j);
        for v in 0..=cap.max(-1) {
            m[idx] = v as u32;
            rec(lambda, lay, m, i, j - 1, out);
        }
        m[idx] = 0;
    }

    let mut raw = Vec::new();
    rec(lambda, &lay, &mut m, r, r + 1, &mut raw);
    raw.sort();
    for m in raw {
        debug_assert!(in_crystal(lambda, &m, r));
        out.push(decorate(lambda, m, r));
    }
    Ok(BzlEnumeration { tuples: out, non_dominant: false })
}

/// Decorations for an arbitrary tuple (membership not required).
pub fn decorate_tuple(lambda: &[i64], m: &[u32], rs: &RootSystemA) -> Result<DecoratedTuple> {
    check_lambda(lambda, rs)?;
    if m.len() != rs.num_positive() {
        return Err(Error::InvalidArgument(format!("tuple must have {} entries", rs.num_positive())));
    }
    Ok(decorate(lambda, m.to_vec(), rs.rank()))
}

fn uncircled_prefactor(n: u32, norm: Normalization) -> CoefElem {
    match norm {
        Normalization::Classical => CoefElem::q_pow(n, -1),
        Normalization::Printed => &CoefElem::q_pow(n, -1) - &CoefElem::q_pow(n, -2),
    }
}

/// `w(m, alpha)` for the root at lexicographic index `alpha`.
pub fn weight_w(t: &DecoratedTuple, alpha: usize, n: u32, norm: Normalization) -> CoefElem {
    if t.circled[alpha] {
        if t.boxed[alpha] {
            CoefElem::zero(n)
        } else {
            CoefElem::one(n)
        }
    } else {
        &uncircled_prefactor(n, norm) * &gauss_token(t.r_vals[alpha], t.s_vals[alpha], n)
    }
}

/// Exponent vector of `prod_alpha x_alpha^{m_alpha}`.
pub fn x_exponents(m: &[u32], rs: &RootSystemA) -> Vec<u32> {
    let r = rs.rank();
    let mut e = vec![0u32; r];
    for (&k, root) in m.iter().zip(rs.positive_roots()) {
        for (slot, h) in e.iter_mut().zip(root.coroot(r)) {
            *slot += h * k;
        }
    }
    e
}

/// `prod_alpha w(m,alpha) x_alpha^{m_alpha}` for one tuple.
pub fn tuple_term(t: &DecoratedTuple, rs: &RootSystemA, n: u32, norm: Normalization) -> XPolynomial {
    let mut c = CoefElem::one(n);
    for alpha in 0..t.m.len() {
        c = &c * &weight_w(t, alpha, n, norm);
        if c.is_zero() {
            break;
        }
    }
    XPolynomial::monomial(x_exponents(&t.m, rs), c)
}

/// `sum over B(lambda + rho)` of the tuple terms; zero for non-dominant `lambda`.
pub fn whittaker_sum(lambda: &[i64], n: u32, rs: &RootSystemA, norm: Normalization) -> Result<XPolynomial> {
    let en = enumerate_bzl(lambda, rs)?;
    let mut out = XPolynomial::zero(rs.rank(), n);
    for t in &en.tuples {
        for (e, c) in tuple_term(t, rs, n, norm).terms() {
            out.add_term(e.clone(), c.clone());
        }
    }
    Ok(out)
}

/// `prod_i q^{<rho, alpha_i^vee> m_i} (1 - [m_i > 0]/q)` along the word's root order.
pub fn cell_volume(word: &ReducedWord, m: &[u32], n: u32) -> Result<CoefElem> {
    if m.len() != word.len() {
        return Err(Error::InvalidArgument(format!("tuple must have {} entries", word.len())));
    }
    let mut v = CoefElem::one(n);
    for (&mi, root) in m.iter().zip(word.root_order()) {
        if mi > 0 {
            let factor = &CoefElem::q_pow(n, root.rho_pairing() * mi as i64)
                - &CoefElem::q_pow(n, root.rho_pairing() * mi as i64 - 1);
            v = &v * &factor;
        }
    }
    Ok(v)
}

/// Value of `f` on a cell: `prod (q^{-<rho,alpha^vee>} x_alpha)^{m_alpha}`.
pub fn f_cell_value(roots: &[Root], m: &[u32], r: usize, n: u32) -> XPolynomial {
    let mut e = vec![0u32; r];
    let mut qpow = 0i64;
    for (&mi, root) in m.iter().zip(roots) {
        qpow -= root.rho_pairing() * mi as i64;
        for (slot, h) in e.iter_mut().zip(root.coroot(r)) {
            *slot += h * mi;
        }
    }
    XPolynomial::monomial(e, CoefElem::q_pow(n, qpow))
}

/// Tuples over `support` (word positions) with `n_alpha | m` and total
/// x-degree at most `d`.
fn divisible_tuples(heights: &[u32], support: &[usize], step: u32, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut m = vec![0u32; heights.len()];
    fn rec(heights: &[u32], support: &[usize], step: u32, budget: u32, k: usize, m: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == support.len() {
            out.push(m.clone());
            return;
        }
        let pos = support[k];
        let mut v = 0;
        while v * heights[pos] <= budget {
            m[pos] = v;
            rec(heights, support, step, budget - v * heights[pos], k + 1, m, out);
            v += step;
        }
        m[pos] = 0;
    }
    rec(heights, support, step, d, 0, &mut m, &mut out);
    out
}

fn gk_sum(word: &ReducedWord, support: &[usize], rs: &RootSystemA, d: u32) -> Result<XPolynomial> {
    let n = rs.n();
    let r = rs.rank();
    let roots = word.root_order();
    let heights: Vec<u32> = roots.iter().map(|a| a.height()).collect();
    let step = support.first().map(|&p| rs.n_alpha(roots[p])).unwrap_or(1);
    let mut out = XPolynomial::zero(r, n);
    for m in divisible_tuples(&heights, support, step, d) {
        let term = f_cell_value(roots, &m, r, n);
        let vol = cell_volume(word, &m, n)?;
        for (e, c) in term.terms() {
            out.add_term(e.clone(), c * &vol);
        }
    }
    Ok(out.truncate(d))
}

/// Sum of `f` over cells with `n_alpha | m_alpha`, truncated at total degree `d`.
pub fn gk_lhs(n: u32, rs: &RootSystemA, d: u32) -> Result<XPolynomial> {
    if n != rs.n() {
        return Err(Error::InvalidArgument("cover degree differs from the root system's".into()));
    }
    let word = gt_word(rs.rank());
    let support: Vec<usize> = (0..word.len()).collect();
    gk_sum(&word, &support, rs, d)
}

fn product_side(roots: &[Root], rs: &RootSystemA, d: u32) -> XPolynomial {
    let mut out = XPolynomial::one(rs.rank(), rs.n());
    for &a in roots {
        out = out.mul_truncated(&gk_factor(a, rs.rank(), rs.n_alpha(a), d, rs.n()), d);
    }
    out
}

/// `prod_alpha (1 - q^-1 x_alpha^{n_alpha}) / (1 - x_alpha^{n_alpha})`, truncated.
pub fn gk_rhs(n: u32, rs: &RootSystemA, d: u32) -> Result<XPolynomial> {
    if n != rs.n() {
        return Err(Error::InvalidArgument("cover degree differs from the root system's".into()));
    }
    Ok(product_side(rs.positive_roots(), rs, d))
}

/// Both sides restricted to the inversion set of the Weyl element given by `w`.
pub fn gkw(w: &[usize], n: u32, rs: &RootSystemA, d: u32) -> Result<(XPolynomial, XPolynomial)> {
    if n != rs.n() {
        return Err(Error::InvalidArgument("cover degree differs from the root system's".into()));
    }
    let phi_w = inversion_set(rs.rank(), w)?;
    let word = gt_word(rs.rank());
    let support: Vec<usize> = phi_w.iter().map(|&a| word.position_of(a).expect("positive root")).collect();
    Ok((gk_sum(&word, &support, rs, d)?, product_side(&phi_w, rs, d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::build_type_a;

    fn q(n: u32, k: i64) -> CoefElem {
        CoefElem::q_pow(n, k)
    }

    #[test]
    fn lex_index_is_lexicographic() {
        let rs = build_type_a(3, 1).unwrap();
        for (k, root) in rs.positive_roots().iter().enumerate() {
            assert_eq!(lex_index(3, root.i, root.j), k);
        }
    }

    #[test]
    fn rank_one_lambda_zero() {
        let rs = build_type_a(1, 1).unwrap();
        let en = enumerate_bzl(&[0], &rs).unwrap();
        assert_eq!(en.tuples.len(), 2);
        let (t0, t1) = (&en.tuples[0], &en.tuples[1]);
        assert_eq!((t0.m[0], t0.circled[0], t0.boxed[0]), (0, true, false));
        assert_eq!((t1.m[0], t1.circled[0], t1.boxed[0]), (1, false, true));
        assert_eq!((t1.r_vals[0], t1.s_vals[0]), (1, -1));
    }

    #[test]
    fn sizes() {
        assert_eq!(enumerate_bzl(&[2], &build_type_a(1, 1).unwrap()).unwrap().tuples.len(), 4);
        assert_eq!(enumerate_bzl(&[0, 0], &build_type_a(2, 1).unwrap()).unwrap().tuples.len(), 8);
        let en = enumerate_bzl(&[-1, 0], &build_type_a(2, 1).unwrap()).unwrap();
        assert!(en.non_dominant && en.tuples.is_empty());
    }

    #[test]
    fn weight_examples() {
        let rs = build_type_a(1, 1).unwrap();
        let en = enumerate_bzl(&[0], &rs).unwrap();
        assert_eq!(weight_w(&en.tuples[0], 0, 1, Normalization::Classical), CoefElem::one(1));
        assert_eq!(weight_w(&en.tuples[1], 0, 1, Normalization::Printed), &q(1, -2) - &q(1, -1));
        assert_eq!(weight_w(&en.tuples[1], 0, 1, Normalization::Classical), -&q(1, -1));
        let both = decorate_tuple(&[-1], &[0], &rs).unwrap();
        assert!(both.circled[0] && both.boxed[0]);
        assert!(weight_w(&both, 0, 1, Normalization::Classical).is_zero());
    }

    #[test]
    fn whittaker_rank_one() {
        let rs = build_type_a(1, 1).unwrap();
        let mut expect = XPolynomial::one(1, 1);
        expect.add_term(vec![1], &q(1, -2) - &q(1, -1));
        assert_eq!(whittaker_sum(&[0], 1, &rs, Normalization::Printed).unwrap(), expect);
        let rs2 = build_type_a(1, 2).unwrap();
        let mut expect = XPolynomial::one(1, 2);
        expect.add_term(vec![1], &(&q(2, -1) - &q(2, -2)) * &CoefElem::token(2, 1));
        assert_eq!(whittaker_sum(&[0], 2, &rs2, Normalization::Printed).unwrap(), expect);
        assert!(whittaker_sum(&[-1], 1, &rs, Normalization::Classical).unwrap().is_zero());
    }

    #[test]
    fn volumes() {
        let w1 = gt_word(1);
        assert_eq!(cell_volume(&w1, &[0], 1).unwrap(), CoefElem::one(1));
        assert_eq!(cell_volume(&w1, &[1], 1).unwrap(), &q(1, 1) - &CoefElem::one(1));
        // Roots of (1,2,1) at positions 1 and 3 are (2,3) and (1,2), both of height 1.
        let one_minus = &CoefElem::one(1) - &q(1, -1);
        let expect = &(&q(1, 2) * &one_minus) * &one_minus;
        assert_eq!(cell_volume(&gt_word(2), &[1, 0, 1], 1).unwrap(), expect);
    }

    #[test]
    fn gk_small() {
        let rs = build_type_a(1, 2).unwrap();
        let lhs = gk_lhs(2, &rs, 3).unwrap();
        let mut expect = XPolynomial::one(1, 2);
        expect.add_term(vec![2], &CoefElem::one(2) - &q(2, -1));
        assert_eq!(lhs, expect);
        assert_eq!(gk_rhs(2, &rs, 3).unwrap(), expect);
        let rs = build_type_a(2, 1).unwrap();
        let (s, p) = gkw(&[], 1, &rs, 4).unwrap();
        assert_eq!((s, p), (XPolynomial::one(2, 1), XPolynomial::one(2, 1)));
    }
}

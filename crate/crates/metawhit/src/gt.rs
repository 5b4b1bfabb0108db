//! Gelfand-Tsetlin patterns, their Gauss-sum weights, the p-part generating
//! polynomial, and the comparison with the crystal sum.

use num_complex::Complex64;
use serde::Serialize;

use crate::algebra::{gauss_token, CoefElem, CoefTerm, GaussNumeric, XPolynomial, XTerm};
use crate::crystal::{whittaker_sum, Normalization};
use crate::error::{Error, Result};
use crate::roots::{build_type_a, RootSystemA};

/// Rows `0..=r`; row `i` holds `a_{i,i}, .., a_{i,r}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GtPattern {
    rows: Vec<Vec<i64>>,
}

impl GtPattern {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let r = rows.len().checked_sub(1).ok_or_else(|| Error::InvalidArgument("empty pattern".into()))?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != r + 1 - i {
                return Err(Error::InvalidArgument(format!("row {i} must have {} entries", r + 1 - i)));
            }
        }
        let p = GtPattern { rows };
        for i in 0..r {
            for j in i..r {
                if !(p.a(i, j) >= p.a(i + 1, j + 1) && p.a(i + 1, j + 1) >= p.a(i, j + 1)) {
                    return Err(Error::InvalidArgument(format!("interlacing fails at ({i},{j})")));
                }
            }
        }
        if p.rows.iter().flatten().any(|&x| x < 0) {
            return Err(Error::InvalidArgument("pattern entries must be natural".into()));
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.rows.len() - 1
    }

    /// Entry `a_{i,j}` with `0 <= i <= j <= r`.
    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.rows[i][j - i]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// `e_{i,j} = sum_{k=j}^r (a_{i,k} - a_{i-1,k})`.
    pub fn e(&self, i: usize, j: usize) -> i64 {
        (j..=self.rank()).map(|k| self.a(i, k) - self.a(i - 1, k)).sum()
    }

    /// `k_i = sum_{j=i}^r (a_{i,j} - a_{0,j})`.
    pub fn k(&self, i: usize) -> i64 {
        (i..=self.rank()).map(|j| self.a(i, j) - self.a(0, j)).sum()
    }
}

/// Top row `a_{0,j} = sum_{k>j} (lambda_k + 1)`.
pub fn top_row(lambda: &[i64]) -> Vec<i64> {
    let r = lambda.len();
    (0..=r).map(|j| lambda[j..].iter().map(|l| l + 1).sum()).collect()
}

/// All patterns with the given top row, in lexicographic order of rows.
pub fn enumerate_gt(top: &[i64]) -> Result<Vec<GtPattern>> {
    if top.is_empty() {
        return Err(Error::InvalidArgument("top row is empty".into()));
    }
    if top.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidArgument("top row must be weakly decreasing".into()));
    }
    if top.iter().any(|&x| x < 0) {
        return Err(Error::InvalidArgument("top row must be natural".into()));
    }
    fn rows_below(prev: &[i64]) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for w in prev.windows(2) {
            out = out
                .into_iter()
                .flat_map(|row| {
                    (w[1]..=w[0]).map(move |v| {
                        let mut row = row.clone();
                        row.push(v);
                        row
                    })
                })
                .collect();
        }
        out
    }
    fn rec(rows: &mut Vec<Vec<i64>>, out: &mut Vec<GtPattern>) {
        let last = rows.last().expect("nonempty").clone();
        if last.len() == 1 {
            out.push(GtPattern { rows: rows.clone() });
            return;
        }
        for row in rows_below(&last) {
            rows.push(row);
            rec(rows, out);
            rows.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut vec![top.to_vec()], &mut out);
    out.sort();
    Ok(out)
}

/// `gamma(a_{i,j})` for one entry.
pub fn gamma(t: &GtPattern, i: usize, j: usize, n: u32, norm: Normalization) -> CoefElem {
    let e = t.e(i, j);
    let (l, c, r) = (t.a(i - 1, j - 1), t.a(i, j), t.a(i - 1, j));
    let shift = match norm {
        Normalization::Classical => CoefElem::q_pow(n, e - 1),
        Normalization::Printed => CoefElem::one(n),
    };
    if l > c && c == r {
        CoefElem::q_pow(n, e)
    } else if l > c && c > r {
        &shift * &gauss_token(e, 0, n)
    } else if l == c && c > r {
        &shift * &gauss_token(e, -1, n)
    } else {
        CoefElem::zero(n)
    }
}

/// `G(T) = prod_{1 <= i <= j <= r} gamma(a_{i,j})`.
pub fn gt_weight(t: &GtPattern, n: u32, norm: Normalization) -> CoefElem {
    let mut g = CoefElem::one(n);
    for i in 1..=t.rank() {
        for j in i..=t.rank() {
            g = &g * &gamma(t, i, j, n, norm);
            if g.is_zero() {
                return g;
            }
        }
    }
    g
}

/// `sum_T G(T) prod x_i^{k_i(T)}` over patterns with top row from `lambda + rho`.
pub fn gt_ppart(lambda: &[i64], n: u32, rs: &RootSystemA, norm: Normalization) -> Result<XPolynomial> {
    if lambda.len() != rs.rank() {
        return Err(Error::InvalidArgument(format!("lambda has {} entries, rank is {}", lambda.len(), rs.rank())));
    }
    if lambda.iter().any(|&l| l < 0) {
        return Err(Error::InvalidArgument("lambda must be dominant".into()));
    }
    let mut out = XPolynomial::zero(rs.rank(), n);
    for t in enumerate_gt(&top_row(lambda))? {
        let g = gt_weight(&t, n, norm);
        if g.is_zero() {
            continue;
        }
        let ks: Vec<u32> = (1..=rs.rank()).map(|i| t.k(i) as u32).collect();
        out.add_term(ks, g);
    }
    Ok(out)
}

/// Power `k` with `crystal(x) = gt(q^k x)` for every rank-one `lambda <= 2` at
/// `n = 1`, if any `|k| <= 4` works.
pub fn rank_one_calibration(norm: Normalization) -> Result<Option<i64>> {
    let rs = build_type_a(1, 1)?;
    let pairs: Vec<(XPolynomial, XPolynomial)> = (0..=2)
        .map(|l| Ok((whittaker_sum(&[l], 1, &rs, norm)?, gt_ppart(&[l], 1, &rs, norm)?)))
        .collect::<Result<_>>()?;
    Ok((-4..=4).find(|&k| pairs.iter().all(|(c, g)| *c == g.rescale_q(k))))
}

#[derive(Debug, Clone, Serialize)]
pub struct MonomialRow {
    pub exponents: Vec<u32>,
    pub crystal: Vec<CoefTerm>,
    pub gt_calibrated: Vec<CoefTerm>,
    pub equal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct NumericCheck {
    pub p: u64,
    pub points: usize,
    pub max_abs_diff: f64,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub normalization: Normalization,
    /// `x_i(gt) = q^k x_i(crystal)`; absent when no rank-one calibration exists.
    pub calibration_q_power: Option<i64>,
    pub crystal: Vec<XTerm>,
    pub gt: Vec<XTerm>,
    pub table: Vec<MonomialRow>,
    pub numeric: Option<NumericCheck>,
    pub verdict: bool,
}

fn sample_points(r: usize) -> Vec<Vec<Complex64>> {
    (0..4)
        .map(|s| {
            (0..r)
                .map(|i| {
                    let th = 0.7 + 1.3 * s as f64 + 0.45 * i as f64;
                    Complex64::from_polar(0.3 + 0.11 * (s + i) as f64, th)
                })
                .collect()
        })
        .collect()
}

/// Compare the crystal sum with the calibrated pattern sum; numeric check at
/// `p` when `numeric_p` is given and admissible for `n`.
pub fn compare_crystal_gt(
    lambda: &[i64],
    n: u32,
    rs: &RootSystemA,
    norm: Normalization,
    numeric_p: Option<u64>,
) -> Result<ComparisonReport> {
    let crystal = whittaker_sum(lambda, n, rs, norm)?;
    let gt = gt_ppart(lambda, n, rs, norm)?;
    let cal = rank_one_calibration(norm)?;
    let gt_cal = cal.map(|k| gt.rescale_q(k));

    let mut exps: Vec<Vec<u32>> = crystal.terms().map(|(e, _)| e.clone()).collect();
    exps.extend(gt.terms().map(|(e, _)| e.clone()));
    exps.sort();
    exps.dedup();
    let table: Vec<MonomialRow> = exps
        .into_iter()
        .map(|e| {
            let c = crystal.coefficient(&e);
            let g = gt_cal.as_ref().map(|p| p.coefficient(&e)).unwrap_or_else(|| gt.coefficient(&e));
            MonomialRow { equal: gt_cal.is_some() && c == g, crystal: c.to_terms(), gt_calibrated: g.to_terms(), exponents: e }
        })
        .collect();
    let symbolic = gt_cal.as_ref().map_or(false, |g| *g == crystal);

    let numeric = match (numeric_p, &gt_cal) {
        (Some(p), Some(g)) if (p - 1) % (2 * n as u64) == 0 => {
            let ctx = GaussNumeric::new(p, n)?;
            let qv = Complex64::new(p as f64, 0.0);
            let pts = sample_points(rs.rank());
            let diff = pts
                .iter()
                .map(|x| (crystal.eval_with(qv, ctx.token_values(), x) - g.eval_with(qv, ctx.token_values(), x)).norm())
                .fold(0.0, f64::max);
            Some(NumericCheck { p, points: pts.len(), max_abs_diff: diff, ok: diff < 1e-9 })
        }
        _ => None,
    };
    let verdict = symbolic && numeric.as_ref().map_or(true, |c| c.ok);
    Ok(ComparisonReport {
        normalization: norm,
        calibration_q_power: cal,
        crystal: crystal.to_terms(),
        gt: gt.to_terms(),
        table,
        numeric,
        verdict,
    })
}

//! Small square matrices over `F_p(t)` and the one-parameter subgroups.

use std::ops::Mul;

use super::field::LaurentElem;
use crate::error::Result;
use crate::roots::Root;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    p: u64,
    a: Vec<Vec<LaurentElem>>,
}

impl Mat {
    pub fn identity(p: u64, n: usize) -> Self {
        let a = (0..n)
            .map(|i| (0..n).map(|j| if i == j { LaurentElem::one(p) } else { LaurentElem::zero(p) }).collect())
            .collect();
        Mat { p, a }
    }

    pub fn size(&self) -> usize {
        self.a.len()
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> &LaurentElem {
        &self.a[i - 1][j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentElem) {
        self.a[i - 1][j - 1] = v;
    }

    /// `I + x E_{j,i}` for the negative root `-(i,j)`.
    pub fn e_neg(p: u64, n: usize, alpha: Root, x: &LaurentElem) -> Self {
        let mut m = Self::identity(p, n);
        m.set(alpha.j, alpha.i, x.clone());
        m
    }

    /// `I + x E_{i,j}` for the positive root `(i,j)`.
    pub fn e_pos(p: u64, n: usize, alpha: Root, x: &LaurentElem) -> Self {
        let mut m = Self::identity(p, n);
        m.set(alpha.i, alpha.j, x.clone());
        m
    }

    /// `h_alpha(s)`: `s` at position `i`, `1/s` at `j`.
    pub fn h(p: u64, n: usize, alpha: Root, s: &LaurentElem) -> Result<Self> {
        let mut m = Self::identity(p, n);
        m.set(alpha.i, alpha.i, s.clone());
        m.set(alpha.j, alpha.j, s.inv()?);
        Ok(m)
    }

    /// Submatrix on 1-based row and column lists.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Mat {
        Mat { p: self.p, a: rows.iter().map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect()).collect() }
    }

    pub fn det(&self) -> LaurentElem {
        let n = self.size();
        if n == 0 {
            return LaurentElem::one(self.p);
        }
        if n == 1 {
            return self.a[0][0].clone();
        }
        let mut acc = LaurentElem::zero(self.p);
        for j in 1..=n {
            let entry = self.get(1, j);
            if entry.is_zero() {
                continue;
            }
            let rest: Vec<usize> = (1..=n).filter(|&c| c != j).collect();
            let term = entry * &self.minor(&(2..=n).collect::<Vec<_>>(), &rest).det();
            acc = if j % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        acc
    }

    pub fn inverse(&self) -> Result<Mat> {
        let n = self.size();
        let d_inv = self.det().inv()?;
        let mut out = Mat::identity(self.p, n);
        for i in 1..=n {
            for j in 1..=n {
                let rows: Vec<usize> = (1..=n).filter(|&r| r != j).collect();
                let cols: Vec<usize> = (1..=n).filter(|&c| c != i).collect();
                let c = &self.minor(&rows, &cols).det() * &d_inv;
                out.set(i, j, if (i + j) % 2 == 0 { c } else { -&c });
            }
        }
        Ok(out)
    }

    pub fn is_integral(&self) -> bool {
        self.a.iter().flatten().all(|x| x.is_integral())
    }

    pub fn diagonal(&self) -> Vec<LaurentElem> {
        (1..=self.size()).map(|i| self.get(i, i).clone()).collect()
    }

    /// Doolittle factors `L` (unit lower), `D`, `U` (unit upper), if all
    /// leading minors are nonzero.
    pub fn ldu(&self) -> Result<(Mat, Vec<LaurentElem>, Mat)> {
        let n = self.size();
        let mut l = Mat::identity(self.p, n);
        let mut u = self.clone();
        for k in 1..=n {
            let piv_inv = u.get(k, k).inv()?;
            for i in k + 1..=n {
                let f = u.get(i, k) * &piv_inv;
                if f.is_zero() {
                    continue;
                }
                for j in k..=n {
                    let v = u.get(i, j) - &(&f * u.get(k, j));
                    u.set(i, j, v);
                }
                l.set(i, k, f);
            }
        }
        let d = u.diagonal();
        for i in 1..=n {
            let di = d[i - 1].inv()?;
            for j in i..=n {
                let v = u.get(i, j) * &di;
                u.set(i, j, v);
            }
        }
        Ok((l, d, u))
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, o: &Mat) -> Mat {
        let n = self.size();
        let mut out = Mat::identity(self.p, n);
        for i in 1..=n {
            for j in 1..=n {
                let mut acc = LaurentElem::zero(self.p);
                for k in 1..=n {
                    let (a, b) = (self.get(i, k), o.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_ldu() {
        let p = 5;
        let x = LaurentElem::laurent_poly(p, -1, &[2, 1]);
        let y = LaurentElem::t_pow(p, -2);
        let a = Root::new(1, 2);
        let b = Root::new(2, 3);
        let m = &(&Mat::e_neg(p, 3, a, &x) * &Mat::e_pos(p, 3, b, &y)) * &Mat::h(p, 3, b, &x).unwrap();
        assert_eq!(m.det(), LaurentElem::one(p));
        assert_eq!(&m * &m.inverse().unwrap(), Mat::identity(p, 3));
        let (l, d, u) = m.ldu().unwrap();
        let mut dm = Mat::identity(p, 3);
        for (i, v) in d.into_iter().enumerate() {
            dm.set(i + 1, i + 1, v);
        }
        assert_eq!(&(&l * &dm) * &u, m);
    }
}

//! Exact arithmetic in `F_p(t)` viewed inside `F_p((t))`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Polynomial over `F_p`, coefficients from degree 0 upward, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    c: Vec<u64>,
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::algebra::pow_mod(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        FpPoly { p, c }
    }

    pub fn constant(p: u64, a: u64) -> Self {
        Self::new(p, vec![a])
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> u64 {
        self.c.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    /// Largest `k` with `t^k` dividing `self`.
    fn t_order(&self) -> usize {
        self.c.iter().position(|&x| x != 0).unwrap_or(0)
    }

    fn shift_down(&self, k: usize) -> Self {
        FpPoly { p: self.p, c: self.c[k..].to_vec() }
    }

    fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.c);
        FpPoly { p: self.p, c }
    }

    fn scale(&self, a: u64) -> Self {
        Self::new(self.p, self.c.iter().map(|x| x * (a % self.p)).collect())
    }

    fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new(self.p, (0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return FpPoly { p: self.p, c: vec![] };
        }
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b) % self.p;
            }
        }
        Self::new(self.p, c)
    }

    fn divrem(&self, o: &Self) -> (Self, Self) {
        let p = self.p;
        let d = o.degree().expect("division by zero polynomial");
        let lead_inv = inv_mod(o.c[d], p);
        let mut r = self.c.clone();
        let mut q = vec![0u64; self.c.len().saturating_sub(d).max(1)];
        while r.len() > d && !r.is_empty() {
            let k = r.len() - 1;
            let f = r[k] * lead_inv % p;
            if f != 0 {
                q[k - d] = f;
                for (i, &b) in o.c.iter().enumerate() {
                    r[k - d + i] = (r[k - d + i] + p - f * b % p) % p;
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        (Self::new(p, q), Self::new(p, r))
    }

    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a
    }

    pub fn eval(&self, x: u64) -> u64 {
        self.c.iter().rev().fold(0, |acc, &a| (acc * x + a) % self.p)
    }
}

/// `t^val * num / den` with `num(0) != 0`, `den(0) = 1`, coprime; zero has empty `num`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentElem {
    p: u64,
    val: i64,
    num: FpPoly,
    den: FpPoly,
}

impl LaurentElem {
    pub fn zero(p: u64) -> Self {
        LaurentElem { p, val: 0, num: FpPoly::new(p, vec![]), den: FpPoly::constant(p, 1) }
    }

    pub fn one(p: u64) -> Self {
        Self::constant(p, 1)
    }

    pub fn constant(p: u64, a: i64) -> Self {
        Self::from_parts(p, 0, FpPoly::constant(p, a.rem_euclid(p as i64) as u64), FpPoly::constant(p, 1))
    }

    /// `t^k`.
    pub fn t_pow(p: u64, k: i64) -> Self {
        LaurentElem { p, val: k, num: FpPoly::constant(p, 1), den: FpPoly::constant(p, 1) }
    }

    /// `sum_k coeffs[k] t^{low + k}`.
    pub fn laurent_poly(p: u64, low: i64, coeffs: &[u64]) -> Self {
        Self::from_parts(p, low, FpPoly::new(p, coeffs.to_vec()), FpPoly::constant(p, 1))
    }

    /// `t^val * num / den` for arbitrary polynomials with `den != 0`.
    pub fn from_parts(p: u64, val: i64, num: FpPoly, den: FpPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero(p);
        }
        let (kn, kd) = (num.t_order(), den.t_order());
        let (mut num, mut den) = (num.shift_down(kn), den.shift_down(kd));
        let g = num.gcd(&den);
        if g.degree() != Some(0) {
            num = num.divrem(&g).0;
            den = den.divrem(&g).0;
        }
        let c = inv_mod(den.coeff(0), p);
        LaurentElem { p, val: val + kn as i64 - kd as i64, num: num.scale(c), den: den.scale(c) }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// `None` stands for the valuation of zero.
    pub fn valuation(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.val)
        }
    }

    /// `|x| <= 1`.
    pub fn is_integral(&self) -> bool {
        self.valuation().map_or(true, |v| v >= 0)
    }

    /// Leading coefficient `x t^{-v(x)} mod t`.
    pub fn residue(&self) -> u64 {
        self.num.coeff(0)
    }

    /// Coefficient of `t^k` in the Laurent expansion.
    pub fn coeff(&self, k: i64) -> u64 {
        if self.is_zero() || k < self.val {
            return 0;
        }
        let idx = (k - self.val) as usize;
        let p = self.p;
        // Power series of num/den with den(0) = 1.
        let mut s = vec![0u64; idx + 1];
        for i in 0..=idx {
            let mut acc = self.num.coeff(i);
            for j in 1..=i.min(self.den.degree().unwrap_or(0)) {
                acc = (acc + p - self.den.coeff(j) * s[i - j] % p) % p;
            }
            s[i] = acc;
        }
        s[idx]
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_parts(self.p, -self.val, self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one(self.p);
        for _ in 0..k.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    /// Polar part `sum_{k<0} a_k t^k`.
    pub fn polar_part(&self) -> Self {
        if self.is_integral() {
            return Self::zero(self.p);
        }
        let low = self.val;
        let cs: Vec<u64> = (low..0).map(|k| self.coeff(k)).collect();
        Self::laurent_poly(self.p, low, &cs)
    }
}

impl fmt::Debug for LaurentElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t^{}*{:?}/{:?}", self.val, self.num.c, self.den.c)
    }
}

impl Add for &LaurentElem {
    type Output = LaurentElem;
    fn add(self, o: &LaurentElem) -> LaurentElem {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let v = self.val.min(o.val);
        let a = self.num.mul(&o.den).shift_up((self.val - v) as usize);
        let b = o.num.mul(&self.den).shift_up((o.val - v) as usize);
        LaurentElem::from_parts(self.p, v, a.add(&b), self.den.mul(&o.den))
    }
}

impl Neg for &LaurentElem {
    type Output = LaurentElem;
    fn neg(self) -> LaurentElem {
        LaurentElem { p: self.p, val: self.val, num: self.num.scale(self.p - 1), den: self.den.clone() }
    }
}

impl Sub for &LaurentElem {
    type Output = LaurentElem;
    fn sub(self, o: &LaurentElem) -> LaurentElem {
        self + &(-o)
    }
}

impl Mul for &LaurentElem {
    type Output = LaurentElem;
    fn mul(self, o: &LaurentElem) -> LaurentElem {
        if self.is_zero() || o.is_zero() {
            return LaurentElem::zero(self.p);
        }
        LaurentElem::from_parts(self.p, self.val + o.val, self.num.mul(&o.num), self.den.mul(&o.den))
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentElem {
            type Output = LaurentElem;
            fn $m(self, o: LaurentElem) -> LaurentElem { (&self).$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn valuation_examples() {
        let p = 5;
        let x = LaurentElem::from_parts(p, 2, FpPoly::constant(p, 1), FpPoly::new(p, vec![1, 1]));
        assert_eq!(x.valuation(), Some(2));
        assert_eq!(LaurentElem::one(p).valuation(), Some(0));
        assert_eq!(LaurentElem::zero(p).valuation(), None);
    }

    #[test]
    fn series_coefficients() {
        let p = 5;
        // 1/(1+t) = 1 - t + t^2 - ...
        let x = LaurentElem::from_parts(p, 0, FpPoly::constant(p, 1), FpPoly::new(p, vec![1, 1]));
        assert_eq!((0..4).map(|k| x.coeff(k)).collect::<Vec<_>>(), vec![1, 4, 1, 4]);
        let y = &LaurentElem::t_pow(p, -1) * &x;
        assert_eq!(y.coeff(-1), 1);
        assert_eq!(y.polar_part(), LaurentElem::t_pow(p, -1));
    }

    #[test]
    fn field_laws() {
        let p = 7;
        let a = LaurentElem::laurent_poly(p, -2, &[3, 0, 1, 5]);
        let b = LaurentElem::laurent_poly(p, 1, &[2, 6]);
        let ab = &a * &b;
        assert_eq!(ab.valuation(), Some(-1));
        assert_eq!(ab.div(&b).unwrap(), a);
        assert_eq!(&(&a + &b) - &b, a);
        assert!((&a - &a).is_zero());
        assert_eq!(&a * &a.inv().unwrap(), LaurentElem::one(p));
        assert!(LaurentElem::zero(p).inv().is_err());
    }
}

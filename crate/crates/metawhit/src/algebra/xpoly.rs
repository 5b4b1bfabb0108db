use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;
use serde::Serialize;

use super::coef::{CoefElem, CoefTerm};

/// Polynomial in `x_1..x_r` with coefficients in the ring of degree `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XPolynomial {
    r: usize,
    n: u32,
    terms: BTreeMap<Vec<u32>, CoefElem>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct XTerm {
    pub exponents: Vec<u32>,
    pub coefficient: Vec<CoefTerm>,
}

impl XPolynomial {
    pub fn zero(r: usize, n: u32) -> Self {
        XPolynomial { r, n, terms: BTreeMap::new() }
    }

    pub fn one(r: usize, n: u32) -> Self {
        Self::monomial(vec![0; r], CoefElem::one(n))
    }

    pub fn monomial(exponents: Vec<u32>, c: CoefElem) -> Self {
        let mut p = Self::zero(exponents.len(), c.n());
        p.add_term(exponents, c);
        p
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &CoefElem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> CoefElem {
        self.terms.get(exponents).cloned().unwrap_or_else(|| CoefElem::zero(self.n))
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, c: CoefElem) {
        assert_eq!(exponents.len(), self.r, "exponent vector of wrong rank");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponents) {
            Some(slot) => {
                let sum = &*slot + &c;
                if sum.is_zero() {
                    self.terms.remove(&exponents);
                } else {
                    *slot = sum;
                }
            }
            None => {
                self.terms.insert(exponents, c);
            }
        }
    }

    pub fn total_degree(exponents: &[u32]) -> u32 {
        exponents.iter().sum()
    }

    /// Product with every term of total degree above `d` dropped.
    pub fn mul_truncated(&self, other: &XPolynomial, d: u32) -> XPolynomial {
        let mut out = XPolynomial::zero(self.r, self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                if Self::total_degree(&e) <= d {
                    out.add_term(e, c1 * c2);
                }
            }
        }
        out
    }

    pub fn truncate(&self, d: u32) -> XPolynomial {
        XPolynomial {
            r: self.r,
            n: self.n,
            terms: self.terms.iter().filter(|(e, _)| Self::total_degree(e) <= d).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Substitute `x_i -> q^k x_i` for every variable.
    pub fn rescale_q(&self, k: i64) -> XPolynomial {
        XPolynomial {
            r: self.r,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.shift_q(k * Self::total_degree(e) as i64)))
                .collect(),
        }
    }

    pub fn eval_with(&self, q: Complex64, tokens: &[Complex64], x: &[Complex64]) -> Complex64 {
        assert_eq!(x.len(), self.r, "wrong number of x values");
        self.terms
            .iter()
            .map(|(e, c)| {
                let mono: Complex64 = e.iter().zip(x).map(|(&k, v)| v.powi(k as i32)).product();
                c.eval_with(q, tokens) * mono
            })
            .sum()
    }

    pub fn to_terms(&self) -> Vec<XTerm> {
        self.terms.iter().map(|(e, c)| XTerm { exponents: e.clone(), coefficient: c.to_terms() }).collect()
    }
}

impl Add for &XPolynomial {
    type Output = XPolynomial;
    fn add(self, rhs: &XPolynomial) -> XPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &XPolynomial {
    type Output = XPolynomial;
    fn sub(self, rhs: &XPolynomial) -> XPolynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c);
        }
        out
    }
}

impl Mul for &XPolynomial {
    type Output = XPolynomial;
    fn mul(self, rhs: &XPolynomial) -> XPolynomial {
        self.mul_truncated(rhs, u32::MAX)
    }
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

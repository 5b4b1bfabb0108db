//! The coefficient ring: Laurent polynomials in a formal `q` with adjoined
//! Gauss-sum tokens `g(a,-1)`, `a` a nonzero residue mod `n`.
//!
//! Tokens satisfy `g(a,-1) g(n-a,-1) = q`. This holds whenever the field
//! contains the `2n`-th roots of unity, so that `(-1, t)` is trivial.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// A monomial `q^q * prod_a g(a,-1)^tokens[a-1]`, kept in normal form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoefMono {
    pub q: i64,
    pub tokens: Vec<u32>,
}

impl CoefMono {
    fn unit(n: u32) -> Self {
        CoefMono { q: 0, tokens: vec![0; n.saturating_sub(1) as usize] }
    }

    fn normalize(&mut self, n: u32) {
        for a in 1..n {
            let b = n - a;
            if a < b {
                let k = self.tokens[(a - 1) as usize].min(self.tokens[(b - 1) as usize]);
                self.tokens[(a - 1) as usize] -= k;
                self.tokens[(b - 1) as usize] -= k;
                self.q += k as i64;
            } else if a == b {
                let e = self.tokens[(a - 1) as usize];
                self.q += (e / 2) as i64;
                self.tokens[(a - 1) as usize] = e % 2;
            }
        }
    }

    fn mul(&self, other: &CoefMono, n: u32) -> CoefMono {
        let mut m = CoefMono {
            q: self.q + other.q,
            tokens: self.tokens.iter().zip(&other.tokens).map(|(x, y)| x + y).collect(),
        };
        m.normalize(n);
        m
    }

    pub fn has_tokens(&self) -> bool {
        self.tokens.iter().any(|&e| e > 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoefElem {
    n: u32,
    terms: BTreeMap<CoefMono, BigRational>,
}

/// One serialized term: `rational * q^q_power * prod tokens`.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CoefTerm {
    pub rational: String,
    pub q_power: i64,
    pub tokens: Vec<TokenRef>,
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct TokenRef {
    pub a: u32,
    pub b: i32,
}

impl CoefElem {
    pub fn zero(n: u32) -> Self {
        assert!(n >= 1, "cover degree must be positive");
        CoefElem { n, terms: BTreeMap::new() }
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, 1)
    }

    pub fn from_int(n: u32, c: i64) -> Self {
        Self::from_rational(n, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(n: u32, c: BigRational) -> Self {
        let mut e = Self::zero(n);
        if !c.is_zero() {
            e.terms.insert(CoefMono::unit(n), c);
        }
        e
    }

    /// `c * q^k`.
    pub fn q_pow(n: u32, k: i64) -> Self {
        let mut e = Self::zero(n);
        let mut m = CoefMono::unit(n);
        m.q = k;
        e.terms.insert(m, BigRational::one());
        e
    }

    /// The irreducible token `g(a,-1)`; `a` is taken mod `n`.
    pub fn token(n: u32, a: i64) -> Self {
        let a = a.rem_euclid(n as i64) as u32;
        if a == 0 {
            return Self::from_int(n, -1);
        }
        let mut m = CoefMono::unit(n);
        m.tokens[(a - 1) as usize] = 1;
        let mut e = Self::zero(n);
        e.terms.insert(m, BigRational::one());
        e
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoefMono, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn has_tokens(&self) -> bool {
        self.terms.keys().any(CoefMono::has_tokens)
    }

    fn add_term(&mut self, m: CoefMono, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn check(&self, other: &CoefElem) {
        assert_eq!(self.n, other.n, "mixing coefficient rings of different cover degree");
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        CoefElem { n: self.n, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    /// Multiply by `q^k`.
    pub fn shift_q(&self, k: i64) -> Self {
        CoefElem {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (CoefMono { q: m.q + k, tokens: m.tokens.clone() }, v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// The rational constant if the element has no `q` or token dependence.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.q == 0 && !m.has_tokens()).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Evaluate with `q` and the token values supplied by the caller.
    /// `tokens[a]` is the value of `g(a,-1)` for `1 <= a < n`.
    pub fn eval_with(&self, q: num_complex::Complex64, tokens: &[num_complex::Complex64]) -> num_complex::Complex64 {
        let mut acc = num_complex::Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut v = num_complex::Complex64::new(rat_to_f64(c), 0.0) * q.powi(m.q as i32);
            for (idx, &e) in m.tokens.iter().enumerate() {
                if e > 0 {
                    v *= tokens[idx + 1].powi(e as i32);
                }
            }
            acc += v;
        }
        acc
    }

    pub fn to_terms(&self) -> Vec<CoefTerm> {
        self.terms
            .iter()
            .map(|(m, c)| CoefTerm {
                rational: c.to_string(),
                q_power: m.q,
                tokens: m
                    .tokens
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &e)| std::iter::repeat(TokenRef { a: i as u32 + 1, b: -1 }).take(e as usize))
                    .collect(),
            })
            .collect()
    }
}

pub(crate) fn rat_to_f64(c: &BigRational) -> f64 {
    let n = c.numer().to_f64().unwrap_or(f64::NAN);
    let d = c.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

impl Add for &CoefElem {
    type Output = CoefElem;
    fn add(self, rhs: &CoefElem) -> CoefElem {
        self.check(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &CoefElem {
    type Output = CoefElem;
    fn sub(self, rhs: &CoefElem) -> CoefElem {
        self + &(-rhs)
    }
}

impl Neg for &CoefElem {
    type Output = CoefElem;
    fn neg(self) -> CoefElem {
        CoefElem { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Mul for &CoefElem {
    type Output = CoefElem;
    fn mul(self, rhs: &CoefElem) -> CoefElem {
        self.check(rhs);
        let mut out = CoefElem::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2, self.n), c1 * c2);
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for CoefElem {
            type Output = CoefElem;
            fn $f(self, rhs: CoefElem) -> CoefElem { (&self).$f(&rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for CoefElem {
    type Output = CoefElem;
    fn neg(self) -> CoefElem {
        -&self
    }
}

impl fmt::Display for CoefElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() {
                factors.push(abs.to_string());
            }
            match m.q {
                0 => {}
                1 => factors.push("q".into()),
                k => factors.push(format!("q^{k}")),
            }
            for (i, &e) in m.tokens.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("g({},-1)", i + 1)),
                    e => factors.push(format!("g({},-1)^{e}", i + 1)),
                }
            }
            if factors.is_empty() {
                write!(f, "1")?;
            } else {
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u32) -> CoefElem {
        CoefElem::q_pow(n, 1)
    }

    #[test]
    fn zero_is_empty() {
        let a = CoefElem::from_int(2, 3);
        assert!((&a - &a).is_zero());
        assert_eq!(CoefElem::zero(2), &a - &a);
    }

    #[test]
    fn token_pairs_collapse_to_q() {
        for n in 2..7u32 {
            for a in 1..n as i64 {
                let prod = &CoefElem::token(n, a) * &CoefElem::token(n, n as i64 - a);
                assert_eq!(prod, q(n), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn token_residue_zero_is_minus_one() {
        assert_eq!(CoefElem::token(3, 6), CoefElem::from_int(3, -1));
        assert_eq!(CoefElem::token(1, 1), CoefElem::from_int(1, -1));
    }

    #[test]
    fn display_is_readable() {
        let e = &(&q(2) - &CoefElem::one(2)) * &CoefElem::token(2, 1);
        assert_eq!(e.to_string(), "q*g(1,-1) - g(1,-1)");
    }
}

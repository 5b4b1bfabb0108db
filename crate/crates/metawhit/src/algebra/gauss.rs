//! Gauss sums: symbolic reduction and numeric evaluation over `F_p((t))`.

use num_complex::Complex64;

use super::coef::CoefElem;
use crate::error::{Error, Result};

/// `g(a,b)` reduced to normal form in the coefficient ring of degree `n`.
pub fn gauss_token(a: i64, b: i64, n: u32) -> CoefElem {
    let divisible = a.rem_euclid(n as i64) == 0;
    if b < -1 {
        CoefElem::zero(n)
    } else if b >= 0 {
        if divisible {
            &CoefElem::q_pow(n, 1) - &CoefElem::one(n)
        } else {
            CoefElem::zero(n)
        }
    } else {
        CoefElem::token(n, a)
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

/// Smallest primitive root modulo the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let phi = p - 1;
    let mut factors = Vec::new();
    let mut m = phi;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p).find(|&g| factors.iter().all(|&f| pow_mod(g, phi / f, p) != 1)).expect("prime modulus has a primitive root")
}

/// Numeric context: prime `p`, cover degree `n | p-1`, and the order-`n`
/// character `chi(u) = exp(2 pi i dlog(u) / n)` for the smallest primitive root.
#[derive(Debug, Clone)]
pub struct GaussNumeric {
    p: u64,
    n: u32,
    generator: u64,
    dlog: Vec<u64>,
    minus_one_values: Vec<Complex64>,
}

impl GaussNumeric {
    pub fn new(p: u64, n: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidContext(format!("{p} is not prime")));
        }
        if n == 0 || (p - 1) % n as u64 != 0 {
            return Err(Error::InvalidContext(format!("cover degree {n} does not divide p-1 = {}", p - 1)));
        }
        let generator = primitive_root(p);
        let mut dlog = vec![0u64; p as usize];
        let mut x = 1u64;
        for k in 0..p - 1 {
            dlog[x as usize] = k;
            x = x * generator % p;
        }
        let mut ctx = GaussNumeric { p, n, generator, dlog, minus_one_values: Vec::new() };
        ctx.minus_one_values = (0..n as i64).map(|a| ctx.sum(a, -1)).collect();
        Ok(ctx)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    /// Exponent `k` in `Z/n` with `chi(u) = zeta_n^k` for a nonzero residue `u`.
    pub fn chi_exponent(&self, u: u64) -> u32 {
        let u = u % self.p;
        assert!(u != 0, "character evaluated at zero");
        (self.dlog[u as usize] % self.n as u64) as u32
    }

    pub fn root_of_unity(&self, k: i64) -> Complex64 {
        let k = k.rem_euclid(self.n as i64) as f64;
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k / self.n as f64)
    }

    pub fn chi(&self, u: u64) -> Complex64 {
        self.root_of_unity(self.chi_exponent(u) as i64)
    }

    /// Additive character on the prime field, `u -> exp(2 pi i u / p)`.
    pub fn additive(&self, u: u64) -> Complex64 {
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * (u % self.p) as f64 / self.p as f64)
    }

    /// Direct summation of the defining integral over `O^x`, with the measure
    /// giving `O^x` volume `p-1`. The integrand depends on `u mod t^k` with
    /// `k = max(1, -b)`; each class has volume `p^(1-k)`.
    fn sum(&self, a: i64, b: i64) -> Complex64 {
        let p = self.p;
        let k = 1.max(-b) as u32;
        let count = p.pow(k);
        let class_volume = (p as f64).powi(1 - k as i32);
        let mut acc = Complex64::new(0.0, 0.0);
        for idx in 0..count {
            let u0 = idx % p;
            if u0 == 0 {
                continue;
            }
            let chi = self.root_of_unity(a * self.chi_exponent(u0) as i64);
            // psi(t^b u) reads the coefficient of t^-1, i.e. digit -1-b of u.
            let psi = if b >= 0 {
                Complex64::new(1.0, 0.0)
            } else {
                let digit = (idx / p.pow((-1 - b) as u32)) % p;
                self.additive(digit)
            };
            acc += chi * psi;
        }
        acc * class_volume
    }

    /// `g(a,b)` evaluated numerically from the definition.
    pub fn gauss_numeric(&self, a: i64, b: i64) -> Complex64 {
        if b == -1 {
            self.minus_one_values[a.rem_euclid(self.n as i64) as usize]
        } else {
            self.sum(a, b)
        }
    }

    /// Values of `g(a,-1)` for `a` in `0..n`.
    pub fn token_values(&self) -> &[Complex64] {
        &self.minus_one_values
    }

    /// Check that the symbolic token relation `g(a,-1) g(n-a,-1) = q` holds,
    /// which needs `2n | p-1`.
    pub fn check_symbolic(&self) -> Result<()> {
        if (self.p - 1) % (2 * self.n as u64) != 0 {
            return Err(Error::InvalidContext(format!(
                "symbolic specialization needs 2n | p-1 (n = {}, p = {})",
                self.n, self.p
            )));
        }
        Ok(())
    }
}

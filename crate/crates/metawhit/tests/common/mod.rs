#![allow(dead_code)]

use num_complex::Complex64;

/// All `lambda` in `[0, max]^r`, lexicographic.
pub fn lambdas(r: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..=max).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

pub fn det(mut a: Vec<Vec<Complex64>>) -> Complex64 {
    let n = a.len();
    let mut acc = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let piv = (k..n).max_by(|&i, &j| a[i][k].norm().total_cmp(&a[j][k].norm())).unwrap();
        if a[piv][k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if piv != k {
            a.swap(piv, k);
            acc = -acc;
        }
        acc *= a[k][k];
        for i in k + 1..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                let v = a[k][j];
                a[i][j] -= f * v;
            }
        }
    }
    acc
}

/// Unramified Whittaker value from the Weyl character formula:
/// `prod_{i<j} (1 - z_j / (q z_i)) * s_mu(z) / z^mu`, where
/// `x_i = z_{i+1} / z_i`, `z_{r+1} = 1` and `mu_j = sum_{k >= j} lambda_k`.
pub fn casselman_shalika(lambda: &[i64], q: f64, x: &[Complex64]) -> Complex64 {
    let r = lambda.len();
    let n = r + 1;
    let mut z = vec![Complex64::new(1.0, 0.0); n];
    for i in (0..r).rev() {
        z[i] = z[i + 1] / x[i];
    }
    let mut mu = vec![0i64; n];
    for j in (0..r).rev() {
        mu[j] = mu[j + 1] + lambda[j];
    }
    let alt = |shift: &dyn Fn(usize) -> i64| {
        det((0..n).map(|i| (0..n).map(|j| z[i].powi((shift(j) + (n - 1 - j) as i64) as i32)).collect()).collect())
    };
    let schur = alt(&|j| mu[j]) / alt(&|_| 0);
    let mut prod = Complex64::new(1.0, 0.0);
    for i in 0..n {
        for j in i + 1..n {
            prod *= 1.0 - z[j] / (q * z[i]);
        }
    }
    let zmu = (0..n).fold(Complex64::new(1.0, 0.0), |acc, i| acc * z[i].powi(mu[i] as i32));
    prod * schur / zmu
}

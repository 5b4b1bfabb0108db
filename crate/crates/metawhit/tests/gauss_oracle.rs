use metawhit::algebra::{gauss_token, specialize_coef, GaussNumeric};
use metawhit::padic_sim::{hilbert, LaurentElem};
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::PI;

/// Brute-force g(a, -1) over the residue field, with its own generator search.
fn classical_gauss(p: u64, n: u32, a: i64) -> Complex64 {
    let g = (2..p).find(|&g| (1..p - 1).all(|k| (0..k).fold(1u64, |x, _| x * g % p) != 1)).unwrap();
    let mut acc = Complex64::new(0.0, 0.0);
    let mut u = 1u64;
    for k in 0..p - 1 {
        let chi = Complex64::from_polar(1.0, 2.0 * PI * ((a * k as i64).rem_euclid(n as i64)) as f64 / n as f64);
        acc += chi * Complex64::from_polar(1.0, 2.0 * PI * u as f64 / p as f64);
        u = u * g % p;
    }
    acc
}

#[test]
fn gauss_sums_match_brute_force() {
    for (p, n) in [(5u64, 2u32), (5, 4), (7, 3), (7, 6), (13, 3), (13, 4), (13, 6)] {
        let ctx = GaussNumeric::new(p, n).unwrap();
        for a in -3..=n as i64 + 2 {
            let want = classical_gauss(p, n, a);
            assert!((ctx.gauss_numeric(a, -1) - want).norm() < 1e-9, "p={p} n={n} a={a}");
            let deep = ctx.gauss_numeric(a, -2);
            assert!(deep.norm() < 1e-9);
        }
    }
}

#[test]
fn symbolic_tokens_specialize() {
    for (p, n) in [(5u64, 2u32), (13, 2), (13, 3), (13, 6)] {
        let ctx = GaussNumeric::new(p, n).unwrap();
        for a in 0..n as i64 {
            for b in -3..3 {
                let sym = specialize_coef(&gauss_token(a, b, n), p, &ctx).unwrap();
                assert!((sym - ctx.gauss_numeric(a, b)).norm() < 1e-9, "p={p} n={n} a={a} b={b}");
            }
        }
    }
}

#[test]
fn contexts_are_validated() {
    assert!(GaussNumeric::new(9, 2).is_err());
    assert!(GaussNumeric::new(7, 4).is_err());
    assert!(GaussNumeric::new(13, 4).unwrap().check_symbolic().is_err());
}

fn unit_times_t(p: u64) -> impl Strategy<Value = LaurentElem> {
    (-3i64..4, 1..p, prop::collection::vec(0..p, 0..3)).prop_map(move |(v, u0, rest)| {
        let mut c = vec![u0];
        c.extend(rest);
        LaurentElem::laurent_poly(p, v, &c)
    })
}

proptest! {
    #[test]
    fn hilbert_symbol_laws(x in unit_times_t(13), y in unit_times_t(13), z in unit_times_t(13)) {
        let ctx = GaussNumeric::new(13, 4).unwrap();
        let n = 4;
        let h = |a: &LaurentElem, b: &LaurentElem| hilbert(a, b, &ctx).unwrap();
        prop_assert_eq!((h(&x, &y) + h(&y, &x)) % n, 0);
        prop_assert_eq!(h(&(&x * &z), &y), (h(&x, &y) + h(&z, &y)) % n);
        prop_assert_eq!(h(&x, &(-&x)), 0);
        let unit = LaurentElem::constant(13, 3);
        prop_assert_eq!(h(&unit, &LaurentElem::constant(13, 5)), 0);
    }
}

mod common;

use metawhit::crystal::{enumerate_bzl, in_crystal, whittaker_sum, Normalization};
use metawhit::gt::{compare_crystal_gt, enumerate_gt, gt_ppart, top_row};
use metawhit::roots::build_type_a;
use num_complex::Complex64;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn unramified_values(lam in prop::collection::vec(0i64..3, 2), re in prop::collection::vec(-0.9f64..0.9, 2), im in prop::collection::vec(-0.9f64..0.9, 2)) {
        let rs = build_type_a(2, 1).unwrap();
        let x: Vec<Complex64> = re.iter().zip(&im).map(|(&a, &b)| Complex64::new(a, b)).collect();
        let poly = whittaker_sum(&lam, 1, &rs, Normalization::Classical).unwrap();
        let got = poly.eval_with(Complex64::new(5.0, 0.0), &[], &x);
        let want = common::casselman_shalika(&lam, 5.0, &x);
        prop_assert!((got - want).norm() < 1e-9 * want.norm().max(1.0));
    }
}

#[test]
fn crystal_membership_matches_enumeration() {
    let rs = build_type_a(2, 1).unwrap();
    for lam in common::lambdas(2, 2) {
        let listed: Vec<Vec<u32>> = enumerate_bzl(&lam, &rs).unwrap().tuples.into_iter().map(|t| t.m).collect();
        for k in 0..6u32.pow(3) {
            let m: Vec<u32> = (0..3).map(|i| (k / 6u32.pow(i)) % 6).collect();
            assert_eq!(in_crystal(&lam, &m, 2), listed.contains(&m), "lambda={lam:?} m={m:?}");
        }
    }
}

#[test]
fn crystal_and_patterns_have_equal_size() {
    for r in 1..=3 {
        let rs = build_type_a(r, 1).unwrap();
        for lam in common::lambdas(r, 1) {
            let crystal = enumerate_bzl(&lam, &rs).unwrap().tuples.len();
            let patterns = enumerate_gt(&top_row(&lam)).unwrap().len();
            assert_eq!(crystal, patterns, "lambda={lam:?}");
        }
    }
}

#[test]
fn rank_three_comparison() {
    for n in 1..=2 {
        let rs = build_type_a(3, n).unwrap();
        for lam in [vec![0, 0, 0], vec![1, 0, 1], vec![0, 1, 0]] {
            let rep = compare_crystal_gt(&lam, n, &rs, Normalization::Classical, None).unwrap();
            assert!(rep.verdict, "n={n} lambda={lam:?}");
        }
    }
}

#[test]
fn printed_normalization_needs_calibration() {
    let rs = build_type_a(1, 1).unwrap();
    let rep = compare_crystal_gt(&[1], 1, &rs, Normalization::Printed, None).unwrap();
    assert_eq!(rep.calibration_q_power, None);
    assert!(!gt_ppart(&[1], 1, &rs, Normalization::Printed).unwrap().is_zero());
}

#[test]
fn negative_weights_are_rejected_or_flagged() {
    let rs = build_type_a(2, 1).unwrap();
    assert!(enumerate_bzl(&[-1, 0], &rs).unwrap().non_dominant);
    assert!(enumerate_gt(&[1, 2, 0]).is_err());
}

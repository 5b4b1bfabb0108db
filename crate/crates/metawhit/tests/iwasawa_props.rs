use metawhit::algebra::GaussNumeric;
use metawhit::padic_sim::{
    cell_measure, coordinates, from_coordinates, iwasawa, psi_lambda, psi_product_formula, IntegrationOptions, LaurentElem,
};
use metawhit::roots::{gt_word, lex_word};
use num_rational::BigRational;
use proptest::prelude::*;

const P: u64 = 5;

fn coord() -> impl Strategy<Value = LaurentElem> {
    (-3i64..1, prop::collection::vec(0..P, 1..5)).prop_map(|(low, c)| LaurentElem::laurent_poly(P, low, &c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]
    #[test]
    fn decomposition_reconstructs(x in prop::collection::vec(coord(), 3), lex in any::<bool>()) {
        let word = if lex { lex_word(2) } else { gt_word(2) };
        let u = from_coordinates(P, &word, &x).unwrap();
        prop_assert_eq!(coordinates(&u, &word).unwrap(), x);
        let res = iwasawa(&u, &word).unwrap();
        prop_assert!(res.verify(&u).unwrap());
        for i in 2..=3 {
            for j in 1..i {
                prop_assert!(res.p1.get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn character_factorizes(x in prop::collection::vec(coord(), 6), l1 in 0i64..3, l2 in 0i64..3, l3 in 0i64..3) {
        let ctx = GaussNumeric::new(P, 2).unwrap();
        for (r, lam) in [(2, vec![l1, l2]), (3, vec![l1, l2, l3])] {
            let word = gt_word(r);
            let u = from_coordinates(P, &word, &x[..word.len()]).unwrap();
            let res = iwasawa(&u, &word).unwrap();
            let direct = psi_lambda(&u, &lam, &ctx);
            let product = psi_product_formula(&res, &lam, &ctx).unwrap();
            prop_assert!((direct - product).norm() < 1e-9);
        }
    }
}

#[test]
fn rank_one_measures() {
    let word = gt_word(1);
    let opts = IntegrationOptions::default();
    for p in [3u64, 5, 7] {
        assert_eq!(cell_measure(&word, &[0], p, opts).unwrap(), BigRational::from_integer(1.into()));
        for m in 1..3u32 {
            let want = BigRational::from_integer((p.pow(m) - p.pow(m - 1)).into());
            assert_eq!(cell_measure(&word, &[m], p, opts).unwrap(), want);
        }
    }
}

#[test]
fn depth_limit_is_reported() {
    let opts = IntegrationOptions { max_depth: 1 };
    let err = cell_measure(&gt_word(2), &[2, 0, 1], P, opts).unwrap_err();
    assert!(matches!(err, metawhit::Error::ResourceLimit { .. }));
}

#[test]
fn f_is_constant_on_divisible_cells() {
    use metawhit::padic_sim::f_value;
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    let ctx = GaussNumeric::new(P, 2).unwrap();
    let x = [Complex64::new(0.3, 0.1), Complex64::new(-0.2, 0.4)];
    let word = gt_word(2);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut seen = std::collections::HashMap::<Vec<u32>, Complex64>::new();
    for _ in 0..3000 {
        let coords: Vec<LaurentElem> = (0..3)
            .map(|_| {
                let c: Vec<u64> = (0..4).map(|_| rng.gen_range(0..P)).collect();
                LaurentElem::laurent_poly(P, rng.gen_range(-4..1), &c)
            })
            .collect();
        let res = iwasawa(&from_coordinates(P, &word, &coords).unwrap(), &word).unwrap();
        if res.m.iter().any(|m| m % 2 != 0) {
            continue;
        }
        let v = f_value(&res, &ctx, &x).unwrap();
        let first = *seen.entry(res.m.clone()).or_insert(v);
        assert!((first - v).norm() < 1e-9, "cell {:?}", res.m);
    }
    assert!(seen.len() > 3);
}

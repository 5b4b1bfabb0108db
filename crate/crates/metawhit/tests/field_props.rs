use metawhit::padic_sim::LaurentElem;
use proptest::prelude::*;

const P: u64 = 7;

fn elem() -> impl Strategy<Value = LaurentElem> {
    (-3i64..3, prop::collection::vec(0..P, 1..5), prop::collection::vec(0..P, 0..3)).prop_map(|(low, num, den)| {
        let a = LaurentElem::laurent_poly(P, low, &num);
        let mut d = vec![1];
        d.extend(den);
        let b = LaurentElem::laurent_poly(P, 0, &d);
        a.div(&b).unwrap()
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn inverses_and_valuations(a in elem(), b in elem()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!(&a * &a.inv().unwrap(), LaurentElem::one(P));
        prop_assert_eq!((&a * &b).valuation(), Some(a.valuation().unwrap() + b.valuation().unwrap()));
        prop_assert_eq!(a.pow(-2).unwrap(), a.inv().unwrap().pow(2).unwrap());
    }

    #[test]
    fn series_digits(low in -4i64..2, coeffs in prop::collection::vec(0..P, 1..6)) {
        let a = LaurentElem::laurent_poly(P, low, &coeffs);
        for (k, &c) in coeffs.iter().enumerate() {
            prop_assert_eq!(a.coeff(low + k as i64), c);
        }
        let polar = a.polar_part();
        prop_assert!((&a - &polar).is_integral());
        prop_assert!(polar.is_zero() || polar.valuation().unwrap() < 0);
    }
}

#[test]
fn rational_series_expansion() {
    // 1 / (1 - t) = 1 + t + t^2 + ...
    let x = LaurentElem::one(P).div(&LaurentElem::laurent_poly(P, 0, &[1, P - 1])).unwrap();
    for k in 0..10 {
        assert_eq!(x.coeff(k), 1);
    }
    assert_eq!(x.coeff(-1), 0);
}

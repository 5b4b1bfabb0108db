use metawhit::lusztig::{local_transition, local_transition_inverse, transition, weight_of, BzlTuple};
use metawhit::roots::{all_reduced_words, braid_path, gt_word, lex_word, CartanCase, ReducedWord};
use num_bigint::BigInt;
use proptest::prelude::*;

fn big(xs: &[u64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn word(r: usize) -> impl Strategy<Value = ReducedWord> {
    let words = all_reduced_words(r);
    (0..words.len()).prop_map(move |k| words[k].clone())
}

proptest! {
    #[test]
    fn rank_two_inverses(case in prop::sample::select(vec![CartanCase::A1xA1, CartanCase::A2, CartanCase::B2, CartanCase::G2]),
                         xs in prop::collection::vec(0u64..1_000_000, 6)) {
        let m = big(&xs[..case.segment_len()]);
        let out = local_transition(case, &m).unwrap();
        prop_assert!(out.iter().all(|x| x >= &BigInt::from(0)));
        prop_assert_eq!(local_transition_inverse(case, &out).unwrap(), m.clone());
        prop_assert_eq!(local_transition(case, &local_transition_inverse(case, &m).unwrap()).unwrap(), m);
    }

    #[test]
    fn rank_four_weights_and_paths(src in word(4), dst in word(4), xs in prop::collection::vec(0u64..50, 10)) {
        let t = BzlTuple::from_u64(src.clone(), &xs).unwrap();
        let out = transition(&t, &dst).unwrap();
        prop_assert_eq!(out.word(), &dst);
        prop_assert_eq!(weight_of(&out), weight_of(&t));
        prop_assert_eq!(transition(&out, &src).unwrap(), t);
    }
}

#[test]
fn gt_to_lex_rank_three() {
    let m = BzlTuple::from_u64(gt_word(3), &[1, 0, 2, 0, 1, 3]).unwrap();
    let lex = transition(&m, &lex_word(3)).unwrap();
    assert_eq!(weight_of(&lex), weight_of(&m));
    assert_eq!(transition(&lex, &gt_word(3)).unwrap(), m);
}

#[test]
fn braid_paths_reach_target() {
    let words = all_reduced_words(3);
    assert_eq!(words.len(), 16);
    for a in &words {
        for b in &words {
            let path = braid_path(a, b).unwrap();
            if a == b {
                assert!(path.is_empty());
            }
        }
    }
}

#[test]
fn bad_inputs_are_rejected() {
    assert!(BzlTuple::from_u64(gt_word(2), &[1, 2]).is_err());
    assert!(local_transition(CartanCase::G2, &big(&[1, 2, 3])).is_err());
    let m = BzlTuple::from_u64(gt_word(2), &[1, 2, 3]).unwrap();
    assert!(transition(&m, &gt_word(3)).is_err());
}

//! Piecewise-linear transition maps between Lusztig parametrizations.
//!
//! For `B2` and `G2` the forward map rewrites a segment `(i,j,i,j,..)` that
//! starts with the short simple root; the opposite direction is
//! [`local_transition_inverse`].

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::roots::{braid_path, BraidMove, CartanCase, ReducedWord};

/// A tuple of naturals attached to a reduced word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BzlTuple {
    word: ReducedWord,
    m: Vec<BigInt>,
}

impl BzlTuple {
    pub fn new(word: ReducedWord, m: Vec<BigInt>) -> Result<Self> {
        if m.len() != word.len() {
            return Err(Error::InvalidArgument(format!("tuple has length {}, word has length {}", m.len(), word.len())));
        }
        if m.iter().any(|x| x.is_negative()) {
            return Err(Error::InvalidArgument("tuple entries must be nonnegative".into()));
        }
        Ok(BzlTuple { word, m })
    }

    pub fn from_u64(word: ReducedWord, m: &[u64]) -> Result<Self> {
        Self::new(word, m.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn word(&self) -> &ReducedWord {
        &self.word
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.m
    }

    pub fn weight(&self) -> Vec<BigInt> {
        weight_of(self)
    }
}

fn min_of(xs: impl IntoIterator<Item = BigInt>) -> BigInt {
    xs.into_iter().min().expect("nonempty min")
}

fn a2(s: &[BigInt]) -> Vec<BigInt> {
    let (a, b, c) = (&s[0], &s[1], &s[2]);
    let m = a.min(c).clone();
    vec![b + c - &m, m.clone(), a + b - &m]
}

fn b2(s: &[BigInt]) -> Vec<BigInt> {
    let (a, b, c, d) = (&s[0], &s[1], &s[2], &s[3]);
    let two = BigInt::from(2);
    let p = min_of([a + b, a + d, c + d]);
    let q = min_of([&two * a + b, &two * a + d, &two * c + d]);
    vec![b + &two * c + d - &q, &q - &p, &two * &p - &q, a + b + c - &p]
}

/// Numerator and denominator exponent vectors of each output coordinate;
/// coordinate `k` is `min_N <e, s> - min_D <e, s>`.
const G2_FORMS: [(&[[i64; 6]], &[[i64; 6]]); 6] = [
    (
        &[[0, 1, 3, 2, 3, 1]],
        &[[0, 0, 3, 2, 3, 1], [3, 0, 0, 2, 3, 1], [3, 2, 0, 0, 3, 1], [3, 2, 3, 0, 0, 1], [3, 2, 3, 1, 0, 0]],
    ),
    (
        &[[0, 0, 3, 2, 3, 1], [3, 0, 0, 2, 3, 1], [3, 2, 0, 0, 3, 1], [3, 2, 3, 0, 0, 1], [3, 2, 3, 1, 0, 0]],
        &[[0, 0, 2, 2, 3, 1], [2, 0, 0, 2, 3, 1], [2, 2, 0, 0, 3, 1], [2, 2, 3, 0, 0, 1], [2, 2, 3, 1, 0, 0]],
    ),
    (
        &[[0, 0, 6, 6, 9, 3], [6, 0, 0, 6, 9, 3], [6, 6, 0, 0, 9, 3], [6, 6, 9, 0, 0, 3], [6, 6, 9, 3, 0, 0]],
        &[[0, 0, 6, 5, 9, 3], [3, 3, 3, 2, 9, 3], [3, 3, 9, 2, 3, 3], [3, 3, 9, 4, 3, 1], [6, 0, 0, 5, 9, 3], [6, 3, 6, 2, 3, 3], [6, 3, 6, 4, 3, 1], [6, 5, 0, 0, 9, 3], [6, 5, 9, 0, 0, 3], [6, 5, 9, 3, 0, 0]],
    ),
    (
        &[[0, 0, 3, 3, 6, 2], [3, 0, 0, 3, 6, 2], [3, 3, 0, 0, 6, 2], [3, 3, 6, 0, 0, 2], [3, 3, 6, 2, 0, 0]],
        &[[0, 0, 3, 3, 5, 2], [1, 1, 4, 2, 3, 2], [1, 1, 4, 3, 3, 1], [3, 0, 0, 3, 5, 2], [3, 1, 2, 2, 3, 2], [3, 1, 2, 3, 3, 1], [3, 3, 0, 0, 5, 2], [3, 3, 2, 1, 3, 1], [3, 3, 5, 0, 0, 2], [3, 3, 5, 2, 0, 0]],
    ),
    (
        &[[0, 0, 3, 3, 6, 3], [3, 0, 0, 3, 6, 3], [3, 3, 0, 0, 6, 3], [3, 3, 6, 0, 0, 3], [3, 3, 6, 3, 0, 0]],
        &[[0, 0, 3, 3, 6, 2], [3, 0, 0, 3, 6, 2], [3, 3, 0, 0, 6, 2], [3, 3, 6, 0, 0, 2], [3, 3, 6, 2, 0, 0]],
    ),
    (
        &[[1, 1, 2, 1, 1, 0]],
        &[[0, 0, 1, 1, 2, 1], [1, 0, 0, 1, 2, 1], [1, 1, 0, 0, 2, 1], [1, 1, 2, 0, 0, 1], [1, 1, 2, 1, 0, 0]],
    ),
];

fn g2(s: &[BigInt]) -> Vec<BigInt> {
    let dot = |e: &[i64; 6]| e.iter().zip(s).map(|(&k, x)| x * k).sum::<BigInt>();
    let trop = |forms: &[[i64; 6]]| min_of(forms.iter().map(dot));
    G2_FORMS.iter().map(|(num, den)| trop(num) - trop(den)).collect()
}

/// An older closed form for the G2 move, kept for comparison.
/// It produces negative entries and is not a bijection on naturals.
pub fn g2_printed_transcription(s: &[BigInt]) -> Vec<BigInt> {
    let i = |k: i64| BigInt::from(k);
    let (a, b, c, d, e, f) = (&s[0], &s[1], &s[2], &s[3], &s[4], &s[5]);
    let p = min_of([a + b + &i(2) * c + d, a + b + &i(2) * c + f, a + b + &i(2) * e + f, a + d + &i(2) * e + f, b + d + &i(2) * e + f]);
    let inner = min_of([a + c, &i(2) * c, c + e, a + e]);
    let q = min_of([
        &i(2) * a + &i(2) * b + &i(3) * c + d,
        &i(2) * a + &i(2) * b + &i(3) * c + f,
        &i(2) * a + &i(2) * b + &i(3) * e + f,
        &i(2) * a + &i(2) * d + &i(3) * e + f,
        &i(2) * c + &i(2) * d + &i(3) * e + f,
        a + b + d + &i(2) * e + f + &inner,
    ]);
    let r = min_of([
        &i(3) * a + &i(2) * b + &i(3) * c + d,
        &i(3) * a + &i(2) * b + &i(3) * c + f,
        &i(3) * a + &i(2) * b + &i(3) * e + f,
        &i(3) * a + &i(2) * d + &i(3) * e + f,
        &i(3) * c + &i(2) * d + &i(3) * e + f,
        &i(2) * a + b + d + &i(2) * e + f + &inner,
    ]);
    let s_val = &i(2) * a + &i(2) * b + &i(2) * c + d
        + min_of([a + b + &i(3) * c + d, a + b + &i(3) * c + f, a + b + &i(3) * e + f, d + &i(2) * e + f + &inner])
        + &i(2) * f
        + &i(3) * min_of([a + b + &i(2) * c, a + b + &i(2) * e, a + d + &i(2) * e, c + d + &i(2) * e]);
    vec![
        b + &i(3) * c + &i(2) * d + &i(3) * c + f - &r,
        &r - &q,
        &i(2) * &q - &r - &s_val,
        &s_val - &p - &q,
        &i(3) * &p - &s_val,
        a + b + &i(2) * c + d + e - &p,
    ]
}

fn check_len(case: CartanCase, segment: &[BigInt]) -> Result<()> {
    if segment.len() != case.segment_len() {
        return Err(Error::InvalidArgument(format!(
            "{case:?} needs a segment of length {}, got {}",
            case.segment_len(),
            segment.len()
        )));
    }
    Ok(())
}

/// The local map `R` for one braid move.
pub fn local_transition(case: CartanCase, segment: &[BigInt]) -> Result<Vec<BigInt>> {
    check_len(case, segment)?;
    Ok(match case {
        CartanCase::A1xA1 => vec![segment[1].clone(), segment[0].clone()],
        CartanCase::A2 => a2(segment),
        CartanCase::B2 => b2(segment),
        CartanCase::G2 => g2(segment),
    })
}

/// The map in the opposite direction, `rev . R . rev`.
pub fn local_transition_inverse(case: CartanCase, segment: &[BigInt]) -> Result<Vec<BigInt>> {
    let rev: Vec<BigInt> = segment.iter().rev().cloned().collect();
    let mut out = local_transition(case, &rev)?;
    out.reverse();
    Ok(out)
}

pub fn local_transition_u64(case: CartanCase, segment: &[u64]) -> Result<Vec<BigInt>> {
    local_transition(case, &segment.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
}

/// Apply a sequence of braid moves, starting from `m.word`.
pub fn transition_along(m: &BzlTuple, moves: &[BraidMove]) -> Result<BzlTuple> {
    let mut letters = m.word.letters().to_vec();
    let mut entries = m.m.clone();
    for mv in moves {
        let len = mv.case.segment_len();
        let range = mv.position..mv.position + len;
        if range.end > letters.len() {
            return Err(Error::InvalidArgument(format!("move {mv:?} runs past the word")));
        }
        let out = local_transition(mv.case, &entries[range.clone()])?;
        entries.splice(range.clone(), out);
        match mv.case {
            CartanCase::A1xA1 => letters.swap(mv.position, mv.position + 1),
            CartanCase::A2 => {
                let (a, b) = (letters[mv.position], letters[mv.position + 1]);
                letters[mv.position..mv.position + 3].copy_from_slice(&[b, a, b]);
            }
            other => return Err(Error::Unsupported(format!("{other:?} moves do not occur in type A"))),
        }
    }
    let word = ReducedWord::new(m.word.rank(), letters)?;
    BzlTuple::new(word, entries)
}

/// Transport `m` to the parametrization attached to `target`.
pub fn transition(m: &BzlTuple, target: &ReducedWord) -> Result<BzlTuple> {
    if target.rank() != m.word.rank() {
        return Err(Error::InvalidArgument(format!("target rank {} differs from {}", target.rank(), m.word.rank())));
    }
    let path = braid_path(&m.word, target)?;
    transition_along(m, &path)
}

/// `sum_j m_j beta_j^vee` in simple coroot coordinates, `beta_j` the `j`-th
/// root of the word's order.
pub fn weight_of(m: &BzlTuple) -> Vec<BigInt> {
    let r = m.word.rank();
    let mut out = vec![BigInt::zero(); r];
    for (mj, root) in m.m.iter().zip(m.word.root_order()) {
        for (slot, h) in out.iter_mut().zip(root.coroot(r)) {
            if h > 0 {
                *slot += mj;
            }
        }
    }
    out
}

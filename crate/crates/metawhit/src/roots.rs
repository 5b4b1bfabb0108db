//! Type A root data, reduced words of the long element and their root orders.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// The root `e_i - e_j`, 1-based; positive when `i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Root {
    pub i: usize,
    pub j: usize,
}

impl Root {
    pub fn new(i: usize, j: usize) -> Self {
        assert!(i != j, "({i},{i}) is not a root");
        Root { i, j }
    }

    pub fn simple(k: usize) -> Self {
        Root::new(k, k + 1)
    }

    pub fn is_positive(self) -> bool {
        self.i < self.j
    }

    pub fn negate(self) -> Self {
        Root { i: self.j, j: self.i }
    }

    /// Coordinates of the coroot of a positive root in the simple coroot basis.
    pub fn coroot(self, r: usize) -> Vec<u32> {
        debug_assert!(self.is_positive());
        (1..=r).map(|k| u32::from(self.i <= k && k < self.j)).collect()
    }

    pub fn height(self) -> u32 {
        (self.j - self.i) as u32
    }

    /// `<self, other^vee>`, the dot product in the `e` basis.
    pub fn pairing(self, other: Root) -> i64 {
        let c = |k: usize| -> i64 { i64::from(k == self.i) - i64::from(k == self.j) };
        c(other.i) - c(other.j)
    }

    /// `<rho, self^vee>` for a positive root.
    pub fn rho_pairing(self) -> i64 {
        self.j as i64 - self.i as i64
    }

    /// Apply the simple reflection `s_k`, which swaps coordinates `k` and `k+1`.
    pub fn reflect(self, k: usize) -> Root {
        let s = |x: usize| if x == k { k + 1 } else if x == k + 1 { k } else { x };
        Root { i: s(self.i), j: s(self.j) }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemA {
    r: usize,
    n: u32,
    roots: Vec<Root>,
}

pub fn build_type_a(r: usize, n: u32) -> Result<RootSystemA> {
    if r == 0 {
        return Err(Error::InvalidArgument("rank must be positive".into()));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("cover degree must be positive".into()));
    }
    let roots = (1..=r).flat_map(|i| (i + 1..=r + 1).map(move |j| Root::new(i, j))).collect();
    Ok(RootSystemA { r, n, roots })
}

impl RootSystemA {
    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len()
    }

    /// Positive roots in lexicographic order.
    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn index_of(&self, root: Root) -> Option<usize> {
        self.roots.iter().position(|&x| x == root)
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (1..=self.r).map(Root::simple).collect()
    }

    /// Squared coroot length; type A is simply laced.
    pub fn l_alpha(&self, _alpha: Root) -> u32 {
        1
    }

    pub fn n_alpha(&self, alpha: Root) -> u32 {
        self.n / num_integer::gcd(self.n, self.l_alpha(alpha))
    }

    pub fn pairing_table(&self) -> Vec<Vec<i64>> {
        self.roots.iter().map(|&a| self.roots.iter().map(|&b| a.pairing(b)).collect()).collect()
    }
}

/// The four rank-two local configurations of a braid move.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum CartanCase {
    A1xA1,
    A2,
    B2,
    G2,
}

impl CartanCase {
    /// `(a_ij, a_ji)` for a segment starting with `i`.
    pub fn cartan_entries(self) -> (i32, i32) {
        match self {
            CartanCase::A1xA1 => (0, 0),
            CartanCase::A2 => (-1, -1),
            CartanCase::B2 => (-1, -2),
            CartanCase::G2 => (-1, -3),
        }
    }

    pub fn segment_len(self) -> usize {
        match self {
            CartanCase::A1xA1 => 2,
            CartanCase::A2 => 3,
            CartanCase::B2 => 4,
            CartanCase::G2 => 6,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BraidMove {
    /// 0-based index of the first letter of the rewritten segment.
    pub position: usize,
    pub case: CartanCase,
}

/// A reduced expression of the long element together with its root order
/// `alpha_j = s_{i_N} ... s_{i_{j+1}} alpha_{i_j}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    r: usize,
    letters: Vec<usize>,
    order: Vec<Root>,
}

/// Roots `s_{i_l} ... s_{i_{j+1}} alpha_{i_j}` for an arbitrary word.
fn word_roots(letters: &[usize]) -> Vec<Root> {
    (0..letters.len())
        .map(|j| letters[j + 1..].iter().fold(Root::simple(letters[j]), |root, &k| root.reflect(k)))
        .collect()
}

fn check_letters(r: usize, letters: &[usize]) -> Result<()> {
    if let Some(&bad) = letters.iter().find(|&&k| k == 0 || k > r) {
        return Err(Error::InvalidWord(format!("letter {bad} out of range 1..={r}")));
    }
    Ok(())
}

impl ReducedWord {
    pub fn new(r: usize, letters: Vec<usize>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidArgument("rank must be positive".into()));
        }
        check_letters(r, &letters)?;
        let n_pos = r * (r + 1) / 2;
        if letters.len() != n_pos {
            return Err(Error::InvalidWord(format!("length {} differs from N = {n_pos}", letters.len())));
        }
        let order = word_roots(&letters);
        let mut seen = order.clone();
        seen.sort();
        seen.dedup();
        if order.iter().any(|x| !x.is_positive()) || seen.len() != order.len() {
            return Err(Error::InvalidWord(format!("{letters:?} is not reduced")));
        }
        Ok(ReducedWord { r, letters, order })
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn root_order(&self) -> &[Root] {
        &self.order
    }

    pub fn position_of(&self, root: Root) -> Option<usize> {
        self.order.iter().position(|&x| x == root)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `s_1 (s_2 s_1) ... (s_r ... s_1)`.
pub fn gt_word(r: usize) -> ReducedWord {
    let letters = (1..=r).flat_map(|k| (1..=k).rev()).collect();
    ReducedWord::new(r, letters).expect("the Gelfand-Tsetlin word is reduced")
}

/// `(s_r ... s_1)(s_r ... s_2) ... (s_r)`, whose root order is lexicographic.
pub fn lex_word(r: usize) -> ReducedWord {
    let letters = (1..=r).flat_map(|k| (k..=r).rev()).collect();
    ReducedWord::new(r, letters).expect("the lexicographic word is reduced")
}

pub fn root_order(word: &ReducedWord) -> Vec<Root> {
    word.order.clone()
}

/// Validate an arbitrary letter sequence as a reduced word of the long element.
pub fn root_order_of(r: usize, letters: &[usize]) -> Result<Vec<Root>> {
    ReducedWord::new(r, letters.to_vec()).map(|w| w.order)
}

/// Inversion set `{alpha > 0 : w alpha < 0}` of the Weyl element `s_{i_1} ... s_{i_l}`,
/// computed from the permutation action on coordinates.
pub fn inversion_set(r: usize, letters: &[usize]) -> Result<Vec<Root>> {
    check_letters(r, letters)?;
    let mut perm: Vec<usize> = (0..=r + 1).collect();
    for &k in letters {
        // w = w' s_k: w(e_k) = w'(e_{k+1}).
        perm.swap(k, k + 1);
    }
    let roots = build_type_a(r, 1)?.roots;
    Ok(roots.into_iter().filter(|a| perm[a.i] > perm[a.j]).collect())
}

/// Whether the word is a reduced expression of its Weyl element.
pub fn is_reduced(r: usize, letters: &[usize]) -> Result<bool> {
    Ok(inversion_set(r, letters)?.len() == letters.len())
}

/// Number of ways to write `lambda` (simple coroot coordinates) as a
/// nonnegative integer combination of positive coroots.
pub fn kostant_partition(lambda: &[i64]) -> u128 {
    let r = lambda.len();
    if lambda.iter().any(|&x| x < 0) {
        return 0;
    }
    if r == 0 {
        return 1;
    }
    let roots = build_type_a(r, 1).expect("positive rank").roots;
    let target: Vec<usize> = lambda.iter().map(|&x| x as usize).collect();
    let dims: Vec<usize> = target.iter().map(|&x| x + 1).collect();
    let size: usize = dims.iter().product();
    let index = |v: &[usize]| v.iter().zip(&dims).fold(0usize, |acc, (&x, &d)| acc * d + x);
    let mut table = vec![0u128; size];
    table[0] = 1;
    let mut coords = vec![0usize; r];
    for root in roots {
        let c = root.coroot(r);
        for flat in 0..size {
            let mut rem = flat;
            for k in (0..r).rev() {
                coords[k] = rem % dims[k];
                rem /= dims[k];
            }
            if coords.iter().zip(&c).all(|(&x, &h)| x >= h as usize) {
                let prev: Vec<usize> = coords.iter().zip(&c).map(|(&x, &h)| x - h as usize).collect();
                table[flat] += table[index(&prev)];
            }
        }
    }
    table[index(&target)]
}

/// All words one commutation or braid move away, ordered by move position.
pub fn braid_neighbors(word: &ReducedWord) -> Vec<(ReducedWord, BraidMove)> {
    let l = &word.letters;
    let mut out = Vec::new();
    for pos in 0..l.len() {
        if pos + 1 < l.len() && l[pos].abs_diff(l[pos + 1]) > 1 {
            let mut nl = l.clone();
            nl.swap(pos, pos + 1);
            out.push((nl, BraidMove { position: pos, case: CartanCase::A1xA1 }));
        }
        if pos + 2 < l.len() && l[pos] == l[pos + 2] && l[pos].abs_diff(l[pos + 1]) == 1 {
            let mut nl = l.clone();
            let (a, b) = (l[pos], l[pos + 1]);
            nl[pos] = b;
            nl[pos + 1] = a;
            nl[pos + 2] = b;
            out.push((nl, BraidMove { position: pos, case: CartanCase::A2 }));
        }
    }
    out.into_iter()
        .map(|(nl, mv)| (ReducedWord::new(word.r, nl).expect("braid moves preserve reducedness"), mv))
        .collect()
}

/// Shortest braid-move chain from `from` to `to`; among shortest chains the
/// lexicographically smallest sequence of positions is returned.
pub fn braid_path(from: &ReducedWord, to: &ReducedWord) -> Result<Vec<BraidMove>> {
    if from.r != to.r {
        return Err(Error::InvalidArgument(format!("rank mismatch: {} vs {}", from.r, to.r)));
    }
    let mut parent: HashMap<ReducedWord, Option<(ReducedWord, BraidMove)>> = HashMap::new();
    parent.insert(from.clone(), None);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(w) = queue.pop_front() {
        if &w == to {
            break;
        }
        for (nw, mv) in braid_neighbors(&w) {
            if !parent.contains_key(&nw) {
                parent.insert(nw.clone(), Some((w.clone(), mv)));
                queue.push_back(nw);
            }
        }
    }
    if !parent.contains_key(to) {
        return Err(Error::InvalidArgument(format!("{to} is not braid-connected to {from}")));
    }
    let mut path = Vec::new();
    let mut cur = to.clone();
    while let Some(Some((prev, mv))) = parent.get(&cur) {
        path.push(*mv);
        cur = prev.clone();
    }
    path.reverse();
    Ok(path)
}

/// Every reduced word of the long element, in breadth-first order from the
/// Gelfand-Tsetlin word.
pub fn all_reduced_words(r: usize) -> Vec<ReducedWord> {
    let start = gt_word(r);
    let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    seen.insert(start.letters.clone(), ());
    let mut out = vec![start.clone()];
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        for (nw, _) in braid_neighbors(&w) {
            if seen.insert(nw.letters.clone(), ()).is_none() {
                out.push(nw.clone());
                queue.push_back(nw);
            }
        }
    }
    out
}

/// One reduced word for each element of the Weyl group, shortest-first.
pub fn weyl_group_words(r: usize) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..=r + 1).collect();
    let mut seen: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    seen.insert(id.clone(), ());
    let mut out = vec![vec![]];
    let mut queue = VecDeque::from([(id, Vec::new())]);
    while let Some((perm, word)) = queue.pop_front() {
        for k in 1..=r {
            let mut next = perm.clone();
            next.swap(k, k + 1);
            if seen.insert(next.clone(), ()).is_none() {
                let mut w: Vec<usize> = word.clone();
                w.push(k);
                out.push(w.clone());
                queue.push_back((next, w));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let rs = build_type_a(1, 1).unwrap();
        assert_eq!(rs.positive_roots(), &[Root::new(1, 2)]);
        assert_eq!(build_type_a(3, 2).unwrap().num_positive(), 6);
        assert_eq!(Root::new(1, 3).rho_pairing(), 2);
        assert!(build_type_a(0, 1).is_err());
        assert!(build_type_a(2, 0).is_err());
        let rs = build_type_a(3, 4).unwrap();
        assert!(rs.positive_roots().iter().all(|&a| rs.n_alpha(a) == 4 && rs.l_alpha(a) == 1));
    }

    #[test]
    fn gt_word_letters() {
        assert_eq!(gt_word(1).letters(), &[1]);
        assert_eq!(gt_word(2).letters(), &[1, 2, 1]);
        assert_eq!(gt_word(3).letters(), &[1, 2, 1, 3, 2, 1]);
    }

    #[test]
    fn word_orders_by_brute_reflection() {
        let r = |i, j| Root::new(i, j);
        assert_eq!(gt_word(2).root_order(), &[r(2, 3), r(1, 3), r(1, 2)]);
        assert_eq!(lex_word(2).letters(), &[2, 1, 2]);
        assert_eq!(lex_word(2).root_order(), &[r(1, 2), r(1, 3), r(2, 3)]);
        assert_eq!(lex_word(3).letters(), &[3, 2, 1, 3, 2, 3]);
        let lex3 = build_type_a(3, 1).unwrap();
        assert_eq!(lex_word(3).root_order(), lex3.positive_roots());
    }

    #[test]
    fn non_reduced_rejected() {
        assert!(matches!(ReducedWord::new(2, vec![1, 1, 2]), Err(Error::InvalidWord(_))));
        assert!(matches!(ReducedWord::new(2, vec![1, 2]), Err(Error::InvalidWord(_))));
        assert!(matches!(ReducedWord::new(2, vec![1, 3, 1]), Err(Error::InvalidWord(_))));
    }

    #[test]
    fn kostant_examples() {
        assert_eq!(kostant_partition(&[0, 0]), 1);
        assert_eq!(kostant_partition(&[1, 1]), 2);
        assert_eq!(kostant_partition(&[5]), 1);
        assert_eq!(kostant_partition(&[-1, 2]), 0);
        // A3 at (1,1,1): 1+1+1, 12+3, 1+23, 123.
        assert_eq!(kostant_partition(&[1, 1, 1]), 4);
    }

    #[test]
    fn braid_neighbor_examples() {
        let nb = braid_neighbors(&gt_word(2));
        assert_eq!(nb.len(), 1);
        assert_eq!(nb[0].0.letters(), &[2, 1, 2]);
        assert_eq!(nb[0].1, BraidMove { position: 0, case: CartanCase::A2 });
        assert!(braid_neighbors(&gt_word(1)).is_empty());
    }

    #[test]
    fn reduced_word_counts() {
        assert_eq!(all_reduced_words(2).len(), 2);
        assert_eq!(all_reduced_words(3).len(), 16);
    }

    #[test]
    fn inversion_sets() {
        assert_eq!(inversion_set(2, &[1]).unwrap(), vec![Root::new(1, 2)]);
        assert_eq!(inversion_set(2, &[]).unwrap(), vec![]);
        assert_eq!(inversion_set(2, &[1, 2, 1]).unwrap().len(), 3);
        assert!(!is_reduced(2, &[1, 1]).unwrap());
    }

    #[test]
    fn rho_pairing_all_words() {
        for r in 1..=3 {
            for w in all_reduced_words(r) {
                let ord = w.root_order();
                for (k, &beta) in ord.iter().enumerate() {
                    let s: i64 = ord[..k].iter().map(|&a| a.pairing(beta)).sum();
                    assert_eq!(beta.rho_pairing(), 1 + s, "word {w} root {beta}");
                }
            }
        }
    }
}

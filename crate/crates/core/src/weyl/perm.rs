use std::collections::BTreeSet;
use std::fmt;
use std::ops::Mul;

use itertools::Itertools;

use crate::{Error, Result};

/// An element of the finite Weyl group `S_n`.
///
/// Stored 0-based internally; the public constructors and [`fmt::Display`]
/// use 1-based one-line notation. Products compose as functions:
/// `(u * v)(i) = u(v(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Builds a permutation from 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::NotPermutation { n, images: images.to_vec() });
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images: images.iter().map(|&x| x - 1).collect() })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x)
        });
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles written 1-based, so that
    /// `from_cycles(3, &[&[1, 2, 3]])` sends 1 to 2, 2 to 3 and 3 to 1.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n || touched[a - 1] {
                    return Err(Error::InvalidParams(format!("bad cycle {cycle:?} for n = {n}")));
                }
                touched[a - 1] = true;
                images[a - 1] = b - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// The cycle `(1 2 ⋯ n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation { images: (0..n).map(|i| (i + 1) % n).collect() }
    }

    /// The adjacent transposition `s_i = (i i+1)`, `1 ≤ i < n`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "simple reflection s_{i} out of range for n = {n}");
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    /// The transposition `(a b)`, 1-based.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// Product `s_{i_1} s_{i_2} ⋯` of adjacent transpositions.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        word.iter().fold(Permutation::identity(n), |acc, &i| &acc * &Permutation::simple(n, i))
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based index.
    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(self.n(), other.n()));
        }
        Ok(Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() })
    }

    /// Action on coordinate vectors: `(u·μ)_i = μ_{u⁻¹(i)}`.
    pub fn act<T: Clone>(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.n());
        let mut out = v.to_vec();
        for (j, &uj) in self.images.iter().enumerate() {
            out[uj] = v[j].clone();
        }
        out
    }

    /// Coxeter length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Reduced word `[i_1, …, i_k]` with `self = s_{i_1} ⋯ s_{i_k}`, peeling
    /// the smallest left descent each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut cur = self.clone();
        // s_i is a left descent of u iff u⁻¹(i) > u⁻¹(i+1).
        'outer: loop {
            let inv = cur.inverse();
            for i in 0..cur.n().saturating_sub(1) {
                if inv.images[i] > inv.images[i + 1] {
                    word.push(i + 1);
                    cur.images.iter_mut().for_each(|x| {
                        if *x == i {
                            *x = i + 1;
                        } else if *x == i + 1 {
                            *x = i;
                        }
                    });
                    continue 'outer;
                }
            }
            break;
        }
        word
    }

    /// Indices `i` such that `s_i` occurs in a reduced word.
    ///
    /// `s_i` is in the support iff `u` does not stabilise `{1, …, i}`.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        let mut max = 0;
        for i in 0..self.n().saturating_sub(1) {
            max = max.max(self.images[i]);
            if max > i {
                out.insert(i + 1);
            }
        }
        out
    }

    /// A Coxeter element of `S_n` is a product of all `n−1` simple
    /// reflections, each taken once; equivalently it has length `n−1` and
    /// full support. For `n = 1` the identity counts.
    pub fn is_coxeter(&self) -> bool {
        let n = self.n();
        if n <= 1 {
            return true;
        }
        self.length() == n - 1 && self.support().len() == n - 1
    }

    /// Cycles of the permutation (0-based), including fixed points, ordered by
    /// their smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// All permutations of `S_n` in lexicographic one-line order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(|images| Permutation { images })
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs).expect("permutation rank mismatch")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.one_line().iter().join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycles(n, &[c]).unwrap()
    }

    #[test]
    fn one_line_rejects_non_permutations() {
        assert!(Permutation::from_one_line(&[1, 1, 2]).is_err());
        assert!(Permutation::from_one_line(&[0, 1]).is_err());
        assert!(Permutation::from_one_line(&[2, 3, 1]).is_ok());
    }

    #[test]
    fn long_cycle_is_product_of_simple_reflections() {
        for n in 1..7 {
            let word: Vec<usize> = (1..n).collect();
            assert_eq!(Permutation::from_word(n, &word), Permutation::long_cycle(n));
        }
        assert_eq!(Permutation::long_cycle(3), cyc(3, &[1, 2, 3]));
    }

    #[test]
    fn action_convention() {
        // (u·μ)_{u(j)} = μ_j
        let u = cyc(3, &[1, 2, 3]);
        assert_eq!(u.act(&[10, 20, 30]), vec![30, 10, 20]);
    }

    #[test]
    fn support_examples() {
        assert!(Permutation::identity(4).support().is_empty());
        assert_eq!(Permutation::simple(4, 2).support(), BTreeSet::from([2]));
        assert_eq!(cyc(3, &[1, 2, 3]).support(), BTreeSet::from([1, 2]));
        assert_eq!(cyc(3, &[1, 2, 3]).reduced_word(), vec![1, 2]);
    }

    #[test]
    fn support_matches_reduced_word_letters() {
        for n in 1..6 {
            for u in Permutation::all(n) {
                let word = u.reduced_word();
                assert_eq!(word.len(), u.length());
                assert_eq!(Permutation::from_word(n, &word), u);
                let letters: BTreeSet<usize> = word.into_iter().collect();
                assert_eq!(letters, u.support(), "{u}");
            }
        }
    }

    #[test]
    fn coxeter_examples() {
        for n in 2..7 {
            assert!(Permutation::long_cycle(n).is_coxeter());
            assert!(!Permutation::identity(n).is_coxeter());
        }
        let u = Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap();
        assert_eq!(u.length(), 4);
        assert!(!u.is_coxeter());
    }

    #[test]
    fn coxeter_matches_products_in_all_orders() {
        for n in 2..=6 {
            let brute: BTreeSet<Permutation> = (1..n)
                .permutations(n - 1)
                .map(|order| Permutation::from_word(n, &order))
                .collect();
            for u in Permutation::all(n) {
                assert_eq!(u.is_coxeter(), brute.contains(&u), "{u}");
            }
        }
    }

    #[test]
    fn cycles_partition_indices() {
        let u = Permutation::from_cycles(5, &[&[1, 3], &[2, 5, 4]]).unwrap();
        assert_eq!(u.cycles(), vec![vec![0, 2], vec![1, 4, 3]]);
    }
}

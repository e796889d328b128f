use std::fmt;

use super::{AffWeylElt, Cocharacter, Permutation};
use crate::{Error, Result};

/// The affine root `χ_{ij} + kδ`, i.e. the affine function `x ↦ x_i − x_j + k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineRoot {
    i: usize,
    j: usize,
    k: i64,
}

impl AffineRoot {
    /// 1-based indices.
    pub fn new(i: usize, j: usize, k: i64) -> Result<Self> {
        if i == 0 || j == 0 || i == j {
            return Err(Error::InvalidParams(format!("affine root needs distinct 1-based indices, got ({i}, {j})")));
        }
        Ok(AffineRoot { i: i - 1, j: j - 1, k })
    }

    pub(crate) fn from_zero_based(i: usize, j: usize, k: i64) -> Self {
        debug_assert_ne!(i, j);
        AffineRoot { i, j, k }
    }

    /// 0-based.
    pub fn i(&self) -> usize {
        self.i
    }

    /// 0-based.
    pub fn j(&self) -> usize {
        self.j
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// Positive on the base alcove `x₁ > ⋯ > xₙ > x₁ − 1`.
    pub fn is_positive(&self) -> bool {
        self.k > 0 || (self.k == 0 && self.i < self.j)
    }

    /// All affine roots of rank `n` with `|k| ≤ bound`.
    pub fn all_bounded(n: usize, bound: i64) -> impl Iterator<Item = AffineRoot> {
        (0..n).flat_map(move |i| {
            (0..n).filter(move |&j| j != i).flat_map(move |j| (-bound..=bound).map(move |k| AffineRoot { i, j, k }))
        })
    }
}

impl fmt::Display for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ{},{}{:+}δ", self.i + 1, self.j + 1, self.k)
    }
}

impl fmt::Debug for AffineRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A simple affine reflection: index 0 is `s₀ = t^{(1,0,…,0,−1)}·(1 n)`,
/// index `i ≥ 1` is `s_i = (i i+1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SimpleAffineReflection(pub usize);

impl SimpleAffineReflection {
    pub fn element(self, n: usize) -> AffWeylElt {
        assert!(n >= 2 && self.0 < n, "s_{} undefined for n = {n}", self.0);
        if self.0 == 0 {
            let mut lambda = vec![0; n];
            lambda[0] = 1;
            lambda[n - 1] = -1;
            AffWeylElt::new(Cocharacter(lambda), Permutation::transposition(n, 1, n)).unwrap()
        } else {
            AffWeylElt::finite(Permutation::simple(n, self.0))
        }
    }

    /// `S̃ = {s₀, s₁, …, s_{n−1}}` in index order.
    pub fn all(n: usize) -> impl Iterator<Item = SimpleAffineReflection> {
        let count = if n >= 2 { n } else { 0 };
        (0..count).map(SimpleAffineReflection)
    }
}

impl fmt::Display for SimpleAffineReflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positivity() {
        assert!(AffineRoot::new(1, 2, 0).unwrap().is_positive());
        assert!(!AffineRoot::new(2, 1, 0).unwrap().is_positive());
        assert!(AffineRoot::new(2, 1, 1).unwrap().is_positive());
        assert!(!AffineRoot::new(1, 2, -1).unwrap().is_positive());
        assert!(AffineRoot::new(1, 1, 0).is_err());
    }

    #[test]
    fn simple_reflections_have_length_one() {
        for n in 2..7 {
            for s in SimpleAffineReflection::all(n) {
                let e = s.element(n);
                assert_eq!(e.length(), 1, "{s} for n = {n}");
                assert!((&e * &e).is_identity());
            }
        }
    }

    #[test]
    fn simple_reflections_negate_their_simple_root() {
        // s_i sends its simple affine root to its negative.
        let n = 4;
        let s0 = SimpleAffineReflection(0).element(n);
        let chi0 = AffineRoot::new(n, 1, 1).unwrap();
        assert_eq!(s0.act_on_affine_root(&chi0), AffineRoot::new(1, n, -1).unwrap());
        for i in 1..n {
            let si = SimpleAffineReflection(i).element(n);
            let a = AffineRoot::new(i, i + 1, 0).unwrap();
            assert_eq!(si.act_on_affine_root(&a), AffineRoot::new(i + 1, i, 0).unwrap());
        }
    }
}

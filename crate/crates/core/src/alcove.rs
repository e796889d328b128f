//! Projections `p1`, `p2`, Newton vectors, the Kottwitz map and the
//! dominance order.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::weyl::{AffWeylElt, Cocharacter, Permutation};
use crate::{Error, Result};

pub type Rational = Ratio<i64>;

/// A vector of exact rationals. Serializes as fraction strings (`"1/2"`).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalVector(pub Vec<Rational>);

impl RationalVector {
    pub fn from_integers(v: &[i64]) -> Self {
        RationalVector(v.iter().map(|&x| Rational::from_integer(x)).collect())
    }

    pub fn central(n: usize, value: Rational) -> Self {
        RationalVector(vec![value; n])
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Compares against an integer vector entrywise.
    pub fn equals_integers(&self, v: &[i64]) -> bool {
        self.0.len() == v.len() && self.0.iter().zip(v).all(|(a, &b)| *a == Rational::from_integer(b))
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for RationalVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.0.iter().map(|x| x.to_string()))
    }
}

/// The basic σ-conjugacy class with Kottwitz invariant `kappa` in `GL_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct BasicClass {
    pub kappa: i64,
    pub n: usize,
}

impl BasicClass {
    pub fn new(kappa: i64, n: usize) -> Self {
        assert!(n >= 1);
        BasicClass { kappa, n }
    }

    /// The unique basic class in `B(G, λ)`.
    pub fn for_cocharacter(lambda: &Cocharacter) -> Self {
        BasicClass::new(lambda.sum(), lambda.n())
    }

    /// `n′ = gcd(κ, n)`.
    pub fn n_prime(&self) -> usize {
        (self.kappa.rem_euclid(self.n as i64) as usize).gcd(&self.n)
    }

    /// `n₀ = n / n′`.
    pub fn n0(&self) -> usize {
        self.n / self.n_prime()
    }

    /// `k₀ = [κ]_n / n′`, coprime to `n₀`.
    pub fn k0(&self) -> usize {
        self.kappa.rem_euclid(self.n as i64) as usize / self.n_prime()
    }

    /// `def(b) = n − n′`.
    pub fn defect(&self) -> usize {
        self.n - self.n_prime()
    }

    pub fn newton(&self) -> RationalVector {
        RationalVector::central(self.n, Rational::new(self.kappa, self.n as i64))
    }

    /// The class of `b*` with `κ(b*) = −κ(b)`.
    pub fn dual(&self) -> Self {
        BasicClass::new(-self.kappa, self.n)
    }
}

pub fn p1(w: &AffWeylElt) -> Permutation {
    w.finite_part().clone()
}

/// Interior point of the base alcove `{x₁ > ⋯ > xₙ > x₁ − 1}`,
/// `p_i = (n−i)/(2n)`, scaled by `2n` so that it is integral.
fn scaled_base_point(n: usize) -> Vec<i64> {
    (0..n).map(|a| (n - 1 - a) as i64).collect()
}

/// The unique `v ∈ W₀` with `v⁻¹·w𝔞` in the dominant chamber.
pub fn p2(w: &AffWeylElt) -> Permutation {
    let n = w.n();
    let scale = 2 * n as i64;
    // w·p = u·p + λ, in units of 1/(2n).
    let moved = w.finite_part().act(&scaled_base_point(n));
    let image: Vec<i64> = moved.iter().zip(w.transl().entries()).map(|(p, l)| p + scale * l).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| image[b].cmp(&image[a]));
    // Distinct coordinates differ by a nonzero multiple of 2n plus at most
    // n−1, so the image never lies on a wall.
    assert!(order.windows(2).all(|p| image[p[0]] > image[p[1]]), "alcove point on a wall");
    Permutation::from_zero_based(order)
}

/// Newton vector: averages of the translation part over the cycles of the
/// finite part, sorted decreasingly.
pub fn newton(w: &AffWeylElt) -> RationalVector {
    let n = w.n();
    let lambda = w.transl().entries();
    let mut out = vec![Rational::from_integer(0); n];
    for cycle in w.finite_part().cycles() {
        let total: i64 = cycle.iter().map(|&i| lambda[i]).sum();
        let avg = Rational::new(total, cycle.len() as i64);
        for &i in &cycle {
            out[i] = avg;
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    RationalVector(out)
}

pub fn kottwitz(w: &AffWeylElt) -> i64 {
    w.kappa()
}

/// Dominance order on dominant cocharacters: equal sums and prefix sums of
/// `lambda` bounded by those of `mu`.
pub fn dominance_leq(lambda: &Cocharacter, mu: &Cocharacter) -> Result<bool> {
    lambda.require_dominant()?;
    mu.require_dominant()?;
    if lambda.n() != mu.n() {
        return Err(Error::DimensionMismatch(lambda.n(), mu.n()));
    }
    dominance_leq_rational(&RationalVector::from_integers(lambda.entries()), mu)
}

/// `ν ⪯ λ` for a dominant rational `ν` (e.g. a Newton vector).
pub fn dominance_leq_rational(nu: &RationalVector, lambda: &Cocharacter) -> Result<bool> {
    lambda.require_dominant()?;
    if !nu.is_dominant() {
        return Err(Error::InvalidParams(format!("rational vector {nu} is not dominant")));
    }
    if nu.0.len() != lambda.n() {
        return Err(Error::DimensionMismatch(nu.0.len(), lambda.n()));
    }
    let mut a = Rational::from_integer(0);
    let mut b = Rational::from_integer(0);
    for (x, &y) in nu.0.iter().zip(lambda.entries()) {
        a += x;
        b += Rational::from_integer(y);
        if a > b {
            return Ok(false);
        }
    }
    Ok(a == b)
}

/// `λ* = (−λₙ, …, −λ₁)`, the cocharacter of the dual lattice.
pub fn dual_cocharacter(lambda: &Cocharacter) -> Cocharacter {
    Cocharacter(lambda.entries().iter().rev().map(|x| -x).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::SimpleAffineReflection;

    fn elt(s: &str) -> AffWeylElt {
        s.parse().unwrap()
    }

    fn word(n: usize, letters: &[usize]) -> AffWeylElt {
        AffWeylElt::finite(Permutation::from_word(n, letters))
    }

    /// `A_j = s_j⋯s₁·(τ t^{λ_{0,r}})·s₁⋯s_{j−1}`.
    fn a_j(n: usize, r: i64, kappa: i64, j: usize) -> AffWeylElt {
        let mut lambda = vec![-r; n];
        lambda[0] = (n as i64 - 1) * r + kappa;
        let a_prime = &AffWeylElt::finite(Permutation::long_cycle(n)) * &AffWeylElt::translation(Cocharacter(lambda));
        let left: Vec<usize> = (1..=j).rev().collect();
        let right: Vec<usize> = (1..j).collect();
        &(&word(n, &left) * &a_prime) * &word(n, &right)
    }

    #[test]
    fn p1_examples() {
        assert!(p1(&AffWeylElt::translation(Cocharacter(vec![2, 0, 1]))).is_identity());
        assert_eq!(p1(&SimpleAffineReflection(0).element(4)), Permutation::transposition(4, 1, 4));
        for n in 2..=5 {
            for j in 1..n {
                let expected: Vec<usize> = (1..j).chain(j + 1..n).collect();
                assert_eq!(p1(&a_j(n, 1, 0, j)), Permutation::from_word(n, &expected));
            }
        }
    }

    #[test]
    fn p2_examples() {
        assert!(p2(&AffWeylElt::identity(4)).is_identity());
        assert!(p2(&AffWeylElt::translation(Cocharacter(vec![3, 1, 0]))).is_identity());
        for n in 2..=5 {
            for (r, kappa) in [(1, 0), (0, 1), (1, 1)] {
                for j in 1..n {
                    let expected: Vec<usize> = (j + 1..n).collect();
                    assert_eq!(p2(&a_j(n, r, kappa, j)), Permutation::from_word(n, &expected), "n={n} j={j}");
                }
            }
        }
    }

    #[test]
    fn newton_examples() {
        let s0 = SimpleAffineReflection(0).element(5);
        assert_eq!(newton(&s0), RationalVector::from_integers(&[0; 5]));
        let w0 = Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap();
        for m in [1i64, 2, 3, 7] {
            let w = AffWeylElt::from_right_translation(w0.clone(), &Cocharacter(vec![m, m, 0, 0]).permuted(&w0.inverse()))
                .unwrap();
            assert_eq!(newton(&w), RationalVector::central(4, Rational::new(m, 2)));
        }
        assert_eq!(newton(&elt("t[0,3,-1]*p[1,2,3]")), RationalVector::from_integers(&[3, 0, -1]));
    }

    #[test]
    fn kottwitz_examples() {
        assert_eq!(kottwitz(&elt("t[3,-1,-1]*p[2,3,1]")), 1);
        assert_eq!(kottwitz(&AffWeylElt::identity(3)), 0);
        assert_eq!(kottwitz(&AffWeylElt::eta(4)), 1);
    }

    #[test]
    fn dominance_examples() {
        let c = |v: &[i64]| Cocharacter(v.to_vec());
        assert!(dominance_leq(&c(&[2, 1, 0]), &c(&[2, 1, 0])).unwrap());
        assert!(dominance_leq(&c(&[1, 1, 0]), &c(&[2, 0, 0])).unwrap());
        assert!(!dominance_leq(&c(&[2, 0, 0]), &c(&[1, 1, 0])).unwrap());
        assert!(matches!(dominance_leq(&c(&[0, 1]), &c(&[1, 0])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn dual_examples() {
        let c = |v: &[i64]| Cocharacter(v.to_vec());
        for (n, r, kappa) in [(3usize, 1i64, 1i64), (4, 2, 0), (5, 0, 3)] {
            let mut lambda = vec![-r; n];
            lambda[0] = (n as i64 - 1) * r + kappa;
            let mut expected = vec![r; n];
            expected[n - 1] = -(n as i64 - 1) * r - kappa;
            assert_eq!(dual_cocharacter(&c(&lambda)), c(&expected));
        }
        assert_eq!(dual_cocharacter(&c(&[0, 0, 0])), c(&[0, 0, 0]));
        assert_eq!(dual_cocharacter(&c(&[3, -1, -1, -2])), c(&[2, 1, 1, -3]));
    }

    #[test]
    fn basic_class_parameters() {
        let b = BasicClass::new(2, 6);
        assert_eq!((b.n_prime(), b.n0(), b.k0(), b.defect()), (2, 3, 1, 4));
        let b = BasicClass::new(0, 4);
        assert_eq!((b.n_prime(), b.n0(), b.k0(), b.defect()), (4, 1, 0, 0));
        let b = BasicClass::new(-1, 3);
        assert_eq!((b.n_prime(), b.k0()), (1, 2));
        assert_eq!(BasicClass::new(1, 3).newton().sum(), Rational::from_integer(1));
    }
}

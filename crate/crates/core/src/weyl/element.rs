use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{AffineRoot, Permutation};
use crate::{Error, Result};

/// A cocharacter of the diagonal torus, i.e. a vector in `ℤⁿ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cocharacter(pub Vec<i64>);

impl Cocharacter {
    pub fn new(entries: Vec<i64>) -> Self {
        Cocharacter(entries)
    }

    pub fn zero(n: usize) -> Self {
        Cocharacter(vec![0; n])
    }

    pub fn central(n: usize, m: i64) -> Self {
        Cocharacter(vec![m; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_central(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn dominant_sort(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Cocharacter(v)
    }

    pub fn permuted(&self, u: &Permutation) -> Self {
        Cocharacter(u.act(&self.0))
    }

    pub fn shifted(&self, m: i64) -> Self {
        Cocharacter(self.0.iter().map(|x| x + m).collect())
    }

    pub fn neg(&self) -> Self {
        Cocharacter(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Cocharacter) -> Self {
        assert_eq!(self.n(), other.n());
        Cocharacter(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.0.clone()))
        }
    }
}

impl fmt::Display for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

impl fmt::Debug for Cocharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An element `t^λ·u` of the extended affine Weyl group `X_*(T) ⋊ S_n`.
///
/// The translation sits on the left. The group law is
/// `(t^λ u)(t^μ v) = t^{λ + u·μ}(uv)`, and `w` acts on `ℝⁿ` by
/// `x ↦ u·x + λ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffWeylElt {
    transl: Cocharacter,
    finite: Permutation,
}

impl AffWeylElt {
    pub fn new(transl: Cocharacter, finite: Permutation) -> Result<Self> {
        if transl.n() != finite.n() {
            return Err(Error::DimensionMismatch(transl.n(), finite.n()));
        }
        Ok(AffWeylElt { transl, finite })
    }

    pub fn identity(n: usize) -> Self {
        AffWeylElt { transl: Cocharacter::zero(n), finite: Permutation::identity(n) }
    }

    pub fn translation(lambda: Cocharacter) -> Self {
        let n = lambda.n();
        AffWeylElt { transl: lambda, finite: Permutation::identity(n) }
    }

    pub fn finite(u: Permutation) -> Self {
        let n = u.n();
        AffWeylElt { transl: Cocharacter::zero(n), finite: u }
    }

    /// `u·t^μ`, converted to translation-left form `t^{u·μ}·u`.
    pub fn from_right_translation(u: Permutation, mu: &Cocharacter) -> Result<Self> {
        if mu.n() != u.n() {
            return Err(Error::DimensionMismatch(mu.n(), u.n()));
        }
        Ok(AffWeylElt { transl: mu.permuted(&u), finite: u })
    }

    /// The length-zero generator `η = t^{(1,0,…,0)}·(1 2 ⋯ n)`.
    pub fn eta(n: usize) -> Self {
        let mut lambda = vec![0; n];
        lambda[0] = 1;
        AffWeylElt { transl: Cocharacter(lambda), finite: Permutation::long_cycle(n) }
    }

    /// `η^k` for any integer `k`.
    pub fn eta_pow(n: usize, k: i64) -> Self {
        let base = if k >= 0 { Self::eta(n) } else { Self::eta(n).inverse() };
        (0..k.unsigned_abs()).fold(Self::identity(n), |acc, _| &acc * &base)
    }

    pub fn n(&self) -> usize {
        self.finite.n()
    }

    pub fn transl(&self) -> &Cocharacter {
        &self.transl
    }

    pub fn finite_part(&self) -> &Permutation {
        &self.finite
    }

    pub fn is_identity(&self) -> bool {
        self.finite.is_identity() && self.transl.0.iter().all(|&x| x == 0)
    }

    /// The pair `(u, μ)` with `self = u·t^μ`.
    pub fn right_form(&self) -> (Permutation, Cocharacter) {
        let inv = self.finite.inverse();
        (self.finite.clone(), self.transl.permuted(&inv))
    }

    pub fn compose(&self, other: &AffWeylElt) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(self.n(), other.n()));
        }
        let moved = other.transl.permuted(&self.finite);
        Ok(AffWeylElt { transl: self.transl.add(&moved), finite: &self.finite * &other.finite })
    }

    pub fn inverse(&self) -> Self {
        let inv = self.finite.inverse();
        AffWeylElt { transl: self.transl.neg().permuted(&inv), finite: inv }
    }

    /// `g·self·g⁻¹`.
    pub fn conjugate_by(&self, g: &AffWeylElt) -> Self {
        &(g * self) * &g.inverse()
    }

    /// Kottwitz invariant: the sum of the translation entries.
    pub fn kappa(&self) -> i64 {
        self.transl.sum()
    }

    /// Length via the closed formula for `u·t^μ`:
    /// `Σ_{i<j, u(i)>u(j)} |μ_i − μ_j + 1| + Σ_{i<j, u(i)<u(j)} |μ_i − μ_j|`.
    pub fn length(&self) -> usize {
        let (u, mu) = self.right_form();
        let n = self.n();
        let mut total = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                let pairing = mu.0[i] - mu.0[j];
                let term = if u.apply(i) > u.apply(j) { pairing + 1 } else { pairing };
                total += term.unsigned_abs();
            }
        }
        total as usize
    }

    /// The image of the affine root `α` (the affine function
    /// `x ↦ x_i − x_j + k`) under `w`, i.e. `α ∘ w⁻¹`.
    pub fn act_on_affine_root(&self, alpha: &AffineRoot) -> AffineRoot {
        let a = self.finite.apply(alpha.i());
        let b = self.finite.apply(alpha.j());
        let shift = self.transl.0[a] - self.transl.0[b];
        AffineRoot::from_zero_based(a, b, alpha.k() - shift)
    }

    /// `self^k` for `k ≥ 0`.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::identity(self.n()), |acc, _| &acc * self)
    }
}

impl Mul for &AffWeylElt {
    type Output = AffWeylElt;

    fn mul(self, rhs: &AffWeylElt) -> AffWeylElt {
        self.compose(rhs).expect("affine Weyl element rank mismatch")
    }
}

impl fmt::Display for AffWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t[{}]*p{}", self.transl.0.iter().join(","), self.finite)
    }
}

impl fmt::Debug for AffWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_bracketed<'a>(s: &'a str, prefix: &str) -> Result<&'a str> {
    s.strip_prefix(prefix)
        .and_then(|rest| rest.strip_prefix('['))
        .and_then(|rest| rest.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("expected {prefix}[…], got {s:?}")))
}

fn parse_list<T: FromStr>(body: &str) -> Result<Vec<T>> {
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    body.split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| Error::Parse(format!("bad entry {x:?}"))))
        .collect()
}

impl FromStr for AffWeylElt {
    type Err = Error;

    /// Parses `t[λ₁,…,λₙ]*p[u(1),…,u(n)]`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (t, p) = s.split_once('*').ok_or_else(|| Error::Parse(format!("missing '*' in {s:?}")))?;
        let lambda: Vec<i64> = parse_list(parse_bracketed(t, "t")?)?;
        let images: Vec<usize> = parse_list(parse_bracketed(p, "p")?)?;
        let u = Permutation::from_one_line(&images).map_err(|e| Error::Parse(e.to_string()))?;
        AffWeylElt::new(Cocharacter(lambda), u).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for AffWeylElt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for AffWeylElt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.one_line().serialize(serializer)
    }
}

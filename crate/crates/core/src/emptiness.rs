//! Non-emptiness of `X_x(b)` in the affine flag variety for basic `b`.
//!
//! `X_x(b) ≠ ∅` iff for every pair `(w₀, S′)` such that `x𝔞` is a
//! `^{w₀}P_{S′}`-alcove, `b` is σ-conjugate into the Levi `M_{S′}` with the
//! same `κ_{M_{S′}}` as `w₀⁻¹xw₀`. For basic `b` the latter means every
//! block of `S′` carries the slope `κ(b)/n`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::alcove::{p1, p2, BasicClass};
use crate::weyl::{AffWeylElt, Cocharacter, Permutation};
use crate::{Error, Result};

/// Largest rank for which the `n!·2^{n−1}` pair enumeration is attempted.
pub const MAX_PAIR_RANK: usize = 8;

/// A subset `S′ ⊆ S = {s₁, …, s_{n−1}}`, stored as a bitmask (bit `i−1` for `s_i`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviShape {
    n: usize,
    mask: u32,
}

impl LeviShape {
    pub fn full(n: usize) -> Self {
        LeviShape { n, mask: full_mask(n) }
    }

    pub fn empty(n: usize) -> Self {
        LeviShape { n, mask: 0 }
    }

    pub fn from_indices(n: usize, indices: &BTreeSet<usize>) -> Result<Self> {
        let mut mask = 0;
        for &i in indices {
            if i == 0 || i >= n {
                return Err(Error::InvalidParams(format!("s_{i} is not a simple reflection for n = {n}")));
            }
            mask |= 1 << (i - 1);
        }
        Ok(LeviShape { n, mask })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i < self.n && self.mask & (1 << (i - 1)) != 0
    }

    pub fn is_full(&self) -> bool {
        self.mask == full_mask(self.n)
    }

    pub fn indices(&self) -> BTreeSet<usize> {
        (1..self.n).filter(|&i| self.contains(i)).collect()
    }

    /// Block composition `(n₁, …, n_m)` of `n` cut at the simple reflections
    /// missing from `S′`.
    pub fn blocks(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut size = 1;
        for i in 1..self.n {
            if self.contains(i) {
                size += 1;
            } else {
                out.push(size);
                size = 1;
            }
        }
        out.push(size);
        out
    }

    /// Block index of each coordinate (0-based).
    fn block_of(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n);
        let mut block = 0;
        for a in 0..self.n {
            if a > 0 && !self.contains(a) {
                block += 1;
            }
            out.push(block);
        }
        out
    }

    /// All `2^{n−1}` subsets.
    pub fn all(n: usize) -> impl Iterator<Item = LeviShape> {
        (0..=full_mask(n)).map(move |mask| LeviShape { n, mask })
    }
}

fn full_mask(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        (1u32 << (n - 1)) - 1
    }
}

fn support_mask(u: &Permutation) -> u32 {
    u.support().into_iter().fold(0, |m, i| m | 1 << (i - 1))
}

impl fmt::Debug for LeviShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "S'{:?}", self.indices())
    }
}

impl Serialize for LeviShape {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.indices())
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct PAlcovePair {
    pub w0: Permutation,
    pub levi: LeviShape,
}

/// Iwahori valuation pattern for the lower-triangular Iwahori: entries above
/// the diagonal lie in `𝔭`.
#[inline]
fn iwahori_valuation(a: usize, b: usize) -> i64 {
    if a < b {
        1
    } else {
        0
    }
}

/// Per-`w₀` data: the conjugate `w₀⁻¹xw₀`, and for each pair `a < b` whether
/// the root `χ_{w₀(a), w₀(b)}` satisfies the alcove inequality.
struct Conjugated {
    conj: AffWeylElt,
    support: u32,
    root_ok: Vec<Vec<bool>>,
}

impl Conjugated {
    fn new(x: &AffWeylElt, w0: &Permutation) -> Self {
        let n = x.n();
        let w0e = AffWeylElt::finite(w0.clone());
        let conj = &(&w0e.inverse() * x) * &w0e;
        let support = support_mask(conj.finite_part());
        let lambda = x.transl().entries();
        let u_inv = x.finite_part().inverse();
        let mut root_ok = vec![vec![true; n]; n];
        for a in 0..n {
            for b in a + 1..n {
                let (i, j) = (w0.apply(a), w0.apply(b));
                let val = lambda[i] - lambda[j] + iwahori_valuation(u_inv.apply(i), u_inv.apply(j));
                root_ok[a][b] = val >= iwahori_valuation(i, j);
            }
        }
        Conjugated { conj, support, root_ok }
    }

    fn is_p_alcove(&self, levi: &LeviShape) -> bool {
        if self.support & !levi.mask != 0 {
            return false;
        }
        let block = levi.block_of();
        let n = block.len();
        (0..n).all(|a| (a + 1..n).all(|b| block[a] == block[b] || self.root_ok[a][b]))
    }

    /// Block-wise slopes of the translation part all equal `κ(b)/n`.
    fn slopes_match(&self, levi: &LeviShape, b: &BasicClass) -> bool {
        let n = b.n as i64;
        let lambda = self.conj.transl().entries();
        let mut start = 0;
        levi.blocks().into_iter().all(|size| {
            let k: i64 = lambda[start..start + size].iter().sum();
            start += size;
            k * n == b.kappa * size as i64
        })
    }
}

fn check_rank(n: usize) -> Result<()> {
    if n > MAX_PAIR_RANK {
        Err(Error::guard("rank for P-alcove enumeration", n, MAX_PAIR_RANK))
    } else {
        Ok(())
    }
}

/// Whether `x𝔞` is a `^{w₀}P_{S′}`-alcove.
pub fn is_p_alcove(x: &AffWeylElt, w0: &Permutation, levi: &LeviShape) -> Result<bool> {
    if x.n() != w0.n() || x.n() != levi.n() {
        return Err(Error::DimensionMismatch(x.n(), w0.n().max(levi.n())));
    }
    Ok(Conjugated::new(x, w0).is_p_alcove(levi))
}

/// Every `(w₀, S′)` for which `x𝔞` is a `^{w₀}P_{S′}`-alcove.
pub fn p_alcove_pairs(x: &AffWeylElt) -> Result<Vec<PAlcovePair>> {
    let n = x.n();
    check_rank(n)?;
    let mut out = Vec::new();
    for w0 in Permutation::all(n) {
        let data = Conjugated::new(x, &w0);
        for levi in LeviShape::all(n) {
            if data.is_p_alcove(&levi) {
                out.push(PAlcovePair { w0: w0.clone(), levi });
            }
        }
    }
    Ok(out)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct NonemptyVerdict {
    pub element: AffWeylElt,
    pub kappa_b: i64,
    pub nonempty: bool,
    /// The P-alcove pairs whose Levi condition fails; empty iff `nonempty`.
    pub witnesses: Vec<PAlcovePair>,
}

fn scan(x: &AffWeylElt, b: &BasicClass, collect: bool) -> Result<Vec<PAlcovePair>> {
    let n = x.n();
    if n != b.n {
        return Err(Error::DimensionMismatch(n, b.n));
    }
    check_rank(n)?;
    let mut failing = Vec::new();
    if x.kappa() != b.kappa {
        failing.push(PAlcovePair { w0: Permutation::identity(n), levi: LeviShape::full(n) });
        if !collect {
            return Ok(failing);
        }
    }
    for w0 in Permutation::all(n) {
        let data = Conjugated::new(x, &w0);
        for levi in LeviShape::all(n) {
            if levi.is_full() || data.support & !levi.mask != 0 {
                continue;
            }
            if data.is_p_alcove(&levi) && !data.slopes_match(&levi, b) {
                failing.push(PAlcovePair { w0: w0.clone(), levi });
                if !collect {
                    return Ok(failing);
                }
            }
        }
    }
    Ok(failing)
}

/// Decides `X_x(b) ≠ ∅` for basic `b`.
pub fn nonempty_basic(x: &AffWeylElt, b: &BasicClass) -> Result<bool> {
    Ok(scan(x, b, false)?.is_empty())
}

/// Like [`nonempty_basic`], also reporting every failing pair.
pub fn nonempty_verdict(x: &AffWeylElt, b: &BasicClass) -> Result<NonemptyVerdict> {
    let witnesses = scan(x, b, true)?;
    Ok(NonemptyVerdict { element: x.clone(), kappa_b: b.kappa, nonempty: witnesses.is_empty(), witnesses })
}

/// `p₂(w)⁻¹p₁(w)p₂(w)`.
pub fn conjugated_finite_part(w: &AffWeylElt) -> Permutation {
    let v = p2(w);
    &(&v.inverse() * &p1(w)) * &v
}

/// Sufficient condition for `X_w(b) = ∅`: the translation part of
/// `w = t^λ·u` differs from `ν_b` and `p₂⁻¹p₁p₂` lies in a proper standard
/// parabolic subgroup.
pub fn empty_shortcut(w: &AffWeylElt, b: &BasicClass) -> bool {
    let n = w.n() as i64;
    let is_newton = w.transl().entries().iter().all(|&x| x * n == b.kappa);
    if is_newton {
        return false;
    }
    conjugated_finite_part(w).support().len() < w.n().saturating_sub(1)
}

/// The basic class lies in `B(G, λ)` iff `κ(b) = Σλᵢ`.
pub fn basic_in_bg_lambda(b: &BasicClass, lambda: &Cocharacter) -> Result<bool> {
    lambda.require_dominant()?;
    if lambda.n() != b.n {
        return Err(Error::DimensionMismatch(lambda.n(), b.n));
    }
    Ok(lambda.sum() == b.kappa)
}

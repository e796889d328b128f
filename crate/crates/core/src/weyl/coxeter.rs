use std::collections::BTreeSet;

use super::{AffWeylElt, SimpleAffineReflection};
use crate::{Error, Result};

/// `w = s_{i_1} ⋯ s_{i_k} · η^{omega_power}` with `k = ℓ(w)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OmegaDecomposition {
    pub word: Vec<SimpleAffineReflection>,
    pub omega_power: i64,
}

impl OmegaDecomposition {
    pub fn reassemble(&self, n: usize) -> AffWeylElt {
        let wa = word_product(n, &self.word);
        &wa * &AffWeylElt::eta_pow(n, self.omega_power)
    }
}

pub fn word_product(n: usize, word: &[SimpleAffineReflection]) -> AffWeylElt {
    word.iter().fold(AffWeylElt::identity(n), |acc, s| &acc * &s.element(n))
}

/// Smallest-index left descent in `S̃`, if any.
pub fn first_left_descent(w: &AffWeylElt) -> Option<SimpleAffineReflection> {
    let n = w.n();
    let len = w.length();
    SimpleAffineReflection::all(n).find(|s| (&s.element(n) * w).length() < len)
}

/// Peels left descents (smallest index first) until a length-zero
/// remainder `η^k` is reached.
pub fn decompose(w: &AffWeylElt) -> Result<OmegaDecomposition> {
    let n = w.n();
    let mut word = Vec::with_capacity(w.length());
    let mut cur = w.clone();
    while cur.length() > 0 {
        let s = first_left_descent(&cur)
            .ok_or_else(|| Error::Internal(format!("no descent for {cur} of length {}", cur.length())))?;
        cur = &s.element(n) * &cur;
        word.push(s);
    }
    let omega_power = cur.kappa();
    if cur != AffWeylElt::eta_pow(n, omega_power) {
        return Err(Error::Internal(format!("length-zero remainder {cur} is not a power of η")));
    }
    Ok(OmegaDecomposition { word, omega_power })
}

/// Bruhat order on the extended affine Weyl group: equal `Ω`-components and
/// Bruhat order on the `W_a`-parts.
///
/// Uses the lifting property: for a left descent `s` of `y`,
/// `x ≤ y ⇔ min(x, sx) ≤ sy`.
pub fn bruhat_leq(x: &AffWeylElt, y: &AffWeylElt) -> Result<bool> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch(x.n(), y.n()));
    }
    // Ω ≅ ℤ through κ, and W_a lies in the kernel of κ.
    if x.kappa() != y.kappa() {
        return Ok(false);
    }
    let n = x.n();
    let mut x = x.clone();
    let mut y = y.clone();
    loop {
        let (lx, ly) = (x.length(), y.length());
        if lx > ly {
            return Ok(false);
        }
        if ly == 0 {
            return Ok(x == y);
        }
        if lx == ly {
            return Ok(x == y);
        }
        let s = first_left_descent(&y).ok_or_else(|| Error::Internal(format!("no descent for {y}")))?;
        let se = s.element(n);
        y = &se * &y;
        let sx = &se * &x;
        if sx.length() < lx {
            x = sx;
        }
    }
}

/// Products of all subwords of a reduced word of `y`, i.e. the Bruhat lower
/// interval `[·, y]` within the `Ω`-coset of `y`.
pub fn lower_interval(y: &AffWeylElt) -> Result<BTreeSet<AffWeylElt>> {
    let n = y.n();
    let dec = decompose(y)?;
    let omega = AffWeylElt::eta_pow(n, dec.omega_power);
    let mut prefixes: BTreeSet<AffWeylElt> = BTreeSet::from([AffWeylElt::identity(n)]);
    for s in &dec.word {
        let se = s.element(n);
        let extended: Vec<AffWeylElt> = prefixes.iter().map(|p| p * &se).collect();
        prefixes.extend(extended);
    }
    Ok(prefixes.into_iter().map(|p| &p * &omega).collect())
}

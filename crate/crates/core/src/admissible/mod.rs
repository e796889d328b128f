//! Admissible sets, minimal coset representatives and `SAdm(λ)°`.

mod classify;
mod family;

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::alcove::p1;
use crate::weyl::{lower_interval, AffWeylElt, Cocharacter, Permutation};
use crate::{Error, Result};

pub use classify::{
    classify_by_criteria, classify_by_criteria_bounded, classify_closed_form, ClassificationVerdict, Form,
    FormMatch, StratumWitness,
};
pub use family::{dimension_formula, make_family, DimensionReport, Family, FamilyParams};

/// Longest translation for which [`adm_set`] enumerates subwords.
pub const MAX_ADM_LENGTH: usize = 12;
/// Default rank guard for [`s_adm_circ`].
pub const MAX_SADM_RANK: usize = 6;

/// The `W₀`-orbit of `λ`: its distinct coordinate permutations.
pub fn translation_orbit(lambda: &Cocharacter) -> BTreeSet<Cocharacter> {
    let n = lambda.n();
    lambda.entries().iter().copied().permutations(n).map(Cocharacter).collect()
}

/// Dominant cocharacters of rank `n` with entries in `[lo, hi]`, in
/// lexicographic order.
pub fn dominant_cocharacters(n: usize, lo: i64, hi: i64) -> Vec<Cocharacter> {
    let mut out: Vec<Cocharacter> = (lo..=hi)
        .rev()
        .combinations_with_replacement(n)
        .map(Cocharacter)
        .collect();
    out.sort();
    out
}

/// `Adm(λ) = {w : w ≤ t^{λ′} for some λ′ ∈ W₀λ}`.
pub fn adm_set(lambda: &Cocharacter) -> Result<BTreeSet<AffWeylElt>> {
    let top = AffWeylElt::translation(lambda.clone());
    let len = top.length();
    if len > MAX_ADM_LENGTH {
        return Err(Error::guard("length of t^λ for Adm(λ)", len, MAX_ADM_LENGTH));
    }
    let mut out = BTreeSet::new();
    for mu in translation_orbit(lambda) {
        out.extend(lower_interval(&AffWeylElt::translation(mu))?);
    }
    Ok(out)
}

/// Minimal length in its coset `W₀w`.
pub fn is_min_coset_rep(w: &AffWeylElt) -> bool {
    let n = w.n();
    let len = w.length();
    (1..n).all(|i| (&AffWeylElt::finite(Permutation::simple(n, i)) * w).length() > len)
}

/// `SAdm(λ)° = ˢW̃ ∩ W₀t^λW₀`.
pub fn s_adm_circ(lambda: &Cocharacter) -> Result<BTreeSet<AffWeylElt>> {
    s_adm_circ_bounded(lambda, MAX_SADM_RANK)
}

pub fn s_adm_circ_bounded(lambda: &Cocharacter, max_rank: usize) -> Result<BTreeSet<AffWeylElt>> {
    lambda.require_dominant()?;
    let n = lambda.n();
    if n > max_rank {
        return Err(Error::guard("rank for SAdm(λ)°", n, max_rank));
    }
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut out = BTreeSet::new();
    // W₀t^λW₀ = {t^{λ′}u : λ′ ∈ W₀λ, u ∈ W₀}
    for mu in translation_orbit(lambda) {
        for u in &perms {
            let w = AffWeylElt::new(mu.clone(), u.clone())?;
            if is_min_coset_rep(&w) {
                out.insert(w);
            }
        }
    }
    Ok(out)
}

/// Elements of `SAdm(λ)°` whose finite part is a Coxeter element.
pub fn s_adm_circ_cox(lambda: &Cocharacter) -> Result<BTreeSet<AffWeylElt>> {
    s_adm_circ_cox_bounded(lambda, MAX_SADM_RANK)
}

pub fn s_adm_circ_cox_bounded(lambda: &Cocharacter, max_rank: usize) -> Result<BTreeSet<AffWeylElt>> {
    Ok(s_adm_circ_bounded(lambda, max_rank)?.into_iter().filter(|w| p1(w).is_coxeter()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::bruhat_leq;

    fn c(v: &[i64]) -> Cocharacter {
        Cocharacter(v.to_vec())
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(translation_orbit(&c(&[0, 0, 0])).len(), 1);
        assert_eq!(translation_orbit(&c(&[1, 0, 0])).len(), 3);
        assert_eq!(translation_orbit(&c(&[2, 1, 0])).len(), 6);
        assert_eq!(translation_orbit(&c(&[1, 1, 0, 0])).len(), 6);
    }

    #[test]
    fn dominant_grid() {
        let grid = dominant_cocharacters(3, -1, 1);
        assert_eq!(grid.len(), 10);
        assert!(grid.iter().all(Cocharacter::is_dominant));
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn adm_examples() {
        assert_eq!(adm_set(&c(&[0, 0, 0])).unwrap(), BTreeSet::from([AffWeylElt::identity(3)]));
        let adm = adm_set(&c(&[1, 0])).unwrap();
        let expected = BTreeSet::from([
            AffWeylElt::translation(c(&[1, 0])),
            AffWeylElt::translation(c(&[0, 1])),
            AffWeylElt::eta(2),
        ]);
        assert_eq!(adm, expected);
        assert!(matches!(adm_set(&c(&[7, 0, -7])), Err(Error::Guard { .. })));
    }

    #[test]
    fn adm_matches_bruhat_filter() {
        // Everything in the Ω-coset of length ≤ ℓ(t^λ) that lies below some
        // translation, found through the lifting-property comparison.
        let lambda = c(&[1, 0, 0]);
        let adm = adm_set(&lambda).unwrap();
        let tops: Vec<AffWeylElt> = translation_orbit(&lambda).into_iter().map(AffWeylElt::translation).collect();
        let mut filtered = BTreeSet::new();
        for mu in crate::admissible::dominant_cocharacters(3, -1, 2)
            .iter()
            .flat_map(translation_orbit)
            .filter(|m| m.sum() == 1)
        {
            for u in Permutation::all(3) {
                let w = AffWeylElt::new(mu.clone(), u).unwrap();
                if tops.iter().any(|t| bruhat_leq(&w, t).unwrap()) {
                    filtered.insert(w);
                }
            }
        }
        assert_eq!(adm, filtered);
        assert_eq!(adm.len(), 7);
    }

    #[test]
    fn min_coset_rep_examples() {
        assert!(is_min_coset_rep(&AffWeylElt::identity(3)));
        assert!(!is_min_coset_rep(&AffWeylElt::finite(Permutation::simple(3, 1))));
        // Hypothesis of the coxlemm: w₀(k) > w₀(l), k < l ⇒ m_{w₀(k)} < m_{w₀(l)}
        let lambda = c(&[3, 1, 1, 0]);
        for w0 in Permutation::all(4) {
            let ok = (0..4).all(|k| {
                (k + 1..4).all(|l| w0.apply(k) < w0.apply(l) || lambda.0[w0.apply(k)] < lambda.0[w0.apply(l)])
            });
            if ok {
                let w = AffWeylElt::new(lambda.clone(), w0).unwrap();
                assert!(is_min_coset_rep(&w));
                assert!(s_adm_circ(&lambda).unwrap().contains(&w));
            }
        }
    }

    #[test]
    fn sadm_of_zero_is_identity() {
        assert_eq!(s_adm_circ(&c(&[0, 0, 0])).unwrap(), BTreeSet::from([AffWeylElt::identity(3)]));
        assert!(s_adm_circ_cox(&c(&[0, 0, 0])).unwrap().is_empty());
        assert!(s_adm_circ(&c(&[0, 1])).is_err());
        assert!(matches!(s_adm_circ(&Cocharacter::zero(7)), Err(Error::Guard { .. })));
    }

    #[test]
    fn sadm_size_is_orbit_size() {
        for lambda in dominant_cocharacters(4, -1, 2) {
            let sadm = s_adm_circ(&lambda).unwrap();
            assert_eq!(sadm.len(), translation_orbit(&lambda).len(), "{lambda}");
        }
    }

    #[test]
    fn sadm_inside_adm() {
        for lambda in [c(&[1, 0, 0]), c(&[2, 0, -1]), c(&[1, 1, 0, 0]), c(&[2, 0, 0])] {
            let adm = adm_set(&lambda).unwrap();
            for w in s_adm_circ(&lambda).unwrap() {
                assert!(is_min_coset_rep(&w));
                assert!(adm.contains(&w), "{w} ∉ Adm({lambda})");
            }
        }
    }
}

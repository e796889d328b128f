use serde::Serialize;

use super::{s_adm_circ_bounded, MAX_SADM_RANK};
use crate::alcove::{p1, BasicClass};
use crate::emptiness::nonempty_verdict;
use crate::weyl::{AffWeylElt, Cocharacter};
use crate::Result;

/// The four parametric shapes of `λ_ad` for finite Coxeter type.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Form {
    /// `((n−1)r+κ, −r, …, −r)`
    F1,
    /// `(r, …, r, −(n−1)r−κ)`
    F2,
    /// `((n−1)r+1+κ, −r, …, −r, −r−1)`
    F3,
    /// `(r+1, r, …, r, −(n−1)r−1−κ)`
    F4,
}

impl Form {
    pub const ALL: [Form; 4] = [Form::F1, Form::F2, Form::F3, Form::F4];

    pub fn vector(self, n: usize, r: i64, kappa: i64) -> Cocharacter {
        let big = (n as i64 - 1) * r;
        let mut v = match self {
            Form::F1 | Form::F3 => vec![-r; n],
            Form::F2 | Form::F4 => vec![r; n],
        };
        match self {
            Form::F1 => v[0] = big + kappa,
            Form::F2 => v[n - 1] = -big - kappa,
            Form::F3 => {
                v[0] = big + 1 + kappa;
                v[n - 1] = -r - 1;
            }
            Form::F4 => {
                v[0] = r + 1;
                v[n - 1] = -big - 1 - kappa;
            }
        }
        Cocharacter(v)
    }

    /// The dual shape under `λ ↦ λ*`.
    pub fn dual(self) -> Form {
        match self {
            Form::F1 => Form::F2,
            Form::F2 => Form::F1,
            Form::F3 => Form::F4,
            Form::F4 => Form::F3,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct FormMatch {
    pub form: Form,
    pub r: i64,
    pub kappa: i64,
    /// `λ − form = shift·(1, …, 1)`.
    pub shift: i64,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct StratumWitness {
    pub element: AffWeylElt,
    pub nonempty: bool,
    pub reason: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ClassificationVerdict {
    pub is_finite_coxeter: bool,
    pub matched_form: Option<FormMatch>,
    pub witnesses: Vec<StratumWitness>,
}

/// `λ` is of finite Coxeter type iff `X_w(b) = ∅` for every non-Coxeter
/// `w ∈ SAdm(λ)°`, where `b` is the basic class in `B(G, λ)`.
pub fn classify_by_criteria(lambda: &Cocharacter) -> Result<ClassificationVerdict> {
    classify_by_criteria_bounded(lambda, MAX_SADM_RANK)
}

pub fn classify_by_criteria_bounded(lambda: &Cocharacter, max_rank: usize) -> Result<ClassificationVerdict> {
    lambda.require_dominant()?;
    let b = BasicClass::for_cocharacter(lambda);
    let mut witnesses = Vec::new();
    for w in s_adm_circ_bounded(lambda, max_rank)? {
        if p1(&w).is_coxeter() {
            continue;
        }
        let verdict = nonempty_verdict(&w, &b)?;
        let reason = match verdict.witnesses.first() {
            Some(pair) => format!("empty: P-alcove pair (w0={}, S'={:?}) violates the Levi slope", pair.w0, pair.levi.indices()),
            None => "nonempty: every P-alcove pair satisfies the Levi slope".to_string(),
        };
        witnesses.push(StratumWitness { element: w, nonempty: verdict.nonempty, reason });
    }
    let is_finite_coxeter = witnesses.iter().all(|w| !w.nonempty);
    Ok(ClassificationVerdict { is_finite_coxeter, matched_form: None, witnesses })
}

/// Matches `λ_ad` against the four forms, with `0 ≤ κ < n` and `r ≥ 1` when
/// `κ = 0`, `r ≥ 0` otherwise.
pub fn classify_closed_form(lambda: &Cocharacter) -> Result<ClassificationVerdict> {
    lambda.require_dominant()?;
    let matched_form = match_form(lambda);
    Ok(ClassificationVerdict { is_finite_coxeter: matched_form.is_some(), matched_form, witnesses: Vec::new() })
}

fn match_form(lambda: &Cocharacter) -> Option<FormMatch> {
    let n = lambda.n();
    if n == 0 {
        return None;
    }
    let e = lambda.entries();
    let spread = e[0] - e[n - 1];
    // Every form has spread at least n·r, so r ≤ spread/n.
    let r_max = spread / n as i64 + 1;
    for form in Form::ALL {
        for kappa in 0..n as i64 {
            let r_min = if kappa == 0 { 1 } else { 0 };
            for r in r_min..=r_max {
                let v = form.vector(n, r, kappa);
                let shift = e[0] - v.entries()[0];
                if e.iter().zip(v.entries()).all(|(a, b)| a - b == shift) {
                    return Some(FormMatch { form, r, kappa, shift });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::dual_cocharacter;
    use crate::admissible::dominant_cocharacters;

    fn c(v: &[i64]) -> Cocharacter {
        Cocharacter(v.to_vec())
    }

    #[test]
    fn criteria_examples() {
        assert!(classify_by_criteria(&c(&[3, -1, -1, -1])).unwrap().is_finite_coxeter);
        let v = classify_by_criteria(&c(&[2, 1, 0, 0])).unwrap();
        assert!(!v.is_finite_coxeter);
        assert!(v.witnesses.iter().any(|w| w.nonempty));
        assert!(!classify_by_criteria(&c(&[1, 0, 0, -1])).unwrap().is_finite_coxeter);
        assert!(classify_by_criteria(&c(&[0, 1])).is_err());
    }

    #[test]
    fn closed_form_examples() {
        let v = classify_closed_form(&c(&[3, -1, -1])).unwrap();
        assert_eq!(v.matched_form, Some(FormMatch { form: Form::F1, r: 1, kappa: 1, shift: 0 }));
        let v = classify_closed_form(&c(&[4, -1, -1, -2])).unwrap();
        assert_eq!(v.matched_form, Some(FormMatch { form: Form::F3, r: 1, kappa: 0, shift: 0 }));
        assert!(!classify_closed_form(&c(&[0, 0, 0])).unwrap().is_finite_coxeter);
        assert!(!classify_closed_form(&c(&[2, 1, 0])).unwrap().is_finite_coxeter);
    }

    #[test]
    fn rank_one_is_always_finite_coxeter() {
        for m in -3..=3 {
            assert!(classify_closed_form(&c(&[m])).unwrap().is_finite_coxeter);
            assert!(classify_by_criteria(&c(&[m])).unwrap().is_finite_coxeter);
        }
    }

    #[test]
    fn closed_form_is_duality_and_shift_invariant() {
        for n in 2..=5 {
            for lambda in dominant_cocharacters(n, -3, 3) {
                let v = classify_closed_form(&lambda).unwrap();
                let d = classify_closed_form(&dual_cocharacter(&lambda)).unwrap();
                assert_eq!(v.is_finite_coxeter, d.is_finite_coxeter, "{lambda}");
                let s = classify_closed_form(&lambda.shifted(5)).unwrap();
                assert_eq!(v.is_finite_coxeter, s.is_finite_coxeter);
            }
        }
    }

    #[test]
    fn form_vectors_have_kappa_sum() {
        for n in 2..6 {
            for form in Form::ALL {
                for r in 0..3 {
                    for kappa in 0..n as i64 {
                        let v = form.vector(n, r, kappa);
                        assert!(v.is_dominant());
                        let expected = if matches!(form, Form::F1 | Form::F3) { kappa } else { -kappa };
                        assert_eq!(v.sum(), expected);
                        assert_eq!(dual_cocharacter(&v), form.dual().vector(n, r, kappa));
                    }
                }
            }
        }
    }
}

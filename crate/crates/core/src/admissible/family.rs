use serde::Serialize;

use crate::alcove::{dual_cocharacter, BasicClass};
use crate::emptiness::basic_in_bg_lambda;
use crate::weyl::{AffWeylElt, Cocharacter, Permutation};
use crate::{Error, Result};

/// Parameters of the cocharacters `λ_{i,r}` attached to a basic class with
/// `0 ≤ κ < n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct FamilyParams {
    pub n: usize,
    pub i: u8,
    pub r: i64,
    pub kappa: i64,
}

impl FamilyParams {
    pub fn new(n: usize, i: u8, r: i64, kappa: i64) -> Result<Self> {
        let p = FamilyParams { n, i, r, kappa };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParams(format!("{msg}: {self:?}")));
        if self.n < 2 {
            return bad("rank must be at least 2");
        }
        if self.i > 1 {
            return bad("i must be 0 or 1");
        }
        if self.kappa < 0 || self.kappa >= self.n as i64 {
            return bad("kappa must lie in [0, n)");
        }
        if self.r < 0 || (self.kappa == 0 && self.r == 0) {
            return bad("r must be positive when kappa = 0 and non-negative otherwise");
        }
        Ok(())
    }

    /// Every valid parameter set with `n` in `ns`, `r ∈ rs`, `κ ∈ kappas`.
    pub fn grid(ns: &[usize], rs: &[i64], kappas: &[i64], i: u8) -> Vec<FamilyParams> {
        let mut out = Vec::new();
        for &n in ns {
            for &r in rs {
                for &kappa in kappas {
                    if let Ok(p) = FamilyParams::new(n, i, r, kappa) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }

    pub fn basic(&self) -> BasicClass {
        BasicClass::new(self.kappa, self.n)
    }
}

/// The named elements attached to `λ_{i,r}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Family {
    pub params: FamilyParams,
    /// `λ_{i,r}`
    pub lambda: Cocharacter,
    /// `λ′_{i,r}`
    pub lambda_prime: Cocharacter,
    /// The permutations of `λ_{i,r}` fixing the first entry; for `i = 1`,
    /// `nus[j−1]` is `ν_j`, whose `(j+1)`-th entry is `−r−1`.
    pub nus: Vec<Cocharacter>,
    /// `τ = (1 2 ⋯ n)`
    pub tau: Permutation,
    /// `w_{i,r} = t^{λ′_{i,r}}·τ`
    pub w: AffWeylElt,
    pub lambda_dual: Cocharacter,
    pub kappa_dual: i64,
}

impl Family {
    /// `t^ν·τ`.
    pub fn nu_tau(&self, nu: &Cocharacter) -> AffWeylElt {
        AffWeylElt::new(nu.clone(), self.tau.clone()).unwrap()
    }
}

pub fn make_family(params: FamilyParams) -> Result<Family> {
    params.validate()?;
    let FamilyParams { n, i, r, kappa } = params;
    let big = (n as i64 - 1) * r;
    let mut lambda = vec![-r; n];
    let mut nus = Vec::new();
    let lambda_prime;
    if i == 0 {
        lambda[0] = big + kappa;
        lambda_prime = lambda.clone();
        nus.push(Cocharacter(lambda.clone()));
    } else {
        lambda[0] = big + 1 + kappa;
        lambda[n - 1] = -r - 1;
        for j in 1..n {
            let mut nu = vec![-r; n];
            nu[0] = big + 1 + kappa;
            nu[j] = -r - 1;
            nus.push(Cocharacter(nu));
        }
        lambda_prime = nus[0].0.clone();
    }
    let lambda = Cocharacter(lambda);
    let lambda_prime = Cocharacter(lambda_prime);
    let tau = Permutation::long_cycle(n);
    let w = AffWeylElt::new(lambda_prime.clone(), tau.clone())?;
    Ok(Family {
        params,
        lambda_dual: dual_cocharacter(&lambda),
        kappa_dual: -kappa,
        lambda,
        lambda_prime,
        nus,
        tau,
        w,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct DimensionReport {
    pub total: i64,
    /// `n′ − 1`
    pub drinfeld_dim: i64,
    pub affine_dim: i64,
}

/// `dim X_λ(b) = ⟨ρ, λ − ν_b⟩ − def(b)/2` for basic `b ∈ B(G, λ)`.
pub fn dimension_formula(lambda: &Cocharacter, b: &BasicClass) -> Result<DimensionReport> {
    if !basic_in_bg_lambda(b, lambda)? {
        return Err(Error::InvalidParams(format!("X_λ(b) is empty: κ(b) = {} but Σλ = {}", b.kappa, lambda.sum())));
    }
    let n = lambda.n() as i64;
    // 2ρ = (n−1, n−3, …, −(n−1)); ⟨2ρ, ν_b⟩ = 0 since ν_b is central.
    let two_rho_lambda: i64 = lambda.entries().iter().enumerate().map(|(a, &x)| (n - 1 - 2 * a as i64) * x).sum();
    let twice = two_rho_lambda - b.defect() as i64;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Internal(format!("dimension 2·d = {twice} is not a non-negative even integer for {lambda}")));
    }
    let total = twice / 2;
    let drinfeld_dim = b.n_prime() as i64 - 1;
    Ok(DimensionReport { total, drinfeld_dim, affine_dim: total - drinfeld_dim })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alcove::{newton, Rational};

    fn c(v: &[i64]) -> Cocharacter {
        Cocharacter(v.to_vec())
    }

    #[test]
    fn family_examples() {
        let f = make_family(FamilyParams::new(3, 0, 1, 1).unwrap()).unwrap();
        assert_eq!(f.lambda, c(&[3, -1, -1]));
        assert_eq!(f.w, "t[3,-1,-1]*p[2,3,1]".parse().unwrap());
        assert_eq!(f.nus, vec![f.lambda.clone()]);

        let f = make_family(FamilyParams::new(3, 1, 0, 1).unwrap()).unwrap();
        assert_eq!(f.lambda, c(&[2, 0, -1]));
        assert_eq!(f.lambda_prime, c(&[2, -1, 0]));
        assert_eq!(f.nus.len(), 2);
        assert_eq!(f.lambda_dual, c(&[1, 0, -2]));
    }

    #[test]
    fn family_parameter_checks() {
        assert!(FamilyParams::new(3, 0, 0, 0).is_err());
        assert!(FamilyParams::new(3, 2, 1, 0).is_err());
        assert!(FamilyParams::new(3, 0, 1, 3).is_err());
        assert!(FamilyParams::new(1, 0, 1, 0).is_err());
        assert!(FamilyParams::new(3, 1, 0, 2).is_ok());
    }

    #[test]
    fn nus_are_the_first_entry_fixing_orbit() {
        for p in FamilyParams::grid(&[2, 3, 4, 5], &[0, 1, 2], &[0, 1, 2], 1) {
            let f = make_family(p).unwrap();
            let orbit = crate::admissible::translation_orbit(&f.lambda);
            let fixing: Vec<_> = orbit.into_iter().filter(|m| m.entries()[0] == f.lambda.entries()[0]).collect();
            assert_eq!(fixing.len(), p.n - 1);
            for nu in &f.nus {
                assert!(fixing.contains(nu));
            }
        }
    }

    #[test]
    fn dimension_examples() {
        let b = BasicClass::new(1, 3);
        let d = dimension_formula(&c(&[3, -1, -1]), &b).unwrap();
        assert_eq!(d, DimensionReport { total: 3, drinfeld_dim: 0, affine_dim: 3 });
        // central λ = ν_b, n′ = n
        let d = dimension_formula(&c(&[2, 2, 2]), &BasicClass::new(6, 3)).unwrap();
        assert_eq!(d.total, 0);
        assert!(dimension_formula(&c(&[3, -1, -1]), &BasicClass::new(0, 3)).is_err());
        let lambda = c(&[3, -1, -1]);
        let dual = dimension_formula(&dual_cocharacter(&lambda), &b.dual()).unwrap();
        assert_eq!(dual.total, 3);
    }

    #[test]
    fn w_ir_newton_is_basic() {
        for p in FamilyParams::grid(&[2, 3, 4], &[0, 1], &[0, 1, 2], 0) {
            let f = make_family(p).unwrap();
            let nu = newton(&f.w);
            assert!(nu.0.iter().all(|x| *x == Rational::new(p.kappa, p.n as i64)));
        }
    }
}

//! Eta invariants of quaternion space forms and their order-4 lens spaces.
//!
//! For a fixed point free `τ` on a group `H` and `σ` of dimension zero,
//!
//! ```text
//! η^σ(V^ρ) = |H|^{-1} Σ_{h ∈ H, h ≠ 1} Tr σ(h) · Tr ρ(h) · det(I - τ(h))^{-1}
//! ```
//!
//! with the `Tr ρ` factor dropped for the untwisted invariant. `σ`, `ρ`
//! and `τ` are characters of `Q_ℓ` restricted to `H`. A cartesian factor
//! `Z^{4j}` multiplies the value by `Â(Z^{4j})`, which is 2 for `j` odd
//! and 1 for `j` even.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{CycloNumber, Rational, ResidueMod2Z};
use crate::error::{Error, Result};
use crate::group::{det_i_minus, FpfRep, GroupParams, SubgroupId, VirtualCharacter};

/// `M^{4ν-1}(H, τ|_H) × Z^{4j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceForm {
    pub subgroup: SubgroupId,
    pub tau: FpfRep,
    pub z_factor: u32,
}

impl SpaceForm {
    pub fn new(subgroup: SubgroupId, tau: FpfRep, z_factor: u32) -> Self {
        SpaceForm {
            subgroup,
            tau,
            z_factor,
        }
    }

    /// `M^{4ν-1}(Q_ℓ, ν·γ₁)`.
    pub fn quaternion(params: GroupParams, nu: usize) -> Result<Self> {
        Ok(Self::new(SubgroupId::Full, FpfRep::multiple_of_gamma1(params, nu)?, 0))
    }

    /// `M^{4k-1}(H, k·γ₁)` with the `Q_ℓ` structure from `H ⊂ Q_ℓ`.
    pub fn lens(params: GroupParams, subgroup: SubgroupId, k: usize) -> Result<Self> {
        Ok(Self::new(subgroup, FpfRep::multiple_of_gamma1(params, k)?, 0))
    }

    pub fn params(&self) -> &GroupParams {
        self.tau.params()
    }

    /// Dimension of the space form factor alone.
    pub fn dimension(&self) -> usize {
        self.tau.space_form_dimension()
    }

    pub fn a_hat_factor(&self) -> i64 {
        if self.z_factor % 2 == 1 {
            2
        } else {
            1
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EtaValue {
    pub exact: Rational,
    pub residue: ResidueMod2Z,
}

impl EtaValue {
    pub fn from_exact(exact: Rational) -> Self {
        let residue = ResidueMod2Z::new(exact.clone());
        EtaValue { exact, residue }
    }
}

fn require_reduced(sigma: &VirtualCharacter) -> Result<()> {
    let d = sigma.dimension();
    if d.is_zero() {
        Ok(())
    } else {
        Err(Error::NotReduced(d.to_string()))
    }
}

/// Twisted eta invariant `η^σ(V^ρ)` of `space`; `rho = None` is the
/// untwisted invariant.
pub fn eta_pair(
    space: &SpaceForm,
    sigma: &VirtualCharacter,
    rho: Option<&VirtualCharacter>,
) -> Result<EtaValue> {
    let params = *space.params();
    if sigma.params() != &params || rho.is_some_and(|r| r.params() != &params) {
        return Err(Error::InvalidArgument("characters and space form use different groups".into()));
    }
    require_reduced(sigma)?;
    let sigma_f = sigma.class_function();
    let rho_f = rho.map(VirtualCharacter::class_function);

    // Every factor is a class function of Q_ℓ, so sum once per class,
    // weighted by how many elements of the subgroup it contains.
    let elements = params.subgroup_elements(space.subgroup);
    let classes = params.conjugacy_classes();
    let mut weight = vec![0i64; classes.len()];
    for h in elements.iter().filter(|h| !h.is_identity()) {
        weight[params.class_of(*h)] += 1;
    }
    let mut total = CycloNumber::zero(params.conductor());
    for (class, &w) in classes.iter().zip(&weight) {
        if w == 0 {
            continue;
        }
        let h = class.representative;
        let mut term = sigma_f.at(h).clone();
        if let Some(r) = &rho_f {
            term = &term * r.at(h);
        }
        if term.is_zero() {
            continue;
        }
        let inv = det_i_minus(&space.tau, h).inverse()?;
        total = &total + &(&term * &inv).scale(&Rational::from_integer(BigInt::from(w)));
    }
    let sum = total.to_rational()?;
    let exact = sum * Rational::new(BigInt::from(space.a_hat_factor()), BigInt::from(elements.len()));
    Ok(EtaValue::from_exact(exact))
}

/// Closed form of `η_ν^{Θ_{i₁}}(Θ_{i₂})` on `M^{4ν-1}(Q_ℓ, ν·γ₁)`:
/// `ℓ^{-1} 2^{-ν} (2ℓ²/16 + 4ℓ/4)` when `i₁ = i₂`, and
/// `ℓ^{-1} 2^{-ν} (2ℓ²/16)` otherwise.
pub fn eta_theta_closed_form(i1: u8, i2: u8, nu: u32, params: GroupParams) -> Result<Rational> {
    if !matches!(i1, 1 | 2) || !matches!(i2, 1 | 2) {
        return Err(Error::InvalidArgument("theta indices must be 1 or 2".into()));
    }
    if nu == 0 {
        return Err(Error::InvalidArgument("nu must be >= 1".into()));
    }
    let ell = Rational::from_integer(BigInt::from(params.ell()));
    let mut bracket = Rational::new(BigInt::from(2), BigInt::from(16)) * &ell * &ell;
    if i1 == i2 {
        bracket += Rational::from_integer(BigInt::from(4)) * &ell / Rational::from_integer(BigInt::from(4));
    }
    let scale = Rational::new(BigInt::from(1), BigInt::from(params.ell()) << nu as usize);
    Ok(bracket * scale)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LensPair {
    /// `M_I - M_J`
    IMinusJ,
    /// `M_I - M_{ξJ}`
    IMinusXiJ,
}

impl LensPair {
    pub fn subgroups(&self) -> (SubgroupId, SubgroupId) {
        match self {
            LensPair::IMinusJ => (SubgroupId::GenI, SubgroupId::GenJ),
            LensPair::IMinusXiJ => (SubgroupId::GenI, SubgroupId::GenXiJ),
        }
    }

    pub fn label(&self, k: usize) -> String {
        let d = 4 * k - 1;
        match self {
            LensPair::IMinusJ => format!("M_I^{d}-M_J^{d}"),
            LensPair::IMinusXiJ => format!("M_I^{d}-M_xiJ^{d}"),
        }
    }
}

/// `η^σ(M_I^{4k-1} - M_g^{4k-1})` with `τ = k·γ₁` restricted to each lens
/// subgroup.
pub fn eta_lens_difference(
    pair: LensPair,
    k: usize,
    sigma: &VirtualCharacter,
    params: GroupParams,
) -> Result<EtaValue> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be >= 1".into()));
    }
    let (first, second) = pair.subgroups();
    let a = eta_pair(&SpaceForm::lens(params, first, k)?, sigma, None)?;
    let b = eta_pair(&SpaceForm::lens(params, second, k)?, sigma, None)?;
    Ok(EtaValue::from_exact(a.exact - b.exact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::group::{c_constant, delta_power, theta, IrredLabel};

    fn p(ell: u32) -> GroupParams {
        GroupParams::new(ell).unwrap()
    }

    #[test]
    fn delta_pairing_is_c_constant() {
        for ell in [8, 16] {
            let params = p(ell);
            for nu in 1..=3usize {
                let space = SpaceForm::quaternion(params, nu).unwrap();
                for r in 1..=3u32 {
                    for s in 1..=3u32 {
                        let v = eta_pair(
                            &space,
                            &delta_power(r, params).unwrap(),
                            Some(&delta_power(s, params).unwrap()),
                        )
                        .unwrap();
                        let c = c_constant(r as i64 + s as i64 - nu as i64, params);
                        assert_eq!(v.exact, c);
                        assert_eq!(v.residue, ResidueMod2Z::new(c));
                    }
                }
            }
        }
    }

    #[test]
    fn theta_against_delta_vanishes() {
        let params = p(16);
        let space = SpaceForm::quaternion(params, 2).unwrap();
        for r in 1..=4 {
            let v = eta_pair(&space, &theta(1, params).unwrap(), Some(&delta_power(r, params).unwrap()))
                .unwrap();
            assert_eq!(v.exact, rat(0, 1));
        }
    }

    /// Hand evaluation for ℓ = 8, ν = 2, σ = ρ = Θ₁: Θ₁ is 2 on ξ, ξ³ and -2
    /// on J, ξ²J, with Δ = 2 on all four, giving (4·4)/2² / 8 = 1/2.
    #[test]
    fn theta_theta_ell8() {
        let params = p(8);
        let space = SpaceForm::quaternion(params, 2).unwrap();
        let t1 = theta(1, params).unwrap();
        let v = eta_pair(&space, &t1, Some(&t1)).unwrap();
        assert_eq!(v.exact, rat(1, 2));
        assert_eq!(eta_theta_closed_form(1, 1, 2, params).unwrap(), rat(1, 2));
        assert_eq!(eta_theta_closed_form(1, 2, 2, params).unwrap(), rat(1, 4));
        assert_eq!(eta_theta_closed_form(1, 1, 2, p(16)).unwrap(), rat(3, 4));
    }

    #[test]
    fn reduced_precondition() {
        let params = p(8);
        let space = SpaceForm::quaternion(params, 1).unwrap();
        let rho = VirtualCharacter::irreducible(params, IrredLabel::Rho0);
        assert!(matches!(eta_pair(&space, &rho, None), Err(Error::NotReduced(_))));
        let other = theta(1, p(16)).unwrap();
        assert!(eta_pair(&space, &other, None).is_err());
    }

    #[test]
    fn lens_differences() {
        for k in 1..=4usize {
            let params = p(8);
            let t1 = theta(1, params).unwrap();
            let v = eta_lens_difference(LensPair::IMinusJ, k, &t1, params).unwrap();
            assert_eq!(v.exact, rat(2, 1) / rat(1 << k, 1));
            for i in 1..=3 {
                let d = delta_power(i, params).unwrap();
                assert!(eta_lens_difference(LensPair::IMinusJ, k, &d, params).unwrap().residue.is_zero());
            }
            let params = p(16);
            let t1 = theta(1, params).unwrap();
            let v = eta_lens_difference(LensPair::IMinusJ, k, &t1, params).unwrap();
            assert_eq!(v.exact, rat(3, 1) / rat(1 << k, 1));
        }
        assert!(eta_lens_difference(LensPair::IMinusJ, 0, &theta(1, p(8)).unwrap(), p(8)).is_err());
    }

    #[test]
    fn z_factor_product_formula() {
        let params = p(16);
        let d = delta_power(2, params).unwrap();
        let base = SpaceForm::quaternion(params, 2).unwrap();
        let v0 = eta_pair(&base, &d, None).unwrap().exact;
        for j in 0..4u32 {
            let mut s = base.clone();
            s.z_factor = j;
            let v = eta_pair(&s, &d, None).unwrap().exact;
            let factor = if j % 2 == 1 { 2 } else { 1 };
            assert_eq!(v, &v0 * rat(factor, 1));
        }
    }

    /// Every sum over the twists actually used is rational (no `NotRational`),
    /// symmetric in the two Θ's, and zero for untwisted Θ on the full group.
    #[test]
    fn rational_symmetric_and_untwisted_theta() {
        for ell in [8, 16, 32] {
            let params = p(ell);
            let mut chars = vec![theta(1, params).unwrap(), theta(2, params).unwrap()];
            chars.extend((1..=6).map(|r| delta_power(r, params).unwrap()));
            for nu in 1..=3 {
                let space = SpaceForm::quaternion(params, nu).unwrap();
                for sigma in &chars {
                    for rho in &chars {
                        assert!(eta_pair(&space, sigma, Some(rho)).is_ok());
                    }
                }
                let a = eta_pair(&space, &chars[0], Some(&chars[1])).unwrap();
                let b = eta_pair(&space, &chars[1], Some(&chars[0])).unwrap();
                assert_eq!(a, b);
                for t in &chars[..2] {
                    assert!(eta_pair(&space, t, None).unwrap().exact.is_zero());
                }
            }
        }
    }
}

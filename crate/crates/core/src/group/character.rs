//! Irreducible characters, class functions and virtual characters of `Q_ℓ`.
//!
//! Virtual characters are stored as integer multiplicity vectors over the
//! irreducibles `ρ₀, κ₁, κ₂, κ₃, γ₁, …, γ_{ℓ/4-1}`. Values on conjugacy
//! classes are materialized on demand as [`ClassFunction`]s.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{GroupElement, GroupParams};
use crate::arith::{CycloNumber, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrredLabel {
    Rho0,
    Kappa1,
    Kappa2,
    Kappa3,
    /// `γ_u` for `1 ≤ u ≤ ℓ/4 - 1`.
    Gamma(u32),
}

impl IrredLabel {
    pub fn dimension(&self) -> u32 {
        match self {
            IrredLabel::Gamma(_) => 2,
            _ => 1,
        }
    }

    fn index(&self) -> usize {
        match *self {
            IrredLabel::Rho0 => 0,
            IrredLabel::Kappa1 => 1,
            IrredLabel::Kappa2 => 2,
            IrredLabel::Kappa3 => 3,
            IrredLabel::Gamma(u) => 3 + u as usize,
        }
    }

    pub fn is_valid_for(&self, params: &GroupParams) -> bool {
        match *self {
            IrredLabel::Gamma(u) => u >= 1 && u < params.ell() / 4,
            _ => true,
        }
    }
}

impl fmt::Display for IrredLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrredLabel::Rho0 => f.write_str("rho0"),
            IrredLabel::Kappa1 => f.write_str("kappa1"),
            IrredLabel::Kappa2 => f.write_str("kappa2"),
            IrredLabel::Kappa3 => f.write_str("kappa3"),
            IrredLabel::Gamma(u) => write!(f, "gamma_{u}"),
        }
    }
}

impl FromStr for IrredLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rho0" => Ok(IrredLabel::Rho0),
            "kappa1" => Ok(IrredLabel::Kappa1),
            "kappa2" => Ok(IrredLabel::Kappa2),
            "kappa3" => Ok(IrredLabel::Kappa3),
            _ => s
                .strip_prefix("gamma_")
                .or_else(|| s.strip_prefix("gamma"))
                .and_then(|u| u.parse().ok())
                .map(IrredLabel::Gamma)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown irreducible `{s}`"))),
        }
    }
}

impl GroupParams {
    /// `ρ₀, κ₁, κ₂, κ₃, γ₁, …, γ_{ℓ/4-1}`.
    pub fn irreducibles(&self) -> Vec<IrredLabel> {
        let mut out = vec![
            IrredLabel::Rho0,
            IrredLabel::Kappa1,
            IrredLabel::Kappa2,
            IrredLabel::Kappa3,
        ];
        out.extend((1..self.ell() / 4).map(IrredLabel::Gamma));
        out
    }
}

/// Trace of `γ_u(g)` for any integer `u`: `ξ^{ua} + ξ^{-ua}` on `ξ^a`,
/// zero on `ξ^a J`.
pub fn gamma_trace(params: &GroupParams, u: i64, g: GroupElement) -> CycloNumber {
    let m = params.conductor();
    if g.j_exponent() == 1 {
        return CycloNumber::zero(m);
    }
    let e = u * g.xi_exponent() as i64;
    &CycloNumber::zeta_pow(m, e) + &CycloNumber::zeta_pow(m, -e)
}

/// `χ(g)` for an irreducible `χ`.
pub fn char_value(params: &GroupParams, chi: IrredLabel, g: GroupElement) -> CycloNumber {
    let m = params.conductor();
    // (value on ξ, value on J) for the one-dimensional characters
    let linear = |at_xi: i64, at_j: i64| {
        let s = at_xi.pow(g.xi_exponent() % 2) * at_j.pow(g.j_exponent() as u32);
        CycloNumber::from_int(m, s)
    };
    match chi {
        IrredLabel::Rho0 => CycloNumber::one(m),
        IrredLabel::Kappa1 => linear(-1, 1),
        IrredLabel::Kappa2 => linear(1, -1),
        IrredLabel::Kappa3 => linear(-1, -1),
        IrredLabel::Gamma(u) => gamma_trace(params, u as i64, g),
    }
}

/// A class function, stored by its values on the class representatives of
/// [`GroupParams::conjugacy_classes`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    params: GroupParams,
    values: Vec<CycloNumber>,
}

impl ClassFunction {
    pub fn from_class_values(params: GroupParams, values: Vec<CycloNumber>) -> Result<Self> {
        if values.len() != params.num_classes() {
            return Err(Error::DimensionMismatch {
                expected: params.num_classes(),
                found: values.len(),
            });
        }
        Ok(ClassFunction { params, values })
    }

    /// Evaluates `f` on every element; fails unless `f` is constant on
    /// conjugacy classes.
    pub fn from_element_fn(
        params: GroupParams,
        f: impl Fn(GroupElement) -> CycloNumber,
    ) -> Result<Self> {
        let mut values: Vec<Option<CycloNumber>> = vec![None; params.num_classes()];
        for g in params.elements() {
            let v = f(g);
            let slot = &mut values[params.class_of(g)];
            match slot {
                Some(existing) if *existing != v => return Err(Error::NotClassFunction),
                Some(_) => {}
                None => *slot = Some(v),
            }
        }
        Ok(ClassFunction {
            params,
            values: values.into_iter().map(|v| v.expect("every class is hit")).collect(),
        })
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn values(&self) -> &[CycloNumber] {
        &self.values
    }

    pub fn at(&self, g: GroupElement) -> &CycloNumber {
        &self.values[self.params.class_of(g)]
    }

    pub fn pointwise_mul(&self, other: &ClassFunction) -> ClassFunction {
        ClassFunction {
            params: self.params,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect(),
        }
    }

    pub fn pointwise_pow(&self, e: u32) -> ClassFunction {
        ClassFunction {
            params: self.params,
            values: self.values.iter().map(|v| v.pow(e)).collect(),
        }
    }

    /// `ℓ^{-1} Σ_g f₁(g) · conj(f₂(g))`.
    pub fn inner(&self, other: &ClassFunction) -> Result<Rational> {
        check_same(&self.params, &other.params)?;
        let m = self.params.conductor();
        let mut total = CycloNumber::zero(m);
        for (c, (a, b)) in self
            .params
            .conjugacy_classes()
            .iter()
            .zip(self.values.iter().zip(&other.values))
        {
            let term = (a * &b.conj()).scale(&Rational::from_integer(BigInt::from(c.size)));
            total = &total + &term;
        }
        let r = total.to_rational()?;
        Ok(r / Rational::from_integer(BigInt::from(self.params.ell())))
    }

    /// Expands `f = Σ ⟨f, χ⟩ χ`; every multiplicity must be an integer.
    pub fn decompose(&self) -> Result<VirtualCharacter> {
        let mut mults = Vec::with_capacity(self.params.num_classes());
        for chi in self.params.irreducibles() {
            let basis = VirtualCharacter::irreducible(self.params, chi).class_function();
            let m = self.inner(&basis)?;
            if !m.is_integer() {
                return Err(Error::NotVirtual(format!("<f, {chi}> = {m}")));
            }
            mults.push(m.to_integer());
        }
        Ok(VirtualCharacter {
            params: self.params,
            mults,
        })
    }
}

fn check_same(a: &GroupParams, b: &GroupParams) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "class functions on different groups (ell {} vs {})",
            a.ell(),
            b.ell()
        )))
    }
}

/// Integer combination of irreducible characters.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VirtualCharacter {
    params: GroupParams,
    mults: Vec<BigInt>,
}

impl VirtualCharacter {
    pub fn zero(params: GroupParams) -> Self {
        VirtualCharacter {
            params,
            mults: vec![BigInt::zero(); params.num_classes()],
        }
    }

    /// Panics if `chi` is not an irreducible of this group; use
    /// [`VirtualCharacter::gamma`] for arbitrary `γ_u`.
    pub fn irreducible(params: GroupParams, chi: IrredLabel) -> Self {
        assert!(chi.is_valid_for(&params), "{chi} is not irreducible for ell {}", params.ell());
        let mut v = Self::zero(params);
        v.mults[chi.index()] = BigInt::one();
        v
    }

    pub fn from_mults(params: GroupParams, mults: Vec<BigInt>) -> Result<Self> {
        if mults.len() != params.num_classes() {
            return Err(Error::DimensionMismatch {
                expected: params.num_classes(),
                found: mults.len(),
            });
        }
        Ok(VirtualCharacter { params, mults })
    }

    /// The character of the two-dimensional representation `γ_u` for any
    /// integer `u`, reduced to irreducibles (`γ₀ = ρ₀ + κ₂`,
    /// `γ_{ℓ/4} = κ₁ + κ₃`, `γ_u ≅ γ_{-u} ≅ γ_{u+ℓ/2}`).
    pub fn gamma(params: GroupParams, u: i64) -> Self {
        let f = ClassFunction::from_element_fn(params, |g| gamma_trace(&params, u, g))
            .expect("gamma traces are class functions");
        f.decompose().expect("gamma_u is a character")
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn mult(&self, chi: IrredLabel) -> &BigInt {
        &self.mults[chi.index()]
    }

    pub fn mults(&self) -> &[BigInt] {
        &self.mults
    }

    pub fn dimension(&self) -> BigInt {
        self.params
            .irreducibles()
            .iter()
            .map(|chi| &self.mults[chi.index()] * BigInt::from(chi.dimension()))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.mults.iter().all(Zero::is_zero)
    }

    pub fn class_function(&self) -> ClassFunction {
        let m = self.params.conductor();
        let classes = self.params.conjugacy_classes();
        let irr = self.params.irreducibles();
        let values = classes
            .iter()
            .map(|c| {
                irr.iter().fold(CycloNumber::zero(m), |acc, chi| {
                    let k = &self.mults[chi.index()];
                    if k.is_zero() {
                        acc
                    } else {
                        let v = char_value(&self.params, *chi, c.representative);
                        &acc + &v.scale(&Rational::from_integer(k.clone()))
                    }
                })
            })
            .collect();
        ClassFunction {
            params: self.params,
            values,
        }
    }

    pub fn value_at(&self, g: GroupElement) -> CycloNumber {
        self.class_function().at(g).clone()
    }

    pub fn scale(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        VirtualCharacter {
            params: self.params,
            mults: self.mults.iter().map(|m| m * &k).collect(),
        }
    }

    /// Tensor product, computed as the pointwise product of class functions.
    pub fn product(&self, other: &VirtualCharacter) -> Result<Self> {
        check_same(&self.params, &other.params)?;
        self.class_function()
            .pointwise_mul(&other.class_function())
            .decompose()
    }

    pub fn pow(&self, r: u32) -> Self {
        self.class_function()
            .pointwise_pow(r)
            .decompose()
            .expect("powers of characters are characters")
    }
}

impl Add for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn add(self, rhs: Self) -> VirtualCharacter {
        assert_eq!(self.params, rhs.params, "adding characters of different groups");
        VirtualCharacter {
            params: self.params,
            mults: self.mults.iter().zip(&rhs.mults).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn sub(self, rhs: Self) -> VirtualCharacter {
        self + &(-rhs)
    }
}

impl Neg for &VirtualCharacter {
    type Output = VirtualCharacter;
    fn neg(self) -> VirtualCharacter {
        VirtualCharacter {
            params: self.params,
            mults: self.mults.iter().map(|m| -m).collect(),
        }
    }
}

impl fmt::Display for VirtualCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for chi in self.params.irreducibles() {
            let k = &self.mults[chi.index()];
            if k.is_zero() {
                continue;
            }
            let mag = k.abs();
            match (first, k.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            if mag.is_one() {
                write!(f, "{chi}")?;
            } else {
                write!(f, "{mag}*{chi}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn inner_product(f1: &VirtualCharacter, f2: &VirtualCharacter) -> Result<Rational> {
    f1.class_function().inner(&f2.class_function())
}

/// Class function of `Θ₁` (`i = 1`) or `Θ₂` (`i = 2`): `ℓ/4` on `±I`, `-2` on
/// the `ξ^{even} J` (resp. `ξ^{odd} J`) class, zero elsewhere.
pub fn theta_class_function(i: u8, params: GroupParams) -> Result<ClassFunction> {
    if i != 1 && i != 2 {
        return Err(Error::InvalidArgument(format!("theta index must be 1 or 2, got {i}")));
    }
    let m = params.conductor();
    let plus_i = params.i_elem();
    let minus_i = params.mul(params.minus_one(), plus_i);
    let parity = u32::from(i - 1);
    ClassFunction::from_element_fn(params, |g| {
        if g == plus_i || g == minus_i {
            CycloNumber::from_int(m, (params.ell() / 4) as i64)
        } else if g.j_exponent() == 1 && g.xi_exponent() % 2 == parity {
            CycloNumber::from_int(m, -2)
        } else {
            CycloNumber::zero(m)
        }
    })
}

pub fn theta(i: u8, params: GroupParams) -> Result<VirtualCharacter> {
    theta_class_function(i, params)?.decompose()
}

/// `Δ = 2ρ₀ - γ₁`, whose class function is `det(I - γ₁(·))`.
pub fn delta(params: GroupParams) -> VirtualCharacter {
    &VirtualCharacter::irreducible(params, IrredLabel::Rho0).scale(2)
        - &VirtualCharacter::irreducible(params, IrredLabel::Gamma(1))
}

/// `Δ^r` for `r ≥ 1`, as the pointwise power of `Δ`'s class function.
pub fn delta_power(r: u32, params: GroupParams) -> Result<VirtualCharacter> {
    if r == 0 {
        return Err(Error::InvalidArgument("delta power must be >= 1".into()));
    }
    Ok(delta(params).pow(r))
}

/// `c_i = ℓ^{-1} Σ_{g ≠ 1} Δ(g)^i` for any integer `i`.
pub fn c_constant(i: i64, params: GroupParams) -> Rational {
    let d = delta(params).class_function();
    let m = params.conductor();
    let mut total = CycloNumber::zero(m);
    for (class, value) in params.conjugacy_classes().iter().zip(d.values()) {
        if class.representative.is_identity() {
            continue;
        }
        let term = value
            .powi(i)
            .expect("Δ(g) ≠ 0 off the identity since γ₁ is fixed point free");
        total = &total + &term.scale(&Rational::from_integer(BigInt::from(class.size)));
    }
    total.to_rational().expect("Galois-invariant sum is rational")
        / Rational::from_integer(BigInt::from(params.ell()))
}

/// Frobenius–Schur indicator `ℓ^{-1} Σ_g χ(g²)`: `+1` real, `-1`
/// quaternion, `0` complex.
pub fn fs_indicator(params: GroupParams, chi: IrredLabel) -> i8 {
    let m = params.conductor();
    let total = params.elements().into_iter().fold(CycloNumber::zero(m), |acc, g| {
        &acc + &char_value(&params, chi, params.mul(g, g))
    });
    let r = total.to_rational().expect("indicator sum is rational")
        / Rational::from_integer(BigInt::from(params.ell()));
    assert!(r.is_integer(), "indicator must be an integer");
    r.to_integer().to_i8().expect("indicator is -1, 0 or 1")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RepRing {
    RU0,
    RO,
    RSp,
    RO0,
    RSp0,
}

impl FromStr for RepRing {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "RU0" => Ok(RepRing::RU0),
            "RO" => Ok(RepRing::RO),
            "RSp" => Ok(RepRing::RSp),
            "RO0" => Ok(RepRing::RO0),
            "RSp0" => Ok(RepRing::RSp0),
            _ => Err(Error::InvalidArgument(format!("unknown ring `{s}`"))),
        }
    }
}

/// RO is spanned by `ρ₀, κᵢ, γ_{even}, 2γ_{odd}`; RSp by `2ρ₀, 2κᵢ,
/// 2γ_{even}, γ_{odd}`.
pub fn membership(sigma: &VirtualCharacter, ring: RepRing) -> bool {
    let even = |k: &BigInt| (k % BigInt::from(2)).is_zero();
    let real_part_even = || {
        sigma.params.irreducibles().iter().all(|chi| match chi {
            IrredLabel::Gamma(u) if u % 2 == 1 => true,
            _ => even(sigma.mult(*chi)),
        })
    };
    let quaternion_part_even = || {
        sigma.params.irreducibles().iter().all(|chi| match chi {
            IrredLabel::Gamma(u) if u % 2 == 1 => even(sigma.mult(*chi)),
            _ => true,
        })
    };
    let dim0 = || sigma.dimension().is_zero();
    match ring {
        RepRing::RU0 => dim0(),
        RepRing::RO => quaternion_part_even(),
        RepRing::RSp => real_part_even(),
        RepRing::RO0 => quaternion_part_even() && dim0(),
        RepRing::RSp0 => real_part_even() && dim0(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn p(ell: u32) -> GroupParams {
        GroupParams::new(ell).unwrap()
    }

    fn irr(params: GroupParams, chi: IrredLabel) -> VirtualCharacter {
        VirtualCharacter::irreducible(params, chi)
    }

    #[test]
    fn one_dimensional_table() {
        let params = p(16);
        let xi = params.xi();
        let j = params.j_elem();
        let val = |chi, g| char_value(&params, chi, g).to_rational().unwrap();
        assert_eq!(val(IrredLabel::Kappa1, xi), rat(-1, 1));
        assert_eq!(val(IrredLabel::Kappa1, j), rat(1, 1));
        assert_eq!(val(IrredLabel::Kappa2, xi), rat(1, 1));
        assert_eq!(val(IrredLabel::Kappa2, j), rat(-1, 1));
        assert_eq!(val(IrredLabel::Kappa3, xi), rat(-1, 1));
        assert_eq!(val(IrredLabel::Kappa3, j), rat(-1, 1));
        assert_eq!(val(IrredLabel::Rho0, params.element(3, 1)), rat(1, 1));
    }

    #[test]
    fn gamma_traces() {
        let params = p(8);
        // ξ = i for ℓ = 8
        assert!(char_value(&params, IrredLabel::Gamma(1), params.xi()).is_zero());
        for a in 0..4 {
            assert!(char_value(&params, IrredLabel::Gamma(1), params.element(a, 1)).is_zero());
        }
        assert_eq!(
            char_value(&params, IrredLabel::Gamma(1), params.minus_one()).to_rational(),
            Ok(rat(-2, 1))
        );
    }

    #[test]
    fn orthonormality_and_dimension_sum() {
        for ell in [8, 16, 32, 64] {
            let params = p(ell);
            let irrs = params.irreducibles();
            assert_eq!(irrs.len(), (ell / 4 + 3) as usize);
            for &a in &irrs {
                for &b in &irrs {
                    let ip = inner_product(&irr(params, a), &irr(params, b)).unwrap();
                    assert_eq!(ip, rat((a == b) as i64, 1), "<{a}, {b}> for ell {ell}");
                }
            }
            let dim2: u32 = irrs.iter().map(|c| c.dimension().pow(2)).sum();
            assert_eq!(dim2, ell);
        }
    }

    #[test]
    fn gamma_equivalences() {
        for ell in [8, 16, 32] {
            let params = p(ell);
            let h = (ell / 2) as i64;
            for u in 1..(ell / 4) as i64 {
                let g = irr(params, IrredLabel::Gamma(u as u32));
                assert_eq!(VirtualCharacter::gamma(params, u), g);
                assert_eq!(VirtualCharacter::gamma(params, -u), g);
                assert_eq!(VirtualCharacter::gamma(params, u + h), g);
            }
            assert_eq!(
                VirtualCharacter::gamma(params, 0),
                &irr(params, IrredLabel::Rho0) + &irr(params, IrredLabel::Kappa2)
            );
            assert_eq!(
                VirtualCharacter::gamma(params, (ell / 4) as i64),
                &irr(params, IrredLabel::Kappa1) + &irr(params, IrredLabel::Kappa3)
            );
        }
    }

    #[test]
    fn theta_decompositions() {
        let params = p(8);
        let t1 = theta(1, params).unwrap();
        assert_eq!(t1, &irr(params, IrredLabel::Kappa2) - &irr(params, IrredLabel::Kappa1));
        let t2 = theta(2, params).unwrap();
        assert_eq!(t2, &irr(params, IrredLabel::Kappa2) - &irr(params, IrredLabel::Kappa3));
        assert_eq!(inner_product(&t1, &irr(params, IrredLabel::Kappa1)).unwrap(), rat(-1, 1));

        let params = p(16);
        let t1 = theta(1, params).unwrap();
        let want = &(&irr(params, IrredLabel::Kappa2) + &irr(params, IrredLabel::Kappa3))
            - &irr(params, IrredLabel::Gamma(2));
        assert_eq!(t1, want);
        assert_eq!(t1.to_string(), "kappa2 + kappa3 - gamma_2");
    }

    #[test]
    fn theta_inner_products_with_even_gammas() {
        for ell in [16, 32, 64] {
            let params = p(ell);
            for i in [1, 2] {
                let t = theta(i, params).unwrap();
                for u in 1..ell / 4 {
                    let ip = inner_product(&t, &irr(params, IrredLabel::Gamma(u))).unwrap();
                    let want = if u % 2 == 1 { 0 } else if (u / 2) % 2 == 0 { 1 } else { -1 };
                    assert_eq!(ip, rat(want, 1));
                }
                assert!(membership(&t, RepRing::RO0));
                assert!(t.dimension().is_zero());
            }
        }
    }

    #[test]
    fn theta_values() {
        let params = p(32);
        let f = theta_class_function(1, params).unwrap();
        assert_eq!(f.at(params.i_elem()).to_rational(), Ok(rat(8, 1)));
        assert_eq!(f.at(params.element(4, 1)).to_rational(), Ok(rat(-2, 1)));
        assert!(f.at(params.xi()).is_zero());
        assert!(f.at(params.element(3, 1)).is_zero());
        assert!(theta(3, params).is_err());
    }

    #[test]
    fn delta_is_det_and_in_rsp0() {
        let params = p(16);
        let d = delta(params);
        assert!(membership(&d, RepRing::RSp0));
        assert!(d.dimension().is_zero());
        assert!(delta_power(0, params).is_err());
        assert_eq!(delta_power(1, params).unwrap(), d);
        let sq = delta_power(2, params).unwrap();
        assert_eq!(sq, d.product(&d).unwrap());
    }

    #[test]
    fn c_constants_small() {
        let params = p(8);
        assert_eq!(c_constant(0, params), rat(7, 8));
        assert_eq!(c_constant(1, params), rat(2, 1));
        assert_eq!(c_constant(2, params), rat(5, 1));
        assert_eq!(c_constant(0, p(32)), rat(31, 32));
    }

    /// Direct oracle for `c_i` at `ℓ = 8`: Δ is 2 on ξ, 4 on -1, 2 on ξ³ and
    /// 2 on the four ξ^a J.
    #[test]
    fn c_constants_ell8_enumeration() {
        let params = p(8);
        for i in -6i64..=10 {
            let two = rat(2, 1);
            let four = rat(4, 1);
            let pw = |x: &Rational| {
                if i >= 0 {
                    num_traits::pow(x.clone(), i as usize)
                } else {
                    num_traits::pow(x.recip(), (-i) as usize)
                }
            };
            let sum = pw(&two) * rat(6, 1) + pw(&four);
            assert_eq!(c_constant(i, params), sum / rat(8, 1), "c_{i}");
        }
    }

    #[test]
    fn fs_indicators() {
        for ell in [8, 16, 32, 64] {
            let params = p(ell);
            for chi in params.irreducibles() {
                let want = match chi {
                    IrredLabel::Gamma(u) if u % 2 == 1 => -1,
                    _ => 1,
                };
                assert_eq!(fs_indicator(params, chi), want, "{chi} for ell {ell}");
            }
        }
    }

    #[test]
    fn membership_examples() {
        let params = p(16);
        let g1 = irr(params, IrredLabel::Gamma(1));
        assert!(!membership(&g1, RepRing::RO));
        assert!(membership(&g1.scale(2), RepRing::RO));
        assert!(membership(&g1, RepRing::RSp));
        assert!(!membership(&irr(params, IrredLabel::Rho0), RepRing::RSp));
        assert!(!membership(&irr(params, IrredLabel::Rho0), RepRing::RU0));
        assert!(membership(&theta(1, params).unwrap(), RepRing::RO0));
    }

    #[test]
    fn decompose_rejects_non_virtual() {
        let params = p(8);
        let m = params.conductor();
        let mut values = vec![CycloNumber::zero(m); params.num_classes()];
        values[0] = CycloNumber::one(m);
        let f = ClassFunction::from_class_values(params, values).unwrap();
        assert!(matches!(f.decompose(), Err(Error::NotVirtual(_))));
        let rho = ClassFunction::from_class_values(params, vec![CycloNumber::one(m); 5]).unwrap();
        assert_eq!(rho.decompose().unwrap(), irr(params, IrredLabel::Rho0));
    }

    #[test]
    fn non_class_function_rejected() {
        let params = p(8);
        let m = params.conductor();
        let r = ClassFunction::from_element_fn(params, |g| {
            CycloNumber::from_int(m, g.xi_exponent() as i64)
        });
        assert_eq!(r, Err(Error::NotClassFunction));
    }

    #[test]
    fn label_parsing() {
        assert_eq!("gamma_3".parse::<IrredLabel>().unwrap(), IrredLabel::Gamma(3));
        assert_eq!("gamma3".parse::<IrredLabel>().unwrap(), IrredLabel::Gamma(3));
        assert_eq!("kappa2".parse::<IrredLabel>().unwrap(), IrredLabel::Kappa2);
        assert!("kappa4".parse::<IrredLabel>().is_err());
    }
}

//! Finite abelian groups and subgroups of `(Q/2Z)^n`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{smith_normal_form, IntMatrix};
use super::Rational;
use crate::error::{Error, Result};

/// `Z_{d₁} ⊕ … ⊕ Z_{d_r}` with `d₁ | d₂ | … | d_r` and every `dᵢ ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroup {
    invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        AbelianGroup {
            invariant_factors: Vec::new(),
        }
    }

    /// Validates an invariant-factor list.
    pub fn new(invariant_factors: Vec<BigInt>) -> Result<Self> {
        let two = BigInt::from(2);
        if let Some(bad) = invariant_factors.iter().find(|d| **d < two) {
            return Err(Error::InvalidArgument(format!("invariant factor {bad} is < 2")));
        }
        for w in invariant_factors.windows(2) {
            if !w[1].is_multiple_of(&w[0]) {
                return Err(Error::InvalidArgument(format!(
                    "invariant factors break the divisibility chain at {} ∤ {}",
                    w[0], w[1]
                )));
            }
        }
        Ok(AbelianGroup { invariant_factors })
    }

    /// Normalizes `⊕ Z_{nᵢ}` for arbitrary positive orders `nᵢ` into
    /// invariant-factor form.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        let n = orders.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, o) in orders.iter().enumerate() {
            m.set(i, i, o.abs());
        }
        let factors = smith_normal_form(&m)
            .invariant_factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        AbelianGroup {
            invariant_factors: factors,
        }
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn order(&self) -> BigInt {
        self.invariant_factors.iter().product()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn exponent(&self) -> BigInt {
        self.invariant_factors.last().cloned().unwrap_or_else(BigInt::one)
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let all: Vec<BigInt> = self
            .invariant_factors
            .iter()
            .chain(&other.invariant_factors)
            .cloned()
            .collect();
        AbelianGroup::from_cyclic_orders(&all)
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.invariant_factors.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.invariant_factors.iter().map(|d| format!("Z_{d}")).collect();
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// Isomorphism type of the subgroup of `(Q/2Z)^n` generated by `generators`.
///
/// With `d` the lcm of all denominators, the subgroup is
/// `(L + 2d·Z^n) / 2d·Z^n` for `L` the integer span of the scaled
/// generators. The Smith form of `[L; 2d·I]` has diagonal `d₁ | … | dₙ`
/// (all dividing `2d`) and the subgroup is `⊕ Z_{2d/dᵢ}`.
pub fn quotient_group(n: usize, generators: &[Vec<Rational>]) -> Result<AbelianGroup> {
    for g in generators {
        if g.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.len(),
            });
        }
    }
    if n == 0 || generators.is_empty() {
        return Ok(AbelianGroup::trivial());
    }
    let d = generators
        .iter()
        .flatten()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let modulus = BigInt::from(2) * &d;

    let mut m = IntMatrix::zeros(generators.len() + n, n);
    for (i, g) in generators.iter().enumerate() {
        for (j, r) in g.iter().enumerate() {
            let scaled = r * Rational::from_integer(d.clone());
            debug_assert!(scaled.is_integer());
            m.set(i, j, scaled.to_integer().mod_floor(&modulus));
        }
    }
    for j in 0..n {
        m.set(generators.len() + j, j, modulus.clone());
    }

    let snf = smith_normal_form(&m);
    let mut orders: Vec<BigInt> = snf
        .d
        .diagonal()
        .into_iter()
        .map(|di| {
            debug_assert!(!di.is_zero() && modulus.is_multiple_of(&di));
            &modulus / di
        })
        .filter(|o| !o.is_one())
        .collect();
    orders.reverse();
    AbelianGroup::new(orders)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn single_generator_seven_quarters() {
        let g = quotient_group(1, &[vec![rat(7, 4)]]).unwrap();
        assert_eq!(g.invariant_factors(), &ints(&[8])[..]);
    }

    #[test]
    fn empty_generators_trivial() {
        assert_eq!(quotient_group(3, &[]).unwrap(), AbelianGroup::trivial());
        assert_eq!(AbelianGroup::trivial().order(), BigInt::one());
        assert_eq!(AbelianGroup::trivial().to_string(), "0");
    }

    #[test]
    fn two_generators_k2() {
        let s = rat(1, 2);
        let gens = vec![vec![&s * rat(2, 1), &s * rat(1, 1)], vec![&s * rat(1, 1), &s * rat(2, 1)]];
        let g = quotient_group(2, &gens).unwrap();
        assert_eq!(g.invariant_factors(), &ints(&[4, 4])[..]);
    }

    #[test]
    fn dimension_mismatch() {
        let err = quotient_group(2, &[vec![rat(1, 2)]]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn integer_generators_are_order_two_or_zero() {
        let g = quotient_group(2, &[vec![rat(1, 1), rat(0, 1)], vec![rat(2, 1), rat(4, 1)]]).unwrap();
        assert_eq!(g.invariant_factors(), &ints(&[2])[..]);
    }

    #[test]
    fn group_validation_and_sums() {
        assert!(AbelianGroup::new(ints(&[2, 3])).is_err());
        assert!(AbelianGroup::new(ints(&[1])).is_err());
        let a = AbelianGroup::new(ints(&[4, 4])).unwrap();
        let b = AbelianGroup::new(ints(&[8])).unwrap();
        let s = a.direct_sum(&b);
        assert_eq!(s.invariant_factors(), &ints(&[4, 4, 8])[..]);
        assert_eq!(s.order(), BigInt::from(128));
        assert_eq!(s.to_string(), "Z_4 ⊕ Z_4 ⊕ Z_8");
        let c = AbelianGroup::from_cyclic_orders(&ints(&[2, 3, 1]));
        assert_eq!(c.invariant_factors(), &ints(&[6])[..]);
    }
}

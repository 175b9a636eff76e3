//! Elements of `Q(ζ_m)` for `m` a power of two.
//!
//! The minimal polynomial of a primitive `2^t`-th root of unity is
//! `x^{m/2} + 1`, so `{1, ζ, …, ζ^{m/2-1}}` is a basis and every element has
//! exactly one coefficient vector. Multiplication folds `ζ^{m/2}` to `-1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct CycloNumber {
    conductor: u32,
    coeffs: Vec<Rational>,
}

fn check_conductor(m: u32) -> Result<()> {
    if m >= 2 && m.is_power_of_two() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "cyclotomic conductor must be a power of two >= 2, got {m}"
        )))
    }
}

impl CycloNumber {
    pub fn new(conductor: u32, coeffs: Vec<Rational>) -> Result<Self> {
        check_conductor(conductor)?;
        let n = (conductor / 2) as usize;
        if coeffs.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: coeffs.len(),
            });
        }
        Ok(CycloNumber { conductor, coeffs })
    }

    /// Panics on an invalid conductor; internal callers only pass `ℓ/2`.
    pub fn zero(conductor: u32) -> Self {
        check_conductor(conductor).expect("valid conductor");
        CycloNumber {
            conductor,
            coeffs: vec![Rational::zero(); (conductor / 2) as usize],
        }
    }

    pub fn from_rational(conductor: u32, r: Rational) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = r;
        z
    }

    pub fn from_int(conductor: u32, n: i64) -> Self {
        Self::from_rational(conductor, Rational::from_integer(BigInt::from(n)))
    }

    pub fn one(conductor: u32) -> Self {
        Self::from_int(conductor, 1)
    }

    /// `ζ^k` for any integer `k`.
    pub fn zeta_pow(conductor: u32, k: i64) -> Self {
        let mut z = Self::zero(conductor);
        let m = conductor as i64;
        let half = m / 2;
        let k = k.rem_euclid(m);
        if k < half {
            z.coeffs[k as usize] = Rational::one();
        } else {
            z.coeffs[(k - half) as usize] = -Rational::one();
        }
        z
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Re-express in `Q(ζ_target)`, `target` a power-of-two multiple of the
    /// current conductor, using `ζ_m = ζ_target^{target/m}`.
    pub fn embed(&self, target: u32) -> Result<Self> {
        check_conductor(target)?;
        if target < self.conductor || target % self.conductor != 0 {
            return Err(Error::InvalidArgument(format!(
                "cannot embed conductor {} into {target}",
                self.conductor
            )));
        }
        let step = (target / self.conductor) as usize;
        let mut out = Self::zero(target);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.coeffs[i * step] = c.clone();
        }
        Ok(out)
    }

    /// Inverse of [`embed`](Self::embed): `None` if the value does not lie in
    /// the smaller field.
    pub fn restrict(&self, target: u32) -> Option<Self> {
        check_conductor(target).ok()?;
        if target > self.conductor || self.conductor % target != 0 {
            return None;
        }
        let step = (self.conductor / target) as usize;
        let mut out = Self::zero(target);
        for (i, c) in self.coeffs.iter().enumerate() {
            if i % step == 0 {
                out.coeffs[i / step] = c.clone();
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(out)
    }

    fn unify(a: &Self, b: &Self) -> (Self, Self) {
        let m = a.conductor.max(b.conductor);
        (
            a.embed(m).expect("power-of-two conductors nest"),
            b.embed(m).expect("power-of-two conductors nest"),
        )
    }

    pub fn to_rational(&self) -> Result<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational)
        }
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.coeffs.len();
        let mut out = Self::zero(self.conductor);
        out.coeffs[0] = self.coeffs[0].clone();
        // ζ^{-i} = -ζ^{n-i}
        for i in 1..n {
            out.coeffs[n - i] = -self.coeffs[i].clone();
        }
        out
    }

    pub fn scale(&self, r: &Rational) -> Self {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power; negative exponents go through [`inverse`](Self::inverse).
    pub fn powi(&self, e: i64) -> Result<Self> {
        let p = self.pow(e.unsigned_abs() as u32);
        if e < 0 {
            p.inverse()
        } else {
            Ok(p)
        }
    }

    /// Multiplicative inverse, found by solving `a · x = 1` as a linear
    /// system over `Q` in the power basis.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let n = self.coeffs.len();
        // column j holds the coordinates of a·ζ^j
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            cols.push(self * &Self::zeta_pow(self.conductor, j as i64));
        }
        let mut aug: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational> = cols.iter().map(|c| c.coeffs[i].clone()).collect();
                row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        let x = solve_augmented(&mut aug).ok_or(Error::ZeroInverse)?;
        Ok(CycloNumber {
            conductor: self.conductor,
            coeffs: x,
        })
    }
}

/// Gauss-Jordan elimination on an `n × (n+1)` augmented system.
fn solve_augmented(aug: &mut [Vec<Rational>]) -> Option<Vec<Rational>> {
    let n = aug.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for v in aug[col].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col].clone();
                for c in col..=n {
                    let delta = &factor * &aug[col][c];
                    aug[r][c] = &aug[r][c] - delta;
                }
            }
        }
    }
    Some(aug.iter().map(|row| row[n].clone()).collect())
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            self.coeffs == other.coeffs
        } else {
            let (a, b) = Self::unify(self, other);
            a.coeffs == b.coeffs
        }
    }
}

impl Eq for CycloNumber {}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: Self) -> CycloNumber {
        if self.conductor != rhs.conductor {
            let (a, b) = CycloNumber::unify(self, rhs);
            return &a + &b;
        }
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: Self) -> CycloNumber {
        self + &(-rhs)
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: Self) -> CycloNumber {
        if self.conductor != rhs.conductor {
            let (a, b) = CycloNumber::unify(self, rhs);
            return &a * &b;
        }
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in rhs.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let k = i + j;
                let p = x * y;
                if k < n {
                    out[k] += p;
                } else {
                    out[k - n] -= p;
                }
            }
        }
        CycloNumber {
            conductor: self.conductor,
            coeffs: out,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloNumber {
            type Output = CycloNumber;
            fn $m(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("z")?,
                1 => write!(f, "{mag}*z")?,
                _ if unit => write!(f, "z^{i}")?,
                _ => write!(f, "{mag}*z^{i}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    fn z(m: u32, k: i64) -> CycloNumber {
        CycloNumber::zeta_pow(m, k)
    }

    fn int(m: u32, n: i64) -> CycloNumber {
        CycloNumber::from_int(m, n)
    }

    /// Schoolbook product of integer coefficient vectors followed by reduction
    /// modulo `x^{n} + 1`, written without the library's multiplication.
    fn naive_product(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
        let mut full = vec![0i64; 2 * n];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                full[i + j] += x * y;
            }
        }
        let mut out = full[..n].to_vec();
        for k in n..2 * n {
            out[k - n] -= full[k];
        }
        out
    }

    #[test]
    fn gaussian_integer_product() {
        let a = &int(4, 1) - &z(4, 1);
        let b = &int(4, 1) + &z(4, 1);
        assert_eq!(&a * &b, int(4, 2));
    }

    #[test]
    fn fourth_power_of_zeta8() {
        let x = z(8, 1);
        assert_eq!(&(&(&x * &x) * &x) * &x, int(8, -1));
        assert_eq!(x.pow(8), int(8, 1));
    }

    #[test]
    fn delta_values_product_for_ell16() {
        // (2 - ζ - ζ^7)(2 - ζ^3 - ζ^5) with ζ = ζ_8
        let a = &(&int(8, 2) - &z(8, 1)) - &z(8, 7);
        let b = &(&int(8, 2) - &z(8, 3)) - &z(8, 5);
        // independent check through the schoolbook oracle
        let av: Vec<i64> = vec![2, -1, 0, 1];
        let bv: Vec<i64> = vec![2, 1, 0, -1];
        assert_eq!(a.coeffs(), &av.iter().map(|&c| rat(c, 1)).collect::<Vec<_>>()[..]);
        assert_eq!(b.coeffs(), &bv.iter().map(|&c| rat(c, 1)).collect::<Vec<_>>()[..]);
        assert_eq!(naive_product(&av, &bv, 4), vec![2, 0, 0, 0]);
        assert_eq!(&a * &b, int(8, 2));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(int(4, 2).inverse().unwrap(), CycloNumber::from_rational(4, rat(1, 2)));
        assert_eq!(z(4, 1).inverse().unwrap(), -z(4, 1));
        let a = &(&int(8, 2) - &z(8, 1)) - &z(8, 7);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, int(8, 1));
        assert_eq!(CycloNumber::zero(8).inverse(), Err(Error::ZeroInverse));
    }

    #[test]
    fn to_rational_examples() {
        assert_eq!(CycloNumber::from_rational(16, rat(7, 4)).to_rational(), Ok(rat(7, 4)));
        assert_eq!(z(8, 1).to_rational(), Err(Error::NotRational));
    }

    #[test]
    fn conjugate_of_root() {
        for k in 0..16 {
            assert_eq!(z(16, k).conj(), z(16, -k));
            assert_eq!(&z(16, k) * &z(16, k).conj(), int(16, 1));
        }
    }

    #[test]
    fn mixed_conductor_embeds() {
        // ζ_4 = ζ_8^2
        assert_eq!(&z(4, 1) + &int(8, 0), z(8, 2));
        assert_eq!(z(4, 1), z(8, 2));
        assert_eq!(&z(4, 1) * &z(8, 1), z(8, 3));
    }

    #[test]
    fn display_is_readable() {
        let a = &(&int(8, 2) - &z(8, 1)) + &z(8, 3).scale(&rat(3, 2));
        assert_eq!(a.to_string(), "2 - z + 3/2*z^3");
        assert_eq!(CycloNumber::zero(4).to_string(), "0");
    }

    fn arb_cyclo(m: u32) -> impl Strategy<Value = CycloNumber> {
        proptest::collection::vec((-9i64..10, 1i64..5), (m / 2) as usize).prop_map(move |v| {
            CycloNumber::new(m, v.into_iter().map(|(p, q)| rat(p, q)).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn inverse_multiplies_to_one(a in arb_cyclo(16)) {
            prop_assume!(!a.is_zero());
            let inv = a.inverse().unwrap();
            prop_assert_eq!(&a * &inv, CycloNumber::one(16));
        }

        #[test]
        fn embed_then_restrict_is_identity(a in arb_cyclo(8)) {
            let up = a.embed(16).unwrap();
            prop_assert_eq!(up.restrict(8).unwrap(), a.clone());
            prop_assert_eq!(up.embed(64).unwrap().restrict(8).unwrap(), a);
        }

        #[test]
        fn multiplication_matches_schoolbook(
            a in proptest::collection::vec(-20i64..20, 8),
            b in proptest::collection::vec(-20i64..20, 8),
        ) {
            let to = |v: &[i64]| CycloNumber::new(16, v.iter().map(|&c| rat(c, 1)).collect()).unwrap();
            let expect = naive_product(&a, &b, 8);
            prop_assert_eq!(&to(&a) * &to(&b), to(&expect));
        }
    }
}

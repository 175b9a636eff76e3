use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Shorthand for `p/q` as a [`Rational`]. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Canonical `"p/q"` rendering. The denominator is always written, so
/// integers come out as `"5/1"`.
pub fn format_fraction(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Inverse of [`format_fraction`]; also accepts a bare integer.
pub fn parse_fraction(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// An element of `Q/2Z`, represented by the unique rational in `[0, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueMod2Z(Rational);

impl ResidueMod2Z {
    pub fn new(r: Rational) -> Self {
        let two = BigInt::from(2);
        // floor(r / 2) computed on the integer pair
        let quotient = r.numer().div_floor(&(r.denom() * &two));
        let rep = r - Rational::from_integer(quotient * two);
        debug_assert!(!rep.is_negative() && rep < Rational::from_integer(BigInt::from(2)));
        ResidueMod2Z(rep)
    }

    pub fn zero() -> Self {
        ResidueMod2Z(Rational::zero())
    }

    pub fn rep(&self) -> &Rational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Additive order in `Q/2Z`: the denominator of `rep/2` in lowest terms.
    pub fn order(&self) -> BigInt {
        (&self.0 / Rational::from_integer(BigInt::from(2))).denom().clone()
    }

    pub fn scale(&self, n: &BigInt) -> Self {
        ResidueMod2Z::new(&self.0 * Rational::from_integer(n.clone()))
    }
}

impl From<Rational> for ResidueMod2Z {
    fn from(r: Rational) -> Self {
        ResidueMod2Z::new(r)
    }
}

impl fmt::Display for ResidueMod2Z {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_fraction(&self.0))
    }
}

impl Add for &ResidueMod2Z {
    type Output = ResidueMod2Z;
    fn add(self, rhs: Self) -> ResidueMod2Z {
        ResidueMod2Z::new(&self.0 + &rhs.0)
    }
}

impl Sub for &ResidueMod2Z {
    type Output = ResidueMod2Z;
    fn sub(self, rhs: Self) -> ResidueMod2Z {
        ResidueMod2Z::new(&self.0 - &rhs.0)
    }
}

impl Neg for &ResidueMod2Z {
    type Output = ResidueMod2Z;
    fn neg(self) -> ResidueMod2Z {
        ResidueMod2Z::new(-&self.0)
    }
}

impl Add for ResidueMod2Z {
    type Output = ResidueMod2Z;
    fn add(self, rhs: Self) -> ResidueMod2Z {
        &self + &rhs
    }
}

impl Sub for ResidueMod2Z {
    type Output = ResidueMod2Z;
    fn sub(self, rhs: Self) -> ResidueMod2Z {
        &self - &rhs
    }
}

impl Neg for ResidueMod2Z {
    type Output = ResidueMod2Z;
    fn neg(self) -> ResidueMod2Z {
        -&self
    }
}

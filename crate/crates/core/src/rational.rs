//! Exact rationals in lowest terms.
//!
//! Thin wrapper over [`num_rational::BigRational`]; the wrapper exists so the
//! rest of the crate has one place that fixes normalization, display and the
//! integer/rational mixing used by the genus bounds.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Int;

/// A rational number, always stored with a positive denominator and
/// coprime parts.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn new(numerator: impl Into<Int>, denominator: impl Into<Int>) -> Result<Self> {
        let den = denominator.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numerator.into(), den)))
    }

    pub fn from_integer(n: impl Into<Int>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn numerator(&self) -> &Int {
        self.0.numer()
    }

    /// Always `>= 1`.
    pub fn denominator(&self) -> &Int {
        self.0.denom()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn to_integer(&self) -> Option<Int> {
        self.is_integer().then(|| self.0.numer().clone())
    }

    pub fn floor(&self) -> Int {
        self.0.numer().div_floor(self.0.denom())
    }

    pub fn ceil(&self) -> Int {
        self.0.numer().div_ceil(self.0.denom())
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn checked_div(&self, other: &Rational) -> Result<Rational> {
        if other.0.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(&self.0 / &other.0))
    }

    /// `n / d` for integers.
    pub fn ratio(n: &Int, d: &Int) -> Result<Self> {
        Rational::new(n.clone(), d.clone())
    }
}

impl From<Int> for Rational {
    fn from(n: Int) -> Self {
        Rational::from_integer(n)
    }
}

impl From<&Int> for Rational {
    fn from(n: &Int) -> Self {
        Rational::from_integer(n.clone())
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

/// Parses `p` or `p/q` in base 10.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = Error::OutOfRange("not a base-10 rational");
        match s.split_once('/') {
            None => BigInt::from_str(s.trim())
                .map(Rational::from)
                .map_err(|_| bad),
            Some((n, d)) => {
                let n = BigInt::from_str(n.trim()).map_err(|_| bad.clone())?;
                let d = BigInt::from_str(d.trim()).map_err(|_| bad)?;
                Rational::new(n, d)
            }
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Rational) -> Rational {
                Rational($tr::$m(self.0, rhs.0))
            }
        }
        impl<'a> $tr<&'a Rational> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Rational) -> Rational {
                Rational($tr::$m(&self.0, &rhs.0))
            }
        }
        impl $tr<Int> for Rational {
            type Output = Rational;
            fn $m(self, rhs: Int) -> Rational {
                Rational($tr::$m(self.0, BigRational::from_integer(rhs)))
            }
        }
        impl<'a> $tr<&'a Int> for &'a Rational {
            type Output = Rational;
            fn $m(self, rhs: &'a Int) -> Rational {
                Rational($tr::$m(&self.0, BigRational::from_integer(rhs.clone())))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Panics on a zero divisor, like integer division; use
/// [`Rational::checked_div`] when the divisor is data-dependent.
impl Div<Rational> for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        Rational(self.0 / rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl PartialEq<Int> for Rational {
    fn eq(&self, other: &Int) -> bool {
        self.0.is_integer() && self.0.numer() == other
    }
}

impl PartialOrd<Int> for Rational {
    fn partial_cmp(&self, other: &Int) -> Option<core::cmp::Ordering> {
        Some(self.0.cmp(&BigRational::from_integer(other.clone())))
    }
}

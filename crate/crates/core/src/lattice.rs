//! Rank-2 even hyperbolic lattices and K3 Riemann–Roch.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::Int;

/// Symmetric 2×2 intersection matrix of an even lattice of signature (1,1).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gram2 {
    g11: Int,
    g12: Int,
    g22: Int,
}

impl Gram2 {
    /// Rejects matrices with an odd diagonal entry or a non-negative
    /// determinant.
    pub fn new(g11: impl Into<Int>, g12: impl Into<Int>, g22: impl Into<Int>) -> Result<Self> {
        let (g11, g12, g22) = (g11.into(), g12.into(), g22.into());
        if g11.is_odd() || g22.is_odd() {
            return Err(Error::InvalidGram("diagonal entries must be even"));
        }
        let det = &g11 * &g22 - &g12 * &g12;
        if !det.is_negative() {
            return Err(Error::InvalidGram(
                "determinant must be negative (signature (1,1))",
            ));
        }
        Ok(Gram2 { g11, g12, g22 })
    }

    /// Checks symmetry of a full matrix before building the lattice.
    pub fn from_rows(rows: [[Int; 2]; 2]) -> Result<Self> {
        let [[a, b], [c, d]] = rows;
        if b != c {
            return Err(Error::InvalidGram("matrix must be symmetric"));
        }
        Gram2::new(a, b, d)
    }

    pub fn entries(&self) -> (&Int, &Int, &Int) {
        (&self.g11, &self.g12, &self.g22)
    }

    pub fn rows(&self) -> [[Int; 2]; 2] {
        [
            [self.g11.clone(), self.g12.clone()],
            [self.g12.clone(), self.g22.clone()],
        ]
    }

    pub fn determinant(&self) -> Int {
        &self.g11 * &self.g22 - &self.g12 * &self.g12
    }
}

/// A divisor class `a·Γ1 + b·Γ2` in the stored basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DivClass2 {
    pub a: Int,
    pub b: Int,
}

impl DivClass2 {
    pub fn new(a: impl Into<Int>, b: impl Into<Int>) -> Self {
        DivClass2 {
            a: a.into(),
            b: b.into(),
        }
    }

    pub fn zero() -> Self {
        DivClass2::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Non-negative coordinates.
    pub fn in_first_quadrant(&self) -> bool {
        !self.a.is_negative() && !self.b.is_negative()
    }

    /// Coordinates are coprime (the zero class is not primitive).
    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b) == Int::from(1)
    }

    /// Returns `k` with `self == k·base`, if one exists. `base` must be
    /// non-zero.
    pub fn multiple_of(&self, base: &DivClass2) -> Option<Int> {
        if base.is_zero() {
            return None;
        }
        if &self.a * &base.b != &self.b * &base.a {
            return None;
        }
        let (num, den) = if base.a.is_zero() {
            (&self.b, &base.b)
        } else {
            (&self.a, &base.a)
        };
        let (k, rem) = num.div_rem(den);
        rem.is_zero().then_some(k)
    }

    pub fn scaled(&self, k: &Int) -> DivClass2 {
        DivClass2 {
            a: &self.a * k,
            b: &self.b * k,
        }
    }
}

impl fmt::Display for DivClass2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl Add for &DivClass2 {
    type Output = DivClass2;
    fn add(self, rhs: &DivClass2) -> DivClass2 {
        DivClass2 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &DivClass2 {
    type Output = DivClass2;
    fn sub(self, rhs: &DivClass2) -> DivClass2 {
        DivClass2 {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Neg for &DivClass2 {
    type Output = DivClass2;
    fn neg(self) -> DivClass2 {
        DivClass2 {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Mul<&DivClass2> for &Int {
    type Output = DivClass2;
    fn mul(self, rhs: &DivClass2) -> DivClass2 {
        rhs.scaled(self)
    }
}

/// Intersection number `D·E`.
pub fn pair(d: &DivClass2, e: &DivClass2, gram: &Gram2) -> Int {
    &d.a * &e.a * &gram.g11 + (&d.a * &e.b + &d.b * &e.a) * &gram.g12 + &d.b * &e.b * &gram.g22
}

/// `D²`; even on every lattice accepted by [`Gram2::new`].
pub fn self_int(d: &DivClass2, gram: &Gram2) -> Int {
    pair(d, d, gram)
}

/// `χ(O_S(D)) = D²/2 + 2` on a K3 surface.
pub fn euler_char_k3(d: &DivClass2, gram: &Gram2) -> Result<Int> {
    let sq = self_int(d, gram);
    if sq.is_odd() {
        return Err(Error::OddSquare);
    }
    Ok(sq / 2 + 2)
}

/// `n(n-1)/2`, which is the binomial coefficient for `n >= 0`.
pub fn binom2(n: &Int) -> Int {
    n * (n - 1) / 2
}

/// `n(n-1)(n-2)/6`, which is the binomial coefficient for `n >= 0`.
pub fn binom3(n: &Int) -> Int {
    n * (n - 1) * (n - 2) / 6
}

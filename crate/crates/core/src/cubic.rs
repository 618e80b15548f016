//! Curves on a smooth cubic surface, written in the blow-up basis
//! `δL − Σ mᵢEᵢ` as septuples `(δ; m1, …, m6)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{binom2, binom3};
use crate::quartic::{max_genus, tenth_square};
use crate::verdict::{Criterion, VerdictKind};
use crate::{Int, Rational};

/// A divisor class `(δ; m1, …, m6)` with `m` stored non-increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Septuple {
    delta: Int,
    m: [Int; 6],
}

impl Septuple {
    /// Sorts `m` and checks `δ ≥ m1` and `δ ≥ m1 + m2 + m3`.
    pub fn new(delta: impl Into<Int>, m: [Int; 6]) -> Result<Self> {
        let delta = delta.into();
        let mut m = m;
        m.sort_by(|x, y| y.cmp(x));
        if delta < m[0] {
            return Err(Error::InvalidSeptuple("delta must be at least m1"));
        }
        if delta < &m[0] + &m[1] + &m[2] {
            return Err(Error::InvalidSeptuple("delta must be at least m1+m2+m3"));
        }
        Ok(Septuple { delta, m })
    }

    pub fn from_i64(delta: i64, m: [i64; 6]) -> Result<Self> {
        Septuple::new(delta, m.map(Int::from))
    }

    pub fn delta(&self) -> &Int {
        &self.delta
    }

    /// `m1 ≥ … ≥ m6`.
    pub fn m(&self) -> &[Int; 6] {
        &self.m
    }

    /// `d = 3δ − Σ mᵢ`.
    pub fn degree(&self) -> Int {
        self.m.iter().fold(&self.delta * 3, |acc, mi| acc - mi)
    }

    /// `g = C(δ−1, 2) − Σ C(mᵢ, 2)`.
    pub fn genus(&self) -> Int {
        let g0 = binom2(&(&self.delta - 1));
        self.m.iter().fold(g0, |acc, mi| acc - binom2(mi))
    }

    /// Matches `(λ + δ0, λ + m0, tail…)` for some `λ ≥ 2`; `None` entries of
    /// `tail` match anything.
    fn matches_shifted(&self, delta0: &Int, m0: &Int, tail: [Option<&Int>; 5]) -> bool {
        let lambda = &self.delta - delta0;
        if lambda < Int::from(2) || self.m[0] != &lambda + m0 {
            return false;
        }
        tail.iter()
            .zip(&self.m[1..])
            .all(|(want, got)| want.is_none_or(|w| w == got))
    }

    fn matches_fixed(&self, delta0: i64, m0: i64, tail: [i64; 5]) -> bool {
        let tail = tail.map(Int::from);
        self.matches_shifted(
            &Int::from(delta0),
            &Int::from(m0),
            [
                Some(&tail[0]),
                Some(&tail[1]),
                Some(&tail[2]),
                Some(&tail[3]),
                Some(&tail[4]),
            ],
        )
    }
}

impl fmt::Display for Septuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(
            f,
            "({};{},{},{},{},{},{})",
            self.delta, m[0], m[1], m[2], m[3], m[4], m[5]
        )
    }
}

/// `(d, g)` of the class.
pub fn cubic_degree_genus(c: &Septuple) -> (Int, Int) {
    (c.degree(), c.genus())
}

/// Outcome of a vanishing test that can only certify vanishing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Vanishing {
    Zero,
    Inconclusive,
}

/// A statement that is only asserted inside a range.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InRange {
    Holds,
    Fails,
    OutOfRange,
}

/// `H¹(I_C(3)) = 0` when `m6 ≥ 3` and `C ≠ (λ+9, λ+3, 3, …, 3)`, `λ ≥ 2`.
pub fn twist3_vanishing(c: &Septuple) -> Vanishing {
    if c.m[5] >= Int::from(3) && !c.matches_fixed(9, 3, [3; 5]) {
        Vanishing::Zero
    } else {
        Vanishing::Inconclusive
    }
}

/// Linear normality data of the class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LinearNormality {
    /// `H¹(I_C(1)) = 0` when `m6 ≥ 1` and `C ≠ (λ+3, λ+1, 1, …, 1)`, `λ ≥ 2`.
    pub h1_i1: Vanishing,
    /// "`H¹(I_C(3)) ≠ 0` and `H¹(I_C(1)) = 0`", which for `d ≥ 14`,
    /// `g ≥ 3d − 18` holds exactly when `1 ≤ m6 ≤ 2`.
    pub h1_i3_nonzero: InRange,
}

pub fn linear_normality(c: &Septuple) -> LinearNormality {
    let h1_i1 = if c.m[5] >= Int::from(1) && !c.matches_fixed(3, 1, [1; 5]) {
        Vanishing::Zero
    } else {
        Vanishing::Inconclusive
    };
    let (d, g) = cubic_degree_genus(c);
    let h1_i3_nonzero = if d < Int::from(14) || g < &d * 3 - 18 {
        InRange::OutOfRange
    } else if c.m[5] >= Int::from(1) && c.m[5] <= Int::from(2) {
        InRange::Holds
    } else {
        InRange::Fails
    };
    LinearNormality {
        h1_i1,
        h1_i3_nonzero,
    }
}

fn check_fixed_part_hypotheses(c: &Septuple, v: &Int) -> Result<()> {
    if v.is_negative() {
        return Err(Error::HypothesisFailed("v must be non-negative"));
    }
    if &c.m[2] < v {
        return Err(Error::HypothesisFailed("m3 must be at least v"));
    }
    let v3 = v * 3;
    if c.matches_shifted(&v3, v, [Some(v), Some(v), None, None, None]) {
        return Err(Error::HypothesisFailed(
            "tuple is (l+3v, l+v, v, v, m4, m5, m6) with l >= 2",
        ));
    }
    Ok(())
}

/// Lower bound `C(v,3) − Σ C(v+1−mᵢ, 2)` for `h⁰(I_C(v)) − h¹(I_C(v))`, the
/// sum over `i ∈ {4,5,6}` with `mᵢ < v`.
pub fn ideal_euler_lower_bound(c: &Septuple, v: &Int) -> Result<Int> {
    check_fixed_part_hypotheses(c, v)?;
    let vp1 = v + 1;
    let sum = c.m[3..]
        .iter()
        .filter(|mi| *mi < v)
        .fold(Int::from(0), |acc, mi| acc + binom2(&(&vp1 - mi)));
    Ok(binom3(v) - sum)
}

/// `h¹(I_C(v))` from the fixed part `F = Σ nᵢEᵢ`, `nᵢ = max{0, v − mᵢ}`,
/// of `|C − vH|`: `h⁰(O_F)` if the mobile part is non-zero, else one less.
pub fn h1_ideal_cubic(c: &Septuple, v: &Int) -> Result<Int> {
    check_fixed_part_hypotheses(c, v)?;
    let zero = Int::from(0);
    let v3 = v * 3;
    if c.delta == v3 && c.m.iter().all(|mi| mi == v) {
        return Ok(zero);
    }
    let h0_of = c.m[3..].iter().fold(zero.clone(), |acc, mi| {
        let n = core::cmp::max(v - mi, zero.clone());
        acc + binom2(&(n + 1))
    });
    let mobile_zero = c.delta == v3 && c.m.iter().all(|mi| mi <= v);
    Ok(if mobile_zero { h0_of - 1 } else { h0_of })
}

/// `d ≥ 14` and `3d − 18 ≤ g ≤ (d² − 4)/8`.
pub fn conjecture_range(d: &Int, g: &Int) -> bool {
    d >= &Int::from(14) && g >= &(d * 3 - 18) && g * 8 <= d * d - 4
}

/// `d²/10 − d/2 + 18`.
pub fn cubic_quadratic_bound(d: &Int) -> Rational {
    tenth_square(d) - Rational::new(d.clone(), 2).expect("non-zero") + Int::from(18)
}

/// `g > max{d²/10 − d/2 + 18, G(d, t)}` with `d > t(t−1)`.
pub fn cubic_large_genus(d: &Int, g: &Int, t: &Int) -> bool {
    match max_genus(d, t) {
        Ok(gt) => {
            let g = Rational::from(g);
            g > cubic_quadratic_bound(d) && g > gt
        }
        Err(_) => false,
    }
}

/// `g > max{d²/10 − d/2 + 18, G(d, 6)}`, `d ≥ 31`.
pub fn cubic_sextic_range(d: &Int, g: &Int) -> bool {
    d >= &Int::from(31) && cubic_large_genus(d, g, &Int::from(6))
}

/// `g > d²/10 − d/2 + 18`, `d ≥ 58`.
pub fn cubic_quadratic_range(d: &Int, g: &Int) -> bool {
    d >= &Int::from(58) && cubic_quadratic_bound(d) < *g
}

/// Classification of the maximal family of curves in a class on a cubic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicVerdict {
    pub kind: VerdictKind,
    pub tuple: Septuple,
    pub d: Int,
    pub g: Int,
    /// `d + g + 18`, present for `d > 9`.
    pub dim_w: Option<Int>,
    pub h1_i3: Option<Int>,
    pub h1_i1_zero: Option<bool>,
    pub tangent_dim: Option<Int>,
    pub linear_normality: LinearNormality,
    pub conjecture_range: bool,
    pub criteria: Vec<Criterion>,
    /// Guards that failed, for undecided classes.
    pub unmet: Vec<String>,
}

pub fn classify_cubic(c: &Septuple) -> CubicVerdict {
    let (d, g) = cubic_degree_genus(c);
    let three = Int::from(3);
    let h1_i3 = h1_ideal_cubic(c, &three).ok();
    let dim_w = (d > Int::from(9)).then(|| &d + &g + Int::from(18));
    let tangent_dim = match (&dim_w, &h1_i3) {
        (Some(w), Some(h)) => Some(w + h),
        _ => None,
    };
    let ln = linear_normality(c);
    let conj = conjecture_range(&d, &g);
    let mut v = CubicVerdict {
        kind: VerdictKind::Undetermined,
        tuple: c.clone(),
        d,
        g,
        dim_w,
        h1_i3,
        h1_i1_zero: (ln.h1_i1 == Vanishing::Zero).then_some(true),
        tangent_dim,
        linear_normality: ln,
        conjecture_range: conj,
        criteria: Vec::new(),
        unmet: Vec::new(),
    };
    if conj {
        v.criteria.push(Criterion::ConjecturedRange);
    }
    let m = &c.m;
    let (m4, m5, m6) = (&m[3], &m[4], &m[5]);
    let z = Int::from;

    if m6 >= &three {
        if twist3_vanishing(c) == Vanishing::Zero {
            v.kind = VerdictKind::GenericallySmoothComponent;
            v.criteria.push(Criterion::CubicTwist3Vanishing);
        } else {
            v.criteria.push(Criterion::CubicExceptionalSmooth);
        }
        return v;
    }

    let arm = if *m6 == z(2) {
        Some((
            Criterion::CubicM6Two,
            m5 >= &z(4) && v.d >= z(21),
            c.matches_fixed(12, 4, [4, 4, 4, 4, 2]),
        ))
    } else if *m6 == z(1) && m5 >= &z(6) {
        Some((
            Criterion::CubicM6OneM5Six,
            v.d >= z(35),
            c.matches_fixed(18, 6, [6, 6, 6, 6, 1]),
        ))
    } else if *m6 == z(1) && *m5 == z(5) {
        Some((
            Criterion::CubicM6OneM5Five,
            m4 >= &z(7) && v.d >= z(35),
            c.matches_fixed(21, 7, [7, 7, 7, 5, 1]),
        ))
    } else {
        None
    };
    match arm {
        Some((crit, true, false)) => {
            v.kind = VerdictKind::NonReducedComponent;
            v.criteria.push(crit);
            return v;
        }
        Some((crit, true, true)) => {
            v.criteria.push(crit);
            v.criteria.push(Criterion::CubicExceptionalTuple);
            v.unmet.push(format!("{} excludes this tuple", crit.tag()));
        }
        Some((crit, false, _)) => v
            .unmet
            .push(format!("{}: {}", crit.tag(), crit.description())),
        None if m6.is_negative() || m6.is_zero() => {}
        None => v
            .unmet
            .push(String::from("m6 = 1 needs m5 >= 6, or m5 = 5 with m4 >= 7")),
    }

    large_genus_arm(&mut v);
    if v.kind == VerdictKind::Undetermined && m6.is_zero() {
        v.criteria.push(Criterion::CubicM6Zero);
    }
    v
}

fn large_genus_arm(v: &mut CubicVerdict) {
    let fired = (6..=8u8).find(|t| cubic_large_genus(&v.d, &v.g, &Int::from(*t)));
    let Some(t) = fired else {
        v.unmet.push(String::from(
            "genus not above max{d^2/10-d/2+18, G(d,t)} for t in 6..8",
        ));
        return;
    };
    if v.linear_normality.h1_i1 != Vanishing::Zero {
        v.unmet.push(String::from(
            "linear normality not certified by the septuple",
        ));
        return;
    }
    let nonzero = match &v.h1_i3 {
        Some(h) => Some(h.is_positive()),
        None => match v.linear_normality.h1_i3_nonzero {
            InRange::Holds => Some(true),
            InRange::Fails => Some(false),
            InRange::OutOfRange => None,
        },
    };
    let Some(nonzero) = nonzero else {
        v.unmet.push(String::from("h1(I_C(3)) unknown"));
        return;
    };
    v.criteria.push(Criterion::CubicLargeGenus(t));
    if cubic_quadratic_range(&v.d, &v.g) {
        v.criteria.push(Criterion::CubicQuadraticRange);
    }
    v.criteria.push(Criterion::CubicLinearNormality);
    v.kind = if nonzero {
        VerdictKind::NonReducedComponent
    } else {
        VerdictKind::GenericallySmoothComponent
    };
}

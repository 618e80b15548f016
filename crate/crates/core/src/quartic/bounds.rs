//! Genus bounds and dimension formulas for curves on a surface of degree `s`.
//!
//! All comparisons are made in exact rationals; no floor is ever taken on a
//! bound before comparing.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::binom3;
use crate::{Int, Rational};

/// Maximum genus `G(d, s)` of a smooth connected space curve of degree `d`
/// lying on no surface of degree `s − 1`, valid for `d > s(s − 1)`.
pub fn max_genus(d: &Int, s: &Int) -> Result<Int> {
    max_genus_with_residue(d, s).map(|(g, _)| g)
}

/// `G(d, s)` together with the residue `r`, `0 ≤ r < s`, `d + r ≡ 0 (mod s)`.
pub fn max_genus_with_residue(d: &Int, s: &Int) -> Result<(Int, Int)> {
    if s < &Int::from(2) {
        return Err(Error::OutOfRange("s must be at least 2"));
    }
    if d <= &(s * (s - Int::from(1))) {
        return Err(Error::OutOfRange("d must exceed s(s-1)"));
    }
    let r = (-d).mod_floor(s);
    let two_s = s * Int::from(2);
    // 1 + (d/2)(d/s + s - 4) - r(s-r)(s-1)/(2s), over the common denominator 2s
    let num = &two_s + d * (d + s * s - s * Int::from(4)) - &r * (s - &r) * (s - Int::from(1));
    let g = Rational::new(num, two_s)?;
    let g = g.to_integer().ok_or(Error::NonIntegral)?;
    Ok((g, r))
}

/// `min{G(d,5) − 1, d²/10 + 21}` for `d ≥ 21`, the genus threshold above
/// which a maximal family on a quartic is a component.
pub fn quartic_genus_threshold(d: &Int) -> Option<Rational> {
    if d < &Int::from(21) {
        return None;
    }
    let g5 = max_genus(d, &Int::from(5)).ok()? - Int::from(1);
    let quad = tenth_square(d) + Int::from(21);
    Some(core::cmp::min(Rational::from(g5), quad))
}

/// `d ≥ 21` and `g > min{G(d,5) − 1, d²/10 + 21}`; false below degree 21.
pub fn quartic_large_genus(d: &Int, g: &Int) -> bool {
    quartic_genus_threshold(d).is_some_and(|t| t < *g)
}

/// `d ≥ 31`, `g > 21 + d²/10` and `h¹(I_C(1)) ≤ d − 25`.
pub fn quartic_quadratic_genus(d: &Int, g: &Int, h1_ic1: &Int) -> Result<bool> {
    if h1_ic1.is_negative() {
        return Err(Error::NegativeInput("h1(I_C(1))"));
    }
    Ok(d >= &Int::from(31)
        && tenth_square(d) + Int::from(21) < *g
        && h1_ic1 <= &(d - Int::from(25)))
}

/// `max{d − g, d/2} − 3`, an upper bound for `h¹(I_C(1))` of a non-plane
/// curve (Clifford plus Riemann–Roch).
pub fn clifford_h1_bound(d: &Int, g: &Int) -> Result<Rational> {
    if d < &Int::from(1) {
        return Err(Error::OutOfRange("d must be positive"));
    }
    let half = Rational::new(d.clone(), 2)?;
    let diff = Rational::from(d - g);
    Ok(core::cmp::max(diff, half) - Int::from(3))
}

/// Necessary condition for a component on a degree-`s` surface:
/// `g ≥ s·d − C(s+3, 3) + 2`.
pub fn component_genus_necessary(d: &Int, g: &Int, s: &Int) -> Result<bool> {
    check_degree_s(s, 1)?;
    Ok(g >= &(s * d - binom3(&(s + Int::from(3))) + Int::from(2)))
}

/// `(4 − s)d + g + C(s+3, 3) − 2`, the dimension of a maximal family on a
/// smooth degree-`s` surface when the flag scheme is smooth; `g + 33` for
/// quartics, `d + g + 18` for cubics.
pub fn expected_component_dim(d: &Int, g: &Int, s: &Int) -> Result<Int> {
    check_degree_s(s, 1)?;
    Ok((Int::from(4) - s) * d + g + binom3(&(s + Int::from(3))) - Int::from(2))
}

/// Inputs of [`linked_component_dim`]: a curve `C ≡ eE + fH` on a smooth
/// degree-`s` surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkedDimInputs {
    pub d: Int,
    pub g: Int,
    pub s: Int,
    /// `h⁰(I_{C/S}(s)) + h⁰(I_{C/S}(s−4))`.
    pub u: Int,
    /// `h⁰(I_{E/S}(s−4))`.
    pub h0_ie_s4: Int,
    /// `h¹(N_E) − h¹(O_E(s))`.
    pub t: Int,
    pub e: Int,
}

/// Dimension of the component containing `C ≡ eE + fH` when `E` is
/// unobstructed with vanishing `H¹(I_E(s))`, `H¹(I_E(s−4))`:
/// `(4−s)d + g + C(s+3,3) − 2 − u + h⁰(I_{E/S}(s−4)) + t`, where the last two
/// terms become `C(s−1, 3)` when `e = 0`.
pub fn linked_component_dim(x: &LinkedDimInputs) -> Result<Int> {
    if x.t.is_negative() {
        return Err(Error::NegativeInput("t"));
    }
    if x.u.is_negative() {
        return Err(Error::NegativeInput("u"));
    }
    if x.h0_ie_s4.is_negative() {
        return Err(Error::NegativeInput("h0(I_E/S(s-4))"));
    }
    let base = expected_component_dim(&x.d, &x.g, &x.s)? - &x.u;
    if x.e.is_zero() {
        Ok(base + binom3(&(&x.s - Int::from(1))))
    } else {
        Ok(base + &x.h0_ie_s4 + &x.t)
    }
}

/// `max{d²/s − g + 1, d²/(2s) + 1}`, an upper bound for `h⁰(N_{C/S})` on a
/// surface of degree `s ≥ 4`.
pub fn normal_sheaf_h0_bound(d: &Int, g: &Int, s: &Int) -> Result<Rational> {
    check_degree_s(s, 4)?;
    if d < &Int::from(1) {
        return Err(Error::OutOfRange("d must be positive"));
    }
    let one = Int::from(1);
    let sq = Rational::ratio(&(d * d), s)?;
    let a = sq.clone() - g.clone() + one.clone();
    let b = sq.checked_div(&Rational::from(2))? + one;
    Ok(core::cmp::max(a, b))
}

/// Upper bound for the dimension of a component whose general curve lies on
/// an integral surface of degree `s ≥ 4`, `d > s²`:
/// `C(s+3,3) − 1 + max{d²/s − g, d²/(2s), (4−s)d + g − 1 + h⁰(O_C(s−4))}`.
pub fn component_dim_upper_bound(d: &Int, g: &Int, s: &Int, h0_oc_s4: &Int) -> Result<Rational> {
    check_degree_s(s, 4)?;
    if d <= &(s * s) {
        return Err(Error::OutOfRange("d must exceed s^2"));
    }
    if h0_oc_s4.is_negative() {
        return Err(Error::NegativeInput("h0(O_C(s-4))"));
    }
    let sq = Rational::ratio(&(d * d), s)?;
    let a = sq.clone() - g.clone();
    let b = sq.checked_div(&Rational::from(2))?;
    let c = Rational::from((Int::from(4) - s) * d + g - Int::from(1) + h0_oc_s4);
    let m = core::cmp::max(core::cmp::max(a, b), c);
    Ok(m + (binom3(&(s + Int::from(3))) - Int::from(1)))
}

/// `g + 35 − ρ`, the dimension bound for a family whose very general curve
/// lies on a smooth quartic of Picard number `ρ` (`d > 16`).
pub fn picard_dim_bound(g: &Int, rho: &Int) -> Result<Int> {
    if rho < &Int::from(1) {
        return Err(Error::OutOfRange("Picard number must be at least 1"));
    }
    Ok(g + Int::from(35) - rho)
}

/// `d²/10`.
pub(crate) fn tenth_square(d: &Int) -> Rational {
    Rational::new(d * d, 10).expect("non-zero denominator")
}

fn check_degree_s(s: &Int, min: i64) -> Result<()> {
    if s < &Int::from(min) {
        return Err(match min {
            4 => Error::OutOfRange("s must be at least 4"),
            _ => Error::OutOfRange("s must be at least 1"),
        });
    }
    Ok(())
}

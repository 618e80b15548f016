//! Cohomology dimensions `h^i(S, O_S(D))` of line bundles on a rank-2 K3.
//!
//! Nef classes are handled by vanishing (big) or the pencil formula
//! (square zero). A non-nef effective class meets some (−2)-curve Γ with
//! `d = −D·Γ > 0`; then `h¹(D) = h¹(D − Γ) + d − 1` and the class is peeled
//! until it becomes nef or equals Γ. Anti-effective classes are reduced to
//! effective ones by Serre duality, and classes on neither side have only
//! `h¹`.
//!
//! Consecutive peels of the same curve are batched into one [`PeelRun`], so the
//! running time does not grow with the size of the coordinates.

use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::K3Model;
use crate::error::{Error, Result};
use crate::lattice::{euler_char_k3, DivClass2};
use crate::Int;

/// `(h⁰, h¹, h²)` of `O_S(class)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohDims {
    pub class: DivClass2,
    pub h0: Int,
    pub h1: Int,
    pub h2: Int,
}

impl CohDims {
    pub fn euler_char(&self) -> Int {
        &self.h0 - &self.h1 + &self.h2
    }

    /// Serre dual: the dimensions of `O_S(−class)`.
    pub fn dual(self) -> CohDims {
        CohDims {
            class: -&self.class,
            h0: self.h2,
            h1: self.h1,
            h2: self.h0,
        }
    }
}

/// `times` consecutive subtractions of the (−2)-curve with index `curve`,
/// starting from class `from` where `−from·Γ = first_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeelRun {
    pub curve: usize,
    pub from: DivClass2,
    pub times: Int,
    pub first_d: Int,
    pub last_d: Int,
    pub h1_added: Int,
}

/// How the computation ended once peeling stopped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Terminal {
    Zero,
    /// Nef with positive square: `h¹ = h² = 0`.
    NefBig,
    /// `k·E` for the pencil with index `pencil`: `h¹ = k − 1`.
    Pencil {
        pencil: usize,
        multiple: Int,
    },
    /// The class reached a (−2)-curve itself: `(1, 0, 0)`.
    MinusTwoCurve {
        curve: usize,
    },
    /// Neither the class nor its negative is effective: `h¹ = −χ`.
    NotEffective,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    /// The effective computation ran on `−D` and was dualized.
    pub dual: bool,
    pub runs: Vec<PeelRun>,
    pub terminal: Terminal,
}

impl Trace {
    pub fn peel_count(&self) -> Int {
        self.runs.iter().map(|r| &r.times).sum()
    }
}

pub fn cohomology(model: &K3Model, d: &DivClass2) -> Result<CohDims> {
    cohomology_traced(model, d).map(|(dims, _)| dims)
}

pub fn cohomology_traced(model: &K3Model, d: &DivClass2) -> Result<(CohDims, Trace)> {
    if d.is_zero() {
        let dims = CohDims {
            class: d.clone(),
            h0: Int::from(1),
            h1: Int::zero(),
            h2: Int::from(1),
        };
        let trace = Trace {
            dual: false,
            runs: Vec::new(),
            terminal: Terminal::Zero,
        };
        return Ok((dims, trace));
    }
    if model.is_effective(d) {
        return effective(model, d);
    }
    let neg = -d;
    if model.is_effective(&neg) {
        let (dims, mut trace) = effective(model, &neg)?;
        trace.dual = true;
        return Ok((dims.dual(), trace));
    }
    let chi = euler_char_k3(d, model.gram())?;
    if chi.is_positive() {
        return Err(Error::InconsistentCone);
    }
    let dims = CohDims {
        class: d.clone(),
        h0: Int::zero(),
        h1: -chi,
        h2: Int::zero(),
    };
    let trace = Trace {
        dual: false,
        runs: Vec::new(),
        terminal: Terminal::NotEffective,
    };
    Ok((dims, trace))
}

/// Non-zero effective `d`.
fn effective(model: &K3Model, start: &DivClass2) -> Result<(CohDims, Trace)> {
    let curves = model.minus_two_curves();
    let mut d = start.clone();
    let mut h1 = Int::zero();
    let mut runs = Vec::new();

    let terminal = loop {
        let hit = curves.iter().enumerate().find_map(|(i, c)| {
            let p = model.pair(&d, c);
            p.is_negative().then(|| (i, -p))
        });
        let Some((idx, dneg)) = hit else {
            let (extra, terminal) = nef_h1(model, &d)?;
            h1 += extra;
            break terminal;
        };
        let gamma = &curves[idx];
        if &d == gamma {
            break Terminal::MinusTwoCurve { curve: idx };
        }

        let times = run_length(model, &d, idx, &dneg)?;
        // sum of (dneg - 2j - 1) for j in 0..times
        let one = Int::from(1);
        let added: Int = &times * (&dneg - &one) - &times * (&times - &one);
        let last_d: Int = &dneg - (&times - &one) * 2;
        let next = &d - &gamma.scaled(&times);
        if !model.is_effective(&next) {
            return Err(Error::PeelLeftCone);
        }
        runs.push(PeelRun {
            curve: idx,
            from: d,
            times,
            first_d: dneg,
            last_d,
            h1_added: added.clone(),
        });
        h1 += added;
        d = next;
    };

    let chi = euler_char_k3(start, model.gram())?;
    let dims = CohDims {
        class: start.clone(),
        h0: chi + &h1,
        h1,
        h2: Int::zero(),
    };
    Ok((
        dims,
        Trace {
            dual: false,
            runs,
            terminal,
        },
    ))
}

/// Number of consecutive peels of curve `idx` that the one-at-a-time rule
/// would perform starting at `d`: the curve must stay the first one met
/// negatively, the class must stay effective after each subtraction, and the
/// class must not reach the curve itself.
fn run_length(model: &K3Model, d: &DivClass2, idx: usize, dneg: &Int) -> Result<Int> {
    let curves = model.minus_two_curves();
    let gamma = &curves[idx];

    // -(d - jΓ)·Γ = dneg - 2j stays positive
    let mut k: Int = (dneg + Int::from(1)).div_floor(&Int::from(2));

    for earlier in &curves[..idx] {
        let c = model.pair(gamma, earlier);
        if c.is_positive() {
            let room = model.pair(d, earlier);
            k = k.min(room.div_floor(&c) + 1);
        }
    }

    for (coord, g) in [(&d.a, &gamma.a), (&d.b, &gamma.b)] {
        if g.is_positive() {
            k = k.min(coord.div_floor(g));
        }
    }
    if !k.is_positive() {
        return Err(Error::PeelLeftCone);
    }

    if let Some(m) = d.multiple_of(gamma) {
        k = k.min(m - 1);
    }
    Ok(k)
}

/// `h¹` of a non-zero nef class.
fn nef_h1(model: &K3Model, d: &DivClass2) -> Result<(Int, Terminal)> {
    let sq = model.self_int(d);
    if sq.is_positive() {
        return Ok((Int::zero(), Terminal::NefBig));
    }
    if sq.is_negative() {
        return Err(Error::NefNegativeSquare);
    }
    model
        .elliptic_pencils()
        .iter()
        .enumerate()
        .find_map(|(i, e)| {
            d.multiple_of(e).filter(|k| k.is_positive()).map(|k| {
                (
                    &k - 1,
                    Terminal::Pencil {
                        pencil: i,
                        multiple: k,
                    },
                )
            })
        })
        .ok_or(Error::NoPencil)
}

/// `h¹(I_C(n))` for a curve `C` on the quartic, computed as
/// `h¹(O_S(C − nH))` (Serre duality makes the sign of the twist immaterial).
pub fn h1_ideal_quartic(model: &K3Model, c: &DivClass2, n: &Int) -> Result<Int> {
    let d = c - &model.hyperplane().scaled(n);
    cohomology(model, &d).map(|dims| dims.h1)
}

/// Closed-form non-vanishing of `h¹(O_S(D))` on the built-in surfaces.
///
/// * `q1`, `D` effective with `a > 0`: `h¹ ≠ 0 ⟺ 2a > 3b + 1`.
/// * `q2`, `a, b > 0`: `h¹ ≠ 0 ⟺ D` is not nef.
///
/// On `q1` the statement disagrees with direct computation at the (−2)-curve
/// `D = (1, 0)`, where `h¹ = 0`; the formula is returned as stated.
pub fn h1_nonvanishing_closed_form(model: &K3Model, d: &DivClass2) -> Result<bool> {
    use super::Builtin;
    match model.builtin() {
        Some(Builtin::Q1) => {
            if !model.is_effective(d) || !d.a.is_positive() {
                return Err(Error::OutOfRange("requires an effective class with a > 0"));
            }
            Ok(&d.a * 2 > &d.b * 3 + 1)
        }
        Some(Builtin::Q2) => {
            if !d.a.is_positive() || !d.b.is_positive() {
                return Err(Error::OutOfRange("requires a > 0 and b > 0"));
            }
            Ok(!model.is_nef(d))
        }
        None => Err(Error::OutOfRange(
            "closed form exists only for the built-in surfaces",
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Gram2;
    use alloc::vec;

    fn c(a: i64, b: i64) -> DivClass2 {
        DivClass2::new(a, b)
    }

    fn h1(model: &K3Model, a: i64, b: i64) -> Int {
        cohomology(model, &c(a, b)).unwrap().h1
    }

    #[test]
    fn quartic_line_examples() {
        let q1 = K3Model::q1();
        assert_eq!(h1(&q1, 4, 2), Int::from(1));
        assert_eq!(h1(&q1, 6, 3), Int::from(2));
        assert_eq!(h1(&q1, 11, 6), Int::from(4));
        let g1 = cohomology(&q1, &c(1, 0)).unwrap();
        assert_eq!(
            (g1.h0, g1.h1, g1.h2),
            (Int::from(1), Int::from(0), Int::from(0))
        );
        for b in 0..=60 {
            assert_eq!(
                h1(&q1, 0, b),
                Int::from((b - 1).max(0)),
                "pencil multiple {b}"
            );
        }
    }

    #[test]
    fn two_conic_example() {
        let q2 = K3Model::q2();
        assert_eq!(h1(&q2, 3, 1), Int::from(1));
    }

    #[test]
    fn zero_class() {
        let dims = cohomology(&K3Model::q1(), &DivClass2::zero()).unwrap();
        assert_eq!(
            (dims.h0, dims.h1, dims.h2),
            (Int::from(1), Int::from(0), Int::from(1))
        );
    }

    #[test]
    fn ideal_sheaf_twists() {
        let q1 = K3Model::q1();
        let four = Int::from(4);
        assert_eq!(
            h1_ideal_quartic(&q1, &c(8, 6), &four).unwrap(),
            Int::from(1)
        );
        assert_eq!(
            h1_ideal_quartic(&q1, &c(10, 7), &four).unwrap(),
            Int::from(2)
        );
        assert_eq!(
            h1_ideal_quartic(&K3Model::q2(), &c(7, 5), &four).unwrap(),
            Int::from(1)
        );
        // negative twist goes through the dual branch
        assert_eq!(
            h1_ideal_quartic(&q1, &c(-2, -1), &Int::from(-6)).unwrap(),
            h1(&q1, 4, 5)
        );
    }

    #[test]
    fn trace_records_runs() {
        let q1 = K3Model::q1();
        let (dims, trace) = cohomology_traced(&q1, &c(11, 6)).unwrap();
        assert_eq!(dims.h1, Int::from(4));
        assert_eq!(trace.peel_count(), Int::from(2));
        assert_eq!(trace.runs.len(), 1);
        let run = &trace.runs[0];
        assert_eq!(
            (run.first_d.clone(), run.last_d.clone()),
            (Int::from(4), Int::from(2))
        );
        assert_eq!(trace.terminal, Terminal::NefBig);

        let (_, trace) = cohomology_traced(&q1, &c(-11, -6)).unwrap();
        assert!(trace.dual);

        let (dims, trace) = cohomology_traced(&q1, &c(5, 0)).unwrap();
        assert_eq!(dims.h1, Int::from(24));
        assert_eq!(trace.terminal, Terminal::MinusTwoCurve { curve: 0 });
        assert_eq!(trace.peel_count(), Int::from(4));
    }

    #[test]
    fn huge_classes_finish() {
        let q1 = K3Model::q1();
        let big: Int = "1000000000000000000000000".parse().unwrap();
        let d = DivClass2 {
            a: big.clone(),
            b: Int::zero(),
        };
        let dims = cohomology(&q1, &d).unwrap();
        assert_eq!(dims.h1, &big * &big - 1);
        let d = DivClass2 {
            a: big.clone(),
            b: Int::from(1),
        };
        let dims = cohomology(&q1, &d).unwrap();
        assert_eq!(dims.euler_char(), euler_char_k3(&d, q1.gram()).unwrap());
    }

    #[test]
    fn closed_form_examples() {
        let q1 = K3Model::q1();
        let q2 = K3Model::q2();
        assert!(h1_nonvanishing_closed_form(&q1, &c(4, 2)).unwrap());
        assert!(!h1_nonvanishing_closed_form(&q1, &c(5, 3)).unwrap());
        assert!(h1_nonvanishing_closed_form(&q2, &c(3, 1)).unwrap());
        assert!(h1_nonvanishing_closed_form(&q1, &c(0, 3)).is_err());
        assert!(h1_nonvanishing_closed_form(&q2, &c(3, 0)).is_err());
    }

    #[test]
    fn no_pencil_on_user_model() {
        // Q1's lattice but with the pencil left out of the model.
        let m = K3Model::new(
            "nopencil",
            Gram2::new(-2, 3, 0).unwrap(),
            c(1, 1),
            vec![c(1, 0)],
            vec![],
        )
        .unwrap();
        assert_eq!(cohomology(&m, &c(0, 3)), Err(Error::NoPencil));
    }

    #[test]
    fn peel_left_cone_on_user_model() {
        // (4,1) has square -2 on the two-conic lattice, but declaring it as the
        // only curve makes the quadrant too large to be the effective cone.
        let m = K3Model::new(
            "skewed",
            Gram2::new(-2, 4, -2).unwrap(),
            c(1, 1),
            vec![c(4, 1)],
            vec![],
        )
        .unwrap();
        assert_eq!(cohomology(&m, &c(1, 0)), Err(Error::PeelLeftCone));
    }

    #[test]
    fn mirrored_basis_model() {
        let g = Gram2::new(0, 3, -2).unwrap();
        let m = K3Model::new("mirror", g, c(1, 1), vec![c(0, 1)], vec![c(1, 0)]).unwrap();
        assert_eq!(h1(&m, 0, 5), Int::from(24));
        assert_eq!(h1(&m, 5, 0), Int::from(4));
        let q1 = K3Model::q1();
        for a in -20..=20 {
            for b in -20..=20 {
                assert_eq!(h1(&m, b, a), h1(&q1, a, b));
            }
        }
    }
}

//! Curves on smooth quartic surfaces: the component classifier for the
//! rank-2 models and the family enumerators.

mod bounds;

pub use bounds::*;

use alloc::vec::Vec;

use num_traits::Signed;

use crate::error::Result;
use crate::k3::{h1_ideal_quartic, Builtin, K3Model};
use crate::lattice::DivClass2;
use crate::verdict::{Criterion, VerdictKind};
use crate::{Int, Rational};

/// Classification of the maximal family `W` of curves in a class on a quartic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub class: DivClass2,
    pub d: Int,
    pub g: Int,
    pub dim_w: Option<Int>,
    /// `h⁰(N_C) = dim W + h¹(I_C(4))`.
    pub tangent_dim: Option<Int>,
    pub h1_ideal_4: Int,
    /// `max{d − g, d/2} − 3`, attached when non-reducedness hinges on
    /// `h¹(I_C(1))`.
    pub clifford_bound: Option<Rational>,
    pub criteria: Vec<Criterion>,
}

/// Classifies `|C|` on `model`. `h1_ic1`, when known, is `h¹(I_C(1))` of the
/// general curve; otherwise only the Clifford estimate is used.
pub fn classify_quartic(model: &K3Model, c: &DivClass2, h1_ic1: Option<&Int>) -> Result<Verdict> {
    let d = model.degree(c);
    let g = model.genus(c);
    let h1 = h1_ideal_quartic(model, c, &Int::from(4))?;
    let mut v = Verdict {
        kind: VerdictKind::NotApplicable,
        class: c.clone(),
        d,
        g,
        dim_w: None,
        tangent_dim: None,
        h1_ideal_4: h1,
        clifford_bound: None,
        criteria: Vec::new(),
    };
    if !model.is_smooth_curve_class(c) {
        v.criteria.push(Criterion::NotSmoothCurveClass);
        return Ok(v);
    }
    if model.is_ci(c) {
        v.criteria.push(Criterion::CompleteIntersection);
        return Ok(v);
    }
    if v.d <= Int::from(16) {
        v.criteria.push(Criterion::LowDegree);
        return Ok(v);
    }
    let dim_w = &v.g + Int::from(33);
    v.tangent_dim = Some(&dim_w + &v.h1_ideal_4);
    v.dim_w = Some(dim_w);
    if let Some(tag) = region_tag(model, c) {
        v.criteria.push(tag);
    }

    if !v.h1_ideal_4.is_positive() {
        v.kind = VerdictKind::GenericallySmoothComponent;
        v.criteria.push(Criterion::VanishingH1);
        return Ok(v);
    }
    if quartic_large_genus(&v.d, &v.g) {
        v.kind = VerdictKind::NonReducedComponent;
        v.criteria.push(Criterion::LargeGenus);
        return Ok(v);
    }
    if let Some(h) = h1_ic1 {
        if quartic_quadratic_genus(&v.d, &v.g, h)? {
            v.kind = VerdictKind::NonReducedComponent;
            v.criteria.push(Criterion::QuadraticGenus);
            return Ok(v);
        }
    }
    let cliff = clifford_h1_bound(&v.d, &v.g)?;
    let cliff_floor = cliff.floor().max(Int::from(0));
    v.clifford_bound = Some(cliff);
    if quartic_quadratic_genus(&v.d, &v.g, &cliff_floor)? {
        v.kind = VerdictKind::NonReducedComponent;
        v.criteria.push(Criterion::QuadraticGenus);
        v.criteria.push(Criterion::CliffordBound);
        return Ok(v);
    }
    if component_genus_necessary(&v.d, &v.g, &Int::from(4))? {
        v.kind = VerdictKind::ExpectedNonReduced;
        v.criteria.push(Criterion::DimensionNecessary);
        v.criteria.push(Criterion::CliffordBound);
    } else {
        v.kind = VerdictKind::Undetermined;
        v.criteria.push(Criterion::BelowComponentDimension);
    }
    Ok(v)
}

/// Closed-form region of the built-in surfaces containing `c`, if any.
fn region_tag(model: &K3Model, c: &DivClass2) -> Option<Criterion> {
    match model.builtin()? {
        Builtin::Q1 if q1_smooth_region(c) => Some(Criterion::SmoothRegion),
        Builtin::Q1 if q1_obstructed_strip(c) => Some(Criterion::ObstructedRegion),
        Builtin::Q2 if q2_smooth_region(c) => Some(Criterion::SmoothRegion),
        Builtin::Q2 if q2_obstructed_strip(c) => Some(Criterion::ObstructedRegion),
        _ => None,
    }
}

/// `4 < a < 3b/2 − 1`.
pub fn q1_smooth_region(c: &DivClass2) -> bool {
    c.a > Int::from(4) && &c.a * 2 < &c.b * 3 - 2
}

/// `3b/2 − 1 ≤ a ≤ 3b/2`.
pub fn q1_obstructed_strip(c: &DivClass2) -> bool {
    let two_a = &c.a * 2;
    two_a >= &c.b * 3 - 2 && two_a <= &c.b * 3
}

/// `b/2 + 2 ≤ a ≤ 2b − 4`.
pub fn q2_smooth_region(c: &DivClass2) -> bool {
    &c.a * 2 >= &c.b + 4 && c.a <= &c.b * 2 - 4
}

/// `a > b` and `2b − 4 < a ≤ 2b`.
pub fn q2_obstructed_strip(c: &DivClass2) -> bool {
    c.a > c.b && c.a > &c.b * 2 - 4 && c.a <= &c.b * 2
}

/// A parametrized family `base + k·step`, `k ≥ k_min`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub label: &'static str,
    pub base: DivClass2,
    pub step: DivClass2,
}

impl FamilySpec {
    fn new(label: &'static str, base: (i64, i64), step: (i64, i64)) -> Self {
        FamilySpec {
            label,
            base: DivClass2::new(base.0, base.1),
            step: DivClass2::new(step.0, step.1),
        }
    }

    /// Members with `b ≤ b_max`; `step.b` must be positive.
    pub fn members_up_to(&self, b_max: &Int) -> Vec<DivClass2> {
        let mut out = Vec::new();
        let mut c = self.base.clone();
        while &c.b <= b_max {
            out.push(c.clone());
            c = &c + &self.step;
        }
        out
    }
}

/// The three families `(8+3k, 6+2k)`, `(10+3k, 7+2k)`, `(15+3k, 10+2k)`,
/// `k ≥ 0`, of non-reduced components on the line-containing quartic.
pub fn q1_families() -> Vec<FamilySpec> {
    alloc::vec![
        FamilySpec::new("a", (8, 6), (3, 2)),
        FamilySpec::new("b", (10, 7), (3, 2)),
        FamilySpec::new("c", (15, 10), (3, 2)),
    ]
}

/// The four families `(5+j+2k, 4+k)`, `j = 0..3`, `k ≥ 1`, of classes with
/// non-vanishing `h¹(I_C(4))` on the conic-containing quartic.
pub fn q2_nonvanishing_families() -> Vec<FamilySpec> {
    alloc::vec![
        FamilySpec::new("a", (7, 5), (2, 1)),
        FamilySpec::new("b", (8, 5), (2, 1)),
        FamilySpec::new("c", (9, 5), (2, 1)),
        FamilySpec::new("d", (10, 5), (2, 1)),
    ]
}

/// Sorted union of the members with `b ≤ b_max`.
pub fn family_union(specs: &[FamilySpec], b_max: &Int) -> Vec<DivClass2> {
    let mut out: Vec<DivClass2> = specs.iter().flat_map(|f| f.members_up_to(b_max)).collect();
    out.sort();
    out.dedup();
    out
}

/// Classes found by a scan but absent from the families, and vice versa.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FamilyCheck {
    pub unexpected: Vec<DivClass2>,
    pub missing: Vec<DivClass2>,
}

impl FamilyCheck {
    pub fn compare(found: &[DivClass2], expected: &[DivClass2]) -> Self {
        FamilyCheck {
            unexpected: found
                .iter()
                .filter(|c| !expected.contains(c))
                .cloned()
                .collect(),
            missing: expected
                .iter()
                .filter(|c| !found.contains(c))
                .cloned()
                .collect(),
        }
    }

    pub fn is_exact(&self) -> bool {
        self.unexpected.is_empty() && self.missing.is_empty()
    }
}

/// Row `b` of [`enumerate_families_q1`].
pub fn families_q1_row(model: &K3Model, b: &Int) -> Vec<DivClass2> {
    let mut out = Vec::new();
    let top = (b * 3) / 2;
    let mut a = Int::from(0);
    while a <= top {
        let c = DivClass2 {
            a: a.clone(),
            b: b.clone(),
        };
        a += 1;
        if c.a == c.b || !q1_obstructed_strip(&c) || !model.is_smooth_curve_class(&c) {
            continue;
        }
        let d = model.degree(&c);
        if d <= Int::from(16) {
            continue;
        }
        if quartic_large_genus(&d, &model.genus(&c)) {
            out.push(c);
        }
    }
    out
}

/// Smooth-curve classes on the line-containing quartic with `a ≠ b`, `d > 16`,
/// `b ≤ b_max`, in the strip `3b/2 − 1 ≤ a ≤ 3b/2` and above the genus
/// threshold; sorted.
pub fn enumerate_families_q1(b_max: &Int) -> Vec<DivClass2> {
    let model = K3Model::q1();
    let mut out = Vec::new();
    let mut b = Int::from(0);
    while &b <= b_max {
        out.extend(families_q1_row(&model, &b));
        b += 1;
    }
    out.sort();
    out
}

/// Row `b` of [`enumerate_q2_nonvanishing`].
pub fn q2_nonvanishing_row(model: &K3Model, b: &Int) -> Result<Vec<DivClass2>> {
    let mut out = Vec::new();
    let top = b * 2;
    let four = Int::from(4);
    let mut a: Int = b + 1;
    while a <= top {
        let c = DivClass2 {
            a: a.clone(),
            b: b.clone(),
        };
        a += 1;
        if !q2_obstructed_strip(&c) || !model.is_smooth_curve_class(&c) {
            continue;
        }
        if model.degree(&c) <= Int::from(16) {
            continue;
        }
        if h1_ideal_quartic(model, &c, &four)?.is_positive() {
            out.push(c);
        }
    }
    Ok(out)
}

/// Smooth-curve classes on the conic-containing quartic with `a > b`,
/// `2b − 4 < a ≤ 2b`, `d > 16`, `b ≤ b_max` and `h¹(I_C(4)) > 0`; sorted.
pub fn enumerate_q2_nonvanishing(b_max: &Int) -> Result<Vec<DivClass2>> {
    let model = K3Model::q2();
    let mut out = Vec::new();
    let mut b = Int::from(0);
    while &b <= b_max {
        out.extend(q2_nonvanishing_row(&model, &b)?);
        b += 1;
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn c(a: i64, b: i64) -> DivClass2 {
        DivClass2::new(a, b)
    }

    fn z(n: i64) -> Int {
        Int::from(n)
    }

    #[test]
    fn classify_examples() {
        let q1 = K3Model::q1();
        let v = classify_quartic(&q1, &c(8, 6), None).unwrap();
        assert_eq!(v.kind, VerdictKind::NonReducedComponent);
        assert_eq!((v.d.clone(), v.g.clone()), (z(26), z(81)));
        assert_eq!(v.dim_w, Some(z(114)));
        assert_eq!(v.tangent_dim, Some(z(115)));
        assert_eq!(v.h1_ideal_4, z(1));
        assert!(v.criteria.contains(&Criterion::LargeGenus));

        let v = classify_quartic(&q1, &c(6, 7), None).unwrap();
        assert_eq!(v.kind, VerdictKind::GenericallySmoothComponent);
        assert_eq!((v.d.clone(), v.g.clone()), (z(27), z(91)));
        assert_eq!(v.dim_w, Some(z(124)));
        assert!(v.criteria.contains(&Criterion::SmoothRegion));

        let v = classify_quartic(&q1, &c(3, 3), None).unwrap();
        assert_eq!(v.kind, VerdictKind::NotApplicable);
        assert_eq!(v.criteria, vec![Criterion::CompleteIntersection]);

        let q2 = K3Model::q2();
        let v = classify_quartic(&q2, &c(7, 5), None).unwrap();
        assert_eq!(v.kind, VerdictKind::ExpectedNonReduced);
        assert_eq!(v.h1_ideal_4, z(1));
        assert!(v.clifford_bound.is_some());

        let v = classify_quartic(&q2, &c(6, 5), None).unwrap();
        assert_eq!(v.kind, VerdictKind::GenericallySmoothComponent);
        assert_eq!(v.g, z(60));
        assert_eq!(v.dim_w, Some(z(93)));
    }

    #[test]
    fn classify_guards() {
        let q1 = K3Model::q1();
        // meets the line negatively
        assert_eq!(
            classify_quartic(&q1, &c(5, 1), None).unwrap().criteria,
            vec![Criterion::NotSmoothCurveClass]
        );
        // d = 4 + 12 = 16
        assert_eq!(
            classify_quartic(&q1, &c(4, 4), None).unwrap().kind,
            VerdictKind::NotApplicable
        );
        assert_eq!(
            classify_quartic(&q1, &c(1, 5), None).unwrap().criteria,
            vec![Criterion::LowDegree]
        );
        assert_eq!(
            classify_quartic(&q1, &c(-1, 3), None).unwrap().kind,
            VerdictKind::NotApplicable
        );
    }

    #[test]
    fn supplied_linear_normality_decides() {
        // d = 46, g = 338 on the line quartic; above the quadratic bound
        let q1 = K3Model::q1();
        let cl = c(25, 7);
        let d = q1.degree(&cl);
        let g = q1.genus(&cl);
        let h1 = h1_ideal_quartic(&q1, &cl, &z(4)).unwrap();
        let v = classify_quartic(&q1, &cl, Some(&z(0))).unwrap();
        if h1.is_positive() && quartic_quadratic_genus(&d, &g, &z(0)).unwrap() {
            assert_eq!(v.kind, VerdictKind::NonReducedComponent);
        }
    }

    #[test]
    fn q1_family_scan_small() {
        let got = enumerate_families_q1(&z(10));
        assert_eq!(
            got,
            vec![c(8, 6), c(10, 7), c(11, 8), c(13, 9), c(14, 10), c(15, 10)]
        );
        assert_eq!(got, family_union(&q1_families(), &z(10)));
        assert!(enumerate_families_q1(&z(5)).is_empty());
        assert!(enumerate_families_q1(&z(0)).is_empty());
    }

    #[test]
    fn q2_scan_small() {
        assert_eq!(
            enumerate_q2_nonvanishing(&z(5)).unwrap(),
            vec![
                c(6, 3),
                c(6, 4),
                c(7, 4),
                c(7, 5),
                c(8, 4),
                c(8, 5),
                c(9, 5),
                c(10, 5)
            ]
        );
        assert!(enumerate_q2_nonvanishing(&z(0)).unwrap().is_empty());
    }

    #[test]
    fn family_check() {
        let fc = FamilyCheck::compare(&[c(1, 1), c(2, 2)], &[c(2, 2), c(3, 3)]);
        assert_eq!(fc.unexpected, vec![c(1, 1)]);
        assert_eq!(fc.missing, vec![c(3, 3)]);
        assert!(!fc.is_exact());
        assert!(FamilyCheck::compare(&[], &[]).is_exact());
    }

    #[test]
    fn verdict_consistency() {
        for (m, bmax) in [(K3Model::q1(), 40), (K3Model::q2(), 40)] {
            for b in 0..=bmax {
                for a in 0..=2 * bmax {
                    let v = classify_quartic(&m, &c(a, b), None).unwrap();
                    if let (Some(w), Some(t)) = (&v.dim_w, &v.tangent_dim) {
                        assert_eq!(t - w, v.h1_ideal_4);
                    }
                    match v.kind {
                        VerdictKind::GenericallySmoothComponent => assert_eq!(v.h1_ideal_4, z(0)),
                        VerdictKind::NonReducedComponent | VerdictKind::ExpectedNonReduced => {
                            assert!(v.h1_ideal_4.is_positive())
                        }
                        _ => {}
                    }
                }
            }
        }
    }
}

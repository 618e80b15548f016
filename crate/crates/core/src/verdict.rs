//! Classification outcomes shared by the quartic and cubic classifiers.

/// What is known about the maximal family `W` of curves in a class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictKind {
    /// `W` is a generically smooth component of the Hilbert scheme.
    GenericallySmoothComponent,
    /// `W` is a non-reduced component.
    NonReducedComponent,
    /// `W` is a component with obstructed general point under the stated
    /// dimension condition, but the criteria do not close the argument.
    ExpectedNonReduced,
    /// None of the implemented criteria decide the class.
    Undetermined,
    /// The class is outside the scope of the classifier.
    NotApplicable,
}

impl VerdictKind {
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictKind::GenericallySmoothComponent => "GenericallySmoothComponent",
            VerdictKind::NonReducedComponent => "NonReducedComponent",
            VerdictKind::ExpectedNonReduced => "ExpectedNonReduced",
            VerdictKind::Undetermined => "Undetermined",
            VerdictKind::NotApplicable => "NotApplicable",
        }
    }

    pub fn from_name(s: &str) -> Option<VerdictKind> {
        [
            VerdictKind::GenericallySmoothComponent,
            VerdictKind::NonReducedComponent,
            VerdictKind::ExpectedNonReduced,
            VerdictKind::Undetermined,
            VerdictKind::NotApplicable,
        ]
        .into_iter()
        .find(|k| k.as_str() == s)
    }
}

/// A criterion consulted while classifying.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Criterion {
    NotSmoothCurveClass,
    CompleteIntersection,
    LowDegree,
    VanishingH1,
    LargeGenus,
    QuadraticGenus,
    CliffordBound,
    DimensionNecessary,
    BelowComponentDimension,
    SmoothRegion,
    ObstructedRegion,
    CubicTwist3Vanishing,
    CubicExceptionalSmooth,
    CubicM6Two,
    CubicM6OneM5Six,
    CubicM6OneM5Five,
    CubicExceptionalTuple,
    /// Genus above `max{d²/10 − d/2 + 18, G(d, t)}` for `t` = 6, 7 or 8.
    CubicLargeGenus(u8),
    CubicQuadraticRange,
    CubicLinearNormality,
    CubicM6Zero,
    ConjecturedRange,
}

impl Criterion {
    /// Stable kebab-case tag used in reports.
    pub fn tag(self) -> &'static str {
        match self {
            Criterion::NotSmoothCurveClass => "not-smooth-curve-class",
            Criterion::CompleteIntersection => "complete-intersection",
            Criterion::LowDegree => "low-degree",
            Criterion::VanishingH1 => "vanishing-h1-component",
            Criterion::LargeGenus => "max-genus-gap",
            Criterion::QuadraticGenus => "quadratic-genus-bound",
            Criterion::CliffordBound => "clifford-linear-normality",
            Criterion::DimensionNecessary => "component-dimension-necessary",
            Criterion::BelowComponentDimension => "below-component-dimension",
            Criterion::SmoothRegion => "explicit-smooth-region",
            Criterion::ObstructedRegion => "explicit-obstructed-region",
            Criterion::CubicTwist3Vanishing => "cubic-vanishing-h1",
            Criterion::CubicExceptionalSmooth => "cubic-exceptional-smooth",
            Criterion::CubicM6Two => "cubic-m6-two",
            Criterion::CubicM6OneM5Six => "cubic-m6-one-m5-six",
            Criterion::CubicM6OneM5Five => "cubic-m6-one-m5-five",
            Criterion::CubicExceptionalTuple => "cubic-exceptional-tuple",
            Criterion::CubicLargeGenus(6) => "cubic-sextic-genus-gap",
            Criterion::CubicLargeGenus(7) => "cubic-septic-genus-gap",
            Criterion::CubicLargeGenus(_) => "cubic-octic-genus-gap",
            Criterion::CubicQuadraticRange => "cubic-quadratic-range",
            Criterion::CubicLinearNormality => "cubic-linear-normality",
            Criterion::CubicM6Zero => "cubic-m6-zero",
            Criterion::ConjecturedRange => "conjectured-range",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Criterion::NotSmoothCurveClass => "class carries no smooth connected curve",
            Criterion::CompleteIntersection => "class is a multiple of the hyperplane",
            Criterion::LowDegree => "degree at most 16",
            Criterion::VanishingH1 => "h1(I_C(4)) = 0, W is generically smooth of dimension g+33",
            Criterion::LargeGenus => "d >= 21 and g > min{G(d,5)-1, d^2/10+21}",
            Criterion::QuadraticGenus => "d >= 31, g > 21+d^2/10, h1(I_C(1)) <= d-25",
            Criterion::CliffordBound => "h1(I_C(1)) bounded by max{d-g, d/2}-3",
            Criterion::DimensionNecessary => "g >= 4d-33, W may be a component",
            Criterion::BelowComponentDimension => "g < 4d-33, W cannot be a component",
            Criterion::SmoothRegion => "class lies in the closed-form vanishing region",
            Criterion::ObstructedRegion => "class lies in the closed-form obstructed strip",
            Criterion::CubicTwist3Vanishing => "m6 >= 3, h1(I_C(3)) = 0",
            Criterion::CubicExceptionalSmooth => {
                "exceptional tuple: W lies in a generically smooth V with dim V - dim W = h1(I_C(3))"
            }
            Criterion::CubicM6Two => "m6 = 2, m5 >= 4, d >= 21",
            Criterion::CubicM6OneM5Six => "m6 = 1, m5 >= 6, d >= 35",
            Criterion::CubicM6OneM5Five => "m6 = 1, m5 = 5, m4 >= 7, d >= 35",
            Criterion::CubicExceptionalTuple => "tuple is an excluded exceptional form",
            Criterion::CubicLargeGenus(6) => "g > max{d^2/10-d/2+18, G(d,6)}",
            Criterion::CubicLargeGenus(7) => "g > max{d^2/10-d/2+18, G(d,7)}",
            Criterion::CubicLargeGenus(_) => "g > max{d^2/10-d/2+18, G(d,8)}",
            Criterion::CubicQuadraticRange => "d >= 58 and g > d^2/10-d/2+18",
            Criterion::CubicLinearNormality => "h1(I_C(1)) = 0 from the septuple",
            Criterion::CubicM6Zero => "m6 = 0 is outside the scope of the criteria",
            Criterion::ConjecturedRange => "d >= 14, 3d-18 <= g <= (d^2-4)/8",
        }
    }
}

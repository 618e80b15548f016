//! Quartic K3 surfaces with Picard lattice of rank 2.
//!
//! A [`K3Model`] fixes the intersection form, the hyperplane class, the
//! irreducible (−2)-curves and the elliptic pencils. The effective cone is the
//! closed first quadrant of the stored basis; for the two built-in surfaces
//! this is a theorem, for user models it is part of the model's contract.

mod cohomology;

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{pair, self_int, DivClass2, Gram2};
use crate::Int;

pub use cohomology::{
    cohomology, cohomology_traced, h1_ideal_quartic, h1_nonvanishing_closed_form, CohDims, PeelRun,
    Terminal, Trace,
};

/// The two surfaces shipped with the crate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Picard lattice spanned by a line Γ1 and a plane cubic Γ2,
    /// Gram `[[-2,3],[3,0]]`, `H = Γ1 + Γ2`.
    Q1,
    /// Picard lattice spanned by two conics, Gram `[[-2,4],[4,-2]]`,
    /// `H = Γ1 + Γ2`.
    Q2,
}

impl Builtin {
    pub fn name(self) -> &'static str {
        match self {
            Builtin::Q1 => "q1",
            Builtin::Q2 => "q2",
        }
    }

    pub fn from_name(name: &str) -> Option<Builtin> {
        match name.to_ascii_lowercase().as_str() {
            "q1" => Some(Builtin::Q1),
            "q2" => Some(Builtin::Q2),
            _ => None,
        }
    }

    pub fn model(self) -> K3Model {
        match self {
            Builtin::Q1 => K3Model::q1(),
            Builtin::Q2 => K3Model::q2(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K3Model {
    name: String,
    gram: Gram2,
    hyperplane: DivClass2,
    minus_two_curves: Vec<DivClass2>,
    elliptic_pencils: Vec<DivClass2>,
}

impl K3Model {
    /// Validates every model invariant; the error names the first one that
    /// fails.
    pub fn new(
        name: impl Into<String>,
        gram: Gram2,
        hyperplane: DivClass2,
        minus_two_curves: Vec<DivClass2>,
        elliptic_pencils: Vec<DivClass2>,
    ) -> Result<Self> {
        let model = K3Model {
            name: name.into(),
            gram,
            hyperplane,
            minus_two_curves,
            elliptic_pencils,
        };
        model.validate()?;
        Ok(model)
    }

    fn validate(&self) -> Result<()> {
        let g = &self.gram;
        let h = &self.hyperplane;
        if self_int(h, g) != Int::from(4) {
            return Err(Error::InvalidModel("hyperplane^2 must equal 4"));
        }
        if !h.in_first_quadrant() {
            return Err(Error::InvalidModel("hyperplane must be effective"));
        }
        for (i, c) in self.minus_two_curves.iter().enumerate() {
            if self_int(c, g) != Int::from(-2) {
                return Err(Error::InvalidModel("every (-2)-curve must have square -2"));
            }
            if c.is_zero() || !c.in_first_quadrant() {
                return Err(Error::InvalidModel(
                    "every (-2)-curve must be a non-zero effective class",
                ));
            }
            if !pair(h, c, g).is_positive() {
                return Err(Error::InvalidModel(
                    "hyperplane must meet every (-2)-curve positively",
                ));
            }
            for other in &self.minus_two_curves[..i] {
                if other == c {
                    return Err(Error::InvalidModel("(-2)-curves must be distinct"));
                }
                if pair(other, c, g).is_negative() {
                    return Err(Error::InvalidModel(
                        "distinct (-2)-curves must meet non-negatively",
                    ));
                }
            }
        }
        for e in &self.elliptic_pencils {
            if !self_int(e, g).is_zero() {
                return Err(Error::InvalidModel(
                    "every elliptic pencil must have square 0",
                ));
            }
            if !e.in_first_quadrant() || !e.is_primitive() {
                return Err(Error::InvalidModel(
                    "every elliptic pencil must be a primitive effective class",
                ));
            }
            if self
                .minus_two_curves
                .iter()
                .any(|c| pair(e, c, g).is_negative())
            {
                return Err(Error::InvalidModel("elliptic pencils must be nef"));
            }
        }
        Ok(())
    }

    pub fn q1() -> Self {
        K3Model {
            name: "q1".to_string(),
            gram: Gram2::new(-2, 3, 0).expect("valid lattice"),
            hyperplane: DivClass2::new(1, 1),
            minus_two_curves: vec![DivClass2::new(1, 0)],
            elliptic_pencils: vec![DivClass2::new(0, 1)],
        }
    }

    /// This surface has no nef class of square zero: `2a² + 2b² = 8ab` has no
    /// rational solution besides zero.
    pub fn q2() -> Self {
        K3Model {
            name: "q2".to_string(),
            gram: Gram2::new(-2, 4, -2).expect("valid lattice"),
            hyperplane: DivClass2::new(1, 1),
            minus_two_curves: vec![DivClass2::new(1, 0), DivClass2::new(0, 1)],
            elliptic_pencils: vec![],
        }
    }

    /// Which built-in surface this is, compared structurally (the name is
    /// ignored).
    pub fn builtin(&self) -> Option<Builtin> {
        [Builtin::Q1, Builtin::Q2].into_iter().find(|b| {
            let m = b.model();
            m.gram == self.gram
                && m.hyperplane == self.hyperplane
                && m.minus_two_curves == self.minus_two_curves
                && m.elliptic_pencils == self.elliptic_pencils
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn gram(&self) -> &Gram2 {
        &self.gram
    }

    pub fn hyperplane(&self) -> &DivClass2 {
        &self.hyperplane
    }

    pub fn minus_two_curves(&self) -> &[DivClass2] {
        &self.minus_two_curves
    }

    pub fn elliptic_pencils(&self) -> &[DivClass2] {
        &self.elliptic_pencils
    }

    pub fn pair(&self, d: &DivClass2, e: &DivClass2) -> Int {
        pair(d, e, &self.gram)
    }

    pub fn self_int(&self, d: &DivClass2) -> Int {
        self_int(d, &self.gram)
    }

    pub fn degree(&self, c: &DivClass2) -> Int {
        self.pair(&self.hyperplane, c)
    }

    /// Arithmetic genus `C²/2 + 1`.
    pub fn genus(&self, c: &DivClass2) -> Int {
        self.self_int(c) / 2 + 1
    }

    pub fn is_effective(&self, d: &DivClass2) -> bool {
        d.in_first_quadrant()
    }

    pub fn is_nef(&self, d: &DivClass2) -> bool {
        if d.is_zero() {
            return true;
        }
        self.is_effective(d)
            && self
                .minus_two_curves
                .iter()
                .all(|c| !self.pair(d, c).is_negative())
    }

    /// Whether the general member of `|C|` is a smooth irreducible curve:
    /// `C` is a listed (−2)-curve or pencil, or `C` is nef and big without the
    /// fixed-component shape `kE + Γ` (`E·Γ = 1`, `k ≥ 2`).
    pub fn is_smooth_curve_class(&self, c: &DivClass2) -> bool {
        if self.minus_two_curves.contains(c) || self.elliptic_pencils.contains(c) {
            return true;
        }
        if !self.is_nef(c) || !self.self_int(c).is_positive() {
            return false;
        }
        let one = Int::from(1);
        let two = Int::from(2);
        !self.elliptic_pencils.iter().any(|e| {
            self.minus_two_curves
                .iter()
                .any(|g| self.pair(e, g) == one && (c - g).multiple_of(e).is_some_and(|k| k >= two))
        })
    }

    /// `C ≡ nH` for some integer `n`.
    pub fn is_ci(&self, c: &DivClass2) -> bool {
        c.multiple_of(&self.hyperplane).is_some()
    }
}

//! Classical Dempster-Shafer basic probability assignments.

use crate::error::{Error, Result};
use crate::focal::{FocalSet, MASS_TOLERANCE};
use crate::frame::{Frame, SubsetIndex};
use crate::measures::BeliefInterval;

/// A basic probability assignment: `m(∅) = 0` and the masses sum to 1.
#[derive(Debug, Clone, PartialEq)]
pub struct MassFunction {
    frame: Frame,
    focal: FocalSet,
}

impl MassFunction {
    /// Validates an assignment. Masses are never renormalized; a sum more than
    /// [`MASS_TOLERANCE`] away from 1 is rejected.
    pub fn new<I>(frame: Frame, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetIndex, f64)>,
    {
        let focal = FocalSet::validate(&frame, assignments)?;
        if (focal.total() - 1.0).abs() > MASS_TOLERANCE {
            return Err(Error::SumNotOne(focal.total()));
        }
        Ok(MassFunction { frame, focal })
    }

    pub(crate) fn from_focal(frame: Frame, focal: FocalSet) -> Self {
        MassFunction { frame, focal }
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn mass(&self, subset: SubsetIndex) -> f64 {
        self.focal.mass(subset)
    }

    /// Focal elements with their masses, ascending.
    pub fn focal_elements(&self) -> &[(SubsetIndex, f64)] {
        self.focal.entries()
    }

    /// `Bel_m(A) = Σ_{B ⊆ A} m(B)`.
    pub fn bel(&self, a: SubsetIndex) -> f64 {
        self.focal
            .entries()
            .iter()
            .filter(|(b, _)| b.is_subset_of(a))
            .fold(0.0, |acc, &(_, m)| acc + m)
    }

    /// `Pl_m(A) = Σ_{B ∩ A ≠ ∅} m(B)`.
    pub fn pl(&self, a: SubsetIndex) -> f64 {
        self.focal
            .entries()
            .iter()
            .filter(|(b, _)| b.intersects(a))
            .fold(0.0, |acc, &(_, m)| acc + m)
    }

    pub fn belief_interval(&self, a: SubsetIndex) -> BeliefInterval {
        BeliefInterval {
            lower: self.bel(a),
            upper: self.pl(a),
        }
    }
}

//! D numbers: mass assignments that may sum to less than one.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::focal::{FocalSet, MASS_TOLERANCE};
use crate::frame::{Frame, SubsetIndex, MAX_FRAME_SIZE};
use crate::mass::MassFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletenessKind {
    Complete,
    Incomplete,
}

/// Whether a D number carries all of its unit mass, and how much is missing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Completeness {
    pub kind: CompletenessKind,
    /// `1 − total_mass`, clamped at zero.
    pub deficit: f64,
}

impl Completeness {
    pub fn is_complete(&self) -> bool {
        self.kind == CompletenessKind::Complete
    }
}

/// A D number over a (possibly non-exclusive) frame: `D(∅) = 0`, `Σ D(B) ≤ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DNumber {
    frame: Frame,
    focal: FocalSet,
}

impl DNumber {
    pub fn new<I>(frame: Frame, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetIndex, f64)>,
    {
        let focal = FocalSet::validate(&frame, assignments)?;
        if focal.total() > 1.0 + MASS_TOLERANCE {
            return Err(Error::SumExceedsOne(focal.total()));
        }
        Ok(DNumber { frame, focal })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// `Σ D(B)`, accumulated in ascending subset order.
    pub fn total_mass(&self) -> f64 {
        self.focal.total()
    }

    pub fn mass(&self, subset: SubsetIndex) -> f64 {
        self.focal.mass(subset)
    }

    /// Focal elements with their masses, ascending.
    pub fn focal_elements(&self) -> &[(SubsetIndex, f64)] {
        self.focal.entries()
    }

    pub fn completeness(&self) -> Completeness {
        let deficit = 1.0 - self.total_mass();
        let kind = if deficit.abs() <= MASS_TOLERANCE {
            CompletenessKind::Complete
        } else {
            CompletenessKind::Incomplete
        };
        Completeness {
            kind,
            deficit: deficit.max(0.0),
        }
    }

    /// Reinterprets a complete D number as a classical BPA with identical masses.
    pub fn as_bpa(&self) -> Result<MassFunction> {
        if !self.completeness().is_complete() {
            return Err(Error::NotComplete(self.total_mass()));
        }
        Ok(MassFunction::from_focal(self.frame.clone(), self.focal.clone()))
    }

    /// Dense vector of length `2^N`; entry `k` is the mass of subset `k`.
    pub fn to_vector(&self) -> Result<Vec<f64>> {
        let size = self.frame.len();
        let too_large = Error::FrameTooLargeForDense {
            size,
            max: MAX_FRAME_SIZE,
        };
        let len = self.frame.powerset_len();
        let mut v = Vec::new();
        v.try_reserve_exact(len).map_err(|_| too_large)?;
        v.resize(len, 0.0);
        for &(b, m) in self.focal.entries() {
            v[b.bits() as usize] = m;
        }
        Ok(v)
    }
}

impl From<MassFunction> for DNumber {
    fn from(m: MassFunction) -> Self {
        let frame = m.frame().clone();
        let focal = FocalSet::validate(&frame, m.focal_elements().iter().copied())
            .expect("a BPA is a valid D number");
        DNumber { frame, focal }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const A: SubsetIndex = SubsetIndex::from_bits(0b01);
    const B: SubsetIndex = SubsetIndex::from_bits(0b10);
    const AB: SubsetIndex = SubsetIndex::from_bits(0b11);

    fn ab() -> Frame {
        Frame::new(["a", "b"]).unwrap()
    }

    #[test]
    fn make_dnumber() {
        let d = DNumber::new(ab(), [(A, 0.6), (B, 0.4)]).unwrap();
        assert_eq!(d.total_mass(), 1.0);
        let d = DNumber::new(ab(), [(A, 0.5), (B, 0.3)]).unwrap();
        assert_eq!(d.total_mass(), 0.8);
        assert!(matches!(
            DNumber::new(ab(), [(A, 0.7), (B, 0.4)]),
            Err(Error::SumExceedsOne(_))
        ));
        assert_eq!(
            DNumber::new(ab(), [(SubsetIndex::EMPTY, 0.2)]),
            Err(Error::EmptySetMass(0.2))
        );
        assert_eq!(
            DNumber::new(ab(), [(A, 0.2), (A, 0.3)]),
            Err(Error::DuplicateSubset(A))
        );
        assert!(matches!(
            DNumber::new(ab(), [(SubsetIndex::from_bits(4), 0.2)]),
            Err(Error::InvalidSubset { .. })
        ));
    }

    #[test]
    fn completeness() {
        let d = DNumber::new(ab(), [(A, 0.6), (B, 0.4)]).unwrap();
        assert_eq!(
            d.completeness(),
            Completeness { kind: CompletenessKind::Complete, deficit: 0.0 }
        );
        let d = DNumber::new(ab(), [(A, 0.5), (B, 0.3)]).unwrap();
        let c = d.completeness();
        assert_eq!(c.kind, CompletenessKind::Incomplete);
        assert!((c.deficit - 0.2).abs() < 1e-15);
        let d = DNumber::new(ab(), [(A, 1.0 - 1e-12)]).unwrap();
        let c = d.completeness();
        assert_eq!(c.kind, CompletenessKind::Complete);
        assert!(c.deficit < 1e-11);
    }

    #[test]
    fn as_bpa() {
        let d = DNumber::new(ab(), [(A, 0.6), (B, 0.4)]).unwrap();
        let m = d.as_bpa().unwrap();
        assert_eq!(m.focal_elements(), &[(A, 0.6), (B, 0.4)]);
        let d = DNumber::new(ab(), [(A, 0.5), (B, 0.3)]).unwrap();
        assert!(matches!(d.as_bpa(), Err(Error::NotComplete(_))));
        let abc = Frame::new(["a", "b", "c"]).unwrap();
        let d = DNumber::new(abc.clone(), [(abc.full(), 1.0)]).unwrap();
        assert_eq!(d.as_bpa().unwrap().focal_elements(), &[(abc.full(), 1.0)]);
    }

    #[test]
    fn dense_vector_layout() {
        let d = DNumber::new(ab(), [(A, 0.6), (B, 0.4)]).unwrap();
        assert_eq!(d.to_vector().unwrap(), vec![0.0, 0.6, 0.4, 0.0]);
        let d = DNumber::new(ab(), [(AB, 1.0)]).unwrap();
        assert_eq!(d.to_vector().unwrap(), vec![0.0, 0.0, 0.0, 1.0]);
        let d = DNumber::new(ab(), [(A, 0.5)]).unwrap();
        let v = d.to_vector().unwrap();
        assert_eq!(v, vec![0.0, 0.5, 0.0, 0.0]);
        assert_eq!(v.iter().sum::<f64>(), 0.5);
    }
}

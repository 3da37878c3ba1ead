use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::frame::{Frame, SubsetIndex};

/// Absolute tolerance on total mass for constructor checks.
pub const MASS_TOLERANCE: f64 = 1e-9;

/// Validated focal elements in ascending subset order, zero masses dropped.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct FocalSet {
    entries: Vec<(SubsetIndex, f64)>,
    total: f64,
}

impl FocalSet {
    pub(crate) fn validate<I>(frame: &Frame, assignments: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SubsetIndex, f64)>,
    {
        let mut entries = Vec::new();
        for (subset, value) in assignments {
            frame.check(subset)?;
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::MassOutOfRange { subset, value });
            }
            if subset.is_empty() {
                if value > 0.0 {
                    return Err(Error::EmptySetMass(value));
                }
                continue;
            }
            entries.push((subset, value));
        }
        entries.sort_by_key(|&(s, _)| s);
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateSubset(w[0].0));
        }
        entries.retain(|&(_, m)| m > 0.0);
        let total = entries.iter().fold(0.0, |acc, &(_, m)| acc + m);
        Ok(FocalSet { entries, total })
    }

    pub(crate) fn entries(&self) -> &[(SubsetIndex, f64)] {
        &self.entries
    }

    pub(crate) fn total(&self) -> f64 {
        self.total
    }

    pub(crate) fn mass(&self, subset: SubsetIndex) -> f64 {
        self.entries
            .binary_search_by_key(&subset, |&(s, _)| s)
            .map_or(0.0, |i| self.entries[i].1)
    }
}

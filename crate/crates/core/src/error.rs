use alloc::string::String;

use crate::frame::SubsetIndex;

/// Everything that can go wrong when building or querying evidence.
///
/// Each message names the invariant it enforces.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("frame must contain at least one label")]
    EmptyFrame,
    #[error("frame labels must be non-empty")]
    EmptyLabel,
    #[error("frame labels must be distinct: `{0}` appears more than once")]
    DuplicateLabel(String),
    #[error("frame size {size} exceeds the maximum of {max} labels")]
    FrameTooLarge { size: usize, max: usize },
    #[error("`{0}` is not a label of the frame")]
    UnknownLabel(String),
    #[error("subset index {bits:#b} is out of range for a frame of {frame_size} labels")]
    InvalidSubset { bits: u32, frame_size: usize },

    #[error("mass {value} assigned to {subset} must lie in [0, 1]")]
    MassOutOfRange { subset: SubsetIndex, value: f64 },
    #[error("the empty set cannot carry positive mass (got {0})")]
    EmptySetMass(f64),
    #[error("subset {0} is assigned mass more than once")]
    DuplicateSubset(SubsetIndex),
    #[error("masses of a basic probability assignment must sum to 1 (got {0})")]
    SumNotOne(f64),
    #[error("masses of a D number must sum to at most 1 (got {0})")]
    SumExceedsOne(f64),
    #[error("D number is information-incomplete (total mass {0}); a BPA needs total mass 1")]
    NotComplete(f64),

    #[error("non-exclusive degree {value} must lie in [0, 1]")]
    ValueOutOfRange { value: f64 },
    #[error("non-exclusive degrees are only given for nonempty subsets (got {0} and {1})")]
    EmptyPairMember(SubsetIndex, SubsetIndex),
    #[error("non-exclusive degree of intersecting subsets {0} and {1} is fixed at 1")]
    PairNotDisjoint(SubsetIndex, SubsetIndex),
    #[error("non-exclusive degree between {0} and {1} must be symmetric, got {2} and {3}")]
    ConflictingSymmetricEntries(SubsetIndex, SubsetIndex, f64, f64),

    #[error("operands are defined on different frames")]
    FrameMismatch,
    #[error("frame of {size} labels is too large for dense output (max {max})")]
    FrameTooLargeForDense { size: usize, max: usize },
    #[error("frame of {size} labels is too large for the brute-force oracle (max {max})")]
    FrameTooLargeForOracle { size: usize, max: usize },
    #[error("frame of {size} labels is too large for a full theorem sweep (max {max})")]
    FrameTooLargeForSweep { size: usize, max: usize },
    #[error("random instances need a frame of 1 to {max} labels (got {size})")]
    InvalidInstanceSize { size: usize, max: usize },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

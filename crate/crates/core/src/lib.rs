//! Belief and plausibility measures for D numbers.
//!
//! A D number generalizes a Dempster-Shafer mass function in two directions:
//! its masses may sum to less than one (information-incomplete), and the
//! elements of its frame need not be mutually exclusive. The degree to which
//! two disjoint subsets still overlap is given by a [`NonExclusivity`].
//!
//! ```
//! use dnum_core::{measures, DNumber, Frame, NonExclusivity};
//!
//! let frame = Frame::new(["a", "b"])?;
//! let a = frame.encode(["a"])?;
//! let b = frame.encode(["b"])?;
//! let d = DNumber::new(frame.clone(), [(a, 0.6), (b, 0.4)])?;
//! let ne = NonExclusivity::element_derived(frame, [(("a", "b"), 0.3)])?;
//!
//! let interval = measures::belief_interval(&d, &ne, a)?;
//! assert!((interval.lower - 0.42).abs() < 1e-12);
//! assert!((interval.upper - 0.72).abs() < 1e-12);
//! # Ok::<(), dnum_core::Error>(())
//! ```
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod dense;
pub mod dnumber;
mod error;
mod focal;
pub mod frame;
pub mod mass;
pub mod measures;
pub mod nonexclusivity;
pub mod oracle;

pub use dense::{max_abs_diff, DenseMatrix, MAX_DENSE_FRAME_SIZE};
pub use dnumber::{Completeness, CompletenessKind, DNumber};
pub use error::{Error, Result};
pub use focal::MASS_TOLERANCE;
pub use frame::{Frame, SubsetIndex, MAX_FRAME_SIZE};
pub use mass::MassFunction;
pub use measures::{BeliefInterval, Theorem, TheoremCheck, TheoremReport};
pub use nonexclusivity::{NonExclusivity, Strategy};

//! Frames of discernment and the bitmask encoding of their subsets.
//!
//! Label `i` of a frame (zero based) owns bit `i` of a [`SubsetIndex`], so the
//! powerset of an `N`-label frame is exactly the integer range `0..2^N`. That
//! ascending integer order is the canonical order used for every dense vector,
//! matrix and summation in the crate.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::error::{Error, Result};

/// Largest supported frame. Per-query measures cost `O(2^N)`.
pub const MAX_FRAME_SIZE: usize = 24;

/// One subset of a frame, encoded as a bitmask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SubsetIndex(u32);

impl SubsetIndex {
    pub const EMPTY: SubsetIndex = SubsetIndex(0);

    /// Wraps raw bits without checking them against a frame.
    /// Use [`Frame::subset`] for a checked conversion.
    pub const fn from_bits(bits: u32) -> Self {
        SubsetIndex(bits)
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub const fn contains_element(self, element: usize) -> bool {
        element < 32 && self.0 & (1 << element) != 0
    }

    pub const fn is_subset_of(self, other: SubsetIndex) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn intersects(self, other: SubsetIndex) -> bool {
        self.0 & other.0 != 0
    }

    pub const fn intersection(self, other: SubsetIndex) -> SubsetIndex {
        SubsetIndex(self.0 & other.0)
    }

    pub const fn union(self, other: SubsetIndex) -> SubsetIndex {
        SubsetIndex(self.0 | other.0)
    }

    /// Element positions contained in this subset, ascending.
    pub fn elements(self) -> Elements {
        Elements(self.0)
    }

    /// Every subset of `self` in ascending bitmask order, starting with `∅`
    /// and ending with `self`.
    pub fn submasks(self) -> Submasks {
        Submasks {
            next: Some(0),
            set: self.0,
        }
    }
}

impl fmt::Display for SubsetIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#b}", self.0)
    }
}

/// Iterator over the element positions of a subset.
#[derive(Debug, Clone)]
pub struct Elements(u32);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let low = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(low)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Elements {}

/// Ascending submask enumeration (carry-rippler).
#[derive(Debug, Clone)]
pub struct Submasks {
    next: Option<u32>,
    set: u32,
}

impl Iterator for Submasks {
    type Item = SubsetIndex;

    fn next(&mut self) -> Option<SubsetIndex> {
        let current = self.next?;
        let following = current.wrapping_sub(self.set) & self.set;
        self.next = (following != 0).then_some(following);
        Some(SubsetIndex(current))
    }
}

/// An ordered, finite frame of discernment.
///
/// Cloning is cheap; the labels are shared.
#[derive(Debug, Clone)]
pub struct Frame {
    labels: Arc<[String]>,
}

impl Frame {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let labels: Vec<String> = labels.into_iter().map(|s| s.as_ref().to_string()).collect();
        if labels.is_empty() {
            return Err(Error::EmptyFrame);
        }
        if labels.len() > MAX_FRAME_SIZE {
            return Err(Error::FrameTooLarge {
                size: labels.len(),
                max: MAX_FRAME_SIZE,
            });
        }
        for (i, label) in labels.iter().enumerate() {
            if label.is_empty() {
                return Err(Error::EmptyLabel);
            }
            if labels[..i].contains(label) {
                return Err(Error::DuplicateLabel(label.clone()));
            }
        }
        Ok(Frame {
            labels: labels.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false; frames hold at least one label.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, element: usize) -> Option<&str> {
        self.labels.get(element).map(String::as_str)
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Number of subsets, `2^N`.
    pub fn powerset_len(&self) -> usize {
        1usize << self.len()
    }

    /// The whole frame `Θ`.
    pub fn full(&self) -> SubsetIndex {
        SubsetIndex(((1u64 << self.len()) - 1) as u32)
    }

    pub fn contains(&self, subset: SubsetIndex) -> bool {
        subset.0 & !self.full().0 == 0
    }

    /// Checked conversion from raw bits.
    pub fn subset(&self, bits: u32) -> Result<SubsetIndex> {
        let subset = SubsetIndex(bits);
        self.check(subset)?;
        Ok(subset)
    }

    pub fn check(&self, subset: SubsetIndex) -> Result<()> {
        if self.contains(subset) {
            Ok(())
        } else {
            Err(Error::InvalidSubset {
                bits: subset.0,
                frame_size: self.len(),
            })
        }
    }

    /// Encodes a list of labels. Repeated labels are harmless.
    pub fn encode<I, S>(&self, members: I) -> Result<SubsetIndex>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        members.into_iter().try_fold(SubsetIndex::EMPTY, |acc, m| {
            let m = m.as_ref();
            let pos = self
                .position(m)
                .ok_or_else(|| Error::UnknownLabel(m.to_string()))?;
            Ok(SubsetIndex(acc.0 | 1 << pos))
        })
    }

    /// Labels of the members of `subset`, in frame order.
    pub fn members(&self, subset: SubsetIndex) -> impl Iterator<Item = &str> + '_ {
        subset
            .elements()
            .filter_map(move |e| self.labels.get(e).map(String::as_str))
    }

    /// `Ā = Θ \ A`. Bits outside the frame are discarded.
    pub fn complement(&self, subset: SubsetIndex) -> SubsetIndex {
        SubsetIndex(!subset.0 & self.full().0)
    }

    /// All `2^N` subsets in canonical (ascending bitmask) order.
    pub fn subsets(&self) -> impl DoubleEndedIterator<Item = SubsetIndex> + ExactSizeIterator {
        let range: Range<u32> = 0..self.powerset_len() as u32;
        range.map(SubsetIndex)
    }

    fn same_as(&self, other: &Frame) -> bool {
        Arc::ptr_eq(&self.labels, &other.labels) || self.labels == other.labels
    }

    /// Errors with [`Error::FrameMismatch`] unless both frames carry the same labels in
    /// the same order.
    pub fn ensure_same(&self, other: &Frame) -> Result<()> {
        if self.same_as(other) {
            Ok(())
        } else {
            Err(Error::FrameMismatch)
        }
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Frame {}

//! Non-exclusive degrees `u(Bᵢ, Bⱼ)` between subsets and the matrix `U`.
//!
//! Three constructions are supported:
//!
//! - [`NonExclusivity::exclusive`]: disjoint subsets are fully exclusive
//!   (`u = 0`). This is the classical Dempster-Shafer setting.
//! - [`NonExclusivity::element_derived`]: degrees are given between single
//!   elements; the degree between two subsets is the maximum over all cross
//!   pairs of their members.
//! - [`NonExclusivity::explicit_table`]: degrees are given directly for
//!   disjoint subset pairs.
//!
//! Regardless of construction, intersecting subsets always have `u = 1`, the
//! degree is symmetric, and any pair involving `∅` has `u = 0`. Unspecified
//! disjoint pairs default to `0`.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::dense::{ensure_dense, DenseMatrix};
use crate::error::{Error, Result};
use crate::frame::{Frame, SubsetIndex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Exclusive,
    ElementDerived,
    ExplicitTable,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [
        Strategy::Exclusive,
        Strategy::ElementDerived,
        Strategy::ExplicitTable,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Exclusive => "exclusive",
            Strategy::ElementDerived => "element_derived",
            Strategy::ExplicitTable => "explicit_table",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Degrees {
    Exclusive,
    /// `n × n` element-level degrees, symmetric, unit diagonal.
    ElementDerived { n: usize, table: Vec<f64> },
    /// Keyed by `(min, max)` of the pair.
    ExplicitTable(BTreeMap<(SubsetIndex, SubsetIndex), f64>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct NonExclusivity {
    frame: Frame,
    degrees: Degrees,
}

fn check_degree(value: f64) -> Result<()> {
    if (0.0..=1.0).contains(&value) {
        Ok(())
    } else {
        Err(Error::ValueOutOfRange { value })
    }
}

fn ordered(a: SubsetIndex, b: SubsetIndex) -> (SubsetIndex, SubsetIndex) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl NonExclusivity {
    pub fn exclusive(frame: Frame) -> Self {
        NonExclusivity {
            frame,
            degrees: Degrees::Exclusive,
        }
    }

    /// Element-level degrees keyed by label pairs.
    pub fn element_derived<I, S>(frame: Frame, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((S, S), f64)>,
        S: AsRef<str>,
    {
        let mut indexed = Vec::new();
        for ((x, y), p) in pairs {
            let pos = |label: &str| {
                frame
                    .position(label)
                    .ok_or_else(|| Error::UnknownLabel(label.to_string()))
            };
            indexed.push(((pos(x.as_ref())?, pos(y.as_ref())?), p));
        }
        Self::element_derived_indexed(frame, indexed)
    }

    /// Element-level degrees keyed by element positions.
    pub fn element_derived_indexed<I>(frame: Frame, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((usize, usize), f64)>,
    {
        let n = frame.len();
        let mut table = vec![0.0; n * n];
        let mut given = vec![false; n * n];
        for i in 0..n {
            table[i * n + i] = 1.0;
        }
        for ((x, y), p) in pairs {
            for e in [x, y] {
                if e >= n {
                    return Err(Error::InvalidSubset {
                        bits: 1u32.checked_shl(e as u32).unwrap_or(u32::MAX),
                        frame_size: n,
                    });
                }
            }
            check_degree(p)?;
            let (bx, by) = (
                SubsetIndex::from_bits(1 << x),
                SubsetIndex::from_bits(1 << y),
            );
            if x == y {
                if p != 1.0 {
                    return Err(Error::PairNotDisjoint(bx, by));
                }
                continue;
            }
            if given[x * n + y] && table[x * n + y] != p {
                return Err(Error::ConflictingSymmetricEntries(bx, by, table[x * n + y], p));
            }
            table[x * n + y] = p;
            table[y * n + x] = p;
            given[x * n + y] = true;
            given[y * n + x] = true;
        }
        Ok(NonExclusivity {
            frame,
            degrees: Degrees::ElementDerived { n, table },
        })
    }

    /// Every pair of distinct elements, and hence every disjoint pair of
    /// nonempty subsets, gets the same degree `p`.
    pub fn uniform(frame: Frame, p: f64) -> Result<Self> {
        check_degree(p)?;
        let n = frame.len();
        let pairs = (0..n).flat_map(|x| (x + 1..n).map(move |y| ((x, y), p)));
        Self::element_derived_indexed(frame, pairs)
    }

    /// Degrees for explicit disjoint, nonempty subset pairs.
    pub fn explicit_table<I>(frame: Frame, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((SubsetIndex, SubsetIndex), f64)>,
    {
        let mut table = BTreeMap::new();
        for ((bi, bj), p) in entries {
            frame.check(bi)?;
            frame.check(bj)?;
            check_degree(p)?;
            if bi.is_empty() || bj.is_empty() {
                return Err(Error::EmptyPairMember(bi, bj));
            }
            if bi.intersects(bj) {
                return Err(Error::PairNotDisjoint(bi, bj));
            }
            let key = ordered(bi, bj);
            match table.get(&key) {
                Some(&q) if q != p => {
                    return Err(Error::ConflictingSymmetricEntries(key.0, key.1, q, p));
                }
                _ => {
                    table.insert(key, p);
                }
            }
        }
        Ok(NonExclusivity {
            frame,
            degrees: Degrees::ExplicitTable(table),
        })
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    pub fn strategy(&self) -> Strategy {
        match self.degrees {
            Degrees::Exclusive => Strategy::Exclusive,
            Degrees::ElementDerived { .. } => Strategy::ElementDerived,
            Degrees::ExplicitTable(_) => Strategy::ExplicitTable,
        }
    }

    /// The non-exclusive degree `u(Bᵢ, Bⱼ)`.
    ///
    /// Both subsets are assumed to belong to the frame.
    pub fn u(&self, bi: SubsetIndex, bj: SubsetIndex) -> f64 {
        if bi.is_empty() || bj.is_empty() {
            return 0.0;
        }
        if bi.intersects(bj) {
            return 1.0;
        }
        match &self.degrees {
            Degrees::Exclusive => 0.0,
            Degrees::ElementDerived { n, table } => {
                let mut best = 0.0f64;
                for x in bi.elements() {
                    let row = &table[x * n..(x + 1) * n];
                    for y in bj.elements() {
                        best = best.max(row[y]);
                    }
                }
                best
            }
            Degrees::ExplicitTable(table) => {
                table.get(&ordered(bi, bj)).copied().unwrap_or(0.0)
            }
        }
    }

    /// The dense `2^N × 2^N` matrix `U` in canonical subset order.
    pub fn matrix(&self) -> Result<DenseMatrix> {
        ensure_dense(&self.frame)?;
        let dim = self.frame.powerset_len();
        Ok(DenseMatrix::from_fn(dim, |i, j| {
            self.u(
                SubsetIndex::from_bits(i as u32),
                SubsetIndex::from_bits(j as u32),
            )
        }))
    }
}

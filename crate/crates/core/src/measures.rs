//! Belief and plausibility of a D number under a non-exclusivity assignment.
//!
//! ```text
//! Bel(A) = Σ_{B ⊆ A} D(B) · (1 − u(B, Ā))
//! Pl(A)  = Σ_{B ⊆ Θ} u(B, A) · D(B)
//! ```
//!
//! All sums run over focal elements in ascending subset order, so results are
//! reproducible bit for bit. With exclusive degrees and a complete D number
//! both measures coincide with the classical ones.

use alloc::vec::Vec;
use core::fmt;

use crate::dense::ensure_dense;
use crate::dnumber::DNumber;
use crate::error::{Error, Result};
use crate::frame::{Frame, SubsetIndex};
use crate::nonexclusivity::NonExclusivity;

/// Slack allowed on the inequality theorems.
pub const INEQUALITY_SLACK: f64 = 1e-12;
/// Tolerance on `Bel(A) + Pl(Ā) = s`.
pub const EQUALITY_TOLERANCE: f64 = 1e-9;
/// Largest frame swept exhaustively by [`verify_theorems`].
pub const MAX_SWEEP_FRAME_SIZE: usize = 20;

/// `[Bel(A), Pl(A)]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeliefInterval {
    pub lower: f64,
    pub upper: f64,
}

impl BeliefInterval {
    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }
}

fn check_inputs(d: &DNumber, ne: &NonExclusivity, a: SubsetIndex) -> Result<()> {
    d.frame().ensure_same(ne.frame())?;
    d.frame().check(a)
}

fn bel_term(ne: &NonExclusivity, b: SubsetIndex, mass: f64, not_a: SubsetIndex) -> f64 {
    mass * (1.0 - ne.u(b, not_a))
}

fn bel_scan(d: &DNumber, ne: &NonExclusivity, a: SubsetIndex) -> f64 {
    let not_a = d.frame().complement(a);
    d.focal_elements()
        .iter()
        .filter(|(b, _)| b.is_subset_of(a))
        .fold(0.0, |acc, &(b, m)| acc + bel_term(ne, b, m, not_a))
}

fn pl_scan(d: &DNumber, ne: &NonExclusivity, a: SubsetIndex) -> f64 {
    d.focal_elements()
        .iter()
        .fold(0.0, |acc, &(b, m)| acc + ne.u(b, a) * m)
}

/// Belief measure of `a`.
pub fn bel(d: &DNumber, ne: &NonExclusivity, a: SubsetIndex) -> Result<f64> {
    check_inputs(d, ne, a)?;
    Ok(bel_scan(d, ne, a))
}

/// Plausibility measure of `a`.
pub fn pl(d: &DNumber, ne: &NonExclusivity, a: SubsetIndex) -> Result<f64> {
    check_inputs(d, ne, a)?;
    Ok(pl_scan(d, ne, a))
}

pub fn belief_interval(d: &DNumber, ne: &NonExclusivity, a: SubsetIndex) -> Result<BeliefInterval> {
    check_inputs(d, ne, a)?;
    Ok(BeliefInterval {
        lower: bel_scan(d, ne, a),
        upper: pl_scan(d, ne, a),
    })
}

/// `Bel` over every subset. For small `A` the submasks of `A` are walked
/// directly instead of scanning every focal element; both walks visit the same
/// terms in the same order.
fn bel_table(d: &DNumber, ne: &NonExclusivity) -> Vec<f64> {
    let frame = d.frame();
    let focal = d.focal_elements();
    let dense = if focal.len() > 64 {
        d.to_vector().ok()
    } else {
        None
    };
    frame
        .subsets()
        .map(|a| match &dense {
            Some(mass) if (1usize << a.len()) < focal.len() => {
                let not_a = frame.complement(a);
                a.submasks().fold(0.0, |acc, b| {
                    let m = mass[b.bits() as usize];
                    if m > 0.0 {
                        acc + bel_term(ne, b, m, not_a)
                    } else {
                        acc
                    }
                })
            }
            _ => bel_scan(d, ne, a),
        })
        .collect()
}

fn pl_table(d: &DNumber, ne: &NonExclusivity) -> Vec<f64> {
    d.frame().subsets().map(|a| pl_scan(d, ne, a)).collect()
}

/// `Bel` of every subset in canonical order.
pub fn bel_vector(d: &DNumber, ne: &NonExclusivity) -> Result<Vec<f64>> {
    d.frame().ensure_same(ne.frame())?;
    ensure_dense(d.frame())?;
    Ok(bel_table(d, ne))
}

/// `Pl` of every subset in canonical order. Equals `D · U`.
pub fn pl_vector(d: &DNumber, ne: &NonExclusivity) -> Result<Vec<f64>> {
    d.frame().ensure_same(ne.frame())?;
    ensure_dense(d.frame())?;
    Ok(pl_table(d, ne))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `Pl(A) ≥ Bel(A)`
    PlDominatesBel,
    /// `Bel(A) + Bel(Ā) ≤ s`
    BelSubadditive,
    /// `Pl(A) + Pl(Ā) ≥ s`
    PlSuperadditive,
    /// `Bel(A) + Pl(Ā) = s`
    Duality,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [
        Theorem::PlDominatesBel,
        Theorem::BelSubadditive,
        Theorem::PlSuperadditive,
        Theorem::Duality,
    ];

    pub fn number(self) -> u8 {
        match self {
            Theorem::PlDominatesBel => 1,
            Theorem::BelSubadditive => 2,
            Theorem::PlSuperadditive => 3,
            Theorem::Duality => 4,
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Theorem::PlDominatesBel => "Pl(A) >= Bel(A)",
            Theorem::BelSubadditive => "Bel(A) + Bel(~A) <= s",
            Theorem::PlSuperadditive => "Pl(A) + Pl(~A) >= s",
            Theorem::Duality => "Bel(A) + Pl(~A) = s",
        }
    }

    pub fn tolerance(self) -> f64 {
        match self {
            Theorem::Duality => EQUALITY_TOLERANCE,
            _ => INEQUALITY_SLACK,
        }
    }

    /// How far `a` lies beyond the theorem's bound. Non-positive means the
    /// inequality holds exactly; for the equality it is the absolute residual.
    fn violation(self, s: f64, bel_a: f64, bel_not_a: f64, pl_a: f64, pl_not_a: f64) -> f64 {
        match self {
            Theorem::PlDominatesBel => bel_a - pl_a,
            Theorem::BelSubadditive => bel_a + bel_not_a - s,
            Theorem::PlSuperadditive => s - (pl_a + pl_not_a),
            Theorem::Duality => (bel_a + pl_not_a - s).abs(),
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{} {}", self.number(), self.statement())
    }
}

/// Outcome of one theorem over the whole powerset.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TheoremCheck {
    pub theorem: Theorem,
    /// Largest violation over all subsets (see [`Theorem`] for the sign).
    pub max_violation: f64,
    /// First subset in canonical order attaining `max_violation`.
    pub witness: SubsetIndex,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub frame: Frame,
    /// Total mass `s` used in place of 1.
    pub total_mass: f64,
    pub checks: [TheoremCheck; 4],
}

impl TheoremReport {
    /// Evaluates all four theorems from precomputed `Bel` and `Pl` tables in
    /// canonical order.
    ///
    /// # Panics
    /// If either table does not have `2^N` entries.
    pub fn from_tables(frame: &Frame, total_mass: f64, bel: &[f64], pl: &[f64]) -> Self {
        let n = frame.powerset_len();
        assert!(bel.len() == n && pl.len() == n, "tables must cover the powerset");
        let full = frame.full().bits() as usize;
        let checks = Theorem::ALL.map(|theorem| {
            let mut worst = f64::NEG_INFINITY;
            let mut witness = SubsetIndex::EMPTY;
            for a in 0..n {
                let not_a = full ^ a;
                let v = theorem.violation(total_mass, bel[a], bel[not_a], pl[a], pl[not_a]);
                // NaN never arises from validated inputs; treat it as a violation anyway.
                if v > worst || (v.is_nan() && !worst.is_nan()) {
                    worst = v;
                    witness = SubsetIndex::from_bits(a as u32);
                }
            }
            TheoremCheck {
                theorem,
                max_violation: worst,
                witness,
                passed: worst <= theorem.tolerance(),
            }
        });
        TheoremReport {
            frame: frame.clone(),
            total_mass,
            checks,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, theorem: Theorem) -> &TheoremCheck {
        &self.checks[theorem.number() as usize - 1]
    }
}

/// Sweeps every subset and checks the four theorems, with the total mass `s`
/// standing in for 1 so incomplete D numbers are covered too.
pub fn verify_theorems(d: &DNumber, ne: &NonExclusivity) -> Result<TheoremReport> {
    let frame = d.frame();
    frame.ensure_same(ne.frame())?;
    if frame.len() > MAX_SWEEP_FRAME_SIZE {
        return Err(Error::FrameTooLargeForSweep {
            size: frame.len(),
            max: MAX_SWEEP_FRAME_SIZE,
        });
    }
    let bel = bel_table(d, ne);
    let pl = pl_table(d, ne);
    Ok(TheoremReport::from_tables(frame, d.total_mass(), &bel, &pl))
}

//! Brute-force reference evaluations and a seeded instance generator.
//!
//! The reference functions use the *other* written form of each measure than
//! [`crate::measures`]: belief sums over the whole powerset, and plausibility
//! splits into an intersecting and a disjoint branch. They are deliberately
//! slow and literal.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dnumber::DNumber;
use crate::error::{Error, Result};
use crate::frame::{Frame, SubsetIndex};
use crate::nonexclusivity::{NonExclusivity, Strategy};

pub const MAX_ORACLE_FRAME_SIZE: usize = 16;
pub const MAX_RANDOM_FRAME_SIZE: usize = 8;

fn check(d: &DNumber, ne: &NonExclusivity, a: SubsetIndex) -> Result<()> {
    d.frame().ensure_same(ne.frame())?;
    let size = d.frame().len();
    if size > MAX_ORACLE_FRAME_SIZE {
        return Err(Error::FrameTooLargeForOracle {
            size,
            max: MAX_ORACLE_FRAME_SIZE,
        });
    }
    d.frame().check(a)
}

/// `Bel(A) = Σ_{B ⊆ Θ} D(B) · (1 − u(B, Ā))`, every `B` visited.
pub fn bel_oracle(d: &DNumber, ne: &NonExclusivity, a: SubsetIndex) -> Result<f64> {
    check(d, ne, a)?;
    let frame = d.frame();
    let not_a = frame.complement(a);
    let mut total = 0.0;
    for b in frame.subsets() {
        total += d.mass(b) * (1.0 - ne.u(b, not_a));
    }
    Ok(total)
}

/// `Pl(A) = Σ_{B ∩ A ≠ ∅} D(B) + Σ_{B ∩ A = ∅} u(B, A) · D(B)`.
pub fn pl_oracle(d: &DNumber, ne: &NonExclusivity, a: SubsetIndex) -> Result<f64> {
    check(d, ne, a)?;
    let frame = d.frame();
    let mut intersecting = 0.0;
    let mut disjoint = 0.0;
    for b in frame.subsets() {
        if b.bits() & a.bits() != 0 {
            intersecting += d.mass(b);
        } else {
            disjoint += ne.u(b, a) * d.mass(b);
        }
    }
    Ok(intersecting + disjoint)
}

/// Degree drawn for a random pair: sometimes exactly 0 or 1, otherwise uniform.
fn random_degree(rng: &mut ChaCha8Rng) -> f64 {
    match rng.gen_range(0..8) {
        0 => 0.0,
        1 => 1.0,
        _ => rng.gen::<f64>(),
    }
}

fn random_nonempty(rng: &mut ChaCha8Rng, within: SubsetIndex) -> SubsetIndex {
    debug_assert!(!within.is_empty());
    loop {
        let bits = rng.gen_range(1..=within.bits()) & within.bits();
        if bits != 0 {
            return SubsetIndex::from_bits(bits);
        }
    }
}

/// A reproducible random D number and non-exclusivity on a frame of
/// `frame_size` labels `q1 … qN`.
///
/// Complete instances have total mass 1; incomplete ones are scaled to a total
/// drawn uniformly from `[0.001, 0.999)`.
pub fn random_instance(
    seed: u64,
    frame_size: usize,
    strategy: Strategy,
    complete: bool,
) -> Result<(DNumber, NonExclusivity)> {
    if !(1..=MAX_RANDOM_FRAME_SIZE).contains(&frame_size) {
        return Err(Error::InvalidInstanceSize {
            size: frame_size,
            max: MAX_RANDOM_FRAME_SIZE,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels: Vec<String> = (1..=frame_size).map(|i| format!("q{i}")).collect();
    let frame = Frame::new(&labels)?;
    let full = frame.full();

    let max_focal = (frame.powerset_len() - 1).min(16);
    let count = rng.gen_range(1..=max_focal);
    let mut weights: BTreeMap<SubsetIndex, f64> = BTreeMap::new();
    while weights.len() < count {
        let b = random_nonempty(&mut rng, full);
        // (0, 1]: never zero, so no focal element is dropped.
        let w = 1.0 - rng.gen::<f64>();
        weights.entry(b).or_insert(w);
    }
    let raw_sum: f64 = weights.values().sum();
    let target = if complete {
        1.0
    } else {
        rng.gen_range(0.001..0.999)
    };
    let d = DNumber::new(
        frame.clone(),
        weights.iter().map(|(&b, &w)| (b, w / raw_sum * target)),
    )?;

    let ne = match strategy {
        Strategy::Exclusive => NonExclusivity::exclusive(frame),
        Strategy::ElementDerived => {
            let mut pairs = Vec::new();
            for x in 0..frame_size {
                for y in x + 1..frame_size {
                    if rng.gen_bool(0.5) {
                        pairs.push(((x, y), random_degree(&mut rng)));
                    }
                }
            }
            NonExclusivity::element_derived_indexed(frame, pairs)?
        }
        Strategy::ExplicitTable => {
            let mut table = BTreeMap::new();
            if frame_size > 1 {
                let entries = rng.gen_range(0..=16);
                for _ in 0..entries {
                    let mut bi = random_nonempty(&mut rng, full);
                    if bi == full {
                        bi = SubsetIndex::from_bits(bi.bits() & (bi.bits() - 1));
                    }
                    let bj = random_nonempty(&mut rng, frame.complement(bi));
                    let key = if bi <= bj { (bi, bj) } else { (bj, bi) };
                    let p = random_degree(&mut rng);
                    table.entry(key).or_insert(p);
                }
            }
            NonExclusivity::explicit_table(frame, table)?
        }
    };
    Ok((d, ne))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures;

    #[test]
    fn worked_example() {
        let f = Frame::new(["a", "b"]).unwrap();
        let a = SubsetIndex::from_bits(1);
        let d = DNumber::new(f.clone(), [(a, 0.6), (SubsetIndex::from_bits(2), 0.4)]).unwrap();
        let ne = NonExclusivity::element_derived(f.clone(), [(("a", "b"), 0.3)]).unwrap();
        let b = bel_oracle(&d, &ne, a).unwrap();
        let p = pl_oracle(&d, &ne, a).unwrap();
        assert!((b - 0.42).abs() < 1e-15);
        assert!((p - 0.72).abs() < 1e-15);
        assert!((b - measures::bel(&d, &ne, a).unwrap()).abs() <= 1e-12);
        assert!((p - measures::pl(&d, &ne, a).unwrap()).abs() <= 1e-12);
        assert_eq!(bel_oracle(&d, &ne, SubsetIndex::EMPTY).unwrap(), 0.0);
        assert_eq!(pl_oracle(&d, &ne, f.full()).unwrap(), d.total_mass());
    }

    #[test]
    fn instances_are_reproducible() {
        for strategy in Strategy::ALL {
            for complete in [true, false] {
                let x = random_instance(0, 2, strategy, complete).unwrap();
                let y = random_instance(0, 2, strategy, complete).unwrap();
                assert_eq!(x, y);
                assert_eq!(x.1.strategy(), strategy);
            }
        }
        assert_ne!(
            random_instance(1, 6, Strategy::ExplicitTable, true).unwrap(),
            random_instance(2, 6, Strategy::ExplicitTable, true).unwrap()
        );
    }

    #[test]
    fn completeness_flag_is_honoured() {
        for seed in 0..200 {
            let size = 1 + (seed as usize % MAX_RANDOM_FRAME_SIZE);
            let (d, _) = random_instance(seed, size, Strategy::ElementDerived, true).unwrap();
            assert!((d.total_mass() - 1.0).abs() <= 1e-12);
            let (d, _) = random_instance(seed, size, Strategy::ElementDerived, false).unwrap();
            assert!(d.total_mass() < 1.0);
            assert!(!d.completeness().is_complete());
        }
    }

    #[test]
    fn size_limits() {
        assert!(random_instance(0, 0, Strategy::Exclusive, true).is_err());
        assert!(random_instance(0, 9, Strategy::Exclusive, true).is_err());
        let labels: Vec<String> = (0..17).map(|i| format!("q{i}")).collect();
        let f = Frame::new(&labels).unwrap();
        let d = DNumber::new(f.clone(), [(f.full(), 1.0)]).unwrap();
        let ne = NonExclusivity::exclusive(f);
        assert_eq!(
            bel_oracle(&d, &ne, SubsetIndex::EMPTY),
            Err(Error::FrameTooLargeForOracle { size: 17, max: 16 })
        );
    }
}

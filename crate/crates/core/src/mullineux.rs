//! The Mullineux involution on e-regular partitions.
//!
//! `M(p)` is obtained by reading any path `r_1..r_n` from the empty partition
//! to `p` in the e-good lattice, and replaying the word `e-r_1, .., e-r_n`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{regular_partitions, Partition};
use crate::typea::{KleshchevCrystal, PathStrategy};

/// A Mullineux-fixed partition together with its type-A residue counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPointRecord {
    pub partition: Partition,
    pub n: usize,
    pub residue_profile: Vec<usize>,
}

pub fn mullineux(p: &Partition, e: usize) -> Result<Partition> {
    mullineux_with(p, e, PathStrategy::SmallestResidue)
}

/// `M(p)` computed from the path chosen by `strategy`. The result does not
/// depend on the strategy.
pub fn mullineux_with(p: &Partition, e: usize, strategy: PathStrategy) -> Result<Partition> {
    let crystal = KleshchevCrystal::new(e)?;
    let word = crystal.path_with(p, strategy)?;
    mullineux_of_word(&crystal, &word)
}

/// Replays the negated word; every step must find a cogood node.
pub fn mullineux_of_word(crystal: &KleshchevCrystal, word: &[usize]) -> Result<Partition> {
    let e = crystal.e();
    let negated: Vec<usize> = word.iter().map(|&r| (e - r % e) % e).collect();
    crystal.replay(&negated).ok_or_else(|| {
        Error::InternalConsistency(format!(
            "negated word {negated:?} is not a path in the {e}-good lattice"
        ))
    })
}

/// All Mullineux-fixed e-regular partitions of `n`, descending lexicographic.
pub fn fixed_set(e: usize, n: usize) -> Result<Vec<FixedPointRecord>> {
    let crystal = KleshchevCrystal::new(e)?;
    let candidates = regular_partitions(n, e)?;
    let fixed: Vec<Option<FixedPointRecord>> = candidates
        .into_par_iter()
        .map(|p| {
            let word = crystal.canonical_path(&p)?;
            let image = mullineux_of_word(&crystal, &word)?;
            if image != p {
                return Ok(None);
            }
            let residue_profile = p.residue_counts(e)?;
            Ok(Some(FixedPointRecord {
                n,
                residue_profile,
                partition: p,
            }))
        })
        .collect::<Result<_>>()?;
    Ok(fixed.into_iter().flatten().collect())
}

/// `(|K_n| + 3 |fixed|) / 2`, where `K_n` is the set of e-regular partitions
/// of `n`.
///
/// This counts the irreducible modules of the alternating group when the
/// Mullineux involution describes restriction from the symmetric group,
/// i.e. for `e` an odd prime in characteristic `e`. The number is computed
/// for every `e >= 2`; outside that setting it carries no representation-
/// theoretic meaning.
pub fn irr_alternating_count(e: usize, n: usize) -> Result<u64> {
    let regular = regular_partitions(n, e)?.len() as u64;
    let fixed = fixed_set(e, n)?.len() as u64;
    if !(regular + 3 * fixed).is_multiple_of(2) {
        return Err(Error::InternalConsistency(format!(
            "|K_{n}| = {regular} and {fixed} fixed points have different parity"
        )));
    }
    Ok((regular + 3 * fixed) / 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            mullineux(&Partition::empty(), 3).unwrap(),
            Partition::empty()
        );
        assert_eq!(mullineux(&p("2"), 3).unwrap(), p("1,1"));
        assert_eq!(mullineux(&p("3,1,1"), 3).unwrap(), p("3,1,1"));
        assert!(matches!(
            mullineux(&p("1,1,1"), 3),
            Err(Error::NotRegular { .. })
        ));
    }

    #[test]
    fn negated_word_of_eta_path() {
        let k = KleshchevCrystal::new(3).unwrap();
        assert_eq!(mullineux_of_word(&k, &[0, 2, 1, 1, 2]).unwrap(), p("3,1,1"));
    }

    #[test]
    fn fixed_sets() {
        assert!(fixed_set(3, 2).unwrap().is_empty());
        let five = fixed_set(3, 5).unwrap();
        assert_eq!(five.len(), 1);
        assert_eq!(five[0].partition, p("3,1,1"));
        assert_eq!(five[0].residue_profile, vec![1, 2, 2]);
        for n in 0..8 {
            let all = regular_partitions(n, 2).unwrap();
            let fixed: Vec<_> = fixed_set(2, n)
                .unwrap()
                .into_iter()
                .map(|r| r.partition)
                .collect();
            assert_eq!(fixed, all);
        }
    }

    #[test]
    fn alternating_counts() {
        assert_eq!(irr_alternating_count(3, 5).unwrap(), 4);
        assert_eq!(irr_alternating_count(3, 2).unwrap(), 1);
        assert_eq!(irr_alternating_count(3, 1).unwrap(), 2);
    }
}

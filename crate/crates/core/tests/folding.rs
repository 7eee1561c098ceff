use std::collections::BTreeSet;

use mullineux_core::folding::{check_fold_relations, eta, eta_with};
use mullineux_core::mullineux::fixed_set;
use mullineux_core::partition::{class_members, CrystalKind, Partition};
use mullineux_core::typea::PathStrategy;

fn kind_of(e: usize) -> CrystalKind {
    CrystalKind::from_e(e).unwrap()
}

// Twisted vertices whose image can have size at most `max`. The image of a
// vertex of size n has size at least n, so vertices up to size `max` suffice.
fn images_upto(kind: CrystalKind, max: usize) -> Vec<(Partition, Partition)> {
    (0..=max)
        .flat_map(|n| class_members(n, kind))
        .map(|p| {
            let q = eta(&p, kind).unwrap();
            (p, q)
        })
        .filter(|(_, q)| q.size() <= max)
        .collect()
}

#[test]
fn eta_is_a_bijection_onto_fixed_points() {
    for e in 2..=6 {
        let kind = kind_of(e);
        let max = 14;
        let pairs = images_upto(kind, max);
        let images: BTreeSet<Partition> = pairs.iter().map(|(_, q)| q.clone()).collect();
        assert_eq!(images.len(), pairs.len(), "eta not injective for e={e}");
        let fixed: BTreeSet<Partition> = (0..=max)
            .flat_map(|n| fixed_set(e, n).unwrap())
            .map(|r| r.partition)
            .collect();
        assert_eq!(images, fixed, "e={e}");
    }
}

#[test]
fn eta_does_not_depend_on_path() {
    for e in 2..=6 {
        let kind = kind_of(e);
        for n in 0..=8 {
            for p in class_members(n, kind) {
                let a = eta_with(&p, kind, PathStrategy::SmallestResidue).unwrap();
                let b = eta_with(&p, kind, PathStrategy::LargestResidue).unwrap();
                assert_eq!(a, b, "{kind} {p:?}");
            }
        }
    }
}

#[test]
fn residue_relations_hold() {
    for l in 1..=3 {
        for kind in [CrystalKind::Odd(l), CrystalKind::Even(l)] {
            for n in 0..=8 {
                for p in class_members(n, kind) {
                    let r = check_fold_relations(&p, kind).unwrap();
                    assert!(
                        r.all_passed(),
                        "{kind} {p:?}: {:?}",
                        r.failures().collect::<Vec<_>>()
                    );
                }
            }
        }
    }
}

#[test]
fn report_serializes_flat() {
    let r = check_fold_relations(&"2".parse().unwrap(), CrystalKind::Odd(1)).unwrap();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["kind"], "odd");
    assert_eq!(v["ell"], 1);
    assert_eq!(v["image"], serde_json::json!([3, 1, 1]));
}

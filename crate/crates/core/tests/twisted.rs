use mullineux_core::folding::fold_cartan;
use mullineux_core::partition::{class_members, partitions_of, CrystalKind, Partition, Residue};
use mullineux_core::twisted::{enumerate_twisted, NodeTag, TwistedCrystal};
use mullineux_core::typea::PathStrategy;

fn kinds() -> Vec<CrystalKind> {
    (1..=3)
        .flat_map(|l| [CrystalKind::Odd(l), CrystalKind::Even(l)])
        .collect()
}

fn members_upto(kind: CrystalKind, max: usize) -> Vec<Partition> {
    (0..=max).flat_map(|n| class_members(n, kind)).collect()
}

#[test]
fn good_is_row_end_and_cogood_is_single_addable() {
    for kind in kinds() {
        let c = TwistedCrystal::new(kind).unwrap();
        for p in members_upto(kind, 12) {
            for i in 0..=kind.ell() {
                let r = c
                    .signature_report(&p, Residue::new(i as i64, kind.modulus()))
                    .unwrap();
                if let Some(g) = r.good {
                    assert_eq!(g.tag, NodeTag::R1, "{kind} {p:?} i={i}");
                }
                if let Some(g) = r.cogood {
                    assert_eq!(g.tag, NodeTag::A1, "{kind} {p:?} i={i}");
                }
            }
        }
    }
}

#[test]
fn operators_are_inverse_and_closed() {
    for kind in kinds() {
        let c = TwistedCrystal::new(kind).unwrap();
        for p in members_upto(kind, 12) {
            for i in 0..=kind.ell() {
                if let Some(q) = c.f(&p, i).unwrap() {
                    assert!(kind.contains(&q), "{kind} f_{i}{p:?} = {q:?}");
                    assert_eq!(c.e(&q, i).unwrap().as_ref(), Some(&p));
                    assert_eq!(c.epsilon(&q, i), c.epsilon(&p, i) + 1);
                }
                if let Some(q) = c.e(&p, i).unwrap() {
                    assert!(kind.contains(&q));
                    assert_eq!(c.f(&q, i).unwrap().as_ref(), Some(&p));
                    assert_eq!(c.phi(&q, i), c.phi(&p, i) + 1);
                }
            }
        }
    }
}

#[test]
fn paths_replay_for_every_strategy() {
    for kind in kinds() {
        let c = TwistedCrystal::new(kind).unwrap();
        for p in members_upto(kind, 12) {
            for strategy in PathStrategy::ALL {
                let w = c.path_with(&p, strategy).unwrap();
                assert_eq!(w.len(), p.size());
                assert_eq!(c.replay(&w).unwrap().as_ref(), Some(&p));
            }
        }
    }
}

#[test]
fn enumeration_reaches_exactly_the_class() {
    for kind in kinds() {
        let graph = enumerate_twisted(kind, 12).unwrap();
        for (n, level) in graph.levels.iter().enumerate() {
            assert_eq!(level, &class_members(n, kind), "{kind} n={n}");
        }
    }
}

// Number of partitions of n into parts drawn from `allowed`, counted by
// filtering the full partition list.
fn parts_in(n: usize, allowed: impl Fn(usize) -> bool) -> usize {
    partitions_of(n)
        .iter()
        .filter(|p| p.parts().iter().all(|&x| allowed(x)))
        .count()
}

#[test]
fn vertex_counts_match_odd_part_partitions() {
    let odd3 = enumerate_twisted(CrystalKind::Odd(1), 6)
        .unwrap()
        .level_sizes();
    let want: Vec<usize> = (0..=6)
        .map(|n| parts_in(n, |x| x % 2 == 1 && x % 3 != 0))
        .collect();
    assert_eq!(odd3, want);
    assert_eq!(odd3, [1, 1, 1, 1, 1, 2, 2]);
    for l in 1..=3 {
        let even = enumerate_twisted(CrystalKind::Even(l), 6)
            .unwrap()
            .level_sizes();
        let want: Vec<usize> = (0..=6).map(|n| parts_in(n, |x| x % 2 == 1)).collect();
        assert_eq!(even, want);
        assert_eq!(even, [1, 1, 1, 2, 2, 3, 4]);
    }
}

#[test]
fn weights_follow_the_folded_cartan_matrix() {
    for kind in kinds() {
        let c = TwistedCrystal::new(kind).unwrap();
        let cartan = fold_cartan(kind.e()).unwrap().matrix;
        for p in members_upto(kind, 12) {
            let mut a = vec![0i64; kind.ell() + 1];
            for r in c.canonical_path(&p).unwrap() {
                a[r] += 1;
            }
            for (i, row) in cartan.iter().enumerate() {
                let weight = c.phi(&p, i) as i64 - c.epsilon(&p, i) as i64;
                let lowered: i64 = row.iter().zip(&a).map(|(x, y)| x * y).sum();
                assert_eq!(weight, (i == 0) as i64 - lowered, "{kind} {p:?} i={i}");
            }
        }
    }
}

#[test]
fn rejects_outside_class() {
    let c = TwistedCrystal::new(CrystalKind::Odd(1)).unwrap();
    let p: Partition = "3".parse().unwrap();
    assert!(c.f(&p, 0).is_err());
    assert!(c.canonical_path(&p).is_err());
    assert!(c.f(&Partition::empty(), 2).is_err());
    assert!(TwistedCrystal::new(CrystalKind::Even(0)).is_err());
}

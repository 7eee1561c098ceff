use mullineux_core::partition::{partitions_of, CrystalKind, Partition, StrictClass};
use proptest::prelude::*;

#[test]
fn conjugation_is_a_size_preserving_involution() {
    for n in 0..=20 {
        for p in partitions_of(n) {
            let c = p.conjugate();
            assert_eq!(c.size(), n);
            assert_eq!(c.conjugate(), p);
        }
    }
}

#[test]
fn restricted_implies_double_restricted() {
    for f in 2..=5 {
        for n in 0..=20 {
            for p in partitions_of(n) {
                if p.is_strict_class(f, StrictClass::Restricted).unwrap() {
                    assert!(
                        p.is_strict_class(f, StrictClass::DoubleRestricted).unwrap(),
                        "{p:?} f={f}"
                    );
                }
            }
        }
    }
}

#[test]
fn residue_counts_sum_to_size() {
    for e in 2..=6 {
        for n in 0..=14 {
            for p in partitions_of(n) {
                assert_eq!(p.residue_counts(e).unwrap().iter().sum::<usize>(), n);
            }
        }
    }
}

#[test]
fn twisted_residues_are_periodic() {
    for l in 1..=4 {
        let odd = CrystalKind::Odd(l);
        let even = CrystalKind::Even(l);
        let (po, pe) = (2 * l + 1, 2 * l + 2);
        for col in 1..=100 {
            assert_eq!(odd.residue(col), odd.residue(col + po));
            assert_eq!(even.residue(col), even.residue(col + pe));
            assert!(odd.residue(col).value() <= l);
            assert_eq!(odd.residue(col).modulus(), l + 1);
        }
        for k in 1..=po {
            assert_eq!(
                odd.residue(k),
                odd.residue(po + 1 - k),
                "palindrome l={l} k={k}"
            );
        }
        for k in 1..=pe {
            assert_eq!(even.residue(k), even.residue(pe + 1 - k));
        }
    }
}

#[test]
fn json_encoding() {
    let p: Partition = "9,9,8,7,5,3,1".parse().unwrap();
    assert_eq!(serde_json::to_string(&p).unwrap(), "[9,9,8,7,5,3,1]");
    assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
    assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
}

fn arb_partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..30, 0..12).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn text_and_json_round_trip(p in arb_partition()) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<Partition>(&json).unwrap(), p);
    }
}

use domorder::{
    build_dominance_order, complement_sequence, down_neighbors, majorizes, partitions_of, strictly_majorizes,
    up_neighbors, Partition,
};
use domorder_oracle as oracle;
use proptest::prelude::*;

fn partition_of(total: u32) -> impl Strategy<Value = Partition> {
    let all = partitions_of(total);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn same_sum_triple() -> impl Strategy<Value = (Partition, Partition, Partition)> {
    (1u32..=20).prop_flat_map(|n| (partition_of(n), partition_of(n), partition_of(n)))
}

proptest! {
    #[test]
    fn majorization_is_a_partial_order((a, b, c) in same_sum_triple()) {
        prop_assert!(majorizes(&a, &a));
        if majorizes(&a, &b) && majorizes(&b, &a) {
            prop_assert_eq!(&a, &b);
        }
        if majorizes(&a, &b) && majorizes(&b, &c) {
            prop_assert!(majorizes(&a, &c));
        }
        prop_assert_eq!(majorizes(&a, &b), oracle::majorizes_by_prefix(a.terms(), b.terms()));
    }

    #[test]
    fn single_box_moves_go_down((a, _, _) in same_sum_triple()) {
        for q in down_neighbors(&a) {
            prop_assert!(strictly_majorizes(&a, &q));
            prop_assert!(up_neighbors(&q).contains(&a));
        }
        for q in up_neighbors(&a) {
            prop_assert!(strictly_majorizes(&q, &a));
        }
    }

    #[test]
    fn complement_is_an_involution(terms in prop::collection::vec(1u32..=7, 1..=8), extra in 0usize..=2) {
        let p = terms.len() + extra;
        prop_assume!(p >= 2);
        let e = Partition::new(terms.into_iter().map(|t| t.min(p as u32 - 1).max(1)).collect()).unwrap();
        let once = complement_sequence(&e, p).unwrap();
        prop_assert_eq!(once.len(), p);
        let twice = complement_sequence(&once.clone().strip(), p).unwrap();
        prop_assert_eq!(twice.strip(), e.clone());
    }
}

#[test]
fn muirhead_moves_generate_majorization_up_to_16() {
    for total in 1..=16 {
        let all = partitions_of(total);
        for d in &all {
            let reach = oracle::reachable_by_box_moves(d.terms());
            for e in &all {
                assert_eq!(majorizes(d, e), reach.contains(e.terms()), "{d} vs {e}");
            }
        }
    }
}

#[test]
fn node_counts_match_partition_counts() {
    for total in (2..=24).step_by(2) {
        let all = build_dominance_order(total, false).unwrap();
        assert_eq!(all.len() as u64, oracle::partition_count(total as usize));
        let graphic = build_dominance_order(total, true).unwrap();
        let expected = oracle::partitions(total)
            .into_iter()
            .filter(|d| oracle::havel_hakimi(d))
            .count();
        assert_eq!(graphic.len(), expected);
    }
}

#[test]
fn complement_examples() {
    let p = |s: &str| s.parse::<Partition>().unwrap();
    assert_eq!(complement_sequence(&p("2222"), 4).unwrap().terms(), vec![1, 1, 1, 1]);
    assert_eq!(complement_sequence(&p("11"), 3).unwrap().terms(), vec![2, 1, 1]);
    assert_eq!(complement_sequence(&p("3221"), 4).unwrap().terms(), vec![2, 1, 1, 0]);
    assert!(complement_sequence(&p("4"), 4).is_err());
}

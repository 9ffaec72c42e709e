use std::collections::BTreeSet;

use domorder::{canonical_code, is_graphic, partitions_of, realizations, SmallGraph};
use domorder_oracle as oracle;

#[test]
fn realizations_match_brute_force_up_to_sum_10() {
    for total in (2..=10).step_by(2) {
        for d in partitions_of(total) {
            assert_eq!(is_graphic(&d), oracle::havel_hakimi(d.terms()), "{d}");
            if !is_graphic(&d) {
                continue;
            }
            let ours = realizations(&d, None).unwrap();
            let theirs = oracle::unlabeled_realizations(d.terms());
            assert_eq!(ours.len(), theirs.len(), "{d}");
            let ours: BTreeSet<_> = ours.codes.iter().copied().collect();
            let theirs: BTreeSet<_> = theirs
                .iter()
                .map(|r| canonical_code(&SmallGraph::from_rows(r).unwrap()))
                .collect();
            assert_eq!(ours, theirs, "{d}");
        }
    }
}

#[test]
fn edge_counts_without_isolated_vertices() {
    for m in 1..=5u32 {
        let ours: usize = partitions_of(2 * m)
            .into_iter()
            .filter(is_graphic)
            .map(|d| realizations(&d, None).unwrap().len())
            .sum();
        assert_eq!(ours, oracle::edge_graph_count(m), "m = {m}");
    }
    let frozen: Vec<usize> = (1..=5).map(oracle::edge_graph_count).collect();
    assert_eq!(frozen, vec![1, 2, 5, 11, 26]);
}

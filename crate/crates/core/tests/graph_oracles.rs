use domorder::catalog::graphs_of_order;
use domorder::{canonical_code, contains_induced, from_graph6, is_isomorphic, to_graph6, SmallGraph};
use domorder_oracle as oracle;
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = SmallGraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SmallGraph::empty(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn rows(g: &SmallGraph) -> Vec<u32> {
    g.rows().to_vec()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn induced_search_matches_brute_force(host in graph(7), pattern in graph(4)) {
        prop_assert_eq!(contains_induced(&host, &pattern), oracle::contains_induced(&rows(&host), &rows(&pattern)));
    }

    #[test]
    fn canonical_codes_match_isomorphism(a in graph(6), b in graph(6)) {
        prop_assert_eq!(
            a.order() == b.order() && canonical_code(&a) == canonical_code(&b),
            oracle::isomorphic(&rows(&a), &rows(&b))
        );
    }

    #[test]
    fn graph6_round_trips(g in graph(12)) {
        prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn complement_of_complement(g in graph(10)) {
        prop_assert_eq!(g.complement().complement(), g);
        prop_assert!(is_isomorphic(&g.complement(), &canonical_code(&g).to_graph().complement()));
    }
}

#[test]
fn unlabeled_counts_match_burnside() {
    for n in 1..=7 {
        assert_eq!(
            graphs_of_order(n).unwrap().len() as u64,
            oracle::unlabeled_graph_count(n),
            "n = {n}"
        );
    }
}

//! Induced-subgraph detection by backtracking.
//!
//! Pattern vertices are placed in decreasing-degree order. The candidate set
//! for the next pattern vertex is the intersection of the host neighborhoods
//! (or non-neighborhoods) of the images already placed, which makes the
//! match induced by construction. Degree-0 pattern vertices simply land on
//! host vertices non-adjacent to every other image.

use crate::graph::{bit, bits, low_mask, SmallGraph};

/// An injective map from pattern vertices to host vertices that induces an
/// isomorphic copy of the pattern, if one exists.
pub fn find_induced(host: &SmallGraph, pattern: &SmallGraph) -> Option<Vec<usize>> {
    let k = pattern.order();
    let n = host.order();
    if k > n {
        return None;
    }
    if pattern.edge_count() > host.edge_count() {
        return None;
    }
    let mut order: Vec<usize> = (0..k).collect();
    // Highest degree first; among ties prefer vertices adjacent to earlier
    // ones so candidate sets shrink quickly.
    order.sort_by_key(|&v| std::cmp::Reverse(pattern.degree(v)));
    let order = connect_order(pattern, order);
    let mut image = vec![usize::MAX; k];
    if extend(host, pattern, &order, 0, 0, &mut image) {
        Some(image)
    } else {
        None
    }
}

pub fn contains_induced(host: &SmallGraph, pattern: &SmallGraph) -> bool {
    find_induced(host, pattern).is_some()
}

/// Free of every member: no member occurs as an induced subgraph.
pub fn is_f_free(host: &SmallGraph, members: &[SmallGraph]) -> bool {
    members.iter().all(|f| !contains_induced(host, f))
}

/// Index of the first member induced in `host`.
pub fn first_induced_member(host: &SmallGraph, members: &[SmallGraph]) -> Option<usize> {
    members.iter().position(|f| contains_induced(host, f))
}

// Greedy reorder: after the first vertex, repeatedly take the highest-degree
// vertex with the most already-placed neighbors.
fn connect_order(pattern: &SmallGraph, by_degree: Vec<usize>) -> Vec<usize> {
    let mut placed = 0u32;
    let mut out = Vec::with_capacity(by_degree.len());
    let mut rest = by_degree;
    while !rest.is_empty() {
        let (idx, _) = rest
            .iter()
            .enumerate()
            .max_by_key(|(i, &v)| {
                (
                    (pattern.row(v) & placed).count_ones(),
                    pattern.degree(v),
                    std::cmp::Reverse(*i),
                )
            })
            .expect("nonempty");
        let v = rest.remove(idx);
        placed |= bit(v);
        out.push(v);
    }
    out
}

fn extend(
    host: &SmallGraph,
    pattern: &SmallGraph,
    order: &[usize],
    depth: usize,
    used: u32,
    image: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    let need = pattern.degree(pv);
    let mut cand = low_mask(host.order()) & !used;
    for &pu in &order[..depth] {
        let hu = image[pu];
        if pattern.has_edge(pv, pu) {
            cand &= host.row(hu);
        } else {
            cand &= !host.row(hu);
        }
        if cand == 0 {
            return false;
        }
    }
    for hv in bits(cand) {
        if host.degree(hv) < need {
            continue;
        }
        image[pv] = hv;
        if extend(host, pattern, order, depth + 1, used | bit(hv), image) {
            return true;
        }
    }
    image[pv] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> SmallGraph {
        SmallGraph::complete(n).unwrap()
    }

    #[test]
    fn cycle_examples() {
        let c5 = SmallGraph::cycle(5).unwrap();
        let p4 = SmallGraph::path(4).unwrap();
        let two_k2 = k(2).copies(2).unwrap();
        let c4 = SmallGraph::cycle(4).unwrap();
        assert!(contains_induced(&c5, &p4));
        assert!(!contains_induced(&c5, &two_k2));
        assert!(!contains_induced(&c5, &c4));
        assert!(contains_induced(&c5, &k(1)));
        assert!(!contains_induced(&SmallGraph::empty(0).unwrap(), &k(1)));
    }

    #[test]
    fn isolated_pattern_vertices() {
        let two_k1 = SmallGraph::empty(2).unwrap();
        let k2_2k1 = k(2).disjoint_union(&two_k1).unwrap();
        let p4 = SmallGraph::path(4).unwrap();
        assert!(contains_induced(&p4, &two_k1));
        assert!(!contains_induced(&k(5), &two_k1));
        assert!(!contains_induced(&p4, &k2_2k1));
        let p3_k2 = SmallGraph::path(3).unwrap().disjoint_union(&k(2)).unwrap();
        assert!(contains_induced(&p3_k2, &SmallGraph::empty(3).unwrap()));
        assert!(contains_induced(&p3_k2, &k(2).disjoint_union(&k(1)).unwrap()));
    }

    #[test]
    fn mapping_is_induced() {
        let host = SmallGraph::cycle(6).unwrap().cone().unwrap();
        let pat = SmallGraph::path(3).unwrap().cone().unwrap();
        let m = find_induced(&host, &pat).unwrap();
        for u in 0..pat.order() {
            for v in 0..pat.order() {
                if u != v {
                    assert_eq!(pat.has_edge(u, v), host.has_edge(m[u], m[v]));
                }
            }
        }
    }

    #[test]
    fn free_against_set() {
        let c5 = SmallGraph::cycle(5).unwrap();
        let set = [k(2).copies(2).unwrap(), SmallGraph::cycle(4).unwrap()];
        assert!(is_f_free(&c5, &set));
        let c4_pendant = SmallGraph::cycle(4).unwrap().disjoint_union(&k(1)).unwrap();
        let mut g = c4_pendant;
        g.add_edge(0, 4);
        assert_eq!(first_induced_member(&g, &set), Some(1));
    }
}

//! Canonical labeling for small graphs.
//!
//! Disconnected graphs (and graphs whose complement is disconnected) are
//! split into components that are labeled independently and concatenated in
//! code order. Connected pieces go through an individualization-refinement
//! search: equitable refinement from the degree partition, then branching on
//! the first non-singleton cell, skipping vertices that are twins of an
//! already-explored one. The code is the lexicographically smallest
//! upper-triangle adjacency string over the explored leaves.

use std::cmp::Ordering;
use std::fmt;

use crate::graph::{bit, bits, SmallGraph, MAX_VERTICES};

const WORDS: usize = (MAX_VERTICES * (MAX_VERTICES - 1) / 2).div_ceil(64);

/// Isomorphism-invariant code: equal codes iff isomorphic graphs.
///
/// Bits are the row-major upper triangle (`i < j`) of the canonically
/// relabeled adjacency matrix, packed most-significant-bit first, so the
/// derived ordering is the lexicographic order of the bit strings.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode {
    n: u8,
    bits: [u64; WORDS],
}

impl CanonicalCode {
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The canonical representative.
    pub fn to_graph(&self) -> SmallGraph {
        let n = self.order();
        let mut g = SmallGraph::empty(n).expect("code order within cap");
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.bits[k / 64] >> (63 - k % 64) & 1 == 1 {
                    g.add_edge(i, j);
                }
                k += 1;
            }
        }
        g
    }

    pub(crate) fn of_order(g: &SmallGraph, order: &[usize]) -> Self {
        let n = order.len();
        let mut code = CanonicalCode {
            n: n as u8,
            bits: [0; WORDS],
        };
        let mut k = 0;
        for i in 0..n {
            let row = g.row(order[i]);
            for &vj in &order[i + 1..] {
                if row & bit(vj) != 0 {
                    code.bits[k / 64] |= 1u64 << (63 - k % 64);
                }
                k += 1;
            }
        }
        code
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        let len = n * n.saturating_sub(1) / 2;
        let s: String = (0..len)
            .map(|k| {
                if self.bits[k / 64] >> (63 - k % 64) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect();
        write!(f, "CanonicalCode(n={n}, {s})")
    }
}

/// Canonical vertex order: position `i` of the result holds the original
/// vertex that becomes vertex `i` of the canonical form.
pub fn canonical_labeling(g: &SmallGraph) -> Vec<usize> {
    let n = g.order();
    if n <= 1 {
        return (0..n).collect();
    }
    let comps = g.components();
    if comps.len() > 1 {
        return label_by_components(g, &comps);
    }
    let co = g.complement();
    let co_comps = co.components();
    if co_comps.len() > 1 {
        return label_by_components(&co, &co_comps);
    }
    individualize_refine(g)
}

pub fn canonical_code(g: &SmallGraph) -> CanonicalCode {
    CanonicalCode::of_order(g, &canonical_labeling(g))
}

/// The canonically relabeled copy of `g`.
pub fn canonical_form(g: &SmallGraph) -> SmallGraph {
    g.relabel(&canonical_labeling(g))
}

pub fn is_isomorphic(a: &SmallGraph, b: &SmallGraph) -> bool {
    a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b)
}

fn label_by_components(g: &SmallGraph, comps: &[u32]) -> Vec<usize> {
    let mut parts: Vec<(CanonicalCode, Vec<usize>)> = comps
        .iter()
        .map(|&mask| {
            let verts: Vec<usize> = bits(mask).collect();
            let sub = g.induced(&verts);
            let sub_order = canonical_labeling(&sub);
            let code = CanonicalCode::of_order(&sub, &sub_order);
            (code, sub_order.into_iter().map(|i| verts[i]).collect())
        })
        .collect();
    parts.sort_by_key(|p| p.0);
    parts.into_iter().flat_map(|(_, order)| order).collect()
}

struct Search<'a> {
    g: &'a SmallGraph,
    best: Option<(CanonicalCode, Vec<usize>)>,
}

fn individualize_refine(g: &SmallGraph) -> Vec<usize> {
    let n = g.order();
    let mut search = Search { g, best: None };
    let start = vec![crate::graph::low_mask(n)];
    search.explore(start);
    search.best.expect("search visits at least one leaf").1
}

impl Search<'_> {
    fn explore(&mut self, mut cells: Vec<u32>) {
        refine(self.g, &mut cells);
        let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
            let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
            let code = CanonicalCode::of_order(self.g, &order);
            let better = match &self.best {
                None => true,
                Some((b, _)) => code.cmp(b) == Ordering::Less,
            };
            if better {
                self.best = Some((code, order));
            }
            return;
        };
        let cell = cells[target];
        let mut tried: Vec<usize> = Vec::new();
        for v in bits(cell) {
            if tried.iter().any(|&u| are_twins(self.g, u, v)) {
                continue;
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(bit(v));
            next.push(cell & !bit(v));
            next.extend_from_slice(&cells[target + 1..]);
            self.explore(next);
            tried.push(v);
        }
    }
}

// Transposing twins is an automorphism fixing every other vertex.
fn are_twins(g: &SmallGraph, u: usize, v: usize) -> bool {
    g.row(u) & !bit(v) == g.row(v) & !bit(u)
}

/// Refines the ordered partition until every cell is equitable: vertices in
/// a cell have the same neighbor count in every cell. Fragments of a split
/// cell are ordered by their count vectors, so the result depends only on
/// the graph's structure relative to the input partition.
fn refine(g: &SmallGraph, cells: &mut Vec<u32>) {
    loop {
        let mut next: Vec<u32> = Vec::with_capacity(cells.len());
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            let mut groups: Vec<(Vec<u8>, u32)> = Vec::new();
            for v in bits(cell) {
                let sig: Vec<u8> = cells.iter().map(|&c| (g.row(v) & c).count_ones() as u8).collect();
                match groups.iter_mut().find(|(s, _)| *s == sig) {
                    Some((_, mask)) => *mask |= bit(v),
                    None => groups.push((sig, bit(v))),
                }
            }
            groups.sort_by(|a, b| a.0.cmp(&b.0));
            next.extend(groups.into_iter().map(|(_, m)| m));
        }
        if next.len() == cells.len() {
            return;
        }
        *cells = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> SmallGraph {
        let mut g = SmallGraph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    #[test]
    fn relabeled_path_has_same_code() {
        let p3 = SmallGraph::path(3).unwrap();
        let other = SmallGraph::from_edges(3, &[(0, 2), (2, 1)]).unwrap();
        assert_eq!(canonical_code(&p3), canonical_code(&other));
    }

    #[test]
    fn c4_and_2k2_differ() {
        let c4 = SmallGraph::cycle(4).unwrap();
        let two_k2 = SmallGraph::complete(2).unwrap().copies(2).unwrap();
        assert_ne!(canonical_code(&c4), canonical_code(&two_k2));
    }

    #[test]
    fn code_decodes_to_isomorphic_graph() {
        let mut rng = StdRng::seed_from_u64(7);
        for n in 0..10 {
            let g = random_graph(&mut rng, n, 0.4);
            let code = canonical_code(&g);
            let back = code.to_graph();
            assert_eq!(canonical_code(&back), code);
            assert_eq!(back, canonical_form(&g));
        }
    }

    #[test]
    fn invariant_under_random_permutations() {
        let mut rng = StdRng::seed_from_u64(2024);
        for trial in 0..1000 {
            let n = 1 + trial % 8;
            let p = [0.2, 0.5, 0.8][trial % 3];
            let g = random_graph(&mut rng, n, p);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.relabel(&perm);
            assert_eq!(canonical_code(&g), canonical_code(&h), "trial {trial}: {g:?}");
        }
    }

    #[test]
    fn larger_symmetric_graphs() {
        let mut rng = StdRng::seed_from_u64(99);
        let k2 = SmallGraph::complete(2).unwrap();
        let cases = [
            SmallGraph::cycle(16).unwrap(),
            k2.copies(12).unwrap(),
            SmallGraph::complete_bipartite(6, 7).unwrap(),
            SmallGraph::cycle(5).unwrap().copies(4).unwrap(),
            SmallGraph::cycle(3).unwrap().copies(3).unwrap().cone().unwrap(),
        ];
        for g in cases {
            let mut perm: Vec<usize> = (0..g.order()).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_code(&g), canonical_code(&g.relabel(&perm)));
        }
    }

    #[test]
    fn distinct_codes_on_four_vertices() {
        let mut codes = std::collections::HashSet::new();
        for mask in 0u32..64 {
            let mut g = SmallGraph::empty(4).unwrap();
            let mut k = 0;
            for u in 0..4 {
                for v in u + 1..4 {
                    if mask >> k & 1 == 1 {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            codes.insert(canonical_code(&g));
        }
        assert_eq!(codes.len(), 11);
    }
}

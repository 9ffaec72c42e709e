//! Catalog of all unlabeled graphs on at most [`PROFILE_ORDER`] vertices,
//! and induced-subgraph profiles over it.
//!
//! A profile is a bitmask with bit `i` set when catalog graph `i` occurs as
//! an induced subgraph. For a forbidden set made only of catalog graphs,
//! "G is F-free" becomes `profile(G) & mask(F) == 0`.

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use crate::canon::{canonical_code, CanonicalCode};
use crate::error::{Error, Result};
use crate::graph::{bits, low_mask, SmallGraph};

pub const PROFILE_ORDER: usize = 5;

/// All unlabeled graphs of order exactly `n` (`n ≤ 7`), as canonical forms
/// sorted by canonical code.
pub fn graphs_of_order(n: usize) -> Result<Vec<SmallGraph>> {
    if n > 7 {
        return Err(Error::resource(format!(
            "unlabeled enumeration capped at 7 vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut codes = BTreeSet::new();
    for mask in 0u64..1 << pairs.len() {
        codes.insert(canonical_code(&graph_from_pair_bits(n, &pairs, mask)));
    }
    Ok(codes.into_iter().map(|c| c.to_graph()).collect())
}

/// All unlabeled graphs with between 1 and `max_order` vertices, by order
/// then canonical code.
pub fn graphs_up_to(max_order: usize) -> Result<Vec<SmallGraph>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(graphs_of_order(n)?);
    }
    Ok(out)
}

fn graph_from_pair_bits(n: usize, pairs: &[(usize, usize)], mask: u64) -> SmallGraph {
    let mut g = SmallGraph::empty(n).expect("small order");
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            g.add_edge(i, j);
        }
    }
    g
}

pub struct Catalog {
    graphs: Vec<SmallGraph>,
    index: HashMap<CanonicalCode, usize>,
    /// `tables[k][bits]` is the catalog index of the `k`-vertex graph whose
    /// pair `(i, j)`, `i < j`, is bit `j(j-1)/2 + i` of `bits`.
    tables: Vec<Vec<u8>>,
}

pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(Catalog::build)
}

impl Catalog {
    fn build() -> Self {
        let graphs = graphs_up_to(PROFILE_ORDER).expect("within cap");
        assert!(graphs.len() <= 64);
        let index: HashMap<CanonicalCode, usize> =
            graphs.iter().enumerate().map(|(i, g)| (canonical_code(g), i)).collect();
        let mut tables = vec![Vec::new()];
        for k in 1..=PROFILE_ORDER {
            let pairs: Vec<(usize, usize)> = (1..k).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
            let table = (0u64..1 << pairs.len())
                .map(|mask| index[&canonical_code(&graph_from_pair_bits(k, &pairs, mask))] as u8)
                .collect();
            tables.push(table);
        }
        Catalog { graphs, index, tables }
    }

    pub fn graphs(&self) -> &[SmallGraph] {
        &self.graphs
    }

    pub fn index_of(&self, g: &SmallGraph) -> Option<usize> {
        self.index.get(&canonical_code(g)).copied()
    }

    /// Mask of a member list, or `None` if some member is not cataloged.
    pub fn mask_of(&self, members: &[SmallGraph]) -> Option<u64> {
        members
            .iter()
            .try_fold(0u64, |acc, g| self.index_of(g).map(|i| acc | 1 << i))
    }

    /// Which catalog graphs occur induced in `g`.
    pub fn profile(&self, g: &SmallGraph) -> u64 {
        let mut out = 0u64;
        let mut chosen = [0usize; PROFILE_ORDER];
        self.walk(g, low_mask(g.order()), &mut chosen, 0, 0, &mut out);
        out
    }

    fn walk(
        &self,
        g: &SmallGraph,
        avail: u32,
        chosen: &mut [usize; PROFILE_ORDER],
        k: usize,
        code: usize,
        out: &mut u64,
    ) {
        if k > 0 {
            *out |= 1 << self.tables[k][code];
        }
        if k == PROFILE_ORDER {
            return;
        }
        for v in bits(avail) {
            let mut next = code;
            let base = k * k.saturating_sub(1) / 2;
            for (i, &u) in chosen[..k].iter().enumerate() {
                if g.has_edge(u, v) {
                    next |= 1 << (base + i);
                }
            }
            chosen[k] = v;
            let rest = avail & !low_mask(v + 1);
            self.walk(g, rest, chosen, k + 1, next, out);
        }
    }
}

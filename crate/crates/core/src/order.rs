//! The dominance order on partitions of a fixed even total.

use std::collections::HashMap;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphic::is_graphic;
use crate::partition::{down_neighbors, partitions_of, Partition};

pub const DEFAULT_SUM_CAP: u32 = 30;

/// Fixed-size bitset over node indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeSet {
    words: Vec<u64>,
}

impl NodeSet {
    fn new(len: usize) -> Self {
        NodeSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    fn union_with(&mut self, other: &NodeSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }
}

/// Nodes are listed in lexicographically decreasing order, which is a
/// linear extension with the top element first; every cover `(upper, lower)`
/// therefore has `upper < lower`.
#[derive(Debug, Clone)]
pub struct DominanceOrder {
    pub total: u32,
    pub graphic_only: bool,
    pub nodes: Vec<Partition>,
    pub covers: Vec<(usize, usize)>,
    index: HashMap<Partition, usize>,
    /// Strict descendants of each node.
    below: Vec<NodeSet>,
    /// Strict ancestors of each node.
    above: Vec<NodeSet>,
}

#[derive(Serialize)]
struct OrderJson<'a> {
    total: u32,
    graphic_only: bool,
    nodes: &'a [Partition],
    covers: &'a [(usize, usize)],
}

pub fn build_dominance_order(total: u32, graphic_only: bool) -> Result<DominanceOrder> {
    build_dominance_order_capped(total, graphic_only, DEFAULT_SUM_CAP)
}

pub fn build_dominance_order_capped(total: u32, graphic_only: bool, cap: u32) -> Result<DominanceOrder> {
    if !total.is_multiple_of(2) || total < 2 {
        return Err(Error::domain(format!("total must be even and at least 2, got {total}")));
    }
    if total > cap {
        return Err(Error::resource(format!("total {total} exceeds the poset cap {cap}")));
    }
    let mut nodes = partitions_of(total);
    if graphic_only {
        nodes.retain(is_graphic);
    }
    let index: HashMap<Partition, usize> = nodes.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    // Single-box moves strictly decrease lexicographic order, so targets
    // always have larger indices.
    let moves: Vec<Vec<usize>> = nodes
        .par_iter()
        .map(|p| {
            let mut out: Vec<usize> = down_neighbors(p).iter().filter_map(|q| index.get(q).copied()).collect();
            out.sort_unstable();
            out
        })
        .collect();
    let n = nodes.len();
    let mut below = vec![NodeSet::new(n); n];
    let mut covers = Vec::new();
    for u in (0..n).rev() {
        let mut reach = NodeSet::new(n);
        for &v in &moves[u] {
            reach.insert(v);
            reach.union_with(&below[v]);
        }
        for &v in &moves[u] {
            if !moves[u].iter().any(|&w| w != v && below[w].contains(v)) {
                covers.push((u, v));
            }
        }
        below[u] = reach;
    }
    covers.sort_unstable();
    let mut above = vec![NodeSet::new(n); n];
    for (u, set) in below.iter().enumerate() {
        for v in set.iter() {
            above[v].insert(u);
        }
    }
    Ok(DominanceOrder {
        total,
        graphic_only,
        nodes,
        covers,
        index,
        below,
        above,
    })
}

impl DominanceOrder {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn index_of(&self, p: &Partition) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `nodes[i] ⪰ nodes[j]`, read from reachability.
    pub fn dominates(&self, i: usize, j: usize) -> bool {
        i == j || self.below[i].contains(j)
    }

    pub fn strict_ancestors(&self, j: usize) -> &NodeSet {
        &self.above[j]
    }

    pub fn strict_descendants(&self, i: usize) -> &NodeSet {
        &self.below[i]
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(OrderJson {
            total: self.total,
            graphic_only: self.graphic_only,
            nodes: &self.nodes,
            covers: &self.covers,
        })
        .expect("plain data serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut out = format!("digraph dominance_{} {{\n  rankdir=TB;\n", self.total);
        for (i, p) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label=\"{p}\"];");
        }
        for &(u, v) in &self.covers {
            let _ = writeln!(out, "  n{u} -> n{v};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{majorizes, parse_partition};

    fn p(s: &str) -> Partition {
        parse_partition(s).unwrap()
    }

    #[test]
    fn small_orders() {
        let o = build_dominance_order(4, true).unwrap();
        // (2,2) has two terms of size 2 and so no realization.
        assert_eq!(o.nodes, vec![p("211"), p("1111")]);
        assert_eq!(o.covers, vec![(0, 1)]);
        let all = build_dominance_order(4, false).unwrap();
        assert_eq!(all.nodes, vec![p("4"), p("31"), p("22"), p("211"), p("1111")]);
        assert_eq!(all.covers, vec![(0, 1), (1, 2), (2, 3), (3, 4)]);
        let o = build_dominance_order(2, true).unwrap();
        assert_eq!(o.nodes, vec![p("11")]);
        assert!(o.covers.is_empty());
    }

    #[test]
    fn cover_chain_at_ten() {
        let o = build_dominance_order(10, true).unwrap();
        let d = o.index_of(&p("32221")).unwrap();
        let e = o.index_of(&p("2^5")).unwrap();
        assert!(o.covers.contains(&(d, e)));
    }

    #[test]
    fn errors() {
        assert!(matches!(build_dominance_order(7, true), Err(Error::Domain(_))));
        assert!(matches!(build_dominance_order(0, false), Err(Error::Domain(_))));
        assert!(matches!(build_dominance_order(32, true), Err(Error::Resource(_))));
    }

    #[test]
    fn reachability_matches_majorization() {
        for graphic_only in [false, true] {
            let o = build_dominance_order(12, graphic_only).unwrap();
            for i in 0..o.len() {
                for j in 0..o.len() {
                    assert_eq!(o.dominates(i, j), majorizes(&o.nodes[i], &o.nodes[j]));
                }
            }
        }
    }

    #[test]
    fn covers_are_not_implied() {
        let o = build_dominance_order(14, false).unwrap();
        for &(u, v) in &o.covers {
            assert!(!o
                .strict_descendants(u)
                .iter()
                .any(|w| w != v && o.strict_descendants(w).contains(v)));
        }
    }

    #[test]
    fn exports() {
        let o = build_dominance_order(4, false).unwrap();
        let j = o.to_json();
        assert_eq!(j["nodes"][2], "2^2");
        assert_eq!(j["covers"][0], serde_json::json!([0, 1]));
        let dot = o.to_dot();
        assert!(dot.contains("n0 -> n1;"));
        assert!(dot.contains("n3 [label=\"2 1^2\"];"));
    }
}
